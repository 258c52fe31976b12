//! The orthogonal basis of `Vec M^(n)`, the ambigenic basis `X^{n,+-}_m`,
//! `Y^{n,+-}_m`, the contragenic basis `Z^n`, dimension counts, and exact
//! contragenicity tests.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::basis::BasisLabel;
use crate::exact::{monomials_of_degree, rat, PiRational, Rational, TriPoly};
use crate::field::{QuatField, VecField};
use crate::harmonic::{factorial, harmonic_basis, int, uv_poly, HarmonicKind};
use crate::linalg::{gram_matrix, gram_rank, nullspace, rank, solve, coefficients};
use crate::monogenic::{apply_d, apply_dbar, monogenic, monogenic_basis, xy_norm, MonoKind, Side};
use crate::{Error, Exec, Result};

fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Element of the orthogonal basis of `Vec M^(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VecBasisElement {
    pub kind: MonoKind,
    pub degree: u32,
    pub order: u32,
    pub field: VecField,
    pub norm_sq: PiRational,
}

/// `|Vec X^n_m|^2 = |Vec Y^n_m|^2`.
pub fn vec_norm(n: u32, m: u32) -> PiRational {
    let (ni, mi) = (n as i64, m as i64);
    let base = int((2 * ni + 1) * (2 * ni + 3));
    if m == 0 {
        PiRational(int(ni * (ni + 1)) / base)
    } else {
        PiRational(
            int(ni * ni + mi * mi + ni) * fact(n + m + 1) / (int(2) * base * fact(n + 1 - m)),
        )
    }
}

/// `Vec X^n_m` (`0..=n+1`) and `Vec Y^n_m` (`1..=n+1`), dropping the zero
/// `Vec X^0_0`.
pub fn vec_basis(n: u32) -> Vec<VecBasisElement> {
    monogenic_basis(n)
        .into_iter()
        .filter(|e| !(n == 0 && e.kind == MonoKind::X && e.order == 0))
        .map(|e| VecBasisElement {
            kind: e.kind,
            degree: n,
            order: e.order,
            field: e.field.vec().to_vec_field().expect("basis is R^3-valued"),
            norm_sq: vec_norm(n, e.order),
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AmbiKind {
    XPlus,
    YPlus,
    XMinus,
    YMinus,
}

impl fmt::Display for AmbiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        BasisLabel::from_ambi(*self).fmt(f)
    }
}

impl AmbiKind {
    pub fn mono(self) -> MonoKind {
        match self {
            AmbiKind::XPlus | AmbiKind::XMinus => MonoKind::X,
            AmbiKind::YPlus | AmbiKind::YMinus => MonoKind::Y,
        }
    }

    pub fn is_minus(self) -> bool {
        matches!(self, AmbiKind::XMinus | AmbiKind::YMinus)
    }

    fn orders(self, n: u32) -> std::ops::RangeInclusive<u32> {
        match self {
            AmbiKind::XPlus => 0..=n + 1,
            AmbiKind::YPlus => 1..=n,
            AmbiKind::XMinus => 0..=n,
            AmbiKind::YMinus => 1..=n + 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbigenicBasisElement {
    pub kind: AmbiKind,
    pub degree: u32,
    pub order: u32,
    pub field: QuatField,
}

/// `a^n_m = (n - 2m^2 + 1)/((n+1)(2n+1))`, and `a^n_{n+1} = 0`.
pub fn a_coefficient(n: u32, m: u32) -> Rational {
    if m == n + 1 {
        return Rational::zero();
    }
    let (ni, mi) = (n as i64, m as i64);
    rat(ni - 2 * mi * mi + 1, (ni + 1) * (2 * ni + 1))
}

/// `X^{n,+}_m = X^n_m`; `X^{n,-}_m = conj X^n_m - a^n_m X^n_m`; same for `Y`.
pub fn ambigenic_element(kind: AmbiKind, n: u32, m: u32) -> Result<AmbigenicBasisElement> {
    if n == 0 {
        return Err(Error::InvalidIndex(
            "degree 0 ambigenics are the constants; see ambigenic_constants".into(),
        ));
    }
    if !kind.orders(n).contains(&m) {
        return Err(Error::InvalidIndex(format!("{kind}^{n}_{m}")));
    }
    let x = monogenic(kind.mono(), n, m)?.field;
    let field = if kind.is_minus() {
        &x.conj() - &x.scale(&a_coefficient(n, m))
    } else {
        x
    };
    Ok(AmbigenicBasisElement {
        kind,
        degree: n,
        order: m,
        field,
    })
}

/// The `4n + 4` ambigenic basis elements of degree `n >= 1`, ordered
/// `X+`, `Y+`, `X-`, `Y-`, each by increasing `m`.
pub fn ambigenic_basis(n: u32) -> Result<Vec<AmbigenicBasisElement>> {
    let kinds = [AmbiKind::XPlus, AmbiKind::YPlus, AmbiKind::XMinus, AmbiKind::YMinus];
    kinds
        .into_iter()
        .flat_map(|k| k.orders(n).map(move |m| (k, m)))
        .map(|(k, m)| ambigenic_element(k, n, m))
        .collect()
}

/// Degree-0 ambigenics: the constant monogenic basis `X^0_0, X^0_1, Y^0_1`.
pub fn ambigenic_constants() -> Vec<QuatField> {
    monogenic_basis(0).into_iter().map(|e| e.field).collect()
}

/// `|X^{n,-}_m|^2 = |Y^{n,-}_m|^2` for `m <= n`; `Y^{n,-}_{n+1} = -Y^n_{n+1}`.
pub fn ambigenic_norm(kind: AmbiKind, n: u32, m: u32) -> Result<PiRational> {
    if n == 0 || !kind.orders(n).contains(&m) {
        return Err(Error::InvalidIndex(format!("{kind}^{n}_{m}")));
    }
    if !kind.is_minus() || m == n + 1 {
        return xy_norm(kind.mono(), n, m);
    }
    let (ni, mi) = (n as i64, m as i64);
    let q = if m == 0 {
        int(4 * ni * (ni + 1) * (ni + 1)) / int((2 * ni + 3) * (2 * ni + 1) * (2 * ni + 1))
    } else {
        int(2 * (ni * ni + mi * mi + ni) * (ni + mi + 1)) * fact(n + m + 1)
            / (int((ni + 1) * (2 * ni + 3) * (2 * ni + 1) * (2 * ni + 1)) * fact(n - m))
    };
    Ok(PiRational(q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ZLabel {
    Z0,
    ZPlus,
    ZMinus,
}

impl fmt::Display for ZLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        BasisLabel::from_z(*self).fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContragenicBasisElement {
    pub label: ZLabel,
    pub degree: u32,
    /// `0` for `Z0`.
    pub order: u32,
    pub field: VecField,
}

/// `Z^n_0`, `Z^n_{m,+}`, `Z^n_{m,-}` (`1 <= m <= n-1`), with
/// `d = (n-m)(n-m+1)`.
pub fn contragenic_element(label: ZLabel, n: u32, m: u32) -> Result<ContragenicBasisElement> {
    let valid = match label {
        ZLabel::Z0 => n >= 1 && m == 0,
        _ => m >= 1 && m < n,
    };
    if !valid {
        return Err(Error::InvalidIndex(format!("{label}^{n}_{m}")));
    }
    let (ni, mi) = (n as i64, m as i64);
    let u = |k: i64| uv_poly(HarmonicKind::U, ni, k);
    let v = |k: i64| uv_poly(HarmonicKind::V, ni, k);
    let d = int((ni - mi) * (ni - mi + 1));
    let zero = TriPoly::zero;
    let field = match label {
        ZLabel::Z0 => VecField::new(zero(), v(1), -u(1)),
        ZLabel::ZPlus => VecField::new(
            zero(),
            &v(mi - 1).scale(&d) + &v(mi + 1),
            &u(mi - 1).scale(&d) - &u(mi + 1),
        ),
        ZLabel::ZMinus => VecField::new(
            zero(),
            &u(mi - 1).scale(&d) + &u(mi + 1),
            &v(mi + 1) - &v(mi - 1).scale(&d),
        ),
    };
    Ok(ContragenicBasisElement {
        label,
        degree: n,
        order: m,
        field,
    })
}

/// The `2n - 1` contragenic basis elements of degree `n` (empty for `n = 0`):
/// `Z0`, then `Z+` and `Z-` alternating by increasing `m`.
pub fn contragenic_basis(n: u32) -> Vec<ContragenicBasisElement> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = vec![contragenic_element(ZLabel::Z0, n, 0).expect("n >= 1")];
    for m in 1..n {
        for label in [ZLabel::ZPlus, ZLabel::ZMinus] {
            out.push(contragenic_element(label, n, m).expect("order in range"));
        }
    }
    out
}

/// `4 pi n(n+1)/((2n+1)(2n+3))` for `Z0`, else
/// `8 pi (n^2+m^2+n)(n+m-1)! / ((2n+1)(2n+3)(n-m-1)!)`.
pub fn z_norm(label: ZLabel, n: u32, m: u32) -> Result<PiRational> {
    contragenic_element(label, n, m)?;
    let (ni, mi) = (n as i64, m as i64);
    let base = int((2 * ni + 1) * (2 * ni + 3));
    let q = match label {
        ZLabel::Z0 => int(4 * ni * (ni + 1)) / base,
        _ => int(8 * (ni * ni + mi * mi + ni)) * fact(n + m - 1) / (base * fact(n - m - 1)),
    };
    Ok(PiRational(q))
}

/// A labeled member of the degree-`n` orthogonal system spanning `H^(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemElement {
    pub label: BasisLabel,
    pub degree: u32,
    pub order: u32,
    pub field: QuatField,
}

/// Ambigenic basis followed by the contragenic basis; at degree 0 the three
/// constants `X^0_0, X^0_1, Y^0_1`.
pub fn orthogonal_system(n: u32) -> Vec<SystemElement> {
    if n == 0 {
        return monogenic_basis(0)
            .into_iter()
            .map(|e| SystemElement {
                label: match e.kind {
                    MonoKind::X => BasisLabel::X,
                    MonoKind::Y => BasisLabel::Y,
                },
                degree: 0,
                order: e.order,
                field: e.field,
            })
            .collect();
    }
    let ambi = ambigenic_basis(n).expect("n >= 1").into_iter().map(|e| SystemElement {
        label: BasisLabel::from_ambi(e.kind),
        degree: n,
        order: e.order,
        field: e.field,
    });
    let contra = contragenic_basis(n).into_iter().map(|z| SystemElement {
        label: BasisLabel::from_z(z.label),
        degree: n,
        order: z.order,
        field: z.field.to_quat(),
    });
    ambi.chain(contra).collect()
}

/// Exact Gram matrix of [`orthogonal_system`].
pub fn system_gram(n: u32, exec: Exec) -> Vec<Vec<PiRational>> {
    let fields: Vec<QuatField> = orthogonal_system(n).into_iter().map(|e| e.field).collect();
    gram_matrix(&fields, |a, b| a.inner(b), exec)
}

/// Dimensions over `R` of `H_R^(n)`, `M^(n)`, `M cap Mbar`, `M + Mbar` and
/// `H^(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionTable {
    pub degree: u32,
    pub harmonic_scalar: usize,
    pub monogenic: usize,
    pub intersection: usize,
    pub sum: usize,
    pub harmonic: usize,
}

impl DimensionTable {
    /// `dim N^(n) = dim H^(n) - dim (M + Mbar)`.
    pub fn contragenic(&self) -> usize {
        self.harmonic - self.sum
    }

    /// The known closed forms.
    pub fn expected(n: u32) -> Self {
        let n_ = n as usize;
        if n == 0 {
            return Self {
                degree: 0,
                harmonic_scalar: 1,
                monogenic: 3,
                intersection: 3,
                sum: 3,
                harmonic: 3,
            };
        }
        Self {
            degree: n,
            harmonic_scalar: 2 * n_ + 1,
            monogenic: 2 * n_ + 3,
            intersection: 2,
            sum: 4 * n_ + 4,
            harmonic: 6 * n_ + 3,
        }
    }
}

fn field_gram_rank(fields: &[QuatField], exec: Exec) -> usize {
    gram_rank(&gram_matrix(fields, |a, b| a.inner(b), exec))
}

/// Dimension table from ranks of exact Gram matrices of spanning sets.
pub fn dimension_table(n: u32, exec: Exec) -> DimensionTable {
    let scalars: Vec<QuatField> = harmonic_basis(n)
        .into_iter()
        .map(|h| QuatField::scalar(h.poly))
        .collect();
    let mono: Vec<QuatField> = monogenic_basis(n).into_iter().map(|e| e.field).collect();
    let anti: Vec<QuatField> = mono.iter().map(QuatField::conj).collect();
    let both: Vec<QuatField> = mono.iter().chain(&anti).cloned().collect();
    let vector_harmonics: Vec<QuatField> = (0..3)
        .flat_map(|axis| {
            scalars.iter().map(move |s| {
                let mut f = QuatField::zero();
                f.c[axis] = s.c[0].clone();
                f
            })
        })
        .collect();
    let monogenic = field_gram_rank(&mono, exec);
    let antimonogenic = field_gram_rank(&anti, exec);
    let sum = field_gram_rank(&both, exec);
    DimensionTable {
        degree: n,
        harmonic_scalar: field_gram_rank(&scalars, exec),
        monogenic,
        intersection: monogenic + antimonogenic - sum,
        sum,
        harmonic: field_gram_rank(&vector_harmonics, exec),
    }
}

/// Matrix of a linear map from degree-`n` fields with `inputs` components to
/// degree-`n - k` fields with `outputs` components, in monomial coordinates.
fn operator_matrix<F>(n: u32, inputs: usize, drop: u32, outputs: usize, op: F) -> Vec<Vec<Rational>>
where
    F: Fn(&QuatField) -> QuatField,
{
    let source = monomials_of_degree(n);
    let target = if n >= drop { monomials_of_degree(n - drop) } else { Vec::new() };
    let cols = inputs * source.len();
    let mut m = vec![vec![Rational::zero(); cols]; outputs * target.len()];
    for i in 0..inputs {
        for (j, mono) in source.iter().enumerate() {
            let mut f = QuatField::zero();
            f.c[i] = TriPoly::term(*mono, rat(1, 1));
            let image = op(&f);
            for k in 0..outputs {
                for (row, coeff) in image.c[k].coefficient_vector(&target).into_iter().enumerate() {
                    m[k * target.len() + row][i * source.len() + j] = coeff;
                }
            }
        }
    }
    m
}

fn kernel_basis(m: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    nullspace(m, ncols)
}

/// Dimension table from kernels of `Laplacian`, `Dbar` and `D` acting on
/// monomial coordinates; independent of the explicit bases.
pub fn dimension_table_by_kernels(n: u32) -> DimensionTable {
    let cols_scalar = monomials_of_degree(n).len();
    let cols_vec = 3 * cols_scalar;
    let lap = operator_matrix(n, 1, 2, 1, QuatField::laplacian);
    let harmonic_scalar = cols_scalar - rank(&lap);
    let dbar = operator_matrix(n, 3, 1, 4, |f| apply_dbar(f, Side::Left));
    let d = operator_matrix(n, 3, 1, 4, |f| apply_d(f, Side::Left));
    let ker_dbar = kernel_basis(&dbar, cols_vec);
    let ker_d = kernel_basis(&d, cols_vec);
    let stacked: Vec<Vec<Rational>> = dbar.iter().chain(&d).cloned().collect();
    let intersection = cols_vec - rank(&stacked);
    let spanning: Vec<Vec<Rational>> = ker_dbar.iter().chain(&ker_d).cloned().collect();
    DimensionTable {
        degree: n,
        harmonic_scalar,
        monogenic: ker_dbar.len(),
        intersection,
        sum: rank(&spanning),
        harmonic: 3 * harmonic_scalar,
    }
}

/// One nonvanishing inner product found while testing contragenicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pairing {
    pub label: BasisLabel,
    pub degree: u32,
    pub order: u32,
    pub value: PiRational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ContragenicCertificate {
    /// Degrees whose scalar part does not vanish.
    pub scalar_degrees: Vec<u32>,
    pub pairings: Vec<Pairing>,
}

impl ContragenicCertificate {
    pub fn holds(&self) -> bool {
        self.scalar_degrees.is_empty() && self.pairings.is_empty()
    }
}

/// Tests `h` against every ambigenic basis element, degree by degree.
pub fn is_contragenic(h: &VecField) -> Result<ContragenicCertificate> {
    h.require_harmonic()?;
    let mut cert = ContragenicCertificate::default();
    let degrees: std::collections::BTreeSet<u32> =
        h.c.iter().flat_map(|p| p.homogeneous_components().into_keys()).collect();
    for n in degrees {
        let part = h.homogeneous_part(n).to_quat();
        if !part.c[0].is_zero() {
            cert.scalar_degrees.push(n);
        }
        let members: Vec<(BasisLabel, u32, QuatField)> = if n == 0 {
            monogenic_basis(0)
                .into_iter()
                .map(|e| {
                    let label = if e.kind == MonoKind::X { BasisLabel::X } else { BasisLabel::Y };
                    (label, e.order, e.field)
                })
                .collect()
        } else {
            ambigenic_basis(n)?
                .into_iter()
                .map(|e| (BasisLabel::from_ambi(e.kind), e.order, e.field))
                .collect()
        };
        for (label, order, g) in members {
            let value = part.inner(&g);
            if !value.is_zero() {
                cert.pairings.push(Pairing {
                    label,
                    degree: n,
                    order,
                    value,
                });
            }
        }
    }
    Ok(cert)
}

/// One test function of the surface criterion: the two flux integrals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceTerm {
    pub kind: HarmonicKind,
    pub order: u32,
    /// `\int_{S^2} h1 g dx0^dx2 = -\int h1 g x1 dsigma`
    pub lhs: PiRational,
    /// `\int_{S^2} h2 g dx0^dx1 = \int h2 g x2 dsigma`
    pub rhs: PiRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub degree: u32,
    pub terms: Vec<SurfaceTerm>,
}

impl SurfaceReport {
    pub fn holds(&self) -> bool {
        self.terms.iter().all(|t| t.lhs == t.rhs)
    }
}

/// Compares the two surface flux integrals for every harmonic `g` of degree
/// `n + 1`. For homogeneous harmonic `h` with zero scalar part this holds
/// exactly when `h` is contragenic.
pub fn surface_criterion(h: &VecField, n: u32) -> Result<SurfaceReport> {
    if !h.is_homogeneous_of(n) {
        return Err(Error::NotHomogeneous { degree: n });
    }
    if !h.c[0].is_zero() {
        return Err(Error::UnexpectedComponent("scalar"));
    }
    h.require_harmonic()?;
    let x1 = TriPoly::var(1);
    let x2 = TriPoly::var(2);
    let h1x1 = &h.c[1] * &x1;
    let h2x2 = &h.c[2] * &x2;
    let terms = harmonic_basis(n + 1)
        .into_iter()
        .map(|g| SurfaceTerm {
            kind: g.kind,
            order: g.order,
            lhs: -(&g.poly * &h1x1).sphere_integral(),
            rhs: (&g.poly * &h2x2).sphere_integral(),
        })
        .collect();
    Ok(SurfaceReport { degree: n, terms })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarEntry {
    pub label: ZLabel,
    pub order: u32,
    pub contragenic: bool,
    /// Coordinates of `star(Z)` in [`contragenic_basis`] order.
    pub coefficients: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarReport {
    pub degree: u32,
    pub entries: Vec<StarEntry>,
    pub invertible: bool,
}

impl StarReport {
    pub fn holds(&self) -> bool {
        self.invertible && self.entries.iter().all(|e| e.contragenic)
    }
}

/// Applies the star involution to each contragenic basis element and expands
/// the image in the same basis by solving the Gram system.
pub fn star_on_contragenics(n: u32) -> Result<StarReport> {
    let basis = contragenic_basis(n);
    let fields: Vec<VecField> = basis.iter().map(|z| z.field.clone()).collect();
    let gram = coefficients(&gram_matrix(&fields, |a, b| a.inner(b), Exec::default()));
    let mut entries = Vec::with_capacity(basis.len());
    let mut change = Vec::with_capacity(basis.len());
    for z in &basis {
        let image = z.field.star();
        let contragenic = is_contragenic(&image)?.holds();
        let rhs: Vec<Rational> = fields.iter().map(|f| f.inner(&image).coefficient().clone()).collect();
        let coefficients = solve(&gram, &rhs)?;
        let rebuilt: VecField = fields
            .iter()
            .zip(&coefficients)
            .map(|(f, c)| f.scale(c))
            .sum();
        entries.push(StarEntry {
            label: z.label,
            order: z.order,
            contragenic: contragenic && rebuilt == image,
            coefficients: coefficients.clone(),
        });
        change.push(coefficients);
    }
    let invertible = rank(&change) == basis.len();
    Ok(StarReport {
        degree: n,
        entries,
        invertible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::off_diagonal;
    use crate::monogenic::{is_antimonogenic, is_monogenic, xy_conj_pairing};

    fn x(i: usize) -> TriPoly {
        TriPoly::var(i)
    }

    #[test]
    fn vec_basis_examples() {
        let b0 = vec_basis(0);
        assert_eq!(b0.len(), 2);
        assert_eq!(b0[0].field, VecField::along(1, TriPoly::constant(rat(-1, 2))));
        assert_eq!(b0[1].field, VecField::along(2, TriPoly::constant(rat(-1, 2))));
        assert_eq!(vec_norm(1, 0), PiRational(rat(2, 15)));
        let b1 = vec_basis(1);
        assert_eq!(b1[0].field.norm_sq(), PiRational(rat(2, 15)));
        let fields: Vec<VecField> = vec_basis(2).into_iter().map(|e| e.field).collect();
        let g = gram_matrix(&fields, |a, b| a.inner(b), Exec::Sequential);
        assert!(off_diagonal(&g).is_empty());
    }

    #[test]
    fn vec_basis_norms_and_orthogonality_through_8() {
        for n in 0..=8 {
            let b = vec_basis(n);
            assert_eq!(b.len(), if n == 0 { 2 } else { 2 * n as usize + 3 });
            let fields: Vec<VecField> = b.iter().map(|e| e.field.clone()).collect();
            let g = gram_matrix(&fields, |a, b| a.inner(b), Exec::Parallel);
            assert!(off_diagonal(&g).is_empty(), "n = {n}");
            for (i, e) in b.iter().enumerate() {
                assert_eq!(g[i][i], e.norm_sq, "{}^{n}_{}", e.kind, e.order);
            }
        }
    }

    #[test]
    fn ambigenic_examples() {
        assert_eq!(a_coefficient(1, 0), rat(1, 3));
        assert_eq!(a_coefficient(3, 4), rat(0, 1));
        let b = ambigenic_basis(1).unwrap();
        assert_eq!(b.len(), 8);
        let x10 = monogenic(MonoKind::X, 1, 0).unwrap().field;
        let xm = ambigenic_element(AmbiKind::XMinus, 1, 0).unwrap().field;
        assert_eq!(xm, &x10.conj() - &x10.scale(&rat(1, 3)));
        assert_eq!(xm.norm_sq(), PiRational(rat(16, 45)));
        assert_eq!(ambigenic_norm(AmbiKind::XMinus, 1, 0).unwrap(), PiRational(rat(16, 45)));
        assert!(ambigenic_basis(0).is_err());
        assert_eq!(ambigenic_constants().len(), 3);
    }

    #[test]
    fn ambigenic_orthogonal_with_norms_through_8() {
        for n in 1..=8 {
            let b = ambigenic_basis(n).unwrap();
            assert_eq!(b.len(), 4 * n as usize + 4);
            let fields: Vec<QuatField> = b.iter().map(|e| e.field.clone()).collect();
            let g = gram_matrix(&fields, |a, b| a.inner(b), Exec::Parallel);
            assert!(off_diagonal(&g).is_empty(), "n = {n}");
            for (i, e) in b.iter().enumerate() {
                assert!(e.field.is_r3_valued());
                assert_eq!(g[i][i], ambigenic_norm(e.kind, n, e.order).unwrap(), "{}^{n}_{}", e.kind, e.order);
                if e.kind.is_minus() {
                    let x = monogenic(e.kind.mono(), n, e.order).unwrap().field;
                    let unfolded = &e.field + &x.scale(&a_coefficient(n, e.order));
                    assert!(is_antimonogenic(&unfolded));
                } else {
                    assert!(is_monogenic(&e.field));
                }
            }
        }
    }

    #[test]
    fn conj_pairings_through_8() {
        for n in 0..=8 {
            for e in monogenic_basis(n) {
                let f = &e.field;
                assert_eq!(f.inner(&f.conj()), xy_conj_pairing(e.kind, n, e.order).unwrap());
            }
        }
    }

    #[test]
    fn contragenic_examples() {
        let z = contragenic_basis(1);
        assert_eq!(z.len(), 1);
        assert_eq!(z[0].field, VecField::new(TriPoly::zero(), x(2), -x(1)));
        assert_eq!(z[0].field.to_string(), "x2*e1 - x1*e2");
        assert_eq!(z[0].field.norm_sq(), PiRational(rat(8, 15)));
        assert_eq!(contragenic_basis(4).len(), 7);
        assert!(contragenic_basis(0).is_empty());
        let z21 = contragenic_element(ZLabel::ZPlus, 2, 1).unwrap().field.to_quat();
        for e in monogenic_basis(2) {
            assert!(z21.inner(&e.field).is_zero());
        }
        assert!(contragenic_element(ZLabel::ZPlus, 2, 2).is_err());
    }

    #[test]
    fn contragenic_orthogonal_with_norms_through_8() {
        for n in 1..=8 {
            let z = contragenic_basis(n);
            assert_eq!(z.len(), 2 * n as usize - 1);
            let ambi = ambigenic_basis(n).unwrap();
            for e in &z {
                assert!(e.field.c[0].is_zero());
                assert!(e.field.is_harmonic());
                assert!(e.field.is_homogeneous_of(n));
                let q = e.field.to_quat();
                for a in &ambi {
                    assert!(q.inner(&a.field).is_zero(), "{}^{n}_{} vs {}", e.label, e.order, a.kind);
                }
            }
            let fields: Vec<VecField> = z.iter().map(|e| e.field.clone()).collect();
            let g = gram_matrix(&fields, |a, b| a.inner(b), Exec::Parallel);
            assert!(off_diagonal(&g).is_empty());
            for (i, e) in z.iter().enumerate() {
                assert_eq!(g[i][i], z_norm(e.label, n, e.order).unwrap(), "{}^{n}_{}", e.label, e.order);
            }
        }
    }

    #[test]
    fn full_system_diagonal_and_complete_through_8() {
        for n in 0..=8 {
            let g = system_gram(n, Exec::Parallel);
            assert!(off_diagonal(&g).is_empty());
            assert_eq!(gram_rank(&g), DimensionTable::expected(n).harmonic);
        }
    }

    #[test]
    fn dimension_examples() {
        let rows = [(0, [1, 3, 3, 3, 3]), (1, [3, 5, 2, 8, 9]), (3, [7, 9, 2, 16, 21])];
        for (n, r) in rows {
            let t = dimension_table(n, Exec::Parallel);
            assert_eq!(
                [t.harmonic_scalar, t.monogenic, t.intersection, t.sum, t.harmonic],
                r
            );
            assert_eq!(t, DimensionTable::expected(n));
            assert_eq!(dimension_table_by_kernels(n), t);
        }
    }

    #[test]
    fn dimensions_two_routes_through_6() {
        for n in 0..=6 {
            let t = DimensionTable::expected(n);
            assert_eq!(dimension_table(n, Exec::Parallel), t);
            assert_eq!(dimension_table_by_kernels(n), t);
            assert_eq!(t.contragenic(), if n == 0 { 0 } else { 2 * n as usize - 1 });
        }
    }

    #[test]
    fn contragenic_test_examples() {
        let z = contragenic_basis(1)[0].field.clone();
        assert!(is_contragenic(&z).unwrap().holds());
        let cert = is_contragenic(&VecField::along(1, x(2))).unwrap();
        assert!(!cert.holds());
        assert!(!cert.pairings.is_empty());
        assert!(is_contragenic(&VecField::zero()).unwrap().holds());
        assert!(!is_contragenic(&VecField::along(1, TriPoly::one())).unwrap().holds());
        assert!(is_contragenic(&VecField::along(1, TriPoly::monomial(2, 0, 0))).is_err());
        let mixed = &z + &contragenic_element(ZLabel::ZMinus, 3, 2).unwrap().field;
        assert!(is_contragenic(&mixed).unwrap().holds());
    }

    #[test]
    fn surface_examples() {
        let z = contragenic_basis(1)[0].field.clone();
        let r = surface_criterion(&z, 1).unwrap();
        assert_eq!(r.terms.len(), 5);
        assert!(r.holds());
        let vx = vec_basis(1)[0].field.clone();
        let r = surface_criterion(&vx, 1).unwrap();
        assert!(!r.holds());
        let u20 = r.terms.iter().find(|t| t.kind == HarmonicKind::U && t.order == 0).unwrap();
        assert_ne!(u20.lhs, u20.rhs);
        assert!(surface_criterion(&VecField::zero(), 2).unwrap().holds());
        assert!(surface_criterion(&VecField::scalar(x(0)), 1).is_err());
        assert!(surface_criterion(&z, 2).is_err());
    }

    #[test]
    fn surface_matches_volume_through_6() {
        for n in 1..=6 {
            let mut tests: Vec<VecField> = contragenic_basis(n).into_iter().map(|z| z.field).collect();
            tests.extend(vec_basis(n).into_iter().map(|e| e.field));
            for h in tests {
                let surface = surface_criterion(&h, n).unwrap().holds();
                let volume = is_contragenic(&h).unwrap().holds();
                assert_eq!(surface, volume, "n = {n}: {h}");
            }
        }
    }

    #[test]
    fn star_examples() {
        let r = star_on_contragenics(1).unwrap();
        assert_eq!(r.entries[0].coefficients, vec![rat(-1, 1)]);
        assert!(r.holds());
        for n in 1..=8 {
            assert!(star_on_contragenics(n).unwrap().holds(), "n = {n}");
        }
    }
}
