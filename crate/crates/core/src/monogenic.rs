//! The operators `D = d0 - d1 e1 - d2 e2` and `Dbar = d0 + d1 e1 + d2 e2`,
//! and the homogeneous monogenic basis `X^n_m`, `Y^n_m`.
//!
//! Basis elements are normalized as `X^n_m = 1/2 D[U^{n+1}_m]`,
//! `Y^n_m = 1/2 D[V^{n+1}_m]`; with this factor the scalar part of `X^n_m` is
//! `(n+m+1)/2 U^n_m` and `|X^n_0|^2 = pi (n+1)/(2n+3)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{rat, PiRational, Rational, TriPoly};
use crate::field::{unit_product, QuatField};
use crate::harmonic::{factorial, harmonic_basis, int, scalar_inner, uv_norm, uv_poly, HarmonicKind};
use crate::{Error, Result};

/// Which side the operator multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `sum_b sign_b e_b d_b` applied to `f` from the given side.
fn apply_operator(f: &QuatField, signs: [i64; 3], side: Side) -> QuatField {
    let mut out = QuatField::zero();
    for (axis, &sign) in signs.iter().enumerate() {
        for j in 0..4 {
            if f.c[j].is_zero() {
                continue;
            }
            let (s, k) = match side {
                Side::Left => unit_product(axis, j),
                Side::Right => unit_product(j, axis),
            };
            let d = f.c[j].partial(axis).scale(&rat(sign * s as i64, 1));
            out.c[k] += &d;
        }
    }
    out
}

/// `D f` (left) or `f D` (right).
pub fn apply_d(f: &QuatField, side: Side) -> QuatField {
    apply_operator(f, [1, -1, -1], side)
}

/// `Dbar f` (left) or `f Dbar` (right).
pub fn apply_dbar(f: &QuatField, side: Side) -> QuatField {
    apply_operator(f, [1, 1, 1], side)
}

pub fn sc(f: &QuatField) -> TriPoly {
    f.sc()
}

pub fn vec(f: &QuatField) -> QuatField {
    f.vec()
}

pub fn conj(f: &QuatField) -> QuatField {
    f.conj()
}

pub fn star(f: &QuatField) -> QuatField {
    f.star()
}

/// Left monogenic: `Dbar f = 0`.
pub fn is_monogenic(f: &QuatField) -> bool {
    apply_dbar(f, Side::Left).is_zero()
}

/// Left antimonogenic: `D f = 0`.
pub fn is_antimonogenic(f: &QuatField) -> bool {
    apply_d(f, Side::Left).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MonoKind {
    X,
    Y,
}

impl MonoKind {
    pub fn harmonic(self) -> HarmonicKind {
        match self {
            MonoKind::X => HarmonicKind::U,
            MonoKind::Y => HarmonicKind::V,
        }
    }

    fn min_order(self) -> u32 {
        match self {
            MonoKind::X => 0,
            MonoKind::Y => 1,
        }
    }
}

impl fmt::Display for MonoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonoKind::X => "X",
            MonoKind::Y => "Y",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonogenicBasisElement {
    pub kind: MonoKind,
    pub degree: u32,
    pub order: u32,
    pub field: QuatField,
}

impl MonogenicBasisElement {
    /// `X^n_{n+1}`, `Y^n_{n+1}`: simultaneously monogenic and antimonogenic.
    pub fn is_monogenic_constant(&self) -> bool {
        self.order == self.degree + 1
    }
}

fn check_order(kind: MonoKind, n: u32, m: u32) -> Result<()> {
    if m < kind.min_order() || m > n + 1 {
        return Err(Error::InvalidIndex(format!("{kind}^{n}_{m}")));
    }
    Ok(())
}

/// `1/2 D[U^{n+1}_m]` or `1/2 D[V^{n+1}_m]`.
pub fn monogenic(kind: MonoKind, n: u32, m: u32) -> Result<MonogenicBasisElement> {
    check_order(kind, n, m)?;
    let h = uv_poly(kind.harmonic(), n as i64 + 1, m as i64);
    let field = apply_d(&QuatField::scalar(h), Side::Left).scale(&rat(1, 2));
    Ok(MonogenicBasisElement {
        kind,
        degree: n,
        order: m,
        field,
    })
}

pub fn monogenic_x(n: u32, m: u32) -> Result<MonogenicBasisElement> {
    monogenic(MonoKind::X, n, m)
}

pub fn monogenic_y(n: u32, m: u32) -> Result<MonogenicBasisElement> {
    monogenic(MonoKind::Y, n, m)
}

/// The `2n + 3` elements `X_0..X_{n+1}, Y_1..Y_{n+1}` of degree `n`.
pub fn monogenic_basis(n: u32) -> Vec<MonogenicBasisElement> {
    let xs = (0..=n + 1).map(|m| (MonoKind::X, m));
    let ys = (1..=n + 1).map(|m| (MonoKind::Y, m));
    xs.chain(ys)
        .map(|(k, m)| monogenic(k, n, m).expect("index in range"))
        .collect()
}

/// `c^n_m = (n+m)(n+m+1)/4`.
pub fn c_coefficient(n: u32, m: u32) -> Rational {
    let (n, m) = (n as i64, m as i64);
    rat((n + m) * (n + m + 1), 4)
}

/// Closed form of `X^n_m`, `Y^n_m` as combinations of degree-`n` harmonics
/// (defined for `n >= 1`; `U^n_k`, `V^n_k` vanish for `k > n` and `V^n_0 = 0`).
pub fn xy_closed_form(kind: MonoKind, n: u32, m: u32) -> Result<QuatField> {
    if n == 0 {
        return Err(Error::InvalidIndex("closed form requires n >= 1".into()));
    }
    check_order(kind, n, m)?;
    let (ni, mi) = (n as i64, m as i64);
    let u = |k: i64| uv_poly(HarmonicKind::U, ni, k);
    let v = |k: i64| uv_poly(HarmonicKind::V, ni, k);
    let half = rat(1, 2);
    let quarter = rat(1, 4);
    let mut f = QuatField::zero();
    if m == 0 {
        f.c[0] = u(0).scale(&rat(ni + 1, 2));
        f.c[1] = u(1).scale(&half);
        f.c[2] = v(1).scale(&half);
        return Ok(f);
    }
    let c = c_coefficient(n, m);
    let lead = rat(ni + mi + 1, 2);
    match kind {
        MonoKind::X => {
            f.c[0] = u(mi).scale(&lead);
            f.c[1] = -(&u(mi - 1).scale(&c) - &u(mi + 1).scale(&quarter));
            f.c[2] = &v(mi - 1).scale(&c) + &v(mi + 1).scale(&quarter);
        }
        MonoKind::Y => {
            f.c[0] = v(mi).scale(&lead);
            f.c[1] = -(&v(mi - 1).scale(&c) - &v(mi + 1).scale(&quarter));
            f.c[2] = -(&u(mi - 1).scale(&c) + &u(mi + 1).scale(&quarter));
        }
    }
    Ok(f)
}

/// `|X^n_m|^2 = |Y^n_m|^2`: `pi (n+1)/(2n+3)` at `m = 0`, else
/// `pi (n+1)(n+m+1)! / (2 (2n+3)(n-m+1)!)`.
pub fn xy_norm(kind: MonoKind, n: u32, m: u32) -> Result<PiRational> {
    check_order(kind, n, m)?;
    let q = if m == 0 {
        rat(n as i64 + 1, 2 * n as i64 + 3)
    } else {
        int(n as i64 + 1) * Rational::from_integer(factorial(n + m + 1))
            / (int(2 * (2 * n as i64 + 3)) * Rational::from_integer(factorial(n + 1 - m)))
    };
    Ok(PiRational(q))
}

/// `<X^n_m, conj X^n_m>`: `pi (n+1)/((2n+1)(2n+3))` at `m = 0`, else
/// `pi (n - 2m^2 + 1)(n+m+1)! / (2 (2n+1)(2n+3)(n-m+1)!)`.
pub fn xy_conj_pairing(kind: MonoKind, n: u32, m: u32) -> Result<PiRational> {
    check_order(kind, n, m)?;
    let (ni, mi) = (n as i64, m as i64);
    let base = int((2 * ni + 1) * (2 * ni + 3));
    let q = if m == 0 {
        int(ni + 1) / base
    } else {
        int(ni - 2 * mi * mi + 1) * Rational::from_integer(factorial(n + m + 1))
            / (int(2) * base * Rational::from_integer(factorial(n + 1 - m)))
    };
    Ok(PiRational(q))
}

/// Completes a homogeneous harmonic `f0` of degree `n` to a monogenic field
/// with scalar part `f0`.
///
/// The representative returned carries no monogenic-constant component
/// (no `X^n_{n+1}`, `Y^n_{n+1}` terms).
pub fn complete_scalar(f0: &TriPoly, n: u32) -> Result<QuatField> {
    if !f0.is_homogeneous_of(n) {
        return Err(Error::NotHomogeneous { degree: n });
    }
    if !f0.is_harmonic() {
        return Err(Error::NotHarmonic {
            residual: f0.laplacian().to_string(),
        });
    }
    let mut out = QuatField::zero();
    for h in harmonic_basis(n) {
        let coeff = &scalar_inner(f0, &h.poly) / &uv_norm(h.kind, n, h.order)?;
        if num_traits::Zero::is_zero(&coeff) {
            continue;
        }
        let kind = match h.kind {
            HarmonicKind::U => MonoKind::X,
            HarmonicKind::V => MonoKind::Y,
        };
        let element = monogenic(kind, n, h.order)?;
        let weight = coeff * rat(2, (n + h.order + 1) as i64);
        out = &out + &element.field.scale(&weight);
    }
    if out.sc() != *f0 {
        return Err(Error::NotHarmonic {
            residual: (&out.sc() - f0).to_string(),
        });
    }
    Ok(out)
}

/// Left/right monogenicity and antimonogenicity of the conjugate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeftRightReport {
    pub left: bool,
    pub right: bool,
    pub conj_antimonogenic: bool,
}

impl LeftRightReport {
    pub fn consistent(&self) -> bool {
        self.left == self.right && self.right == self.conj_antimonogenic
    }
}

/// `Dbar f = 0`, `f Dbar = 0` and `D conj(f) = 0` evaluated separately;
/// for `R^3`-valued `f` the three always agree.
pub fn leftright_check(f: &QuatField) -> Result<LeftRightReport> {
    if !f.is_r3_valued() {
        return Err(Error::UnexpectedComponent("e3"));
    }
    Ok(LeftRightReport {
        left: apply_dbar(f, Side::Left).is_zero(),
        right: apply_dbar(f, Side::Right).is_zero(),
        conj_antimonogenic: apply_d(&f.conj(), Side::Left).is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Monomial;
    use proptest::prelude::*;

    fn x(i: usize) -> TriPoly {
        TriPoly::var(i)
    }

    fn quat(c: [TriPoly; 4]) -> QuatField {
        QuatField { c }
    }

    fn z() -> TriPoly {
        TriPoly::zero()
    }

    #[test]
    fn dbar_examples() {
        let e1 = quat([z(), TriPoly::one(), z(), z()]);
        assert!(apply_dbar(&e1, Side::Left).is_zero());
        let f = quat([x(0), x(1).scale(&rat(1, 2)), x(2).scale(&rat(1, 2)), z()]);
        assert!(apply_dbar(&f, Side::Left).is_zero());
        let u20 = uv_poly(HarmonicKind::U, 2, 0);
        let d = apply_d(&QuatField::scalar(u20), Side::Left);
        assert_eq!(d, quat([x(0).scale(&rat(2, 1)), x(1), x(2), z()]));
    }

    #[test]
    fn dbar_components_for_r3_fields() {
        let f = quat([
            TriPoly::monomial(1, 1, 0),
            TriPoly::monomial(0, 1, 2),
            TriPoly::monomial(2, 0, 1),
            z(),
        ]);
        let d = apply_dbar(&f, Side::Left);
        let [f0, f1, f2, _] = &f.c;
        assert_eq!(d.c[0], &(&f0.partial(0) - &f1.partial(1)) - &f2.partial(2));
        assert_eq!(d.c[1], &f1.partial(0) + &f0.partial(1));
        assert_eq!(d.c[2], &f2.partial(0) + &f0.partial(2));
        assert_eq!(d.c[3], &f2.partial(1) - &f1.partial(2));
    }

    #[test]
    fn projections() {
        let f = quat([TriPoly::one(), x(1), z(), z()]);
        assert_eq!(sc(&f), TriPoly::one());
        let g = quat([x(0), x(1), z(), z()]);
        assert_eq!(conj(&g), quat([x(0), -x(1), z(), z()]));
    }

    #[test]
    fn star_example() {
        let f = quat([z(), x(1), z(), z()]);
        assert_eq!(star(&f), quat([z(), z(), x(2), z()]));
    }

    #[test]
    fn low_degree_basis() {
        assert_eq!(monogenic_x(0, 0).unwrap().field, QuatField::scalar(TriPoly::constant(rat(1, 2))));
        assert_eq!(monogenic_x(0, 1).unwrap().field, quat([z(), TriPoly::constant(rat(-1, 2)), z(), z()]));
        assert_eq!(monogenic_y(0, 1).unwrap().field, quat([z(), z(), TriPoly::constant(rat(-1, 2)), z()]));
        let x10 = monogenic_x(1, 0).unwrap().field;
        assert_eq!(x10, quat([x(0), x(1).scale(&rat(1, 2)), x(2).scale(&rat(1, 2)), z()]));
        assert_eq!(x10.norm_sq(), PiRational(rat(2, 5)));
        let x11 = monogenic_x(1, 1).unwrap().field;
        assert_eq!(x11, quat([x(1).scale(&rat(3, 2)), x(0).scale(&rat(-3, 2)), z(), z()]));
        assert_eq!(x11.norm_sq(), PiRational(rat(6, 5)));
        assert!(monogenic_y(1, 0).is_err());
        assert!(monogenic_x(1, 3).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(xy_closed_form(MonoKind::X, 1, 0).unwrap(), monogenic_x(1, 0).unwrap().field);
        assert_eq!(
            xy_closed_form(MonoKind::X, 1, 1).unwrap(),
            quat([x(1).scale(&rat(3, 2)), x(0).scale(&rat(-3, 2)), z(), z()])
        );
        assert_eq!(
            xy_closed_form(MonoKind::Y, 1, 1).unwrap(),
            quat([x(2).scale(&rat(3, 2)), z(), x(0).scale(&rat(-3, 2)), z()])
        );
        assert_eq!(
            xy_closed_form(MonoKind::Y, 1, 1).unwrap(),
            monogenic_x(1, 1).unwrap().field.star()
        );
        assert!(xy_closed_form(MonoKind::X, 0, 0).is_err());
    }

    #[test]
    fn closed_form_matches_half_d_through_10() {
        for n in 1..=10 {
            for e in monogenic_basis(n) {
                let closed = xy_closed_form(e.kind, n, e.order).unwrap();
                assert_eq!(closed, e.field, "{}^{n}_{}", e.kind, e.order);
            }
        }
    }

    #[test]
    fn basis_monogenic_and_normed_through_10() {
        for n in 0..=10 {
            let basis = monogenic_basis(n);
            assert_eq!(basis.len(), 2 * n as usize + 3);
            for (i, e) in basis.iter().enumerate() {
                assert!(is_monogenic(&e.field));
                assert!(e.field.is_r3_valued());
                assert!(e.field.is_homogeneous_of(n));
                assert_eq!(e.field.norm_sq(), xy_norm(e.kind, n, e.order).unwrap());
                for other in &basis[i + 1..] {
                    assert!(e.field.inner(&other.field).is_zero());
                }
            }
        }
    }

    #[test]
    fn conj_pairings() {
        let x10 = monogenic_x(1, 0).unwrap().field;
        assert_eq!(x10.inner(&x10.conj()), PiRational(rat(2, 15)));
        assert_eq!(xy_conj_pairing(MonoKind::X, 1, 0).unwrap(), PiRational(rat(2, 15)));
        let x23 = monogenic_x(2, 3).unwrap().field;
        assert_eq!(x23.inner(&x23.conj()), -x23.norm_sq());
        for n in 0..=8 {
            for e in monogenic_basis(n) {
                assert_eq!(
                    e.field.inner(&e.field.conj()),
                    xy_conj_pairing(e.kind, n, e.order).unwrap()
                );
            }
        }
    }

    #[test]
    fn monogenic_constants() {
        for n in 0..=10 {
            for kind in [MonoKind::X, MonoKind::Y] {
                let e = monogenic(kind, n, n + 1).unwrap();
                assert!(e.is_monogenic_constant());
                assert_eq!(e.field.conj(), -&e.field);
                assert!(e.field.partial(0).is_zero());
                assert!(is_antimonogenic(&e.field));
            }
        }
    }

    #[test]
    fn complete_scalar_examples() {
        assert_eq!(complete_scalar(&TriPoly::one(), 0).unwrap(), QuatField::scalar(TriPoly::one()));
        assert_eq!(complete_scalar(&x(0), 1).unwrap(), monogenic_x(1, 0).unwrap().field);
        let f0 = TriPoly::monomial(1, 1, 0).scale(&rat(3, 1));
        let f = complete_scalar(&f0, 2).unwrap();
        assert_eq!(f.sc(), f0);
        assert!(is_monogenic(&f));
        assert_eq!(f, monogenic_x(2, 1).unwrap().field.scale(&rat(1, 2)));
        assert!(complete_scalar(&TriPoly::monomial(2, 0, 0), 2).is_err());
        assert!(complete_scalar(&x(0), 2).is_err());
    }

    #[test]
    fn completions_differ_by_monogenic_constant() {
        let f0 = &uv_poly(HarmonicKind::U, 3, 1) + &uv_poly(HarmonicKind::V, 3, 2).scale(&rat(-2, 7));
        let f = complete_scalar(&f0, 3).unwrap();
        let other = &f + &monogenic_y(3, 4).unwrap().field.scale(&rat(5, 3));
        assert!(is_monogenic(&other));
        assert_eq!(other.sc(), f0);
        let diff = &other - &f;
        assert!(diff.sc().is_zero());
        assert!(diff.partial(0).is_zero());
    }

    #[test]
    fn leftright_examples() {
        let x10 = monogenic_x(1, 0).unwrap().field;
        let r = leftright_check(&x10).unwrap();
        assert!(r.left && r.consistent());
        let f = quat([z(), x(1), z(), z()]);
        let r = leftright_check(&f).unwrap();
        assert!(!r.left && r.consistent());
        assert_eq!(apply_dbar(&f, Side::Left).c[0], TriPoly::constant(rat(-1, 1)));
        let e2 = quat([z(), z(), TriPoly::one(), z()]);
        assert!(leftright_check(&e2).unwrap().left);
    }

    fn arb_tri() -> impl Strategy<Value = TriPoly> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..4), -6i64..7), 0..5).prop_map(|t| {
            TriPoly::from_terms(t.into_iter().map(|((a, b, c), k)| (Monomial([a, b, c]), rat(k, 1))))
        })
    }

    fn arb_quat() -> impl Strategy<Value = QuatField> {
        (arb_tri(), arb_tri(), arb_tri(), arb_tri()).prop_map(|(a, b, c, d)| quat([a, b, c, d]))
    }

    fn arb_r3() -> impl Strategy<Value = QuatField> {
        (arb_tri(), arb_tri(), arb_tri()).prop_map(|(a, b, c)| quat([a, b, c, z()]))
    }

    proptest! {
        #[test]
        fn laplacian_factorizes(f in arb_quat()) {
            let lap = f.laplacian();
            prop_assert_eq!(apply_d(&apply_dbar(&f, Side::Left), Side::Left), lap.clone());
            prop_assert_eq!(apply_dbar(&apply_d(&f, Side::Left), Side::Left), lap);
        }

        #[test]
        fn star_is_involutive(f in arb_quat()) {
            prop_assert_eq!(f.star().star(), f);
        }

        #[test]
        fn star_commutes_with_dbar(f in arb_r3()) {
            prop_assert_eq!(apply_dbar(&f.star(), Side::Left), apply_dbar(&f, Side::Left).star());
        }

        #[test]
        fn conj_negates_vector_part(f in arb_quat()) {
            prop_assert_eq!(f.conj().vec(), -f.vec());
            prop_assert_eq!(f.conj(), &QuatField::scalar(f.sc()) - &f.vec());
        }

        #[test]
        fn left_right_agree(f in arb_r3()) {
            prop_assert!(leftright_check(&f).unwrap().consistent());
        }
    }

    #[test]
    fn star_preserves_monogenic_and_antimonogenic() {
        for n in 0..=6 {
            for e in monogenic_basis(n) {
                assert!(is_monogenic(&e.field.star()));
                assert!(is_antimonogenic(&e.field.conj().star()));
            }
        }
    }
}
