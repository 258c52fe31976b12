//! Splitting a harmonic polynomial field into monogenic, antimonogenic and
//! contragenic parts.
//!
//! Each homogeneous component is expanded in the orthogonal system
//! ambigenic ∪ contragenic of its degree. `X^{n,-}_m = conj X^n_m - a X^n_m`
//! is then unfolded, so the `conj X` share goes to the antimonogenic part and
//! the `-a X` share to the monogenic part. Monogenic constants (`X^n_{n+1}`,
//! `Y^n_{n+1}` and every degree-0 field) always land in the monogenic part.

use std::collections::BTreeMap;

use crate::ambigenic::{a_coefficient, is_contragenic, orthogonal_system};
use crate::basis::BasisLabel;
use crate::exact::{PiRational, Rational};
use crate::field::{QuatField, VecField};
use crate::monogenic::{is_antimonogenic, is_monogenic, monogenic, MonoKind};
use crate::{Exec, Result};

/// One coordinate in the degree-`n` orthogonal system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficient {
    pub label: BasisLabel,
    pub order: u32,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormReport {
    pub total: PiRational,
    pub ambigenic: PiRational,
    pub contragenic: PiRational,
    pub monogenic: PiRational,
    pub antimonogenic: PiRational,
    /// `<monogenic, antimonogenic>`, generally nonzero.
    pub cross_term: PiRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub monogenic: QuatField,
    pub antimonogenic: QuatField,
    pub contragenic: VecField,
    /// Nonzero coordinates per degree.
    pub coefficients: BTreeMap<u32, Vec<Coefficient>>,
}

impl Decomposition {
    pub fn ambigenic(&self) -> QuatField {
        &self.monogenic + &self.antimonogenic
    }

    pub fn reconstruct(&self) -> QuatField {
        &self.ambigenic() + &self.contragenic.to_quat()
    }
}

/// Per-part checks on a decomposition of `input`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecompositionCertificate {
    pub reconstructs: bool,
    pub monogenic: bool,
    pub antimonogenic: bool,
    pub contragenic: bool,
    pub orthogonal: bool,
    /// The antimonogenic part is orthogonal to every monogenic constant.
    pub constants_in_monogenic: bool,
}

impl DecompositionCertificate {
    pub fn holds(&self) -> bool {
        self.reconstructs
            && self.monogenic
            && self.antimonogenic
            && self.contragenic
            && self.orthogonal
            && self.constants_in_monogenic
    }
}

/// Homogeneous components of `f`, by increasing degree; zero gives `[]`.
pub fn degree_split(f: &VecField) -> Vec<(u32, VecField)> {
    let mut parts: BTreeMap<u32, VecField> = BTreeMap::new();
    for (axis, p) in f.c.iter().enumerate() {
        for (n, h) in p.homogeneous_components() {
            parts.entry(n).or_default().c[axis] = h;
        }
    }
    parts.into_iter().collect()
}

struct DegreeParts {
    monogenic: QuatField,
    antimonogenic: QuatField,
    contragenic: QuatField,
    coefficients: Vec<Coefficient>,
}

fn decompose_degree(n: u32, f: &VecField) -> Result<DegreeParts> {
    let f = f.to_quat();
    let mut out = DegreeParts {
        monogenic: QuatField::zero(),
        antimonogenic: QuatField::zero(),
        contragenic: QuatField::zero(),
        coefficients: Vec::new(),
    };
    for e in orthogonal_system(n) {
        let c = &f.inner(&e.field) / &e.field.norm_sq();
        if num_traits::Zero::is_zero(&c) {
            continue;
        }
        let share = e.field.scale(&c);
        match e.label {
            BasisLabel::X | BasisLabel::Y | BasisLabel::XPlus | BasisLabel::YPlus => {
                out.monogenic = &out.monogenic + &share;
            }
            BasisLabel::XMinus | BasisLabel::YMinus if e.order == n + 1 => {
                // Y^{n,-}_{n+1} = -Y^n_{n+1} is a monogenic constant
                out.monogenic = &out.monogenic + &share;
            }
            BasisLabel::XMinus | BasisLabel::YMinus => {
                let kind = if e.label == BasisLabel::XMinus { MonoKind::X } else { MonoKind::Y };
                let x = monogenic(kind, n, e.order)?.field.scale(&c);
                out.antimonogenic = &out.antimonogenic + &x.conj();
                out.monogenic = &out.monogenic - &x.scale(&a_coefficient(n, e.order));
            }
            _ => out.contragenic = &out.contragenic + &share,
        }
        out.coefficients.push(Coefficient {
            label: e.label,
            order: e.order,
            value: c,
        });
    }
    Ok(out)
}

/// Decomposes a harmonic polynomial field; degrees are processed under
/// `exec` and merged in order.
pub fn decompose_with(f: &VecField, exec: Exec) -> Result<Decomposition> {
    f.require_harmonic()?;
    let parts = degree_split(f);
    let results = exec.map(&parts, |(n, h)| decompose_degree(*n, h).map(|d| (*n, d)));
    let mut out = Decomposition {
        monogenic: QuatField::zero(),
        antimonogenic: QuatField::zero(),
        contragenic: VecField::zero(),
        coefficients: BTreeMap::new(),
    };
    let mut contragenic = QuatField::zero();
    for r in results {
        let (n, d) = r?;
        out.monogenic = &out.monogenic + &d.monogenic;
        out.antimonogenic = &out.antimonogenic + &d.antimonogenic;
        contragenic = &contragenic + &d.contragenic;
        out.coefficients.insert(n, d.coefficients);
    }
    out.contragenic = contragenic.to_vec_field().expect("contragenic basis is R^3-valued");
    Ok(out)
}

pub fn decompose(f: &VecField) -> Result<Decomposition> {
    decompose_with(f, Exec::default())
}

pub fn norm_report(d: &Decomposition) -> NormReport {
    let ambigenic = d.ambigenic();
    NormReport {
        total: d.reconstruct().norm_sq(),
        ambigenic: ambigenic.norm_sq(),
        contragenic: d.contragenic.norm_sq(),
        monogenic: d.monogenic.norm_sq(),
        antimonogenic: d.antimonogenic.norm_sq(),
        cross_term: d.monogenic.inner(&d.antimonogenic),
    }
}

/// Verifies every invariant of `d` against the field it came from.
pub fn certify(input: &VecField, d: &Decomposition) -> Result<DecompositionCertificate> {
    let ambigenic = d.ambigenic();
    let contra = d.contragenic.to_quat();
    let mut constants_in_monogenic = true;
    for (n, part) in degree_split(&d.antimonogenic.to_vec_field().unwrap_or_default()) {
        for kind in [MonoKind::X, MonoKind::Y] {
            let constant = monogenic(kind, n, n + 1)?.field;
            if !part.to_quat().inner(&constant).is_zero() {
                constants_in_monogenic = false;
            }
        }
    }
    Ok(DecompositionCertificate {
        reconstructs: d.reconstruct() == input.to_quat(),
        monogenic: is_monogenic(&d.monogenic),
        antimonogenic: is_antimonogenic(&d.antimonogenic) && d.antimonogenic.is_r3_valued(),
        contragenic: d.contragenic.c[0].is_zero() && is_contragenic(&d.contragenic)?.holds(),
        orthogonal: ambigenic.inner(&contra).is_zero(),
        constants_in_monogenic,
    })
}
