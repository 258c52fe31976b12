//! Builders turning computed objects into [`ReportDocument`] tables.

use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::ambigenic::{
    ambigenic_basis, contragenic_basis, dimension_table, dimension_table_by_kernels, vec_basis,
    DimensionTable,
};
use crate::basis::BasisLabel;
use crate::bergman::kernel;
use crate::decomposition::{norm_report, Decomposition};
use crate::exact::{format_rational, PiRational, Rational};
use crate::field::QuatField;
use crate::harmonic::{harmonic_basis, HarmonicKind};
use crate::io::{ReportDocument, ReportKind};
use crate::linalg::gram_matrix;
use crate::monogenic::{monogenic_basis, MonoKind};
use crate::quadrature::QuadReport;
use crate::{Error, Exec, Result};

/// Basis families selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Uv,
    Xy,
    Ambigenic,
    Contragenic,
    Vec,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Uv => "UV",
            Family::Xy => "XY",
            Family::Ambigenic => "ambigenic",
            Family::Contragenic => "contragenic",
            Family::Vec => "vec",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Family::Uv, Family::Xy, Family::Ambigenic, Family::Contragenic, Family::Vec]
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown basis family {s:?}")))
    }
}

/// `(label, m, field)` for every member of `family` in degree `n`, ordered
/// by family (`U`/`X` before `V`/`Y`, `+` before `-`) and then by `m`.
pub fn family_members(family: Family, n: u32) -> Result<Vec<(BasisLabel, u32, QuatField)>> {
    let mono_label = |k: MonoKind| if k == MonoKind::X { BasisLabel::X } else { BasisLabel::Y };
    Ok(match family {
        Family::Uv => harmonic_basis(n)
            .into_iter()
            .map(|h| {
                let label = if h.kind == HarmonicKind::U { BasisLabel::U } else { BasisLabel::V };
                (label, h.order, QuatField::scalar(h.poly))
            })
            .collect(),
        Family::Xy => monogenic_basis(n)
            .into_iter()
            .map(|e| (mono_label(e.kind), e.order, e.field))
            .collect(),
        Family::Ambigenic => ambigenic_basis(n)?
            .into_iter()
            .map(|e| (BasisLabel::from_ambi(e.kind), e.order, e.field))
            .collect(),
        Family::Contragenic => contragenic_basis(n)
            .into_iter()
            .map(|z| (BasisLabel::from_z(z.label), z.order, z.field.to_quat()))
            .collect(),
        Family::Vec => vec_basis(n)
            .into_iter()
            .map(|e| (mono_label(e.kind), e.order, e.field.to_quat()))
            .collect(),
    })
}

fn exact(v: &PiRational) -> Value {
    v.to_string().into()
}

pub fn basis_report(family: Family, n: u32) -> Result<ReportDocument> {
    let mut r = ReportDocument::new(
        ReportKind::BasisTable,
        format!("{family} basis, degree {n}"),
        &["label", "n", "m", "field", "norm_sq", "norm_sq_f64"],
    );
    let label_prefix = if family == Family::Vec { "Vec " } else { "" };
    for (label, m, field) in family_members(family, n)? {
        let norm = field.norm_sq();
        r.push(vec![
            format!("{label_prefix}{label}").into(),
            n.into(),
            m.into(),
            field.to_string().into(),
            exact(&norm),
            norm.to_f64().into(),
        ]);
    }
    Ok(r)
}

/// Exact Gram matrix of a family as a square table.
pub fn gram_report(family: Family, n: u32, exec: Exec) -> Result<ReportDocument> {
    let members = family_members(family, n)?;
    let names: Vec<String> = members.iter().map(|(l, m, _)| format!("{l}_{m}")).collect();
    let fields: Vec<QuatField> = members.into_iter().map(|(_, _, f)| f).collect();
    let g = gram_matrix(&fields, |a, b| a.inner(b), exec);
    let mut columns = vec!["row"];
    columns.extend(names.iter().map(String::as_str));
    let mut r = ReportDocument::new(ReportKind::Gram, format!("{family} Gram matrix, degree {n}"), &columns);
    for (name, row) in names.iter().zip(&g) {
        let mut cells: Vec<Value> = vec![name.clone().into()];
        cells.extend(row.iter().map(exact));
        r.push(cells);
    }
    Ok(r)
}

/// Dimension table for `0..=n_max`; `passed` when both computation routes
/// reproduce the closed forms.
pub fn dims_report(n_max: u32, exec: Exec) -> ReportDocument {
    let mut r = ReportDocument::new(
        ReportKind::Dims,
        format!("dimensions, n <= {n_max}"),
        &["n", "H_R", "M", "M_cap_Mbar", "M_plus_Mbar", "H", "N", "matches"],
    );
    let rows = exec.map_range(n_max as usize + 1, |n| {
        let n = n as u32;
        let t = dimension_table(n, Exec::Sequential);
        let ok = t == DimensionTable::expected(n) && dimension_table_by_kernels(n) == t;
        (t, ok)
    });
    let mut all = true;
    for (t, ok) in rows {
        all &= ok;
        r.push(vec![
            t.degree.into(),
            t.harmonic_scalar.into(),
            t.monogenic.into(),
            t.intersection.into(),
            t.sum.into(),
            t.harmonic.into(),
            t.contragenic().into(),
            ok.into(),
        ]);
    }
    r.passed = Some(all);
    r
}

pub fn decomposition_report(d: &Decomposition) -> ReportDocument {
    let mut r = ReportDocument::new(
        ReportKind::Decomposition,
        "monogenic + antimonogenic + contragenic",
        &["section", "label", "n", "m", "value"],
    );
    for (n, coeffs) in &d.coefficients {
        for c in coeffs {
            r.push(vec![
                "coefficient".into(),
                c.label.to_string().into(),
                (*n).into(),
                c.order.into(),
                format_rational(&c.value).into(),
            ]);
        }
    }
    let parts = [
        ("monogenic", d.monogenic.to_string()),
        ("antimonogenic", d.antimonogenic.to_string()),
        ("contragenic", d.contragenic.to_string()),
    ];
    for (name, text) in parts {
        r.push(vec!["part".into(), name.into(), Value::Null, Value::Null, text.into()]);
    }
    let norms = norm_report(d);
    let rows = [
        ("total", &norms.total),
        ("ambigenic", &norms.ambigenic),
        ("contragenic", &norms.contragenic),
        ("monogenic", &norms.monogenic),
        ("antimonogenic", &norms.antimonogenic),
        ("cross_term", &norms.cross_term),
    ];
    for (name, v) in rows {
        r.push(vec!["norm_sq".into(), name.into(), Value::Null, Value::Null, exact(v)]);
    }
    r
}

fn per_pi(q: &Rational) -> String {
    if num_traits::Zero::is_zero(q) {
        "0".into()
    } else {
        format!("{}/pi", format_rational(q))
    }
}

/// `b^n_1`, `b^n_2` at `(x, y)`: exact values in units of `1/pi` plus
/// float renderings.
pub fn kernel_report(n: u32, x: &[Rational; 3], y: &[Rational; 3]) -> ReportDocument {
    let k = kernel(n);
    let exact_v = k.eval_exact(x, y);
    let xf = x.each_ref().map(crate::exact::rational_to_f64);
    let yf = y.each_ref().map(crate::exact::rational_to_f64);
    let float_v = k.eval_f64(xf, yf);
    let mut r = ReportDocument::new(
        ReportKind::Kernel,
        format!("Bergman kernel, degree {n}"),
        &["kernel", "e1", "e2", "e1_f64", "e2_f64"],
    );
    for (i, name) in ["b1", "b2"].into_iter().enumerate() {
        r.push(vec![
            name.into(),
            per_pi(&exact_v[i][0]).into(),
            per_pi(&exact_v[i][1]).into(),
            float_v[i][0].into(),
            float_v[i][1].into(),
        ]);
    }
    r
}

pub fn quadrature_report(reports: &[QuadReport], tolerance: f64) -> ReportDocument {
    let mut r = ReportDocument::new(
        ReportKind::Quadrature,
        format!("quadrature cross-check, tolerance {tolerance:e}"),
        &["pair", "exact", "exact_f64", "quadrature_f64", "rel_error_f64", "condition_f64", "nodes"],
    );
    let mut all = true;
    for (i, q) in reports.iter().enumerate() {
        all &= q.rel_error <= tolerance;
        r.push(vec![
            i.into(),
            exact(&q.exact),
            q.exact_f64.into(),
            q.quadrature.into(),
            q.rel_error.into(),
            q.condition.into(),
            format!("{}x{}x{}", q.order.radial, q.order.polar, q.order.azimuthal).into(),
        ]);
    }
    r.passed = Some(all);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn contragenic_degree_one() {
        let r = basis_report(Family::Contragenic, 1).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0][3], "x2*e1 - x1*e2");
        assert_eq!(r.rows[0][4], "8/15*pi");
    }

    #[test]
    fn uv_degree_zero() {
        let r = basis_report(Family::Uv, 0).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0][3], "1");
    }

    #[test]
    fn xy_degree_one_csv() {
        let csv = basis_report(Family::Xy, 1).unwrap().to_csv();
        let labels: Vec<String> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').take(3).collect::<Vec<_>>().join(","))
            .collect();
        assert_eq!(labels, ["X,1,0", "X,1,1", "X,1,2", "Y,1,1", "Y,1,2"]);
    }

    #[test]
    fn family_names() {
        assert_eq!("xy".parse::<Family>().unwrap(), Family::Xy);
        assert!("rst".parse::<Family>().is_err());
        assert!(basis_report(Family::Ambigenic, 0).is_err());
    }

    #[test]
    fn gram_is_diagonal_table() {
        let r = gram_report(Family::Vec, 1, Exec::Sequential).unwrap();
        assert_eq!(r.rows.len(), 5);
        assert_eq!(r.rows[0][1], "2/15*pi");
        assert_eq!(r.rows[0][2], "0");
    }

    #[test]
    fn dims_rows() {
        let r = dims_report(3, Exec::Parallel);
        assert_eq!(r.passed, Some(true));
        assert_eq!(r.rows[1][1..7], [3, 5, 2, 8, 9, 1].map(Value::from));
    }

    #[test]
    fn kernel_degree_zero() {
        let p = [rat(1, 2), rat(1, 3), rat(1, 5)];
        let r = kernel_report(0, &p, &p);
        assert_eq!(r.rows[0][1], "-3/4/pi");
        assert_eq!(r.rows[0][2], "0");
    }
}
