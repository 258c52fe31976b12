//! Exact invariant suites over a range of degrees, reported item by item.

use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::ambigenic::{
    ambigenic_basis, ambigenic_norm, contragenic_basis, dimension_table, dimension_table_by_kernels,
    is_contragenic, star_on_contragenics, surface_criterion, system_gram, vec_basis, z_norm,
    DimensionTable,
};
use crate::bergman::project;
use crate::exact::PiRational;
use crate::field::VecField;
use crate::harmonic::{harmonic_basis, legendre_identities, scalar_inner, uv_norm};
use crate::io::{ReportDocument, ReportKind};
use crate::linalg::{gram_rank, off_diagonal};
use crate::monogenic::{is_antimonogenic, is_monogenic, monogenic_basis, xy_closed_form, xy_conj_pairing, xy_norm};
use crate::{Error, Exec, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Legendre,
    ClosedForm,
    Norms,
    Gram,
    Dims,
    Bergman,
    Surface,
    Star,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Legendre,
        Suite::ClosedForm,
        Suite::Norms,
        Suite::Gram,
        Suite::Dims,
        Suite::Bergman,
        Suite::Surface,
        Suite::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Legendre => "legendre",
            Suite::ClosedForm => "theorem21",
            Suite::Norms => "norms",
            Suite::Gram => "gram",
            Suite::Dims => "dims",
            Suite::Bergman => "bergman",
            Suite::Surface => "surface",
            Suite::Star => "star",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub degree: u32,
    pub order: Option<u32>,
    pub passed: bool,
    /// Exact nonzero discrepancy when `passed` is false.
    pub detail: String,
}

impl CheckItem {
    fn new(name: impl Into<String>, degree: u32, order: Option<u32>, failure: Option<String>) -> Self {
        Self {
            name: name.into(),
            degree,
            order,
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        }
    }

    fn equal<T: PartialEq + fmt::Display>(name: impl Into<String>, n: u32, m: Option<u32>, got: &T, want: &T) -> Self {
        let failure = (got != want).then(|| format!("{got} != {want}"));
        Self::new(name, n, m, failure)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n_max: u32,
    pub items: Vec<CheckItem>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn to_report(&self) -> ReportDocument {
        let mut r = ReportDocument::new(
            ReportKind::CheckSuite,
            format!("check {} n_max={}", self.suite, self.n_max),
            &["check", "n", "m", "status", "discrepancy"],
        );
        for item in &self.items {
            r.push(vec![
                item.name.clone().into(),
                item.degree.into(),
                item.order.map_or(Value::Null, Value::from),
                if item.passed { "PASS" } else { "FAIL" }.into(),
                item.detail.clone().into(),
            ]);
        }
        r.passed = Some(self.passed());
        r
    }
}

/// Runs `suite` for every degree up to `n_max`; degrees are independent and
/// run under `exec`.
pub fn run_suite(suite: Suite, n_max: u32, exec: Exec) -> Result<SuiteReport> {
    let first = match suite {
        Suite::ClosedForm | Suite::Surface | Suite::Star => 1,
        _ => 0,
    };
    let degrees: Vec<u32> = (first..=n_max).collect();
    let per_degree = exec.map(&degrees, |&n| match suite {
        Suite::Legendre => Ok(legendre_items(n)),
        Suite::ClosedForm => closed_form_items(n),
        Suite::Norms => norm_items(n),
        Suite::Gram => Ok(gram_items(n)),
        Suite::Dims => Ok(dims_items(n)),
        Suite::Bergman => bergman_items(n),
        Suite::Surface => surface_items(n),
        Suite::Star => star_items(n),
    });
    let mut items = Vec::new();
    for batch in per_degree {
        items.extend(batch?);
    }
    Ok(SuiteReport { suite, n_max, items })
}

fn legendre_items(n: u32) -> Vec<CheckItem> {
    (0..=n)
        .flat_map(|m| legendre_identities(n, m))
        .map(|id| {
            let failure = (!id.holds()).then(|| id.discrepancy.to_string());
            CheckItem::new(id.name, id.n, Some(id.m), failure)
        })
        .collect()
}

fn closed_form_items(n: u32) -> Result<Vec<CheckItem>> {
    monogenic_basis(n)
        .into_iter()
        .map(|e| {
            let closed = xy_closed_form(e.kind, n, e.order)?;
            let diff = &closed - &e.field;
            let failure = (!diff.is_zero()).then(|| diff.to_string());
            Ok(CheckItem::new(format!("closed-form {}", e.kind), n, Some(e.order), failure))
        })
        .collect()
}

fn norm_items(n: u32) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();
    for h in harmonic_basis(n) {
        let got = scalar_inner(&h.poly, &h.poly);
        items.push(CheckItem::equal(format!("norm {}", h.kind), n, Some(h.order), &got, &uv_norm(h.kind, n, h.order)?));
    }
    for e in monogenic_basis(n) {
        let f = &e.field;
        items.push(CheckItem::equal(format!("norm {}", e.kind), n, Some(e.order), &f.norm_sq(), &xy_norm(e.kind, n, e.order)?));
        items.push(CheckItem::equal(
            format!("conj-pairing {}", e.kind),
            n,
            Some(e.order),
            &f.inner(&f.conj()),
            &xy_conj_pairing(e.kind, n, e.order)?,
        ));
    }
    for e in vec_basis(n) {
        items.push(CheckItem::equal(format!("norm Vec {}", e.kind), n, Some(e.order), &e.field.norm_sq(), &e.norm_sq));
    }
    if n >= 1 {
        for e in ambigenic_basis(n)? {
            if e.kind.is_minus() {
                items.push(CheckItem::equal(
                    format!("norm {}", e.kind),
                    n,
                    Some(e.order),
                    &e.field.norm_sq(),
                    &ambigenic_norm(e.kind, n, e.order)?,
                ));
            }
        }
    }
    for z in contragenic_basis(n) {
        items.push(CheckItem::equal(format!("norm {}", z.label), n, Some(z.order), &z.field.norm_sq(), &z_norm(z.label, n, z.order)?));
    }
    Ok(items)
}

fn gram_items(n: u32) -> Vec<CheckItem> {
    let g = system_gram(n, Exec::Sequential);
    let off = off_diagonal(&g);
    let failure = off.first().map(|(i, j, v)| format!("G[{i}][{j}] = {v}"));
    let rank = gram_rank(&g);
    let expected = DimensionTable::expected(n).harmonic;
    vec![
        CheckItem::new("gram diagonal", n, None, failure),
        CheckItem::equal("gram rank", n, None, &rank, &expected),
    ]
}

fn dims_items(n: u32) -> Vec<CheckItem> {
    let expected = DimensionTable::expected(n);
    let by_gram = dimension_table(n, Exec::Sequential);
    let by_kernels = dimension_table_by_kernels(n);
    let row = |t: &DimensionTable| {
        format!("({}, {}, {}, {}, {})", t.harmonic_scalar, t.monogenic, t.intersection, t.sum, t.harmonic)
    };
    vec![
        CheckItem::equal("dims gram-rank", n, None, &row(&by_gram), &row(&expected)),
        CheckItem::equal("dims kernels", n, None, &row(&by_kernels), &row(&expected)),
        CheckItem::equal(
            "dim N",
            n,
            None,
            &by_gram.contragenic(),
            &if n == 0 { 0 } else { 2 * n as usize - 1 },
        ),
    ]
}

/// A fixed vector field with both `Vec M` and contragenic content in
/// degree `n`.
fn probe_field(n: u32) -> VecField {
    let mut f = VecField::zero();
    for (k, h) in harmonic_basis(n).into_iter().enumerate() {
        let c = crate::exact::rat(k as i64 + 1, 1);
        let d = crate::exact::rat(if k % 2 == 0 { 1 } else { -2 }, k as i64 + 2);
        f.c[1] += &h.poly.scale(&c);
        f.c[2] += &h.poly.scale(&d);
    }
    f
}

fn bergman_items(n: u32) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();
    for e in vec_basis(n) {
        let r = project(&e.field, n)?;
        let failure = (r.projected != e.field).then(|| r.residual.to_string());
        items.push(CheckItem::new(format!("reproduces Vec {}", e.kind), n, Some(e.order), failure));
    }
    for z in contragenic_basis(n) {
        let r = project(&z.field, n)?;
        let failure = (!r.projected.is_zero()).then(|| r.projected.to_string());
        items.push(CheckItem::new(format!("annihilates {}", z.label), n, Some(z.order), failure));
    }
    let f = probe_field(n);
    let r = project(&f, n)?;
    let again = project(&r.projected, n)?.projected;
    let failure = (again != r.projected).then(|| (&again - &r.projected).to_string());
    items.push(CheckItem::new("idempotent", n, None, failure));
    let cross = r.projected.inner(&r.residual);
    items.push(CheckItem::equal("orthogonal residual", n, None, &cross, &PiRational::zero()));
    let total = r.norms.0.clone() + r.norms.1.clone();
    items.push(CheckItem::equal("pythagoras", n, None, &total, &f.norm_sq()));
    Ok(items)
}

fn surface_items(n: u32) -> Result<Vec<CheckItem>> {
    let mut tests: Vec<(String, u32, VecField)> = contragenic_basis(n)
        .into_iter()
        .map(|z| (z.label.to_string(), z.order, z.field))
        .collect();
    tests.extend(vec_basis(n).into_iter().map(|e| (format!("Vec {}", e.kind), e.order, e.field)));
    tests
        .into_iter()
        .map(|(name, m, h)| {
            let surface = surface_criterion(&h, n)?.holds();
            let volume = is_contragenic(&h)?.holds();
            let failure = (surface != volume).then(|| format!("surface {surface}, volume {volume}"));
            Ok(CheckItem::new(format!("surface = volume {name}"), n, Some(m), failure))
        })
        .collect()
}

fn star_items(n: u32) -> Result<Vec<CheckItem>> {
    let report = star_on_contragenics(n)?;
    let mut items: Vec<CheckItem> = report
        .entries
        .iter()
        .map(|e| {
            let failure = (!e.contragenic).then(|| "image not contragenic".to_string());
            CheckItem::new(format!("star {}", e.label), n, Some(e.order), failure)
        })
        .collect();
    items.push(CheckItem::new(
        "star change of basis invertible",
        n,
        None,
        (!report.invertible).then(|| "singular".to_string()),
    ));
    for e in monogenic_basis(n) {
        let ok = is_monogenic(&e.field.star()) && is_antimonogenic(&e.field.conj().star());
        items.push(CheckItem::new(
            format!("star preserves {}", e.kind),
            n,
            Some(e.order),
            (!ok).then(|| "not preserved".to_string()),
        ));
    }
    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_degree() {
        for suite in Suite::ALL {
            let r = run_suite(suite, 3, Exec::Parallel).unwrap();
            assert!(r.passed(), "{suite}: {:?}", r.failures().next());
            assert!(!r.items.is_empty());
        }
    }

    #[test]
    fn modes_agree() {
        let a = run_suite(Suite::Norms, 3, Exec::Sequential).unwrap();
        let b = run_suite(Suite::Norms, 3, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn failing_item_reports_discrepancy() {
        let item = CheckItem::equal("x", 1, None, &PiRational::zero(), &PiRational(crate::exact::rat(1, 2)));
        assert!(!item.passed);
        assert_eq!(item.detail, "0 != 1/2*pi");
    }

    #[test]
    fn report_marks_status() {
        let r = run_suite(Suite::Dims, 1, Exec::Sequential).unwrap().to_report();
        assert_eq!(r.passed, Some(true));
        assert!(r.to_csv().contains("dims kernels,1,,PASS,"));
    }
}
