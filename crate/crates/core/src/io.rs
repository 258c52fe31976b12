//! JSON field documents and tabular reports (JSON, CSV, LaTeX).
//!
//! A field document lists either monomial terms or basis coordinates:
//!
//! ```json
//! {"format_version": 1, "representation": "monomial",
//!  "terms": [{"component": 1, "a": 0, "b": 0, "c": 1, "coefficient": "1"}]}
//! {"format_version": 1, "representation": "basis-coeffs",
//!  "terms": [{"label": "X", "n": 2, "m": 1, "coefficient": "1/2"}]}
//! ```
//!
//! Coefficients are exact `"p/q"` strings. Basis labels are `U V X Y X+ X-
//! Y+ Y- Z0 Z+ Z-`; `X`/`Y` (and the ambigenic families built from them) use
//! the normalization `X^n_m = 1/2 D[U^{n+1}_m]`, and `Z0` takes `m = 0`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::basis::{basis_element, BasisLabel};
use crate::exact::{format_rational, parse_rational, Monomial, Rational, TriPoly};
use crate::field::VecField;
use crate::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

mod rational_text {
    use super::*;

    pub fn serialize<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialTerm {
    pub component: u8,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    #[serde(with = "rational_text")]
    pub coefficient: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisTerm {
    pub label: BasisLabel,
    pub n: u32,
    pub m: u32,
    #[serde(with = "rational_text")]
    pub coefficient: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "representation", content = "terms", rename_all = "kebab-case")]
pub enum FieldBody {
    Monomial(Vec<MonomialTerm>),
    BasisCoeffs(Vec<BasisTerm>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDocument {
    pub format_version: u32,
    #[serde(flatten)]
    pub body: FieldBody,
}

impl FieldDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: FieldDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported format_version {}",
                doc.format_version
            )));
        }
        if let FieldBody::Monomial(terms) = &doc.body {
            if let Some(t) = terms.iter().find(|t| t.component > 2) {
                return Err(Error::Parse(format!("component {} out of range", t.component)));
            }
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Monomial document listing the terms of `f` by component, highest
    /// monomial first.
    pub fn from_field(f: &VecField) -> Self {
        let terms = f
            .c
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                p.terms().rev().map(move |(m, c)| MonomialTerm {
                    component: i as u8,
                    a: m.0[0],
                    b: m.0[1],
                    c: m.0[2],
                    coefficient: c.clone(),
                })
            })
            .collect();
        Self {
            format_version: FORMAT_VERSION,
            body: FieldBody::Monomial(terms),
        }
    }

    pub fn to_field(&self) -> Result<VecField> {
        match &self.body {
            FieldBody::Monomial(terms) => {
                let mut f = VecField::zero();
                for t in terms {
                    let axis = t.component as usize;
                    if axis > 2 {
                        return Err(Error::Parse(format!("component {axis} out of range")));
                    }
                    f.c[axis] += &TriPoly::term(Monomial([t.a, t.b, t.c]), t.coefficient.clone());
                }
                Ok(f)
            }
            FieldBody::BasisCoeffs(terms) => {
                let mut f = VecField::zero();
                for t in terms {
                    let q = basis_element(t.label, t.n, t.m)?.scale(&t.coefficient);
                    let v = q.to_vec_field().ok_or(Error::UnexpectedComponent("e3"))?;
                    f = &f + &v;
                }
                Ok(f)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportKind {
    BasisTable,
    Gram,
    Dims,
    Decomposition,
    CheckSuite,
    Kernel,
    Quadrature,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Column {
    pub name: String,
    /// Float renderings computed from exact values.
    pub derived: bool,
}

/// A table whose exact cells are strings (`"q*pi"`, `"p/q"`, polynomials)
/// and whose derived cells are floats.
#[derive(Clone, Debug, PartialEq)]
pub struct ReportDocument {
    pub kind: ReportKind,
    pub title: String,
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Value>>,
    pub passed: Option<bool>,
}

impl ReportDocument {
    pub fn new(kind: ReportKind, title: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            kind,
            title: title.into(),
            columns: columns
                .iter()
                .map(|c| Column {
                    name: c.to_string(),
                    derived: c.ends_with("_f64"),
                })
                .collect(),
            rows: Vec::new(),
            passed: None,
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Latex => self.to_latex(),
        }
    }

    pub fn to_json(&self) -> String {
        let entries: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut m = Map::new();
                for (c, v) in self.columns.iter().zip(row) {
                    m.insert(c.name.clone(), v.clone());
                }
                Value::Object(m)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("format_version".into(), FORMAT_VERSION.into());
        doc.insert("kind".into(), serde_json::to_value(self.kind).expect("kind"));
        doc.insert("title".into(), self.title.clone().into());
        let derived: Vec<Value> = self
            .columns
            .iter()
            .filter(|c| c.derived)
            .map(|c| c.name.clone().into())
            .collect();
        doc.insert("derived_columns".into(), derived.into());
        if let Some(p) = self.passed {
            doc.insert("passed".into(), p.into());
        }
        doc.insert("entries".into(), entries.into());
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.columns.iter().map(|c| c.name.as_str()))
            .expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(cell_text)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    /// Basis tables become an `align*` block of `label^n_m = field` lines
    /// followed by the norm table; everything else is a `tabular`.
    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        let col = |name: &str| self.columns.iter().position(|c| c.name == name);
        if let (ReportKind::BasisTable, Some(l), Some(n), Some(m), Some(f)) =
            (self.kind, col("label"), col("n"), col("m"), col("field"))
        {
            s.push_str("\\begin{align*}\n");
            for row in &self.rows {
                let _ = writeln!(
                    s,
                    "  {}^{{{}}}_{{{}}} &= {} \\\\",
                    latex_label(&cell_text(&row[l])),
                    cell_text(&row[n]),
                    cell_text(&row[m]),
                    latex_of_text(&cell_text(&row[f]))
                );
            }
            s.push_str("\\end{align*}\n");
        }
        let _ = writeln!(s, "% {}", self.title);
        let _ = writeln!(s, "\\begin{{tabular}}{{{}}}", "l".repeat(self.columns.len()));
        let header: Vec<String> = self.columns.iter().map(|c| latex_escape(&c.name)).collect();
        let _ = writeln!(s, "  {} \\\\ \\hline", header.join(" & "));
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|v| match v {
                    Value::String(t) => format!("${}$", latex_of_text(t)),
                    other => latex_escape(&cell_text(other)),
                })
                .collect();
            let _ = writeln!(s, "  {} \\\\", cells.join(" & "));
        }
        s.push_str("\\end{tabular}\n");
        s
    }
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_").replace('%', "\\%").replace('&', "\\&")
}

fn latex_label(label: &str) -> String {
    match label {
        "X+" => "X^{+}".into(),
        "X-" => "X^{-}".into(),
        "Y+" => "Y^{+}".into(),
        "Y-" => "Y^{-}".into(),
        "Z0" => "Z".into(),
        "Z+" => "Z^{+}".into(),
        "Z-" => "Z^{-}".into(),
        "U" => "\\hat U".into(),
        "V" => "\\hat V".into(),
        other => other.into(),
    }
}

/// Converts the ASCII rendering of polynomials and exact values
/// (`-1/2*x1^2*e1`, `8/15*pi`) into LaTeX math.
pub fn latex_of_text(text: &str) -> String {
    let mut out = String::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: String = chars[start..i].iter().collect();
            if i < chars.len() && chars[i] == '/' {
                let dstart = i + 1;
                let mut j = dstart;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let den: String = chars[dstart..j].iter().collect();
                let _ = write!(out, "\\tfrac{{{num}}}{{{den}}}");
                i = j;
            } else {
                out.push_str(&num);
            }
            continue;
        }
        match c {
            'x' | 'e' if i + 1 < chars.len() && chars[i + 1].is_ascii_digit() => {
                let _ = write!(out, "{c}_{}", chars[i + 1]);
                i += 2;
            }
            '^' => {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let exp: String = chars[start..j].iter().collect();
                let _ = write!(out, "^{{{exp}}}");
                i = j;
            }
            '*' => {
                out.push(' ');
                i += 1;
            }
            'p' if chars.get(i + 1) == Some(&'i') => {
                out.push_str("\\pi");
                i += 2;
            }
            _ => {
                out.push(c);
                i += 1;
            }
        }
    }
    out
}
