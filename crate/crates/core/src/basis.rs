//! Labels naming every basis family, and lookup of a labeled element.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ambigenic::{ambigenic_element, contragenic_element, AmbiKind, ZLabel};
use crate::field::QuatField;
use crate::harmonic::{solid_harmonic, HarmonicKind};
use crate::monogenic::{monogenic, MonoKind};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum BasisLabel {
    U,
    V,
    X,
    Y,
    XPlus,
    XMinus,
    YPlus,
    YMinus,
    Z0,
    ZPlus,
    ZMinus,
}

impl BasisLabel {
    pub const ALL: [BasisLabel; 11] = [
        BasisLabel::U,
        BasisLabel::V,
        BasisLabel::X,
        BasisLabel::Y,
        BasisLabel::XPlus,
        BasisLabel::XMinus,
        BasisLabel::YPlus,
        BasisLabel::YMinus,
        BasisLabel::Z0,
        BasisLabel::ZPlus,
        BasisLabel::ZMinus,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BasisLabel::U => "U",
            BasisLabel::V => "V",
            BasisLabel::X => "X",
            BasisLabel::Y => "Y",
            BasisLabel::XPlus => "X+",
            BasisLabel::XMinus => "X-",
            BasisLabel::YPlus => "Y+",
            BasisLabel::YMinus => "Y-",
            BasisLabel::Z0 => "Z0",
            BasisLabel::ZPlus => "Z+",
            BasisLabel::ZMinus => "Z-",
        }
    }

    pub fn from_ambi(kind: AmbiKind) -> Self {
        match kind {
            AmbiKind::XPlus => BasisLabel::XPlus,
            AmbiKind::XMinus => BasisLabel::XMinus,
            AmbiKind::YPlus => BasisLabel::YPlus,
            AmbiKind::YMinus => BasisLabel::YMinus,
        }
    }

    pub fn from_z(label: ZLabel) -> Self {
        match label {
            ZLabel::Z0 => BasisLabel::Z0,
            ZLabel::ZPlus => BasisLabel::ZPlus,
            ZLabel::ZMinus => BasisLabel::ZMinus,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BasisLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // accept the typographic minus as well
        let s = s.trim().replace('\u{2212}', "-");
        BasisLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown basis label {s:?}")))
    }
}

impl TryFrom<String> for BasisLabel {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BasisLabel> for String {
    fn from(l: BasisLabel) -> String {
        l.as_str().to_string()
    }
}

/// The element `label^n_m`. `U`/`V` come back as scalar fields; `Z0` takes
/// `m = 0`. Out-of-range indices are rejected rather than mapped to zero.
pub fn basis_element(label: BasisLabel, n: u32, m: u32) -> Result<QuatField> {
    let bad = || Error::InvalidIndex(format!("{label}^{n}_{m}"));
    match label {
        BasisLabel::U | BasisLabel::V => {
            let kind = if label == BasisLabel::U {
                HarmonicKind::U
            } else {
                HarmonicKind::V
            };
            if m > n {
                return Err(bad());
            }
            Ok(QuatField::scalar(solid_harmonic(kind, n, m)?.poly))
        }
        BasisLabel::X => Ok(monogenic(MonoKind::X, n, m)?.field),
        BasisLabel::Y => Ok(monogenic(MonoKind::Y, n, m)?.field),
        BasisLabel::XPlus => Ok(ambigenic_element(AmbiKind::XPlus, n, m)?.field),
        BasisLabel::XMinus => Ok(ambigenic_element(AmbiKind::XMinus, n, m)?.field),
        BasisLabel::YPlus => Ok(ambigenic_element(AmbiKind::YPlus, n, m)?.field),
        BasisLabel::YMinus => Ok(ambigenic_element(AmbiKind::YMinus, n, m)?.field),
        BasisLabel::Z0 | BasisLabel::ZPlus | BasisLabel::ZMinus => {
            let z = match label {
                BasisLabel::Z0 => ZLabel::Z0,
                BasisLabel::ZPlus => ZLabel::ZPlus,
                _ => ZLabel::ZMinus,
            };
            Ok(contragenic_element(z, n, m)?.field.to_quat())
        }
    }
}
