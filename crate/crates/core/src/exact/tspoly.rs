use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::rational::Rational;

/// Dense univariate polynomial in `t`, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct UPoly(Vec<Rational>);

impl UPoly {
    fn trimmed(mut v: Vec<Rational>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        UPoly(v)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn coeff(&self, k: usize) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    fn add(&self, other: &UPoly) -> UPoly {
        let len = self.0.len().max(other.0.len());
        UPoly::trimmed((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::default();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::trimmed(out)
    }

    fn scale(&self, k: &Rational) -> UPoly {
        UPoly::trimmed(self.0.iter().map(|c| c * k).collect())
    }

    /// Multiplication by `t`.
    fn shift(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::default();
        }
        let mut v = vec![Rational::zero()];
        v.extend(self.0.iter().cloned());
        UPoly(v)
    }

    fn derivative(&self) -> UPoly {
        UPoly::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer((k as i64).into()))
                .collect(),
        )
    }

    /// `1 - t^2`.
    fn one_minus_t2() -> UPoly {
        UPoly(vec![Rational::one(), Rational::zero(), -Rational::one()])
    }

    /// Exact quotient by `1 - t^2`, or `None` when it does not divide.
    fn div_one_minus_t2(&self) -> Option<UPoly> {
        if self.is_zero() {
            return Some(UPoly::default());
        }
        if self.0.len() < 3 {
            return None;
        }
        // Long division by -t^2 + 1 from the top.
        let mut rem = self.0.clone();
        let mut quot = vec![Rational::zero(); rem.len() - 2];
        for k in (2..rem.len()).rev() {
            let q = -rem[k].clone();
            rem[k] = Rational::zero();
            rem[k - 2] -= &q;
            quot[k - 2] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(UPoly::trimmed(quot))
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TsError {
    #[error("d/dt leaves a negative power of s: odd part not divisible by 1 - t^2")]
    NonNormalizable,
}

/// Element of `Q[t, s] / (s^2 - (1 - t^2))`, stored as `even(t) + s * odd(t)`.
///
/// With `t = cos(theta)` and `s = sin(theta) = (1 - t^2)^(1/2)` this holds the
/// associated Legendre functions exactly; `s^2` never survives normalization.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TsPoly {
    even: UPoly,
    odd: UPoly,
}

impl TsPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self {
            even: UPoly::trimmed(vec![c]),
            odd: UPoly::default(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn t() -> Self {
        Self {
            even: UPoly(vec![Rational::zero(), Rational::one()]),
            odd: UPoly::default(),
        }
    }

    pub fn s() -> Self {
        Self {
            even: UPoly::default(),
            odd: UPoly(vec![Rational::one()]),
        }
    }

    /// Builds `even(t) + s * odd(t)` from ascending coefficient lists.
    pub fn from_parts(even: Vec<Rational>, odd: Vec<Rational>) -> Self {
        Self {
            even: UPoly::trimmed(even),
            odd: UPoly::trimmed(odd),
        }
    }

    /// Ascending coefficients of the `s^0` part.
    pub fn even_part(&self) -> &[Rational] {
        &self.even.0
    }

    /// Ascending coefficients of the `s^1` part.
    pub fn odd_part(&self) -> &[Rational] {
        &self.odd.0
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            even: self.even.scale(k),
            odd: self.odd.scale(k),
        }
    }

    /// Multiplication by `s`.
    pub fn mul_s(&self) -> Self {
        Self {
            even: self.odd.mul(&UPoly::one_minus_t2()),
            odd: self.even.clone(),
        }
    }

    /// Multiplication by `t`.
    pub fn mul_t(&self) -> Self {
        Self {
            even: self.even.shift(),
            odd: self.odd.shift(),
        }
    }

    pub fn pow_s(k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul_s())
    }

    /// `s * d/dt`, which is closed on the ring because `s * ds/dt = -t`.
    pub fn s_diff_t(&self) -> Self {
        // s (E' + s O' - (t/s) O) = s E' + (1 - t^2) O' - t O
        Self {
            even: self
                .odd
                .derivative()
                .mul(&UPoly::one_minus_t2())
                .sub(&self.odd.shift()),
            odd: self.even.derivative(),
        }
    }

    /// `d/dt`, defined when `1 - t^2` divides the odd part.
    pub fn diff_t(&self) -> Result<Self, TsError> {
        // d/dt (E + s O) = E' + s (O' - t O / (1 - t^2))
        let tail = self
            .odd
            .shift()
            .div_one_minus_t2()
            .ok_or(TsError::NonNormalizable)?;
        Ok(Self {
            even: self.even.derivative(),
            odd: self.odd.derivative().sub(&tail),
        })
    }

    /// Evaluation at `t = cos(theta)`, `s = sin(theta)` for `theta` in `[0, pi]`.
    pub fn eval_f64(&self, t: f64) -> f64 {
        let s = (1.0 - t * t).max(0.0).sqrt();
        let horner = |p: &UPoly| {
            p.0.iter()
                .rev()
                .fold(0.0, |acc, c| acc * t + super::poly::rational_to_f64(c))
        };
        horner(&self.even) + s * horner(&self.odd)
    }
}

impl Add<&TsPoly> for &TsPoly {
    type Output = TsPoly;
    fn add(self, rhs: &TsPoly) -> TsPoly {
        TsPoly {
            even: self.even.add(&rhs.even),
            odd: self.odd.add(&rhs.odd),
        }
    }
}

impl Sub<&TsPoly> for &TsPoly {
    type Output = TsPoly;
    fn sub(self, rhs: &TsPoly) -> TsPoly {
        TsPoly {
            even: self.even.sub(&rhs.even),
            odd: self.odd.sub(&rhs.odd),
        }
    }
}

impl Neg for &TsPoly {
    type Output = TsPoly;
    fn neg(self) -> TsPoly {
        TsPoly {
            even: self.even.neg(),
            odd: self.odd.neg(),
        }
    }
}

impl Mul<&TsPoly> for &TsPoly {
    type Output = TsPoly;
    fn mul(self, rhs: &TsPoly) -> TsPoly {
        // (E1 + s O1)(E2 + s O2) = E1 E2 + (1 - t^2) O1 O2 + s (E1 O2 + O1 E2)
        TsPoly {
            even: self
                .even
                .mul(&rhs.even)
                .add(&self.odd.mul(&rhs.odd).mul(&UPoly::one_minus_t2())),
            odd: self.even.mul(&rhs.odd).add(&self.odd.mul(&rhs.even)),
        }
    }
}

impl fmt::Display for TsPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (s_pow, p) in [(0, &self.even), (1, &self.odd)] {
            for (k, c) in p.0.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let mut factors = Vec::new();
                match k {
                    0 => {}
                    1 => factors.push("t".to_string()),
                    _ => factors.push(format!("t^{k}")),
                }
                if s_pow == 1 {
                    factors.push("s".to_string());
                }
                let abs = c.abs();
                let body = if factors.is_empty() {
                    abs.to_string()
                } else if abs.is_one() {
                    factors.join("*")
                } else {
                    format!("{abs}*{}", factors.join("*"))
                };
                parts.push((c.is_negative(), body));
            }
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (i, (neg, body)) in parts.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn poly(even: &[i64], odd: &[i64]) -> TsPoly {
        TsPoly::from_parts(
            even.iter().map(|&c| rat(c, 1)).collect(),
            odd.iter().map(|&c| rat(c, 1)).collect(),
        )
    }

    #[test]
    fn s_squared_rewrites() {
        assert_eq!(&TsPoly::s() * &TsPoly::s(), poly(&[1, 0, -1], &[]));
    }

    #[test]
    fn diff_of_t_squared() {
        assert_eq!(poly(&[0, 0, 1], &[]).diff_t().unwrap(), poly(&[0, 2], &[]));
    }

    #[test]
    fn one_minus_t2_times_dp2() {
        let p2 = TsPoly::from_parts(vec![rat(-1, 2), rat(0, 1), rat(3, 2)], vec![]);
        let lhs = &poly(&[1, 0, -1], &[]) * &p2.diff_t().unwrap();
        assert_eq!(lhs, poly(&[0, 3, 0, -3], &[]));
    }

    #[test]
    fn diff_of_s_is_rejected() {
        // d/dt s = -t/s has no polynomial form
        assert_eq!(TsPoly::s().diff_t(), Err(TsError::NonNormalizable));
        // but s^3 differentiates: d/dt s^3 = -3 t s
        let s3 = TsPoly::pow_s(3);
        assert_eq!(s3.diff_t().unwrap(), poly(&[], &[0, -3]));
    }

    #[test]
    fn s_diff_t_of_s() {
        // s * d/dt s = -t
        assert_eq!(TsPoly::s().s_diff_t(), poly(&[0, -1], &[]));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[1, 0, -3], &[0, 2]).to_string(), "-3*t^2 + 1 + 2*t*s");
        assert_eq!(TsPoly::zero().to_string(), "0");
    }

    fn arb_ts() -> impl Strategy<Value = TsPoly> {
        (
            prop::collection::vec(-5i64..6, 0..4),
            prop::collection::vec(-5i64..6, 0..4),
        )
            .prop_map(|(e, o)| poly(&e, &o))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_ts(), b in arb_ts(), c in arb_ts()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn s_diff_t_matches_float_derivative(a in arb_ts(), t in -0.9f64..0.9) {
            let h = 1e-6;
            let fd = (a.eval_f64(t + h) - a.eval_f64(t - h)) / (2.0 * h);
            let s = (1.0 - t * t).sqrt();
            let exact = a.s_diff_t().eval_f64(t);
            prop_assert!((exact - s * fd).abs() < 1e-5 * (1.0 + exact.abs()));
        }
    }
}
