use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{rational_to_f64, Monomial, TriPoly};
use super::rational::Rational;

/// Exact value `q * pi`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PiRational(pub Rational);

impl PiRational {
    pub fn zero() -> Self {
        Self(Rational::zero())
    }

    pub fn new(q: Rational) -> Self {
        Self(q)
    }

    /// The rational `q` in `q * pi`.
    pub fn coefficient(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.0) * std::f64::consts::PI
    }

    /// Parses the `"q*pi"` rendering (or a bare `"0"`).
    pub fn parse(text: &str) -> Result<Self, crate::Error> {
        let t = text.trim();
        match t.strip_suffix("*pi") {
            Some(q) => Ok(Self(super::parse_rational(q)?)),
            None if t == "0" => Ok(Self::zero()),
            None => Err(crate::Error::Parse(format!("expected q*pi, got {t:?}"))),
        }
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "{}*pi", self.0)
        }
    }
}

impl Serialize for PiRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PiRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        PiRational::parse(&text).map_err(serde::de::Error::custom)
    }
}

impl Add for PiRational {
    type Output = PiRational;
    fn add(self, rhs: PiRational) -> PiRational {
        PiRational(self.0 + rhs.0)
    }
}

impl Add<&PiRational> for &PiRational {
    type Output = PiRational;
    fn add(self, rhs: &PiRational) -> PiRational {
        PiRational(&self.0 + &rhs.0)
    }
}

impl AddAssign<&PiRational> for PiRational {
    fn add_assign(&mut self, rhs: &PiRational) {
        self.0 += &rhs.0;
    }
}

impl Sub for PiRational {
    type Output = PiRational;
    fn sub(self, rhs: PiRational) -> PiRational {
        PiRational(self.0 - rhs.0)
    }
}

impl Sub<&PiRational> for &PiRational {
    type Output = PiRational;
    fn sub(self, rhs: &PiRational) -> PiRational {
        PiRational(&self.0 - &rhs.0)
    }
}

impl Neg for PiRational {
    type Output = PiRational;
    fn neg(self) -> PiRational {
        PiRational(-self.0)
    }
}

impl Mul<&Rational> for &PiRational {
    type Output = PiRational;
    fn mul(self, rhs: &Rational) -> PiRational {
        PiRational(&self.0 * rhs)
    }
}

impl Mul<Rational> for PiRational {
    type Output = PiRational;
    fn mul(self, rhs: Rational) -> PiRational {
        PiRational(self.0 * rhs)
    }
}

/// `(q1 * pi) / (q2 * pi)` is rational. Panics on division by zero.
impl Div<&PiRational> for &PiRational {
    type Output = Rational;
    fn div(self, rhs: &PiRational) -> Rational {
        &self.0 / &rhs.0
    }
}

impl Sum for PiRational {
    fn sum<I: Iterator<Item = PiRational>>(iter: I) -> PiRational {
        iter.fold(PiRational::zero(), |a, b| a + b)
    }
}

/// `(2k - 1)!!` for `k = 0, 1, ...`, cached for small `k`.
fn odd_double_factorial(k: u32) -> BigInt {
    const CACHED: u32 = 96;
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut v = Vec::with_capacity(CACHED as usize);
        let mut acc = BigInt::one();
        v.push(acc.clone());
        for j in 1..CACHED {
            acc *= BigInt::from(2 * j - 1);
            v.push(acc.clone());
        }
        v
    });
    match table.get(k as usize) {
        Some(v) => v.clone(),
        None => (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(2 * j - 1)),
    }
}

/// `(a-1)!! (b-1)!! (c-1)!!` for even exponents; the angular weight shared by
/// the sphere and ball formulas.
fn angular_weight(m: Monomial) -> BigInt {
    odd_double_factorial(m.0[0] / 2) * odd_double_factorial(m.0[1] / 2) * odd_double_factorial(m.0[2] / 2)
}

fn all_even(a: u32, b: u32, c: u32) -> bool {
    a.is_multiple_of(2) && b.is_multiple_of(2) && c.is_multiple_of(2)
}

/// `\int_{S^2} x0^a x1^b x2^c d\sigma`
/// `= 4 pi (a-1)!! (b-1)!! (c-1)!! / (a+b+c+1)!!` for even exponents, else 0.
pub fn sphere_monomial_integral(a: u32, b: u32, c: u32) -> PiRational {
    if !all_even(a, b, c) {
        return PiRational::zero();
    }
    let d = a + b + c;
    let num = angular_weight(Monomial([a, b, c])) * BigInt::from(4);
    PiRational(Rational::new(num, odd_double_factorial(d / 2 + 1)))
}

/// `\int_{B^3} x0^a x1^b x2^c dV`: the sphere value times `1 / (a+b+c+3)`.
pub fn ball_monomial_integral(a: u32, b: u32, c: u32) -> PiRational {
    let sphere = sphere_monomial_integral(a, b, c);
    let radial = Rational::new(BigInt::one(), BigInt::from(a + b + c + 3));
    sphere * radial
}

impl TriPoly {
    /// `\int_{B^3} p dV`.
    pub fn ball_integral(&self) -> PiRational {
        self.terms()
            .map(|(m, c)| ball_monomial_integral(m.0[0], m.0[1], m.0[2]) * c.clone())
            .sum()
    }

    /// `\int_{S^2} p d\sigma`.
    pub fn sphere_integral(&self) -> PiRational {
        self.terms()
            .map(|(m, c)| sphere_monomial_integral(m.0[0], m.0[1], m.0[2]) * c.clone())
            .sum()
    }
}

/// `\int_{B^3} p q dV` without forming the product polynomial.
///
/// Coefficients are cleared to integers, terms are bucketed by exponent
/// parity so only pairs with an even product are visited, and the
/// degree-dependent factor `4 / ((d + 3)(d + 1)!!)` is applied once per
/// total degree.
pub fn ball_inner(p: &TriPoly, q: &TriPoly) -> PiRational {
    if p.is_zero() || q.is_zero() {
        return PiRational::zero();
    }
    let (pt, pd) = p.integer_form();
    let (qt, qd) = q.integer_form();
    let mut buckets: [Vec<&(Monomial, BigInt)>; 8] = Default::default();
    for t in &qt {
        buckets[t.0.parity()].push(t);
    }
    let mut by_degree: Vec<BigInt> = Vec::new();
    for (mp, cp) in &pt {
        for (mq, cq) in &buckets[mp.parity()] {
            let m = Monomial([mp.0[0] + mq.0[0], mp.0[1] + mq.0[1], mp.0[2] + mq.0[2]]);
            let d = m.degree() as usize / 2;
            if by_degree.len() <= d {
                by_degree.resize(d + 1, BigInt::zero());
            }
            by_degree[d] += cp * cq * angular_weight(m);
        }
    }
    let mut total = Rational::zero();
    for (half, sum) in by_degree.into_iter().enumerate() {
        if sum.is_zero() {
            continue;
        }
        let d = 2 * half as u32;
        let den = BigInt::from(d + 3) * odd_double_factorial(half as u32 + 1);
        total += Rational::new(sum * BigInt::from(4), den);
    }
    PiRational(total / Rational::from_integer(pd * qd))
}
