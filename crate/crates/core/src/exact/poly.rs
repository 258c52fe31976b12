use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;

/// Exponent triple `x0^a x1^b x2^c`.
///
/// Ordered graded-lex: total degree first, then lexicographically on
/// `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// Parity class, used to skip pairs whose product integrates to zero.
    pub(crate) fn parity(&self) -> usize {
        ((self.0[0] & 1) | ((self.0[1] & 1) << 1) | ((self.0[2] & 1) << 2)) as usize
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x0, x1, x2` with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TriPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl TriPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The coordinate function `x_axis`.
    pub fn var(axis: usize) -> Self {
        let mut e = [0; 3];
        e[axis] = 1;
        Self::term(Monomial(e), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(a: u32, b: u32, c: u32) -> Self {
        Self::term(Monomial([a, b, c]), Rational::one())
    }

    /// `x0^2 + x1^2 + x2^2`.
    pub fn r_squared() -> Self {
        Self::monomial(2, 0, 0) + Self::monomial(0, 2, 0) + Self::monomial(0, 0, 2)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// True when every term has total degree `n` (the zero polynomial
    /// counts as homogeneous of every degree).
    pub fn is_homogeneous_of(&self, n: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == n)
    }

    pub fn homogeneous_part(&self, n: u32) -> TriPoly {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == n)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Nonzero homogeneous components keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, TriPoly> {
        let mut out: BTreeMap<u32, TriPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_default()
                .terms
                .insert(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> TriPoly {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn partial(&self, axis: usize) -> TriPoly {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.0[axis];
            if e == 0 {
                continue;
            }
            let mut d = m.0;
            d[axis] -= 1;
            out.terms.insert(Monomial(d), c * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn laplacian(&self) -> TriPoly {
        let mut out = Self::zero();
        for axis in 0..3 {
            out += &self.partial(axis).partial(axis);
        }
        out
    }

    pub fn is_harmonic(&self) -> bool {
        self.laplacian().is_zero()
    }

    /// Substitutes `(x0, x1, x2) -> (x0, x2, x1)`.
    pub fn swap_x1_x2(&self) -> TriPoly {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial([m.0[0], m.0[2], m.0[1]]), c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += v;
        }
        acc
    }

    /// IEEE double evaluation; coefficients are rounded to `f64` first.
    pub fn eval_f64(&self, point: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                rational_to_f64(c)
                    * point[0].powi(m.0[0] as i32)
                    * point[1].powi(m.0[1] as i32)
                    * point[2].powi(m.0[2] as i32)
            })
            .sum()
    }

    /// Clears denominators: returns integer coefficients and the common
    /// denominator `d` with `self = terms / d`.
    pub fn integer_form(&self) -> (Vec<(Monomial, BigInt)>, BigInt) {
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.numer() * (&den / c.denom())))
            .collect();
        (terms, den)
    }

    /// Coefficient vector against an ordered list of monomials; terms not in
    /// the list are ignored.
    pub fn coefficient_vector(&self, monomials: &[Monomial]) -> Vec<Rational> {
        monomials.iter().map(|m| self.coeff(*m)).collect()
    }
}

/// All monomials of total degree `n`, in ascending graded-lex order.
pub fn monomials_of_degree(n: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=(n - a) {
            out.push(Monomial([a, b, n - a - b]));
        }
    }
    out.sort();
    out
}

pub fn rational_to_f64(c: &Rational) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

impl Add<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TriPoly {
    type Output = TriPoly;
    fn add(mut self, rhs: TriPoly) -> TriPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&TriPoly> for TriPoly {
    fn add_assign(&mut self, rhs: &TriPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&TriPoly> for TriPoly {
    fn sub_assign(&mut self, rhs: &TriPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Sub<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for TriPoly {
    type Output = TriPoly;
    fn sub(mut self, rhs: TriPoly) -> TriPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        TriPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        -&self
    }
}

impl Mul<&TriPoly> for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(*mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: TriPoly) -> TriPoly {
        &self * &rhs
    }
}

impl fmt::Display for TriPoly {
    /// Canonical text: descending graded-lex, e.g. `x0^2 - 1/2*x1^2 - 1/2*x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            for (axis, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{axis}")),
                    _ => factors.push(format!("x{axis}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
