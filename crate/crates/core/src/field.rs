//! Polynomial vector fields: `R^3`-valued [`VecField`] and quaternion-valued
//! [`QuatField`].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::exact::{ball_inner, PiRational, Rational, TriPoly};

/// `f = f0 + f1 e1 + f2 e2` with polynomial components.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VecField {
    pub c: [TriPoly; 3],
}

/// `f = f0 + f1 e1 + f2 e2 + f3 e3` with polynomial components.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuatField {
    pub c: [TriPoly; 4],
}

impl VecField {
    pub fn new(c0: TriPoly, c1: TriPoly, c2: TriPoly) -> Self {
        Self { c: [c0, c1, c2] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `p * e_axis`.
    pub fn along(axis: usize, p: TriPoly) -> Self {
        let mut f = Self::zero();
        f.c[axis] = p;
        f
    }

    pub fn scalar(p: TriPoly) -> Self {
        Self::along(0, p)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(TriPoly::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            c: std::array::from_fn(|i| self.c[i].scale(k)),
        }
    }

    /// `<f, g> = \int_{B^3} (f0 g0 + f1 g1 + f2 g2) dV`.
    pub fn inner(&self, other: &VecField) -> PiRational {
        (0..3).map(|i| ball_inner(&self.c[i], &other.c[i])).sum()
    }

    pub fn norm_sq(&self) -> PiRational {
        self.inner(self)
    }

    pub fn laplacian(&self) -> VecField {
        Self {
            c: std::array::from_fn(|i| self.c[i].laplacian()),
        }
    }

    pub fn is_harmonic(&self) -> bool {
        self.laplacian().is_zero()
    }

    /// Checks harmonicity, returning the Laplacian residual on failure.
    pub fn require_harmonic(&self) -> crate::Result<()> {
        let lap = self.laplacian();
        if lap.is_zero() {
            Ok(())
        } else {
            Err(crate::Error::NotHarmonic {
                residual: lap.to_string(),
            })
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.c.iter().filter_map(TriPoly::degree).max()
    }

    pub fn is_homogeneous_of(&self, n: u32) -> bool {
        self.c.iter().all(|p| p.is_homogeneous_of(n))
    }

    pub fn homogeneous_part(&self, n: u32) -> VecField {
        Self {
            c: std::array::from_fn(|i| self.c[i].homogeneous_part(n)),
        }
    }

    /// Swaps `x1 <-> x2` in the arguments and `e1 <-> e2` in the values.
    pub fn star(&self) -> VecField {
        Self::new(
            self.c[0].swap_x1_x2(),
            self.c[2].swap_x1_x2(),
            self.c[1].swap_x1_x2(),
        )
    }

    pub fn eval_f64(&self, point: [f64; 3]) -> [f64; 3] {
        std::array::from_fn(|i| self.c[i].eval_f64(point))
    }

    pub fn eval(&self, point: &[Rational; 3]) -> [Rational; 3] {
        std::array::from_fn(|i| self.c[i].eval(point))
    }

    pub fn to_quat(&self) -> QuatField {
        QuatField {
            c: [
                self.c[0].clone(),
                self.c[1].clone(),
                self.c[2].clone(),
                TriPoly::zero(),
            ],
        }
    }
}

impl QuatField {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(p: TriPoly) -> Self {
        let mut f = Self::zero();
        f.c[0] = p;
        f
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(TriPoly::is_zero)
    }

    pub fn is_r3_valued(&self) -> bool {
        self.c[3].is_zero()
    }

    /// Drops to an `R^3`-valued field; `None` when the `e3` part is nonzero.
    pub fn to_vec_field(&self) -> Option<VecField> {
        self.is_r3_valued().then(|| {
            VecField::new(self.c[0].clone(), self.c[1].clone(), self.c[2].clone())
        })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            c: std::array::from_fn(|i| self.c[i].scale(k)),
        }
    }

    /// `Sc f = f0`.
    pub fn sc(&self) -> TriPoly {
        self.c[0].clone()
    }

    /// `Vec f`: all non-scalar components.
    pub fn vec(&self) -> QuatField {
        let mut out = self.clone();
        out.c[0] = TriPoly::zero();
        out
    }

    /// `conj f = Sc f - Vec f`.
    pub fn conj(&self) -> QuatField {
        QuatField {
            c: [
                self.c[0].clone(),
                -&self.c[1],
                -&self.c[2],
                -&self.c[3],
            ],
        }
    }

    /// `f*(x) = f0(x') + f2(x') e1 + f1(x') e2 - f3(x') e3`, `x' = (x0, x2, x1)`.
    pub fn star(&self) -> QuatField {
        QuatField {
            c: [
                self.c[0].swap_x1_x2(),
                self.c[2].swap_x1_x2(),
                self.c[1].swap_x1_x2(),
                -self.c[3].swap_x1_x2(),
            ],
        }
    }

    /// Real inner product `Sc \int conj(f) g dV` summed over all four parts.
    pub fn inner(&self, other: &QuatField) -> PiRational {
        (0..4).map(|i| ball_inner(&self.c[i], &other.c[i])).sum()
    }

    pub fn norm_sq(&self) -> PiRational {
        self.inner(self)
    }

    pub fn laplacian(&self) -> QuatField {
        Self {
            c: std::array::from_fn(|i| self.c[i].laplacian()),
        }
    }

    pub fn partial(&self, axis: usize) -> QuatField {
        Self {
            c: std::array::from_fn(|i| self.c[i].partial(axis)),
        }
    }

    pub fn is_homogeneous_of(&self, n: u32) -> bool {
        self.c.iter().all(|p| p.is_homogeneous_of(n))
    }
}

/// Product of quaternion units: `e_i e_j = sign * e_k`.
pub(crate) fn unit_product(i: usize, j: usize) -> (i8, usize) {
    match (i, j) {
        (0, k) | (k, 0) => (1, k),
        (a, b) if a == b => (-1, 0),
        (1, 2) => (1, 3),
        (2, 1) => (-1, 3),
        (2, 3) => (1, 1),
        (3, 2) => (-1, 1),
        (3, 1) => (1, 2),
        (1, 3) => (-1, 2),
        _ => unreachable!("quaternion unit index out of range"),
    }
}

macro_rules! componentwise {
    ($ty:ident, $n:expr) => {
        impl Add<&$ty> for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                $ty {
                    c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]),
                }
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub<&$ty> for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                $ty {
                    c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]),
                }
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty {
                    c: std::array::from_fn(|i| -&self.c[i]),
                }
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
        impl std::iter::Sum for $ty {
            fn sum<I: Iterator<Item = $ty>>(iter: I) -> $ty {
                iter.fold($ty::default(), |a, b| &a + &b)
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_components(f, &self.c[..$n])
            }
        }
    };
}

componentwise!(VecField, 3);
componentwise!(QuatField, 4);

/// Renders `p0 + p1*e1 + ...`, e.g. `x2*e1 - x1*e2`; multi-term components
/// are parenthesized.
fn write_components(f: &mut fmt::Formatter<'_>, comps: &[TriPoly]) -> fmt::Result {
    let mut first = true;
    for (i, p) in comps.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let text = p.to_string();
        let unit = if i == 0 { String::new() } else { format!("*e{i}") };
        if p.len() > 1 {
            if !first {
                f.write_str(" + ")?;
            }
            if i == 0 {
                write!(f, "{text}")?;
            } else {
                write!(f, "({text}){unit}")?;
            }
        } else if let Some(rest) = text.strip_prefix('-') {
            f.write_str(if first { "-" } else { " - " })?;
            write!(f, "{rest}{unit}")?;
        } else {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{text}{unit}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn x(i: usize) -> TriPoly {
        TriPoly::var(i)
    }

    #[test]
    fn display() {
        let z = VecField::new(TriPoly::zero(), x(2), -x(1));
        assert_eq!(z.to_string(), "x2*e1 - x1*e2");
        let f = VecField::new(x(0), x(1).scale(&rat(1, 2)), TriPoly::zero());
        assert_eq!(f.to_string(), "x0 + 1/2*x1*e1");
        assert_eq!(VecField::zero().to_string(), "0");
        let g = VecField::along(1, &x(0) + &x(1));
        assert_eq!(g.to_string(), "(x0 + x1)*e1");
    }

    #[test]
    fn disjoint_components_are_orthogonal() {
        let a = VecField::along(1, x(1));
        let b = VecField::along(2, x(2));
        assert!(a.inner(&b).is_zero());
        let c = VecField::along(1, x(2));
        assert_eq!(c.norm_sq(), PiRational(rat(4, 15)));
    }

    #[test]
    fn unit_table_is_associative() {
        let mul = |(s, k): (i8, usize), j: usize| {
            let (t, l) = unit_product(k, j);
            (s * t, l)
        };
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let left = mul(unit_product(i, j), k);
                    let (s, jk) = unit_product(j, k);
                    let (t, r) = unit_product(i, jk);
                    assert_eq!(left, (s * t, r));
                }
            }
        }
    }
}
