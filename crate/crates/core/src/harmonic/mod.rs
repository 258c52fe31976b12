//! Solid spherical harmonics `U^n_m`, `V^n_m` as exact cartesian polynomials,
//! normalized over the ball `B^3`.

mod legendre;

pub use legendre::{
    assoc_legendre, assoc_legendre_or_zero, legendre, legendre_coefficients,
    legendre_derivative_coefficients, legendre_identities, IdentityCheck,
};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{Monomial, PiRational, Rational, TriPoly};
use crate::field::VecField;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HarmonicKind {
    /// `r^n P_n^m(cos theta) cos(m phi)`
    U,
    /// `r^n P_n^m(cos theta) sin(m phi)`
    V,
}

impl fmt::Display for HarmonicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HarmonicKind::U => "U",
            HarmonicKind::V => "V",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolidHarmonic {
    pub kind: HarmonicKind,
    pub degree: u32,
    pub order: u32,
    pub poly: TriPoly,
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(n - j) / BigInt::from(j + 1))
}

/// `Re (x1 + i x2)^m` or `Im (x1 + i x2)^m`.
fn planar_power(kind: HarmonicKind, m: u32) -> TriPoly {
    let mut out = TriPoly::zero();
    for j in 0..=m {
        let wanted = match kind {
            HarmonicKind::U => j % 2 == 0,
            HarmonicKind::V => j % 2 == 1,
        };
        if !wanted {
            continue;
        }
        // i^j = (-1)^(j/2) for even j, i (-1)^((j-1)/2) for odd j
        let mut c = binomial(m, j);
        if (j / 2) % 2 == 1 {
            c = -c;
        }
        out.add_term(Monomial([0, m - j, j]), Rational::from_integer(c));
    }
    out
}

/// Cartesian form with the zero convention: returns `0` for `m > n`,
/// negative indices, and `V` at `m = 0`.
pub fn uv_poly(kind: HarmonicKind, n: i64, m: i64) -> TriPoly {
    if n < 0 || m < 0 || m > n || (kind == HarmonicKind::V && m == 0) {
        return TriPoly::zero();
    }
    let (n, m) = (n as u32, m as u32);
    // r^(n-m) pi_{n,m}(x0 / r) where pi_{n,m} = d^m P_n has parity n - m,
    // so it is a polynomial in x0 and r^2.
    let derivative = legendre_derivative_coefficients(n, m);
    let r2 = TriPoly::r_squared();
    let mut radial = TriPoly::zero();
    let mut r2_pow = TriPoly::one();
    let top = n - m;
    for k in 0..=top / 2 {
        let c = &derivative[(top - 2 * k) as usize];
        if !c.is_zero() {
            let x0_pow = TriPoly::monomial(top - 2 * k, 0, 0);
            radial += &(&x0_pow * &r2_pow).scale(c);
        }
        r2_pow = &r2_pow * &r2;
    }
    &radial * &planar_power(kind, m)
}

/// `U^n_m` (`0 <= m`) or `V^n_m` (`1 <= m`); orders `m > n` give the zero
/// harmonic.
pub fn solid_harmonic(kind: HarmonicKind, n: u32, m: u32) -> Result<SolidHarmonic> {
    if kind == HarmonicKind::V && m == 0 {
        return Err(Error::InvalidIndex(format!("V^{n}_0 does not exist")));
    }
    Ok(SolidHarmonic {
        kind,
        degree: n,
        order: m,
        poly: uv_poly(kind, n as i64, m as i64),
    })
}

/// The `2n + 1` harmonics of degree `n`: `U_0..U_n`, then `V_1..V_n`.
pub fn harmonic_basis(n: u32) -> Vec<SolidHarmonic> {
    let us = (0..=n).map(|m| (HarmonicKind::U, m));
    let vs = (1..=n).map(|m| (HarmonicKind::V, m));
    us.chain(vs)
        .map(|(kind, m)| SolidHarmonic {
            kind,
            degree: n,
            order: m,
            poly: uv_poly(kind, n as i64, m as i64),
        })
        .collect()
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

pub(crate) fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Squared `L2(B^3)` norm of `U^n_m` / `V^n_m`:
/// `4 pi / ((2n+1)(2n+3))` at `m = 0`, else
/// `2 pi (n+m)! / ((2n+1)(2n+3)(n-m)!)`.
pub fn uv_norm(kind: HarmonicKind, n: u32, m: u32) -> Result<PiRational> {
    if m > n || (kind == HarmonicKind::V && m == 0) {
        return Err(Error::InvalidIndex(format!("{kind}^{n}_{m}")));
    }
    let base = int((2 * n as i64 + 1) * (2 * n as i64 + 3));
    let q = if m == 0 {
        int(4) / base
    } else {
        Rational::from_integer(BigInt::from(2) * factorial(n + m)) / (base * Rational::from_integer(factorial(n - m)))
    };
    Ok(PiRational(q))
}

/// Scalar inner product over the ball, treating polynomials as `e0`-fields.
pub fn scalar_inner(p: &TriPoly, q: &TriPoly) -> PiRational {
    crate::exact::ball_inner(p, q)
}

/// `<f, g>` over `B^3` for vector fields.
pub fn inner_product(f: &VecField, g: &VecField) -> PiRational {
    f.inner(g)
}

/// Builds every harmonic of degree `n`, checks pairwise orthogonality and
/// harmonicity, and returns the count `2n + 1`.
pub fn harmonic_dim_check(n: u32) -> Result<usize> {
    let basis = harmonic_basis(n);
    for h in &basis {
        if !h.poly.is_harmonic() || !h.poly.is_homogeneous_of(n) || h.poly.is_zero() {
            return Err(Error::NotHarmonic {
                residual: h.poly.laplacian().to_string(),
            });
        }
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            let ip = scalar_inner(&a.poly, &b.poly);
            if !ip.is_zero() {
                return Err(Error::InvalidIndex(format!(
                    "{}^{}_{} and {}^{}_{} not orthogonal: {ip}",
                    a.kind, n, a.order, b.kind, n, b.order
                )));
            }
        }
    }
    Ok(basis.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn x(i: usize) -> TriPoly {
        TriPoly::var(i)
    }

    #[test]
    fn low_degree_harmonics() {
        use HarmonicKind::*;
        assert_eq!(solid_harmonic(U, 0, 0).unwrap().poly, TriPoly::one());
        assert_eq!(solid_harmonic(U, 1, 1).unwrap().poly, x(1));
        assert_eq!(solid_harmonic(V, 1, 1).unwrap().poly, x(2));
        assert_eq!(solid_harmonic(U, 1, 0).unwrap().poly, x(0));
        let u20 = solid_harmonic(U, 2, 0).unwrap().poly;
        assert_eq!(u20.to_string(), "x0^2 - 1/2*x1^2 - 1/2*x2^2");
        assert_eq!(
            solid_harmonic(U, 2, 1).unwrap().poly,
            TriPoly::monomial(1, 1, 0).scale(&rat(3, 1))
        );
        assert!(solid_harmonic(V, 2, 0).is_err());
        assert!(solid_harmonic(U, 2, 3).unwrap().poly.is_zero());
    }

    #[test]
    fn matches_spherical_definition() {
        // compare r^n P_n^m(cos theta) cos/sin(m phi) at sample points
        let pts: [(f64, f64, f64); 3] = [(0.3, 0.7, 1.1), (0.9, 2.5, -0.4), (0.5, 1.3, 3.0)];
        for n in 0..=6u32 {
            for h in harmonic_basis(n) {
                let p = assoc_legendre(n, h.order).unwrap();
                for &(r, theta, phi) in &pts {
                    let (st, ct) = f64::sin_cos(theta);
                    let point = [r * ct, r * st * phi.cos(), r * st * phi.sin()];
                    let ang = match h.kind {
                        HarmonicKind::U => (h.order as f64 * phi).cos(),
                        HarmonicKind::V => (h.order as f64 * phi).sin(),
                    };
                    let expected = r.powi(n as i32) * p.eval_f64(ct) * ang;
                    let got = h.poly.eval_f64(point);
                    assert!((got - expected).abs() < 1e-9 * (1.0 + expected.abs()), "{n} {h:?}");
                }
            }
        }
    }

    #[test]
    fn harmonic_and_homogeneous_through_12() {
        for n in 0..=12 {
            for h in harmonic_basis(n) {
                assert!(h.poly.is_harmonic(), "{} {n} {}", h.kind, h.order);
                assert!(h.poly.is_homogeneous_of(n));
            }
        }
    }

    #[test]
    fn norm_examples() {
        use HarmonicKind::*;
        assert_eq!(uv_norm(U, 1, 0).unwrap(), PiRational(rat(4, 15)));
        assert_eq!(uv_norm(U, 2, 1).unwrap(), PiRational(rat(12, 35)));
        assert_eq!(uv_norm(V, 1, 1).unwrap(), PiRational(rat(4, 15)));
        let u10 = VecField::scalar(x(0));
        assert_eq!(inner_product(&u10, &u10), PiRational(rat(4, 15)));
        let a = VecField::along(1, x(1));
        let b = VecField::along(2, x(2));
        assert!(inner_product(&a, &b).is_zero());
    }

    #[test]
    fn norms_match_inner_products_through_12() {
        for n in 0..=12 {
            for h in harmonic_basis(n) {
                assert_eq!(
                    scalar_inner(&h.poly, &h.poly),
                    uv_norm(h.kind, n, h.order).unwrap(),
                    "{} {n} {}",
                    h.kind,
                    h.order
                );
            }
        }
    }

    #[test]
    fn dimension_counts() {
        assert_eq!(harmonic_dim_check(0).unwrap(), 1);
        assert_eq!(harmonic_dim_check(1).unwrap(), 3);
        assert_eq!(harmonic_dim_check(5).unwrap(), 11);
    }

    #[test]
    fn orthogonal_within_degree_through_12() {
        for n in 0..=12 {
            assert_eq!(harmonic_dim_check(n).unwrap(), 2 * n as usize + 1);
        }
    }

    #[test]
    fn cross_degree_orthogonality() {
        let a = harmonic_basis(3);
        let b = harmonic_basis(5);
        for h in a.iter().step_by(2) {
            for g in b.iter().step_by(3) {
                assert!(scalar_inner(&h.poly, &g.poly).is_zero());
            }
        }
    }
}
