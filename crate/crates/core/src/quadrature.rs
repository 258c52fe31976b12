//! Floating-point quadrature over `B^3`, an independent oracle for the exact
//! inner products.
//!
//! Spherical coordinates `x0 = r t`, `x1 = r s cos(phi)`, `x2 = r s sin(phi)`
//! with Gauss-Legendre in `r` and `t = cos(theta)` and the trapezoid rule in
//! `phi`.

use num_bigint::BigInt;
use num_traits::{FromPrimitive, ToPrimitive};
use serde::Serialize;
use twofloat::{consts, TwoFloat};

use crate::exact::{PiRational, Rational, TriPoly};
use crate::field::VecField;

/// Nodes and weights of the `k`-point Gauss-Legendre rule on `[-1, 1]`,
/// rounded to `f64`.
pub fn gauss_legendre(k: usize) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre_dd(k);
    (x.iter().map(TwoFloat::hi).collect(), w.iter().map(TwoFloat::hi).collect())
}

/// The same rule in double-double precision.
fn gauss_legendre_dd(k: usize) -> (Vec<TwoFloat>, Vec<TwoFloat>) {
    let mut nodes = vec![TwoFloat::from(0.0); k];
    let mut weights = nodes.clone();
    for i in 0..k.div_ceil(2) {
        // Chebyshev-type initial guess, then Newton on P_k
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (k as f64 + 0.5)).cos();
        let mut x = TwoFloat::from(guess);
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(k, x);
            let step = dd_div(p, d);
            x -= step;
            if step.abs() < 1e-31 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(k, x);
        let w = dd_div(TwoFloat::from(2.0), (1.0 - x * x) * d * d);
        let w = if w.hi().is_finite() { w } else { TwoFloat::from(2.0) };
        nodes[i] = -x;
        nodes[k - 1 - i] = x;
        weights[i] = w;
        weights[k - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(k: usize, x: TwoFloat) -> (TwoFloat, TwoFloat) {
    if k == 0 {
        return (TwoFloat::from(1.0), TwoFloat::from(0.0));
    }
    let (mut p0, mut p1) = (TwoFloat::from(1.0), x);
    for j in 2..=k {
        let j = j as f64;
        let p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
    }
    let d = dd_div(k as f64 * (x * p1 - p0), x * x - 1.0);
    (p1, d)
}

/// Node counts of the product rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuadOrder {
    pub radial: usize,
    pub polar: usize,
    pub azimuthal: usize,
}

impl QuadOrder {
    /// Smallest counts that integrate polynomials of total degree `deg`
    /// exactly (up to rounding).
    pub fn sufficient(deg: u32) -> Self {
        let d = deg as usize;
        Self {
            radial: (d + 3).div_ceil(2),
            polar: (d + 1).div_ceil(2) + 1,
            azimuthal: d + 1,
        }
    }

    pub fn uniform(k: usize) -> Self {
        Self {
            radial: k,
            polar: k,
            azimuthal: k,
        }
    }
}

/// `a / b` to double-double accuracy; the crate's own quotient of two
/// double-doubles keeps only `f64` precision.
fn dd_div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q1 = a.hi() / b.hi();
    let r = a - b * q1;
    let q2 = r.hi() / b.hi();
    let q3 = (r - b * q2).hi() / b.hi();
    TwoFloat::new_add(q1, q2) + q3
}

/// Product rule in double-double arithmetic.
fn ball_rule<F: Fn([TwoFloat; 3]) -> TwoFloat>(f: F, order: QuadOrder) -> TwoFloat {
    let (rn, rw) = gauss_legendre_dd(order.radial);
    let (tn, tw) = gauss_legendre_dd(order.polar);
    let dphi = 2.0 * consts::PI / order.azimuthal as f64;
    let ring: Vec<(TwoFloat, TwoFloat)> = (0..order.azimuthal)
        .map(|j| {
            let phi = dphi * j as f64;
            (phi.cos(), phi.sin())
        })
        .collect();
    let mut total = TwoFloat::from(0.0);
    for (&u, &wu) in rn.iter().zip(&rw) {
        let r = 0.5 * (u + 1.0);
        let wr = 0.5 * wu * r * r;
        for (&t, &wt) in tn.iter().zip(&tw) {
            let s = (1.0 - t * t).sqrt();
            let mut sum = TwoFloat::from(0.0);
            for &(c, sn) in &ring {
                sum += f([r * t, r * s * c, r * s * sn]);
            }
            total += wr * wt * dphi * sum;
        }
    }
    total
}

/// `\int_{B^3} f dV` by the product rule; nodes, weights and the sum are
/// carried in double-double precision.
pub fn ball_quadrature<F: Fn([f64; 3]) -> f64>(f: F, order: QuadOrder) -> f64 {
    ball_rule(|p| TwoFloat::from(f(p.map(|x| x.hi()))), order).hi()
}

fn bigint_dd(n: &BigInt) -> TwoFloat {
    let hi = n.to_f64().unwrap_or(f64::NAN);
    let rest = BigInt::from_f64(hi).map_or(0.0, |h| (n - h).to_f64().unwrap_or(0.0));
    TwoFloat::new_add(hi, rest)
}

fn rational_dd(q: &Rational) -> TwoFloat {
    dd_div(bigint_dd(q.numer()), bigint_dd(q.denom()))
}

/// Polynomial with double-double coefficients for evaluation at nodes.
struct DdPoly {
    terms: Vec<([usize; 3], TwoFloat)>,
    degree: usize,
}

impl DdPoly {
    fn new(p: &TriPoly) -> Self {
        Self {
            terms: p.terms().map(|(m, c)| (m.0.map(|e| e as usize), rational_dd(c))).collect(),
            degree: p.degree().unwrap_or(0) as usize,
        }
    }

    fn eval(&self, x: [TwoFloat; 3]) -> TwoFloat {
        let powers = x.map(|xi| {
            let mut pw = vec![TwoFloat::from(1.0); self.degree + 1];
            for e in 1..=self.degree {
                pw[e] = pw[e - 1] * xi;
            }
            pw
        });
        self.terms.iter().fold(TwoFloat::from(0.0), |acc, (e, c)| {
            acc + *c * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]]
        })
    }
}

fn dot_integrand(f: &VecField, g: &VecField) -> impl Fn([TwoFloat; 3]) -> TwoFloat {
    let f: Vec<DdPoly> = f.c.iter().map(DdPoly::new).collect();
    let g: Vec<DdPoly> = g.c.iter().map(DdPoly::new).collect();
    move |p| (0..3).fold(TwoFloat::from(0.0), |acc, i| acc + f[i].eval(p) * g[i].eval(p))
}

/// `<f, g>` by quadrature.
pub fn quad_inner(f: &VecField, g: &VecField, order: QuadOrder) -> f64 {
    ball_rule(dot_integrand(f, g), order).hi()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadReport {
    pub exact: PiRational,
    pub exact_f64: f64,
    pub quadrature: f64,
    pub abs_error: f64,
    /// `abs_error / |exact|`, or `abs_error` when the exact value is zero.
    pub rel_error: f64,
    /// `\int |f . g| / |<f, g>|`; rounding at the nodes limits `rel_error`
    /// to a small multiple of `1e-32` times this. Infinite when the exact value is zero.
    pub condition: f64,
    pub order: QuadOrder,
}

/// Compares the exact inner product with quadrature; `order` defaults to the
/// sufficient rule for the degree of `f g`.
pub fn quad_crosscheck(f: &VecField, g: &VecField, order: Option<QuadOrder>) -> QuadReport {
    let deg = f.degree().unwrap_or(0) + g.degree().unwrap_or(0);
    let order = order.unwrap_or_else(|| QuadOrder::sufficient(deg));
    let exact = f.inner(g);
    let exact_dd = rational_dd(exact.coefficient()) * consts::PI;
    let integrand = dot_integrand(f, g);
    let quad = ball_rule(&integrand, order);
    let magnitude = ball_rule(|p| integrand(p).abs(), order);
    let abs_error = (quad - exact_dd).abs().hi();
    let rel_error = if exact.is_zero() {
        abs_error
    } else {
        abs_error / exact_dd.abs().hi()
    };
    QuadReport {
        exact_f64: exact.to_f64(),
        exact,
        quadrature: quad.hi(),
        abs_error,
        rel_error,
        condition: (magnitude / exact_dd.abs()).hi(),
        order,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ball_monomial_integral, TriPoly};
    use crate::harmonic::{solid_harmonic, HarmonicKind};

    #[test]
    fn rule_integrates_polynomials() {
        for k in 1..=12 {
            let (x, w) = gauss_legendre(k);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-13);
            for p in 0..2 * k {
                let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(p as i32)).sum();
                let exact = if p % 2 == 1 { 0.0 } else { 2.0 / (p as f64 + 1.0) };
                assert!((q - exact).abs() < 1e-13, "k={k} p={p}");
            }
        }
    }

    #[test]
    fn monomials_against_exact_through_16() {
        for a in (0..=16).step_by(2) {
            for b in (0..=16 - a).step_by(2) {
                for c in (0..=16 - a - b).step_by(2) {
                    let order = QuadOrder::sufficient(a + b + c);
                    let q = ball_quadrature(
                        |p| p[0].powi(a as i32) * p[1].powi(b as i32) * p[2].powi(c as i32),
                        order,
                    );
                    let e = ball_monomial_integral(a, b, c).to_f64();
                    assert!((q - e).abs() <= 1e-12 * e.abs(), "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn crosscheck_examples() {
        let u = VecField::scalar(solid_harmonic(HarmonicKind::U, 1, 0).unwrap().poly);
        let r = quad_crosscheck(&u, &u, None);
        assert!(r.rel_error <= 1e-20, "{}", r.rel_error);
        let odd = VecField::along(1, TriPoly::monomial(1, 1, 0));
        let r = quad_crosscheck(&odd, &VecField::along(1, TriPoly::one()), None);
        assert!(r.exact.is_zero() && r.quadrature.abs() <= 1e-14);
        let f = VecField::along(2, TriPoly::monomial(0, 4, 4));
        let r = quad_crosscheck(&f, &f, Some(QuadOrder::uniform(3)));
        assert!(r.rel_error > 1e-6);
    }
}
