//! Degree-graded Bergman kernels for `Vec M(B^3)` as finite rank-one sums,
//! the projection `B^(n)` and its truncated sum over degrees.
//!
//! Weights are stored as rationals standing for `w / pi`, so that pairing a
//! weight with a ball integral `q pi` leaves the rational `w q`.

use num_traits::{One, Zero};

use crate::ambigenic::vec_basis;
use crate::exact::{monomials_of_degree, rat, rational_to_f64, PiRational, Rational};
use crate::field::VecField;
use crate::{Error, Exec, Result};

/// `weight / pi * left(x) (x) right(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelPair {
    pub weight: Rational,
    pub left: VecField,
    pub right: VecField,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelTensor {
    pub degree: u32,
    pub pairs: Vec<KernelPair>,
}

/// Values of `b1(x, y)` and `b2(x, y)` as `(e1, e2)` components.
pub type KernelValue<T> = [[T; 2]; 2];

impl KernelTensor {
    /// Kernel of the span of an orthogonal family of homogeneous degree-`n`
    /// fields; zero members are skipped.
    pub fn from_orthogonal(degree: u32, basis: &[VecField]) -> Self {
        let pairs = basis
            .iter()
            .filter(|f| !f.is_zero())
            .map(|f| KernelPair {
                weight: Rational::one() / f.norm_sq().coefficient(),
                left: f.clone(),
                right: f.clone(),
            })
            .collect();
        Self { degree, pairs }
    }

    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    /// `sum w v v^T` over the `(e1, e2) x monomial` coordinates of degree
    /// `n`; equal for any orthogonal basis of the same space.
    pub fn dense(&self) -> Vec<Vec<Rational>> {
        let monos = monomials_of_degree(self.degree);
        let dim = 2 * monos.len();
        let mut out = vec![vec![Rational::zero(); dim]; dim];
        for pair in &self.pairs {
            let coords = |f: &VecField| -> Vec<Rational> {
                f.c[1]
                    .coefficient_vector(&monos)
                    .into_iter()
                    .chain(f.c[2].coefficient_vector(&monos))
                    .collect()
            };
            let l = coords(&pair.left);
            let r = coords(&pair.right);
            for (i, a) in l.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let wa = &pair.weight * a;
                for (j, b) in r.iter().enumerate() {
                    if !b.is_zero() {
                        out[i][j] += &wa * b;
                    }
                }
            }
        }
        out
    }

    /// Exact `b1`, `b2` at rational points, in units of `1/pi`.
    pub fn eval_exact(&self, x: &[Rational; 3], y: &[Rational; 3]) -> KernelValue<Rational> {
        let mut out: KernelValue<Rational> = Default::default();
        for pair in &self.pairs {
            let lx = pair.left.eval(x);
            let ry = pair.right.eval(y);
            for i in 0..2 {
                let coeff = &pair.weight * &lx[i + 1];
                for j in 0..2 {
                    out[i][j] -= &coeff * &ry[j + 1];
                }
            }
        }
        out
    }

    pub fn eval_f64(&self, x: [f64; 3], y: [f64; 3]) -> KernelValue<f64> {
        let mut out = [[0.0; 2]; 2];
        for pair in &self.pairs {
            let w = rational_to_f64(&pair.weight) / std::f64::consts::PI;
            let lx = pair.left.eval_f64(x);
            let ry = pair.right.eval_f64(y);
            for i in 0..2 {
                for j in 0..2 {
                    out[i][j] -= w * lx[i + 1] * ry[j + 1];
                }
            }
        }
        out
    }
}

/// `b^n_1`, `b^n_2` from the orthogonal basis of `Vec M^(n)`.
pub fn kernel(n: u32) -> KernelTensor {
    let basis: Vec<VecField> = vec_basis(n).into_iter().map(|e| e.field).collect();
    KernelTensor::from_orthogonal(n, &basis)
}

/// Float evaluation of `b^n_1(x, y)`, `b^n_2(x, y)` as `(e1, e2)` pairs.
pub fn eval_kernel(n: u32, x: [f64; 3], y: [f64; 3]) -> KernelValue<f64> {
    kernel(n).eval_f64(x, y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionResult {
    pub projected: VecField,
    pub residual: VecField,
    /// `(|projected|^2, |residual|^2)`
    pub norms: (PiRational, PiRational),
}

fn require_vector(f: &VecField) -> Result<()> {
    if f.c[0].is_zero() {
        Ok(())
    } else {
        Err(Error::UnexpectedComponent("scalar"))
    }
}

fn apply(kernel: &KernelTensor, f: &VecField) -> VecField {
    kernel
        .pairs
        .iter()
        .map(|p| {
            let c = &p.weight * p.right.inner(f).coefficient();
            p.left.scale(&c)
        })
        .sum()
}

fn result(f: &VecField, projected: VecField) -> ProjectionResult {
    let residual = f - &projected;
    let norms = (projected.norm_sq(), residual.norm_sq());
    ProjectionResult {
        projected,
        residual,
        norms,
    }
}

/// `B^(n)[f]`: orthogonal projection of `f` onto `Vec M^(n)`. For harmonic
/// `f` only the degree-`n` part contributes.
pub fn project(f: &VecField, n: u32) -> Result<ProjectionResult> {
    require_vector(f)?;
    Ok(result(f, apply(&kernel(n), f)))
}

/// `sum_{n <= max_degree} B^(n)[f]`, degrees handled under `exec`.
pub fn project_truncated(f: &VecField, max_degree: u32, exec: Exec) -> Result<ProjectionResult> {
    require_vector(f)?;
    let parts = exec.map_range(max_degree as usize + 1, |n| apply(&kernel(n as u32), f));
    Ok(result(f, parts.into_iter().sum()))
}

/// `|f(0)| <= sqrt(3/(4 pi)) |f|` for `f` in `Vec M`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub value_at_origin: f64,
    pub norm: f64,
    pub bound: f64,
    pub ratio: f64,
    /// `|f(0)|^2 / (3/(4 pi) |f|^2)`, exact since the `pi` cancels.
    pub ratio_sq_exact: Rational,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.ratio_sq_exact <= Rational::one()
    }

    pub fn is_equality(&self) -> bool {
        self.ratio_sq_exact == Rational::one()
    }
}

/// Checks the origin bound; `f` must lie in `Vec M` (zero projection
/// residual up to its degree).
pub fn point_eval_bound_check(f: &VecField) -> Result<BoundReport> {
    require_vector(f)?;
    let degree = f.degree().unwrap_or(0);
    let proj = project_truncated(f, degree, Exec::default())?;
    if !proj.residual.is_zero() {
        return Err(Error::NotVecMonogenic {
            residual: proj.residual.to_string(),
        });
    }
    let origin = [Rational::zero(), Rational::zero(), Rational::zero()];
    let value = f.eval(&origin);
    let value_sq: Rational = value.iter().map(|v| v * v).sum();
    let norm_sq = f.norm_sq();
    let ratio_sq_exact = if norm_sq.is_zero() {
        Rational::zero()
    } else {
        &value_sq * rat(4, 3) / norm_sq.coefficient()
    };
    let value_at_origin = rational_to_f64(&value_sq).sqrt();
    let norm = norm_sq.to_f64().sqrt();
    let bound = (3.0 / (4.0 * std::f64::consts::PI)).sqrt() * norm;
    let ratio = if bound == 0.0 { 0.0 } else { value_at_origin / bound };
    Ok(BoundReport {
        value_at_origin,
        norm,
        bound,
        ratio,
        ratio_sq_exact,
    })
}
