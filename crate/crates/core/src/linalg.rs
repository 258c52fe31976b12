//! Exact Gaussian elimination and Gram matrices over the rationals.

use num_traits::{One, Zero};

use crate::exact::{PiRational, Rational};
use crate::{Error, Exec, Result};

pub type Matrix = Vec<Vec<Rational>>;

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for v in m[r].iter_mut().skip(c) {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let k = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !pv.is_zero() {
                    *v -= &k * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    rref(&mut m.to_vec()).len()
}

/// A basis of `{v : m v = 0}` for an `_ x ncols` matrix.
pub fn nullspace(m: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Solves the square system `a x = b`.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidIndex("solve expects a square system".into()));
    }
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, v)| row.iter().cloned().chain(std::iter::once(v.clone())).collect())
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.last() == Some(&n) {
        return Err(Error::Singular);
    }
    Ok(aug.into_iter().map(|row| row[n].clone()).collect())
}

/// Symmetric Gram matrix `G[i][j] = inner(items[i], items[j])`; rows are
/// computed independently under `exec`.
pub fn gram_matrix<T, F>(items: &[T], inner: F, exec: Exec) -> Vec<Vec<PiRational>>
where
    T: Sync,
    F: Fn(&T, &T) -> PiRational + Sync + Send,
{
    let n = items.len();
    let upper = exec.map_range(n, |i| {
        (i..n).map(|j| inner(&items[i], &items[j])).collect::<Vec<_>>()
    });
    let mut g = vec![vec![PiRational::zero(); n]; n];
    for (i, row) in upper.into_iter().enumerate() {
        for (k, v) in row.into_iter().enumerate() {
            let j = i + k;
            g[j][i] = v.clone();
            g[i][j] = v;
        }
    }
    g
}

/// Drops the common `pi` factor.
pub fn coefficients(g: &[Vec<PiRational>]) -> Matrix {
    g.iter()
        .map(|row| row.iter().map(|v| v.coefficient().clone()).collect())
        .collect()
}

pub fn gram_rank(g: &[Vec<PiRational>]) -> usize {
    rank(&coefficients(g))
}

/// Off-diagonal entries that do not vanish, as `(i, j, value)` with `i < j`.
pub fn off_diagonal(g: &[Vec<PiRational>]) -> Vec<(usize, usize, PiRational)> {
    let mut out = Vec::new();
    for (i, row) in g.iter().enumerate() {
        for (j, v) in row.iter().enumerate().skip(i + 1) {
            if !v.is_zero() {
                out.push((i, j, v.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&v| rat(v, 1)).collect())
            .collect()
    }

    fn mat_vec(a: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
        a.iter()
            .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), 3);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn nullspace_example() {
        let a = m(&[&[1, 1, 1], &[0, 1, 2]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&a, &ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_examples() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[rat(3, 1), rat(5, 1)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
        assert_eq!(solve(&m(&[&[1, 2], &[2, 4]]), &[rat(1, 1), rat(0, 1)]), Err(Error::Singular));
    }

    #[test]
    fn gram_is_symmetric_in_both_modes() {
        let items: Vec<i64> = (1..6).collect();
        let inner = |a: &i64, b: &i64| PiRational(rat(a * b + (a - b).abs(), 1));
        let seq = gram_matrix(&items, inner, Exec::Sequential);
        let par = gram_matrix(&items, inner, Exec::Parallel);
        assert_eq!(seq, par);
        assert_eq!(seq[1][3], seq[3][1]);
        assert_eq!(off_diagonal(&seq).len(), 10);
    }

    proptest! {
        #[test]
        fn nullspace_vectors_are_annihilated(
            entries in prop::collection::vec(-4i64..5, 12),
        ) {
            let a: Matrix = entries.chunks(4).map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect();
            let ns = nullspace(&a, 4);
            prop_assert_eq!(ns.len() + rank(&a), 4);
            for v in &ns {
                prop_assert!(mat_vec(&a, v).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn solve_recovers_solution(
            entries in prop::collection::vec(-5i64..6, 9),
            x in prop::collection::vec(-5i64..6, 3),
        ) {
            let a: Matrix = entries.chunks(3).map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect();
            let x: Vec<Rational> = x.iter().map(|&v| rat(v, 1)).collect();
            let b = mat_vec(&a, &x);
            match solve(&a, &b) {
                Ok(found) => prop_assert_eq!(found, x),
                Err(e) => {
                    prop_assert_eq!(e, Error::Singular);
                    prop_assert!(rank(&a) < 3);
                }
            }
        }
    }
}
