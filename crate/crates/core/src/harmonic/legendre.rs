//! Legendre polynomials and associated Legendre functions in
//! `Q[t, s] / (s^2 - (1 - t^2))`.
//!
//! No Condon-Shortley phase: `P_n^m(t) = (1 - t^2)^(m/2) d^m/dt^m P_n(t)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{Rational, TsPoly};

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(n - j) / BigInt::from(j + 1))
}

/// Ascending coefficients of `P_n(t)` from the explicit sum
/// `P_n = 2^-n sum_k (-1)^k C(n,k) C(2n-2k, n) t^(n-2k)`.
pub fn legendre_coefficients(n: u32) -> Vec<Rational> {
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    let scale = BigInt::from(2).pow(n);
    for k in 0..=n / 2 {
        let mut c = binomial(n, k) * binomial(2 * n - 2 * k, n);
        if k % 2 == 1 {
            c = -c;
        }
        coeffs[(n - 2 * k) as usize] = Rational::new(c, scale.clone());
    }
    coeffs
}

/// `P_n(t)`.
pub fn legendre(n: u32) -> TsPoly {
    TsPoly::from_parts(legendre_coefficients(n), Vec::new())
}

/// Ascending coefficients of `d^m/dt^m P_n(t)`: degree `n - m`, parity
/// `(-1)^(n-m)`. Empty when `m > n`.
pub fn legendre_derivative_coefficients(n: u32, m: u32) -> Vec<Rational> {
    let mut c = legendre_coefficients(n);
    for _ in 0..m {
        if c.is_empty() {
            break;
        }
        c = c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * Rational::from_integer(BigInt::from(k)))
            .collect();
    }
    c
}

/// `P_n^m = s^m d^m P_n / dt^m`, or `None` when `m > n`.
pub fn assoc_legendre(n: u32, m: u32) -> Option<TsPoly> {
    if m > n {
        return None;
    }
    let derivative = TsPoly::from_parts(legendre_derivative_coefficients(n, m), Vec::new());
    Some(&TsPoly::pow_s(m) * &derivative)
}

/// [`assoc_legendre`] with the zero convention for out-of-range indices
/// (`m > n`, `m < 0` or `n < 0`).
pub fn assoc_legendre_or_zero(n: i64, m: i64) -> TsPoly {
    if n < 0 || m < 0 {
        return TsPoly::zero();
    }
    assoc_legendre(n as u32, m as u32).unwrap_or_default()
}

/// One instance of a recurrence identity: `lhs - rhs` must vanish.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub n: u32,
    pub m: u32,
    pub discrepancy: TsPoly,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.discrepancy.is_zero()
    }
}

fn q(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// The five standard recurrences for `P_n^m`, instantiated at `(n, m)`.
///
/// Identities that carry `(1 - t^2)^(-1/2)` are multiplied through by `s`
/// first, so every side lives in the ring. The `m - 1` recurrence is only
/// instantiated for `m >= 1`.
pub fn legendre_identities(n: u32, m: u32) -> Vec<IdentityCheck> {
    let (ni, mi) = (n as i64, m as i64);
    let p = |nn: i64, mm: i64| assoc_legendre_or_zero(nn, mm);
    let t = TsPoly::t();
    let mut out = Vec::new();
    let mut push = |name, lhs: TsPoly, rhs: TsPoly| {
        out.push(IdentityCheck {
            name,
            n,
            m,
            discrepancy: &lhs - &rhs,
        })
    };

    let p_m_n1 = p(ni + 1, mi);

    // (1 - t^2) (P^m_{n+1})' = (n+m+1) P^m_n - (n+1) t P^m_{n+1}
    push(
        "derivative-lowering",
        p_m_n1.s_diff_t().mul_s(),
        &p(ni, mi).scale(&q(ni + mi + 1)) - &p_m_n1.mul_t().scale(&q(ni + 1)),
    );

    // s (P^m_{n+1})' = P^{m+1}_{n+1} - m s^{-1} t P^m_{n+1}, times s
    push(
        "derivative-raising",
        p_m_n1.s_diff_t().mul_s(),
        &p(ni + 1, mi + 1).mul_s() - &p_m_n1.mul_t().scale(&q(mi)),
    );

    // s P^m_{n+1} = (P^{m+1}_{n+2} - P^{m+1}_n) / (2n+3)
    push(
        "order-raising",
        p_m_n1.mul_s(),
        (&p(ni + 2, mi + 1) - &p(ni, mi + 1)).scale(&Rational::new(BigInt::one(), BigInt::from(2 * ni + 3))),
    );

    // 2 m t P^m_{n+1} = s (P^{m+1}_{n+1} + (n+m+1)(n-m+2) P^{m-1}_{n+1})
    if m >= 1 {
        push(
            "order-three-term",
            p_m_n1.mul_t().scale(&q(2 * mi)),
            (&p(ni + 1, mi + 1) + &p(ni + 1, mi - 1).scale(&q((ni + mi + 1) * (ni - mi + 2)))).mul_s(),
        );
    }

    // (n-m+1) P^m_{n+1} = (2n+1) t P^m_n - (n+m) P^m_{n-1}
    push(
        "degree-three-term",
        p_m_n1.scale(&q(ni - mi + 1)),
        &(&t * &p(ni, mi)).scale(&q(2 * ni + 1)) - &p(ni - 1, mi).scale(&q(ni + mi)),
    );

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    /// Bonnet: (n+1) P_{n+1} = (2n+1) t P_n - n P_{n-1}.
    fn bonnet(n_max: u32) -> Vec<TsPoly> {
        let mut v = vec![TsPoly::one(), TsPoly::t()];
        for n in 1..n_max {
            let next = (&v[n as usize].mul_t().scale(&rat(2 * n as i64 + 1, 1))
                - &v[n as usize - 1].scale(&rat(n as i64, 1)))
                .scale(&rat(1, n as i64 + 1));
            v.push(next);
        }
        v
    }

    #[test]
    fn low_degrees() {
        assert_eq!(legendre(0), TsPoly::one());
        assert_eq!(legendre(1), TsPoly::t());
        assert_eq!(
            legendre(2),
            TsPoly::from_parts(vec![rat(-1, 2), rat(0, 1), rat(3, 2)], vec![])
        );
    }

    #[test]
    fn explicit_sum_matches_bonnet() {
        for (n, p) in bonnet(16).into_iter().enumerate() {
            assert_eq!(legendre(n as u32), p, "n = {n}");
        }
    }

    #[test]
    fn associated_examples() {
        assert_eq!(assoc_legendre(1, 1).unwrap(), TsPoly::s());
        assert_eq!(
            assoc_legendre(2, 1).unwrap(),
            TsPoly::from_parts(vec![], vec![rat(0, 1), rat(3, 1)])
        );
        assert_eq!(
            assoc_legendre(2, 2).unwrap(),
            TsPoly::from_parts(vec![rat(3, 1), rat(0, 1), rat(-3, 1)], vec![])
        );
        assert!(assoc_legendre(2, 3).is_none());
        assert!(assoc_legendre_or_zero(2, 3).is_zero());
    }

    #[test]
    fn identities_low_degree() {
        for n in 0..=4 {
            for m in 0..=n {
                for id in legendre_identities(n, m) {
                    assert!(id.holds(), "{} at n={n} m={m}: {}", id.name, id.discrepancy);
                }
            }
        }
    }

    #[test]
    fn matches_float_reference() {
        // P_3^2(t) = 15 t (1 - t^2) without the Condon-Shortley sign
        let p = assoc_legendre(3, 2).unwrap();
        for &t in &[-0.7, 0.1, 0.5] {
            let expected = 15.0 * t * (1.0 - t * t);
            assert!((p.eval_f64(t) - expected).abs() < 1e-12);
        }
    }
}
