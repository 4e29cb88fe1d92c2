//! Elementary number theory on machine integers.
//!
//! Everything here uses trial division; the degrees handled by this crate are
//! small enough (n up to about 10^6) that nothing smarter is needed.

use serde::Serialize;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// gcd over a slice; the gcd of the empty slice is 0.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |g, &v| gcd(g, v))
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Returns `(p, e)` when `n = p^e` with `e >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn is_prime_power(n: u64) -> bool {
    prime_power(n).is_some()
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Number of divisors, τ(n).
pub fn tau(n: u64) -> u64 {
    factorize(n)
        .iter()
        .map(|&(_, e)| u64::from(e) + 1)
        .product()
}

/// Euler's totient, φ(n).
pub fn phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Number of distinct prime divisors, ω(n).
pub fn omega(n: u64) -> u32 {
    factorize(n).len() as u32
}

pub fn smallest_prime_factor(n: u64) -> Option<u64> {
    factorize(n).first().map(|&(p, _)| p)
}

/// `(q^d - 1) / (q - 1) = 1 + q + ... + q^(d-1)`, or `None` on overflow.
pub fn repunit(q: u64, d: u32) -> Option<u64> {
    let mut acc: u64 = 0;
    let mut pow: u64 = 1;
    for i in 0..d {
        acc = acc.checked_add(pow)?;
        if i + 1 < d {
            pow = pow.checked_mul(q)?;
        }
    }
    Some(acc)
}

/// All `(q, d)` with `q` a prime power, `d >= 2` and `n = (q^d - 1)/(q - 1)`.
///
/// Only `q` with `q^(d-1) < n` can qualify, which bounds both loops.
pub fn repunit_forms(n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    // d = 2 gives n = q + 1.
    if is_prime_power(n - 1) {
        out.push((n - 1, 2));
    }
    // d >= 3 needs q^2 < n.
    let mut q = 2;
    while q * q < n {
        if is_prime_power(q) {
            let mut d = 3;
            while let Some(v) = repunit(q, d) {
                if v > n {
                    break;
                }
                if v == n {
                    out.push((q, d));
                }
                d += 1;
            }
        }
        q += 1;
    }
    out.sort_unstable();
    out
}

/// Arithmetic data about an integer used throughout the bounds and families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArithProfile {
    pub n: u64,
    pub divisors: Vec<u64>,
    pub tau: u64,
    pub phi: u64,
    pub omega: u32,
    /// Smallest prime factor.
    pub p1: Option<u64>,
    /// Second smallest prime factor.
    pub p2: Option<u64>,
    pub repunit_forms: Vec<(u64, u32)>,
    pub is_prime: bool,
    pub is_prime_power: bool,
}

pub fn arith_profile(n: u64) -> ArithProfile {
    assert!(n >= 1, "arith_profile needs n >= 1");
    let factors = factorize(n);
    let divisors = divisors(n);
    ArithProfile {
        n,
        tau: divisors.len() as u64,
        divisors,
        phi: phi(n),
        omega: factors.len() as u32,
        p1: factors.first().map(|f| f.0),
        p2: factors.get(1).map(|f| f.0),
        repunit_forms: repunit_forms(n),
        is_prime: factors.len() == 1 && factors[0].1 == 1,
        is_prime_power: factors.len() == 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_functions() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd_all(&[6, 10, 15]), 1);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(tau(36), 9);
        assert_eq!(phi(36), 12);
        assert_eq!(phi(1), 1);
        assert_eq!(omega(60), 3);
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(1), None);
        assert!(is_prime(97));
        assert!(!is_prime(91));
        assert!(!is_prime(1));
    }

    #[test]
    fn profile_38() {
        let p = arith_profile(38);
        assert!(p.repunit_forms.contains(&(37, 2)));
        assert_eq!(p.p1, Some(2));
        assert_eq!(p.p2, Some(19));
    }

    #[test]
    fn profile_57() {
        assert!(arith_profile(57).repunit_forms.contains(&(7, 3)));
    }

    #[test]
    fn profile_37() {
        let p = arith_profile(37);
        assert!(p.repunit_forms.is_empty());
        assert!(p.is_prime);
        assert_eq!(p.tau, 2);
    }

    #[test]
    fn repunit_primes_below_200() {
        let reps: Vec<u64> = (2..200u64)
            .filter(|&p| is_prime(p) && !repunit_forms(p).is_empty())
            .collect();
        assert_eq!(reps, vec![3, 5, 7, 13, 17, 31, 73, 127]);
    }

    #[test]
    fn repunit_forms_reconstruct_and_are_complete() {
        // Independent scan: every prime power q < n and every d.
        for n in 1..=10_000u64 {
            let forms = repunit_forms(n);
            for &(q, d) in &forms {
                assert!(d >= 2 && is_prime_power(q));
                assert_eq!(repunit(q, d), Some(n));
            }
            if n <= 2000 {
                let mut brute = Vec::new();
                for q in 2..n {
                    if !is_prime_power(q) {
                        continue;
                    }
                    for d in 2..12 {
                        if repunit(q, d) == Some(n) {
                            brute.push((q, d));
                        }
                    }
                }
                brute.sort_unstable();
                assert_eq!(forms, brute, "n = {n}");
            }
        }
    }
}
