//! Divisor-sum arithmetic: Möbius and Euler functions, Jordan totients,
//! tuple gcds, and Möbius-inverted products of divisor functions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumTheoryError {
    #[error("no value supplied for divisor {0}")]
    MissingDivisor(u64),
}

/// Divisors of `n` in ascending order. `n` must be positive.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors: n must be positive");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Prime factorization `[(p, multiplicity)]` with primes ascending.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize: n must be positive");
    let mut n = n;
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
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Möbius function: 0 on non-squarefree `n`, otherwise (-1)^#primes.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius: n must be positive");
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi: n must be positive");
    let mut out = n;
    for (p, _) in factorize(n) {
        out = out / p * (p - 1);
    }
    out
}

/// Jordan totient J_k(n) = Σ_{d|n} μ(n/d) d^k; J_1 is the Euler φ.
///
/// Counts k-tuples over the residues mod n whose gcd together with n is 1.
pub fn jordan_totient(k: u32, n: u64) -> BigInt {
    assert!(k >= 1, "jordan_totient: k must be positive");
    assert!(n >= 1, "jordan_totient: n must be positive");
    let mut sum = BigInt::zero();
    for d in divisors(n) {
        sum += BigInt::from(mobius(n / d)) * BigInt::from(d).pow(k);
    }
    sum
}

/// gcd of a tuple of residues together with the modulus `n`.
///
/// The empty tuple and the zero residue both contribute `n`, so the result
/// is always a positive divisor of `n`.
pub fn tuple_gcd_with(values: &[u64], n: u64) -> u64 {
    assert!(n >= 1, "tuple_gcd_with: n must be positive");
    values.iter().fold(n, |acc, &v| acc.gcd(&v))
}

/// Möbius-inverted products of divisor functions.
///
/// Given values a_1(d), ..., a_k(d) for every divisor d of `n`, returns for
/// each divisor m of `n` the sum Σ_{d|m} a_1(d)···a_k(d)·μ(m/d).
///
/// With the single function a(d) = d this recovers the Euler φ on every
/// divisor of `n`.
pub fn generalized_phi(
    a_values: &BTreeMap<u64, Vec<BigRational>>,
    n: u64,
) -> Result<BTreeMap<u64, BigRational>, NumTheoryError> {
    assert!(n >= 1, "generalized_phi: n must be positive");
    let divs = divisors(n);
    for &d in &divs {
        if !a_values.contains_key(&d) {
            return Err(NumTheoryError::MissingDivisor(d));
        }
    }
    let mut out = BTreeMap::new();
    for &m in &divs {
        let mut sum = BigRational::zero();
        for d in divisors(m) {
            let mu = mobius(m / d);
            if mu == 0 {
                continue;
            }
            let mut prod = BigRational::from_integer(BigInt::from(mu));
            for a in &a_values[&d] {
                prod *= a;
            }
            sum += prod;
        }
        out.insert(m, sum);
    }
    Ok(out)
}
