//! Valuations, Lucas congruences, modular helpers and the `{0,1}` parity
//! matrices used by the odd-quotient criterion for Hankel determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hankel::Matrix;
use crate::report::{Check, VerificationReport};

/// 2-adic valuation.
pub fn nu2(x: &BigInt) -> Result<u64> {
    x.trailing_zeros().ok_or(Error::ZeroValuation)
}

/// Number of 1 digits in the binary expansion of `n`.
pub fn ones_count(n: u64) -> u32 {
    n.count_ones()
}

pub fn is_power_of_two(n: u64) -> bool {
    n.is_power_of_two()
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod_u64(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128 % m as u128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

/// `binom(a, b) mod p` for digits `a, b < p`.
fn small_binom_mod(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..b {
        num = num * u128::from(a - i) % u128::from(p);
        den = den * u128::from(i + 1) % u128::from(p);
    }
    let inv = pow_mod_u64(den as u64, p - 2, p);
    (num * u128::from(inv) % u128::from(p)) as u64
}

/// `binom(n, k) mod p` as the product of digitwise binomials in base `p`.
pub fn lucas_binom_mod(mut n: u64, mut k: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let d = small_binom_mod(n % p, k % p, p);
        if d == 0 {
            return Ok(0);
        }
        acc = (u128::from(acc) * u128::from(d) % u128::from(p)) as u64;
        n /= p;
        k /= p;
    }
    Ok(acc)
}

/// Whether `binom(2n-1, n-1)` is odd, read off the base-2 digits.
///
/// # Panics
/// If `n == 0`.
pub fn central_binom_parity(n: u64) -> bool {
    assert!(n >= 1, "central_binom_parity needs n >= 1");
    lucas_binom_mod(2 * n - 1, n - 1, 2).expect("2 is prime") == 1
}

/// Least nonnegative residue of `x` modulo `m`.
pub fn residue(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Result<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return Err(Error::NoInverse(a.to_string(), m.to_string()));
    }
    Ok(e.x.mod_floor(m))
}

/// Legendre symbol `(p / 3)` for a prime `p > 3`.
pub fn legendre_mod3(p: u64) -> i64 {
    if p % 3 == 1 {
        1
    } else {
        -1
    }
}

/// The `n x n` matrix with entry `(i, j) = (x_{i+j} / 2k) mod 2`, indices from 1.
pub fn parity_matrix(x: &[BigInt], k: u64, n: usize) -> Result<Matrix<BigInt>> {
    let needed = 2 * n + 1;
    if x.len() < needed {
        return Err(Error::InsufficientTerms { needed, got: x.len() });
    }
    let two_k = BigInt::from(2 * k);
    let mut halves = Vec::with_capacity(2 * n + 1);
    for (i, v) in x.iter().enumerate().take(needed) {
        if i == 0 {
            halves.push(BigInt::zero());
            continue;
        }
        let (q, r) = v.div_rem(&two_k);
        if !r.is_zero() {
            return Err(Error::Divisibility { index: i, divisor: 2 * k });
        }
        halves.push(q.mod_floor(&BigInt::from(2)));
    }
    if n == 0 {
        return Err(Error::NotSquare { order: 0, len: 0 });
    }
    Ok(Matrix::from_fn(n, |i, j| halves[i + j + 2].clone()))
}

/// Checks the hypotheses of the odd-quotient criterion on `x_0..=x_{n_max}`:
/// `x_0 = 1`, `2k | x_i` for `i >= 1`, and `4k | x_i` exactly when `i` is not a
/// power of two.
pub fn odd_quotient_hypotheses(x: &[BigInt], k: u64, n_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "odd-quotient-hypotheses",
        format!("x_0 = 1, {} | x_i, {} | x_i iff i is not a power of two", 2 * k, 4 * k),
        0,
        n_max as u64,
    );
    for (i, v) in x.iter().enumerate().take(n_max + 1) {
        report.push(i as u64, v.clone(), odd_quotient_checks(i, v, k));
    }
    report
}

/// The odd-quotient hypotheses for a single term `x_i`.
pub fn odd_quotient_checks(i: usize, v: &BigInt, k: u64) -> Vec<Check> {
    if i == 0 {
        return vec![Check::new(v.is_one(), v.clone(), "x_0 = 1")];
    }
    let two_k = BigInt::from(2 * k);
    let four_k = BigInt::from(4 * k);
    let pow2 = is_power_of_two(i as u64);
    let by_four = v.is_multiple_of(&four_k);
    vec![
        Check::new(v.is_multiple_of(&two_k), v.clone(), format!("divisible by {two_k}")),
        Check::new(
            by_four != pow2,
            v.clone(),
            if pow2 {
                format!("not divisible by {four_k} (index is a power of two)")
            } else {
                format!("divisible by {four_k}")
            },
        ),
    ]
}
