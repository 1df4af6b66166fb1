//! Test-only oracles, independent of the library's evaluation paths.
#![allow(dead_code)]

use hankel_core::BigInt;
use num_traits::{One, Zero};

/// Permutation-sum determinant over all `n!` permutations.
pub fn leibniz_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::zero();
    permute(rows, &mut perm, 0, &mut total);
    total
}

fn permute(rows: &[Vec<BigInt>], perm: &mut Vec<usize>, at: usize, total: &mut BigInt) {
    let n = perm.len();
    if at == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut prod = BigInt::one();
        for (i, &j) in perm.iter().enumerate() {
            prod *= &rows[i][j];
        }
        if inversions % 2 == 0 {
            *total += prod;
        } else {
            *total -= prod;
        }
        return;
    }
    for i in at..n {
        perm.swap(at, i);
        permute(rows, perm, at + 1, total);
        perm.swap(at, i);
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n! / (k! (n-k)!)`.
pub fn fact_binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn bigs(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}
