//! Binomial transform and the two binomial convolutions.
//!
//! These work on plain slices of any ring element so they apply equally to
//! exact terms and to residues. Binomial coefficients are built by Pascal
//! additions in the element type itself.

use num_traits::{Num, Signed};

use crate::error::{Error, Result};

/// Pascal rows `0..len` in the scalar type.
fn pascal_rows<T: Num + Clone>(len: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(len);
    for n in 0..len {
        let mut row = Vec::with_capacity(n + 1);
        row.push(T::one());
        if let Some(prev) = rows.last() {
            row.extend(prev.windows(2).map(|w| w[0].clone() + w[1].clone()));
            row.push(T::one());
        }
        rows.push(row);
    }
    rows
}

/// `x'_n = sum_{k<=n} binom(n,k) x_k`.
pub fn binomial_transform<T: Num + Clone>(x: &[T]) -> Result<Vec<T>> {
    if x.is_empty() {
        return Err(Error::Empty("binomial_transform"));
    }
    let rows = pascal_rows::<T>(x.len());
    Ok(rows
        .iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(T::zero(), |acc, (c, v)| acc + c.clone() * v.clone())
        })
        .collect())
}

/// `x_n = sum_{k<=n} (-1)^(n-k) binom(n,k) x'_k`.
pub fn inverse_binomial_transform<T: Num + Signed + Clone>(x: &[T]) -> Result<Vec<T>> {
    if x.is_empty() {
        return Err(Error::Empty("inverse_binomial_transform"));
    }
    let rows = pascal_rows::<T>(x.len());
    Ok(rows
        .iter()
        .enumerate()
        .map(|(n, row)| {
            row.iter().zip(x).enumerate().fold(T::zero(), |acc, (k, (c, v))| {
                let t = c.clone() * v.clone();
                if (n - k) % 2 == 0 {
                    acc + t
                } else {
                    acc - t
                }
            })
        })
        .collect())
}

/// `times`-fold binomial transform; `times = 0` returns a copy.
pub fn iterated_transform<T: Num + Clone>(x: &[T], times: usize) -> Result<Vec<T>> {
    let mut out = x.to_vec();
    for _ in 0..times {
        out = binomial_transform(&out)?;
    }
    Ok(out)
}

fn convolve<T: Num + Clone>(x: &[T], y: &[T], squared: bool) -> Result<Vec<T>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    let rows = pascal_rows::<T>(x.len());
    Ok(rows
        .iter()
        .enumerate()
        .map(|(n, row)| {
            row.iter().enumerate().fold(T::zero(), |acc, (k, c)| {
                let w = if squared { c.clone() * c.clone() } else { c.clone() };
                acc + w * x[k].clone() * y[n - k].clone()
            })
        })
        .collect())
}

/// `w_n = sum_k binom(n,k)^2 x_k y_{n-k}`.
pub fn binom_sq_convolution<T: Num + Clone>(x: &[T], y: &[T]) -> Result<Vec<T>> {
    convolve(x, y, true)
}

/// `z_n = sum_k binom(n,k) x_k y_{n-k}`.
pub fn binom_convolution<T: Num + Clone>(x: &[T], y: &[T]) -> Result<Vec<T>> {
    convolve(x, y, false)
}
