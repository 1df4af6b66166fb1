use crate::error::{Error, Result};
use crate::hankel::{Determinant, Engine, Matrix};
use crate::scalar::ExactRing;

/// Fraction-free Gaussian elimination.
///
/// After step `k` every remaining entry is a `(k+2) x (k+2)` minor of the
/// input, so dividing by the previous pivot is exact. A zero pivot is handled
/// by swapping in a lower row; if the whole column is zero the determinant is
/// zero.
pub fn det_bareiss<T: ExactRing>(m: &Matrix<T>) -> Result<Determinant<T>> {
    let n = m.order();
    let mut a: Vec<Vec<T>> = m.clone().into_rows();
    let mut negate = false;
    let mut prev = T::one();
    let mut steps = 0u64;
    let mut max_bits = m.max_entry_bits();

    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => {
                    return Ok(Determinant {
                        value: T::zero(),
                        algorithm: Engine::Bareiss,
                        steps,
                        max_bits,
                        fallback: false,
                    });
                }
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let cross = row[j].clone() * pivot - row[k].clone() * &pivot_row[j];
                max_bits = max_bits.max(cross.bit_len());
                row[j] = cross
                    .exact_div(&prev)
                    .ok_or(Error::DivisionNotExact { context: "bareiss", index: k })?;
                steps += 1;
            }
            row[k] = T::zero();
        }
        prev = pivot.clone();
    }

    let last = a[n - 1][n - 1].clone();
    let value = if negate { -last } else { last };
    Ok(Determinant { value, algorithm: Engine::Bareiss, steps, max_bits, fallback: false })
}
