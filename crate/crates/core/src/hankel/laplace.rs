use crate::error::{Error, Result};
use crate::hankel::{Determinant, Engine, Matrix};
use crate::scalar::ExactRing;

/// Default order cap for cofactor expansion.
pub const LAPLACE_DEFAULT_CAP: usize = 10;

/// Column subsets are bit masks; this bounds memory at `2^24` entries.
pub const LAPLACE_MAX_CAP: usize = 24;

/// Cofactor expansion with the default order cap.
pub fn det_laplace<T: ExactRing>(m: &Matrix<T>) -> Result<Determinant<T>> {
    det_laplace_with_cap(m, LAPLACE_DEFAULT_CAP)
}

/// Cofactor expansion along successive rows.
///
/// Expanding row `r` of the minor on rows `r..n` and column set `S` gives
/// minors on rows `r+1..n` and `S \ {j}`; those are shared between branches,
/// so each is evaluated once, bottom row first. Cost is `O(n 2^n)`
/// multiplications and no division is ever performed.
pub fn det_laplace_with_cap<T: ExactRing>(m: &Matrix<T>, cap: usize) -> Result<Determinant<T>> {
    let n = m.order();
    let cap = cap.min(LAPLACE_MAX_CAP);
    if n > cap {
        return Err(Error::OrderAboveCap { order: n, cap });
    }
    let mut minors: Vec<Option<T>> = vec![None; 1 << n];
    minors[0] = Some(T::one());
    let mut steps = 0u64;
    let mut max_bits = m.max_entry_bits();
    for size in 1..=n {
        let row = n - size;
        for set in 0usize..(1 << n) {
            if set.count_ones() as usize != size {
                continue;
            }
            let mut acc = T::zero();
            for (pos, col) in (0..n).filter(|c| set & (1 << c) != 0).enumerate() {
                let a = m.get(row, col);
                if a.is_zero() {
                    continue;
                }
                let sub = minors[set & !(1 << col)].as_ref().expect("smaller minors come first");
                if sub.is_zero() {
                    continue;
                }
                let term = a.clone() * sub;
                steps += 1;
                max_bits = max_bits.max(term.bit_len());
                acc = if pos % 2 == 0 { acc + term } else { acc - term };
            }
            max_bits = max_bits.max(acc.bit_len());
            minors[set] = Some(acc);
        }
    }
    let value = minors[(1 << n) - 1].take().expect("full minor computed");
    Ok(Determinant { value, algorithm: Engine::Laplace, steps, max_bits, fallback: false })
}
