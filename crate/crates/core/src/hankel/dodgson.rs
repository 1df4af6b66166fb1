use crate::hankel::{det_bareiss, Determinant, Engine, Matrix};
use crate::scalar::ExactRing;

/// Dodgson condensation.
///
/// Each stage replaces the matrix by its connected `2 x 2` minors divided by
/// the interior of the stage before last (Desnanot–Jacobi). A zero in any
/// interior used as a divisor makes the whole evaluation fall back to
/// [`det_bareiss`] on the original matrix; the result then carries
/// `fallback = true`.
pub fn det_dodgson<T: ExactRing>(m: &Matrix<T>) -> Determinant<T> {
    let n = m.order();
    let mut steps = 0u64;
    let mut max_bits = m.max_entry_bits();
    let mut cur: Vec<Vec<T>> = m.clone().into_rows();
    let mut prev: Option<Vec<Vec<T>>> = None;

    for size in (2..=n).rev() {
        if let Some(p) = &prev {
            let interior_zero = (1..size).any(|i| (1..size).any(|j| p[i][j].is_zero()));
            if interior_zero {
                return fallback(m);
            }
        }
        let mut next = Vec::with_capacity(size - 1);
        for i in 0..size - 1 {
            let mut row = Vec::with_capacity(size - 1);
            for j in 0..size - 1 {
                let cross = cur[i][j].clone() * &cur[i + 1][j + 1]
                    - cur[i][j + 1].clone() * &cur[i + 1][j];
                max_bits = max_bits.max(cross.bit_len());
                steps += 1;
                let v = match &prev {
                    None => cross,
                    Some(p) => cross
                        .exact_div(&p[i + 1][j + 1])
                        .expect("condensation quotient is exact for a nonzero divisor"),
                };
                row.push(v);
            }
            next.push(row);
        }
        prev = Some(std::mem::replace(&mut cur, next));
    }

    let value = cur.swap_remove(0).swap_remove(0);
    Determinant { value, algorithm: Engine::Dodgson, steps, max_bits, fallback: false }
}

fn fallback<T: ExactRing>(m: &Matrix<T>) -> Determinant<T> {
    let mut d = det_bareiss(m).expect("fraction-free elimination divides exactly");
    d.fallback = true;
    d
}
