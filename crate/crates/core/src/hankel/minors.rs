use itertools::Itertools;

use crate::hankel::{det_bareiss, Matrix};
use crate::scalar::ExactRing;

/// A negative minor, identified by its row and column index sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorViolation<T> {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorScan<T> {
    pub minors_checked: u64,
    pub violation: Option<MinorViolation<T>>,
}

impl<T> MinorScan<T> {
    pub fn all_nonnegative(&self) -> bool {
        self.violation.is_none()
    }
}

/// Evaluates every square minor of order `1..=max_order` and stops at the
/// first negative one.
///
/// Minors are visited by order, then row set, then column set, each
/// lexicographically, so the reported violation is the smallest one in that
/// ordering. `max_order` is clamped to the matrix order.
pub fn all_minors_nonneg<T: ExactRing>(m: &Matrix<T>, max_order: usize) -> MinorScan<T> {
    let n = m.order();
    let mut checked = 0u64;
    for k in 1..=max_order.min(n) {
        for rows in (0..n).combinations(k) {
            for cols in (0..n).combinations(k) {
                let sub = m.submatrix(&rows, &cols).expect("index sets are square");
                let value = det_bareiss(&sub).expect("fraction-free elimination divides exactly").value;
                checked += 1;
                if value.is_negative() {
                    return MinorScan {
                        minors_checked: checked,
                        violation: Some(MinorViolation { rows, cols: cols.clone(), value }),
                    };
                }
            }
        }
    }
    MinorScan { minors_checked: checked, violation: None }
}
