use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::ExactRing;

/// Dense square matrix, row-major. Order is at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    order: usize,
    entries: Vec<T>,
    hankel: bool,
}

impl<T: ExactRing> Matrix<T> {
    pub fn from_row_major(order: usize, entries: Vec<T>) -> Result<Self> {
        if order == 0 || entries.len() != order * order {
            return Err(Error::NotSquare { order, len: entries.len() });
        }
        Ok(Self { order, entries, hankel: false })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            let len = rows.iter().map(Vec::len).sum();
            return Err(Error::NotSquare { order, len });
        }
        Self::from_row_major(order, rows.into_iter().flatten().collect())
    }

    /// # Panics
    /// If `order` is zero.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(order > 0, "matrix order must be positive");
        let entries = (0..order * order).map(|p| f(p / order, p % order)).collect();
        Self { order, entries, hankel: false }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// `(n+1) x (n+1)` matrix with entry `(i, j) = terms[i + j]`.
    pub fn hankel(terms: &[T], n: usize) -> Result<Self> {
        let needed = 2 * n + 1;
        if terms.len() < needed {
            return Err(Error::InsufficientTerms { needed, got: terms.len() });
        }
        let mut m = Self::from_fn(n + 1, |i, j| terms[i + j].clone());
        m.hankel = true;
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.order + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        self.entries.chunks(self.order).map(<[T]>::to_vec).collect()
    }

    /// Whether this matrix was built from a sequence prefix.
    pub fn is_hankel_built(&self) -> bool {
        self.hankel
    }

    /// Checks that entry `(i, j)` depends only on `i + j`.
    pub fn has_constant_antidiagonals(&self) -> bool {
        (0..self.order).all(|i| {
            (1..self.order).all(|j| i + 1 >= self.order || self.get(i, j) == self.get(i + 1, j - 1))
        })
    }

    /// Square submatrix on the given (sorted, distinct) row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::NotSquare { order: rows.len(), len: rows.len() * cols.len() });
        }
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Self::from_row_major(rows.len(), entries)
    }

    pub fn map<U: ExactRing>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            order: self.order,
            entries: self.entries.iter().map(f).collect(),
            hankel: self.hankel,
        }
    }

    pub(crate) fn max_entry_bits(&self) -> u64 {
        self.entries.iter().map(ExactRing::bit_len).max().unwrap_or(0)
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.order).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}
