use std::borrow::Cow;

use num_bigint::BigInt;
use num_traits::One;

/// Environment variable capping the number of binomial cells a cache may hold.
pub const CACHE_MAX_ENV: &str = "HF_BINOM_CACHE_MAX";

/// Default cell budget: about 2900 full Pascal rows.
pub const DEFAULT_CACHE_MAX_CELLS: usize = 1 << 22;

/// Pascal-triangle rows of exact binomials, grown on demand.
///
/// Rows are stored contiguously from row 0 while the cell budget allows.
/// Past the budget, rows are computed by the multiplicative formula on every
/// request and dropped afterwards. A cache is owned by a single computation;
/// clone it if several threads need one.
#[derive(Debug, Clone)]
pub struct BinomialCache {
    rows: Vec<Vec<BigInt>>,
    cells: usize,
    max_cells: usize,
}

impl Default for BinomialCache {
    fn default() -> Self {
        Self::from_env()
    }
}

impl BinomialCache {
    pub fn with_max_cells(max_cells: usize) -> Self {
        Self {
            rows: Vec::new(),
            cells: 0,
            max_cells,
        }
    }

    /// Reads the budget from `HF_BINOM_CACHE_MAX`, falling back to
    /// [`DEFAULT_CACHE_MAX_CELLS`] when unset or unparsable.
    pub fn from_env() -> Self {
        Self::with_max_cells(cache_max_from_env())
    }

    pub fn max_cells(&self) -> usize {
        self.max_cells
    }

    /// Number of cells currently stored.
    pub fn cached_cells(&self) -> usize {
        self.cells
    }

    /// Row `n` of Pascal's triangle: `binom(n, 0..=n)`.
    pub fn row(&mut self, n: usize) -> Cow<'_, [BigInt]> {
        while self.rows.len() <= n {
            let next = self.rows.len();
            if self.cells + next + 1 > self.max_cells {
                break;
            }
            let row = match self.rows.last() {
                None => vec![BigInt::one()],
                Some(prev) => {
                    let mut row = Vec::with_capacity(next + 1);
                    row.push(BigInt::one());
                    row.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
                    row.push(BigInt::one());
                    row
                }
            };
            self.cells += row.len();
            self.rows.push(row);
        }
        match self.rows.get(n) {
            Some(row) => Cow::Borrowed(row.as_slice()),
            None => Cow::Owned(binomial_row(n)),
        }
    }
}

pub(crate) fn cache_max_from_env() -> usize {
    std::env::var(CACHE_MAX_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CACHE_MAX_CELLS)
}

/// `binom(n, 0..=n)` by the multiplicative recurrence, without a cache.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

/// Exact `binom(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

/// `binom(2k, k)` for `k = 0..=n`.
pub fn central_binomials(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    out.push(c.clone());
    for k in 1..=n {
        // binom(2k,k) = binom(2k-2,k-1) * 2(2k-1) / k
        c = c * (2 * (2 * k - 1)) / k;
        out.push(c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_rows() {
        let mut cache = BinomialCache::with_max_cells(1000);
        assert_eq!(&*cache.row(0), ints(&[1]).as_slice());
        assert_eq!(&*cache.row(4), ints(&[1, 4, 6, 4, 1]).as_slice());
        assert_eq!(cache.cached_cells(), 15);
    }

    #[test]
    fn budget_exhaustion_falls_back_to_direct_rows() {
        let mut cache = BinomialCache::with_max_cells(10);
        // rows 0..=3 fit (10 cells); row 6 does not
        let row = cache.row(6).into_owned();
        assert_eq!(row, ints(&[1, 6, 15, 20, 15, 6, 1]));
        assert_eq!(cache.cached_cells(), 10);
        assert!(matches!(cache.row(6), Cow::Owned(_)));
        assert!(matches!(cache.row(3), Cow::Borrowed(_)));
    }

    #[test]
    fn cached_and_direct_rows_agree() {
        let mut cache = BinomialCache::with_max_cells(usize::MAX);
        for n in 0..60 {
            assert_eq!(cache.row(n).into_owned(), binomial_row(n));
            for k in 0..=n {
                assert_eq!(binomial(n as u64, k as u64), binomial_row(n)[k]);
            }
        }
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn central_values() {
        assert_eq!(central_binomials(5), ints(&[1, 2, 6, 20, 70, 252]));
    }
}
