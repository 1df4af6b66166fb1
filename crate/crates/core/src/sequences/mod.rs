//! Exact generators for the combinatorial sequences studied here.
//!
//! | family          | n-th term                                                   |
//! |-----------------|-------------------------------------------------------------|
//! | `FranelR(r)`    | `sum_k binom(n,k)^r` (`r = 3` gives the Franel numbers)     |
//! | `DombM(m)`      | `sum_k binom(n,k)^m binom(2k,k) binom(2n-2k,n-k)` (`m = 2`: Domb) |
//! | `Clf`           | `sum_k binom(2k,k)^2 binom(2n-2k,n-k)^2 / binom(n,k)`       |
//! | `AperyB`        | `sum_k binom(n,k)^2 binom(n+k,k)`                           |
//! | `AperyA`        | `sum_k binom(n,k)^2 binom(n+k,k)^2`                         |
//! | `CentralBinom`  | `binom(2n,n)`                                               |
//! | `GSum`          | `sum_k binom(n,k)^2 binom(2k,k)`                            |
//!
//! All terms are computed by their defining sums. The Domb and Apéry `b`
//! sequences additionally have three-term recurrences, see
//! [`term_by_recurrence`].

mod binomial;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{pow, One, Zero};
use serde::Serialize;

pub use binomial::{
    binomial, binomial_row, central_binomials, BinomialCache, CACHE_MAX_ENV,
    DEFAULT_CACHE_MAX_CELLS,
};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    FranelR,
    DombM,
    Clf,
    AperyB,
    AperyA,
    CentralBinom,
    GSum,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::FranelR,
        Family::DombM,
        Family::Clf,
        Family::AperyB,
        Family::AperyA,
        Family::CentralBinom,
        Family::GSum,
    ];

    pub fn takes_param(self) -> bool {
        matches!(self, Family::FranelR | Family::DombM)
    }
}

/// A sequence family together with its parameter (`r` or `m`; zero otherwise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SequenceId {
    family: Family,
    param: u32,
}

impl SequenceId {
    pub const FRANEL: SequenceId = SequenceId { family: Family::FranelR, param: 3 };
    pub const DOMB: SequenceId = SequenceId { family: Family::DombM, param: 2 };
    pub const CLF: SequenceId = SequenceId { family: Family::Clf, param: 0 };
    pub const APERY_B: SequenceId = SequenceId { family: Family::AperyB, param: 0 };
    pub const APERY_A: SequenceId = SequenceId { family: Family::AperyA, param: 0 };
    pub const CENTRAL_BINOM: SequenceId = SequenceId { family: Family::CentralBinom, param: 0 };
    pub const G_SUM: SequenceId = SequenceId { family: Family::GSum, param: 0 };

    pub fn new(family: Family, param: u32) -> Result<Self> {
        let ok = if family.takes_param() { param >= 1 } else { param == 0 };
        if !ok {
            return Err(Error::InvalidSequence(format!("{family:?} with parameter {param}")));
        }
        Ok(Self { family, param })
    }

    /// Generalised Franel numbers with exponent `r >= 1`.
    pub fn franel(r: u32) -> Result<Self> {
        Self::new(Family::FranelR, r)
    }

    /// Generalised Domb numbers with exponent `m >= 1`.
    pub fn domb(m: u32) -> Result<Self> {
        Self::new(Family::DombM, m)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn param(&self) -> u32 {
        self.param
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::FranelR => write!(f, "franel(r={})", self.param),
            Family::DombM => write!(f, "domb(m={})", self.param),
            Family::Clf => f.write_str("clf"),
            Family::AperyB => f.write_str("apery-b"),
            Family::AperyA => f.write_str("apery-a"),
            Family::CentralBinom => f.write_str("central"),
            Family::GSum => f.write_str("g"),
        }
    }
}

/// The first `N + 1` terms of a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTerms {
    id: SequenceId,
    terms: Vec<BigInt>,
}

impl SequenceTerms {
    pub fn id(&self) -> SequenceId {
        self.id
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::ops::Index<usize> for SequenceTerms {
    type Output = BigInt;

    fn index(&self, n: usize) -> &BigInt {
        &self.terms[n]
    }
}

/// Exact value of the `n`-th term.
pub fn term(id: SequenceId, n: usize) -> Result<BigInt> {
    let mut cache = BinomialCache::from_env();
    let central = central_binomials(n);
    term_with(&mut cache, &central, id, n)
}

/// Terms `0..=n_max` in one pass over a shared binomial cache.
pub fn prefix(id: SequenceId, n_max: usize) -> Result<SequenceTerms> {
    prefix_with_cache(id, n_max, &mut BinomialCache::from_env())
}

pub fn prefix_with_cache(
    id: SequenceId,
    n_max: usize,
    cache: &mut BinomialCache,
) -> Result<SequenceTerms> {
    SequenceId::new(id.family, id.param)?;
    let central = central_binomials(n_max);
    let terms = (0..=n_max)
        .map(|n| term_with(cache, &central, id, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(SequenceTerms { id, terms })
}

fn term_with(
    cache: &mut BinomialCache,
    central: &[BigInt],
    id: SequenceId,
    n: usize,
) -> Result<BigInt> {
    SequenceId::new(id.family, id.param)?;
    let exp = id.param as usize;
    if id.family == Family::CentralBinom {
        return Ok(central[n].clone());
    }
    let row = cache.row(n);
    let mut sum = BigInt::zero();
    match id.family {
        Family::FranelR => {
            for c in row.iter() {
                sum += pow(c.clone(), exp);
            }
        }
        Family::DombM => {
            for (k, c) in row.iter().enumerate() {
                sum += pow(c.clone(), exp) * &central[k] * &central[n - k];
            }
        }
        Family::Clf => {
            for (k, c) in row.iter().enumerate() {
                let num = (&central[k] * &central[n - k]).pow(2);
                let (q, r) = num.div_rem(c);
                if !r.is_zero() {
                    return Err(Error::DivisionNotExact { context: "clf summand", index: n });
                }
                sum += q;
            }
        }
        Family::AperyB | Family::AperyA => {
            // binom(n+k, k), built up along k
            let mut upper = BigInt::one();
            for (k, c) in row.iter().enumerate() {
                if k > 0 {
                    upper = upper * (n + k) / k;
                }
                let t = c * &upper;
                sum += if id.family == Family::AperyB { t * c } else { &t * &t };
            }
        }
        Family::GSum => {
            for (k, c) in row.iter().enumerate() {
                sum += c * c * &central[k];
            }
        }
        Family::CentralBinom => unreachable!(),
    }
    Ok(sum)
}

/// Families with a known three-term recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecurrenceFamily {
    /// `n^3 D_n = 2(2n-1)(5n^2-5n+2) D_{n-1} - 64 (n-1)^3 D_{n-2}`
    Domb,
    /// `n^2 b_n = (11n^2-11n+3) b_{n-1} + (n-1)^2 b_{n-2}`
    AperyB,
}

impl RecurrenceFamily {
    pub fn sequence_id(self) -> SequenceId {
        match self {
            RecurrenceFamily::Domb => SequenceId::DOMB,
            RecurrenceFamily::AperyB => SequenceId::APERY_B,
        }
    }
}

pub fn term_by_recurrence(family: RecurrenceFamily, n: usize) -> Result<BigInt> {
    let mut terms = prefix_by_recurrence(family, n)?;
    Ok(terms.swap_remove(n))
}

/// Terms `0..=n_max` by the recurrence, seeded with the summation values at 0 and 1.
/// Every division by the leading coefficient is checked.
pub fn prefix_by_recurrence(family: RecurrenceFamily, n_max: usize) -> Result<Vec<BigInt>> {
    let id = family.sequence_id();
    let mut out = vec![term(id, 0)?];
    if n_max >= 1 {
        out.push(term(id, 1)?);
    }
    for n in 2..=n_max {
        let k = BigInt::from(n);
        let k1: BigInt = &k - 1;
        let (lead, rhs): (BigInt, BigInt) = match family {
            RecurrenceFamily::Domb => {
                let a = BigInt::from(2) * (&k * 2 - 1) * (&k * &k * 5 - &k * 5 + 2);
                let b = BigInt::from(64) * k1.pow(3);
                (k.pow(3), a * &out[n - 1] - b * &out[n - 2])
            }
            RecurrenceFamily::AperyB => {
                let a = &k * &k * 11 - &k * 11 + 3;
                let b = &k1 * &k1;
                (&k * &k, a * &out[n - 1] + b * &out[n - 2])
            }
        };
        let (q, r) = rhs.div_rem(&lead);
        if !r.is_zero() {
            return Err(Error::DivisionNotExact { context: "recurrence", index: n });
        }
        out.push(q);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn as_i64(terms: &SequenceTerms) -> Vec<i64> {
        terms.terms().iter().map(|t| i64::try_from(t).unwrap()).collect()
    }

    #[test]
    fn id_validation() {
        assert!(SequenceId::franel(0).is_err());
        assert!(SequenceId::domb(0).is_err());
        assert!(SequenceId::new(Family::Clf, 2).is_err());
        assert!(SequenceId::new(Family::GSum, 0).is_ok());
        assert_eq!(SequenceId::franel(3).unwrap(), SequenceId::FRANEL);
    }

    #[test]
    fn single_terms() {
        assert_eq!(term(SequenceId::FRANEL, 2).unwrap(), big(10));
        assert_eq!(term(SequenceId::FRANEL, 0).unwrap(), big(1));
        assert_eq!(term(SequenceId::DOMB, 1).unwrap(), big(4));
        assert_eq!(term(SequenceId::APERY_B, 1).unwrap(), big(3));
        assert_eq!(term(SequenceId::CLF, 2).unwrap(), big(80));
        assert_eq!(term(SequenceId::FRANEL, 6).unwrap(), big(15184));
    }

    #[test]
    fn prefixes() {
        assert_eq!(as_i64(&prefix(SequenceId::APERY_A, 2).unwrap()), [1, 5, 73]);
        assert_eq!(as_i64(&prefix(SequenceId::CLF, 1).unwrap()), [1, 8]);
        assert_eq!(as_i64(&prefix(SequenceId::CENTRAL_BINOM, 3).unwrap()), [1, 2, 6, 20]);
        assert_eq!(
            as_i64(&prefix(SequenceId::DOMB, 8).unwrap()),
            [1, 4, 28, 256, 2716, 31504, 387136, 4951552, 65218204]
        );
        assert_eq!(
            as_i64(&prefix(SequenceId::G_SUM, 6).unwrap()),
            [1, 3, 15, 93, 639, 4653, 35169]
        );
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(term_by_recurrence(RecurrenceFamily::Domb, 2).unwrap(), big(28));
        assert_eq!(term_by_recurrence(RecurrenceFamily::AperyB, 2).unwrap(), big(19));
        assert_eq!(term_by_recurrence(RecurrenceFamily::Domb, 0).unwrap(), big(1));
    }

    #[test]
    fn recurrences_match_summation() {
        for fam in [RecurrenceFamily::Domb, RecurrenceFamily::AperyB] {
            let rec = prefix_by_recurrence(fam, 80).unwrap();
            let sum = prefix(fam.sequence_id(), 80).unwrap();
            assert_eq!(rec.as_slice(), sum.terms());
        }
    }

    #[test]
    fn low_order_franel_anchors() {
        let ones = prefix(SequenceId::franel(1).unwrap(), 40).unwrap();
        let twos = prefix(SequenceId::franel(2).unwrap(), 40).unwrap();
        let central = central_binomials(40);
        for n in 0..=40 {
            assert_eq!(ones[n], BigInt::one() << n);
            assert_eq!(twos[n], central[n]);
        }
    }

    #[test]
    fn clf_is_scaled_domb_one() {
        let clf = prefix(SequenceId::CLF, 60).unwrap();
        let d1 = prefix(SequenceId::domb(1).unwrap(), 60).unwrap();
        for m in 0..=60 {
            assert_eq!(clf[m], &d1[m] << m);
        }
    }

    #[test]
    fn tiny_cache_gives_same_terms() {
        let mut small = BinomialCache::with_max_cells(3);
        let a = prefix_with_cache(SequenceId::APERY_A, 30, &mut small).unwrap();
        let b = prefix(SequenceId::APERY_A, 30).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn all_families_start_at_one_and_increase() {
        let ids = [
            SequenceId::franel(1).unwrap(),
            SequenceId::franel(2).unwrap(),
            SequenceId::FRANEL,
            SequenceId::franel(6).unwrap(),
            SequenceId::domb(1).unwrap(),
            SequenceId::DOMB,
            SequenceId::domb(3).unwrap(),
            SequenceId::CLF,
            SequenceId::APERY_B,
            SequenceId::APERY_A,
            SequenceId::CENTRAL_BINOM,
            SequenceId::G_SUM,
        ];
        for id in ids {
            let p = prefix(id, 50).unwrap();
            assert_eq!(p[0], BigInt::one(), "{id}");
            assert!(p.terms().windows(2).all(|w| w[0] < w[1]), "{id}");
        }
    }
}
