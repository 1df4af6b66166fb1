use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::claim_info;
use crate::error::Result;
use crate::hankel::{det_bareiss, is_unit};
use crate::numtheory::{is_power_of_two, nu2, odd_quotient_checks, ones_count, parity_matrix};
use crate::report::{Check, VerificationReport};
use crate::sequences::{binomial, prefix, prefix_with_cache, BinomialCache, SequenceId};

/// Sequences that satisfy the odd-quotient hypotheses, with their `k`.
fn odd_quotient_sequences(n_max: usize) -> Result<Vec<(String, Vec<BigInt>, u64)>> {
    let mut out = Vec::new();
    for r in 3..=6 {
        let id = SequenceId::franel(r)?;
        out.push((id.to_string(), prefix(id, n_max)?.into_terms(), 1));
    }
    out.push((SequenceId::DOMB.to_string(), prefix(SequenceId::DOMB, n_max)?.into_terms(), 2));
    Ok(out)
}

/// Valuation bound `nu2(f^(r)_n) >= ones(n)` for `r = 1..=r_max`, and for
/// `r >= 2` the refinement `4 | f^(r)_n` iff `n` is not a power of two.
/// Headline per `n`: the smallest valuation over all `r`.
pub fn verify_calkin_valuation(n_max: usize, r_max: u32) -> Result<VerificationReport> {
    let info = claim_info("calkin-valuation")?;
    let mut cache = BinomialCache::from_env();
    let seqs = (1..=r_max)
        .map(|r| Ok((r, prefix_with_cache(SequenceId::franel(r)?, n_max, &mut cache)?.into_terms())))
        .collect::<Result<Vec<_>>>()?;
    let four = BigInt::from(4);
    let mut report = VerificationReport::new(info.id, info.description, 0, n_max as u64);
    for n in 0..=n_max {
        let ones = u64::from(ones_count(n as u64));
        let mut checks = Vec::new();
        let mut min_val = u64::MAX;
        for (r, terms) in &seqs {
            let v = nu2(&terms[n])?;
            min_val = min_val.min(v);
            checks.push(Check::new(v >= ones, v, format!("nu2(f^({r})_{n}) >= {ones}")));
            if *r >= 2 && n >= 1 {
                let pow2 = is_power_of_two(n as u64);
                checks.push(Check::new(
                    terms[n].is_multiple_of(&four) != pow2,
                    v,
                    format!("4 | f^({r})_{n} iff {n} is not a power of two"),
                ));
            }
        }
        report.push(n as u64, min_val.into(), checks);
    }
    Ok(report)
}

/// `D^(m)_n = 4 binom(2n-1, n-1) mod 8` for `n >= 1`, with `8 | D^(m)_n` exactly
/// off powers of two. Headline per `n`: `D^(m)_n mod 8` for the first `m`.
pub fn verify_domb_generalized_mod8(n_max: usize, ms: &[u32]) -> Result<VerificationReport> {
    let info = claim_info("domb-generalized-mod8")?;
    let seqs = ms
        .iter()
        .map(|&m| Ok((m, prefix(SequenceId::domb(m)?, n_max)?.into_terms())))
        .collect::<Result<Vec<_>>>()?;
    let eight = BigInt::from(8);
    let mut report = VerificationReport::new(info.id, info.description, 1, n_max as u64);
    for n in 1..=n_max {
        let n64 = n as u64;
        let target = (binomial(2 * n64 - 1, n64 - 1) * BigInt::from(4)).mod_floor(&eight);
        let pow2 = is_power_of_two(n64);
        let mut checks = Vec::new();
        let mut head = BigInt::zero();
        for (i, (m, terms)) in seqs.iter().enumerate() {
            let res = terms[n].mod_floor(&eight);
            if i == 0 {
                head = res.clone();
            }
            checks.push(Check::new(res == target, res.clone(), format!("D^({m})_{n} = {target} mod 8")));
            checks.push(Check::new(
                res.is_zero() != pow2,
                res,
                format!("8 | D^({m})_{n} iff {n} is not a power of two"),
            ));
        }
        report.push(n64, head, checks);
    }
    Ok(report)
}

/// Odd-quotient hypotheses for Franel `f^(3..=6)` (k = 1) and Domb (k = 2),
/// indices `0..=n_max`. Headline: the Franel term.
pub fn verify_odd_quotient_hypotheses(n_max: usize) -> Result<VerificationReport> {
    let info = claim_info("odd-quotient-hypotheses")?;
    let seqs = odd_quotient_sequences(n_max)?;
    let mut report = VerificationReport::new(info.id, info.description, 0, n_max as u64);
    for i in 0..=n_max {
        let checks = seqs
            .iter()
            .flat_map(|(name, x, k)| {
                odd_quotient_checks(i, &x[i], *k).into_iter().map(move |mut c| {
                    c.expected = format!("{name}: {}", c.expected);
                    c
                })
            })
            .collect::<Vec<_>>();
        report.push(i as u64, seqs[0].1[i].clone(), checks);
    }
    Ok(report)
}

/// `det [x_{i+j}/2k mod 2]_{1<=i,j<=n} = +-1` for `n = 1..=n_max`.
/// Headline: the Franel parity determinant.
pub fn verify_parity_unimodular(n_max: usize) -> Result<VerificationReport> {
    let info = claim_info("parity-matrix-unimodular")?;
    let seqs = odd_quotient_sequences(2 * n_max)?;
    let mut report = VerificationReport::new(info.id, info.description, 1, n_max as u64);
    for n in 1..=n_max {
        let mut checks = Vec::new();
        let mut head = BigInt::zero();
        for (i, (name, x, k)) in seqs.iter().enumerate() {
            let det = det_bareiss(&parity_matrix(x, *k, n)?)?.value;
            if i == 0 {
                head = det.clone();
            }
            checks.push(Check::new(is_unit(&det), det, format!("{name}: parity determinant is +-1")));
        }
        report.push(n as u64, head, checks);
    }
    Ok(report)
}
