use num_bigint::BigInt;
use num_traits::pow;

use super::{claim_info, ClaimKind};
use crate::error::{Error, Result};
use crate::numtheory::residue;
use crate::report::{Check, VerificationReport};
use crate::sequences::{prefix, prefix_by_recurrence, RecurrenceFamily, SequenceId};
use crate::transforms::{binomial_transform, iterated_transform};

/// A residue condition on one sequence over an inclusive index range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceClaim {
    claim_id: &'static str,
    modulus: u64,
    lo: u64,
    hi: u64,
    description: &'static str,
}

impl CongruenceClaim {
    /// Looks `id` up in the registry. The range is clamped below to the first
    /// index the congruence is stated for.
    pub fn new(id: &str, lo: u64, hi: u64) -> Result<Self> {
        let info = claim_info(id)?;
        let ClaimKind::Congruence { modulus } = info.kind else {
            return Err(Error::UnknownClaim(format!("{id} is not a congruence")));
        };
        let lo = lo.max(rule(info.id).min_index);
        if hi < lo {
            return Err(Error::Empty("congruence index range"));
        }
        Ok(Self { claim_id: info.id, modulus, lo, hi, description: info.description })
    }

    pub fn claim_id(&self) -> &'static str {
        self.claim_id
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn range(&self) -> (u64, u64) {
        (self.lo, self.hi)
    }

    pub fn description(&self) -> &'static str {
        self.description
    }
}

struct Rule {
    min_index: u64,
    series: fn(usize) -> Result<Vec<BigInt>>,
    /// Expected residue at index `n`, before reduction.
    expected: fn(u64) -> BigInt,
}

fn terms(id: SequenceId, n: usize) -> Result<Vec<BigInt>> {
    Ok(prefix(id, n)?.into_terms())
}

fn sign(n: u64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

fn rule(id: &str) -> Rule {
    let r = |min_index, series, expected| Rule { min_index, series, expected };
    match id {
        "g-mod3" => r(1, |n| terms(SequenceId::G_SUM, n), |_| 0.into()),
        "domb-mod3" => r(0, |n| terms(SequenceId::DOMB, n), |_| 1.into()),
        "domb-double-transform-mod3" => r(
            1,
            |n| iterated_transform(&terms(SequenceId::DOMB, n)?, 2),
            |_| 0.into(),
        ),
        "apery-b-odd" => r(0, |n| terms(SequenceId::APERY_B, n), |_| 1.into()),
        "apery-b-transform-mod2" => r(
            1,
            |n| binomial_transform(&terms(SequenceId::APERY_B, n)?),
            |_| 0.into(),
        ),
        "apery-b-mod5" => r(0, |n| terms(SequenceId::APERY_B, n), |n| pow(BigInt::from(3), n as usize)),
        "apery-b-double-transform-mod5" => r(
            1,
            |n| iterated_transform(&terms(SequenceId::APERY_B, n)?, 2),
            |_| 0.into(),
        ),
        "apery-a-transform-mod24" => r(
            3,
            |n| binomial_transform(&terms(SequenceId::APERY_A, n)?),
            |_| 0.into(),
        ),
        "gessel-mod8" => r(0, |n| terms(SequenceId::APERY_A, n), |n| if n % 2 == 0 { 1.into() } else { 5.into() }),
        "gessel-mod3" => r(0, |n| terms(SequenceId::APERY_A, n), |n| sign(n).into()),
        "gessel-mod24" => r(0, |n| terms(SequenceId::APERY_A, n), |n| (3 - 2 * sign(n)).into()),
        other => unreachable!("no residue rule for registered congruence {other}"),
    }
}

/// Evaluates the residue condition at every index of the claim's range.
pub fn verify_congruence(claim: &CongruenceClaim) -> Result<VerificationReport> {
    let rule = rule(claim.claim_id);
    let m = BigInt::from(claim.modulus);
    let series = (rule.series)(claim.hi as usize)?;
    let mut report = VerificationReport::new(claim.claim_id, claim.description, claim.lo, claim.hi);
    for n in claim.lo..=claim.hi {
        let observed = residue(&series[n as usize], &m);
        let expected = residue(&(rule.expected)(n), &m);
        let ok = observed == expected;
        report.push(n, observed.clone(), [Check::new(ok, observed, format!("= {expected} mod {m}"))]);
    }
    Ok(report)
}

/// Exact identities between two routes to the same sequence.
pub(crate) fn verify_identity(id: &str, hi: usize) -> Result<VerificationReport> {
    let info = claim_info(id)?;
    let (lhs, rhs, what): (Vec<BigInt>, Vec<BigInt>, &str) = match info.id {
        "barrucand" => (
            terms(SequenceId::G_SUM, hi)?,
            binomial_transform(&terms(SequenceId::FRANEL, hi)?)?,
            "binomial transform of f",
        ),
        "clf-domb-identity" => (
            terms(SequenceId::CLF, hi)?,
            terms(SequenceId::domb(1)?, hi)?.into_iter().enumerate().map(|(m, d)| d << m).collect(),
            "2^m D^(1)_m",
        ),
        "domb-recurrence" => (
            terms(SequenceId::DOMB, hi)?,
            prefix_by_recurrence(RecurrenceFamily::Domb, hi)?,
            "recurrence value",
        ),
        "apery-b-recurrence" => (
            terms(SequenceId::APERY_B, hi)?,
            prefix_by_recurrence(RecurrenceFamily::AperyB, hi)?,
            "recurrence value",
        ),
        _ => return Err(Error::UnknownClaim(format!("{id} is not an identity"))),
    };
    let mut report = VerificationReport::new(info.id, info.description, 0, hi as u64);
    for (n, (l, r)) in lhs.into_iter().zip(rhs).enumerate() {
        let ok = l == r;
        report.push(n as u64, l.clone(), [Check::new(ok, r, format!("equals {what}: {l}"))]);
    }
    Ok(report)
}
