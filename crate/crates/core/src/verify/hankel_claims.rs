use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::Result;
use crate::hankel::{build_hankel, det_bareiss, quotient_check, QuotientCheck};
use crate::report::{Check, VerificationReport};
use crate::sequences::{prefix, Family, SequenceId};

/// Hankel determinants `|x_{i+j}|_{0<=i,j<=n}` for `n = 0..=n_max`.
fn hankel_dets(id: SequenceId, n_max: usize) -> Result<Vec<BigInt>> {
    let terms = prefix(id, 2 * n_max)?;
    (0..=n_max)
        .map(|n| Ok(det_bareiss(&build_hankel(terms.terms(), n)?)?.value))
        .collect()
}

/// Determinant of the order-`(n+1)` Hankel matrix of `id` and its quotient by `base^exp`.
pub fn hankel_quotient(id: SequenceId, n: usize, base: u64, exp: u32) -> Result<(BigInt, QuotientCheck)> {
    let terms = prefix(id, 2 * n)?;
    let det = det_bareiss(&build_hankel(terms.terms(), n)?)?.value;
    let q = quotient_check(&det, base, exp);
    Ok((det, q))
}

fn odd_check(q: &QuotientCheck, what: String) -> Check {
    Check::new(q.is_integer && q.is_odd, q.quotient.clone(), format!("{what} is an odd integer"))
}

fn positive_odd_check(q: &QuotientCheck, what: String) -> Check {
    Check::new(
        q.is_integer && q.is_odd && q.is_positive,
        q.quotient.clone(),
        format!("{what} is a positive odd integer"),
    )
}

fn integer_check(q: &QuotientCheck, what: String) -> Check {
    Check::new(q.is_integer, q.remainder.clone(), format!("{what} is an integer (remainder 0)"))
}

/// Headline value per `n` is `6^-n |f_{i+j}|`; each `r` in `r_set` adds an
/// odd-quotient check on `2^-n |f^(r)_{i+j}|`.
pub fn verify_franel_hankel(n_max: usize, r_set: &[u32]) -> Result<VerificationReport> {
    let info = super::claim_info("franel-hankel")?;
    let mut report = VerificationReport::new(info.id, info.description, 0, n_max as u64);
    let franel = hankel_dets(SequenceId::FRANEL, n_max)?;
    let generalized = r_set
        .iter()
        .map(|&r| Ok((r, hankel_dets(SequenceId::franel(r)?, n_max)?)))
        .collect::<Result<Vec<_>>>()?;
    for n in 0..=n_max {
        let exp = n as u32;
        let six = quotient_check(&franel[n], 6, exp);
        let mut checks = vec![positive_odd_check(&six, format!("6^-{n} det(f)"))];
        for (r, dets) in &generalized {
            let two = quotient_check(&dets[n], 2, exp);
            checks.push(odd_check(&two, format!("2^-{n} det(f^({r}))")));
        }
        report.push(n as u64, six.quotient.clone(), checks);
    }
    Ok(report)
}

/// Headline value per `n` is `12^-n |D_{i+j}|`.
pub fn verify_domb_clf_hankel(n_max: usize) -> Result<VerificationReport> {
    let info = super::claim_info("domb-clf-hankel")?;
    let mut report = VerificationReport::new(info.id, info.description, 0, n_max as u64);
    let domb = hankel_dets(SequenceId::DOMB, n_max)?;
    let clf = hankel_dets(SequenceId::CLF, n_max)?;
    let domb1 = hankel_dets(SequenceId::domb(1)?, n_max)?;
    for n in 0..=n_max {
        let exp = n as u32;
        let d = quotient_check(&domb[n], 12, exp);
        let p = quotient_check(&clf[n], 2, (n * (n + 3)) as u32);
        let d1 = quotient_check(&domb1[n], 4, exp);
        let checks = vec![
            positive_odd_check(&d, format!("12^-{n} det(D)")),
            positive_odd_check(&p, format!("2^-{} det(P)", n * (n + 3))),
            positive_odd_check(&d1, format!("4^-{n} det(D^(1))")),
        ];
        report.push(n as u64, d.quotient.clone(), checks);
    }
    Ok(report)
}

/// Headline value per `n` is `10^-n |b_{i+j}|`. Only integrality is checked.
pub fn verify_apery_hankel(n_max: usize) -> Result<VerificationReport> {
    let info = super::claim_info("apery-hankel")?;
    let mut report = VerificationReport::new(info.id, info.description, 0, n_max as u64);
    let b = hankel_dets(SequenceId::APERY_B, n_max)?;
    let a = hankel_dets(SequenceId::APERY_A, n_max)?;
    for n in 0..=n_max {
        let exp = n as u32;
        let qb = quotient_check(&b[n], 10, exp);
        let qa = quotient_check(&a[n], 24, exp);
        let checks = vec![
            integer_check(&qb, format!("10^-{n} det(b)")),
            integer_check(&qa, format!("24^-{n} det(A)")),
        ];
        report.push(n as u64, qb.quotient.clone(), checks);
    }
    Ok(report)
}

/// Sign of each Apéry Hankel determinant. The report is marked experimental
/// and never gates a run.
///
/// # Panics
/// If `family` is neither `AperyB` nor `AperyA`.
pub fn probe_positivity_conjecture(family: Family, n_max: usize) -> Result<VerificationReport> {
    let (id, seq, name) = match family {
        Family::AperyB => ("positivity-apery-b", SequenceId::APERY_B, "b"),
        Family::AperyA => ("positivity-apery-a", SequenceId::APERY_A, "A"),
        other => panic!("no positivity conjecture for {other:?}"),
    };
    let info = super::claim_info(id)?;
    let mut report = VerificationReport::new(id, info.description, 0, n_max as u64).experimental();
    for (n, det) in hankel_dets(seq, n_max)?.into_iter().enumerate() {
        let check = Check::new(det.is_positive(), det.clone(), format!("det({name}) > 0"));
        report.push(n as u64, det, [check]);
    }
    Ok(report)
}
