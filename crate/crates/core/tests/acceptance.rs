//! Acceptance suite: one line per criterion, non-zero exit if a gating
//! criterion fails. Run with `cargo test -p hankel-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hankel_core::hankel::{
    build_hankel, det_bareiss, det_dodgson, det_laplace_with_cap, scaled_hankel, Matrix,
};
use hankel_core::sequences::{prefix, SequenceId};
use hankel_core::transforms::{binomial_transform, inverse_binomial_transform};
use hankel_core::verify::{
    probe_positivity_conjecture, registry, run_claim, verify_apery_hankel,
    verify_calkin_valuation, verify_domb_clf_hankel, verify_domb_generalized_mod8,
    verify_franel_hankel, verify_franel_primes, verify_odd_quotient_hypotheses,
    verify_parity_unimodular, ClaimGroup, ClaimKind, Config,
};
use hankel_core::{BigInt, Family, VerificationReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn from_reports(reports: &[VerificationReport]) -> Self {
        let failed: Vec<_> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| format!("{} ({} witnesses, first {:?})", r.claim_id, r.witnesses.len(), r.witnesses.first()))
            .collect();
        let indices: usize = reports.iter().map(|r| r.entries.len()).sum();
        Outcome {
            ok: failed.is_empty(),
            detail: if failed.is_empty() {
                format!("{indices} indices checked")
            } else {
                failed.join("; ")
            },
        }
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            out.ok = false;
            out.detail = format!("{} (time limit {:?} exceeded)", out.detail, limit);
        }
    }
    (out, elapsed)
}

fn all_sequences() -> Vec<SequenceId> {
    let mut ids: Vec<SequenceId> = (3..=6).map(|r| SequenceId::franel(r).unwrap()).collect();
    ids.extend((1..=3).map(|m| SequenceId::domb(m).unwrap()));
    ids.extend([
        SequenceId::CLF,
        SequenceId::APERY_B,
        SequenceId::APERY_A,
        SequenceId::CENTRAL_BINOM,
        SequenceId::G_SUM,
    ]);
    ids
}

fn c1() -> Outcome {
    Outcome::from_reports(&[verify_franel_hankel(12, &[3, 4, 5, 6]).unwrap()])
}

fn c2() -> Outcome {
    Outcome::from_reports(&[verify_domb_clf_hankel(12).unwrap()])
}

fn c3() -> Outcome {
    Outcome::from_reports(&[verify_apery_hankel(12).unwrap()])
}

fn c4() -> Outcome {
    Outcome::from_reports(&[verify_calkin_valuation(512, 6).unwrap()])
}

fn c5() -> Outcome {
    Outcome::from_reports(&[
        verify_odd_quotient_hypotheses(128).unwrap(),
        verify_parity_unimodular(64).unwrap(),
    ])
}

fn c6() -> Outcome {
    Outcome::from_reports(&[verify_domb_generalized_mod8(256, &[1, 2, 3]).unwrap()])
}

fn c7() -> Outcome {
    let config = Config { index_max: 200, ..Config::default() };
    let groups = [
        ClaimGroup::DombMod3,
        ClaimGroup::DombDoubleTransform,
        ClaimGroup::AperyBTransforms,
        ClaimGroup::AperyATransform,
        ClaimGroup::Gessel,
        ClaimGroup::Barrucand,
        ClaimGroup::ClfIdentity,
    ];
    let reports: Vec<_> = registry()
        .iter()
        .filter(|c| groups.contains(&c.group) || c.id == "g-mod3")
        .filter(|c| matches!(c.kind, ClaimKind::Congruence { .. } | ClaimKind::Identity))
        .map(|c| run_claim(c.id, &config).unwrap())
        .collect();
    let mut out = Outcome::from_reports(&reports);
    out.detail = format!("{} claims, {}", reports.len(), out.detail);
    out
}

fn c8() -> Outcome {
    let primes: Vec<u64> = Config::default().primes;
    let r = verify_franel_primes(&primes).unwrap();
    let mut out = Outcome::from_reports(&[r]);
    let split = primes.iter().filter(|&&p| p % 3 == 1).count();
    out.detail = format!("{} primes ({split} via x^2+3y^2), {}", primes.len(), out.detail);
    out
}

fn c9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4841_4e4b);
    let mut mismatches = Vec::new();
    let mut fallbacks = 0;
    for case in 0..500 {
        let n = rng.gen_range(1..=6);
        let m = Matrix::from_fn(n, |_, _| BigInt::from(rng.gen_range(-1_000_000i64..=1_000_000)));
        let l = det_laplace_with_cap(&m, 13).unwrap().value;
        let b = det_bareiss(&m).unwrap().value;
        let d = det_dodgson(&m);
        fallbacks += usize::from(d.fallback);
        if l != b || l != d.value {
            mismatches.push(format!("random case {case}"));
        }
    }
    let mut hankels = 0;
    for id in all_sequences() {
        let t = prefix(id, 24).unwrap();
        for n in 0..=12 {
            let m = build_hankel(t.terms(), n).unwrap();
            let l = det_laplace_with_cap(&m, 13).unwrap().value;
            let b = det_bareiss(&m).unwrap().value;
            let d = det_dodgson(&m);
            fallbacks += usize::from(d.fallback);
            hankels += 1;
            if l != b || l != d.value {
                mismatches.push(format!("{id} order {}", n + 1));
            }
        }
    }
    Outcome {
        ok: mismatches.is_empty(),
        detail: if mismatches.is_empty() {
            format!("500 random + {hankels} Hankel matrices agree, {fallbacks} condensation fallbacks")
        } else {
            mismatches.join(", ")
        },
    }
}

fn c10() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for len in 1..=50 {
        let x: Vec<BigInt> = (0..len).map(|_| BigInt::from(rng.gen_range(-1_000_000i64..=1_000_000))).collect();
        if inverse_binomial_transform(&binomial_transform(&x).unwrap()).unwrap() != x {
            failures.push(format!("round trip length {len}"));
        }
    }
    for id in all_sequences() {
        let t = prefix(id, 49).unwrap();
        if inverse_binomial_transform(&binomial_transform(t.terms()).unwrap()).unwrap() != t.terms() {
            failures.push(format!("round trip {id}"));
        }
        let tt = binomial_transform(t.terms()).unwrap();
        for n in 0..=8 {
            let a = det_bareiss(&build_hankel(t.terms(), n).unwrap()).unwrap().value;
            let b = det_bareiss(&build_hankel(&tt, n).unwrap()).unwrap().value;
            if a != b {
                failures.push(format!("transform invariance {id} order {}", n + 1));
            }
            let s = det_bareiss(&scaled_hankel(t.terms(), n).unwrap()).unwrap().value;
            if s != &a << (n * (n + 1)) {
                failures.push(format!("2-power scaling {id} order {}", n + 1));
            }
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: if failures.is_empty() {
            "round trips to length 50, invariance and scaling to order 9".into()
        } else {
            failures.join(", ")
        },
    }
}

fn c11() -> Outcome {
    let b = probe_positivity_conjecture(Family::AperyB, 12).unwrap();
    let a = probe_positivity_conjecture(Family::AperyA, 12).unwrap();
    let ok = b.passed() && a.passed();
    Outcome {
        ok,
        detail: format!(
            "EXPERIMENTAL: b {} / A {} positive determinants of 13",
            b.entries.len() - b.failures(),
            a.entries.len() - a.failures()
        ),
    }
}

fn c12() -> Outcome {
    let t = prefix(SequenceId::FRANEL, 100).unwrap();
    let m = build_hankel(t.terms(), 50).unwrap();
    let d = det_bareiss(&m).unwrap();
    let q = hankel_core::hankel::quotient_check(&d.value, 6, 50);
    Outcome {
        ok: m.order() == 51 && q.is_integer && q.is_odd && q.is_positive,
        detail: format!("order 51, {} steps, max_bits {}, det has {} bits", d.steps, d.max_bits, d.value.bits()),
    }
}

fn main() -> ExitCode {
    // registry completeness is a precondition for criterion 7
    let covered: std::collections::HashSet<_> = registry().iter().map(|c| c.group).collect();
    assert_eq!(covered.len(), ClaimGroup::ALL.len(), "claim registry incomplete");

    let ten = Some(Duration::from_secs(10));
    let criteria: Vec<(&str, bool, Option<Duration>, fn() -> Outcome)> = vec![
        ("1  Franel Hankel quotients (n<=12, r=3..6)", true, ten, c1),
        ("2  Domb / CLF / D^(1) Hankel quotients (n<=12)", true, ten, c2),
        ("3  Apery b / A Hankel integrality (n<=12)", true, ten, c3),
        ("4  2^ones(n) | f^(r)_n (n<=512, r<=6)", true, None, c4),
        ("5  odd-quotient hypotheses (<=128) and parity determinants (n<=64)", true, None, c5),
        ("6  D^(m)_n mod 8 (n<=256, m=1..3)", true, None, c6),
        ("7  congruence and identity registry (<=200)", true, None, c7),
        ("8  Franel prime congruences (5<=p<=97)", true, Some(Duration::from_secs(30)), c8),
        ("9  engine agreement", true, None, c9),
        ("10 transform round trip, invariance, scaling", true, None, c10),
        ("11 positivity conjecture probe (n<=12)", false, None, c11),
        ("12 Bareiss on order-51 Franel Hankel", true, Some(Duration::from_secs(60)), c12),
    ];

    let mut all_ok = true;
    for (name, gating, limit, f) in criteria {
        let (out, elapsed) = timed(limit, f);
        let tag = match (out.ok, gating) {
            (true, true) => "PASS",
            (false, true) => "FAIL",
            (true, false) => "PASS (experimental)",
            (false, false) => "WARN (experimental)",
        };
        println!("[{tag}] {name}: {} [{:.2?}]", out.detail, elapsed);
        if gating && !out.ok {
            all_ok = false;
        }
    }
    if all_ok {
        println!("acceptance: all gating criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
