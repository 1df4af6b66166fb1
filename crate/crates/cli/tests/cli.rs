use hankel_cli::{emit_report, run, Format, EXIT_CLAIM_FAILED, EXIT_OK, EXIT_USAGE};
use hankel_core::report::Check;
use hankel_core::{BigInt, VerificationReport};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hankel").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn seq_text_lists_terms() {
    let (code, out, _) = invoke(&["seq", "--family", "franel", "--r", "3", "--n", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1 2 10 56 346\n");
}

#[test]
fn seq_csv_and_json() {
    let (_, out, _) = invoke(&["seq", "--family", "apery-b", "--n", "2", "--format", "csv"]);
    assert_eq!(out, "n,value\n0,1\n1,3\n2,19\n");
    let (_, out, _) = invoke(&["seq", "--family", "apery-a", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["terms"], serde_json::json!(["1", "5", "73"]));
}

#[test]
fn hankel_domb_order_two() {
    let (code, out, _) = invoke(&["hankel", "--family", "domb", "--n", "1", "--engine", "bareiss"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("det       12\n"), "{out}");
    assert!(out.contains("det / 12^1 = 1 (integer, odd, positive)"), "{out}");
}

#[test]
fn hankel_json_engines_agree() {
    let mut dets = Vec::new();
    for engine in ["laplace", "bareiss", "dodgson"] {
        let (code, out, _) =
            invoke(&["hankel", "--family", "clf", "--n", "4", "--engine", engine, "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["quotient"]["is_odd"], true);
        dets.push(v["det"].as_str().unwrap().to_owned());
    }
    assert!(dets.iter().all(|d| d == "2086011928576"));
}

#[test]
fn explicit_quotient_base() {
    let (_, out, _) = invoke(&["hankel", "--family", "central", "--n", "3", "--base", "3", "--exp", "1"]);
    assert!(out.contains("remainder 2"), "{out}");
    let (code, _, _) = invoke(&["hankel", "--family", "central", "--n", "3", "--base", "3"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn verify_all_passes() {
    let (code, out, err) = invoke(&["verify", "--all", "--n-max", "12"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert_eq!(out.lines().count(), hankel_core::verify::registry().len());
    assert!(!out.contains("[FAIL]"));
}

#[test]
fn verify_json_keeps_quotients_as_strings() {
    let (code, out, _) = invoke(&["verify", "--claim", "franel-hankel", "--n-max", "2", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let values: Vec<&str> = v[0]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1", "1", "5"]);
    assert_eq!(v[0]["status"], "pass");
}

#[test]
fn verify_csv_has_one_row_per_index() {
    let (_, out, _) = invoke(&["verify", "--claim", "apery-b-mod5", "--index-max", "9", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("claim_id,n,value,status"));
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r.starts_with("apery-b-mod5,") && r.ends_with(",pass")));
}

#[test]
fn experimental_rows_are_tagged() {
    let (code, out, _) =
        invoke(&["verify", "--claim", "positivity-apery-a", "--n-max", "3", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().skip(1).all(|r| r.ends_with(",experimental-pass")));
}

#[test]
fn primes_option() {
    let (code, out, _) =
        invoke(&["verify", "--claim", "franel-prime-congruences", "--primes", "13,7,13", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 3);
    let (code, _, err) = invoke(&["verify", "--claim", "franel-prime-congruences", "--primes", "9"]);
    assert_eq!(code, EXIT_USAGE, "{err}");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--all", "--n-max", "6", "--index-max", "40", "--format", "json"];
    assert_eq!(invoke(&args).1, invoke(&args).1);
}

#[test]
fn witnesses_carry_decimal_values() {
    let mut report = VerificationReport::new("demo", "synthetic failure", 0, 1);
    let big: BigInt = "123456789012345678901234567890".parse().unwrap();
    report.push(0, BigInt::from(1), [Check::new(true, 1, "1")]);
    report.push(1, big.clone(), [Check::new(false, big.clone(), "odd")]);

    let json: serde_json::Value = serde_json::from_slice(&emit_report(&report, Format::Json)).unwrap();
    assert_eq!(json[0]["status"], "fail");
    let w = &json[0]["witnesses"][0];
    assert_eq!(w["index"], 1);
    let observed: BigInt = w["observed"].as_str().unwrap().parse().unwrap();
    assert_eq!(observed, big);

    let csv = String::from_utf8(emit_report(&report, Format::Csv)).unwrap();
    assert!(csv.contains("demo,1,123456789012345678901234567890,fail"));
    let text = String::from_utf8(emit_report(&report, Format::Text)).unwrap();
    assert!(text.starts_with("[FAIL] demo"));
    assert!(text.contains("observed 123456789012345678901234567890"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["seq", "--family", "nope", "--n", "3"][..],
        &["seq", "--family", "clf", "--m", "2", "--n", "3"],
        &["seq", "--family", "franel", "--r", "0", "--n", "3"],
        &["verify"],
        &["verify", "--all", "--claim", "barrucand"],
        &["verify", "--claim", "no-such-claim"],
        &["bench", "--family", "g", "--n", "3", "--repeat", "0"],
    ] {
        let (code, _, err) = invoke(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("HF_BINOM_CACHE_MAX"));
}

#[test]
fn bench_reports_agreement() {
    let (code, out, _) = invoke(&["bench", "--family", "domb", "--n", "8", "--repeat", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("engines agree: yes"), "{out}");
    assert_ne!(code, EXIT_CLAIM_FAILED);
}
