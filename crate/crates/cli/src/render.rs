//! Output formatting. Big integers always leave as decimal strings.

use std::fmt::Write as _;

use clap::ValueEnum;
use hankel_core::hankel::QuotientCheck;
use hankel_core::report::{Status, Witness};
use hankel_core::{DetResult, SequenceId, SequenceTerms, VerificationReport};
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Serialize)]
struct ReportView<'a> {
    #[serde(flatten)]
    report: &'a VerificationReport,
    status: Status,
}

fn row_status(report: &VerificationReport, pass: bool) -> &'static str {
    match (report.experimental, pass) {
        (false, true) => "pass",
        (false, false) => "fail",
        (true, true) => "experimental-pass",
        (true, false) => "experimental-fail",
    }
}

fn status_word(report: &VerificationReport) -> &'static str {
    match report.status() {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Experimental if report.passed() => "PASS/WARN (experimental)",
        Status::Experimental => "FAIL/WARN (experimental)",
    }
}

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    w.into_inner().expect("writing to memory")
}

fn json_bytes(value: &impl Serialize) -> Vec<u8> {
    let mut buf = serde_json::to_vec_pretty(value).expect("report serialises");
    buf.push(b'\n');
    buf
}

fn witness_line(w: &Witness) -> String {
    format!("    witness n={}: observed {}, expected {}", w.index, w.observed, w.expected)
}

/// Renders a single report.
pub fn emit_report(report: &VerificationReport, format: Format) -> Vec<u8> {
    emit_reports(std::slice::from_ref(report), format)
}

/// Renders reports in the given order: CSV shares one header, JSON is an array.
pub fn emit_reports(reports: &[VerificationReport], format: Format) -> Vec<u8> {
    match format {
        Format::Csv => csv_bytes(
            &["claim_id", "n", "value", "status"],
            reports.iter().flat_map(|r| {
                r.entries.iter().map(move |e| {
                    vec![
                        r.claim_id.clone(),
                        e.index.to_string(),
                        e.value.to_string(),
                        row_status(r, e.pass).to_string(),
                    ]
                })
            }),
        ),
        Format::Json => {
            let views: Vec<_> = reports.iter().map(|r| ReportView { report: r, status: r.status() }).collect();
            json_bytes(&views)
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(
                    s,
                    "[{}] {} ({} indices in {}..={}, {} failing)",
                    status_word(r),
                    r.claim_id,
                    r.entries.len(),
                    r.lo,
                    r.hi,
                    r.failures()
                );
                for w in &r.witnesses {
                    let _ = writeln!(s, "{}", witness_line(w));
                }
            }
            s.into_bytes()
        }
    }
}

pub(crate) fn sequence(terms: &SequenceTerms, format: Format) -> Vec<u8> {
    let values = terms.terms().iter().map(|t| t.to_string());
    match format {
        Format::Csv => csv_bytes(
            &["n", "value"],
            values.enumerate().map(|(n, v)| vec![n.to_string(), v]),
        ),
        Format::Json => json_bytes(&json!({
            "sequence": terms.id().to_string(),
            "terms": values.collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut line = values.collect::<Vec<_>>().join(" ");
            line.push('\n');
            line.into_bytes()
        }
    }
}

pub(crate) fn hankel(
    id: SequenceId,
    n: usize,
    det: &DetResult,
    base: u64,
    exp: u32,
    q: &QuotientCheck,
    format: Format,
) -> Vec<u8> {
    match format {
        Format::Csv => csv_bytes(
            &[
                "sequence", "n", "engine", "det", "steps", "max_bits", "fallback", "base", "exp",
                "quotient", "is_integer", "is_odd", "is_positive",
            ],
            [vec![
                id.to_string(),
                n.to_string(),
                det.algorithm.to_string(),
                det.value.to_string(),
                det.steps.to_string(),
                det.max_bits.to_string(),
                det.fallback.to_string(),
                base.to_string(),
                exp.to_string(),
                q.quotient.to_string(),
                q.is_integer.to_string(),
                q.is_odd.to_string(),
                q.is_positive.to_string(),
            ]],
        ),
        Format::Json => json_bytes(&json!({
            "sequence": id.to_string(),
            "n": n,
            "engine": det.algorithm.to_string(),
            "det": det.value.to_string(),
            "steps": det.steps,
            "max_bits": det.max_bits,
            "fallback": det.fallback,
            "base": base,
            "exp": exp,
            "quotient": q,
        })),
        Format::Text => {
            let flags: Vec<&str> = [
                (q.is_integer, "integer", "not an integer"),
                (q.is_odd, "odd", "even"),
                (q.is_positive, "positive", "non-positive"),
            ]
            .iter()
            .map(|&(b, yes, no)| if b { yes } else { no })
            .collect();
            let mut s = String::new();
            let _ = writeln!(s, "sequence  {id}");
            let _ = writeln!(s, "order     {}", n + 1);
            let _ = writeln!(s, "engine    {}{}", det.algorithm, if det.fallback { " (fallback)" } else { "" });
            let _ = writeln!(s, "det       {}", det.value);
            let _ = writeln!(s, "steps     {}", det.steps);
            let _ = writeln!(s, "max_bits  {}", det.max_bits);
            if q.is_integer {
                let _ = writeln!(s, "det / {base}^{exp} = {} ({})", q.quotient, flags.join(", "));
            } else {
                let _ = writeln!(s, "det / {base}^{exp}: remainder {} ({})", q.remainder, flags.join(", "));
            }
            s.into_bytes()
        }
    }
}
