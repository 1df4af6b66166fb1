//! Command-line front end: sequence terms, Hankel determinants, claim
//! verification and engine benchmarks.
//!
//! Exit codes: 0 when every requested check passes, 1 when a proven claim
//! fails, 2 on usage errors. Experimental claims never change the exit code.

mod render;

use std::io::Write;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hankel_core::hankel::{build_hankel, det_bareiss, det_dodgson, det_laplace, quotient_check};
use hankel_core::sequences::{prefix, SequenceId, DEFAULT_CACHE_MAX_CELLS};
use hankel_core::verify::{registry, run_claim, Config};
use hankel_core::{BigInt, DetResult, Engine, Error, Family, IntegerMatrix};

pub use render::{emit_report, emit_reports, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hankel",
    version,
    about = "Exact combinatorial sequences and Hankel determinants",
    after_help = cache_help()
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn cache_help() -> String {
    format!(
        "Environment:\n  HF_BINOM_CACHE_MAX  maximum number of cached binomial coefficients (default {DEFAULT_CACHE_MAX_CELLS})"
    )
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the first terms of a sequence.
    Seq(SeqArgs),
    /// Hankel determinant of a sequence, with an optional quotient check.
    Hankel(HankelArgs),
    /// Check registered claims.
    Verify(VerifyArgs),
    /// Time determinant engines on a Hankel matrix.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Franel,
    Domb,
    Clf,
    AperyB,
    AperyA,
    Central,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Laplace,
    Bareiss,
    Dodgson,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Laplace => Engine::Laplace,
            EngineArg::Bareiss => Engine::Bareiss,
            EngineArg::Dodgson => Engine::Dodgson,
        }
    }
}

#[derive(Debug, Args)]
struct SequenceArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Exponent for franel (default 3).
    #[arg(long)]
    r: Option<u32>,
    /// Exponent for domb (default 2).
    #[arg(long)]
    m: Option<u32>,
}

impl SequenceArgs {
    fn id(&self) -> Result<SequenceId, String> {
        let (family, param) = match self.family {
            FamilyArg::Franel => (Family::FranelR, self.r.unwrap_or(3)),
            FamilyArg::Domb => (Family::DombM, self.m.unwrap_or(2)),
            FamilyArg::Clf => (Family::Clf, 0),
            FamilyArg::AperyB => (Family::AperyB, 0),
            FamilyArg::AperyA => (Family::AperyA, 0),
            FamilyArg::Central => (Family::CentralBinom, 0),
            FamilyArg::G => (Family::GSum, 0),
        };
        if self.r.is_some() && self.family != FamilyArg::Franel {
            return Err("--r only applies to --family franel".into());
        }
        if self.m.is_some() && self.family != FamilyArg::Domb {
            return Err("--m only applies to --family domb".into());
        }
        SequenceId::new(family, param).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Args)]
struct SeqArgs {
    #[command(flatten)]
    seq: SequenceArgs,
    /// Largest index.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct HankelArgs {
    #[command(flatten)]
    seq: SequenceArgs,
    /// The matrix is (n+1) x (n+1).
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = EngineArg::Bareiss)]
    engine: EngineArg,
    /// Quotient base; defaults to the family's known divisor.
    #[arg(long, requires = "exp")]
    base: Option<u64>,
    #[arg(long, requires = "base")]
    exp: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["all", "claim", "list"])))]
struct VerifyArgs {
    /// Run every registered claim.
    #[arg(long)]
    all: bool,
    /// Run one claim by id.
    #[arg(long)]
    claim: Option<String>,
    /// List claim ids and exit.
    #[arg(long)]
    list: bool,
    /// Largest n for Hankel determinant claims (default 12).
    #[arg(long)]
    n_max: Option<usize>,
    /// Largest index for congruence and identity claims (default 200).
    #[arg(long)]
    index_max: Option<usize>,
    /// Primes for the Franel prime congruences (default 5..97).
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[command(flatten)]
    seq: SequenceArgs,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [EngineArg::Bareiss, EngineArg::Dodgson])]
    engines: Vec<EngineArg>,
    #[arg(long, default_value_t = 3)]
    repeat: u32,
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidSequence(_)
            | Error::UnknownClaim(_)
            | Error::NotPrime(_)
            | Error::PrimeOutOfRange(_)
            | Error::OrderAboveCap { .. }
            | Error::Empty(_) => EXIT_USAGE,
            _ => EXIT_CLAIM_FAILED,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self { code: EXIT_CLAIM_FAILED, message: e.to_string() }
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Seq(a) => cmd_seq(a, out),
        Command::Hankel(a) => cmd_hankel(a, out),
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Bench(a) => cmd_bench(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn cmd_seq(a: SeqArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let id = a.seq.id().map_err(Failure::usage)?;
    let terms = prefix(id, a.n)?;
    out.write_all(&render::sequence(&terms, a.format))?;
    Ok(EXIT_OK)
}

/// The divisor each family's Hankel determinants are known to carry.
fn default_quotient(id: SequenceId, n: usize) -> (u64, u32) {
    let n32 = n as u32;
    match id.family() {
        Family::FranelR if id.param() == 3 => (6, n32),
        Family::FranelR => (2, n32),
        Family::DombM if id.param() == 2 => (12, n32),
        Family::DombM => (4, n32),
        Family::Clf => (2, n32 * (n32 + 3)),
        Family::AperyB => (10, n32),
        Family::AperyA => (24, n32),
        Family::CentralBinom => (2, n32),
        Family::GSum => (6, n32),
    }
}

fn hankel_matrix(seq: &SequenceArgs, n: usize) -> Result<(SequenceId, IntegerMatrix), Failure> {
    let id = seq.id().map_err(Failure::usage)?;
    let terms = prefix(id, 2 * n)?;
    Ok((id, build_hankel(terms.terms(), n)?))
}

fn evaluate(engine: Engine, m: &IntegerMatrix) -> Result<DetResult, Failure> {
    Ok(match engine {
        Engine::Laplace => det_laplace(m)?,
        Engine::Bareiss => det_bareiss(m)?,
        Engine::Dodgson => det_dodgson(m),
    })
}

fn cmd_hankel(a: HankelArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (id, m) = hankel_matrix(&a.seq, a.n)?;
    let det = evaluate(a.engine.into(), &m)?;
    let (base, exp) = match (a.base, a.exp) {
        (Some(b), Some(e)) => (b, e),
        _ => default_quotient(id, a.n),
    };
    if base < 2 {
        return Err(Failure::usage("--base must be at least 2"));
    }
    let q = quotient_check(&det.value, base, exp);
    out.write_all(&render::hankel(id, a.n, &det, base, exp, &q, a.format))?;
    Ok(EXIT_OK)
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    if a.list {
        for c in registry() {
            writeln!(out, "{:<32} {}", c.id, c.description)?;
        }
        return Ok(EXIT_OK);
    }
    let mut config = Config::default();
    if let Some(n) = a.n_max {
        config.det_n_max = n;
    }
    if let Some(n) = a.index_max {
        config.index_max = n;
    }
    if let Some(p) = a.primes {
        config.primes = p;
    }
    let ids: Vec<&str> = match &a.claim {
        Some(id) => vec![id.as_str()],
        None => registry().iter().map(|c| c.id).collect(),
    };
    let reports = ids
        .iter()
        .map(|id| run_claim(id, &config))
        .collect::<Result<Vec<_>, _>>()?;
    out.write_all(&emit_reports(&reports, a.format))?;
    let mut code = EXIT_OK;
    for r in &reports {
        if r.experimental && !r.passed() {
            writeln!(err, "warning: EXPERIMENTAL claim {} does not hold at {} indices", r.claim_id, r.failures())?;
        } else if !r.gating_ok() {
            code = EXIT_CLAIM_FAILED;
        }
    }
    Ok(code)
}

fn cmd_bench(a: BenchArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.repeat == 0 {
        return Err(Failure::usage("--repeat must be positive"));
    }
    let (id, m) = hankel_matrix(&a.seq, a.n)?;
    writeln!(out, "sequence {id}, order {}", m.order())?;
    let mut values: Vec<BigInt> = Vec::new();
    for engine in a.engines {
        let engine = Engine::from(engine);
        let mut times = Vec::with_capacity(a.repeat as usize);
        let mut last = None;
        for _ in 0..a.repeat {
            let start = Instant::now();
            let d = evaluate(engine, &m)?;
            times.push(start.elapsed());
            last = Some(d);
        }
        let d = last.expect("repeat is positive");
        let best = times.iter().min().copied().unwrap_or_default();
        let mean = times.iter().sum::<Duration>() / a.repeat;
        writeln!(
            out,
            "{engine:<8} best {:>10.3} ms  mean {:>10.3} ms  steps {:>8}  max_bits {:>7}  det_bits {:>7}{}",
            best.as_secs_f64() * 1e3,
            mean.as_secs_f64() * 1e3,
            d.steps,
            d.max_bits,
            d.value.bits(),
            if d.fallback { "  (fell back to bareiss)" } else { "" },
        )?;
        values.push(d.value);
    }
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    writeln!(out, "engines agree: {}", if agree { "yes" } else { "NO" })?;
    Ok(if agree { EXIT_OK } else { EXIT_CLAIM_FAILED })
}
