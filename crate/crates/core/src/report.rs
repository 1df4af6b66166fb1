//! Machine-readable verification reports.

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

/// Serialises a big integer as a decimal string.
pub fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The claim is an open conjecture; the run is informational.
    Experimental,
}

/// What the index of a report runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Integers,
    Primes,
}

/// One sub-condition evaluated at an index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub ok: bool,
    pub observed: BigInt,
    pub expected: String,
}

impl Check {
    pub fn new(ok: bool, observed: impl Into<BigInt>, expected: impl Into<String>) -> Self {
        Self { ok, observed: observed.into(), expected: expected.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexResult {
    pub index: u64,
    #[serde(serialize_with = "ser_bigint")]
    pub value: BigInt,
    pub pass: bool,
}

/// A failing sub-condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub index: u64,
    #[serde(serialize_with = "ser_bigint")]
    pub observed: BigInt,
    pub expected: String,
}

/// Per-index results of checking one claim over a range.
///
/// Each index carries a headline value; failing sub-conditions become
/// witnesses, so the witness list is empty exactly when every index passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub description: String,
    pub domain: Domain,
    pub lo: u64,
    pub hi: u64,
    pub experimental: bool,
    pub entries: Vec<IndexResult>,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    pub fn new(claim_id: impl Into<String>, description: impl Into<String>, lo: u64, hi: u64) -> Self {
        Self {
            claim_id: claim_id.into(),
            description: description.into(),
            domain: Domain::Integers,
            lo,
            hi,
            experimental: false,
            entries: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn over_primes(mut self) -> Self {
        self.domain = Domain::Primes;
        self
    }

    pub fn experimental(mut self) -> Self {
        self.experimental = true;
        self
    }

    /// Records index `index` with headline `value`; it passes when every check does.
    pub fn push(&mut self, index: u64, value: BigInt, checks: impl IntoIterator<Item = Check>) {
        let mut pass = true;
        for c in checks {
            if !c.ok {
                pass = false;
                self.witnesses.push(Witness { index, observed: c.observed, expected: c.expected });
            }
        }
        self.entries.push(IndexResult { index, value, pass });
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn status(&self) -> Status {
        match (self.experimental, self.passed()) {
            (true, _) => Status::Experimental,
            (false, true) => Status::Pass,
            (false, false) => Status::Fail,
        }
    }

    /// True unless a non-experimental claim failed.
    pub fn gating_ok(&self) -> bool {
        self.experimental || self.passed()
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| !e.pass).count()
    }
}
