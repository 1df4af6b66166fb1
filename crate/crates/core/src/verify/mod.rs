//! Claim registry and the harnesses that check each claim over a range.
//!
//! Every claim has a stable kebab-case id. [`run_claim`] evaluates one claim
//! with the bounds from a [`Config`]; [`run_all`] evaluates the registry in
//! order.

mod congruences;
mod hankel_claims;
mod parity;
mod primes;

use serde::Serialize;

pub use congruences::{verify_congruence, CongruenceClaim};
pub use hankel_claims::{
    hankel_quotient, probe_positivity_conjecture, verify_apery_hankel, verify_domb_clf_hankel,
    verify_franel_hankel,
};
pub use parity::{verify_calkin_valuation, verify_domb_generalized_mod8, verify_odd_quotient_hypotheses, verify_parity_unimodular};
pub use primes::{franel_prime_residues, norm_form_representation, verify_franel_prime_congruences, verify_franel_primes, FranelPrimeResidues};

use crate::error::{Error, Result};
use crate::numtheory::is_prime;
use crate::report::VerificationReport;
use crate::sequences::Family;

/// What a claim is about; every group must be covered by the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimGroup {
    /// Odd quotients of Franel Hankel determinants by `2^n` and `6^n`.
    FranelHankel,
    /// Odd quotients of Domb (`12^n`) and CLF (`2^{n(n+3)}`) Hankel determinants.
    DombClfHankel,
    /// Integral quotients of Apéry Hankel determinants by `10^n` and `24^n`.
    AperyHankel,
    /// `2^{ones(n)}` divides every generalised Franel number.
    CalkinValuation,
    /// Generalised Domb numbers modulo 8.
    DombGeneralizedMod8,
    /// Domb numbers are 1 modulo 3.
    DombMod3,
    /// Second binomial transform of the Domb numbers vanishes modulo 3.
    DombDoubleTransform,
    /// Apéry `b` transforms modulo 2 and 5.
    AperyBTransforms,
    /// First binomial transform of Apéry `A` vanishes modulo 24.
    AperyATransform,
    /// Binomial transform of Franel numbers equals `g`.
    Barrucand,
    /// CLF numbers equal `2^m` times `D^(1)`.
    ClfIdentity,
    /// The `{0,1}` parity matrices have determinant `+-1`.
    ParityMatrix,
    /// Apéry `A` residues modulo 8 and 3.
    Gessel,
    /// Prime congruences for Franel sums.
    FranelPrimes,
    /// Open positivity conjecture for Apéry Hankel determinants.
    Positivity,
}

impl ClaimGroup {
    pub const ALL: [ClaimGroup; 15] = [
        ClaimGroup::FranelHankel,
        ClaimGroup::DombClfHankel,
        ClaimGroup::AperyHankel,
        ClaimGroup::CalkinValuation,
        ClaimGroup::DombGeneralizedMod8,
        ClaimGroup::DombMod3,
        ClaimGroup::DombDoubleTransform,
        ClaimGroup::AperyBTransforms,
        ClaimGroup::AperyATransform,
        ClaimGroup::Barrucand,
        ClaimGroup::ClfIdentity,
        ClaimGroup::ParityMatrix,
        ClaimGroup::Gessel,
        ClaimGroup::FranelPrimes,
        ClaimGroup::Positivity,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Determinant,
    Congruence { modulus: u64 },
    Identity,
    Valuation,
    Primes,
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub group: ClaimGroup,
    pub kind: ClaimKind,
    pub description: &'static str,
}

const fn claim(id: &'static str, group: ClaimGroup, kind: ClaimKind, description: &'static str) -> ClaimInfo {
    ClaimInfo { id, group, kind, description }
}

use ClaimGroup as G;
use ClaimKind as K;

const REGISTRY: &[ClaimInfo] = &[
    claim("franel-hankel", G::FranelHankel, K::Determinant,
        "2^-n |f^(r)_{i+j}| is odd for each r; 6^-n |f_{i+j}| is a positive odd integer"),
    claim("g-mod3", G::FranelHankel, K::Congruence { modulus: 3 },
        "g_m = sum binom(m,k)^2 binom(2k,k) is divisible by 3 for m >= 1"),
    claim("domb-clf-hankel", G::DombClfHankel, K::Determinant,
        "12^-n |D_{i+j}|, 2^-n(n+3) |P_{i+j}| and 4^-n |D^(1)_{i+j}| are positive odd integers"),
    claim("apery-hankel", G::AperyHankel, K::Determinant,
        "10^-n |b_{i+j}| and 24^-n |A_{i+j}| are integers"),
    claim("calkin-valuation", G::CalkinValuation, K::Valuation,
        "2^ones(n) divides f^(r)_n; for r >= 2, 4 does not divide f^(r)_n iff n is a power of two"),
    claim("domb-generalized-mod8", G::DombGeneralizedMod8, K::Valuation,
        "D^(m)_n = 4 binom(2n-1,n-1) mod 8 and 8 | D^(m)_n iff n is not a power of two"),
    claim("domb-mod3", G::DombMod3, K::Congruence { modulus: 3 }, "D_n = 1 mod 3"),
    claim("domb-recurrence", G::DombMod3, K::Identity,
        "n^3 D_n = 2(2n-1)(5n^2-5n+2) D_{n-1} - 64(n-1)^3 D_{n-2} reproduces the defining sum"),
    claim("domb-double-transform-mod3", G::DombDoubleTransform, K::Congruence { modulus: 3 },
        "D''_n = 0 mod 3 for n >= 1"),
    claim("apery-b-odd", G::AperyBTransforms, K::Congruence { modulus: 2 }, "b_n = 1 mod 2"),
    claim("apery-b-transform-mod2", G::AperyBTransforms, K::Congruence { modulus: 2 },
        "b'_n = 0 mod 2 for n >= 1"),
    claim("apery-b-mod5", G::AperyBTransforms, K::Congruence { modulus: 5 }, "b_n = 3^n mod 5"),
    claim("apery-b-double-transform-mod5", G::AperyBTransforms, K::Congruence { modulus: 5 },
        "b''_n = 0 mod 5 for n >= 1"),
    claim("apery-b-recurrence", G::AperyBTransforms, K::Identity,
        "n^2 b_n = (11n^2-11n+3) b_{n-1} + (n-1)^2 b_{n-2} reproduces the defining sum"),
    claim("apery-a-transform-mod24", G::AperyATransform, K::Congruence { modulus: 24 },
        "A'_n = 0 mod 24 for n >= 3"),
    claim("gessel-mod8", G::Gessel, K::Congruence { modulus: 8 },
        "A_n = 1 mod 8 for even n and 5 mod 8 for odd n"),
    claim("gessel-mod3", G::Gessel, K::Congruence { modulus: 3 }, "A_n = (-1)^n mod 3"),
    claim("gessel-mod24", G::Gessel, K::Congruence { modulus: 24 }, "A_n = 3 - 2(-1)^n mod 24"),
    claim("barrucand", G::Barrucand, K::Identity, "sum binom(m,k) f_k = g_m"),
    claim("clf-domb-identity", G::ClfIdentity, K::Identity, "P_m = 2^m D^(1)_m"),
    claim("odd-quotient-hypotheses", G::ParityMatrix, K::Valuation,
        "x_0 = 1, 2k | x_i, 4k | x_i iff i is not a power of two (Franel, f^(4..6) with k = 1; Domb with k = 2)"),
    claim("parity-matrix-unimodular", G::ParityMatrix, K::Determinant,
        "det [x_{i+j}/2k mod 2]_{1<=i,j<=n} = +-1 for the same sequences"),
    claim("franel-prime-congruences", G::FranelPrimes, K::Primes,
        "alternating, harmonic and 2-power weighted Franel sums modulo p and p^2"),
    claim("positivity-apery-b", G::Positivity, K::Conjecture, "|b_{i+j}| > 0 (open conjecture)"),
    claim("positivity-apery-a", G::Positivity, K::Conjecture, "|A_{i+j}| > 0 (open conjecture)"),
];

/// All claims in evaluation order.
pub fn registry() -> &'static [ClaimInfo] {
    REGISTRY
}

pub fn claim_info(id: &str) -> Result<&'static ClaimInfo> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Bounds used when running claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Largest `n` for `(n+1) x (n+1)` Hankel determinant claims.
    pub det_n_max: usize,
    /// Largest index for congruence and identity claims.
    pub index_max: usize,
    /// Franel exponents for the `2^-n` odd-quotient check.
    pub franel_r: Vec<u32>,
    pub calkin_n_max: usize,
    pub calkin_r_max: u32,
    pub mod8_n_max: usize,
    /// Largest parity-matrix order; hypotheses are checked up to twice this.
    pub parity_n_max: usize,
    pub primes: Vec<u64>,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            det_n_max: 12,
            index_max: 200,
            franel_r: vec![3, 4, 5, 6],
            calkin_n_max: 512,
            calkin_r_max: 6,
            mod8_n_max: 256,
            parity_n_max: 64,
            primes: (5..=97).filter(|&p| is_prime(p)).collect(),
        }
    }
}

pub fn run_claim(id: &str, config: &Config) -> Result<VerificationReport> {
    let info = claim_info(id)?;
    match info.id {
        "franel-hankel" => verify_franel_hankel(config.det_n_max, &config.franel_r),
        "domb-clf-hankel" => verify_domb_clf_hankel(config.det_n_max),
        "apery-hankel" => verify_apery_hankel(config.det_n_max),
        "calkin-valuation" => verify_calkin_valuation(config.calkin_n_max, config.calkin_r_max),
        "domb-generalized-mod8" => verify_domb_generalized_mod8(config.mod8_n_max, &[1, 2, 3]),
        "odd-quotient-hypotheses" => verify_odd_quotient_hypotheses(2 * config.parity_n_max),
        "parity-matrix-unimodular" => verify_parity_unimodular(config.parity_n_max),
        "franel-prime-congruences" => verify_franel_primes(&config.primes),
        "positivity-apery-b" => probe_positivity_conjecture(Family::AperyB, config.det_n_max),
        "positivity-apery-a" => probe_positivity_conjecture(Family::AperyA, config.det_n_max),
        other if info.kind == ClaimKind::Identity => congruences::verify_identity(other, config.index_max),
        other => {
            let claim = CongruenceClaim::new(other, 0, config.index_max as u64)?;
            verify_congruence(&claim)
        }
    }
}

/// Every registered claim, in registry order.
pub fn run_all(config: &Config) -> Result<Vec<VerificationReport>> {
    REGISTRY.iter().map(|c| run_claim(c.id, config)).collect()
}
