use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};

use super::claim_info;
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, legendre_mod3, mod_inverse, residue};
use crate::report::{Check, VerificationReport};
use crate::sequences::{binomial, prefix, SequenceId};

/// `p = x^2 + 3y^2` with `y > 0` and the sign of `x` fixed by `x = 1 mod 3`.
/// `None` when no representation exists (`p = 2 mod 3`).
pub fn norm_form_representation(p: u64) -> Option<(i64, i64)> {
    let p = i64::try_from(p).ok()?;
    (1..).take_while(|y| 3 * y * y < p).find_map(|y| {
        let rest = p - 3 * y * y;
        let s = rest.sqrt();
        (s > 0 && s * s == rest).then(|| {
            let x = if s.rem_euclid(3) == 1 { s } else { -s };
            (x, y)
        })
    })
}

/// Residues of the three Franel sums at a prime `p > 3`, next to their predicted values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FranelPrimeResidues {
    pub p: u64,
    /// `sum_{k<p} (-1)^k f_k mod p`.
    pub alternating: BigInt,
    /// `(p/3) mod p`.
    pub legendre: BigInt,
    /// `sum_{0<k<p} (-1)^k f_k / k mod p^2`.
    pub harmonic: BigInt,
    /// `sum_{k<p} f_k / 2^k mod p^2`.
    pub weighted: BigInt,
    /// `2x - p/(2x)` or `3p / binom((p+1)/2, (p+1)/6)`, mod `p^2`.
    pub weighted_expected: BigInt,
    pub representation: Option<(i64, i64)>,
}

pub fn franel_prime_residues(p: u64) -> Result<FranelPrimeResidues> {
    if p <= 3 {
        return Err(Error::PrimeOutOfRange(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let f = prefix(SequenceId::FRANEL, (p - 1) as usize)?.into_terms();
    let pb = BigInt::from(p);
    let p2 = &pb * &pb;

    let mut alternating = BigInt::zero();
    let mut harmonic = BigInt::zero();
    let mut weighted = BigInt::zero();
    let inv2 = mod_inverse(&BigInt::from(2), &p2)?;
    let mut inv2k = BigInt::one();
    for (k, fk) in f.iter().enumerate() {
        let odd = k % 2 == 1;
        if odd {
            alternating -= fk;
        } else {
            alternating += fk;
        }
        if k > 0 {
            let t = fk * mod_inverse(&BigInt::from(k), &p2)?;
            if odd {
                harmonic -= t;
            } else {
                harmonic += t;
            }
        }
        weighted += fk * &inv2k;
        inv2k = (inv2k * &inv2) % &p2;
    }

    let representation = norm_form_representation(p);
    let weighted_expected = match (p % 3, representation) {
        (1, Some((x, _))) => {
            let two_x = BigInt::from(2 * x);
            &two_x - &pb * mod_inverse(&two_x, &p2)?
        }
        (2, _) => {
            let c = binomial((p + 1) / 2, (p + 1) / 6);
            BigInt::from(3) * &pb * mod_inverse(&c, &p2)?
        }
        _ => unreachable!("primes 1 mod 3 are x^2 + 3y^2"),
    };

    Ok(FranelPrimeResidues {
        p,
        alternating: residue(&alternating, &pb),
        legendre: residue(&BigInt::from(legendre_mod3(p)), &pb),
        harmonic: residue(&harmonic, &p2),
        weighted: residue(&weighted, &p2),
        weighted_expected: residue(&weighted_expected, &p2),
        representation,
    })
}

fn checks(r: &FranelPrimeResidues) -> [Check; 3] {
    let p = r.p;
    [
        Check::new(
            r.alternating == r.legendre,
            r.alternating.clone(),
            format!("alternating sum = (p/3) = {} mod {p}", r.legendre),
        ),
        Check::new(r.harmonic.is_zero(), r.harmonic.clone(), format!("harmonic sum = 0 mod {}", p * p)),
        Check::new(
            r.weighted == r.weighted_expected,
            r.weighted.clone(),
            format!("2-power weighted sum = {} mod {}", r.weighted_expected, p * p),
        ),
    ]
}

/// All three congruences at one prime; the headline value is the weighted sum mod `p^2`.
pub fn verify_franel_prime_congruences(p: u64) -> Result<VerificationReport> {
    verify_franel_primes(&[p])
}

/// The three congruences at each prime in `primes` (sorted, deduplicated).
pub fn verify_franel_primes(primes: &[u64]) -> Result<VerificationReport> {
    let info = claim_info("franel-prime-congruences")?;
    let mut ps = primes.to_vec();
    ps.sort_unstable();
    ps.dedup();
    let (lo, hi) = match (ps.first(), ps.last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return Err(Error::Empty("prime list")),
    };
    let mut report = VerificationReport::new(info.id, info.description, lo, hi).over_primes();
    for p in ps {
        let r = franel_prime_residues(p)?;
        report.push(p, r.weighted.clone(), checks(&r));
    }
    Ok(report)
}
