//! Galois group certification for degree-7 inputs from mod-p cycle types.
//!
//! The decision logic: a usable prime whose factor degrees are exactly {7}
//! proves the group is transitive on the roots; any usable prime whose cycle
//! type contains a part of size 5 proves the order is divisible by 5; among
//! the transitive permutation groups of degree 7 only the alternating and
//! symmetric groups have order divisible by 5; and the group lies in the
//! alternating group exactly when the discriminant is a rational square.
//! Both witnesses together therefore certify S7 or A7. Absent either
//! witness the verdict is INCONCLUSIVE, never a guess.

use crate::cache::{CachedScan, PrimeScanCache};
use crate::modp;
use crate::poly::UniPoly;
use crate::rat::{is_perfect_square, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Scan parameters. `five_part_budget` bounds how many usable primes are
/// examined while searching for a cycle type containing a 5; the
/// irreducibility search always runs to `prime_bound`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanSettings {
    pub prime_bound: u64,
    pub five_part_budget: usize,
    pub seed: u64,
}

impl Default for ScanSettings {
    fn default() -> Self {
        ScanSettings {
            prime_bound: 10_000,
            five_part_budget: 200,
            seed: 0,
        }
    }
}

/// A single usable prime together with the factorization data that backs a
/// claim about the cycle type of its Frobenius element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleTypeWitness {
    pub prime: u64,
    /// Factor degrees, sorted descending.
    pub cycle_type: Vec<u32>,
    /// Monic irreducible factors mod `prime`, each an ascending coefficient
    /// vector, in canonical sorted order. Enough to replay the claim.
    pub factors: Vec<Vec<u64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GaloisStatus {
    #[serde(rename = "CERTIFIED_S7")]
    CertifiedS7,
    #[serde(rename = "CERTIFIED_A7")]
    CertifiedA7,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl std::fmt::Display for GaloisStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GaloisStatus::CertifiedS7 => "CERTIFIED_S7",
            GaloisStatus::CertifiedA7 => "CERTIFIED_A7",
            GaloisStatus::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPrimes {
    pub irreducibility: Option<u64>,
    pub five_part: Option<u64>,
}

/// The serialized verdict. `cycle_type` is the five-part witness's cycle
/// type when one was found. `discriminant` is the discriminant of the
/// primitive integer model, as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisVerdict {
    pub status: GaloisStatus,
    pub witness_primes: WitnessPrimes,
    pub cycle_type: Option<Vec<u32>>,
    pub discriminant: String,
    pub disc_is_square: bool,
    pub primes_scanned: u64,
    pub seed: u64,
}

/// Verdict plus the full witness data and a human-readable note explaining
/// an inconclusive outcome.
#[derive(Clone, Debug)]
pub struct GaloisAnalysis {
    pub verdict: GaloisVerdict,
    pub irreducibility_witness: Option<CycleTypeWitness>,
    pub five_part_witness: Option<CycleTypeWitness>,
    pub diagnostic: Option<String>,
}

/// Status from the three certification ingredients.
pub fn status_from(irreducibility: bool, five_part: bool, disc_is_square: bool) -> GaloisStatus {
    if irreducibility && five_part {
        if disc_is_square {
            GaloisStatus::CertifiedA7
        } else {
            GaloisStatus::CertifiedS7
        }
    } else {
        GaloisStatus::Inconclusive
    }
}

/// Classifies the Galois group of a separable degree-7 polynomial over the
/// rationals. Errors with `Reducible` when a rational root is detected, and
/// with `Inseparable` on vanishing discriminant.
pub fn classify_galois(
    f: &UniPoly,
    settings: &ScanSettings,
    mut cache: Option<&mut PrimeScanCache>,
) -> Result<GaloisAnalysis> {
    if f.degree() != Some(7) {
        return Err(Error::Input(format!(
            "classification needs degree 7, got {:?}",
            f.degree()
        )));
    }
    let model = f.integer_model()?;
    let f_int = UniPoly::from_bigint_coeffs(&model);
    let disc = UniPoly::discriminant(&f_int)?;
    if disc.is_zero() {
        return Err(Error::Inseparable);
    }
    if let Some(root) = rational_root(&model) {
        return Err(Error::Reducible(format!(
            "rational root {}",
            crate::rat::display_string(&root)
        )));
    }
    let disc_is_square = is_perfect_square(&disc);

    let mut scanned = 0u64;
    let mut usable = 0usize;
    let mut irr: Option<CycleTypeWitness> = None;
    let mut five: Option<CycleTypeWitness> = None;
    for p in primes_up_to(settings.prime_bound)? {
        let want_irr = irr.is_none();
        let want_five = five.is_none() && usable < settings.five_part_budget;
        if !want_irr && !want_five {
            break;
        }
        scanned += 1;
        let degrees = match scan_prime(&model, p, settings.seed, cache.as_deref_mut()) {
            CachedScan::Unusable => continue,
            CachedScan::Degrees(d) => d,
        };
        usable += 1;
        if (degrees == [7] && irr.is_none()) || (degrees.contains(&5) && five.is_none()) {
            // The witness recomputes the factorization, so its cycle type is
            // authoritative even if the candidate came from a cache entry.
            let witness = build_witness(&model, p, settings.seed)?;
            if witness.cycle_type == [7] && irr.is_none() {
                irr = Some(witness.clone());
            }
            if witness.cycle_type.contains(&5) && five.is_none() {
                five = Some(witness);
            }
        }
    }
    if let Some(c) = cache {
        c.persist();
    }

    let status = status_from(irr.is_some(), five.is_some(), disc_is_square);
    let diagnostic = match (&irr, &five) {
        (None, _) => Some(format!(
            "no usable prime up to {} had factor degrees [7]; the input may be reducible",
            settings.prime_bound
        )),
        (_, None) => Some(format!(
            "no cycle type containing a part of size 5 within {} usable primes; \
             the group may be a proper transitive subgroup",
            settings.five_part_budget
        )),
        _ => None,
    };
    let verdict = GaloisVerdict {
        status,
        witness_primes: WitnessPrimes {
            irreducibility: irr.as_ref().map(|w| w.prime),
            five_part: five.as_ref().map(|w| w.prime),
        },
        cycle_type: five.as_ref().map(|w| w.cycle_type.clone()),
        discriminant: crate::rat::display_string(&disc),
        disc_is_square,
        primes_scanned: scanned,
        seed: settings.seed,
    };
    Ok(GaloisAnalysis {
        verdict,
        irreducibility_witness: irr,
        five_part_witness: five,
        diagnostic,
    })
}

/// First usable prime (ascending) whose factor degrees are exactly [7], or
/// None once the prime bound is exhausted. Unlike classification this does
/// not reject inputs with rational roots; they simply yield no witness.
pub fn irreducibility_witness(
    f: &UniPoly,
    settings: &ScanSettings,
) -> Result<Option<CycleTypeWitness>> {
    if f.degree() != Some(7) {
        return Err(Error::Input(format!(
            "irreducibility witness needs degree 7, got {:?}",
            f.degree()
        )));
    }
    let model = f.integer_model()?;
    for p in primes_up_to(settings.prime_bound)? {
        let degrees = match modp::factor_degrees_mod_p(&model, p, settings.seed) {
            Ok(d) => d,
            Err(Error::NotUsablePrime { .. }) => continue,
            Err(e) => return Err(e),
        };
        if degrees == [7] {
            return Ok(Some(build_witness(&model, p, settings.seed)?));
        }
    }
    Ok(None)
}

fn scan_prime(
    model: &[BigInt],
    p: u64,
    seed: u64,
    cache: Option<&mut PrimeScanCache>,
) -> CachedScan {
    if let Some(c) = &cache {
        if let Some(hit) = c.get(p) {
            return hit.clone();
        }
    }
    let result = match modp::factor_degrees_mod_p(model, p, seed) {
        Ok(d) => CachedScan::Degrees(d),
        Err(_) => CachedScan::Unusable,
    };
    if let Some(c) = cache {
        c.put(p, result.clone());
    }
    result
}

fn build_witness(model: &[BigInt], p: u64, seed: u64) -> Result<CycleTypeWitness> {
    let factors = modp::factor_mod_p(model, p, seed)?;
    let mut cycle_type: Vec<u32> = factors.iter().map(|g| g.degree().unwrap() as u32).collect();
    cycle_type.sort_unstable_by(|a, b| b.cmp(a));
    Ok(CycleTypeWitness {
        prime: p,
        cycle_type,
        factors: factors.iter().map(|g| g.coeffs().to_vec()).collect(),
    })
}

/// Primes up to `bound` inclusive, by sieve. The bound is capped to keep the
/// sieve's memory footprint sane.
pub fn primes_up_to(bound: u64) -> Result<Vec<u64>> {
    if bound > 100_000_000 {
        return Err(Error::Input(format!("prime bound {bound} is too large")));
    }
    let n = bound as usize;
    if n < 2 {
        return Ok(vec![]);
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    Ok(sieve
        .iter()
        .enumerate()
        .filter_map(|(k, &is_p)| if is_p { Some(k as u64) } else { None })
        .collect())
}

/// A rational root of the integer polynomial, if one is found. Candidates
/// are ratios of divisors of the constant and leading coefficients. Divisor
/// enumeration is best-effort for enormous coefficients; a miss only means
/// classification proceeds to the scan, which can never certify a reducible
/// input anyway.
fn rational_root(model: &[BigInt]) -> Option<Rat> {
    let c0 = model.first()?;
    let lc = model.last()?;
    let poly = UniPoly::from_bigint_coeffs(model);
    if c0.is_zero() {
        return Some(Rat::zero());
    }
    let num_divs = divisors(&c0.abs())?;
    let den_divs = divisors(&lc.abs())?;
    for nd in &num_divs {
        for dd in &den_divs {
            for sign in [1i64, -1] {
                let cand = Rat::new(nd * BigInt::from(sign), dd.clone());
                if poly.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// All positive divisors, or None when the value resists factoring by trial
/// division (a huge prime cofactor) or has too many divisors to enumerate.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut rest = n.clone();
    let mut prime_powers: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000u64);
    while &d * &d <= rest && d <= limit {
        if rest.is_multiple_of(&d) {
            let mut e = 0u32;
            while rest.is_multiple_of(&d) {
                rest /= &d;
                e += 1;
            }
            prime_powers.push((d.clone(), e));
        }
        d += 1;
    }
    if rest > BigInt::from(1) {
        // Treat the unfactored cofactor as prime; if it is not, some
        // divisors are missed, which is acceptable for a prefilter.
        prime_powers.push((rest, 1));
    }
    let mut divs = vec![BigInt::from(1)];
    for (p, e) in prime_powers {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for base in &divs {
            let mut pw = BigInt::from(1);
            for _ in 0..=e {
                next.push(base * &pw);
                pw *= &p;
            }
        }
        divs = next;
        if divs.len() > 100_000 {
            return None;
        }
    }
    Some(divs)
}
