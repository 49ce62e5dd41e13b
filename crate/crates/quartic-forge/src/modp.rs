//! Polynomial arithmetic and factorization over prime fields.
//!
//! Factorization is distinct-degree splitting followed by equal-degree
//! Cantor-Zassenhaus (the trace-map variant at p = 2). Inputs must be
//! separable mod p with unit leading coefficient; anything else reports the
//! prime as unusable. Randomness comes from a seeded ChaCha stream derived
//! from (seed, p), so results are reproducible, and factors are returned in a
//! canonical sorted order regardless of the splitting path taken.

use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    // p prime, a nonzero mod p
    powmod(a, p - 2, p)
}

impl ModPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> ModPoly {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> ModPoly {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> ModPoly {
        ModPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> ModPoly {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn from_bigint_coeffs(coeffs: &[BigInt], p: u64) -> ModPoly {
        let bp = BigInt::from(p);
        ModPoly::new(
            p,
            coeffs
                .iter()
                .map(|c| c.mod_floor(&bp).to_u64().unwrap())
                .collect(),
        )
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn add(&self, o: &ModPoly) -> ModPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = vec![0u64; n];
        for (k, slot) in v.iter_mut().enumerate() {
            let a = self.coeffs.get(k).copied().unwrap_or(0);
            let b = o.coeffs.get(k).copied().unwrap_or(0);
            *slot = (a + b) % self.p;
        }
        ModPoly::new(self.p, v)
    }

    pub fn sub(&self, o: &ModPoly) -> ModPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = vec![0u64; n];
        for (k, slot) in v.iter_mut().enumerate() {
            let a = self.coeffs.get(k).copied().unwrap_or(0);
            let b = o.coeffs.get(k).copied().unwrap_or(0);
            *slot = (a + self.p - b) % self.p;
        }
        ModPoly::new(self.p, v)
    }

    pub fn mul(&self, o: &ModPoly) -> ModPoly {
        if self.is_zero() || o.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut v = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                v[i + j] = (v[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        ModPoly::new(self.p, v)
    }

    pub fn monic(&self) -> ModPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = invmod(self.lead(), self.p);
        ModPoly::new(
            self.p,
            self.coeffs
                .iter()
                .map(|&c| mulmod(c, inv, self.p))
                .collect(),
        )
    }

    pub fn divmod(&self, d: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let p = self.p;
        let inv = invmod(d.lead(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (ModPoly::zero(p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k] == 0 {
                continue;
            }
            let q = mulmod(rem[k], inv, p);
            for j in 0..dd {
                let t = mulmod(q, d.coeffs[j], p);
                rem[k - dd + j] = (rem[k - dd + j] + p - t) % p;
            }
            rem[k] = 0;
            quot[k - dd] = q;
        }
        (ModPoly::new(p, quot), ModPoly::new(p, rem))
    }

    pub fn rem(&self, d: &ModPoly) -> ModPoly {
        self.divmod(d).1
    }

    pub fn gcd(&self, o: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> ModPoly {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(self.p);
        }
        ModPoly::new(
            self.p,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| mulmod(c, (i as u64 + 1) % self.p, self.p))
                .collect(),
        )
    }

    /// `self^e mod m` with an arbitrary-precision exponent.
    pub fn pow_mod(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut acc = ModPoly::one(self.p);
        let base = self.rem(m);
        if e.is_zero() {
            return acc;
        }
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }
}

/// Irreducible monic factors of a separable input, canonically sorted by
/// degree then coefficient vector. Errors with `NotUsablePrime` when `p`
/// divides the leading coefficient or the reduction is inseparable.
pub fn factor_mod_p(coeffs: &[BigInt], p: u64, seed: u64) -> Result<Vec<ModPoly>> {
    let lc = coeffs
        .last()
        .ok_or_else(|| Error::Input("cannot factor the zero polynomial".into()))?;
    if lc.mod_floor(&BigInt::from(p)).is_zero() {
        return Err(Error::NotUsablePrime {
            prime: p,
            reason: "divides the leading coefficient".into(),
        });
    }
    let f = ModPoly::from_bigint_coeffs(coeffs, p).monic();
    let fd = f.derivative();
    if f.gcd(&fd).degree() != Some(0) {
        return Err(Error::NotUsablePrime {
            prime: p,
            reason: "reduction is not separable".into(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut factors: Vec<ModPoly> = Vec::new();
    let mut rem = f;
    let mut h = ModPoly::x(p);
    let mut d = 0usize;
    while rem.degree().is_some_and(|n| n > 0) {
        d += 1;
        let n = rem.degree().unwrap();
        if 2 * d > n {
            factors.push(rem.clone());
            break;
        }
        h = h.pow_mod(&BigUint::from(p), &rem);
        let g = h.sub(&ModPoly::x(p)).gcd(&rem);
        if g.degree().is_some_and(|dg| dg > 0) {
            factors.extend(equal_degree_split(&g, d, p, &mut rng)?);
            rem = rem.divmod(&g).0;
            h = h.rem(&rem);
        }
    }
    factors.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(factors)
}

/// Factor degrees of `coeffs` mod `p`, sorted descending. This is the cycle
/// type of the Frobenius at `p` when the input is the reduction of a
/// separable integer polynomial.
pub fn factor_degrees_mod_p(coeffs: &[BigInt], p: u64, seed: u64) -> Result<Vec<u32>> {
    let factors = factor_mod_p(coeffs, p, seed)?;
    let mut degrees: Vec<u32> = factors.iter().map(|g| g.degree().unwrap() as u32).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Ok(degrees)
}

/// Splits a product of distinct irreducible factors of common degree `d`.
fn equal_degree_split(g: &ModPoly, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Result<Vec<ModPoly>> {
    let deg = g.degree().unwrap();
    if deg == d {
        return Ok(vec![g.monic()]);
    }
    for _attempt in 0..10_000 {
        let r = random_poly(rng, p, deg);
        let cand = if r.degree().is_some_and(|dr| dr > 0) {
            let shared = r.gcd(g);
            if shared.degree().is_some_and(|ds| ds > 0 && ds < deg) {
                Some(shared)
            } else {
                let split = if p == 2 {
                    trace_map(&r, d, g)
                } else {
                    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
                    r.pow_mod(&e, g).sub(&ModPoly::one(p))
                };
                let w = split.gcd(g);
                w.degree().filter(|&dw| dw > 0 && dw < deg).map(|_| w)
            }
        } else {
            None
        };
        if let Some(w) = cand {
            let other = g.divmod(&w).0;
            let mut out = equal_degree_split(&w, d, p, rng)?;
            out.extend(equal_degree_split(&other, d, p, rng)?);
            return Ok(out);
        }
    }
    Err(Error::Internal(format!(
        "equal-degree splitting stalled at p = {p}, d = {d}"
    )))
}

/// `r + r^2 + r^4 + ... + r^(2^(d-1)) mod g`, the splitting map at p = 2.
fn trace_map(r: &ModPoly, d: usize, g: &ModPoly) -> ModPoly {
    let mut acc = r.rem(g);
    let mut power = r.rem(g);
    for _ in 1..d {
        power = power.mul(&power).rem(g);
        acc = acc.add(&power);
    }
    acc
}

fn random_poly(rng: &mut ChaCha8Rng, p: u64, max_deg: usize) -> ModPoly {
    let len = rng.gen_range(1..=max_deg.max(1));
    ModPoly::new(p, (0..=len).map(|_| rng.gen_range(0..p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;

    fn model(s: &str) -> Vec<BigInt> {
        UniPoly::parse(s).unwrap().integer_model().unwrap()
    }

    #[test]
    fn factor_degree_examples() {
        assert_eq!(
            factor_degrees_mod_p(&model("t^7 - t - 1"), 2, 0).unwrap(),
            vec![7]
        );
        assert_eq!(
            factor_degrees_mod_p(&model("t^2 - 1"), 3, 0).unwrap(),
            vec![1, 1]
        );
        assert!(matches!(
            factor_degrees_mod_p(&model("t^2 - 1"), 2, 0),
            Err(Error::NotUsablePrime { prime: 2, .. })
        ));
        assert!(matches!(
            factor_degrees_mod_p(&model("2t^2 + t"), 2, 0),
            Err(Error::NotUsablePrime { prime: 2, .. })
        ));
    }

    #[test]
    fn degree_sum_and_product_invariants() {
        let polys = [
            "t^7 - t - 1",
            "t^7 - 2",
            "t^6 + t^3 + 3",
            "t^5 - t^2 + 4t - 9",
        ];
        let primes = [3u64, 5, 11, 13, 101, 9973];
        for s in polys {
            let m = model(s);
            let n = (m.len() - 1) as u32;
            for &p in &primes {
                let Ok(factors) = factor_mod_p(&m, p, 7) else {
                    continue;
                };
                let total: u32 = factors.iter().map(|g| g.degree().unwrap() as u32).sum();
                assert_eq!(total, n, "degree sum at p = {p} for {s}");
                // Re-multiplication reproduces the monic reduction.
                let mut prod = ModPoly::one(p);
                for g in &factors {
                    assert!(g.is_monic());
                    prod = prod.mul(g);
                }
                assert_eq!(prod, ModPoly::from_bigint_coeffs(&m, p).monic());
            }
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let m = model("t^7 + 3t^4 - t - 3"); // reducible: t = 1 is a root
        let a = factor_mod_p(&m, 101, 12345).unwrap();
        let b = factor_mod_p(&m, 101, 12345).unwrap();
        assert_eq!(a, b);
        // Different seed may walk a different splitting path but the
        // canonical sorted factor list is identical.
        let c = factor_mod_p(&m, 101, 54321).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn splits_many_equal_degree_factors() {
        // x^4 + 1 splits into four linears mod 17 and two quadratics mod 7.
        let m = model("t^4 + 1");
        assert_eq!(factor_degrees_mod_p(&m, 17, 0).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(factor_degrees_mod_p(&m, 7, 0).unwrap(), vec![2, 2]);
        // Trace-map splitting at p = 2: t^2 + t = t(t + 1).
        assert_eq!(
            factor_degrees_mod_p(&model("t^2 + t"), 2, 0).unwrap(),
            vec![1, 1]
        );
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        let p = 13u64;
        let g = ModPoly::new(p, vec![5, 0, 1, 1]);
        let base = ModPoly::new(p, vec![2, 3, 1]);
        let mut want = ModPoly::one(p);
        for _ in 0..9 {
            want = want.mul(&base).rem(&g);
        }
        assert_eq!(base.pow_mod(&BigUint::from(9u32), &g), want);
    }
}
