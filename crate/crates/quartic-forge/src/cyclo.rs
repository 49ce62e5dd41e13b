//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! Values are sparse integer combinations of roots of unity. Equality and
//! zero tests reduce to canonical coordinates modulo the N-th cyclotomic
//! polynomial using a precomputed table of the coordinates of every power
//! zeta^k, so the hot path (validating character tables) is table lookups
//! and i64 accumulation, not polynomial division.

use crate::{Error, Result};
use std::collections::BTreeMap;

/// Sparse element of Z[zeta_N]: a finite sum of mult * zeta^exp terms.
/// Exponents are reduced mod N by the owning context's operations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycloNum {
    terms: BTreeMap<u32, i64>,
}

impl CycloNum {
    pub fn zero() -> CycloNum {
        CycloNum::default()
    }

    pub fn int(k: i64) -> CycloNum {
        CycloNum::from_pairs(&[(0, k)])
    }

    pub fn root(exp: u32, mult: i64) -> CycloNum {
        CycloNum::from_pairs(&[(exp, mult)])
    }

    pub fn from_pairs(pairs: &[(u32, i64)]) -> CycloNum {
        let mut terms = BTreeMap::new();
        for &(e, m) in pairs {
            if m == 0 {
                continue;
            }
            let entry = terms.entry(e).or_insert(0i64);
            *entry += m;
            if *entry == 0 {
                terms.remove(&e);
            }
        }
        CycloNum { terms }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.terms.iter().map(|(&e, &m)| (e, m))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }
}

/// Arithmetic context for a fixed conductor N.
pub struct CycloCtx {
    n: u32,
    phi: usize,
    /// Coordinates of zeta^k in the power basis 1, zeta, ..., zeta^(phi-1),
    /// for k = 0..N-1.
    power_table: Vec<Vec<i64>>,
}

impl CycloCtx {
    pub fn new(n: u32) -> Result<CycloCtx> {
        if n == 0 || n > 10_000 {
            return Err(Error::Input(format!("conductor {n} out of range")));
        }
        let modulus = cyclotomic_polynomial(n);
        let phi = modulus.len() - 1;
        if phi != euler_phi(n) as usize {
            return Err(Error::Internal(format!(
                "cyclotomic polynomial degree mismatch at N = {n}"
            )));
        }
        // Coordinates of zeta^k, built incrementally: multiply by zeta
        // (shift) and reduce the overflow with the monic modulus.
        let mut power_table = Vec::with_capacity(n as usize);
        let mut current = vec![0i64; phi];
        if phi > 0 {
            current[0] = 1;
        }
        for _ in 0..n {
            power_table.push(current.clone());
            let mut next = vec![0i64; phi + 1];
            for (i, &c) in current.iter().enumerate() {
                next[i + 1] = c;
            }
            let overflow = next[phi];
            if overflow != 0 {
                for i in 0..phi {
                    next[i] -= overflow * modulus[i];
                }
            }
            next.truncate(phi);
            current = next;
        }
        Ok(CycloCtx {
            n,
            phi,
            power_table,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn add(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        let mut pairs: Vec<(u32, i64)> = a.pairs().map(|(e, m)| (e % self.n, m)).collect();
        pairs.extend(b.pairs().map(|(e, m)| (e % self.n, m)));
        CycloNum::from_pairs(&pairs)
    }

    pub fn sub(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        self.add(a, &self.scale(b, -1))
    }

    pub fn scale(&self, a: &CycloNum, k: i64) -> CycloNum {
        CycloNum::from_pairs(&a.pairs().map(|(e, m)| (e, m * k)).collect::<Vec<_>>())
    }

    pub fn mul(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        let mut pairs = Vec::with_capacity(a.term_count() * b.term_count());
        for (ea, ma) in a.pairs() {
            for (eb, mb) in b.pairs() {
                pairs.push(((ea + eb) % self.n, ma * mb));
            }
        }
        CycloNum::from_pairs(&pairs)
    }

    /// Complex conjugation: zeta^e to zeta^(N-e).
    pub fn conj(&self, a: &CycloNum) -> CycloNum {
        CycloNum::from_pairs(
            &a.pairs()
                .map(|(e, m)| ((self.n - e % self.n) % self.n, m))
                .collect::<Vec<_>>(),
        )
    }

    /// Coordinates in the power basis, length phi(N). Accumulated in i128
    /// to absorb large multiplicities before the final narrowing.
    pub fn canonical(&self, a: &CycloNum) -> Vec<i64> {
        let mut acc = vec![0i128; self.phi];
        for (e, m) in a.pairs() {
            let row = &self.power_table[(e % self.n) as usize];
            for (slot, &c) in acc.iter_mut().zip(row.iter()) {
                *slot += m as i128 * c as i128;
            }
        }
        acc.into_iter()
            .map(|v| i64::try_from(v).expect("canonical coordinate overflow"))
            .collect()
    }

    pub fn is_zero(&self, a: &CycloNum) -> bool {
        self.canonical(a).iter().all(|&c| c == 0)
    }

    pub fn eq(&self, a: &CycloNum, b: &CycloNum) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    pub fn eq_int(&self, a: &CycloNum, k: i64) -> bool {
        let coords = self.canonical(a);
        if self.phi == 0 {
            return k == 0;
        }
        coords[0] == k && coords[1..].iter().all(|&c| c == 0)
    }

    /// Some(k) when the value is the rational integer k.
    pub fn as_int(&self, a: &CycloNum) -> Option<i64> {
        let coords = self.canonical(a);
        if coords[1..].iter().all(|&c| c == 0) {
            Some(coords[0])
        } else {
            None
        }
    }

    pub fn is_real(&self, a: &CycloNum) -> bool {
        self.eq(a, &self.conj(a))
    }
}

pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2u32;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients of the N-th cyclotomic polynomial, ascending, computed by
/// dividing x^N - 1 by the cyclotomic polynomials of the proper divisors.
fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut memo: BTreeMap<u32, Vec<i64>> = BTreeMap::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        // x^d - 1
        let mut num = vec![0i64; d as usize + 1];
        num[0] = -1;
        num[d as usize] = 1;
        for (&e, phi_e) in memo.iter() {
            if d % e == 0 {
                num = divide_exact(&num, phi_e);
            }
        }
        memo.insert(d, num);
    }
    memo.remove(&n).unwrap()
}

/// Exact division of integer polynomials with monic divisor.
fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let q = rem[k];
        if q != 0 {
            quot[k - dd] = q;
            for (j, &c) in den.iter().enumerate() {
                rem[k - dd + j] -= q * c;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division must be exact");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(7), vec![1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn euler_phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(420), 96);
        assert_eq!(euler_phi(840), 192);
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let ctx = CycloCtx::new(4).unwrap();
        let i = CycloNum::root(1, 1);
        assert!(ctx.eq_int(&ctx.mul(&i, &i), -1));
        assert!(ctx.is_zero(&ctx.add(&ctx.mul(&i, &i), &CycloNum::int(1))));
    }

    #[test]
    fn root_sums_vanish() {
        for n in [5u32, 12, 30] {
            let ctx = CycloCtx::new(n).unwrap();
            let all: Vec<(u32, i64)> = (0..n).map(|e| (e, 1)).collect();
            assert!(ctx.is_zero(&CycloNum::from_pairs(&all)));
        }
    }

    #[test]
    fn quadratic_gauss_values_at_conductor_420() {
        // zeta_7 = zeta_420^60. The two Gauss-sum combinations satisfy
        // b + b* = -1 and b b* = 2.
        let ctx = CycloCtx::new(420).unwrap();
        let b = CycloNum::from_pairs(&[(60, 1), (120, 1), (240, 1)]);
        let bs = CycloNum::from_pairs(&[(180, 1), (300, 1), (360, 1)]);
        assert!(ctx.eq_int(&ctx.add(&b, &bs), -1));
        assert!(ctx.eq_int(&ctx.mul(&b, &bs), 2));
        assert!(ctx.eq(&ctx.conj(&b), &bs));
        assert!(!ctx.is_real(&b));
    }

    #[test]
    fn square_root_of_two_at_conductor_840() {
        // zeta_8 = zeta_840^105; zeta_8 + zeta_8^-1 squares to 2.
        let ctx = CycloCtx::new(840).unwrap();
        let r2 = CycloNum::from_pairs(&[(105, 1), (735, 1)]);
        assert!(ctx.eq_int(&ctx.mul(&r2, &r2), 2));
        assert!(ctx.is_real(&r2));
        assert_eq!(ctx.as_int(&r2), None);
        assert_eq!(ctx.as_int(&CycloNum::int(-5)), Some(-5));
    }

    #[test]
    fn exponents_reduce_mod_conductor() {
        let ctx = CycloCtx::new(5).unwrap();
        let a = CycloNum::root(7, 3); // zeta^7 = zeta^2
        let b = CycloNum::root(2, 3);
        assert!(ctx.eq(&a, &b));
        // 1 + zeta + ... + zeta^4 = 0, so zeta^4 = -(1 + zeta + zeta^2 + zeta^3).
        let z4 = CycloNum::root(4, 1);
        let rest = CycloNum::from_pairs(&[(0, -1), (1, -1), (2, -1), (3, -1)]);
        assert!(ctx.eq(&z4, &rest));
    }
}
