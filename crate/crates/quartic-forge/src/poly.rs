//! Dense univariate polynomials over the rationals.
//!
//! Coefficient vectors are indexed by exponent and kept trimmed: the leading
//! coefficient is nonzero and the zero polynomial is the empty vector.
//! Resultants are computed fraction-free (Bareiss elimination on the
//! Sylvester matrix of the denominator-cleared inputs), so discriminants of
//! integer polynomials come out as exact integers.

use crate::rat::{display_string, fraction_string, parse_rat, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        UniPoly::new(v)
    }

    pub fn variable() -> Self {
        UniPoly::monomial(Rat::one(), 1)
    }

    pub fn from_int_coeffs(c: &[i64]) -> Self {
        UniPoly::new(c.iter().map(|&n| crate::rat::rat_int(n)).collect())
    }

    pub fn from_bigint_coeffs(c: &[BigInt]) -> Self {
        UniPoly::new(c.iter().map(|n| Rat::from_integer(n.clone())).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
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

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + other.coeff(k));
        }
        UniPoly::new(v)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - other.coeff(k));
        }
        UniPoly::new(v)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divmod(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::ZeroDivisor)?;
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lead;
            for j in 0..dd {
                let t = &q * &d.coeffs[j];
                rem[k - dd + j] -= t;
            }
            rem[k] = Rat::zero();
            quot[k - dd] = q;
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn monic(&self) -> Result<UniPoly> {
        let lead = self.leading().ok_or(Error::ZeroDivisor)?;
        Ok(self.scale(&(Rat::one() / lead)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`. Uses a primitive
    /// pseudo-remainder sequence over the integers to keep coefficients small.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic().unwrap_or_else(|_| UniPoly::zero());
        }
        if other.is_zero() {
            return self.monic().unwrap_or_else(|_| UniPoly::zero());
        }
        let mut a = primitive_int_coeffs(self);
        let mut b = primitive_int_coeffs(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = make_primitive(r);
        }
        UniPoly::from_bigint_coeffs(&a)
            .monic()
            .unwrap_or_else(|_| UniPoly::zero())
    }

    /// Primitive integer model: coefficients cleared of denominators and of
    /// common content, leading coefficient positive. Errors on zero input.
    pub fn integer_model(&self) -> Result<Vec<BigInt>> {
        if self.is_zero() {
            return Err(Error::Input("integer model of the zero polynomial".into()));
        }
        let mut v = primitive_int_coeffs(self);
        if v.last().unwrap().is_negative() {
            for c in &mut v {
                *c = -(c.clone());
            }
        }
        Ok(v)
    }

    /// Resultant of `a` and `b`. Errors when either argument is zero.
    pub fn resultant(a: &UniPoly, b: &UniPoly) -> Result<Rat> {
        let n = a
            .degree()
            .ok_or_else(|| Error::Input("resultant with a zero polynomial operand".into()))?;
        let m = b
            .degree()
            .ok_or_else(|| Error::Input("resultant with a zero polynomial operand".into()))?;
        if n == 0 && m == 0 {
            return Ok(Rat::one());
        }
        if n == 0 {
            return Ok(rat_pow(&a.coeffs[0], m));
        }
        if m == 0 {
            return Ok(rat_pow(&b.coeffs[0], n));
        }
        let (ai, s) = int_coeffs_scaled(a);
        let (bi, t) = int_coeffs_scaled(b);
        let det = sylvester_det(&ai, &bi);
        let denom = s.pow(m as u32) * t.pow(n as u32);
        Ok(Rat::new(det, denom))
    }

    /// `(-1)^{n(n-1)/2} * resultant(f, f') / lc(f)` for `n = deg f >= 1`.
    pub fn discriminant(f: &UniPoly) -> Result<Rat> {
        let n = f
            .degree()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::Input("discriminant needs degree >= 1".into()))?;
        let df = f.derivative();
        let res = if df.is_zero() {
            // Impossible over the rationals for degree >= 1.
            return Err(Error::Internal("vanishing derivative".into()));
        } else {
            UniPoly::resultant(f, &df)?
        };
        let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        Ok(res / f.leading().unwrap() * crate::rat::rat_int(sign))
    }

    /// Power sums `p_1, ..., p_m` of the roots of a monic `f`, by the Newton
    /// recurrence on the elementary symmetric functions.
    pub fn power_sums(f: &UniPoly, m: usize) -> Result<Vec<Rat>> {
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        let n = f.degree().unwrap();
        // e_i = (-1)^i * coeff(n - i), zero past n.
        let e = |i: usize| -> Rat {
            if i > n {
                return Rat::zero();
            }
            let c = f.coeff(n - i);
            if i.is_multiple_of(2) {
                c
            } else {
                -c
            }
        };
        let mut p: Vec<Rat> = Vec::with_capacity(m + 1);
        p.push(Rat::from_integer(BigInt::from(n))); // p_0 by convention
        for k in 1..=m {
            let mut acc = if k <= n {
                let ek = e(k);
                let kk = Rat::from_integer(BigInt::from(k));
                if k % 2 == 1 {
                    ek * kk
                } else {
                    -(ek * kk)
                }
            } else {
                Rat::zero()
            };
            for i in 1..k {
                if i > n {
                    break;
                }
                let term = e(i) * &p[k - i];
                if i % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            p.push(acc);
        }
        Ok(p.split_off(1))
    }

    /// Inverse of [`UniPoly::power_sums`]: the monic polynomial of degree `n`
    /// whose roots have the given power sums `p_1, ..., p_n`.
    pub fn from_power_sums(p: &[Rat]) -> Result<UniPoly> {
        let n = p.len();
        let mut e: Vec<Rat> = Vec::with_capacity(n + 1);
        e.push(Rat::one());
        for k in 1..=n {
            let mut acc = Rat::zero();
            for i in 1..=k {
                let term = &p[i - 1] * &e[k - i];
                if i % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            e.push(acc / Rat::from_integer(BigInt::from(k)));
        }
        let mut coeffs = vec![Rat::zero(); n + 1];
        for k in 0..=n {
            let c = if k % 2 == 0 {
                e[k].clone()
            } else {
                -e[k].clone()
            };
            coeffs[n - k] = c;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Parses text like `t^7 - t - 1` or `3*t^2 + 1/2`. Any single letter
    /// works as the variable as long as it is used consistently.
    pub fn parse(input: &str) -> Result<UniPoly> {
        let mut chars = input.chars().peekable();
        let mut terms: Vec<(Rat, usize)> = Vec::new();
        let mut var: Option<char> = None;
        let mut sign = 1i64;
        let mut expect_term = true;

        skip_ws(&mut chars);
        if chars.peek().is_none() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        loop {
            skip_ws(&mut chars);
            match chars.peek() {
                None => {
                    if expect_term {
                        return Err(Error::Parse("dangling sign".into()));
                    }
                    break;
                }
                Some(&c) if c == '+' || c == '-' => {
                    if expect_term && !terms.is_empty() {
                        return Err(Error::Parse("consecutive signs".into()));
                    }
                    chars.next();
                    sign = if c == '-' { -sign } else { sign };
                    expect_term = true;
                    continue;
                }
                _ => {}
            }
            if !expect_term {
                return Err(Error::Parse(format!(
                    "expected `+` or `-` before `{}`",
                    chars.peek().unwrap()
                )));
            }
            let (coeff, exp) = parse_term(&mut chars, &mut var)?;
            let signed = if sign < 0 { -coeff } else { coeff };
            terms.push((signed, exp));
            sign = 1;
            expect_term = false;
        }
        let max = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
        let mut coeffs = vec![Rat::zero(); max + 1];
        for (c, e) in terms {
            coeffs[e] += c;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Canonical text form with variable `t`, highest exponent first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let abs = c.abs();
            let unit = abs.is_one();
            if k == 0 {
                out.push_str(&display_string(&abs));
            } else {
                if !unit {
                    out.push_str(&display_string(&abs));
                    out.push('*');
                }
                out.push('t');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }

    /// JSON coefficient array: `"n/d"` strings indexed by exponent.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fraction_string).collect()
    }

    pub fn from_coeff_strings(strings: &[String]) -> Result<UniPoly> {
        let coeffs = strings
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(coeffs))
    }
}

fn skip_ws(chars: &mut std::iter::Peekable<std::str::Chars>) {
    while chars.peek().is_some_and(|c| c.is_whitespace()) {
        chars.next();
    }
}

fn parse_digits(chars: &mut std::iter::Peekable<std::str::Chars>) -> Option<String> {
    let mut s = String::new();
    while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
        s.push(chars.next().unwrap());
    }
    if s.is_empty() {
        None
    } else {
        Some(s)
    }
}

fn parse_term(
    chars: &mut std::iter::Peekable<std::str::Chars>,
    var: &mut Option<char>,
) -> Result<(Rat, usize)> {
    skip_ws(chars);
    let mut coeff: Option<Rat> = None;
    if let Some(num) = parse_digits(chars) {
        let mut lit = num;
        if chars.peek() == Some(&'/') {
            chars.next();
            let den =
                parse_digits(chars).ok_or_else(|| Error::Parse("missing denominator".into()))?;
            lit = format!("{lit}/{den}");
        }
        coeff = Some(parse_rat(&lit)?);
        skip_ws(chars);
        if chars.peek() == Some(&'*') {
            chars.next();
            skip_ws(chars);
        }
    }
    let mut exp = 0usize;
    if chars.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
        let v = chars.next().unwrap();
        match var {
            Some(seen) if *seen != v => {
                return Err(Error::Parse(format!("mixed variables `{seen}` and `{v}`")));
            }
            None => *var = Some(v),
            _ => {}
        }
        exp = 1;
        skip_ws(chars);
        if chars.peek() == Some(&'^') {
            chars.next();
            skip_ws(chars);
            let d = parse_digits(chars)
                .ok_or_else(|| Error::Parse("missing exponent after `^`".into()))?;
            exp = d
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad exponent `{d}`: {e}")))?;
        }
    }
    match coeff {
        Some(c) => Ok((c, exp)),
        None if exp > 0 => Ok((Rat::one(), exp)),
        None => Err(Error::Parse("expected a term".into())),
    }
}

fn rat_pow(base: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= base;
    }
    acc
}

/// Integer coefficients `A` with `A = s * self` for a positive integer `s`
/// (the lcm of the denominators).
fn int_coeffs_scaled(f: &UniPoly) -> (Vec<BigInt>, BigInt) {
    let mut l = BigInt::one();
    for c in f.coeffs() {
        l = l.lcm(c.denom());
    }
    let v = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    (v, l)
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in &mut v {
            *c = &*c / &g;
        }
    }
    v
}

fn primitive_int_coeffs(f: &UniPoly) -> Vec<BigInt> {
    make_primitive(int_coeffs_scaled(f).0)
}

/// One full pseudo-remainder: scales the dividend by powers of `lc(b)` so the
/// division stays in the integers.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let dr = r.len() - 1;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for j in 0..=db {
            let t = &lr * &b[j];
            r[dr - db + j] -= t;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Determinant of the Sylvester matrix by fraction-free Bareiss elimination.
fn sylvester_det(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let n = a.len() - 1;
    let m = b.len() - 1;
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for i in 0..m {
        for (j, c) in a.iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..n {
        for (j, c) in b.iter().rev().enumerate() {
            mat[m + i][i + j] = c.clone();
        }
    }
    bareiss_det(mat)
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by the Bareiss identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use rand::{Rng, SeedableRng};

    fn p(s: &str) -> UniPoly {
        UniPoly::parse(s).unwrap()
    }

    #[test]
    fn parse_round_trip() {
        let f = p("t^7 - t - 1");
        assert_eq!(f.degree(), Some(7));
        assert_eq!(f.coeff(7), rat_int(1));
        assert_eq!(f.coeff(1), rat_int(-1));
        assert_eq!(f.coeff(0), rat_int(-1));
        assert_eq!(f.to_text(), "t^7 - t - 1");
        assert_eq!(UniPoly::parse(&f.to_text()).unwrap(), f);

        let g = p("3/2*x^2 + 2x - 5");
        assert_eq!(g.coeff(2), rat(3, 2));
        assert_eq!(g.coeff(1), rat_int(2));
        assert_eq!(g.coeff(0), rat_int(-5));
        assert_eq!(UniPoly::parse(&g.to_text()).unwrap(), g);

        assert!(UniPoly::parse("x + y").is_err());
        assert!(UniPoly::parse("").is_err());
        assert!(UniPoly::parse("t^").is_err());
        assert!(UniPoly::parse("3 +").is_err());
        assert_eq!(p("0").to_text(), "0");
        assert_eq!(p("t + t").coeff(1), rat_int(2));
    }

    #[test]
    fn coeff_strings_round_trip() {
        let f = p("t^7 - t - 1");
        let s = f.coeff_strings();
        assert_eq!(s[0], "-1/1");
        assert_eq!(s[7], "1/1");
        assert_eq!(UniPoly::from_coeff_strings(&s).unwrap(), f);
    }

    #[test]
    fn divmod_examples() {
        // t^9 = t^2 * (t^7 - t - 1) + (t^3 + t^2)
        let f = p("t^7 - t - 1");
        let (q, r) = UniPoly::monomial(Rat::one(), 9).divmod(&f).unwrap();
        assert_eq!(q, p("t^2"));
        assert_eq!(r, p("t^3 + t^2"));
        assert!(p("t").divmod(&UniPoly::zero()).is_err());
        // Non-monic divisor.
        let (q2, r2) = p("2t^3 + t + 1").divmod(&p("2t - 1")).unwrap();
        assert_eq!(q2.mul(&p("2t - 1")).add(&r2), p("2t^3 + t + 1"));
    }

    #[test]
    fn divmod_random_round_trip() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..60 {
            let da = rng.gen_range(0..9);
            let db = rng.gen_range(1..5);
            let a = random_poly(&mut rng, da);
            let mut b = random_poly(&mut rng, db);
            if b.is_zero() {
                b = p("t + 1");
            }
            let (q, r) = a.divmod(&b).unwrap();
            assert_eq!(q.mul(&b).add(&r), a);
            if let Some(dr) = r.degree() {
                assert!(dr < b.degree().unwrap());
            }
        }
    }

    fn random_poly(rng: &mut impl Rng, deg: usize) -> UniPoly {
        let coeffs: Vec<Rat> = (0..=deg)
            .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
            .collect();
        UniPoly::new(coeffs)
    }

    #[test]
    fn resultant_examples() {
        let r = UniPoly::resultant(&p("t - 2"), &p("t - 3")).unwrap();
        assert_eq!(r, rat_int(-1));
        let r2 = UniPoly::resultant(&p("t^2 - 1"), &p("t^2 - 4")).unwrap();
        assert_eq!(r2, rat_int(9));
        assert!(UniPoly::resultant(&p("t"), &UniPoly::zero()).is_err());
        // Common root forces zero.
        let r3 = UniPoly::resultant(&p("t^2 - 1"), &p("t - 1")).unwrap();
        assert_eq!(r3, rat_int(0));
    }

    #[test]
    fn resultant_multiplicative_in_first_argument() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..30 {
            let a = random_nonzero(&mut rng, 3);
            let b = random_nonzero(&mut rng, 2);
            let c = random_nonzero(&mut rng, 2);
            let lhs = UniPoly::resultant(&a.mul(&b), &c).unwrap();
            let rhs = UniPoly::resultant(&a, &c).unwrap() * UniPoly::resultant(&b, &c).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    fn random_nonzero(rng: &mut impl Rng, deg: usize) -> UniPoly {
        loop {
            let f = random_poly(rng, deg);
            if f.degree() == Some(deg) {
                return f;
            }
        }
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(UniPoly::discriminant(&p("t^2 - 1")).unwrap(), rat_int(4));
        assert_eq!(UniPoly::discriminant(&p("t^2")).unwrap(), rat_int(0));
        // Frozen value for the running degree-7 example.
        assert_eq!(
            UniPoly::discriminant(&p("t^7 - t - 1")).unwrap(),
            rat_int(-776887)
        );
        // Quadratic formula cross-check: disc(a t^2 + b t + c) = b^2 - 4ac.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        for _ in 0..40 {
            let (a, b, c) = (
                rng.gen_range(1..=9i64),
                rng.gen_range(-9..=9i64),
                rng.gen_range(-9..=9i64),
            );
            let f = UniPoly::from_int_coeffs(&[c, b, a]);
            assert_eq!(
                UniPoly::discriminant(&f).unwrap(),
                rat_int(b * b - 4 * a * c)
            );
        }
    }

    #[test]
    fn discriminant_zero_iff_gcd_with_derivative_nonconstant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(44);
        for _ in 0..40 {
            let degree = rng.gen_range(2..6);
            let f = random_nonzero(&mut rng, degree);
            let disc = UniPoly::discriminant(&f).unwrap();
            let g = f.gcd(&f.derivative());
            assert_eq!(disc.is_zero(), g.degree().is_some_and(|d| d > 0));
        }
        // Forced repeated root.
        let f = p("t - 3").mul(&p("t - 3")).mul(&p("t + 1"));
        assert!(UniPoly::discriminant(&f).unwrap().is_zero());
    }

    #[test]
    fn power_sum_examples() {
        let f = p("t^7 - t - 1");
        let ps = UniPoly::power_sums(&f, 7).unwrap();
        let want: Vec<Rat> = [0, 0, 0, 0, 0, 6, 7].iter().map(|&n| rat_int(n)).collect();
        assert_eq!(ps, want);
        assert!(UniPoly::power_sums(&p("2t^2 - 1"), 3).is_err());
        // Roots 1 and 2.
        let g = p("t^2 - 3t + 2");
        assert_eq!(
            UniPoly::power_sums(&g, 3).unwrap(),
            vec![rat_int(3), rat_int(5), rat_int(9)]
        );
    }

    #[test]
    fn newton_round_trip_exact() {
        // Frozen inverse pair.
        let f = UniPoly::from_power_sums(&[rat_int(0), rat_int(2)]).unwrap();
        assert_eq!(f, p("t^2 - 1"));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(45);
        for _ in 0..100 {
            let deg = rng.gen_range(1..=8);
            let mut coeffs: Vec<Rat> = (0..deg)
                .map(|_| rat(rng.gen_range(-8..=8), rng.gen_range(1..=3)))
                .collect();
            coeffs.push(Rat::one());
            let f = UniPoly::new(coeffs);
            let ps = UniPoly::power_sums(&f, deg).unwrap();
            assert_eq!(UniPoly::from_power_sums(&ps).unwrap(), f);
        }
    }

    #[test]
    fn integer_model_is_primitive_with_positive_lead() {
        let f = p("t^2 - 1").scale(&rat(-3, 4));
        let m = f.integer_model().unwrap();
        let want: Vec<BigInt> = [-1i64, 0, 1].iter().map(|&n| BigInt::from(n)).collect();
        assert_eq!(m, want);
        assert!(UniPoly::zero().integer_model().is_err());
    }

    #[test]
    fn gcd_monic_and_correct() {
        let a = p("t^2 - 1");
        let b = p("t^2 - 4");
        assert_eq!(a.gcd(&b), UniPoly::one());
        let c = p("t - 1").mul(&p("t + 2"));
        assert_eq!(a.gcd(&c), p("t - 1"));
        assert_eq!(UniPoly::zero().gcd(&p("2t + 2")), p("t + 1"));
    }
}
