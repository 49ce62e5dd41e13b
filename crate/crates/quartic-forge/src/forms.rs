//! Trivariate forms supporting the orbit-on-a-twisted-cubic geometry.
//!
//! The seven roots of a degree-7 input are placed on the twisted cubic as
//! points (t^3 : t : 1). Cubic forms in x, y, z pull back along that
//! parametrization to univariate polynomials of degree at most 9, so "the
//! form vanishes at every orbit point" becomes "the pullback is divisible by
//! the input", an exact remainder computation.

use crate::numfield::nf_reduce;
use crate::poly::UniPoly;
use crate::rat::{fraction_string, parse_rat, rat_int, Rat};
use crate::resolvent;
use crate::{Error, Result};
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

/// A homogeneous polynomial in x, y, z with rational coefficients. The
/// degree is fixed at construction; the zero form of any degree has no
/// terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriForm {
    degree: u32,
    terms: BTreeMap<[u8; 3], Rat>,
}

impl TriForm {
    pub fn zero(degree: u32) -> TriForm {
        TriForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(degree: u32, terms: &[([u8; 3], Rat)]) -> Result<TriForm> {
        let mut form = TriForm::zero(degree);
        for (mono, c) in terms {
            form.add_term(*mono, c.clone())?;
        }
        Ok(form)
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_terms(degree: u32, terms: &[([u8; 3], i64)]) -> TriForm {
        TriForm::from_terms(
            degree,
            &terms
                .iter()
                .map(|&(m, c)| (m, rat_int(c)))
                .collect::<Vec<_>>(),
        )
        .expect("integer term degrees must match")
    }

    /// Adds `c * x^i y^j z^k`, merging with an existing term and dropping
    /// the monomial if the sum cancels.
    pub fn add_term(&mut self, mono: [u8; 3], c: Rat) -> Result<()> {
        let total = mono.iter().map(|&e| e as u32).sum::<u32>();
        if total != self.degree {
            return Err(Error::Input(format!(
                "monomial {mono:?} has degree {total}, form has degree {}",
                self.degree
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(mono).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
        Ok(())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: [u8; 3]) -> Rat {
        self.terms.get(&mono).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in descending lexicographic monomial order (for a homogeneous
    /// form this is graded-lex order).
    pub fn terms(&self) -> impl Iterator<Item = (&[u8; 3], &Rat)> {
        self.terms.iter().rev()
    }

    pub fn add(&self, other: &TriForm) -> Result<TriForm> {
        let degree = self.merge_degree(other)?;
        let mut out = TriForm::zero(degree);
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(*m, c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TriForm) -> Result<TriForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TriForm {
        TriForm {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &TriForm) -> TriForm {
        let mut out = TriForm::zero(self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = [ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]];
                out.add_term(m, ca * cb).expect("product degrees add");
            }
        }
        out
    }

    /// Partial derivative along axis 0 (x), 1 (y) or 2 (z).
    pub fn partial(&self, axis: usize) -> TriForm {
        assert!(axis < 3);
        let degree = self.degree.saturating_sub(1);
        let mut out = TriForm::zero(degree);
        for (m, c) in &self.terms {
            if m[axis] == 0 {
                continue;
            }
            let mut dm = *m;
            dm[axis] -= 1;
            out.add_term(dm, c * rat_int(m[axis] as i64))
                .expect("derivative drops degree by one");
        }
        out
    }

    /// Pullback along the twisted cubic (t^3 : t : 1), sending
    /// x^i y^j z^k to t^(3i + j).
    pub fn substitute_twisted_cubic(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (m, c) in &self.terms {
            let exp = 3 * m[0] as usize + m[1] as usize;
            out = out.add(&UniPoly::monomial(c.clone(), exp));
        }
        out
    }

    pub fn eval(&self, point: &[Rat; 3]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (axis, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[axis];
                }
            }
            acc += term;
        }
        acc
    }

    fn merge_degree(&self, other: &TriForm) -> Result<u32> {
        // Zero forms are degree-compatible with anything.
        if self.is_zero() {
            return Ok(other.degree);
        }
        if other.is_zero() {
            return Ok(self.degree);
        }
        if self.degree != other.degree {
            return Err(Error::Input(format!(
                "cannot combine forms of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(self.degree)
    }
}

impl std::fmt::Display for TriForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let one = rat_int(1);
        let minus_one = rat_int(-1);
        for (idx, (m, c)) in self.terms().enumerate() {
            let mono = monomial_text(m);
            if idx == 0 {
                if *c == one && !mono.is_empty() {
                    // bare monomial
                } else if *c == minus_one && !mono.is_empty() {
                    f.write_str("-")?;
                } else {
                    write!(f, "{}", crate::rat::display_string(c))?;
                    if !mono.is_empty() {
                        f.write_str("*")?;
                    }
                }
            } else {
                let (sign, mag) = if c < &Rat::zero() {
                    (" - ", -c.clone())
                } else {
                    (" + ", c.clone())
                };
                f.write_str(sign)?;
                if mag != one || mono.is_empty() {
                    write!(f, "{}", crate::rat::display_string(&mag))?;
                    if !mono.is_empty() {
                        f.write_str("*")?;
                    }
                }
            }
            f.write_str(&mono)?;
        }
        Ok(())
    }
}

fn monomial_text(m: &[u8; 3]) -> String {
    let names = ["x", "y", "z"];
    let mut parts = Vec::new();
    for (axis, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[axis].to_string()),
            _ => parts.push(format!("{}^{}", names[axis], e)),
        }
    }
    parts.join("*")
}

#[derive(Serialize, Deserialize)]
struct TermData {
    monomial: [u8; 3],
    coefficient: String,
}

#[derive(Serialize, Deserialize)]
struct TriFormData {
    degree: u32,
    terms: Vec<TermData>,
}

impl Serialize for TriForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TriFormData {
            degree: self.degree,
            terms: self
                .terms()
                .map(|(m, c)| TermData {
                    monomial: *m,
                    coefficient: fraction_string(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TriForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<TriForm, D::Error> {
        let data = TriFormData::deserialize(d)?;
        let mut form = TriForm::zero(data.degree);
        for t in data.terms {
            let c = parse_rat(&t.coefficient).map_err(D::Error::custom)?;
            form.add_term(t.monomial, c).map_err(D::Error::custom)?;
        }
        Ok(form)
    }
}

/// A degree-7 input with distinct roots, viewed as seven points on the
/// twisted cubic.
#[derive(Clone, Debug)]
pub struct OrbitB {
    f: UniPoly,
    monic: UniPoly,
}

impl OrbitB {
    pub fn new(f: &UniPoly) -> Result<OrbitB> {
        if f.degree() != Some(7) {
            return Err(Error::Input(format!(
                "orbit needs degree 7, got {:?}",
                f.degree()
            )));
        }
        if UniPoly::discriminant(f)?.is_zero() {
            return Err(Error::Inseparable);
        }
        Ok(OrbitB {
            f: f.clone(),
            monic: f.monic()?,
        })
    }

    pub fn poly(&self) -> &UniPoly {
        &self.f
    }

    pub fn monic_poly(&self) -> &UniPoly {
        &self.monic
    }
}

/// The three cubics u, v, w spanning the net through the orbit, plus the
/// reduction h = t^9 mod f used to build w.
#[derive(Clone, Debug)]
pub struct CubicBasis {
    pub u: TriForm,
    pub v: TriForm,
    pub w: TriForm,
    pub h: UniPoly,
}

/// Builds the explicit cubic forms through the seven orbit points:
/// u = x z^2 - y^3 vanishes on the whole twisted cubic; v pulls back to
/// f(t) itself; w pulls back to t^9 - h(t), a multiple of f.
pub fn cubic_basis(b: &OrbitB) -> Result<CubicBasis> {
    let u = TriForm::from_int_terms(3, &[([1, 0, 2], 1), ([0, 3, 0], -1)]);

    // Monomial of t-degree m <= 7 among cubics in (t^3, t, 1): degree 7 needs
    // x^2 y; the rest use the unique cubic monomial with 3i + j = m, j < 3.
    let encode = [
        [0u8, 0, 3], // t^0 = z^3
        [0, 1, 2],   // t^1 = y z^2
        [0, 2, 1],   // t^2 = y^2 z
        [1, 0, 2],   // t^3 = x z^2
        [1, 1, 1],   // t^4 = x y z
        [1, 2, 0],   // t^5 = x y^2
        [2, 0, 1],   // t^6 = x^2 z
        [2, 1, 0],   // t^7 = x^2 y
    ];
    let mut v = TriForm::zero(3);
    for (m, mono) in encode.iter().enumerate() {
        v.add_term(*mono, b.poly().coeff(m))?;
    }

    let t9 = UniPoly::monomial(rat_int(1), 9);
    let (_, h) = t9.divmod(b.poly())?;
    let mut w = TriForm::from_int_terms(3, &[([3, 0, 0], 1)]);
    for (m, mono) in encode.iter().enumerate().take(7) {
        w.add_term(*mono, -h.coeff(m))?;
    }

    Ok(CubicBasis { u, v, w, h })
}

/// True when `q` pulls back to a multiple of the input, i.e. vanishes at all
/// seven orbit points counted exactly.
pub fn verify_vanishing(q: &TriForm, b: &OrbitB) -> Result<bool> {
    let pullback = q.substitute_twisted_cubic();
    Ok(nf_reduce(&pullback, b.monic_poly())?.is_zero())
}

/// Jacobian determinant of three forms, expanded by cofactors.
pub fn jacobian_det(a: &TriForm, b: &TriForm, c: &TriForm) -> Result<TriForm> {
    let rows = [a, b, c];
    let grad: Vec<[TriForm; 3]> = rows
        .iter()
        .map(|f| [f.partial(0), f.partial(1), f.partial(2)])
        .collect();
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| -> Result<TriForm> {
        grad[r1][c1]
            .mul(&grad[r2][c2])
            .sub(&grad[r1][c2].mul(&grad[r2][c1]))
    };
    let mut det = grad[0][0].mul(&minor(1, 2, 1, 2)?);
    det = det.sub(&grad[0][1].mul(&minor(1, 2, 0, 2)?))?;
    det.add(&grad[0][2].mul(&minor(1, 2, 0, 1)?))
}

/// The sextic cut out by the Jacobian of the net (u, v, w): the branch
/// curve of the degree-2 map the net defines.
pub fn branch_sextic(basis: &CubicBasis) -> Result<TriForm> {
    let det = jacobian_det(&basis.u, &basis.v, &basis.w)?;
    if det.is_zero() {
        return Err(Error::Internal(
            "jacobian of the cubic net vanishes identically".into(),
        ));
    }
    Ok(det)
}

/// Exact general-position screening: no three orbit points collinear (the
/// triple-sum resolvent does not vanish at zero) and no six on a conic (the
/// residual-root candidate -c6/c7 is not a root).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralPositionCert {
    pub no_collinear_triple: bool,
    /// Value of the triple-sum resolvent at zero, as an exact fraction.
    pub resolvent_at_zero: String,
    pub no_six_on_conic: bool,
    /// The unique candidate for a seventh root residual to a conic.
    pub conic_candidate: String,
    /// Value of the input at that candidate.
    pub conic_value: String,
    pub valid: bool,
}

pub fn general_position_certificate(b: &OrbitB) -> Result<GeneralPositionCert> {
    let monic = b.monic_poly();
    let r3 = resolvent::triple_sum_resolvent(monic)?;
    let at_zero = r3.eval(&rat_int(0));
    let candidate = -(b.poly().coeff(6) / b.poly().coeff(7));
    let value = b.poly().eval(&candidate);
    let no_collinear = !at_zero.is_zero();
    let no_conic = !value.is_zero();
    Ok(GeneralPositionCert {
        no_collinear_triple: no_collinear,
        resolvent_at_zero: fraction_string(&at_zero),
        no_six_on_conic: no_conic,
        conic_candidate: fraction_string(&candidate),
        conic_value: fraction_string(&value),
        valid: no_collinear && no_conic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn standard() -> OrbitB {
        OrbitB::new(&UniPoly::parse("t^7 - t - 1").unwrap()).unwrap()
    }

    #[test]
    fn cubic_basis_of_the_standard_example() {
        let basis = cubic_basis(&standard()).unwrap();
        assert_eq!(
            basis.u,
            TriForm::from_int_terms(3, &[([1, 0, 2], 1), ([0, 3, 0], -1)])
        );
        assert_eq!(
            basis.v,
            TriForm::from_int_terms(3, &[([2, 1, 0], 1), ([0, 1, 2], -1), ([0, 0, 3], -1)])
        );
        assert_eq!(basis.h, UniPoly::parse("t^3 + t^2").unwrap());
        assert_eq!(
            basis.w,
            TriForm::from_int_terms(3, &[([3, 0, 0], 1), ([1, 0, 2], -1), ([0, 2, 1], -1)])
        );
        assert_eq!(basis.v.to_string(), "x^2*y - y*z^2 - z^3");
        assert_eq!(basis.w.to_string(), "x^3 - x*z^2 - y^2*z");
    }

    #[test]
    fn basis_members_vanish_on_the_orbit() {
        let b = standard();
        let basis = cubic_basis(&b).unwrap();
        assert!(verify_vanishing(&basis.u, &b).unwrap());
        assert!(verify_vanishing(&basis.v, &b).unwrap());
        assert!(verify_vanishing(&basis.w, &b).unwrap());
        let z3 = TriForm::from_int_terms(3, &[([0, 0, 3], 1)]);
        assert!(!verify_vanishing(&z3, &b).unwrap());
    }

    #[test]
    fn v_pulls_back_to_the_input() {
        let f = UniPoly::parse("3t^7 + t^6 - 2t^5 + t^4 - t^3 + 5t^2 + 7t - 4").unwrap();
        let b = OrbitB::new(&f).unwrap();
        let basis = cubic_basis(&b).unwrap();
        assert_eq!(basis.v.substitute_twisted_cubic(), f);
        // w pulls back to t^9 - h, a multiple of f.
        let pull = basis.w.substitute_twisted_cubic();
        let (_, rem) = pull.divmod(&f).unwrap();
        assert!(rem.is_zero());
    }

    #[test]
    fn jacobian_of_cubes_is_the_frozen_example() {
        let x3 = TriForm::from_int_terms(3, &[([3, 0, 0], 1)]);
        let y3 = TriForm::from_int_terms(3, &[([0, 3, 0], 1)]);
        let z3 = TriForm::from_int_terms(3, &[([0, 0, 3], 1)]);
        let det = jacobian_det(&x3, &y3, &z3).unwrap();
        assert_eq!(det, TriForm::from_int_terms(6, &[([2, 2, 2], 27)]));
        // Repeating a row kills the determinant.
        assert!(jacobian_det(&x3, &x3, &z3).unwrap().is_zero());
    }

    #[test]
    fn branch_sextic_is_a_nonzero_sextic_through_the_orbit() {
        let b = standard();
        let basis = cubic_basis(&b).unwrap();
        let sextic = branch_sextic(&basis).unwrap();
        assert_eq!(sextic.degree(), 6);
        assert!(!sextic.is_zero());
        assert!(verify_vanishing(&sextic, &b).unwrap());
    }

    #[test]
    fn general_position_of_the_standard_example() {
        let cert = general_position_certificate(&standard()).unwrap();
        assert!(cert.valid);
        assert!(cert.no_collinear_triple);
        assert!(cert.no_six_on_conic);
        assert_ne!(cert.resolvent_at_zero, "0/1");
    }

    #[test]
    fn collinear_configuration_is_flagged() {
        // Roots {-3, 1, 2, 4, 5, 6, 7}: the first three sum to zero.
        let mut f = UniPoly::one();
        for r in [-3i64, 1, 2, 4, 5, 6, 7] {
            f = f.mul(&UniPoly::from_int_coeffs(&[-r, 1]));
        }
        let cert = general_position_certificate(&OrbitB::new(&f).unwrap()).unwrap();
        assert!(!cert.no_collinear_triple);
        assert!(!cert.valid);
        assert_eq!(cert.resolvent_at_zero, "0/1");
    }

    #[test]
    fn six_on_conic_configuration_is_flagged() {
        // Roots {1..6, -20} sum to 1, which is itself a root, so the other
        // six points lie on a conic.
        let mut f = UniPoly::one();
        for r in [1i64, 2, 3, 4, 5, 6, -20] {
            f = f.mul(&UniPoly::from_int_coeffs(&[-r, 1]));
        }
        let cert = general_position_certificate(&OrbitB::new(&f).unwrap()).unwrap();
        assert!(!cert.no_six_on_conic);
        assert!(!cert.valid);
        assert_eq!(cert.conic_value, "0/1");
    }

    #[test]
    fn form_display_and_serde_round_trip() {
        let form = TriForm::from_terms(
            2,
            &[
                ([2, 0, 0], rat_int(1)),
                ([1, 1, 0], crate::rat::rat(-3, 2)),
                ([0, 0, 2], rat_int(-1)),
            ],
        )
        .unwrap();
        assert_eq!(form.to_string(), "x^2 - 3/2*x*y - z^2");
        let json = serde_json::to_string(&form).unwrap();
        let back: TriForm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, form);
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let quad = TriForm::from_int_terms(2, &[([2, 0, 0], 1)]);
        let cubic = TriForm::from_int_terms(3, &[([3, 0, 0], 1)]);
        assert!(quad.add(&cubic).is_err());
        let mut form = TriForm::zero(2);
        assert!(form.add_term([1, 1, 1], rat_int(1)).is_err());
    }

    #[test]
    fn partials_and_eval() {
        // d/dx (x^2 y) = 2 x y; value at (1, 2, 3).
        let f = TriForm::from_int_terms(3, &[([2, 1, 0], 1)]);
        let fx = f.partial(0);
        assert_eq!(fx, TriForm::from_int_terms(2, &[([1, 1, 0], 2)]));
        let p = [rat_int(1), rat_int(2), rat_int(3)];
        assert_eq!(f.eval(&p), rat_int(2));
        assert_eq!(fx.eval(&p), rat_int(4));
        assert!(f.partial(2).is_zero());
    }

    #[test]
    fn orbit_rejects_bad_inputs() {
        assert!(OrbitB::new(&UniPoly::parse("t^3 - 1").unwrap()).is_err());
        assert!(matches!(
            OrbitB::new(&UniPoly::parse("t^7").unwrap()),
            Err(Error::Inseparable)
        ));
    }
}
