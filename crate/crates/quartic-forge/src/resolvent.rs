//! The degree-35 resolvent whose roots are sums of root triples, plus the
//! two screening predicates built on it.
//!
//! For a monic degree-7 input f with roots a_1..a_7, the resolvent R_3 is the
//! monic degree-35 polynomial with roots {a_i + a_j + a_k : i < j < k}. It is
//! computed exactly without root extraction: the power sums of f feed the
//! exponential generating function q_m(T) = sum_k m^k p_k T^k / k!, the
//! elementary-symmetric identity e_3 = (q_1^3 - 3 q_1 q_2 + 2 q_3)/6 turns
//! those into the generating series of triple-sum power sums, and inverse
//! Newton identities rebuild the coefficients.

use crate::poly::UniPoly;
use crate::rat::{rat, rat_int, Rat};
use crate::series::Series;
use crate::{Error, Result};
use num_traits::Zero;

const TRIPLES: usize = 35; // C(7,3)

/// Monic degree-35 polynomial whose roots are the triple sums of the roots
/// of `f`. Requires `f` monic of degree 7.
pub fn triple_sum_resolvent(f: &UniPoly) -> Result<UniPoly> {
    if f.degree() != Some(7) {
        return Err(Error::Input(format!(
            "triple-sum resolvent needs degree 7, got {:?}",
            f.degree()
        )));
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let p = UniPoly::power_sums(f, TRIPLES)?;
    let q1 = scaled_exponential_series(&p, 1);
    let q2 = scaled_exponential_series(&p, 2);
    let q3 = scaled_exponential_series(&p, 3);

    // e_3(x_1..x_7) in terms of power sums, applied coefficientwise to the
    // series of exp(a_i T) terms.
    let q1_sq = q1.mul(&q1);
    let mut e3 = q1_sq.mul(&q1);
    e3 = e3.sub(&q1.mul(&q2).scale(&rat_int(3)));
    e3 = e3.add(&q3.scale(&rat_int(2)));
    e3 = e3.scale(&rat(1, 6));
    if e3.coeff(0) != &rat_int(TRIPLES as i64) {
        return Err(Error::Internal(
            "triple-sum series constant term is not 35".into(),
        ));
    }

    // k! * [T^k] e3 is the k-th power sum of the 35 triple sums.
    let mut triple_power_sums = Vec::with_capacity(TRIPLES);
    let mut factorial = rat_int(1);
    for k in 1..=TRIPLES {
        factorial *= rat_int(k as i64);
        triple_power_sums.push(e3.coeff(k).clone() * factorial.clone());
    }
    UniPoly::from_power_sums(&triple_power_sums)
}

/// sum_k (m^k p_k / k!) T^k truncated at order 35, with p_0 = 7. This is
/// sum_i exp(m a_i T) as a formal series.
fn scaled_exponential_series(power_sums: &[Rat], m: i64) -> Series {
    let mut coeffs = Vec::with_capacity(TRIPLES + 1);
    coeffs.push(rat_int(7));
    let mut weight = rat_int(1); // m^k / k!
    for (k, pk) in power_sums.iter().enumerate().take(TRIPLES) {
        weight *= rat(m, k as i64 + 1);
        coeffs.push(pk.clone() * weight.clone());
    }
    Series::from_coeffs(coeffs)
}

/// True when some triple of roots of `f` sums to zero, i.e. the three
/// corresponding points of the orbit lie on a line. Exact test: R_3(0) = 0.
pub fn collinear_triple_exists(f: &UniPoly) -> Result<bool> {
    let r3 = triple_sum_resolvent(f)?;
    Ok(r3.eval(&rat_int(0)).is_zero())
}

/// True when six of the seven orbit points lie on a conic. By the residual
/// intersection argument this happens exactly when the seventh root equals
/// -c_6/c_7, so the test is f(-c_6/c_7) = 0.
pub fn six_on_conic_exists(f: &UniPoly) -> Result<bool> {
    if f.degree() != Some(7) {
        return Err(Error::Input(format!(
            "conic screening needs degree 7, got {:?}",
            f.degree()
        )));
    }
    let s = -(f.coeff(6) / f.coeff(7));
    Ok(f.eval(&s).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn poly_with_roots(roots: &[i64]) -> UniPoly {
        let mut f = UniPoly::one();
        for &r in roots {
            f = f.mul(&UniPoly::from_int_coeffs(&[-r, 1]));
        }
        f
    }

    #[test]
    fn resolvent_of_small_roots_has_exact_triple_sum_roots() {
        // Roots 1..7: the 35 triple sums range over 6..18 with known
        // multiplicities; spot-check membership and non-membership.
        let f = poly_with_roots(&[1, 2, 3, 4, 5, 6, 7]);
        let r3 = triple_sum_resolvent(&f).unwrap();
        assert_eq!(r3.degree(), Some(35));
        assert!(r3.is_monic());
        assert!(r3.eval(&rat_int(6)).is_zero()); // 1+2+3
        assert!(r3.eval(&rat_int(18)).is_zero()); // 5+6+7
        assert!(!r3.eval(&rat_int(5)).is_zero());
        assert!(!r3.eval(&rat_int(19)).is_zero());
        // Every integer 6..=18 is attained.
        for s in 6..=18 {
            assert!(r3.eval(&rat_int(s)).is_zero(), "missing triple sum {s}");
        }
    }

    #[test]
    fn resolvent_has_integer_coefficients_for_integer_input() {
        let f = UniPoly::parse("t^7 - t - 1").unwrap();
        let r3 = triple_sum_resolvent(&f).unwrap();
        for k in 0..=35 {
            assert!(
                r3.coeff(k).denom().is_one(),
                "coefficient of t^{k} is not an integer: {}",
                r3.coeff(k)
            );
        }
    }

    #[test]
    fn collinear_detection() {
        // No three of 1..7 sum to zero.
        assert!(!collinear_triple_exists(&poly_with_roots(&[1, 2, 3, 4, 5, 6, 7])).unwrap());
        // -3 + 1 + 2 = 0.
        assert!(collinear_triple_exists(&poly_with_roots(&[-3, 1, 2, 4, 5, 6, 7])).unwrap());
        assert!(!collinear_triple_exists(&UniPoly::parse("t^7 - t - 1").unwrap()).unwrap());
    }

    #[test]
    fn conic_detection() {
        // Raw screening on t^7: c_6 = 0 so the candidate seventh root is 0,
        // and f(0) = 0.
        assert!(six_on_conic_exists(&UniPoly::parse("t^7").unwrap()).unwrap());
        assert!(!six_on_conic_exists(&UniPoly::parse("t^7 - t - 1").unwrap()).unwrap());
        // Six points lie on a conic exactly when some root equals the sum of
        // all seven (conic pullbacks are the sextics with no t^5 term).
        // Roots {1..6, 21} sum to 42, not a root.
        assert!(!six_on_conic_exists(&poly_with_roots(&[1, 2, 3, 4, 5, 6, 21])).unwrap());
        // Roots {1..6, -20} sum to 1, a root.
        assert!(six_on_conic_exists(&poly_with_roots(&[1, 2, 3, 4, 5, 6, -20])).unwrap());
    }

    #[test]
    fn degree_guards() {
        assert!(triple_sum_resolvent(&UniPoly::parse("t^3 - 1").unwrap()).is_err());
        assert!(triple_sum_resolvent(&UniPoly::parse("2t^7 - 1").unwrap()).is_err());
        assert!(six_on_conic_exists(&UniPoly::parse("t^2 + 1").unwrap()).is_err());
    }
}
