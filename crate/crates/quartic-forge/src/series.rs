//! Truncated power series over the rationals.
//!
//! The truncation order is explicit: a series of order `n` stores the
//! coefficients of `tau^0 ... tau^n`. Binary operations truncate to the
//! smaller order and never read past it.

use crate::rat::Rat;
use num_traits::Zero;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Series from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Series {
        assert!(!coeffs.is_empty(), "a series needs at least order 0");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Series {
        Series {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `tau^k`; `k` must not exceed the order.
    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Series { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn s(v: &[i64]) -> Series {
        Series::from_coeffs(v.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn truncation_to_smaller_order() {
        let a = s(&[1, 1, 1, 1]);
        let b = s(&[1, 2]);
        let sum = a.add(&b);
        assert_eq!(sum.order(), 1);
        assert_eq!(sum, s(&[2, 3]));
        let prod = a.mul(&b);
        assert_eq!(prod.order(), 1);
        assert_eq!(prod, s(&[1, 3]));
    }

    #[test]
    fn multiplication_matches_polynomials_below_order() {
        // (1 + t)^2 = 1 + 2t + t^2 within order 2.
        let a = s(&[1, 1, 0]);
        assert_eq!(a.mul(&a), s(&[1, 2, 1]));
    }
}
