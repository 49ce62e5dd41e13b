//! Remainder arithmetic in `Q[t]/(f)`.
//!
//! Elements carry their modulus; mixing moduli is an error rather than a
//! silent wrong answer. Inversion is deliberately out of scope.

use crate::poly::UniPoly;
use crate::{Error, Result};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct NfElem {
    repr: UniPoly,
    modulus: Arc<UniPoly>,
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.same_modulus(other)
    }
}

impl NfElem {
    /// Canonical representative of degree below `deg f`.
    pub fn repr(&self) -> &UniPoly {
        &self.repr
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    fn same_modulus(&self, other: &NfElem) -> bool {
        Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus
    }
}

/// Reduces `p` modulo `f`; `f` must have degree at least 1.
pub fn nf_reduce(p: &UniPoly, f: &UniPoly) -> Result<NfElem> {
    if f.degree().is_none_or(|d| d < 1) {
        return Err(Error::Input("modulus must have degree >= 1".into()));
    }
    let (_, rem) = p.divmod(f)?;
    Ok(NfElem {
        repr: rem,
        modulus: Arc::new(f.clone()),
    })
}

pub fn nf_add(x: &NfElem, y: &NfElem) -> Result<NfElem> {
    if !x.same_modulus(y) {
        return Err(Error::ModulusMismatch);
    }
    Ok(NfElem {
        repr: x.repr.add(&y.repr),
        modulus: Arc::clone(&x.modulus),
    })
}

pub fn nf_mul(x: &NfElem, y: &NfElem) -> Result<NfElem> {
    if !x.same_modulus(y) {
        return Err(Error::ModulusMismatch);
    }
    let (_, rem) = x.repr.mul(&y.repr).divmod(&x.modulus)?;
    Ok(NfElem {
        repr: rem,
        modulus: Arc::clone(&x.modulus),
    })
}
