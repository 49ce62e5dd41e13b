//! The rank-8 lattice spanned by a line class and seven point classes, its
//! mod-2 reduction, and the 6-dimensional quotient module that carries the
//! permutation action on the seven points.
//!
//! Conventions: a class is a0 * l0 + sum_b a_b * l_b with intersection
//! pairing a0 a0' - sum_b a_b a_b'. The canonical class is
//! K = -3 l0 + sum_b l_b. Mod-2 classes are u8 bitmasks, bit 0 for l0 and
//! bits 1..=7 for the seven points; the degree-0 sublattice reduces to the
//! even-weight vectors, the pairing reduces to the dot product, and its
//! radical is spanned by the reduction of K. The quotient by that radical
//! is the 6-dimensional module studied here.

use crate::f2::{F2Mat, SpanBuilder};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicClass {
    pub a0: i64,
    pub ab: [i64; 7],
}

impl PicClass {
    pub fn new(a0: i64, ab: [i64; 7]) -> PicClass {
        PicClass { a0, ab }
    }
}

pub fn line_class() -> PicClass {
    PicClass::new(1, [0; 7])
}

pub fn point_class(i: usize) -> PicClass {
    let mut ab = [0i64; 7];
    ab[i] = 1;
    PicClass::new(0, ab)
}

pub fn canonical_class() -> PicClass {
    PicClass::new(-3, [1; 7])
}

pub fn intersect(x: &PicClass, y: &PicClass) -> i64 {
    let mut acc = x.a0 * y.a0;
    for i in 0..7 {
        acc -= x.ab[i] * y.ab[i];
    }
    acc
}

/// Membership in the sublattice orthogonal to the canonical class, tested
/// through the pairing itself.
pub fn pic0_membership(x: &PicClass) -> bool {
    intersect(x, &canonical_class()) == 0
}

/// A basis of that rank-7 sublattice: six consecutive point differences and
/// l0 - 3 l_7.
pub fn pic0_basis() -> [PicClass; 7] {
    let mut basis = [PicClass::new(0, [0; 7]); 7];
    for (i, slot) in basis.iter_mut().enumerate().take(6) {
        let mut ab = [0i64; 7];
        ab[i] = 1;
        ab[i + 1] = -1;
        *slot = PicClass::new(0, ab);
    }
    let mut ab = [0i64; 7];
    ab[6] = -3;
    basis[6] = PicClass::new(1, ab);
    basis
}

/// Reduction mod 2: bit 0 = a0, bit 1+i = a_(b_i).
pub fn mod2(x: &PicClass) -> u8 {
    let mut bits = (x.a0.rem_euclid(2)) as u8;
    for (i, &c) in x.ab.iter().enumerate() {
        bits |= ((c.rem_euclid(2)) as u8) << (i + 1);
    }
    bits
}

/// The mod-2 pairing: the dot product on 8-bit vectors (minus signs vanish
/// mod 2, so the Gram matrix in the class basis is the identity).
pub fn psi(x: u8, y: u8) -> bool {
    (x & y).count_ones() % 2 == 1
}

/// Whether an 8-bit vector lies in the mod-2 image of the degree-0
/// sublattice: even weight.
pub fn in_pic0_mod2(x: u8) -> bool {
    x.count_ones().is_multiple_of(2)
}

/// Reduction of the canonical class, the all-ones vector.
pub const CANONICAL_MOD2: u8 = 0xFF;

/// Radical of the pairing restricted to the even-weight subspace, computed
/// by exhaustion.
pub fn psi0_radical() -> Vec<u8> {
    (0u16..256)
        .map(|v| v as u8)
        .filter(|&v| in_pic0_mod2(v))
        .filter(|&v| {
            (0u16..256)
                .map(|w| w as u8)
                .filter(|&w| in_pic0_mod2(w))
                .all(|w| !psi(v, w))
        })
        .collect()
}

/// The quotient map onto the 6-dimensional module, written as a 7-bit
/// vector: coordinate b is a_b + a0. Its kernel is {0, CANONICAL_MOD2}.
pub fn kappa(z: u8) -> u8 {
    let a0 = z & 1;
    let mut out = 0u8;
    for b in 0..7 {
        out |= ((z >> (b + 1) & 1) ^ a0) << b;
    }
    out
}

/// An element of the quotient module in its 7-bit even-weight model. Bits
/// 0..=5 are free coordinates; bit 6 is determined by parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QBElem(u8);

impl QBElem {
    pub fn from_bits(bits: u8) -> Result<QBElem> {
        if bits & 0x80 != 0 {
            return Err(Error::Input("quotient elements have 7 bits".into()));
        }
        if !bits.count_ones().is_multiple_of(2) {
            return Err(Error::Input("quotient elements have even weight".into()));
        }
        Ok(QBElem(bits))
    }

    pub fn zero() -> QBElem {
        QBElem(0)
    }

    pub fn bits(&self) -> u8 {
        self.0
    }

    pub fn add(&self, other: &QBElem) -> QBElem {
        QBElem(self.0 ^ other.0)
    }

    /// Coordinates in the basis e_i = indicator{b_i, b_7}, i = 0..5: simply
    /// the first six bits.
    pub fn coords(&self) -> u64 {
        (self.0 & 0x3F) as u64
    }

    pub fn from_coords(c: u64) -> QBElem {
        assert!(c < 64);
        let low = c as u8;
        let parity = low.count_ones() % 2;
        QBElem(low | (parity as u8) << 6)
    }
}

/// The induced isomorphism from the quotient of the even-weight space by
/// the radical onto the 7-bit even-weight model.
pub fn theta_iso(z: u8) -> Result<QBElem> {
    if !in_pic0_mod2(z) {
        return Err(Error::Input(
            "theta is defined on the even-weight subspace".into(),
        ));
    }
    QBElem::from_bits(kappa(z))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Perm(pub [usize; 7]);

impl Perm {
    pub fn identity() -> Perm {
        Perm([0, 1, 2, 3, 4, 5, 6])
    }

    pub fn seven_cycle() -> Perm {
        Perm([1, 2, 3, 4, 5, 6, 0])
    }

    pub fn transposition(a: usize, b: usize) -> Perm {
        let mut p = Perm::identity();
        p.0.swap(a, b);
        p
    }

    pub fn three_cycle(a: usize, b: usize, c: usize) -> Perm {
        let mut p = Perm::identity();
        p.0[a] = b;
        p.0[b] = c;
        p.0[c] = a;
        p
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// (self . other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut out = [0usize; 7];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.0[other.0[i]];
        }
        Perm(out)
    }
}

/// Action of a permutation on a mod-2 class: the point bits move, the line
/// bit stays.
pub fn permute_class(z: u8, p: &Perm) -> u8 {
    let mut out = z & 1;
    for b in 0..7 {
        out |= (z >> (b + 1) & 1) << (p.apply(b) + 1);
    }
    out
}

fn permute_qbits(bits: u8, p: &Perm) -> u8 {
    let mut out = 0u8;
    for b in 0..7 {
        out |= (bits >> b & 1) << p.apply(b);
    }
    out
}

/// Matrix of the permutation action on the quotient module, in the
/// coordinates of [`QBElem::coords`].
pub fn qb_action(p: &Perm) -> F2Mat {
    let mut m = F2Mat::zero(6, 6);
    for j in 0..6 {
        let e_j = (1u8 << j) | (1 << 6);
        let image = permute_qbits(e_j, p);
        let coords = QBElem::from_bits(image)
            .expect("permutation preserves parity")
            .coords();
        for i in 0..6 {
            if coords >> i & 1 == 1 {
                m.set(i, j, true);
            }
        }
    }
    m
}

pub fn s7_generators() -> Vec<Perm> {
    vec![Perm::seven_cycle(), Perm::transposition(0, 1)]
}

pub fn a7_generators() -> Vec<Perm> {
    vec![Perm::seven_cycle(), Perm::three_cycle(0, 1, 2)]
}

pub fn c7_generators() -> Vec<Perm> {
    vec![Perm::seven_cycle()]
}

/// True when every nonzero vector generates the whole space under the given
/// matrices, checked by spinning all 2^dim - 1 starting vectors.
pub fn is_simple_module(gens: &[F2Mat]) -> bool {
    let dim = gens
        .first()
        .map(|m| m.cols())
        .expect("at least one generator");
    for v in 1u64..1 << dim {
        let mut span = SpanBuilder::new();
        let mut queue = vec![v];
        span.insert(v);
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = g.mul_vec(x);
                if span.insert(y) {
                    queue.push(y);
                }
            }
        }
        if span.dim() < dim {
            return false;
        }
    }
    true
}

/// Dimension of the algebra of matrices commuting with every generator,
/// i.e. the nullity of the linear system X g = g X over all generators.
pub fn endomorphism_dim(gens: &[F2Mat]) -> usize {
    let dim = gens
        .first()
        .map(|m| m.cols())
        .expect("at least one generator");
    let idx = |k: usize, j: usize| k * dim + j;
    let mut rows: Vec<u64> = Vec::with_capacity(gens.len() * dim * dim);
    for g in gens {
        for i in 0..dim {
            for j in 0..dim {
                let mut word = 0u64;
                for k in 0..dim {
                    if g.get(i, k) {
                        word ^= 1 << idx(k, j);
                    }
                    if g.get(k, j) {
                        word ^= 1 << idx(i, k);
                    }
                }
                rows.push(word);
            }
        }
    }
    F2Mat::from_rows(rows, dim * dim).nullity()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleAssessment {
    pub group: String,
    pub dimension: usize,
    pub simple: bool,
    pub endomorphism_dim: usize,
}

pub fn assess_permutation_module(name: &str, gens: &[Perm]) -> ModuleAssessment {
    let matrices: Vec<F2Mat> = gens.iter().map(qb_action).collect();
    ModuleAssessment {
        group: name.to_string(),
        dimension: 6,
        simple: is_simple_module(&matrices),
        endomorphism_dim: endomorphism_dim(&matrices),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_pairing_values() {
        let k = canonical_class();
        assert_eq!(intersect(&k, &k), 2);
        assert_eq!(intersect(&line_class(), &line_class()), 1);
        for i in 0..7 {
            assert_eq!(intersect(&point_class(i), &point_class(i)), -1);
            assert_eq!(intersect(&k, &point_class(i)), -1);
            for j in 0..i {
                assert_eq!(intersect(&point_class(i), &point_class(j)), 0);
            }
        }
        assert_eq!(intersect(&k, &line_class()), -3);
    }

    #[test]
    fn degree_zero_sublattice() {
        for b in pic0_basis() {
            assert!(pic0_membership(&b));
        }
        assert!(!pic0_membership(&line_class()));
        assert!(!pic0_membership(&point_class(0)));
        assert!(!pic0_membership(&canonical_class()));
        // The seven basis reductions are independent mod 2, so the basis is
        // independent over the integers too.
        let rows: Vec<u64> = pic0_basis().iter().map(|b| mod2(b) as u64).collect();
        assert_eq!(F2Mat::from_rows(rows, 8).rank(), 7);
        // Mod-2 membership is orthogonality to the canonical reduction.
        for v in 0u16..256 {
            let v = v as u8;
            assert_eq!(in_pic0_mod2(v), !psi(v, CANONICAL_MOD2));
        }
    }

    #[test]
    fn pairing_gram_is_identity_mod2() {
        for i in 0..8u8 {
            for j in 0..8u8 {
                assert_eq!(psi(1 << i, 1 << j), i == j);
            }
        }
    }

    #[test]
    fn radical_is_zero_and_canonical() {
        assert_eq!(psi0_radical(), vec![0, CANONICAL_MOD2]);
    }

    #[test]
    fn kappa_kernel_and_image() {
        let mut kernel = Vec::new();
        let mut image = std::collections::BTreeSet::new();
        for z in 0u16..256 {
            let z = z as u8;
            if !in_pic0_mod2(z) {
                continue;
            }
            if kappa(z) == 0 {
                kernel.push(z);
            }
            image.insert(kappa(z));
            // Linearity against an arbitrary scramble of z.
            let w = z.rotate_left(3);
            assert_eq!(kappa(z ^ w), kappa(z) ^ kappa(w));
        }
        assert_eq!(kernel, vec![0, CANONICAL_MOD2]);
        // Image is the full even-weight 7-bit space.
        assert_eq!(image.len(), 64);
        assert!(image
            .iter()
            .all(|v| v.count_ones() % 2 == 0 && v & 0x80 == 0));
    }

    #[test]
    fn theta_is_an_isomorphism_on_the_quotient() {
        assert!(theta_iso(0b0000_0001).is_err()); // odd weight rejected
        let z = 0b0000_0011u8;
        let w = 0b0101_0101u8;
        assert!(in_pic0_mod2(z) && in_pic0_mod2(w));
        let tz = theta_iso(z).unwrap();
        let tw = theta_iso(w).unwrap();
        assert_eq!(theta_iso(z ^ w).unwrap(), tz.add(&tw));
        // Cosets modulo the radical map to the same element.
        assert_eq!(theta_iso(z ^ CANONICAL_MOD2).unwrap(), tz);
    }

    #[test]
    fn qb_coordinates_round_trip() {
        for c in 0..64u64 {
            let e = QBElem::from_coords(c);
            assert_eq!(e.coords(), c);
            assert_eq!(e.bits().count_ones() % 2, 0);
            assert_eq!(QBElem::from_bits(e.bits()).unwrap(), e);
        }
        assert!(QBElem::from_bits(0b0000_0001).is_err());
        assert!(QBElem::from_bits(0b1000_0011).is_err());
    }

    #[test]
    fn qb_action_is_a_group_homomorphism() {
        assert_eq!(qb_action(&Perm::identity()), F2Mat::identity(6));
        let pairs = [
            (Perm::seven_cycle(), Perm::transposition(0, 1)),
            (Perm::transposition(2, 5), Perm::three_cycle(1, 4, 6)),
            (Perm::seven_cycle(), Perm::seven_cycle()),
        ];
        for (p, q) in pairs {
            assert_eq!(qb_action(&p.compose(&q)), qb_action(&p).mul(&qb_action(&q)));
        }
        for p in s7_generators() {
            assert_eq!(qb_action(&p).rank(), 6);
        }
    }

    #[test]
    fn theta_is_equivariant() {
        let gens = s7_generators();
        for z in 0u16..256 {
            let z = z as u8;
            if !in_pic0_mod2(z) {
                continue;
            }
            for p in &gens {
                let lhs = theta_iso(permute_class(z, p)).unwrap().coords();
                let rhs = qb_action(p).mul_vec(theta_iso(z).unwrap().coords());
                assert_eq!(lhs, rhs, "z = {z:#010b}, p = {p:?}");
            }
        }
    }

    #[test]
    fn module_structure_for_the_three_groups() {
        let s7 = assess_permutation_module("S7", &s7_generators());
        assert!(s7.simple);
        assert_eq!(s7.endomorphism_dim, 1);

        let a7 = assess_permutation_module("A7", &a7_generators());
        assert!(a7.simple);
        assert_eq!(a7.endomorphism_dim, 1);

        // The 7-cycle alone splits the module into two 3-dimensional pieces
        // (the two cubic factors of x^7 - 1 mod 2), so it is not simple and
        // the commutant is two copies of the field with eight elements.
        let c7 = assess_permutation_module("C7", &c7_generators());
        assert!(!c7.simple);
        assert_eq!(c7.endomorphism_dim, 6);
    }

    #[test]
    fn permutation_action_respects_parity_structures() {
        let p = Perm::three_cycle(0, 3, 5);
        for z in 0u16..256 {
            let z = z as u8;
            assert_eq!(in_pic0_mod2(permute_class(z, &p)), in_pic0_mod2(z));
        }
        assert_eq!(permute_class(CANONICAL_MOD2, &p), CANONICAL_MOD2);
    }
}
