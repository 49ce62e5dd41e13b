//! Dense linear algebra over the two-element field. Rows are u64 bitmasks
//! (bit j = column j), so matrices are limited to 64 columns, plenty for the
//! 6-dimensional module work and its 36-column commutant systems.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Mat {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl F2Mat {
    pub fn zero(rows: usize, cols: usize) -> F2Mat {
        assert!(cols <= 64, "at most 64 columns");
        F2Mat {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    pub fn identity(n: usize) -> F2Mat {
        let mut m = F2Mat::zero(n, n);
        for i in 0..n {
            m.data[i] = 1 << i;
        }
        m
    }

    pub fn from_rows(rows: Vec<u64>, cols: usize) -> F2Mat {
        assert!(cols <= 64);
        let mask = mask(cols);
        assert!(rows.iter().all(|&r| r & !mask == 0), "row exceeds columns");
        F2Mat {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> u64 {
        self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        assert!(j < self.cols);
        if bit {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    pub fn mul(&self, other: &F2Mat) -> F2Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = F2Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = 0u64;
            let mut r = self.data[i];
            while r != 0 {
                let k = r.trailing_zeros() as usize;
                acc ^= other.data[k];
                r &= r - 1;
            }
            out.data[i] = acc;
        }
        out
    }

    /// Matrix times column vector (bit k of `v` = coordinate k).
    pub fn mul_vec(&self, v: u64) -> u64 {
        let mut out = 0u64;
        for i in 0..self.rows {
            let parity = (self.data[i] & v).count_ones() & 1;
            out |= (parity as u64) << i;
        }
        out
    }

    /// Row-reduced echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (F2Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            let Some(pivot_row) = (row..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.data.swap(row, pivot_row);
            for r in 0..m.rows {
                if r != row && m.get(r, col) {
                    m.data[r] ^= m.data[row];
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {v : Mv = 0}, one bitmask per basis vector.
    pub fn kernel_basis(&self) -> Vec<u64> {
        let (m, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in 0..m.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = 1u64 << free;
            for (r, &pc) in pivots.iter().enumerate() {
                if m.get(r, free) {
                    v |= 1 << pc;
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Appends the rows of `other` below this matrix.
    pub fn stack(&self, other: &F2Mat) -> F2Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        F2Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

fn mask(cols: usize) -> u64 {
    if cols == 64 {
        u64::MAX
    } else {
        (1u64 << cols) - 1
    }
}

/// Reduced spanning set built incrementally; tracks the dimension of the
/// span of inserted vectors.
#[derive(Default)]
pub struct SpanBuilder {
    // echelon[i] holds a vector whose leading bit no other entry shares
    echelon: Vec<u64>,
}

impl SpanBuilder {
    pub fn new() -> SpanBuilder {
        SpanBuilder::default()
    }

    /// Inserts `v`; returns true when the span grew.
    pub fn insert(&mut self, mut v: u64) -> bool {
        for &b in &self.echelon {
            let lead = 63 - b.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        if v == 0 {
            return false;
        }
        self.echelon.push(v);
        self.echelon.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    pub fn contains(&self, mut v: u64) -> bool {
        for &b in &self.echelon {
            let lead = 63 - b.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        v == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_mul() {
        let id = F2Mat::identity(5);
        let m = F2Mat::from_rows(vec![0b10110, 0b00011, 0b11111], 5);
        assert_eq!(m.mul(&id), m);
        let v = 0b01010u64;
        assert_eq!(id.mul_vec(v) ^ v, 0);
    }

    #[test]
    fn rank_and_kernel() {
        // Rows: (1,1,0), (0,1,1), (1,0,1): rank 2 over F2, kernel (1,1,1).
        let m = F2Mat::from_rows(vec![0b011, 0b110, 0b101], 3);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k, vec![0b111]);
        for v in k {
            assert_eq!(m.mul_vec(v), 0);
        }
        assert_eq!(m.nullity(), 1);
    }

    #[test]
    fn kernel_vectors_always_annihilate() {
        // A few fixed matrices with varied shapes.
        let cases = [
            (vec![0b1101u64, 0b0110, 0b1011, 0b0001], 4),
            (vec![0b11_1111u64], 6),
            (vec![0u64, 0, 0], 3),
        ];
        for (rows, cols) in cases {
            let m = F2Mat::from_rows(rows, cols);
            let kernel = m.kernel_basis();
            assert_eq!(kernel.len(), m.nullity());
            let mut span = SpanBuilder::new();
            for v in kernel {
                assert_eq!(m.mul_vec(v), 0);
                assert!(span.insert(v), "kernel basis must be independent");
            }
        }
    }

    #[test]
    fn mul_associates_with_vector_action() {
        let a = F2Mat::from_rows(vec![0b110, 0b011, 0b101], 3);
        let b = F2Mat::from_rows(vec![0b010, 0b111, 0b100], 3);
        for v in 0..8u64 {
            assert_eq!(a.mul(&b).mul_vec(v), a.mul_vec(b.mul_vec(v)));
        }
    }

    #[test]
    fn stack_ranks() {
        let a = F2Mat::from_rows(vec![0b01, 0b10], 2);
        let b = F2Mat::from_rows(vec![0b11], 2);
        assert_eq!(a.stack(&b).rows(), 3);
        assert_eq!(a.stack(&b).rank(), 2);
    }

    #[test]
    fn span_builder_counts_dimensions() {
        let mut s = SpanBuilder::new();
        assert!(s.insert(0b101));
        assert!(s.insert(0b011));
        assert!(!s.insert(0b110)); // dependent: xor of the first two
        assert_eq!(s.dim(), 2);
        assert!(s.contains(0b110));
        assert!(!s.contains(0b100));
        assert!(!s.insert(0));
    }
}
