//! Circulant `±1` blocks, the Goethals–Seidel array, and exact integer
//! Hadamard certificates. Entries are `i8`, all accumulation is `i64`, and
//! no verdict involves floating point.

use crate::modring::ResidueSet;
use crate::par;
use crate::{Error, Result};

/// A `±1` row vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignVector {
    entries: Vec<i8>,
}

impl SignVector {
    /// Builds the vector with `-1` exactly on the members of `set`.
    pub fn from_set(set: &ResidueSet) -> Self {
        let n = set.modulus().get();
        let entries = (0..n).map(|i| if set.contains(i) { -1 } else { 1 }).collect();
        SignVector { entries }
    }

    pub fn from_entries(entries: Vec<i8>) -> Self {
        assert!(entries.iter().all(|&e| e == 1 || e == -1), "entries must be ±1");
        SignVector { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }
}

/// A square `±1` matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl std::fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SignMatrix(order {})", self.order)?;
        for i in 0..self.order {
            for j in 0..self.order {
                write!(f, "{}", if self.get(i, j) > 0 { '+' } else { '-' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl SignMatrix {
    pub fn from_entries(order: usize, entries: Vec<i8>) -> Self {
        assert_eq!(entries.len(), order * order);
        assert!(entries.iter().all(|&e| e == 1 || e == -1), "entries must be ±1");
        SignMatrix { order, entries }
    }

    /// Circulant matrix: row `i` is the first row shifted right by `i`.
    pub fn circulant(first_row: &SignVector) -> Self {
        let n = first_row.len();
        let a = first_row.entries();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(a[(n + j - i) % n]);
            }
        }
        SignMatrix { order: n, entries }
    }

    /// Circulant block of a residue set: `-1` exactly on the set, shifted.
    pub fn circulant_of_set(set: &ResidueSet) -> Self {
        SignMatrix::circulant(&SignVector::from_set(set))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn transpose(&self) -> SignMatrix {
        let n = self.order;
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j);
            }
        }
        SignMatrix { order: n, entries }
    }

    pub fn flip_entry(&mut self, i: usize, j: usize) {
        self.entries[i * self.order + j] *= -1;
    }

    fn row_dot(&self, i: usize, j: usize) -> i64 {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(&a, &b)| a as i64 * b as i64)
            .sum()
    }

    /// Exact check of `M * M^T = m * I`.
    pub fn is_hadamard(&self) -> bool {
        let m = self.order;
        par::all_indices(m, |i| {
            (i..m).all(|j| self.row_dot(i, j) == if i == j { m as i64 } else { 0 })
        })
    }

    /// Sequential variant of [`is_hadamard`](Self::is_hadamard), kept public
    /// so small orders can skip thread-pool overhead and for benchmarks.
    pub fn is_hadamard_seq(&self) -> bool {
        let m = self.order;
        (0..m).all(|i| (i..m).all(|j| self.row_dot(i, j) == if i == j { m as i64 } else { 0 }))
    }

    /// True iff the matrix is Hadamard and `M + M^T = 2I`: all-ones diagonal
    /// with an antisymmetric off-diagonal part.
    pub fn is_skew_hadamard(&self) -> bool {
        self.skew_part_ok() && self.is_hadamard()
    }

    pub fn is_skew_hadamard_seq(&self) -> bool {
        self.skew_part_ok() && self.is_hadamard_seq()
    }

    fn skew_part_ok(&self) -> bool {
        let m = self.order;
        (0..m).all(|i| {
            self.get(i, i) == 1 && (i + 1..m).all(|j| self.get(i, j) == -self.get(j, i))
        })
    }
}

/// Integer matrix used for the back-diagonal permutation and for the
/// cross-checks that validate the assembled array against explicit products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = IntMatrix::zero(order);
        for i in 0..order {
            m.entries[i * order + i] = 1;
        }
        m
    }

    pub fn scaled_identity(order: usize, scale: i64) -> Self {
        let mut m = IntMatrix::zero(order);
        for i in 0..order {
            m.entries[i * order + i] = scale;
        }
        m
    }

    pub fn from_sign(m: &SignMatrix) -> Self {
        IntMatrix {
            order: m.order(),
            entries: m.entries.iter().map(|&e| e as i64).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.order;
        let mut t = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                t.entries[j * n + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.order, other.order);
        let n = self.order;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn scale(&self, s: i64) -> IntMatrix {
        IntMatrix {
            order: self.order,
            entries: self.entries.iter().map(|&e| e * s).collect(),
        }
    }
}

/// The permutation matrix with ones on the back-diagonal:
/// `R[i][j] = 1` iff `i + j = n - 1`. An involution.
pub fn back_diagonal(n: usize) -> IntMatrix {
    let mut r = IntMatrix::zero(n);
    for i in 0..n {
        r.entries[i * n + (n - 1 - i)] = 1;
    }
    r
}

/// One slot of the 4x4 array template: which block goes where and whether it
/// is negated, transposed, or multiplied by the back-diagonal `R`.
#[derive(Debug, Clone, Copy)]
pub struct TemplateSlot {
    pub block: usize,
    pub negate: bool,
    pub transpose: bool,
    pub reflect: bool,
}

const fn slot(block: usize, negate: bool, transpose: bool, reflect: bool) -> TemplateSlot {
    TemplateSlot {
        block,
        negate,
        transpose,
        reflect,
    }
}

/// The Goethals–Seidel array, transcribed once:
///
/// ```text
///   A0    A1R    A2R    A3R
///  -A1R   A0    -A3'R   A2'R
///  -A2R   A3'R   A0    -A1'R
///  -A3R  -A2'R   A1'R   A0
/// ```
///
/// where `'` is transpose and `R` the back-diagonal permutation.
pub const GS_TEMPLATE: [[TemplateSlot; 4]; 4] = [
    [
        slot(0, false, false, false),
        slot(1, false, false, true),
        slot(2, false, false, true),
        slot(3, false, false, true),
    ],
    [
        slot(1, true, false, true),
        slot(0, false, false, false),
        slot(3, true, true, true),
        slot(2, false, true, true),
    ],
    [
        slot(2, true, false, true),
        slot(3, false, true, true),
        slot(0, false, false, false),
        slot(1, true, true, true),
    ],
    [
        slot(3, true, false, true),
        slot(2, true, true, true),
        slot(1, false, true, true),
        slot(0, false, false, false),
    ],
];

/// Assembles the `4n x 4n` Goethals–Seidel array from four `n x n` blocks.
///
/// Blocks must share one order; nothing else is assumed here — whether the
/// result is (skew-)Hadamard depends on the blocks and is checked
/// separately.
pub fn goethals_seidel(blocks: &[SignMatrix; 4]) -> Result<SignMatrix> {
    let n = blocks[0].order();
    for b in blocks.iter() {
        if b.order() != n {
            return Err(Error::BlockSizeMismatch {
                expected: n,
                got: b.order(),
            });
        }
    }
    let m = 4 * n;
    let mut entries = vec![0i8; m * m];
    for (br, row_slots) in GS_TEMPLATE.iter().enumerate() {
        for (bc, s) in row_slots.iter().enumerate() {
            let block = &blocks[s.block];
            let sign: i8 = if s.negate { -1 } else { 1 };
            for i in 0..n {
                for j in 0..n {
                    // (source col) = n-1-j when reflected by R.
                    let jj = if s.reflect { n - 1 - j } else { j };
                    let v = if s.transpose {
                        block.get(jj, i)
                    } else {
                        block.get(i, jj)
                    };
                    entries[(br * n + i) * m + (bc * n + j)] = sign * v;
                }
            }
        }
    }
    Ok(SignMatrix { order: m, entries })
}

/// Exact check of the block identity `sum_k A_k * A_k^T = 4n * I`.
pub fn verify_block_identity(blocks: &[SignMatrix; 4]) -> bool {
    let n = blocks[0].order();
    if blocks.iter().any(|b| b.order() != n) {
        return false;
    }
    par::all_indices(n, |i| {
        (i..n).all(|j| {
            let total: i64 = blocks.iter().map(|b| b.row_dot(i, j)).sum();
            total == if i == j { 4 * n as i64 } else { 0 }
        })
    })
}

/// Sequential variant of [`verify_block_identity`], for benches and tiny
/// orders.
pub fn verify_block_identity_seq(blocks: &[SignMatrix; 4]) -> bool {
    let n = blocks[0].order();
    if blocks.iter().any(|b| b.order() != n) {
        return false;
    }
    (0..n).all(|i| {
        (i..n).all(|j| {
            let total: i64 = blocks.iter().map(|b| b.row_dot(i, j)).sum();
            total == if i == j { 4 * n as i64 } else { 0 }
        })
    })
}
