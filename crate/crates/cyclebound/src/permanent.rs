//! Exact permanents of 0/1 matrices via Ryser's inclusion–exclusion with
//! Gray-code updates, budgeted to n ≤ 24.
//!
//! perm(A) = (−1)^n Σ_{∅ ≠ S ⊆ [n]} (−1)^{|S|} ∏_i Σ_{j ∈ S} a_{ij}.
//!
//! Subsets are visited in Gray-code order so each step updates the n row
//! sums by a single column. Products fit in u128 (row sums ≤ 24, so a
//! product is at most 24²⁴ < 2¹¹²); they are staged in an i128 accumulator
//! and flushed to a big integer before any overflow is possible. The subset
//! space is split into deterministic chunks for the parallel mode; chunking
//! depends only on n, never on the thread count.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::Graph;
use crate::{map_tasks, Mode};

/// A square 0/1 matrix stored as row bitmasks (bit j of `rows[i]` is
/// a_{ij}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroOneMatrix {
    n: usize,
    rows: Vec<u32>,
}

/// Validation and budget failures for permanent computations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("expected {expected} rows, got {got}")]
    BadShape { expected: usize, got: usize },
    #[error("row {row} has bits set beyond column {n}")]
    ExtraBits { row: usize, n: usize },
    #[error("permanent computation is budgeted to n <= 24 (got n = {n})")]
    TooLarge { n: usize },
    #[error("adjacency permanents require a simple graph")]
    RequiresSimpleGraph,
}

impl ZeroOneMatrix {
    /// Build from row bitmasks; every row must fit in the low n bits.
    pub fn new(n: usize, rows: Vec<u32>) -> Result<ZeroOneMatrix, MatrixError> {
        if rows.len() != n {
            return Err(MatrixError::BadShape {
                expected: n,
                got: rows.len(),
            });
        }
        if n > 32 {
            return Err(MatrixError::TooLarge { n });
        }
        let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                return Err(MatrixError::ExtraBits { row: i, n });
            }
        }
        Ok(ZeroOneMatrix { n, rows })
    }

    /// The n×n all-ones matrix.
    pub fn all_ones(n: usize) -> ZeroOneMatrix {
        let mask = if n == 0 { 0 } else { (1u32 << n) - 1 };
        ZeroOneMatrix {
            n,
            rows: vec![mask; n],
        }
    }

    /// The n×n identity matrix.
    pub fn identity(n: usize) -> ZeroOneMatrix {
        ZeroOneMatrix {
            n,
            rows: (0..n).map(|i| 1u32 << i).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Row sums (popcounts), the input to the permanent upper bound.
    pub fn row_sums(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.count_ones()).collect()
    }
}

/// A + I for a simple graph: the matrix whose permanent dominates the
/// cycle count.
pub fn adjacency_plus_identity(g: &Graph) -> Result<ZeroOneMatrix, MatrixError> {
    if !g.is_simple() {
        return Err(MatrixError::RequiresSimpleGraph);
    }
    let n = g.vertex_count();
    if n > 32 {
        return Err(MatrixError::TooLarge { n });
    }
    let mut rows = vec![0u32; n];
    for (i, row) in rows.iter_mut().enumerate() {
        *row |= 1 << i;
        for &(w, _) in g.neighbors(i) {
            *row |= 1 << w;
        }
    }
    ZeroOneMatrix::new(n, rows)
}

/// Exact permanent by Ryser's formula. Budgeted to n ≤ 24.
pub fn permanent(m: &ZeroOneMatrix) -> Result<BigUint, MatrixError> {
    permanent_with_mode(m, Mode::default())
}

/// [`permanent`] with an explicit execution mode.
pub fn permanent_with_mode(m: &ZeroOneMatrix, mode: Mode) -> Result<BigUint, MatrixError> {
    let n = m.n;
    if n > 24 {
        return Err(MatrixError::TooLarge { n });
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let total: u32 = 1u32 << n;

    // Deterministic chunking by n alone (not thread count).
    let chunk_bits = (n.saturating_sub(14)).min(8) as u32;
    let chunks = 1u32 << chunk_bits;
    let per_chunk = total >> chunk_bits;
    let ranges: Vec<(u32, u32)> = (0..chunks)
        .map(|c| {
            let start = c * per_chunk;
            let end = start + per_chunk;
            (start.max(1), end)
        })
        .filter(|(s, e)| s < e)
        .collect();

    let partials = map_tasks(mode, ranges, |(start, end)| {
        ryser_range(&m.rows, n, start, end)
    });
    let mut acc = BigInt::zero();
    for p in partials {
        acc += p;
    }
    if n % 2 == 1 {
        acc = -acc;
    }
    let (sign, mag) = acc.into_parts();
    assert!(
        sign != Sign::Minus,
        "permanent of a 0/1 matrix cannot be negative"
    );
    Ok(mag)
}

/// Σ over t ∈ [start, end) of (−1)^{|gray(t)|} ∏_i sums_i(gray(t)).
fn ryser_range(rows: &[u32], n: usize, start: u32, end: u32) -> BigInt {
    let gray = |t: u32| t ^ (t >> 1);
    // Row sums for the initial subset.
    let s0 = gray(start);
    let mut sums = vec![0u32; n];
    for (i, &row) in rows.iter().enumerate() {
        sums[i] = (row & s0).count_ones();
    }

    let mut acc = BigInt::zero();
    let mut stage: i128 = 0;
    let mut staged: u32 = 0;
    for t in start..end {
        if t != start {
            // Gray code flips exactly the bit at the lowest set position
            // of t.
            let bit = t.trailing_zeros();
            if gray(t) & (1u32 << bit) != 0 {
                for (i, &row) in rows.iter().enumerate() {
                    sums[i] += (row >> bit) & 1;
                }
            } else {
                for (i, &row) in rows.iter().enumerate() {
                    sums[i] -= (row >> bit) & 1;
                }
            }
        }
        let mut product: u128 = 1;
        for &s in &sums {
            if s == 0 {
                product = 0;
                break;
            }
            product *= u128::from(s);
        }
        if product != 0 {
            if gray(t).count_ones() % 2 == 0 {
                stage += product as i128;
            } else {
                stage -= product as i128;
            }
        }
        staged += 1;
        // 2¹⁴ staged products of magnitude < 2¹¹² cannot overflow i128.
        if staged == 1 << 14 {
            acc += BigInt::from(stage);
            stage = 0;
            staged = 0;
        }
    }
    acc += BigInt::from(stage);
    acc
}

/// Expansion-over-permutations oracle for cross-validating Ryser, budgeted
/// to n ≤ 8.
pub fn permanent_naive(m: &ZeroOneMatrix) -> Result<BigUint, MatrixError> {
    let n = m.n;
    if n > 8 {
        return Err(MatrixError::TooLarge { n });
    }
    fn recurse(rows: &[u32], row: usize, used: u32) -> u64 {
        if row == rows.len() {
            return 1;
        }
        let mut acc = 0;
        let mut avail = rows[row] & !used;
        while avail != 0 {
            let bit = avail & avail.wrapping_neg();
            acc += recurse(rows, row + 1, used | bit);
            avail ^= bit;
        }
        acc
    }
    Ok(BigUint::from(recurse(&m.rows, 0, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::factorial;

    #[test]
    fn identity_and_all_ones() {
        for n in 1..=10usize {
            let id = ZeroOneMatrix::identity(n);
            assert_eq!(permanent(&id).unwrap(), BigUint::one());
        }
        for n in 1..=8u64 {
            let ones = ZeroOneMatrix::all_ones(n as usize);
            assert_eq!(permanent(&ones).unwrap(), factorial(n));
        }
        assert_eq!(permanent(&ZeroOneMatrix::all_ones(0)).unwrap(), BigUint::one());
    }

    #[test]
    fn ryser_matches_naive_oracle() {
        let cases: Vec<ZeroOneMatrix> = vec![
            ZeroOneMatrix::new(5, vec![0b10111, 0b11011, 0b01110, 0b11101, 0b01011]).unwrap(),
            ZeroOneMatrix::new(6, vec![0b110110, 0b101011, 0b011101, 0b111110, 0b010111, 0b101101])
                .unwrap(),
            ZeroOneMatrix::new(7, vec![0x5B, 0x67, 0x3E, 0x7D, 0x2F, 0x73, 0x5D]).unwrap(),
            ZeroOneMatrix::new(4, vec![0b0001, 0b0010, 0b0100, 0b1000]).unwrap(),
        ];
        for m in &cases {
            assert_eq!(
                permanent(m).unwrap(),
                permanent_naive(m).unwrap(),
                "Ryser disagrees with the expansion oracle on {:?}",
                m.rows()
            );
        }
    }

    #[test]
    fn adjacency_plus_identity_of_k4_is_all_ones() {
        let m = adjacency_plus_identity(&Graph::complete(4)).unwrap();
        assert_eq!(m, ZeroOneMatrix::all_ones(4));
        assert_eq!(permanent(&m).unwrap(), BigUint::from(24u32));
        assert_eq!(m.row_sums(), vec![4, 4, 4, 4]);
        let multi = Graph::new(2, [(0, 1, 2)]).unwrap();
        assert_eq!(
            adjacency_plus_identity(&multi),
            Err(MatrixError::RequiresSimpleGraph)
        );
    }

    #[test]
    fn modes_agree_on_larger_matrices() {
        // Deterministic pseudo-random 14×14 pattern.
        let mut rows = Vec::new();
        let mut state: u64 = 0x243F6A8885A308D3;
        for _ in 0..14 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            rows.push((state >> 30) as u32 & 0x3FFF | 1);
        }
        let m = ZeroOneMatrix::new(14, rows).unwrap();
        let seq = permanent_with_mode(&m, Mode::Sequential).unwrap();
        let par = permanent_with_mode(&m, Mode::Parallel).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn budget_and_shape_errors() {
        let too_big = ZeroOneMatrix::new(25, vec![1; 25]).unwrap();
        assert_eq!(permanent(&too_big), Err(MatrixError::TooLarge { n: 25 }));
        assert_eq!(
            ZeroOneMatrix::new(3, vec![1, 2]).unwrap_err(),
            MatrixError::BadShape { expected: 3, got: 2 }
        );
        assert_eq!(
            ZeroOneMatrix::new(3, vec![1, 2, 0b1000]).unwrap_err(),
            MatrixError::ExtraBits { row: 2, n: 3 }
        );
        assert_eq!(
            permanent_naive(&ZeroOneMatrix::all_ones(9)),
            Err(MatrixError::TooLarge { n: 9 })
        );
    }
}
