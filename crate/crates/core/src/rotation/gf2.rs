//! Dense GF(2) matrices with word-packed rows.

use std::fmt::Write as _;

use crate::bitvec::BitVec;

use super::RankVector;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn from_rows(rows: Vec<BitVec>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        BitMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_bools(rows: &[Vec<bool>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        BitMatrix::from_rows(rows.iter().map(|r| BitVec::from_bools(r)).collect(), cols)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value)
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.data[r]
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.iter_ones() {
                t.data[c].set(r, true);
            }
        }
        t
    }

    /// Plain-text PBM (`P1`) bitmap.
    pub fn to_pbm(&self) -> String {
        let mut out = format!("P1\n{} {}\n", self.cols, self.rows);
        for row in &self.data {
            let line: Vec<&str> = (0..self.cols)
                .map(|c| if row.get(c) { "1" } else { "0" })
                .collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// Reduced basis built by inserting vectors one at a time. Each stored vector
/// is reduced against the ones inserted before it, and its pivot is its lowest
/// set bit.
#[derive(Clone, Debug, Default)]
pub struct IncrementalBasis {
    basis: Vec<(usize, BitVec)>,
}

impl IncrementalBasis {
    pub fn new() -> Self {
        IncrementalBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Inserts `v`; returns `true` if it enlarged the span.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        for (pivot, b) in &self.basis {
            if v.get(*pivot) {
                v.xor_assign(b);
            }
        }
        match v.first_one() {
            Some(p) => {
                self.basis.push((p, v));
                true
            }
            None => false,
        }
    }
}

pub fn gf2_rank(matrix: &BitMatrix) -> usize {
    let mut basis = IncrementalBasis::new();
    for row in &matrix.data {
        basis.insert(row.clone());
    }
    basis.rank()
}

/// Column rank profile: bit `i` is set iff column `i` is independent of
/// columns `0..i`.
pub fn gf2_rank_profile(matrix: &BitMatrix) -> RankVector {
    let t = matrix.transpose();
    let mut basis = IncrementalBasis::new();
    let bits: Vec<bool> = t.data.into_iter().map(|col| basis.insert(col)).collect();
    RankVector::from_bools(&bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_identity() {
        let z = BitMatrix::zeros(5, 5);
        assert_eq!(gf2_rank(&z), 0);
        assert_eq!(gf2_rank_profile(&z).h(), 0);
        let mut id = BitMatrix::zeros(4, 4);
        for i in 0..4 {
            id.set(i, i, true);
        }
        assert_eq!(gf2_rank(&id), 4);
        assert_eq!(gf2_rank_profile(&id).pivot_indices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn dependent_columns() {
        let m = BitMatrix::from_bools(&[
            vec![true, true, false, true],
            vec![false, false, true, true],
        ]);
        assert_eq!(gf2_rank(&m), 2);
        assert_eq!(gf2_rank_profile(&m).pivot_indices(), &[0, 2]);
        assert!(m.to_pbm().starts_with("P1\n4 2\n1 1 0 1\n"));
    }
}
