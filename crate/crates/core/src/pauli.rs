//! Pauli operators in symplectic form with exact phase tracking.
//!
//! A [`PauliProduct`] over `n` qubits is `i^phase · σ_0 ⊗ … ⊗ σ_{n-1}` where the
//! letter on qubit `k` is selected by the bit pair `(z_k, x_k)`:
//! `(0,0) = I`, `(0,1) = X`, `(1,1) = Y`, `(1,0) = Z`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use thiserror::Error;

use crate::bitvec::{symplectic_parity, BitVec};
use crate::dense::Matrix;

/// Largest qubit count accepted by [`PauliProduct::to_dense`] by default.
pub const DENSE_PAULI_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PauliError {
    #[error("dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },
    #[error("sign ratio undefined: {0} and {1} differ in more than sign")]
    NotProportional(String, String),
    #[error("dense expansion of {n} qubits exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid pauli string {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    #[inline]
    pub fn from_bits(z: bool, x: bool) -> Self {
        match (z, x) {
            (false, false) => PauliLetter::I,
            (false, true) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (true, false) => PauliLetter::Z,
        }
    }

    #[inline]
    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (false, true),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (true, false),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }
}

/// Signless part of a Pauli operator, usable as a hash key.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AxisKey {
    z: BitVec,
    x: BitVec,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliProduct {
    z: BitVec,
    x: BitVec,
    phase: u8,
}

impl PauliProduct {
    pub fn identity(n_qubits: usize) -> Self {
        assert!(n_qubits >= 1, "a pauli product needs at least one qubit");
        PauliProduct {
            z: BitVec::zeros(n_qubits),
            x: BitVec::zeros(n_qubits),
            phase: 0,
        }
    }

    /// `letter` on `qubit`, identity elsewhere, sign +1.
    pub fn single(n_qubits: usize, qubit: usize, letter: PauliLetter) -> Self {
        let mut p = PauliProduct::identity(n_qubits);
        p.set_letter(qubit, letter);
        p
    }

    pub fn from_masks(z: BitVec, x: BitVec, phase: u8) -> Result<Self, PauliError> {
        if z.len() != x.len() {
            return Err(PauliError::DimensionMismatch {
                left: z.len(),
                right: x.len(),
            });
        }
        if z.is_empty() {
            return Err(PauliError::Parse("empty pauli product".into()));
        }
        Ok(PauliProduct {
            z,
            x,
            phase: phase & 3,
        })
    }

    pub fn from_letters(letters: &[PauliLetter], negative: bool) -> Self {
        let mut p = PauliProduct::identity(letters.len());
        for (q, &l) in letters.iter().enumerate() {
            p.set_letter(q, l);
        }
        if negative {
            p.phase = 2;
        }
        p
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.z.len()
    }

    #[inline]
    pub fn z_mask(&self) -> &BitVec {
        &self.z
    }

    #[inline]
    pub fn x_mask(&self) -> &BitVec {
        &self.x
    }

    /// Exponent of `i` in the global factor, in `0..4`.
    #[inline]
    pub fn phase(&self) -> u8 {
        self.phase
    }

    #[inline]
    pub fn is_hermitian(&self) -> bool {
        self.phase & 1 == 0
    }

    /// True when the sign is −1. Only meaningful for Hermitian operators.
    #[inline]
    pub fn is_negative(&self) -> bool {
        self.phase == 2
    }

    pub fn is_identity_masks(&self) -> bool {
        self.z.is_zero() && self.x.is_zero()
    }

    pub fn letter(&self, qubit: usize) -> PauliLetter {
        PauliLetter::from_bits(self.z.get(qubit), self.x.get(qubit))
    }

    pub fn set_letter(&mut self, qubit: usize, letter: PauliLetter) {
        let (z, x) = letter.bits();
        self.z.set(qubit, z);
        self.x.set(qubit, x);
    }

    pub fn negate(&mut self) {
        self.phase = (self.phase + 2) & 3;
    }

    pub fn negated(&self) -> Self {
        let mut p = self.clone();
        p.negate();
        p
    }

    /// Multiplies the global factor by `i^k`.
    pub fn mul_phase(&mut self, k: u8) {
        self.phase = (self.phase + k) & 3;
    }

    pub fn axis_key(&self) -> AxisKey {
        AxisKey {
            z: self.z.clone(),
            x: self.x.clone(),
        }
    }

    fn check_dims(&self, other: &PauliProduct) -> Result<(), PauliError> {
        if self.n_qubits() != other.n_qubits() {
            return Err(PauliError::DimensionMismatch {
                left: self.n_qubits(),
                right: other.n_qubits(),
            });
        }
        Ok(())
    }

    pub fn commutes(&self, other: &PauliProduct) -> Result<bool, PauliError> {
        self.check_dims(other)?;
        Ok(self.commutes_with(other))
    }

    /// Symplectic commutation test without the dimension check.
    #[inline]
    pub fn commutes_with(&self, other: &PauliProduct) -> bool {
        debug_assert_eq!(self.n_qubits(), other.n_qubits());
        !symplectic_parity(&self.z, &other.x, &self.x, &other.z)
    }

    #[inline]
    pub fn anticommutes_with(&self, other: &PauliProduct) -> bool {
        !self.commutes_with(other)
    }

    pub fn multiply(&self, other: &PauliProduct) -> Result<PauliProduct, PauliError> {
        self.check_dims(other)?;
        let mut r = self.clone();
        r.mul_assign_right(other);
        Ok(r)
    }

    /// `self ← self · other`, exact phase.
    pub fn mul_assign_right(&mut self, other: &PauliProduct) {
        debug_assert_eq!(self.n_qubits(), other.n_qubits());
        // σ(z,x) = i^{|z∧x|} X^x Z^z, and Z^a X^b = (-1)^{a·b} X^b Z^a.
        let y_left = self.z.and_count(&self.x);
        let y_right = other.z.and_count(&other.x);
        let swap = self.z.and_count(&other.x);
        self.z.xor_assign(&other.z);
        self.x.xor_assign(&other.x);
        let y_out = self.z.and_count(&self.x);
        let total = self.phase as usize
            + other.phase as usize
            + y_left
            + y_right
            + 2 * swap
            + 4 * self.z.len()
            - y_out;
        self.phase = (total & 3) as u8;
    }

    pub fn equal_up_to_sign(&self, other: &PauliProduct) -> bool {
        self.z == other.z && self.x == other.x
    }

    /// `+1` if `self == other`, `-1` if `self == -other`.
    pub fn sign_ratio(&self, other: &PauliProduct) -> Result<i8, PauliError> {
        if !self.equal_up_to_sign(other) {
            return Err(PauliError::NotProportional(
                self.to_string(),
                other.to_string(),
            ));
        }
        match (self.phase + 4 - other.phase) & 3 {
            0 => Ok(1),
            2 => Ok(-1),
            _ => Err(PauliError::NotProportional(
                self.to_string(),
                other.to_string(),
            )),
        }
    }

    /// Dense `2^n × 2^n` matrix; qubit 0 is the most significant tensor factor.
    pub fn to_dense(&self) -> Result<Matrix, PauliError> {
        self.to_dense_capped(DENSE_PAULI_CAP)
    }

    pub fn to_dense_capped(&self, cap: usize) -> Result<Matrix, PauliError> {
        let n = self.n_qubits();
        if n > cap {
            return Err(PauliError::TooLarge { n, cap });
        }
        let dim = 1usize << n;
        let mut m = Matrix::zeros(dim);
        for col in 0..dim {
            let (row, amp) = self.apply_to_basis(col);
            m[(row, col)] = amp;
        }
        Ok(m)
    }

    /// Image of computational basis state `index` as `(index', amplitude)`.
    pub fn apply_to_basis(&self, index: usize) -> (usize, Complex64) {
        let n = self.n_qubits();
        let mut flip = 0usize;
        let mut z_hits = 0usize;
        for q in 0..n {
            let bit = 1usize << (n - 1 - q);
            if self.x.get(q) {
                flip |= bit;
            }
            if self.z.get(q) && index & bit != 0 {
                z_hits += 1;
            }
        }
        let k = (self.phase as usize + self.z.and_count(&self.x) + 2 * z_hits) & 3;
        (index ^ flip, i_power(k as u8))
    }
}

pub(crate) fn i_power(k: u8) -> Complex64 {
    match k & 3 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

impl fmt::Display for PauliProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        f.write_str(prefix)?;
        for q in 0..self.n_qubits() {
            write!(f, "{}", self.letter(q).to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PauliProduct {
    type Err = PauliError;

    /// Parses `±{I,X,Y,Z}^n`, e.g. `-ZIX`. A missing sign means `+`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        if body.is_empty() {
            return Err(PauliError::Parse(s.to_string()));
        }
        let letters = body
            .chars()
            .map(|c| match c {
                'I' => Ok(PauliLetter::I),
                'X' => Ok(PauliLetter::X),
                'Y' => Ok(PauliLetter::Y),
                'Z' => Ok(PauliLetter::Z),
                _ => Err(PauliError::Parse(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PauliProduct::from_letters(&letters, negative))
    }
}
