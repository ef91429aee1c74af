//! Clifford tableau with signed rows, updated by prepending gates.
//!
//! The tableau encodes a Clifford `V` through the images `V X_i V†`
//! (destabilizers) and `V Z_i V†` (stabilizers). Prepending a gate `g`
//! replaces `V` by `V g†`; each such update touches a constant number of rows,
//! so the cost is `O(n)` word operations. When the gates of a circuit prefix
//! `U` are prepended one by one, the tableau tracks `V = U†`, and stabilizer
//! row `i` is `U† Z_i U`: the axis of a `Z` rotation on qubit `i` after `U`
//! once all Clifford gates are commuted to the end of the circuit.

use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::dense::Matrix;
use crate::pauli::PauliProduct;

/// Largest qubit count accepted by [`CliffordTableau::to_unitary`].
pub const DENSE_TABLEAU_CAP: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("qubit {qubit} out of range for a {n}-qubit tableau")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("two-qubit gate acts twice on qubit {0}")]
    RepeatedQubit(usize),
    #[error("quarter turn count {0} is not in 0..4")]
    BadQuarterTurns(u8),
    #[error("angle {0} is not a provable multiple of pi/2")]
    NotCliffordAngle(String),
    #[error("dense expansion of {n} qubits exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// The Clifford gate set understood by the tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CliffordGate {
    H(usize),
    S(usize),
    Sdg(usize),
    X(usize),
    Z(usize),
    Cnot { control: usize, target: usize },
    Cz(usize, usize),
}

impl CliffordGate {
    pub fn dagger(self) -> CliffordGate {
        match self {
            CliffordGate::S(q) => CliffordGate::Sdg(q),
            CliffordGate::Sdg(q) => CliffordGate::S(q),
            g => g,
        }
    }

    fn qubits(&self) -> (usize, Option<usize>) {
        match *self {
            CliffordGate::H(q)
            | CliffordGate::S(q)
            | CliffordGate::Sdg(q)
            | CliffordGate::X(q)
            | CliffordGate::Z(q) => (q, None),
            CliffordGate::Cnot { control, target } => (control, Some(target)),
            CliffordGate::Cz(a, b) => (a, Some(b)),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct CliffordTableau {
    n: usize,
    destab: Vec<PauliProduct>,
    stab: Vec<PauliProduct>,
}

impl CliffordTableau {
    pub fn identity(n_qubits: usize) -> Self {
        use crate::pauli::PauliLetter;
        CliffordTableau {
            n: n_qubits,
            destab: (0..n_qubits)
                .map(|q| PauliProduct::single(n_qubits, q, PauliLetter::X))
                .collect(),
            stab: (0..n_qubits)
                .map(|q| PauliProduct::single(n_qubits, q, PauliLetter::Z))
                .collect(),
        }
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n
    }

    fn check_qubit(&self, q: usize) -> Result<(), TableauError> {
        if q >= self.n {
            Err(TableauError::QubitOutOfRange {
                qubit: q,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Replaces the encoded `V` with `V g†`.
    pub fn prepend_gate(&mut self, gate: CliffordGate) -> Result<(), TableauError> {
        let (a, b) = gate.qubits();
        self.check_qubit(a)?;
        if let Some(b) = b {
            self.check_qubit(b)?;
            if a == b {
                return Err(TableauError::RepeatedQubit(a));
            }
        }
        match gate {
            // H† X H = Z, H† Z H = X
            CliffordGate::H(q) => std::mem::swap(&mut self.destab[q], &mut self.stab[q]),
            // S X S† = Y = i X Z
            CliffordGate::Sdg(q) => {
                let s = self.stab[q].clone();
                self.destab[q].mul_assign_right(&s);
                self.destab[q].mul_phase(1);
            }
            // S† X S = -Y = -i X Z
            CliffordGate::S(q) => {
                let s = self.stab[q].clone();
                self.destab[q].mul_assign_right(&s);
                self.destab[q].mul_phase(3);
            }
            CliffordGate::X(q) => self.stab[q].negate(),
            CliffordGate::Z(q) => self.destab[q].negate(),
            // X_c → X_c X_t, Z_t → Z_c Z_t
            CliffordGate::Cnot { control, target } => {
                let dt = self.destab[target].clone();
                self.destab[control].mul_assign_right(&dt);
                let mut st = self.stab[control].clone();
                st.mul_assign_right(&self.stab[target]);
                self.stab[target] = st;
            }
            // X_a → X_a Z_b, X_b → Z_a X_b
            CliffordGate::Cz(qa, qb) => {
                let sb = self.stab[qb].clone();
                let sa = self.stab[qa].clone();
                self.destab[qa].mul_assign_right(&sb);
                self.destab[qb].mul_assign_right(&sa);
            }
        }
        debug_assert!(self.n > 8 || self.check_invariants());
        Ok(())
    }

    /// Prepends the dagger of `Rz(k·π/2)`, i.e. the dagger of `I, S, Z, S†`
    /// for `k = 0, 1, 2, 3`.
    pub fn prepend_z_rotation(
        &mut self,
        quarter_turns: u8,
        qubit: usize,
    ) -> Result<(), TableauError> {
        self.check_qubit(qubit)?;
        match quarter_turns {
            0 => Ok(()),
            1 => self.prepend_gate(CliffordGate::S(qubit)),
            2 => self.prepend_gate(CliffordGate::Z(qubit)),
            3 => self.prepend_gate(CliffordGate::Sdg(qubit)),
            k => Err(TableauError::BadQuarterTurns(k)),
        }
    }

    /// Same as [`prepend_z_rotation`](Self::prepend_z_rotation) for an exact angle.
    pub fn prepend_rz(
        &mut self,
        angle: &crate::angle::Angle,
        qubit: usize,
    ) -> Result<(), TableauError> {
        let k = angle
            .quarter_turns()
            .map_err(|_| TableauError::NotCliffordAngle(angle.to_string()))?;
        self.prepend_z_rotation(k, qubit)
    }

    /// `V Z_i V†` with its sign.
    pub fn stabilizer_generator(&self, i: usize) -> Result<&PauliProduct, TableauError> {
        self.check_qubit(i)?;
        Ok(&self.stab[i])
    }

    /// `V X_i V†` with its sign.
    pub fn destabilizer_generator(&self, i: usize) -> Result<&PauliProduct, TableauError> {
        self.check_qubit(i)?;
        Ok(&self.destab[i])
    }

    /// Conjugates an arbitrary Pauli operator: returns `V P V†`.
    pub fn conjugate(&self, p: &PauliProduct) -> PauliProduct {
        assert_eq!(p.n_qubits(), self.n);
        // P = i^{phase + |z∧x|} X^x Z^z
        let mut out = PauliProduct::identity(self.n);
        out.mul_phase(p.phase() + (p.z_mask().and_count(p.x_mask()) & 3) as u8);
        for q in p.x_mask().iter_ones() {
            out.mul_assign_right(&self.destab[q]);
        }
        for q in p.z_mask().iter_ones() {
            out.mul_assign_right(&self.stab[q]);
        }
        out
    }

    /// Checks Hermitian rows and the symplectic pairing conditions.
    pub fn check_invariants(&self) -> bool {
        let rows = || self.destab.iter().chain(self.stab.iter());
        if rows().any(|r| !r.is_hermitian()) {
            return false;
        }
        for i in 0..self.n {
            for j in 0..self.n {
                let expect_anti = i == j;
                if self.destab[i].anticommutes_with(&self.stab[j]) != expect_anti {
                    return false;
                }
                if i < j
                    && (self.destab[i].anticommutes_with(&self.destab[j])
                        || self.stab[i].anticommutes_with(&self.stab[j]))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Dense unitary of the encoded Clifford, defined up to a global phase.
    pub fn to_unitary(&self) -> Result<Matrix, TableauError> {
        if self.n > DENSE_TABLEAU_CAP {
            return Err(TableauError::TooLarge {
                n: self.n,
                cap: DENSE_TABLEAU_CAP,
            });
        }
        let dim = 1usize << self.n;
        // V|0…0⟩ is the joint +1 eigenvector of the stabilizer rows.
        let mut zero_image = None;
        for seed in 0..dim {
            let mut v = vec![Complex64::new(0.0, 0.0); dim];
            v[seed] = Complex64::new(1.0, 0.0);
            for s in &self.stab {
                let pv = apply_pauli(s, &v);
                for (a, b) in v.iter_mut().zip(pv) {
                    *a = (*a + b) * 0.5;
                }
            }
            let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-9 {
                v.iter_mut().for_each(|a| *a /= norm);
                zero_image = Some(v);
                break;
            }
        }
        let psi = zero_image.expect("stabilizer rows define a nonzero state");
        // V|b⟩ = V X^b V† V|0⟩ = ∏ D_q^{b_q} V|0⟩
        let columns: Vec<Vec<Complex64>> = (0..dim)
            .map(|b| {
                let mut v = psi.clone();
                for q in 0..self.n {
                    if b & (1 << (self.n - 1 - q)) != 0 {
                        v = apply_pauli(&self.destab[q], &v);
                    }
                }
                v
            })
            .collect();
        Ok(Matrix::from_columns(&columns))
    }
}

/// Dense action of a Pauli operator on a state vector.
pub(crate) fn apply_pauli(p: &PauliProduct, v: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
    for (idx, amp) in v.iter().enumerate() {
        if *amp == Complex64::new(0.0, 0.0) {
            continue;
        }
        let (to, factor) = p.apply_to_basis(idx);
        out[to] += factor * amp;
    }
    out
}

impl fmt::Display for CliffordTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.destab.iter().enumerate() {
            writeln!(f, "D{i} {row}")?;
        }
        for (i, row) in self.stab.iter().enumerate() {
            writeln!(f, "S{i} {row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
