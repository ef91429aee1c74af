//! Pauli-rotation normal form of a circuit, commutativity matrices and the
//! rank vector.
//!
//! A circuit `U = g_M ⋯ g_1` is rewritten as `U = e^{iφ} C · R_{P_m}(θ_m) ⋯
//! R_{P_1}(θ_1)` where every Clifford gate has been pushed to the end. Axis
//! `P_i` is `C_i† Z_q C_i` for the Clifford prefix `C_i` preceding the `i`-th
//! rotation.

mod gf2;

use serde::{Serialize, Serializer};

use crate::angle::Angle;
use crate::bitvec::BitVec;
use crate::circuit::{Circuit, Gate};
use crate::pauli::PauliProduct;
use crate::tableau::CliffordTableau;

pub use gf2::{gf2_rank, gf2_rank_profile, BitMatrix, IncrementalBasis};

#[derive(Clone, Debug)]
pub struct RotationSequence {
    axes: Vec<PauliProduct>,
    angles: Vec<Angle>,
    final_clifford: CliffordTableau,
    source_positions: Vec<usize>,
}

impl RotationSequence {
    /// Builds a sequence directly from axes and angles.
    pub fn from_parts(
        axes: Vec<PauliProduct>,
        angles: Vec<Angle>,
        final_clifford: CliffordTableau,
    ) -> Self {
        assert_eq!(axes.len(), angles.len());
        for p in &axes {
            assert!(
                p.is_hermitian() && !p.is_identity_masks(),
                "invalid rotation axis {p}"
            );
            assert_eq!(p.n_qubits(), final_clifford.n_qubits());
        }
        let source_positions = (0..axes.len()).collect();
        RotationSequence {
            axes,
            angles,
            final_clifford,
            source_positions,
        }
    }

    /// Single pass over the gates. Clifford gates and rotations by provable
    /// multiples of π/2 are prepended to a tableau; every other rotation on
    /// qubit `q` gets the current stabilizer row `q` as its axis.
    pub fn extract(circuit: &Circuit) -> Self {
        let n = circuit.n_qubits();
        let mut tableau = CliffordTableau::identity(n);
        let mut axes = Vec::new();
        let mut angles = Vec::new();
        let mut source_positions = Vec::new();
        for (pos, gate) in circuit.gates().iter().enumerate() {
            if let Some(g) = gate.as_clifford() {
                tableau
                    .prepend_gate(g)
                    .expect("circuit gates are validated");
                continue;
            }
            let angle = gate.rz_angle().expect("non-Clifford gates are rotations");
            let (q, _) = gate.qubits();
            if angle.is_half_pi_multiple() {
                tableau
                    .prepend_rz(&angle, q)
                    .expect("checked multiple of pi/2");
            } else {
                axes.push(
                    tableau
                        .stabilizer_generator(q)
                        .expect("validated qubit")
                        .clone(),
                );
                angles.push(angle);
                source_positions.push(pos);
            }
        }
        RotationSequence {
            axes,
            angles,
            final_clifford: tableau,
            source_positions,
        }
    }

    pub fn len(&self) -> usize {
        self.axes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axes.is_empty()
    }

    pub fn n_qubits(&self) -> usize {
        self.final_clifford.n_qubits()
    }

    pub fn axes(&self) -> &[PauliProduct] {
        &self.axes
    }

    pub fn angles(&self) -> &[Angle] {
        &self.angles
    }

    /// Tableau tracking the inverse of the whole Clifford content, so that
    /// the final Clifford is `final_clifford()⁻¹`.
    pub fn final_clifford(&self) -> &CliffordTableau {
        &self.final_clifford
    }

    /// Gate index in the source circuit of each rotation.
    pub fn source_positions(&self) -> &[usize] {
        &self.source_positions
    }

    pub fn commutativity_matrix(&self) -> CommutativityMatrix {
        CommutativityMatrix::from_axes(&self.axes)
    }
}

/// Strictly upper-triangular matrix with `A[i][j] = 1` iff axes `i < j`
/// anticommute. Stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativityMatrix {
    columns: Vec<BitVec>,
}

impl CommutativityMatrix {
    pub fn from_axes(axes: &[PauliProduct]) -> Self {
        let m = axes.len();
        let columns = (0..m).map(|j| commutation_column(axes, j)).collect();
        CommutativityMatrix { columns }
    }

    pub fn size(&self) -> usize {
        self.columns.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        i < j && self.columns[j].get(i)
    }

    pub fn column(&self, j: usize) -> &BitVec {
        &self.columns[j]
    }

    pub fn to_bit_matrix(&self) -> BitMatrix {
        let m = self.size();
        let mut out = BitMatrix::zeros(m, m);
        for (j, col) in self.columns.iter().enumerate() {
            for i in col.iter_ones() {
                out.set(i, j, true);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut basis = IncrementalBasis::new();
        for col in &self.columns {
            basis.insert(col.clone());
        }
        basis.rank()
    }

    pub fn rank_profile(&self) -> RankVector {
        let mut basis = IncrementalBasis::new();
        let bits: Vec<bool> = self
            .columns
            .iter()
            .map(|c| basis.insert(c.clone()))
            .collect();
        RankVector::from_bools(&bits)
    }
}

/// Column `j`: bit `i` set for `i < j` when axes `i` and `j` anticommute.
fn commutation_column(axes: &[PauliProduct], j: usize) -> BitVec {
    let mut col = BitVec::zeros(axes.len());
    for (i, p) in axes[..j].iter().enumerate() {
        if p.anticommutes_with(&axes[j]) {
            col.set(i, true);
        }
    }
    col
}

/// Commutativity matrix of `circuit` padded with a `T` on every qubit at
/// both ends.
pub fn extended_commutativity_matrix(circuit: &Circuit) -> CommutativityMatrix {
    extended_sequence(circuit).commutativity_matrix()
}

pub fn extended_sequence(circuit: &Circuit) -> RotationSequence {
    let n = circuit.n_qubits();
    let pad = |q| Gate::Rz(q, Angle::pi_frac(1, 4));
    let gates: Vec<Gate> = (0..n)
        .map(pad)
        .chain(circuit.gates().iter().cloned())
        .chain((0..n).map(pad))
        .collect();
    RotationSequence::extract(&circuit.with_gates(gates).expect("same qubits"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankVector {
    bits: Vec<bool>,
    pivots: Vec<usize>,
}

impl RankVector {
    pub fn from_bools(bits: &[bool]) -> Self {
        RankVector {
            bits: bits.to_vec(),
            pivots: bits
                .iter()
                .enumerate()
                .filter(|(_, b)| **b)
                .map(|(i, _)| i)
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn pivot_indices(&self) -> &[usize] {
        &self.pivots
    }

    /// Number of pivots, equal to the rank of the matrix.
    pub fn h(&self) -> usize {
        self.pivots.len()
    }
}

impl Serialize for RankVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            v: Vec<u8>,
            pivot_indices: &'a [usize],
            h: usize,
        }
        Repr {
            v: self.bits.iter().map(|&b| b as u8).collect(),
            pivot_indices: &self.pivots,
            h: self.h(),
        }
        .serialize(serializer)
    }
}

/// Source of rank vectors for the merge passes.
pub trait RankVectorBackend {
    fn rank_vector(&self, seq: &RotationSequence) -> RankVector;
}

/// Computes the rank profile by inserting commutativity columns one by one
/// into a reduced basis.
#[derive(Clone, Copy, Debug, Default)]
pub struct RankProfileBackend;

impl RankVectorBackend for RankProfileBackend {
    fn rank_vector(&self, seq: &RotationSequence) -> RankVector {
        let mut basis = IncrementalBasis::new();
        let bits: Vec<bool> = (0..seq.len())
            .map(|j| basis.insert(commutation_column(seq.axes(), j)))
            .collect();
        RankVector::from_bools(&bits)
    }
}

pub fn rank_vector(seq: &RotationSequence) -> RankVector {
    RankProfileBackend.rank_vector(seq)
}
