//! Circuit data model over the Clifford+Rz gate set.

mod qasm;
mod qc;
mod stats;

use std::fmt;

use thiserror::Error;

use crate::angle::Angle;
use crate::tableau::CliffordGate;

pub use qasm::{parse_qasm, write_qasm};
pub use qc::{parse_qc, write_qc};
pub use stats::{stats, CircuitStats};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unsupported gate `{text}`")]
    UnsupportedGate { line: usize, text: String },
    #[error("line {line}: undeclared wire `{name}`")]
    UndeclaredWire { line: usize, name: String },
    #[error("rotation angle {0} cannot be written in .qc form")]
    Unrepresentable(String),
    #[error("qubit {qubit} out of range for a {n}-qubit circuit")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("two-qubit gate acts twice on qubit {0}")]
    RepeatedQubit(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    X(usize),
    Z(usize),
    S(usize),
    Sdg(usize),
    T(usize),
    Tdg(usize),
    Cnot { control: usize, target: usize },
    Cz(usize, usize),
    Rz(usize, Angle),
}

impl Gate {
    pub fn qubits(&self) -> (usize, Option<usize>) {
        match *self {
            Gate::H(q)
            | Gate::X(q)
            | Gate::Z(q)
            | Gate::S(q)
            | Gate::Sdg(q)
            | Gate::T(q)
            | Gate::Tdg(q)
            | Gate::Rz(q, _) => (q, None),
            Gate::Cnot { control, target } => (control, Some(target)),
            Gate::Cz(a, b) => (a, Some(b)),
        }
    }

    /// The Z-rotation angle of `T`, `T†` and `Rz` gates.
    pub fn rz_angle(&self) -> Option<Angle> {
        match self {
            Gate::T(_) => Some(Angle::pi_frac(1, 4)),
            Gate::Tdg(_) => Some(Angle::pi_frac(-1, 4)),
            Gate::Rz(_, a) => Some(a.clone()),
            _ => None,
        }
    }

    /// The tableau gate for fixed Clifford gates; `None` for rotations.
    pub fn as_clifford(&self) -> Option<CliffordGate> {
        Some(match *self {
            Gate::H(q) => CliffordGate::H(q),
            Gate::X(q) => CliffordGate::X(q),
            Gate::Z(q) => CliffordGate::Z(q),
            Gate::S(q) => CliffordGate::S(q),
            Gate::Sdg(q) => CliffordGate::Sdg(q),
            Gate::Cnot { control, target } => CliffordGate::Cnot { control, target },
            Gate::Cz(a, b) => CliffordGate::Cz(a, b),
            _ => return None,
        })
    }

    /// A rotation whose angle is not a provable multiple of π/2.
    pub fn is_non_clifford_rotation(&self) -> bool {
        self.rz_angle().is_some_and(|a| !a.is_half_pi_multiple())
    }

    /// Gates equal to `Rz(angle)` on `qubit` (up to global phase), using
    /// the named gates whenever the angle allows it.
    pub fn for_rotation(qubit: usize, angle: &Angle) -> Vec<Gate> {
        match angle.eighth_turns() {
            Some(0) => vec![],
            Some(1) => vec![Gate::T(qubit)],
            Some(2) => vec![Gate::S(qubit)],
            Some(4) => vec![Gate::Z(qubit)],
            Some(6) => vec![Gate::Sdg(qubit)],
            Some(7) => vec![Gate::Tdg(qubit)],
            _ => vec![Gate::Rz(qubit, angle.clone())],
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "H {q}"),
            Gate::X(q) => write!(f, "X {q}"),
            Gate::Z(q) => write!(f, "Z {q}"),
            Gate::S(q) => write!(f, "S {q}"),
            Gate::Sdg(q) => write!(f, "Sdg {q}"),
            Gate::T(q) => write!(f, "T {q}"),
            Gate::Tdg(q) => write!(f, "Tdg {q}"),
            Gate::Cnot { control, target } => write!(f, "CNOT {control} {target}"),
            Gate::Cz(a, b) => write!(f, "CZ {a} {b}"),
            Gate::Rz(q, a) => write!(f, "Rz({a}) {q}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    n_qubits: usize,
    qubit_names: Vec<String>,
    gates: Vec<Gate>,
    header: Vec<String>,
}

impl Circuit {
    /// An empty circuit on qubits named `q0, q1, ...`.
    pub fn new(n_qubits: usize) -> Self {
        Circuit::with_names((0..n_qubits).map(|i| format!("q{i}")).collect())
    }

    pub fn with_names(qubit_names: Vec<String>) -> Self {
        Circuit {
            n_qubits: qubit_names.len(),
            qubit_names,
            gates: Vec::new(),
            header: Vec::new(),
        }
    }

    /// Builds a circuit, validating every gate.
    pub fn from_gates(
        n_qubits: usize,
        gates: impl IntoIterator<Item = Gate>,
    ) -> Result<Self, CircuitError> {
        let mut c = Circuit::new(n_qubits);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    /// A copy with the same qubits and header but a new gate list.
    pub fn with_gates(&self, gates: Vec<Gate>) -> Result<Self, CircuitError> {
        let mut c = Circuit {
            gates: Vec::with_capacity(gates.len()),
            ..self.clone_shell()
        };
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    fn clone_shell(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            qubit_names: self.qubit_names.clone(),
            gates: Vec::new(),
            header: self.header.clone(),
        }
    }

    #[inline]
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn qubit_names(&self) -> &[String] {
        &self.qubit_names
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Extra `.qc` header lines (such as `.i` and `.o`) kept verbatim.
    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn set_header(&mut self, header: Vec<String>) {
        self.header = header;
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        let (a, b) = gate.qubits();
        for q in std::iter::once(a).chain(b) {
            if q >= self.n_qubits {
                return Err(CircuitError::QubitOutOfRange {
                    qubit: q,
                    n: self.n_qubits,
                });
            }
        }
        if b == Some(a) {
            return Err(CircuitError::RepeatedQubit(a));
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Parameters mentioned by any rotation angle, sorted.
    pub fn parameters(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .gates
            .iter()
            .filter_map(|g| match g {
                Gate::Rz(_, a) => Some(a.params().keys().cloned().collect::<Vec<_>>()),
                _ => None,
            })
            .flatten()
            .collect();
        names.sort();
        names.dedup();
        names
    }
}
