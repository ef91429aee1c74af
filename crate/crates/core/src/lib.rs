//! Pauli-rotation merging for Clifford+Rz circuits.
//!
//! A circuit is read as a sequence of Pauli rotations interleaved with
//! Clifford gates. Rotations whose axes coincide (up to sign) and that can be
//! brought next to each other are merged, which lowers the number of
//! non-Clifford rotations. Three merge passes are provided: a backward scan
//! ([`merge::tmerge`]), a rank-vector guided pass ([`merge::bbmerge`]) and its
//! relaxation ([`merge::fast_tmerge`]).

pub mod angle;
pub mod bitvec;
pub mod circuit;
pub mod dense;
pub mod merge;
pub mod pauli;
pub mod rotation;
pub mod tableau;
pub mod verify;

pub use angle::{Angle, AngleError};
pub use circuit::{Circuit, CircuitError, Gate};
pub use merge::{MergeOutcome, MergePass};
pub use pauli::{AxisKey, PauliError, PauliProduct};
pub use rotation::{CommutativityMatrix, RankVector, RotationSequence};
pub use tableau::{CliffordGate, CliffordTableau, TableauError};
