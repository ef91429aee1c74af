use serde::{Deserialize, Serialize};

use super::{Circuit, Gate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CircuitStats {
    pub gate_count: usize,
    pub n_qubits: usize,
    pub t_count: usize,
    pub non_clifford_rz_count: usize,
    pub h_count: usize,
    pub internal_h_count: usize,
}

pub fn stats(circuit: &Circuit) -> CircuitStats {
    let gates = circuit.gates();
    let mut s = CircuitStats {
        gate_count: gates.len(),
        n_qubits: circuit.n_qubits(),
        ..CircuitStats::default()
    };
    let mut first = None;
    let mut last = None;
    for (i, g) in gates.iter().enumerate() {
        if let Some(angle) = g.rz_angle() {
            if angle.is_odd_quarter_pi() {
                s.t_count += 1;
            }
            if !angle.is_half_pi_multiple() {
                s.non_clifford_rz_count += 1;
                first.get_or_insert(i);
                last = Some(i);
            }
        }
        if matches!(g, Gate::H(_)) {
            s.h_count += 1;
        }
    }
    if let (Some(a), Some(b)) = (first, last.filter(|&b| Some(b) > first)) {
        s.internal_h_count = gates[a + 1..b]
            .iter()
            .filter(|g| matches!(g, Gate::H(_)))
            .count();
    }
    s
}
