//! Rotation merging passes.
//!
//! All passes share one streaming driver: Clifford gates are prepended to a
//! tableau, each non-Clifford rotation receives its axis from the tableau, and
//! the pass decides which earlier rotation (if any) it absorbs. A merged
//! rotation whose angle becomes a multiple of π/2 is folded back into the
//! tableau. The output keeps every gate of the input in place and only
//! rewrites rotation angles.

mod bbmerge;
mod fast_tmerge;
mod naive;
mod tmerge;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::circuit::{stats, Circuit, Gate};
use crate::pauli::PauliProduct;
use crate::rotation::{RankProfileBackend, RankVector, RankVectorBackend, RotationSequence};
use crate::tableau::CliffordTableau;

pub use naive::naive_problem1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MergePass {
    #[serde(rename = "tmerge")]
    TMerge,
    #[serde(rename = "bbmerge")]
    BBMerge,
    #[serde(rename = "fasttmerge")]
    FastTMerge,
}

impl MergePass {
    pub const ALL: [MergePass; 3] = [MergePass::TMerge, MergePass::BBMerge, MergePass::FastTMerge];

    pub fn name(self) -> &'static str {
        match self {
            MergePass::TMerge => "tmerge",
            MergePass::BBMerge => "bbmerge",
            MergePass::FastTMerge => "fasttmerge",
        }
    }

    pub fn run(self, circuit: &Circuit) -> MergeOutcome {
        match self {
            MergePass::TMerge => tmerge(circuit),
            MergePass::BBMerge => bbmerge(circuit),
            MergePass::FastTMerge => fast_tmerge(circuit),
        }
    }
}

impl fmt::Display for MergePass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MergePass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "tmerge" => Ok(MergePass::TMerge),
            "bbmerge" => Ok(MergePass::BBMerge),
            "fasttmerge" | "fast_tmerge" => Ok(MergePass::FastTMerge),
            other => Err(format!("unknown merge pass `{other}`")),
        }
    }
}

/// Rotation `i` was merged into the later rotation `j`; `sign` is the sign
/// ratio between their axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergePair {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, Serialize)]
pub struct MergeOutcome {
    pub pass: MergePass,
    pub t_count_before: usize,
    pub t_count_after: usize,
    pub rz_count_after: usize,
    pub checks: u64,
    pub merges: Vec<MergePair>,
    pub wall_time_ms: f64,
    #[serde(skip)]
    pub circuit: Circuit,
    /// Number of pivots of the rank vector, for the passes that compute it.
    #[serde(skip)]
    pub h: Option<usize>,
}

/// Mutable state visible to a pass while streaming over the circuit.
pub(crate) struct MergeState {
    pub axes: Vec<PauliProduct>,
    pub r: Vec<Angle>,
    pub checks: u64,
}

impl MergeState {
    /// One counted commutativity test between the axis of rotation `k` and `p`.
    #[inline]
    pub fn anticommutes(&mut self, k: usize, p: &PauliProduct) -> bool {
        self.checks += 1;
        self.axes[k].anticommutes_with(p)
    }

    #[inline]
    pub fn is_clifford(&self, k: usize) -> bool {
        self.r[k].is_half_pi_multiple()
    }
}

pub(crate) trait Strategy {
    /// Called once the axis of rotation `t` is known; returns the earlier
    /// rotation to merge into `t`.
    fn candidate(&mut self, st: &mut MergeState, t: usize) -> Option<usize>;

    /// Called after `j` was merged into `t`.
    fn merged(&mut self, st: &MergeState, j: usize, t: usize, cliffordized: bool);
}

fn run<S: Strategy>(
    circuit: &Circuit,
    pass: MergePass,
    strategy: &mut S,
    h: Option<usize>,
    start: Instant,
) -> MergeOutcome {
    let n = circuit.n_qubits();
    let mut tableau = CliffordTableau::identity(n);
    let mut st = MergeState {
        axes: Vec::new(),
        r: Vec::new(),
        checks: 0,
    };
    let mut positions = Vec::new();
    let mut merges = Vec::new();
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
            continue;
        }
        let t = st.axes.len();
        st.axes.push(
            tableau
                .stabilizer_generator(q)
                .expect("validated qubit")
                .clone(),
        );
        st.r.push(angle);
        positions.push(pos);
        if let Some(j) = strategy.candidate(&mut st, t) {
            let sign = st.axes[t]
                .sign_ratio(&st.axes[j])
                .expect("merge candidates have equal axes up to sign");
            let moved = st.r[j].with_sign(sign);
            st.r[t] = &st.r[t] + &moved;
            st.r[j] = Angle::zero();
            merges.push(MergePair { i: j, j: t, sign });
            let cliffordized = st.r[t].is_half_pi_multiple();
            if cliffordized {
                tableau
                    .prepend_rz(&st.r[t], q)
                    .expect("checked multiple of pi/2");
            }
            strategy.merged(&st, j, t, cliffordized);
        }
    }
    let output = rebuild(circuit, &positions, &st.r);
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let before = stats(circuit);
    let after = stats(&output);
    MergeOutcome {
        pass,
        t_count_before: before.t_count,
        t_count_after: after.t_count,
        rz_count_after: after.non_clifford_rz_count,
        checks: st.checks,
        merges,
        wall_time_ms: elapsed,
        circuit: output,
        h,
    }
}

/// Replaces the angle of every non-Clifford rotation of `circuit` in place.
fn rebuild(circuit: &Circuit, positions: &[usize], r: &[Angle]) -> Circuit {
    let mut gates = Vec::with_capacity(circuit.len());
    let mut next = positions.iter().zip(r).peekable();
    for (pos, gate) in circuit.gates().iter().enumerate() {
        match next.peek() {
            Some(&(&p, angle)) if p == pos => {
                next.next();
                let (q, _) = gate.qubits();
                if gate.rz_angle().as_ref() == Some(angle) {
                    gates.push(gate.clone());
                } else {
                    gates.extend(Gate::for_rotation(q, angle));
                }
            }
            _ => gates.push(gate.clone()),
        }
    }
    circuit.with_gates(gates).expect("same qubits as the input")
}

fn rank_vector_with(circuit: &Circuit, backend: &dyn RankVectorBackend) -> RankVector {
    backend.rank_vector(&RotationSequence::extract(circuit))
}

/// Backward scan over all earlier live rotations.
pub fn tmerge(circuit: &Circuit) -> MergeOutcome {
    let start = Instant::now();
    run(circuit, MergePass::TMerge, &mut tmerge::TMerge, None, start)
}

/// Rank-vector pruned merging.
pub fn bbmerge(circuit: &Circuit) -> MergeOutcome {
    bbmerge_with(circuit, &RankProfileBackend)
}

pub fn bbmerge_with(circuit: &Circuit, backend: &dyn RankVectorBackend) -> MergeOutcome {
    let start = Instant::now();
    let v = rank_vector_with(circuit, backend);
    let h = v.h();
    run(
        circuit,
        MergePass::BBMerge,
        &mut bbmerge::BBMerge::new(v),
        Some(h),
        start,
    )
}

/// Rank-vector pruned merging that also looks past rotations turned
/// Clifford by earlier merges.
pub fn fast_tmerge(circuit: &Circuit) -> MergeOutcome {
    fast_tmerge_with(circuit, &RankProfileBackend)
}

pub fn fast_tmerge_with(circuit: &Circuit, backend: &dyn RankVectorBackend) -> MergeOutcome {
    let start = Instant::now();
    let v = rank_vector_with(circuit, backend);
    let h = v.h();
    run(
        circuit,
        MergePass::FastTMerge,
        &mut fast_tmerge::FastTMerge::new(v),
        Some(h),
        start,
    )
}
