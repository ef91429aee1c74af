//! Equivalence oracles by dense simulation.
//!
//! Qubit 0 is the most significant bit of a basis index, matching
//! [`PauliProduct::to_dense`](crate::pauli::PauliProduct::to_dense).

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::angle::AngleError;
use crate::circuit::{Circuit, Gate};
use crate::dense::Matrix;

/// Largest qubit count for full unitaries.
pub const DENSE_CAP: usize = 10;
/// Largest qubit count for statevector sampling.
pub const SAMPLING_CAP: usize = 20;
/// Random statevectors used when the unitary is too large.
pub const STATE_SAMPLES: usize = 8;
/// Seed of every random draw made by [`equivalent_up_to_phase`].
pub const DEFAULT_SEED: u64 = 0x5eed_7a11;
/// Parameter draws closer than this to a multiple of π/2 are rejected.
pub const CLIFFORD_EXCLUSION: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("{n} qubits exceeds the simulation cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("circuits act on {left} and {right} qubits")]
    DimensionMismatch { left: usize, right: usize },
    #[error(transparent)]
    Angle(#[from] AngleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    DenseUnitary,
    StatevectorSampling,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReport {
    pub method: Method,
    pub equivalent: bool,
    pub max_deviation: f64,
    pub samples: usize,
    pub seed: u64,
    pub assignments: Vec<BTreeMap<String, f64>>,
}

fn apply_1q(state: &mut [Complex64], n: usize, q: usize, m: [[Complex64; 2]; 2]) {
    let bit = 1usize << (n - 1 - q);
    for i in 0..state.len() {
        if i & bit == 0 {
            let (a, b) = (state[i], state[i | bit]);
            state[i] = m[0][0] * a + m[0][1] * b;
            state[i | bit] = m[1][0] * a + m[1][1] * b;
        }
    }
}

fn apply_phase(state: &mut [Complex64], n: usize, q: usize, lo: Complex64, hi: Complex64) {
    let bit = 1usize << (n - 1 - q);
    for (i, a) in state.iter_mut().enumerate() {
        *a *= if i & bit == 0 { lo } else { hi };
    }
}

fn rz_phases(theta: f64) -> (Complex64, Complex64) {
    (
        Complex64::from_polar(1.0, -theta / 2.0),
        Complex64::from_polar(1.0, theta / 2.0),
    )
}

/// Applies one gate in place; `Rz` angles are evaluated under `assignment`.
pub fn apply_gate(
    state: &mut [Complex64],
    n: usize,
    gate: &Gate,
    assignment: &BTreeMap<String, f64>,
) -> Result<(), VerifyError> {
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match *gate {
        Gate::H(q) => {
            let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            apply_1q(state, n, q, [[s, s], [s, -s]]);
        }
        Gate::X(q) => {
            let bit = 1usize << (n - 1 - q);
            for k in 0..state.len() {
                if k & bit == 0 {
                    state.swap(k, k | bit);
                }
            }
        }
        Gate::Z(q) => apply_phase(state, n, q, one, -one),
        Gate::S(q) => apply_phase(state, n, q, one, i),
        Gate::Sdg(q) => apply_phase(state, n, q, one, -i),
        Gate::T(q) => apply_phase(state, n, q, one, Complex64::from_polar(1.0, PI / 4.0)),
        Gate::Tdg(q) => apply_phase(state, n, q, one, Complex64::from_polar(1.0, -PI / 4.0)),
        Gate::Cnot { control, target } => {
            let c = 1usize << (n - 1 - control);
            let t = 1usize << (n - 1 - target);
            for k in 0..state.len() {
                if k & c != 0 && k & t == 0 {
                    state.swap(k, k | t);
                }
            }
        }
        Gate::Cz(a, b) => {
            let mask = (1usize << (n - 1 - a)) | (1usize << (n - 1 - b));
            for (k, amp) in state.iter_mut().enumerate() {
                if k & mask == mask {
                    *amp = -*amp;
                }
            }
        }
        Gate::Rz(q, ref angle) => {
            let theta = angle.evaluate_with(assignment)?;
            let (lo, hi) = rz_phases(theta);
            apply_phase(state, n, q, lo, hi);
        }
    }
    Ok(())
}

pub fn simulate(
    circuit: &Circuit,
    state: &mut [Complex64],
    assignment: &BTreeMap<String, f64>,
) -> Result<(), VerifyError> {
    let n = circuit.n_qubits();
    assert_eq!(state.len(), 1usize << n);
    for g in circuit.gates() {
        apply_gate(state, n, g, assignment)?;
    }
    Ok(())
}

/// Dense unitary of a circuit with at most [`DENSE_CAP`] qubits.
pub fn dense_unitary(
    circuit: &Circuit,
    assignment: &BTreeMap<String, f64>,
) -> Result<Matrix, VerifyError> {
    let n = circuit.n_qubits();
    if n > DENSE_CAP {
        return Err(VerifyError::TooLarge { n, cap: DENSE_CAP });
    }
    let dim = 1usize << n;
    let columns = (0..dim)
        .map(|b| {
            let mut v = vec![Complex64::new(0.0, 0.0); dim];
            v[b] = Complex64::new(1.0, 0.0);
            simulate(circuit, &mut v, assignment).map(|_| v)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_columns(&columns))
}

/// Uniform draw in `[0, 2π)` away from multiples of π/2.
pub fn sample_angle<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let x = rng.gen_range(0.0..2.0 * PI);
        let r = x.rem_euclid(FRAC_PI_2);
        if r > CLIFFORD_EXCLUSION && FRAC_PI_2 - r > CLIFFORD_EXCLUSION {
            return x;
        }
    }
}

pub fn sample_assignment<R: Rng>(params: &[String], rng: &mut R) -> BTreeMap<String, f64> {
    params
        .iter()
        .map(|p| (p.clone(), sample_angle(rng)))
        .collect()
}

fn random_state<R: Rng>(dim: usize, rng: &mut R) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|a| *a /= norm);
    v
}

/// Compares two circuits up to global phase at `n_param_samples` random
/// parameter assignments (one when neither circuit has parameters).
pub fn equivalent_up_to_phase(
    c1: &Circuit,
    c2: &Circuit,
    tol: f64,
    n_param_samples: usize,
) -> Result<EquivalenceReport, VerifyError> {
    let n = c1.n_qubits();
    if n != c2.n_qubits() {
        return Err(VerifyError::DimensionMismatch {
            left: n,
            right: c2.n_qubits(),
        });
    }
    if n > SAMPLING_CAP {
        return Err(VerifyError::TooLarge {
            n,
            cap: SAMPLING_CAP,
        });
    }
    let mut params = c1.parameters();
    params.extend(c2.parameters());
    params.sort();
    params.dedup();
    let samples = if params.is_empty() {
        1
    } else {
        n_param_samples.max(1)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let method = if n <= DENSE_CAP {
        Method::DenseUnitary
    } else {
        Method::StatevectorSampling
    };
    let mut assignments = Vec::with_capacity(samples);
    let mut max_deviation: f64 = 0.0;
    for _ in 0..samples {
        let assignment = sample_assignment(&params, &mut rng);
        let deviation = match method {
            Method::DenseUnitary => {
                let u1 = dense_unitary(c1, &assignment)?;
                let u2 = dense_unitary(c2, &assignment)?;
                u1.phase_aligned_diff(&u2)
            }
            Method::StatevectorSampling => {
                let dim = 1usize << n;
                let mut worst: f64 = 0.0;
                for _ in 0..STATE_SAMPLES {
                    let mut a = random_state(dim, &mut rng);
                    let mut b = a.clone();
                    simulate(c1, &mut a, &assignment)?;
                    simulate(c2, &mut b, &assignment)?;
                    let overlap: Complex64 = a.iter().zip(&b).map(|(x, y)| x.conj() * y).sum();
                    worst = worst.max(1.0 - overlap.norm());
                }
                worst
            }
        };
        max_deviation = max_deviation.max(deviation);
        assignments.push(assignment);
    }
    Ok(EquivalenceReport {
        method,
        equivalent: max_deviation <= tol,
        max_deviation,
        samples,
        seed: DEFAULT_SEED,
        assignments,
    })
}
