mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rotmerge::angle::Angle;
use rotmerge::circuit::{Circuit, Gate};
use rotmerge::dense::Matrix;
use rotmerge::rotation::{
    extended_commutativity_matrix, extended_sequence, gf2_rank, rank_vector, CommutativityMatrix,
    RotationSequence,
};
use rotmerge::tableau::CliffordTableau;

use common::*;

fn sequence_of(axes: Vec<rotmerge::pauli::PauliProduct>) -> RotationSequence {
    let n = axes[0].n_qubits();
    let angles = vec![Angle::pi_frac(1, 4); axes.len()];
    RotationSequence::from_parts(axes, angles, CliffordTableau::identity(n))
}

fn random_sequence(seed: u64, max_m: usize, max_n: usize) -> RotationSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    sequence_of(random_axes(&mut rng, n, m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_vector_matches_elimination_oracle(seed in any::<u64>()) {
        let seq = random_sequence(seed, 200, 16);
        let rows = oracle_rows(seq.axes());
        let v = rank_vector(&seq);
        prop_assert_eq!(bools_of(&v), incremental_rank_profile(&rows));
        prop_assert_eq!(v.h(), gf2_rank(&seq.commutativity_matrix().to_bit_matrix()));
        prop_assert_eq!(v.h(), naive_rank(&rows));
        let pivots: Vec<usize> = (0..v.len()).filter(|&i| v.get(i)).collect();
        prop_assert_eq!(v.pivot_indices(), &pivots[..]);
    }

    #[test]
    fn matrix_matches_count_oracle(seed in any::<u64>()) {
        let seq = random_sequence(seed, 60, 8);
        let a = seq.commutativity_matrix();
        let rows = oracle_rows(seq.axes());
        for (j, _) in rows.iter().enumerate() {
            for (i, row) in rows.iter().enumerate() {
                prop_assert_eq!(a.get(i, j), row[j]);
            }
        }
    }

    #[test]
    fn square_ranks_match_naive(rows in prop::collection::vec(prop::collection::vec(any::<bool>(), 64), 64)) {
        prop_assert_eq!(gf2_rank(&to_bit_matrix(&rows)), naive_rank(&rows));
    }

    #[test]
    fn swapping_adjacent_commuting_axes_keeps_rank(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let seq = random_sequence(seed, 40, 4);
        let mut axes = seq.axes().to_vec();
        let before = CommutativityMatrix::from_axes(&axes).rank();
        for _ in 0..10 {
            if axes.len() < 2 {
                break;
            }
            let k = rng.gen_range(0..axes.len() - 1);
            if axes[k].commutes_with(&axes[k + 1]) {
                axes.swap(k, k + 1);
                prop_assert_eq!(CommutativityMatrix::from_axes(&axes).rank(), before);
            }
        }
    }

    #[test]
    fn merging_adjacent_equal_axes_keeps_rank(seed in any::<u64>()) {
        let seq = random_sequence(seed, 40, 3);
        let mut axes = seq.axes().to_vec();
        let before = CommutativityMatrix::from_axes(&axes).rank();
        while let Some(k) = (0..axes.len().saturating_sub(1)).find(|&k| axes[k].equal_up_to_sign(&axes[k + 1])) {
            axes.remove(k + 1);
            prop_assert_eq!(CommutativityMatrix::from_axes(&axes).rank(), before);
        }
    }
}

#[test]
fn commuting_with_pivots_implies_commuting_with_all() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut triggered = 0;
    for _ in 0..1000 {
        let seq = random_sequence(rng.gen(), 80, 6);
        let v = rank_vector(&seq);
        let axes = seq.axes();
        for _ in 0..10 {
            if axes.len() < 2 {
                continue;
            }
            let i = rng.gen_range(0..axes.len() - 1);
            let j = rng.gen_range(i + 1..axes.len());
            let hypothesis = (i + 1..=j)
                .filter(|&k| v.get(k))
                .all(|k| axes[i].commutes_with(&axes[k]));
            if hypothesis {
                triggered += 1;
                for k in i + 1..=j {
                    assert!(axes[i].commutes_with(&axes[k]), "i={i} j={j} k={k}");
                }
            }
        }
    }
    assert!(
        triggered > 1000,
        "only {triggered} triples exercised the implication"
    );
}

/// Clifford gates and `Rz` by multiples of π/8, so that some rotations
/// are Clifford and get absorbed.
fn random_rz_circuit<R: Rng>(rng: &mut R, n: usize, len: usize) -> Circuit {
    let gates: Vec<Gate> = (0..len)
        .map(|_| {
            if rng.gen_bool(0.4) {
                Gate::Rz(rng.gen_range(0..n), Angle::pi_frac(rng.gen_range(1..16), 8))
            } else {
                random_clifford_gate(rng, n)
            }
        })
        .collect();
    Circuit::from_gates(n, gates).unwrap()
}

fn rebuild(seq: &RotationSequence) -> Matrix {
    let dim = 1usize << seq.n_qubits();
    let mut u = Matrix::identity(dim);
    for (p, a) in seq.axes().iter().zip(seq.angles()) {
        let theta = a.evaluate_with(&no_params()).unwrap();
        u = dense_rotation(p, theta).matmul(&u);
    }
    seq.final_clifford()
        .to_unitary()
        .unwrap()
        .adjoint()
        .matmul(&u)
}

#[test]
fn extract_rebuilds_the_unitary() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let len = rng.gen_range(0..=40);
        let c = random_rz_circuit(&mut rng, n, len);
        let seq = RotationSequence::extract(&c);
        assert!(rebuild(&seq).phase_aligned_diff(&unitary(&c)) < 1e-9);
        for (p, &pos) in seq.axes().iter().zip(seq.source_positions()) {
            assert!(p.is_hermitian());
            assert!(c.gates()[pos].is_non_clifford_rotation());
        }
    }
}

#[test]
fn extended_matrix_pads_both_ends() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let len = rng.gen_range(0..=30);
        let c = random_clifford_t(&mut rng, n, len);
        let ext = extended_sequence(&c);
        let inner = RotationSequence::extract(&c);
        assert_eq!(ext.len(), inner.len() + 2 * n);
        assert_eq!(extended_commutativity_matrix(&c).size(), ext.len());
        let other_angle = c.with_gates(
            (0..n)
                .map(|q| Gate::Rz(q, Angle::pi_frac(3, 8)))
                .chain(c.gates().iter().cloned())
                .chain((0..n).map(|q| Gate::Rz(q, Angle::pi_frac(3, 8))))
                .collect(),
        );
        let direct = RotationSequence::extract(&other_angle.unwrap()).commutativity_matrix();
        assert_eq!(direct, extended_commutativity_matrix(&c));
    }
}

#[test]
fn commuting_axes_have_empty_rank_vector() {
    let seq = sequence_of(
        ["ZZI", "IZZ", "ZIZ", "-ZZI"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect(),
    );
    let v = rank_vector(&seq);
    assert_eq!(v.h(), 0);
    assert!(v.pivot_indices().is_empty());
    let v = rank_vector(&sequence_of(vec![
        "Z".parse().unwrap(),
        "X".parse().unwrap(),
    ]));
    assert_eq!(v.bits(), [false, true]);
}
