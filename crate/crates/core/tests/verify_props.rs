mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rotmerge::circuit::{Circuit, Gate};
use rotmerge::dense::Matrix;
use rotmerge::merge::fast_tmerge;
use rotmerge::verify::{
    equivalent_up_to_phase, sample_angle, simulate, Method, CLIFFORD_EXCLUSION,
};

use common::{no_params, random_clifford_t, unitary};

fn circuit(seed: u64) -> Circuit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=4);
    let len = rng.gen_range(0..=40);
    random_clifford_t(&mut rng, n, len)
}

/// Deviation after aligning phases at entry `idx` of `b`.
fn aligned_at(a: &Matrix, b: &Matrix, idx: (usize, usize)) -> f64 {
    let ratio = a[idx] / b[idx];
    let phase = ratio / ratio.norm();
    let dim = a.dim();
    let mut worst: f64 = 0.0;
    for r in 0..dim {
        for c in 0..dim {
            worst = worst.max((a[(r, c)] - phase * b[(r, c)]).norm());
        }
    }
    worst
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn unitary_of_halves_multiplies(seed in any::<u64>(), cut in any::<prop::sample::Index>()) {
        let c = circuit(seed);
        let k = cut.index(c.len() + 1);
        let first = c.with_gates(c.gates()[..k].to_vec()).unwrap();
        let second = c.with_gates(c.gates()[k..].to_vec()).unwrap();
        let product = unitary(&second).matmul(&unitary(&first));
        prop_assert!(product.max_abs_diff(&unitary(&c)) < 1e-12);
    }

    #[test]
    fn phase_alignment_is_well_defined(seed in any::<u64>()) {
        let c = circuit(seed);
        let out = fast_tmerge(&c).circuit;
        let (a, b) = (unitary(&c), unitary(&out));
        let dim = b.dim();
        let top = (0..dim * dim).map(|i| b[(i / dim, i % dim)].norm()).fold(0.0, f64::max);
        let deviations: Vec<f64> = (0..dim * dim)
            .map(|i| (i / dim, i % dim))
            .filter(|&idx| b[idx].norm() >= top - 1e-12)
            .map(|idx| aligned_at(&a, &b, idx))
            .collect();
        let report = equivalent_up_to_phase(&c, &out, 1e-9, 1).unwrap();
        prop_assert!(report.equivalent);
        for d in deviations {
            prop_assert!((d - report.max_deviation).abs() <= 1e-9);
        }
    }

    #[test]
    fn simulation_matches_dense_columns(seed in any::<u64>()) {
        let c = circuit(seed);
        let u = unitary(&c);
        let dim = u.dim();
        for col in 0..dim {
            let mut state = vec![Complex64::new(0.0, 0.0); dim];
            state[col] = Complex64::new(1.0, 0.0);
            simulate(&c, &mut state, &no_params()).unwrap();
            for (r, amp) in state.iter().enumerate() {
                prop_assert!((amp - u[(r, col)]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn sampled_angles_avoid_clifford_points(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sample_angle(&mut rng);
        let r = x.rem_euclid(std::f64::consts::FRAC_PI_2);
        prop_assert!((0.0..2.0 * std::f64::consts::PI).contains(&x));
        prop_assert!(r > CLIFFORD_EXCLUSION && std::f64::consts::FRAC_PI_2 - r > CLIFFORD_EXCLUSION);
    }
}

#[test]
fn wide_circuits_use_statevector_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let c = random_clifford_t(&mut rng, 12, 80);
    let out = fast_tmerge(&c).circuit;
    let report = equivalent_up_to_phase(&c, &out, 1e-9, 1).unwrap();
    assert_eq!(report.method, Method::StatevectorSampling);
    assert!(report.equivalent, "deviation {}", report.max_deviation);
    let mut broken = c.gates().to_vec();
    broken.push(Gate::T(3));
    let broken = c.with_gates(broken).unwrap();
    assert!(
        !equivalent_up_to_phase(&c, &broken, 1e-9, 1)
            .unwrap()
            .equivalent
    );
}

#[test]
fn mismatched_widths_are_rejected() {
    assert!(equivalent_up_to_phase(&Circuit::new(1), &Circuit::new(2), 1e-9, 1).is_err());
    assert!(equivalent_up_to_phase(&Circuit::new(21), &Circuit::new(21), 1e-9, 1).is_err());
}
