#![allow(dead_code)]

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use rotmerge::angle::Angle;
use rotmerge::circuit::{Circuit, Gate};
use rotmerge::dense::Matrix;
use rotmerge::pauli::{PauliLetter, PauliProduct};
use rotmerge::rotation::{BitMatrix, RankVector};
use rotmerge::verify::dense_unitary;

pub fn random_clifford_gate<R: Rng>(rng: &mut R, n: usize) -> Gate {
    let q = rng.gen_range(0..n);
    let pick = if n >= 2 {
        rng.gen_range(0..7)
    } else {
        rng.gen_range(0..5)
    };
    let other = |rng: &mut R| loop {
        let b = rng.gen_range(0..n);
        if b != q {
            return b;
        }
    };
    match pick {
        0 => Gate::H(q),
        1 => Gate::S(q),
        2 => Gate::Sdg(q),
        3 => Gate::X(q),
        4 => Gate::Z(q),
        5 => Gate::Cnot {
            control: q,
            target: other(rng),
        },
        _ => Gate::Cz(q, other(rng)),
    }
}

/// Clifford+T circuit with roughly 40% T/T† gates.
pub fn random_clifford_t<R: Rng>(rng: &mut R, n: usize, len: usize) -> Circuit {
    let gates = (0..len).map(|_| {
        let q = rng.gen_range(0..n);
        match rng.gen_range(0..10) {
            0..=2 => Gate::T(q),
            3 => Gate::Tdg(q),
            _ => random_clifford_gate(rng, n),
        }
    });
    Circuit::from_gates(n, gates.collect::<Vec<_>>()).unwrap()
}

/// Clifford+Rz circuit where every rotation carries a fresh parameter.
pub fn random_parametrized<R: Rng>(
    rng: &mut R,
    n: usize,
    rotations: usize,
    cliffords_per_rotation: usize,
) -> Circuit {
    let mut gates = Vec::new();
    for k in 0..rotations {
        for _ in 0..rng.gen_range(0..=cliffords_per_rotation) {
            gates.push(random_clifford_gate(rng, n));
        }
        gates.push(Gate::Rz(rng.gen_range(0..n), Angle::param(format!("a{k}"))));
    }
    Circuit::from_gates(n, gates).unwrap()
}

pub fn random_pauli<R: Rng>(rng: &mut R, n: usize) -> PauliProduct {
    loop {
        let letters: Vec<PauliLetter> = (0..n)
            .map(|_| {
                *[
                    PauliLetter::I,
                    PauliLetter::X,
                    PauliLetter::Y,
                    PauliLetter::Z,
                ]
                .choose(rng)
                .unwrap()
            })
            .collect();
        if letters.iter().any(|&l| l != PauliLetter::I) {
            return PauliProduct::from_letters(&letters, rng.gen_bool(0.5));
        }
    }
}

/// Axes drawn from a small pool so that repeats and dependencies occur.
pub fn random_axes<R: Rng>(rng: &mut R, n: usize, m: usize) -> Vec<PauliProduct> {
    let pool: Vec<PauliProduct> = (0..(m / 2).max(2)).map(|_| random_pauli(rng, n)).collect();
    (0..m)
        .map(|_| {
            let p = pool.choose(rng).unwrap().clone();
            if rng.gen_bool(0.5) {
                p.negated()
            } else {
                p
            }
        })
        .collect()
}

/// Per-position count of anticommuting letters.
pub fn anticommute_oracle(a: &PauliProduct, b: &PauliProduct) -> bool {
    let mut count = 0;
    for q in 0..a.n_qubits() {
        let (x, y) = (a.letter(q), b.letter(q));
        if x != PauliLetter::I && y != PauliLetter::I && x != y {
            count += 1;
        }
    }
    count % 2 == 1
}

/// Commutativity matrix built entry by entry from the count oracle.
pub fn commutation_oracle(axes: &[PauliProduct]) -> Vec<Vec<bool>> {
    let m = axes.len();
    let mut a = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            a[i][j] = anticommute_oracle(&axes[i], &axes[j]);
        }
    }
    a
}

/// Rank of a dense boolean matrix by textbook row reduction.
pub fn naive_rank(rows: &[Vec<bool>]) -> usize {
    let mut m: Vec<Vec<bool>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c]) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] {
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Column rank profile from prefix ranks: column `i` is a pivot iff
/// `rank(A[:, ..=i]) > rank(A[:, ..i])`.
pub fn naive_rank_profile(rows: &[Vec<bool>]) -> Vec<bool> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut previous = 0;
    (0..cols)
        .map(|i| {
            let prefix: Vec<Vec<bool>> = rows.iter().map(|r| r[..=i].to_vec()).collect();
            let r = naive_rank(&prefix);
            let grew = r > previous;
            previous = r;
            grew
        })
        .collect()
}

pub fn bools_of(v: &RankVector) -> Vec<bool> {
    v.bits().to_vec()
}

pub fn to_bit_matrix(rows: &[Vec<bool>]) -> BitMatrix {
    BitMatrix::from_bools(rows)
}

pub fn no_params() -> BTreeMap<String, f64> {
    BTreeMap::new()
}

pub fn unitary(c: &Circuit) -> Matrix {
    dense_unitary(c, &no_params()).unwrap()
}

/// `exp(-iθP/2)` as a dense matrix.
pub fn dense_rotation(p: &PauliProduct, theta: f64) -> Matrix {
    let dim = 1usize << p.n_qubits();
    let pm = p.to_dense().unwrap();
    let c = Complex64::new((theta / 2.0).cos(), 0.0);
    let s = Complex64::new(0.0, -(theta / 2.0).sin());
    let mut out = Matrix::identity(dim).scale(c);
    for r in 0..dim {
        for k in 0..dim {
            out[(r, k)] += s * pm[(r, k)];
        }
    }
    out
}

/// Column rank profile by incremental elimination with the pivot taken at
/// the highest set bit.
pub fn incremental_rank_profile(rows: &[Vec<bool>]) -> Vec<bool> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut basis: Vec<(usize, Vec<bool>)> = Vec::new();
    (0..cols)
        .map(|c| {
            let mut v: Vec<bool> = rows.iter().map(|r| r[c]).collect();
            loop {
                let Some(top) = v.iter().rposition(|&b| b) else {
                    return false;
                };
                match basis.iter().find(|(p, _)| *p == top) {
                    Some((_, b)) => {
                        for (x, y) in v.iter_mut().zip(b) {
                            *x ^= *y;
                        }
                    }
                    None => {
                        basis.push((top, v));
                        return true;
                    }
                }
            }
        })
        .collect()
}

/// Rows of the commutativity matrix from the count oracle.
pub fn oracle_rows(axes: &[PauliProduct]) -> Vec<Vec<bool>> {
    commutation_oracle(axes)
}
