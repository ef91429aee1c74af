//! Golden values and tolerances for the acceptance harness in
//! `tests/acceptance.rs`. Nothing here depends on the optimizer, so the
//! numbers can be audited on their own.

use std::time::Duration;

/// Deviation allowed when reproducing the four-rotation example.
pub const EXAMPLE_TOLERANCE: f64 = 1e-12;

/// Unitary equivalence tolerance for random circuits.
pub const EQUIVALENCE_TOLERANCE: f64 = 1e-9;

pub const PER_CIRCUIT_BUDGET: Duration = Duration::from_secs(5);
pub const RANDOM_SUITE_BUDGET: Duration = Duration::from_secs(120);

pub const RANDOM_CIRCUITS: usize = 1000;
pub const RANDOM_MAX_QUBITS: usize = 6;
pub const RANDOM_MAX_GATES: usize = 60;

pub const PARAMETRIZED_CIRCUITS: usize = 500;
pub const PARAMETRIZED_MAX_ROTATIONS: usize = 40;
pub const PARAMETER_SAMPLES: usize = 5;

pub const PIVOT_PRUNING_TRIPLES: usize = 10_000;
pub const RANK_ORACLE_SEQUENCES: usize = 1000;
pub const RANK_ORACLE_MAX_ROTATIONS: usize = 200;
pub const TABLEAU_ORACLE_PREFIXES: usize = 1000;

/// Environment variable naming the directory of `.qc` benchmark files.
pub const CORPUS_ENV: &str = "ROTMERGE_CORPUS";

/// T-counts reached by TMerge and FastTMerge, keyed by file stem.
pub const GOLDEN_T_COUNTS: &[(&str, usize)] = &[
    ("tof_3", 15),
    ("tof_4", 23),
    ("tof_5", 31),
    ("tof_10", 71),
    ("barenco_tof_3", 16),
    ("barenco_tof_4", 28),
    ("barenco_tof_5", 40),
    ("barenco_tof_10", 100),
    ("mod5_4", 8),
    ("vbe_adder_3", 24),
    ("rc_adder_6", 47),
    ("csla_mux_3", 62),
    ("csum_mux_9", 84),
    ("mod_mult_55", 35),
    ("mod_red_21", 73),
    ("qft_4", 67),
    ("gf2^4_mult", 68),
    ("gf2^5_mult", 115),
    ("gf2^6_mult", 150),
    ("gf2^7_mult", 217),
    ("gf2^8_mult", 264),
    ("ham15-low", 97),
    ("hwb6", 75),
    ("grover_5", 166),
    ("qcla_com_7", 95),
    ("qcla_adder_10", 162),
    ("qcla_mod_7", 237),
    ("adder_8", 173),
    ("ham15-med", 212),
];

/// Circuits where BBMerge stops short of FastTMerge.
pub const BBMERGE_DIVERGENCE: &[(&str, usize)] =
    &[("adder_8", 179), ("ham15-med", 242), ("hwb6", 75)];

/// Checked only when the file is present.
pub const OPTIONAL_BBMERGE_ROWS: &[(&str, usize)] = &[("ham15-high", 1021)];

pub const GF_MULT_CIRCUITS: &[&str] = &[
    "gf2^4_mult",
    "gf2^5_mult",
    "gf2^6_mult",
    "gf2^7_mult",
    "gf2^8_mult",
];
