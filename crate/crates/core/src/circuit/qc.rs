//! The `.qc` text format.

use std::fmt::Write as _;

use super::{Circuit, CircuitError, Gate};

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim()
}

pub fn parse_qc(text: &str) -> Result<Circuit, CircuitError> {
    let mut names: Vec<String> = Vec::new();
    let mut header = Vec::new();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut began = false;
    for (no, raw) in lines.by_ref() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix(".v") {
            if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
                header.push(line.to_string());
                continue;
            }
            for name in rest.split_whitespace() {
                if names.iter().any(|n| n == name) {
                    return Err(CircuitError::Parse {
                        line: no,
                        message: format!("wire `{name}` declared twice"),
                    });
                }
                names.push(name.to_string());
            }
        } else if line.starts_with('.') {
            header.push(line.to_string());
        } else if line.eq_ignore_ascii_case("BEGIN") {
            began = true;
            break;
        } else if line.to_ascii_uppercase().starts_with("BEGIN") {
            return Err(CircuitError::UnsupportedGate {
                line: no,
                text: line.to_string(),
            });
        } else {
            return Err(CircuitError::Parse {
                line: no,
                message: format!("unexpected `{line}` before BEGIN"),
            });
        }
    }
    if !began {
        return Err(CircuitError::Parse {
            line: text.lines().count(),
            message: "missing BEGIN".into(),
        });
    }

    let mut circuit = Circuit::with_names(names);
    circuit.set_header(header);
    let mut ended = false;
    for (no, raw) in lines.by_ref() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if line.eq_ignore_ascii_case("END") {
            ended = true;
            break;
        }
        let gate = parse_gate_line(&circuit, no, line)?;
        circuit.push(gate).map_err(|e| CircuitError::Parse {
            line: no,
            message: e.to_string(),
        })?;
    }
    if !ended {
        return Err(CircuitError::Parse {
            line: text.lines().count(),
            message: "missing END".into(),
        });
    }
    for (no, raw) in lines {
        if !strip_comment(raw).is_empty() {
            return Err(CircuitError::UnsupportedGate {
                line: no,
                text: strip_comment(raw).to_string(),
            });
        }
    }
    Ok(circuit)
}

fn parse_gate_line(circuit: &Circuit, line: usize, text: &str) -> Result<Gate, CircuitError> {
    let mut tokens = text.split_whitespace();
    let mnemonic = tokens.next().unwrap_or_default().to_ascii_lowercase();
    let args: Vec<&str> = tokens.collect();
    let unsupported = || CircuitError::UnsupportedGate {
        line,
        text: text.to_string(),
    };
    let wires: Vec<usize> = args
        .iter()
        .map(|name| {
            circuit
                .qubit_names()
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| CircuitError::UndeclaredWire {
                    line,
                    name: name.to_string(),
                })
        })
        .collect::<Result<_, _>>()?;
    let gate = match (mnemonic.as_str(), wires.as_slice()) {
        ("h", &[q]) => Gate::H(q),
        ("x" | "tof" | "cnot", &[q]) => Gate::X(q),
        ("x" | "tof" | "cnot", &[control, target]) => Gate::Cnot { control, target },
        ("z", &[q]) => Gate::Z(q),
        ("z", &[a, b]) => Gate::Cz(a, b),
        ("s" | "p", &[q]) => Gate::S(q),
        ("s*" | "p*", &[q]) => Gate::Sdg(q),
        ("t", &[q]) => Gate::T(q),
        ("t*", &[q]) => Gate::Tdg(q),
        _ => return Err(unsupported()),
    };
    Ok(gate)
}

/// Writes `.qc` text. Rotations must be multiples of π/4.
pub fn write_qc(circuit: &Circuit) -> Result<String, CircuitError> {
    let names = circuit.qubit_names();
    let mut out = String::new();
    let _ = writeln!(out, ".v {}", names.join(" "));
    for line in circuit.header() {
        let _ = writeln!(out, "{line}");
    }
    out.push_str("\nBEGIN\n");
    for gate in circuit.gates() {
        let q = |i: usize| names[i].as_str();
        match gate {
            Gate::H(a) => {
                let _ = writeln!(out, "H {}", q(*a));
            }
            Gate::X(a) => {
                let _ = writeln!(out, "X {}", q(*a));
            }
            Gate::Z(a) => {
                let _ = writeln!(out, "Z {}", q(*a));
            }
            Gate::S(a) => {
                let _ = writeln!(out, "S {}", q(*a));
            }
            Gate::Sdg(a) => {
                let _ = writeln!(out, "S* {}", q(*a));
            }
            Gate::T(a) => {
                let _ = writeln!(out, "T {}", q(*a));
            }
            Gate::Tdg(a) => {
                let _ = writeln!(out, "T* {}", q(*a));
            }
            Gate::Cnot { control, target } => {
                let _ = writeln!(out, "tof {} {}", q(*control), q(*target));
            }
            Gate::Cz(a, b) => {
                let _ = writeln!(out, "Z {} {}", q(*a), q(*b));
            }
            Gate::Rz(a, angle) => {
                let k = angle
                    .eighth_turns()
                    .ok_or_else(|| CircuitError::Unrepresentable(angle.to_string()))?;
                let w = q(*a);
                let lines: &[&str] = match k {
                    0 => &[],
                    1 => &["T"],
                    2 => &["S"],
                    3 => &["Z", "T*"],
                    4 => &["Z"],
                    5 => &["Z", "T"],
                    6 => &["S*"],
                    _ => &["T*"],
                };
                for m in lines {
                    let _ = writeln!(out, "{m} {w}");
                }
            }
        }
    }
    out.push_str("END\n");
    Ok(out)
}
