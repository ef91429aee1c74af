//! A small OpenQASM 2 subset: one quantum register and the Clifford+Rz gates.

use std::fmt::Write as _;

use super::{Circuit, CircuitError, Gate};
use crate::angle::Angle;

struct Statement<'a> {
    line: usize,
    text: &'a str,
}

fn statements(source: &str) -> Vec<Statement<'_>> {
    let mut out = Vec::new();
    let mut line = 1;
    for piece in source.split(';') {
        let lead = piece.len() - piece.trim_start().len();
        let start_line = line + piece[..lead].matches('\n').count();
        line += piece.matches('\n').count();
        let text = piece.trim();
        if !text.is_empty() {
            out.push(Statement {
                line: start_line,
                text,
            });
        }
    }
    out
}

fn strip_comments(source: &str) -> String {
    source
        .lines()
        .map(|l| match l.find("//") {
            Some(i) => &l[..i],
            None => l,
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_error(line: usize, message: impl Into<String>) -> CircuitError {
    CircuitError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses `name[index]`.
fn parse_indexed(text: &str, line: usize) -> Result<(&str, usize), CircuitError> {
    let text = text.trim();
    let open = text
        .find('[')
        .ok_or_else(|| parse_error(line, format!("expected `reg[i]`, got `{text}`")))?;
    let close = text
        .strip_suffix(']')
        .ok_or_else(|| parse_error(line, format!("expected `reg[i]`, got `{text}`")))?;
    let index = close[open + 1..]
        .trim()
        .parse()
        .map_err(|_| parse_error(line, format!("bad index in `{text}`")))?;
    Ok((text[..open].trim(), index))
}

pub fn parse_qasm(text: &str) -> Result<Circuit, CircuitError> {
    let source = strip_comments(text);
    let mut register: Option<(String, usize)> = None;
    let mut circuit: Option<Circuit> = None;
    let mut fresh = 0usize;
    for stmt in statements(&source) {
        let line = stmt.line;
        let text = stmt.text;
        let head = text
            .split(|c: char| c.is_whitespace() || c == '(')
            .next()
            .unwrap_or_default();
        match head {
            "OPENQASM" | "include" | "barrier" => continue,
            "creg" => continue,
            "qreg" => {
                if register.is_some() {
                    return Err(CircuitError::UnsupportedGate {
                        line,
                        text: text.to_string(),
                    });
                }
                let (name, size) = parse_indexed(&text[4..], line)?;
                register = Some((name.to_string(), size));
                circuit = Some(Circuit::new(size));
                continue;
            }
            "h" | "x" | "z" | "s" | "sdg" | "t" | "tdg" | "cx" | "cz" | "rz" => {}
            _ => {
                return Err(CircuitError::UnsupportedGate {
                    line,
                    text: text.to_string(),
                })
            }
        }
        let (reg_name, n) = register
            .as_ref()
            .ok_or_else(|| parse_error(line, "gate before qreg declaration"))?;
        let c = circuit.as_mut().expect("register declared");
        let (name, param, args) = split_gate(text, line)?;
        let mut qubits = Vec::new();
        for arg in args.split(',') {
            let (reg, idx) = parse_indexed(arg, line)?;
            if reg != reg_name {
                return Err(CircuitError::UndeclaredWire {
                    line,
                    name: arg.trim().to_string(),
                });
            }
            if idx >= *n {
                return Err(CircuitError::UndeclaredWire {
                    line,
                    name: arg.trim().to_string(),
                });
            }
            qubits.push(idx);
        }
        let unsupported = || CircuitError::UnsupportedGate {
            line,
            text: text.to_string(),
        };
        let gate = match (name, param, qubits.as_slice()) {
            ("h", None, &[q]) => Gate::H(q),
            ("x", None, &[q]) => Gate::X(q),
            ("z", None, &[q]) => Gate::Z(q),
            ("s", None, &[q]) => Gate::S(q),
            ("sdg", None, &[q]) => Gate::Sdg(q),
            ("t", None, &[q]) => Gate::T(q),
            ("tdg", None, &[q]) => Gate::Tdg(q),
            ("cx", None, &[control, target]) => Gate::Cnot { control, target },
            ("cz", None, &[a, b]) => Gate::Cz(a, b),
            ("rz", Some(expr), &[q]) => {
                let angle = Angle::parse_with_floats(expr, || {
                    fresh += 1;
                    format!("_r{fresh}")
                })
                .map_err(|e| parse_error(line, e.to_string()))?;
                Gate::Rz(q, angle)
            }
            _ => return Err(unsupported()),
        };
        c.push(gate).map_err(|e| parse_error(line, e.to_string()))?;
    }
    circuit.ok_or_else(|| parse_error(1, "no qreg declaration"))
}

fn split_gate(text: &str, line: usize) -> Result<(&str, Option<&str>, &str), CircuitError> {
    if let Some(open) = text.find('(') {
        let close = text
            .rfind(')')
            .ok_or_else(|| parse_error(line, "unbalanced parenthesis"))?;
        if close < open {
            return Err(parse_error(line, "unbalanced parenthesis"));
        }
        let name = text[..open].trim();
        Ok((name, Some(&text[open + 1..close]), &text[close + 1..]))
    } else {
        let name = text.split_whitespace().next().unwrap_or_default();
        Ok((name, None, text[name.len()..].trim()))
    }
}

pub fn write_qasm(circuit: &Circuit) -> String {
    let mut out = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(out, "qreg q[{}];", circuit.n_qubits());
    for gate in circuit.gates() {
        let _ = match gate {
            Gate::H(q) => writeln!(out, "h q[{q}];"),
            Gate::X(q) => writeln!(out, "x q[{q}];"),
            Gate::Z(q) => writeln!(out, "z q[{q}];"),
            Gate::S(q) => writeln!(out, "s q[{q}];"),
            Gate::Sdg(q) => writeln!(out, "sdg q[{q}];"),
            Gate::T(q) => writeln!(out, "t q[{q}];"),
            Gate::Tdg(q) => writeln!(out, "tdg q[{q}];"),
            Gate::Cnot { control, target } => writeln!(out, "cx q[{control}],q[{target}];"),
            Gate::Cz(a, b) => writeln!(out, "cz q[{a}],q[{b}];"),
            Gate::Rz(q, angle) => writeln!(out, "rz({angle}) q[{q}];"),
        };
    }
    out
}
