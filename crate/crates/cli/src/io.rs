use std::fs;
use std::path::Path;

use clap::ValueEnum;
use rotmerge::circuit::{parse_qasm, parse_qc, write_qasm, write_qc, Circuit};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Qc,
    Qasm,
    Auto,
}

impl Format {
    /// `.qasm` files are OpenQASM, everything else is `.qc`.
    pub fn resolve(self, path: Option<&Path>) -> Format {
        match self {
            Format::Auto => match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
                Some(ext) if ext.eq_ignore_ascii_case("qasm") => Format::Qasm,
                _ => Format::Qc,
            },
            f => f,
        }
    }
}

pub fn read_circuit(path: &Path, format: Format) -> Result<Circuit, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let parsed = match format.resolve(Some(path)) {
        Format::Qasm => parse_qasm(&text),
        _ => parse_qc(&text),
    };
    parsed.map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub fn render_circuit(circuit: &Circuit, format: Format) -> Result<String, CliError> {
    match format {
        Format::Qasm => Ok(write_qasm(circuit)),
        _ => write_qc(circuit).map_err(|e| CliError::input(format!("{e}; try --format qasm"))),
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}
