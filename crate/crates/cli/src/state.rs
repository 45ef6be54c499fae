use std::fs;
use std::path::Path;

use catalyst_core::{OscVector, Tolerance};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// On-disk state: `{"name": ..., "coeffs": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub name: String,
    pub coeffs: Vec<f64>,
}

impl StateFile {
    pub fn to_osc(&self, tol: &Tolerance) -> Result<OscVector, catalyst_core::Error> {
        OscVector::new(&self.coeffs, tol)
    }
}

/// Reads and validates a state file; returns the raw bytes for digesting.
pub fn read_state(
    path: &Path,
    tol: &Tolerance,
) -> Result<(StateFile, OscVector, Vec<u8>), CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
    let file: StateFile = serde_json::from_slice(&bytes).map_err(|e| CliError::parse(path, e))?;
    let osc = file
        .to_osc(tol)
        .map_err(|e| CliError::state(path, &file.name, e))?;
    Ok((file, osc, bytes))
}
