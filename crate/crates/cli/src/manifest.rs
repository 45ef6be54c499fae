use std::fs;
use std::path::{Path, PathBuf};

use catalyst_core::Tolerance;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

impl FileDigest {
    pub fn of_bytes(path: &Path, bytes: &[u8]) -> Self {
        FileDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

/// Provenance record written next to every output file.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub argv: Vec<String>,
    pub seed: u64,
    pub tolerance: Tolerance,
    pub parameters: Value,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
}

impl RunManifest {
    pub fn new(command: &str, seed: u64, tolerance: Tolerance, parameters: Value) -> Self {
        RunManifest {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            argv: std::env::args().collect(),
            seed,
            tolerance,
            parameters,
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    pub fn add_input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs.push(FileDigest::of_bytes(path, bytes));
    }

    /// Writes `bytes` to `dir/name` and records its digest.
    pub fn write_output(
        &mut self,
        dir: &Path,
        name: &str,
        bytes: &[u8],
    ) -> Result<PathBuf, CliError> {
        let path = dir.join(name);
        fs::write(&path, bytes).map_err(|e| CliError::io(&path, e))?;
        self.outputs.push(FileDigest::of_bytes(&path, bytes));
        Ok(path)
    }

    /// Writes the manifest as `dir/<stem>.manifest.json`.
    pub fn finish(&self, dir: &Path, stem: &str) -> Result<PathBuf, CliError> {
        let path = dir.join(format!("{stem}.manifest.json"));
        let mut text = serde_json::to_vec_pretty(self)?;
        text.push(b'\n');
        fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
        Ok(path)
    }
}
