//! CSV and JSON-lines formats for experiment outputs.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::catalysis::{RegionGrid, TransformQuery};
use crate::error::Result;
use crate::schmidt::OscVector;

use super::curve::CurvePoint;
use super::pairs::CatalyzablePair;

#[derive(Serialize)]
struct CurveRow {
    #[serde(rename = "M")]
    big_number: u64,
    success_fraction: f64,
    pairs: usize,
    seed: u64,
}

/// Columns `M,success_fraction,pairs,seed`.
pub fn write_curve_csv<W: Write>(out: W, points: &[CurvePoint]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for p in points {
        w.serialize(CurveRow {
            big_number: p.big_number,
            success_fraction: p.success_fraction,
            pairs: p.pairs,
            seed: p.seed,
        })?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize, Deserialize)]
pub struct RegionRow {
    pub x1p: f64,
    pub x2p: f64,
    pub valid: bool,
    pub feasible: bool,
}

/// Columns `x1p,x2p,valid,feasible`, one row per cell center, row-major.
pub fn write_region_csv<W: Write>(out: W, grid: &RegionGrid) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for (_, _, x1p, x2p, valid, feasible) in grid.cells() {
        w.serialize(RegionRow {
            x1p,
            x2p,
            valid,
            feasible,
        })?;
    }
    w.flush()?;
    Ok(())
}

/// One line of the pair archive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairRecord {
    pub index: usize,
    pub attempt: u64,
    pub seed: u64,
    pub psi: OscVector,
    pub phi: OscVector,
    pub witness: OscVector,
}

impl PairRecord {
    pub fn new(pair: &CatalyzablePair, seed: u64) -> Self {
        PairRecord {
            index: pair.index,
            attempt: pair.attempt,
            seed,
            psi: pair.query.psi.clone(),
            phi: pair.query.phi.clone(),
            witness: pair.witness.clone(),
        }
    }

    pub fn into_pair(self) -> CatalyzablePair {
        CatalyzablePair {
            index: self.index,
            attempt: self.attempt,
            query: TransformQuery::new(self.psi, self.phi),
            witness: self.witness,
        }
    }
}

pub fn write_pairs_jsonl<W: Write>(mut out: W, pairs: &[CatalyzablePair], seed: u64) -> Result<()> {
    for p in pairs {
        serde_json::to_writer(&mut out, &PairRecord::new(p, seed))?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

/// Reads an archive written by [`write_pairs_jsonl`]; blank lines are skipped.
pub fn read_pairs_jsonl<R: BufRead>(input: R) -> Result<Vec<PairRecord>> {
    let mut records = Vec::new();
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        records.push(serde_json::from_str(&line)?);
    }
    Ok(records)
}
