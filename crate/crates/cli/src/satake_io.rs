//! JSONL Satake data. One record per line, either
//! `{"p": 5, "params": [[re, im], ...]}` or the unitary `GL₂` shorthand
//! `{"p": 5, "ap": [re, im], "unitary": true}`, meaning the two roots of
//! `x² − a_p x + 1`.

use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use repcontain_core::satake::{sort_records, SatakeRecord};

use crate::error::{CliError, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Line {
    p: u64,
    params: Option<Vec<[f64; 2]>>,
    ap: Option<[f64; 2]>,
    unitary: Option<bool>,
}

/// Roots of `x² − a x + 1`, the `+√` root first.
pub fn unitary_roots(a: Complex64) -> [Complex64; 2] {
    let disc = (a * a - 4.0).sqrt();
    [(a + disc) / 2.0, (a - disc) / 2.0]
}

fn record(n: usize, line: &str) -> Result<SatakeRecord> {
    let at = |m: String| CliError::usage(format!("line {n}: {m}"));
    let l: Line = serde_json::from_str(line).map_err(|e| at(e.to_string()))?;
    let params = match (l.params, l.ap, l.unitary) {
        (Some(ps), None, None) => ps.iter().map(|&[re, im]| Complex64::new(re, im)).collect(),
        (None, Some([re, im]), Some(true)) => unitary_roots(Complex64::new(re, im)).to_vec(),
        (None, Some(_), _) => return Err(at("the ap shorthand requires \"unitary\": true".into())),
        _ => return Err(at("expected exactly one of \"params\" or \"ap\"".into())),
    };
    SatakeRecord::new(l.p, params).map_err(|e| at(e.to_string()))
}

pub fn parse_satake(text: &str) -> Result<Vec<SatakeRecord>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if !line.trim().is_empty() {
            out.push(record(i + 1, line)?);
        }
    }
    sort_records(out).map_err(|e| CliError::usage(e.to_string()))
}

pub fn load_satake(path: &Path) -> Result<Vec<SatakeRecord>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_satake(&text)
}
