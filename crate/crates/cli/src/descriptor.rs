//! Group descriptors: `sym:N`, `alt:N`, `cyclic:N`, `dihedral:N`, `quaternion`,
//! `gl2:Q`, `sl2:Q`, `pgl2:Q` and `perm:<file>`.
//!
//! A permutation file holds one generator per line in cycle notation on the
//! points `0..n`, e.g. `(0 1 2)(3 4)`. Blank lines and lines starting with `#`
//! are skipped; the degree is one more than the largest point mentioned.

use std::path::Path;

use repcontain_core::groups::{
    alternating, cyclic, dihedral, gl2, group_closure, parse_cycles, pgl2, quaternion, sl2, symmetric, Group,
    GroupElement, Perm,
};

use crate::error::{CliError, Result};

/// The groups every suite runs over.
pub const CATALOG: [&str; 12] = [
    "sym:3", "sym:4", "sym:5", "alt:5", "sl2:3", "sl2:5", "gl2:3", "gl2:5", "pgl2:5", "quaternion", "dihedral:4",
    "cyclic:12",
];

fn number(kind: &str, arg: &str) -> Result<u32> {
    arg.parse().map_err(|_| CliError::usage(format!("{kind}: expected a positive integer, got '{arg}'")))
}

pub fn parse_group(desc: &str, max_order: usize) -> Result<Group> {
    let (kind, arg) = desc.split_once(':').unwrap_or((desc, ""));
    let g = match kind {
        "sym" => symmetric(number(kind, arg)?, max_order)?,
        "alt" => alternating(number(kind, arg)?, max_order)?,
        "cyclic" => cyclic(number(kind, arg)?, max_order)?,
        "dihedral" => dihedral(number(kind, arg)?, max_order)?,
        "quaternion" if arg.is_empty() => quaternion(max_order)?,
        "gl2" => gl2(number(kind, arg)?, max_order)?,
        "sl2" => sl2(number(kind, arg)?, max_order)?,
        "pgl2" => pgl2(number(kind, arg)?, max_order)?,
        "perm" => load_perm_group(Path::new(arg), max_order)?,
        _ => return Err(CliError::usage(format!("unknown group descriptor '{desc}'"))),
    };
    Ok(g)
}

pub fn parse_perm_generators(text: &str) -> Result<Vec<GroupElement>> {
    let mut cycles = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let c = parse_cycles(line).map_err(|e| CliError::usage(format!("line {}: {e}", n + 1)))?;
        cycles.push((n + 1, c));
    }
    let degree = cycles.iter().flat_map(|(_, c)| c.iter().flatten()).map(|&p| p as usize + 1).max().unwrap_or(1);
    cycles
        .iter()
        .map(|(n, c)| {
            Perm::from_cycles(degree, c)
                .map(GroupElement::from)
                .map_err(|e| CliError::usage(format!("line {n}: {e}")))
        })
        .collect()
}

pub fn load_perm_group(path: &Path, max_order: usize) -> Result<Group> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let gens = parse_perm_generators(&text)?;
    Ok(group_closure(&gens, max_order)?)
}
