//! Isobaric types of `Sym⁶(π)` in the tetrahedral, octahedral and icosahedral
//! cases, derived by block bookkeeping on machine-verified ring identities.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::expr::{eval_expr, parse_expr, verify_identity, IdentityCheck};
use super::{RingElem, RingError};

/// Partition of a dimension into cuspidal block sizes, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsobaricType(Vec<u32>);

impl IsobaricType {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IsobaricType(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for IsobaricType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sym6Case {
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl Sym6Case {
    pub const ALL: [Sym6Case; 3] = [Sym6Case::Tetrahedral, Sym6Case::Octahedral, Sym6Case::Icosahedral];

    pub fn name(self) -> &'static str {
        match self {
            Sym6Case::Tetrahedral => "tetrahedral",
            Sym6Case::Octahedral => "octahedral",
            Sym6Case::Icosahedral => "icosahedral",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Debug, Clone)]
pub struct CertifiedIdentity {
    pub name: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub check: IdentityCheck,
}

#[derive(Debug, Clone)]
pub struct Sym6Certificate {
    pub case: Sym6Case,
    /// The decomposition hypothesis of the case, as a ring statement.
    pub hypothesis: &'static str,
    pub identities: Vec<CertifiedIdentity>,
    /// `Sym⁶` plus `known` equals `expansion` under the hypothesis.
    pub known: &'static str,
    pub expansion: String,
    pub rules: Vec<&'static str>,
    pub dimension_checks: Vec<(&'static str, i64, i64)>,
}

impl Sym6Certificate {
    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(|i| i.check.holds) && self.dimension_checks.iter().all(|(_, a, b)| a == b)
    }
}

struct CaseSpec {
    hypothesis: &'static str,
    identities: &'static [(&'static str, &'static str, &'static str)],
    /// Ring expression equal to `Sym⁶ + known` once the hypothesis is substituted.
    substituted: &'static str,
    known: &'static str,
    /// Largest `a` for which `Sym^a(π)` is taken as cuspidal.
    cuspidal_up_to: u32,
    /// Dimension checks `(label, lhs expression, rhs expression)`.
    dims: &'static [(&'static str, &'static str, &'static str)],
}

const RULE_TWIST: &str = "a twist of a cuspidal Sym^a(pi) (or Sym^a(pi2)) is one cuspidal block of dimension a+1";
const RULE_TENSOR: &str = "pi*pi expands as Sym[2](pi) + w: a 3-block and a 1-block";
const RULE_PRODUCT: &str =
    "the 9-dimensional Sym[2](pi)*Sym[2](pi2) is only known to contain a 5-block, which supplies w*Sym[4](pi); \
     the rest is any partition of 4";
const RULE_CANCEL: &str = "isobaric decompositions are unique, so the blocks of the known summand cancel";

fn spec(case: Sym6Case) -> CaseSpec {
    match case {
        Sym6Case::Tetrahedral => CaseSpec {
            hypothesis: "Sym[3](pi) = x1*pi + x2*pi",
            identities: &[
                ("sym2-of-sym3", "Sym[2](Sym[3](pi))", "Sym[6](pi) + w^2*Sym[2](pi)"),
                (
                    "sym2-of-split-sym3",
                    "Sym[2](x1*pi + x2*pi)",
                    "x1^2*Sym[2](pi) + x2^2*Sym[2](pi) + x1*x2*pi*pi",
                ),
                ("pi-squared", "pi*pi", "Sym[2](pi) + w"),
            ],
            substituted: "Sym[2](x1*pi + x2*pi)",
            known: "w^2*Sym[2](pi)",
            cuspidal_up_to: 2,
            dims: &[
                ("Sym[3] hypothesis", "Sym[3](pi)", "x1*pi + x2*pi"),
                ("substitution", "Sym[6](pi) + w^2*Sym[2](pi)", "Sym[2](x1*pi + x2*pi)"),
            ],
        },
        Sym6Case::Octahedral => CaseSpec {
            hypothesis: "Sym[4](pi) = x1*pi + x2*Sym[2](pi)",
            identities: &[
                ("ext2-of-sym4", "Ext[2](Sym[4](pi))", "w*Sym[6](pi) + w^3*Sym[2](pi)"),
                (
                    "ext2-of-split-sym4",
                    "Ext[2](x1*pi + x2*Sym[2](pi))",
                    "x1^2*Ext[2](pi) + x2^2*Ext[2](Sym[2](pi)) + x1*x2*pi*Sym[2](pi)",
                ),
                ("pi-times-sym2", "pi*Sym[2](pi)", "Sym[3](pi) + w*pi"),
            ],
            substituted: "Ext[2](x1*pi + x2*Sym[2](pi))",
            known: "w^3*Sym[2](pi)",
            cuspidal_up_to: 3,
            dims: &[
                ("Sym[4] hypothesis", "Sym[4](pi)", "x1*pi + x2*Sym[2](pi)"),
                ("substitution", "w*Sym[6](pi) + w^3*Sym[2](pi)", "Ext[2](x1*pi + x2*Sym[2](pi))"),
            ],
        },
        Sym6Case::Icosahedral => CaseSpec {
            hypothesis: "Sym[5](pi) = chi*pi*Sym[2](pi2)",
            identities: &[
                ("pi-times-sym5", "pi*Sym[5](pi)", "Sym[6](pi) + w*Sym[4](pi)"),
                ("pi-times-split-sym5", "pi*(chi*pi*Sym[2](pi2))", "chi*pi*pi*Sym[2](pi2)"),
                ("regroup", "chi*pi*pi*Sym[2](pi2)", "chi*(w + Sym[2](pi))*Sym[2](pi2)"),
            ],
            substituted: "pi*(chi*pi*Sym[2](pi2))",
            known: "w*Sym[4](pi)",
            cuspidal_up_to: 5,
            dims: &[
                ("Sym[5] hypothesis", "Sym[5](pi)", "chi*pi*Sym[2](pi2)"),
                ("substitution", "Sym[6](pi) + w*Sym[4](pi)", "pi*(chi*pi*Sym[2](pi2))"),
            ],
        },
    }
}

fn eval_str(s: &str) -> Result<RingElem, RingError> {
    eval_expr(&parse_expr(s)?)
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Possible block lists for each basis term of a ring element.
fn block_options(e: &RingElem, case: Sym6Case, cusp: u32) -> Result<Vec<Vec<Vec<u32>>>, RingError> {
    let mut out = Vec::new();
    for (k, &c) in e.terms() {
        if c < 0 {
            return Err(RingError::Bookkeeping(alloc::format!("negative multiplicity in {e}")));
        }
        let opts: Vec<Vec<u32>> = match (k.a, k.a2) {
            (0, 0) => vec![vec![1]],
            (a, 0) if a <= cusp => vec![vec![a + 1]],
            (0, b) if case == Sym6Case::Icosahedral && b <= 2 => vec![vec![b + 1]],
            (2, 2) if case == Sym6Case::Icosahedral => partitions(4, 4)
                .into_iter()
                .map(|mut p| {
                    p.push(5);
                    p
                })
                .collect(),
            _ => {
                return Err(RingError::Bookkeeping(alloc::format!(
                    "no cuspidality rule for Sym[{}](pi)*Sym[{}](pi2)",
                    k.a,
                    k.a2
                )))
            }
        };
        for _ in 0..c {
            out.push(opts.clone());
        }
    }
    Ok(out)
}

fn remove_blocks(mut from: Vec<u32>, blocks: &[u32]) -> Option<Vec<u32>> {
    for b in blocks {
        let i = from.iter().position(|x| x == b)?;
        from.remove(i);
    }
    Some(from)
}

/// Admissible isobaric types of `Sym⁶(π)` for the case, with a certificate.
pub fn sym6_isobaric_types(case: Sym6Case) -> Result<(BTreeSet<IsobaricType>, Sym6Certificate), RingError> {
    let sp = spec(case);
    let identities = sp
        .identities
        .iter()
        .map(|&(name, lhs, rhs)| Ok(CertifiedIdentity { name, lhs, rhs, check: verify_identity(lhs, rhs)? }))
        .collect::<Result<Vec<_>, RingError>>()?;
    let dimension_checks = sp
        .dims
        .iter()
        .map(|&(label, l, r)| Ok((label, eval_str(l)?.dim(), eval_str(r)?.dim())))
        .collect::<Result<Vec<_>, RingError>>()?;

    let expansion = eval_str(sp.substituted)?;
    let known = eval_str(sp.known)?;
    let known_blocks: Vec<u32> = block_options(&known, case, sp.cuspidal_up_to)?
        .into_iter()
        .flat_map(|o| o.into_iter().next().expect("known summand has fixed blocks"))
        .collect();

    let options = block_options(&expansion, case, sp.cuspidal_up_to)?;
    let mut combos: Vec<Vec<u32>> = vec![Vec::new()];
    for opts in &options {
        let mut next = Vec::new();
        for base in &combos {
            for o in opts {
                let mut v = base.clone();
                v.extend_from_slice(o);
                next.push(v);
            }
        }
        combos = next;
    }
    let types: BTreeSet<IsobaricType> = combos
        .into_iter()
        .filter_map(|blocks| remove_blocks(blocks, &known_blocks))
        .map(IsobaricType::new)
        .filter(|t| t.dim() == 7)
        .collect();

    let mut rules = vec![RULE_TWIST];
    match case {
        Sym6Case::Tetrahedral => rules.push(RULE_TENSOR),
        Sym6Case::Octahedral => {}
        Sym6Case::Icosahedral => rules.push(RULE_PRODUCT),
    }
    rules.push(RULE_CANCEL);
    let cert = Sym6Certificate {
        case,
        hypothesis: sp.hypothesis,
        identities,
        known: sp.known,
        expansion: alloc::format!("{expansion}"),
        rules,
        dimension_checks,
    };
    Ok((types, cert))
}

/// `SU(2)` ladder for `n`: the three expressions
/// `[n+2]*[n] + [1]`, `Ext[2]([n+2]) + Sym[2]([n])` and `[1] + [3] + … + [2n+1]`,
/// with whether all three agree.
pub fn su2_ladder(n: u32) -> Result<([String; 3], bool), RingError> {
    let a = alloc::format!("[{}]*[{}] + [1]", n + 2, n);
    let b = alloc::format!("Ext[2]([{}]) + Sym[2]([{}])", n + 2, n);
    let c = (0..=n).map(|k| alloc::format!("[{}]", 2 * k + 1)).collect::<Vec<_>>().join(" + ");
    let ok = verify_identity(&a, &b)?.holds && verify_identity(&b, &c)?.holds;
    Ok(([a, b, c], ok))
}
