//! The eigenvalue-containment relation `V₁ ≼ V₂`: for every group element the
//! eigenvalues on `V₁`, with multiplicity, occur among those on `V₂`.

use alloc::vec::Vec;

use crate::chartab::{CharacterTable, ClassFunction};
use crate::lambda::{eigen_multiset, multiplicities, Deficit, EigenMultiset, LambdaError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PreceqError {
    #[error("class functions belong to different groups")]
    GroupMismatch,
    #[error("input is not a genuine character (class {class})")]
    Virtual { class: usize },
    #[error(transparent)]
    Lambda(#[from] LambdaError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub class: usize,
    pub deficit: Deficit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreceqReport {
    pub holds: bool,
    /// Least failing class and, within it, the least short eigenvalue.
    pub witness: Option<Witness>,
}

fn multisets(chi: &ClassFunction) -> Result<Vec<EigenMultiset>, PreceqError> {
    (0..chi.group().num_classes())
        .map(|c| {
            eigen_multiset(chi, c).map_err(|e| match e {
                LambdaError::BadMultiplicity { class } | LambdaError::NonIntegral { class } => {
                    PreceqError::Virtual { class }
                }
                other => other.into(),
            })
        })
        .collect()
}

fn compare(small: &[EigenMultiset], big: &[EigenMultiset]) -> PreceqReport {
    for (c, (a, b)) in small.iter().zip(big).enumerate() {
        if let Some(deficit) = a.deficit_against(b) {
            return PreceqReport { holds: false, witness: Some(Witness { class: c, deficit }) };
        }
    }
    PreceqReport { holds: true, witness: None }
}

pub fn preceq_check(a: &ClassFunction, b: &ClassFunction) -> Result<PreceqReport, PreceqError> {
    if !a.same_group(b) {
        return Err(PreceqError::GroupMismatch);
    }
    Ok(compare(&multisets(a)?, &multisets(b)?))
}

/// Dimension gap `dim χ_j − dim χ_i` accepted by a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gap {
    Exact(u32),
    Any,
}

impl Gap {
    fn admits(self, small: i64, big: i64) -> bool {
        match self {
            Gap::Exact(k) => big - small == k as i64,
            Gap::Any => big >= small,
        }
    }
}

/// Eigen multisets of every row at every class, indexed `[row][class]`.
pub struct MultisetCache {
    rows: Vec<Vec<EigenMultiset>>,
}

impl MultisetCache {
    pub fn new(table: &CharacterTable) -> Result<Self, PreceqError> {
        let rows = table.irreducibles().iter().map(multisets).collect::<Result<_, _>>()?;
        Ok(MultisetCache { rows })
    }

    pub fn row(&self, i: usize) -> &[EigenMultiset] {
        &self.rows[i]
    }
}

/// All ordered pairs `(i, j)`, `i ≠ j`, of irreducibles with `χ_i ≼ χ_j` and
/// the requested dimension gap, sorted.
pub fn preceq_search(table: &CharacterTable, gap: Gap) -> Result<Vec<(usize, usize)>, PreceqError> {
    let cache = MultisetCache::new(table)?;
    Ok(search_with_cache(table, &cache, gap))
}

pub fn search_with_cache(table: &CharacterTable, cache: &MultisetCache, gap: Gap) -> Vec<(usize, usize)> {
    let dims = table.dims();
    let mut out = Vec::new();
    for i in 0..table.len() {
        for j in 0..table.len() {
            if i != j && gap.admits(dims[i], dims[j]) && compare(cache.row(i), cache.row(j)).holds {
                out.push((i, j));
            }
        }
    }
    out
}

/// Like [`preceq_search`] but with arbitrary genuine characters (for example
/// reducible ones given by an explicit decomposition) as the smaller side.
/// Returns `(source index, irreducible index)` pairs.
pub fn preceq_search_from(
    table: &CharacterTable,
    sources: &[ClassFunction],
    gap: Gap,
) -> Result<Vec<(usize, usize)>, PreceqError> {
    let cache = MultisetCache::new(table)?;
    let dims = table.dims();
    let mut out = Vec::new();
    for (s, chi) in sources.iter().enumerate() {
        if !alloc::sync::Arc::ptr_eq(chi.group(), table.group()) {
            return Err(PreceqError::GroupMismatch);
        }
        let d = chi.dim().ok_or(PreceqError::Virtual { class: 0 })?;
        let ms = multisets(chi)?;
        for j in 0..table.len() {
            if gap.admits(d, dims[j]) && table.irreducible(j) != chi && compare(&ms, cache.row(j)).holds {
                out.push((s, j));
            }
        }
    }
    Ok(out)
}

/// `a` is a direct summand of `b`: every multiplicity of `a` is at most that of `b`.
pub fn is_summand(a: &ClassFunction, b: &ClassFunction, table: &CharacterTable) -> Result<bool, PreceqError> {
    let (ma, mb) = (multiplicities(a, table)?, multiplicities(b, table)?);
    Ok(ma.iter().zip(&mb).all(|(x, y)| x <= y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{character_table_generic, character_table_gl2_closed_form, IrrLabel, DEFAULT_MAX_CLASSES};
    use crate::groups::{alternating, pgl2, sl2, symmetric, DEFAULT_MAX_ORDER as B};
    use crate::lambda::{cf_add, cf_sub, cf_tensor, symmetric_power};
    use proptest::prelude::*;

    #[test]
    fn reflexive_and_rejects_virtual() {
        let g = symmetric(3, B).unwrap();
        let t = character_table_generic(&g, DEFAULT_MAX_CLASSES).unwrap();
        for chi in t.irreducibles() {
            assert!(preceq_check(chi, chi).unwrap().holds);
        }
        let virt = cf_sub(t.irreducible(0), t.irreducible(2)).unwrap();
        assert!(matches!(preceq_check(&virt, t.irreducible(2)), Err(PreceqError::Virtual { .. })));
        let r = preceq_check(t.irreducible(2), t.irreducible(0)).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness.unwrap().class, 0);
    }

    #[test]
    fn gl2_f5_cuspidal_below_principal_series() {
        let t = character_table_gl2_closed_form(5).unwrap();
        let mut checked = 0;
        for i in 0..t.len() {
            for j in 0..t.len() {
                let (IrrLabel::Cuspidal(_), IrrLabel::PrincipalSeries(..)) = (t.label(i), t.label(j)) else {
                    continue;
                };
                let r = preceq_check(t.irreducible(i), t.irreducible(j)).unwrap();
                assert_eq!(r.holds, t.central_character(i) == t.central_character(j));
                checked += 1;
            }
        }
        assert_eq!(checked, 10 * 6);
    }

    #[test]
    fn sl2_f5_sym3_below_sym5() {
        let g = sl2(5, B).unwrap();
        let t = character_table_generic(&g, DEFAULT_MAX_CLASSES).unwrap();
        let sigma = t.irreducibles().iter().find(|c| c.dim() == Some(2)).unwrap();
        assert!(preceq_check(&symmetric_power(sigma, 3), &symmetric_power(sigma, 5)).unwrap().holds);
        let found = preceq_search_from(&t, &[symmetric_power(sigma, 3)], Gap::Exact(2)).unwrap();
        assert!(!found.is_empty());
    }

    #[test]
    fn search_examples() {
        for g in [symmetric(4, B).unwrap(), alternating(5, B).unwrap()] {
            let t = character_table_generic(&g, DEFAULT_MAX_CLASSES).unwrap();
            assert!(preceq_search(&t, Gap::Exact(0)).unwrap().is_empty());
            assert!(preceq_search(&t, Gap::Exact(1)).unwrap().is_empty());
        }
        let g = pgl2(5, B).unwrap();
        let t = character_table_generic(&g, DEFAULT_MAX_CLASSES).unwrap();
        let pairs = preceq_search(&t, Gap::Exact(2)).unwrap();
        let dims = t.dims();
        assert!(pairs.iter().any(|&(i, j)| dims[i] == 4 && dims[j] == 6));
        let any = preceq_search(&t, Gap::Any).unwrap();
        assert!(pairs.iter().all(|p| any.contains(p)));
    }

    #[test]
    fn summand_implies_preceq_but_not_conversely() {
        let t = character_table_gl2_closed_form(5).unwrap();
        let c = t.find(&IrrLabel::Cuspidal(1)).unwrap();
        let p = (0..t.len())
            .find(|&j| {
                matches!(t.label(j), IrrLabel::PrincipalSeries(..)) && t.central_character(j) == t.central_character(c)
            })
            .unwrap();
        let (c, p) = (t.irreducible(c), t.irreducible(p));
        assert!(preceq_check(c, p).unwrap().holds);
        assert!(!is_summand(c, p, &t).unwrap());
        let sum = cf_add(c, p).unwrap();
        assert!(is_summand(c, &sum, &t).unwrap());
        assert!(preceq_check(c, &sum).unwrap().holds);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn twist_equivariance(i in 0usize..20, j in 0usize..20, l in 0usize..20) {
            let g = symmetric(4, B).unwrap();
            let t = character_table_generic(&g, DEFAULT_MAX_CLASSES).unwrap();
            let n = t.len();
            let lins: Vec<usize> = (0..n).filter(|&k| t.irreducible(k).dim() == Some(1)).collect();
            let lam = t.irreducible(lins[l % lins.len()]);
            let (a, b) = (t.irreducible(i % n), t.irreducible(j % n));
            let plain = preceq_check(a, b).unwrap().holds;
            let twisted = preceq_check(&cf_tensor(lam, a).unwrap(), &cf_tensor(lam, b).unwrap()).unwrap().holds;
            prop_assert_eq!(plain, twisted);
        }

        #[test]
        fn transitivity(picks in proptest::collection::vec(0usize..10, 3)) {
            let g = sl2(3, B).unwrap();
            let t = character_table_generic(&g, DEFAULT_MAX_CLASSES).unwrap();
            let a = t.irreducible(picks[0] % t.len()).clone();
            let b = cf_add(&a, t.irreducible(picks[1] % t.len())).unwrap();
            let c = cf_add(&b, t.irreducible(picks[2] % t.len())).unwrap();
            prop_assert!(preceq_check(&a, &b).unwrap().holds);
            prop_assert!(preceq_check(&b, &c).unwrap().holds);
            prop_assert!(preceq_check(&a, &c).unwrap().holds);
        }
    }
}
