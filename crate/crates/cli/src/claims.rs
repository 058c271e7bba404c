//! The claim registry: a checked-in manifest of `{id, quote, kind, params,
//! expected}` entries. `kind` selects one of the pinned computations below;
//! a claim matches when every key of `expected` equals the observed value.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use repcontain_core::chartab::{char_inner, CharacterTable, ClassFunction, IrrLabel};
use repcontain_core::exact::CycNum;
use repcontain_core::gl2ring::{su2_ladder, sym6_isobaric_types, verify_identity, Sym6Case};
use repcontain_core::lambda::{
    cf_add, cf_tensor, eigen_multiset, exterior_power, exterior_powers, symmetric_power, symmetric_powers,
};
use repcontain_core::preceq::{preceq_check, preceq_search, Gap};
use repcontain_core::satake::{check_containment, SatakeRecord};

use crate::descriptor::CATALOG;
use crate::error::{CliError, Result};
use crate::facts::gl2_restriction_facts;
use crate::tables::{table_for, tables_for, Config, Method};

const MANIFEST: &str = include_str!("../claims.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Claim {
    pub id: String,
    pub quote: String,
    pub kind: String,
    pub params: Value,
    pub expected: Value,
}

pub fn registry() -> Vec<Claim> {
    serde_json::from_str(MANIFEST).expect("claim manifest is valid JSON")
}

pub fn find(id: &str) -> Result<Claim> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| CliError::usage(format!("unknown claim '{id}' (see `reproduce --list`)")))
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub observed: Value,
    /// `(key, expected, observed)` for every mismatching key.
    pub diff: Vec<(String, Value, Value)>,
}

impl Outcome {
    pub fn matches(&self) -> bool {
        self.diff.is_empty()
    }
}

pub fn report(claim: &Claim, out: &Outcome, cfg: &Config) -> Value {
    json!({
        "id": claim.id,
        "quote": claim.quote,
        "kind": claim.kind,
        "params": claim.params,
        "seed": cfg.seed,
        "expected": claim.expected,
        "observed": out.observed,
        "match": out.matches(),
        "diff": out.diff.iter().map(|(k, e, o)| json!({"key": k, "expected": e, "observed": o})).collect::<Vec<_>>(),
    })
}

pub fn run(claim: &Claim, cfg: &Config) -> Result<Outcome> {
    let p = &claim.params;
    let observed = match claim.kind.as_str() {
        "gl2-cuspidal-below-principal" => gl2_cuspidal(uint(p, "q")? as u32, cfg)?,
        "preceq-search-catalog" => search_catalog(gap(p)?, cfg)?,
        "sl2-symmetric-powers" => sl2_powers(uint(p, "q")? as u32, cfg)?,
        "preceq-search-dims" => search_dims(string(p, "group")?, gap(p)?, cfg)?,
        "sym6" => sym6(string(p, "case")?)?,
        "ring-identities" => ring_identities(p)?,
        "su2-ladder" => ladder(uint(p, "n_max")? as u32)?,
        "unit-eigenvalue-criterion" => unit_eigenvalue(uint(p, "dim")? as i64, cfg)?,
        "lemma-identity" => lemma(uint(p, "pairs")? as usize, cfg)?,
        "newton-vs-eigenvalues" => {
            newton(uint(p, "k_max")? as usize, uint(p, "max_dim")? as i64, uint(p, "max_order")? as usize, cfg)?
        }
        "table-validity" => validity(p, cfg)?,
        "satake-ladder" => satake_ladder(uint(p, "records")? as usize, uint(p, "n_max")? as u32, float(p, "tol")?, cfg)?,
        other => return Err(CliError::usage(format!("claim kind '{other}' is not implemented"))),
    };
    let mut diff = Vec::new();
    if let Value::Object(exp) = &claim.expected {
        for (k, e) in exp {
            let o = observed.get(k).cloned().unwrap_or(Value::Null);
            if &o != e {
                diff.push((k.clone(), e.clone(), o));
            }
        }
    }
    Ok(Outcome { observed, diff })
}

fn field<'a>(p: &'a Value, key: &str) -> Result<&'a Value> {
    p.get(key).ok_or_else(|| CliError::usage(format!("claim parameter '{key}' missing")))
}

fn uint(p: &Value, key: &str) -> Result<u64> {
    field(p, key)?.as_u64().ok_or_else(|| CliError::usage(format!("claim parameter '{key}' is not an integer")))
}

fn float(p: &Value, key: &str) -> Result<f64> {
    field(p, key)?.as_f64().ok_or_else(|| CliError::usage(format!("claim parameter '{key}' is not a number")))
}

fn string<'a>(p: &'a Value, key: &str) -> Result<&'a str> {
    field(p, key)?.as_str().ok_or_else(|| CliError::usage(format!("claim parameter '{key}' is not a string")))
}

fn gap(p: &Value) -> Result<Gap> {
    match field(p, "gap")? {
        Value::String(s) if s == "any" => Ok(Gap::Any),
        v => v.as_u64().map(|k| Gap::Exact(k as u32)).ok_or_else(|| CliError::usage("bad gap")),
    }
}

fn gl2_cuspidal(q: u32, cfg: &Config) -> Result<Value> {
    let t = table_for(&format!("gl2:{q}"), Method::ClosedForm, cfg)?;
    let (mut equal, mut all_hold, mut facts_hold, mut unequal_holding, mut elements) = (0, true, true, 0, 0);
    for c in 0..t.len() {
        for p in 0..t.len() {
            let (IrrLabel::Cuspidal(_), IrrLabel::PrincipalSeries(..)) = (t.label(c), t.label(p)) else { continue };
            let holds = preceq_check(t.irreducible(c), t.irreducible(p))?.holds;
            if t.central_character(c) == t.central_character(p) {
                equal += 1;
                all_hold &= holds;
                let r = gl2_restriction_facts(&t, c, p)?;
                elements += r.elements_checked;
                facts_hold &= r.failures.is_empty();
            } else if holds {
                unequal_holding += 1;
            }
        }
    }
    Ok(json!({
        "equal_central_pairs": equal,
        "all_equal_central_hold": all_hold,
        "unequal_central_pairs_holding": unequal_holding,
        "restriction_facts_hold": facts_hold,
        "restriction_elements_checked": elements,
    }))
}

fn search_catalog(gap: Gap, cfg: &Config) -> Result<Value> {
    let tables = tables_for(&CATALOG, cfg)?;
    let counts: Vec<usize> =
        tables.par_iter().map(|t| preceq_search(t, gap).map(|v| v.len())).collect::<std::result::Result<_, _>>()?;
    let per_group: Map<String, Value> = CATALOG.iter().zip(&counts).map(|(d, n)| (d.to_string(), json!(n))).collect();
    Ok(json!({"pairs": counts.iter().sum::<usize>(), "per_group": per_group}))
}

fn sl2_powers(q: u32, cfg: &Config) -> Result<Value> {
    let t = table_for(&format!("sl2:{q}"), Method::Generic, cfg)?;
    let twos: Vec<&ClassFunction> = t.irreducibles().iter().filter(|c| c.dim() == Some(2)).collect();
    let sixes = t.irreducibles().iter().filter(|c| c.dim() == Some(6)).count();
    let mut out = json!({"two_dim_irreducibles": twos.len(), "six_dim_irreducibles": sixes});
    if let [s, st] = twos.as_slice() {
        let irreducible = |x: &ClassFunction| -> Result<bool> { Ok(char_inner(x, x)? == CycNum::one()) };
        let (s3, s3t) = (symmetric_power(s, 3), symmetric_power(st, 3));
        let (s5, s5t) = (symmetric_power(s, 5), symmetric_power(st, 5));
        let m1 = cf_tensor(&symmetric_power(s, 2), st)?;
        let m2 = cf_tensor(&symmetric_power(st, 2), s)?;
        let o = out.as_object_mut().expect("object");
        o.insert("sym3_conjugates_equal".into(), json!(s3 == s3t));
        o.insert("sym3_irreducible".into(), json!(irreducible(&s3)?));
        o.insert("sym3_dim".into(), json!(s3.dim()));
        o.insert("sym5_conjugates_equal".into(), json!(s5 == s5t));
        o.insert("sym5_equals_sym2_tensor".into(), json!(s5 == m1 && s5 == m2));
        o.insert("sym5_irreducible".into(), json!(irreducible(&s5)?));
        o.insert("sym5_dim".into(), json!(s5.dim()));
        o.insert("sym3_preceq_sym5".into(), json!(preceq_check(&s3, &s5)?.holds));
    }
    Ok(out)
}

fn search_dims(desc: &str, gap: Gap, cfg: &Config) -> Result<Value> {
    let t = table_for(desc, Method::Generic, cfg)?;
    let dims = t.dims();
    let mut pairs: Vec<(i64, i64)> = preceq_search(&t, gap)?.into_iter().map(|(i, j)| (dims[i], dims[j])).collect();
    pairs.sort_unstable();
    pairs.dedup();
    Ok(json!({"dim_pairs": pairs.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>()}))
}

fn sym6(case: &str) -> Result<Value> {
    let case = Sym6Case::parse(case).ok_or_else(|| CliError::usage(format!("unknown case '{case}'")))?;
    let (types, cert) = sym6_isobaric_types(case)?;
    Ok(json!({
        "types": types.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "certificate_holds": cert.all_hold(),
    }))
}

fn ring_identities(p: &Value) -> Result<Value> {
    let list = field(p, "identities")?.as_array().ok_or_else(|| CliError::usage("identities must be a list"))?;
    let mut failing = Vec::new();
    for pair in list {
        let (Some(l), Some(r)) = (pair.get(0).and_then(Value::as_str), pair.get(1).and_then(Value::as_str)) else {
            return Err(CliError::usage("each identity is a [lhs, rhs] pair"));
        };
        let check = verify_identity(l, r)?;
        if !check.holds {
            failing.push(json!({"lhs": l, "rhs": r, "difference": check.difference.to_string()}));
        }
    }
    Ok(json!({"checked": list.len(), "failing": failing}))
}

fn ladder(n_max: u32) -> Result<Value> {
    let mut failing = Vec::new();
    for n in 1..=n_max {
        if !su2_ladder(n)?.1 {
            failing.push(n);
        }
    }
    Ok(json!({"failing_n": failing}))
}

/// Multisets of row indices whose dimensions add up to `dim`.
pub fn genuine_of_dim(t: &CharacterTable, dim: i64) -> Vec<Vec<usize>> {
    fn go(dims: &[i64], from: usize, left: i64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in from..dims.len() {
            if dims[i] <= left {
                cur.push(i);
                go(dims, i, left - dims[i], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&t.dims(), 0, dim, &mut Vec::new(), &mut out);
    out
}

pub fn sum_rows(t: &CharacterTable, rows: &[usize]) -> Result<ClassFunction> {
    let mut acc = ClassFunction::constant(t.group(), 0);
    for &i in rows {
        acc = cf_add(&acc, t.irreducible(i))?;
    }
    Ok(acc)
}

fn unit_eigenvalue(dim: i64, cfg: &Config) -> Result<Value> {
    let tables = tables_for(&CATALOG, cfg)?;
    let per: Vec<(usize, usize)> = tables
        .par_iter()
        .map(|t| -> Result<(usize, usize)> {
            let (mut checked, mut bad) = (0, 0);
            for rows in genuine_of_dim(t, dim) {
                let v = sum_rows(t, &rows)?;
                let ext = exterior_powers(&v, dim as usize);
                for c in 0..t.group().num_classes() {
                    let mut alt = CycNum::zero();
                    for (k, e) in ext.iter().enumerate() {
                        alt = if k % 2 == 0 { &alt + e.value(c) } else { &alt - e.value(c) };
                    }
                    if alt.is_zero() != eigen_multiset(&v, c)?.contains_one() {
                        bad += 1;
                    }
                }
                checked += 1;
            }
            Ok((checked, bad))
        })
        .collect::<Result<_>>()?;
    Ok(json!({
        "characters_checked": per.iter().map(|x| x.0).sum::<usize>(),
        "violations": per.iter().map(|x| x.1).sum::<usize>(),
    }))
}

fn random_genuine(t: &CharacterTable, rng: &mut ChaCha8Rng, parts: usize) -> Result<ClassFunction> {
    let rows: Vec<usize> = (0..parts).map(|_| rng.gen_range(0..t.len())).collect();
    sum_rows(t, &rows)
}

/// A random genuine character of dimension 2, if the table has one.
pub fn random_dim2(t: &CharacterTable, rng: &mut ChaCha8Rng) -> Result<ClassFunction> {
    let options: Vec<Vec<usize>> = genuine_of_dim(t, 2);
    let pick = &options[rng.gen_range(0..options.len())];
    sum_rows(t, pick)
}

fn lemma(pairs: usize, cfg: &Config) -> Result<Value> {
    let tables = tables_for(&CATALOG, cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut bad = 0;
    for _ in 0..pairs {
        let t = &tables[rng.gen_range(0..tables.len())];
        let parts = rng.gen_range(1..=3);
        let w = random_genuine(t, &mut rng, parts)?;
        let a = random_dim2(t, &mut rng)?;
        let v = cf_add(&w, &a)?;
        let lhs = cf_add(&cf_tensor(&v, &w)?, &exterior_power(&a, 2))?;
        let rhs = cf_add(&exterior_power(&v, 2), &symmetric_power(&w, 2))?;
        if lhs != rhs {
            bad += 1;
        }
    }
    Ok(json!({"pairs": pairs, "violations": bad}))
}

/// Elementary and complete symmetric polynomials of a list, degrees `0..=k`.
fn symmetric_functions(xs: &[CycNum], k: usize) -> (Vec<CycNum>, Vec<CycNum>) {
    let mut e = vec![CycNum::zero(); k + 1];
    let mut h = vec![CycNum::zero(); k + 1];
    e[0] = CycNum::one();
    h[0] = CycNum::one();
    for x in xs {
        for d in (1..=k).rev() {
            e[d] = &e[d] + &(&e[d - 1] * x);
        }
        for d in 1..=k {
            h[d] = &h[d] + &(&h[d - 1] * x);
        }
    }
    (e, h)
}

fn newton(k_max: usize, max_dim: i64, max_order: usize, cfg: &Config) -> Result<Value> {
    let descs: Vec<&str> = CATALOG.to_vec();
    let tables = tables_for(&descs, cfg)?;
    let per: Vec<(usize, usize)> = tables
        .par_iter()
        .filter(|t| t.group().order() <= max_order)
        .map(|t| -> Result<(usize, usize)> {
            let (mut checked, mut bad) = (0, 0);
            for chi in t.irreducibles().iter().filter(|c| c.dim().is_some_and(|d| d <= max_dim)) {
                let (ext, sym) = (exterior_powers(chi, k_max), symmetric_powers(chi, k_max));
                for c in 0..t.group().num_classes() {
                    let (e, h) = symmetric_functions(&eigen_multiset(chi, c)?.eigenvalues(), k_max);
                    for k in 0..=k_max {
                        checked += 1;
                        if ext[k].value(c) != &e[k] || sym[k].value(c) != &h[k] {
                            bad += 1;
                        }
                    }
                }
            }
            Ok((checked, bad))
        })
        .collect::<Result<_>>()?;
    Ok(json!({
        "values_checked": per.iter().map(|x| x.0).sum::<usize>(),
        "mismatches": per.iter().map(|x| x.1).sum::<usize>(),
    }))
}

fn validity(p: &Value, cfg: &Config) -> Result<Value> {
    let tables = tables_for(&CATALOG, cfg)?;
    let invalid: Vec<Value> = CATALOG
        .par_iter()
        .zip(&tables)
        .filter_map(|(d, t)| {
            let r = t.verify().and_then(|_| t.verify_columns());
            r.err().map(|e| json!({"group": d, "error": e}))
        })
        .collect();
    let qs = field(p, "closed_form_q")?.as_array().ok_or_else(|| CliError::usage("closed_form_q must be a list"))?;
    let mut mismatch = Vec::new();
    for q in qs {
        let q = q.as_u64().ok_or_else(|| CliError::usage("closed_form_q entries are integers"))?;
        let g = crate::descriptor::parse_group(&format!("gl2:{q}"), cfg.max_order)?;
        let generic = crate::tables::build_table(&g, Method::Generic, cfg)?;
        let closed = crate::tables::build_table(&g, Method::ClosedForm, cfg)?;
        let same = generic.len() == closed.len()
            && closed.irreducibles().iter().all(|c| generic.irreducibles().contains(c));
        if !same {
            mismatch.push(q);
        }
    }
    Ok(json!({"invalid": invalid, "closed_form_mismatch": mismatch}))
}

/// The first `n` primes.
pub fn primes(n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    let mut k = 2u64;
    while out.len() < n {
        if repcontain_core::satake::is_prime(k) {
            out.push(k);
        }
        k += 1;
    }
    out
}

/// Unitary `GL₂` records `(a, a⁻¹)` with `a` uniform on the circle, one per prime.
pub fn random_unitary_records(n: usize, rng: &mut ChaCha8Rng) -> Vec<SatakeRecord> {
    primes(n)
        .into_iter()
        .map(|p| {
            let a = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
            SatakeRecord::new(p, vec![a, a.inv()]).expect("prime and nonzero")
        })
        .collect()
}

fn satake_ladder(n: usize, n_max: u32, tol: f64, cfg: &Config) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let base = random_unitary_records(n, &mut rng);
    let sym = |k: u32| base.iter().map(|r| r.sym_power(k)).collect::<Vec<_>>();
    let ones: Vec<SatakeRecord> =
        base.iter().map(|r| SatakeRecord::new(r.p, vec![Complex64::new(1.0, 0.0)]).expect("valid")).collect();
    let trivial = check_containment(&ones, &sym(2), tol)?.holds();
    let mut failures = Vec::new();
    for m in 1..=n_max {
        if !check_containment(&sym(m - 1), &sym(m + 1), tol)?.holds() {
            failures.push(m);
        }
    }
    Ok(json!({"records": n, "trivial_in_sym2": trivial, "ladder_failures": failures}))
}
