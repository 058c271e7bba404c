//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use repcontain_core::chartab::{CharacterTable, ClassFunction};
use repcontain_core::gl2ring::{sym6_isobaric_types, verify_identity, Sym6Case};
use repcontain_core::lambda::{adams, decompose, exterior_power, is_genuine, symmetric_power};
use repcontain_core::preceq::{preceq_check, preceq_search, preceq_search_from, Gap};
use repcontain_core::satake::{check_containment, SatakeRecord};

use crate::charexpr::eval_char;
use crate::claims;
use crate::error::{CliError, Kind, Result};
use crate::json;
use crate::satake_io::load_satake;
use crate::tables::{table_for, Config, Method, DEFAULT_SEED};

#[derive(Parser, Debug)]
#[command(name = "repcontain", version, about = "Eigenvalue containment of group representations")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized suites; recorded in every output.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Refuse groups larger than this.
    #[arg(long, global = true, default_value_t = repcontain_core::groups::DEFAULT_MAX_ORDER)]
    pub max_group_order: usize,
    /// Refuse character tables with more classes than this.
    #[arg(long, global = true, default_value_t = repcontain_core::chartab::DEFAULT_MAX_CLASSES)]
    pub max_classes: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Character table of a group.
    Chartable {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Method::Generic)]
        method: Method,
    },
    /// Apply sym:K, ext:K or adams:K to a character.
    Lambda {
        #[arg(long)]
        group: String,
        /// Label or character expression.
        #[arg(long = "char")]
        character: String,
        /// sym:K, ext:K or adams:K.
        #[arg(long)]
        op: String,
        /// Skip the check that the input is a genuine character.
        #[arg(long)]
        no_genuine_check: bool,
    },
    /// Decide whether rep1 ≼ rep2 (exit 1 when it does not hold).
    Preceq {
        #[arg(long)]
        group: String,
        #[arg(long)]
        rep1: String,
        #[arg(long)]
        rep2: String,
    },
    /// All pairs of irreducibles (or sources against irreducibles) with rep1 ≼ rep2.
    PreceqSearch {
        #[arg(long)]
        group: String,
        /// Dimension gap: a nonnegative integer or `any`.
        #[arg(long, default_value = "any")]
        gap: String,
        /// Character expressions to use as the smaller side instead of the irreducibles.
        #[arg(long)]
        source: Vec<String>,
    },
    /// Formal GL₂ representation-ring computations.
    Gl2 {
        #[command(subcommand)]
        action: Gl2Action,
    },
    /// Containment of Satake parameter data.
    Satake {
        #[command(subcommand)]
        action: SatakeAction,
    },
    /// Run a claim from the registry and compare with its expected value.
    Reproduce {
        /// Claim id, or `all`.
        id: Option<String>,
        /// List the registry.
        #[arg(long)]
        list: bool,
    },
    /// Run every claim and print one line per claim.
    Selftest,
}

#[derive(Subcommand, Debug)]
pub enum Gl2Action {
    /// Check an identity (exit 1 when it fails).
    Verify {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Admissible isobaric types of the sixth symmetric power.
    Sym6Type {
        /// tetrahedral, octahedral or icosahedral.
        #[arg(long = "case")]
        case_name: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum SatakeAction {
    /// Check small ⊂ big prime by prime (exit 1 when some prime fails).
    Check {
        #[arg(long)]
        small: PathBuf,
        #[arg(long)]
        big: PathBuf,
        #[arg(long, default_value_t = 1)]
        sym_small: u32,
        #[arg(long, default_value_t = 1)]
        sym_big: u32,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Refuse verdicts resting on fewer common primes.
        #[arg(long, default_value_t = 10)]
        min_overlap: usize,
    },
}

/// Result of a command: a JSON document plus whether the answer was positive.
struct Output {
    value: Value,
    ok: bool,
    /// Extra lines for stderr.
    notes: Vec<String>,
}

impl Output {
    fn ok(value: Value) -> Self {
        Output { value, ok: true, notes: Vec::new() }
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Kind::Usage.exit_code() } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let g = &cli.global;
    if g.max_group_order == 0 || g.max_classes == 0 {
        return Err(CliError::usage("bounds must be positive"));
    }
    if let Some(n) = g.threads {
        if n == 0 {
            return Err(CliError::usage("--threads must be positive"));
        }
        // Fails only if the pool already exists (repeated in-process runs); keep the existing one.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cfg = Config { seed: g.seed, max_order: g.max_group_order, max_classes: g.max_classes };
    let mut out = dispatch(&cli.command, &cfg)?;
    if let Value::Object(m) = &mut out.value {
        m.entry("seed").or_insert(json!(cfg.seed));
    }
    let text = serde_json::to_string_pretty(&out.value)? + "\n";
    match &g.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    for n in &out.notes {
        eprintln!("{n}");
    }
    Ok(if out.ok { 0 } else { Kind::Mismatch.exit_code() })
}

fn dispatch(cmd: &Command, cfg: &Config) -> Result<Output> {
    match cmd {
        Command::Chartable { group, method } => {
            let t = table_for(group, *method, cfg)?;
            Ok(Output::ok(json::table(group, &t)))
        }
        Command::Lambda { group, character, op, no_genuine_check } => {
            lambda(group, character, op, *no_genuine_check, cfg)
        }
        Command::Preceq { group, rep1, rep2 } => preceq(group, rep1, rep2, cfg),
        Command::PreceqSearch { group, gap, source } => search(group, gap, source, cfg),
        Command::Gl2 { action: Gl2Action::Verify { lhs, rhs } } => {
            let c = verify_identity(lhs, rhs)?;
            Ok(Output {
                value: json!({
                    "lhs": lhs, "rhs": rhs, "holds": c.holds,
                    "lhs_expanded": c.lhs.to_string(), "rhs_expanded": c.rhs.to_string(),
                    "difference": c.difference.to_string(), "specialized": c.specialized,
                }),
                ok: c.holds,
                notes: Vec::new(),
            })
        }
        Command::Gl2 { action: Gl2Action::Sym6Type { case_name } } => sym6(case_name),
        Command::Satake { action: SatakeAction::Check { small, big, sym_small, sym_big, tol, min_overlap } } => {
            let small = sym(load_satake(small)?, *sym_small);
            let big = sym(load_satake(big)?, *sym_big);
            satake(&small, &big, *tol, *min_overlap)
        }
        Command::Reproduce { list: true, .. } => Ok(Output::ok(json!({
            "claims": claims::registry().iter().map(|c| json!({"id": c.id, "kind": c.kind, "quote": c.quote})).collect::<Vec<_>>(),
        }))),
        Command::Reproduce { id: None, .. } => Err(CliError::usage("give a claim id, `all`, or --list")),
        Command::Reproduce { id: Some(id), .. } if id == "all" => run_all(cfg, false),
        Command::Reproduce { id: Some(id), .. } => {
            let claim = claims::find(id)?;
            let outcome = claims::run(&claim, cfg)?;
            let notes = outcome.diff.iter().map(|(k, e, o)| format!("mismatch at {k}: expected {e}, observed {o}")).collect();
            Ok(Output { value: claims::report(&claim, &outcome, cfg), ok: outcome.matches(), notes })
        }
        Command::Selftest => run_all(cfg, true),
    }
}

fn sym(records: Vec<SatakeRecord>, k: u32) -> Vec<SatakeRecord> {
    if k == 1 {
        records
    } else {
        records.iter().map(|r| r.sym_power(k)).collect()
    }
}

fn satake(small: &[SatakeRecord], big: &[SatakeRecord], tol: f64, min_overlap: usize) -> Result<Output> {
    let res = check_containment(small, big, tol)?;
    if res.primes_checked() < min_overlap {
        return Err(CliError::mismatch(format!(
            "only {} common primes, below --min-overlap {min_overlap}",
            res.primes_checked()
        )));
    }
    let failures: Vec<Value> =
        res.failures().map(|v| json!({"p": v.p, "residual": v.residual_sq.sqrt()})).collect();
    Ok(Output {
        value: json!({
            "verdict": res.holds(),
            "primes_checked": res.primes_checked(),
            "failures": failures,
            "max_residual": res.max_residual_sq().sqrt(),
            "tol": tol,
        }),
        ok: res.holds(),
        notes: Vec::new(),
    })
}

fn parse_gap(s: &str) -> Result<Gap> {
    if s == "any" {
        return Ok(Gap::Any);
    }
    s.parse().map(Gap::Exact).map_err(|_| CliError::usage(format!("--gap expects an integer or `any`, got '{s}'")))
}

fn describe(t: &CharacterTable, chi: &ClassFunction) -> Result<Value> {
    let parts: Vec<Value> = decompose(chi, t)?
        .into_iter()
        .map(|(i, m)| json!({"label": t.label(i).to_string(), "multiplicity": m}))
        .collect();
    Ok(json!({"dim": chi.dim(), "values": json::class_function(chi), "decomposition": parts}))
}

fn lambda(group: &str, expr: &str, op: &str, skip_check: bool, cfg: &Config) -> Result<Output> {
    let t = table_for(group, Method::Generic, cfg)?;
    let chi = eval_char(&t, expr)?;
    if !skip_check && !is_genuine(&chi, &t)? {
        return Err(CliError::mismatch(format!("'{expr}' is not a genuine character (use --no-genuine-check)")));
    }
    let (name, k) = op.split_once(':').ok_or_else(|| CliError::usage("--op expects sym:K, ext:K or adams:K"))?;
    let k: i64 = k.parse().map_err(|_| CliError::usage(format!("bad index in --op '{op}'")))?;
    let result = match name {
        "adams" => adams(&chi, k),
        "sym" | "ext" if k < 0 => return Err(CliError::usage("powers must be nonnegative")),
        "sym" => symmetric_power(&chi, k as usize),
        "ext" => exterior_power(&chi, k as usize),
        _ => return Err(CliError::usage(format!("unknown operation '{name}'"))),
    };
    Ok(Output::ok(json!({
        "group": group, "char": expr, "op": op,
        "input": describe(&t, &chi)?,
        "result": describe(&t, &result)?,
    })))
}

fn preceq(group: &str, rep1: &str, rep2: &str, cfg: &Config) -> Result<Output> {
    let t = table_for(group, Method::Generic, cfg)?;
    let (a, b) = (eval_char(&t, rep1)?, eval_char(&t, rep2)?);
    let r = preceq_check(&a, &b)?;
    let witness = r.witness.as_ref().map(|w| {
        let class = &t.group().classes()[w.class];
        json!({"class": w.class, "rep_order": class.rep_order, "deficit": json::deficit(&w.deficit)})
    });
    Ok(Output {
        value: json!({"group": group, "rep1": rep1, "rep2": rep2, "holds": r.holds, "witness": witness,
                      "dims": [a.dim(), b.dim()]}),
        ok: r.holds,
        notes: Vec::new(),
    })
}

fn search(group: &str, gap: &str, sources: &[String], cfg: &Config) -> Result<Output> {
    let gap = parse_gap(gap)?;
    let t = table_for(group, Method::Generic, cfg)?;
    let dims = t.dims();
    let pairs: Vec<Value> = if sources.is_empty() {
        preceq_search(&t, gap)?
            .into_iter()
            .map(|(i, j)| {
                json!({"rep1": t.label(i).to_string(), "rep2": t.label(j).to_string(), "dims": [dims[i], dims[j]]})
            })
            .collect()
    } else {
        let chars = sources.par_iter().map(|s| eval_char(&t, s)).collect::<Result<Vec<_>>>()?;
        preceq_search_from(&t, &chars, gap)?
            .into_iter()
            .map(|(s, j)| {
                json!({"rep1": sources[s], "rep2": t.label(j).to_string(), "dims": [chars[s].dim(), dims[j]]})
            })
            .collect()
    };
    Ok(Output::ok(json!({"group": group, "gap": gap_json(gap), "pairs": pairs})))
}

fn gap_json(g: Gap) -> Value {
    match g {
        Gap::Exact(k) => json!(k),
        Gap::Any => json!("any"),
    }
}

fn sym6(name: &str) -> Result<Output> {
    let case = Sym6Case::parse(name).ok_or_else(|| {
        CliError::usage(format!("unknown case '{name}' (tetrahedral, octahedral, icosahedral)"))
    })?;
    let (types, cert) = sym6_isobaric_types(case)?;
    let identities: Vec<Value> = cert
        .identities
        .iter()
        .map(|i| json!({"name": i.name, "lhs": i.lhs, "rhs": i.rhs, "holds": i.check.holds}))
        .collect();
    let dims: Vec<Value> =
        cert.dimension_checks.iter().map(|(n, a, b)| json!({"name": n, "lhs": a, "rhs": b})).collect();
    Ok(Output {
        value: json!({
            "case": case.name(),
            "types": types.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            "certificate": {
                "holds": cert.all_hold(),
                "hypothesis": cert.hypothesis,
                "identities": identities,
                "known_summand": cert.known,
                "expansion": cert.expansion,
                "rules": cert.rules,
                "dimension_checks": dims,
            },
        }),
        ok: cert.all_hold(),
        notes: Vec::new(),
    })
}

fn run_all(cfg: &Config, lines: bool) -> Result<Output> {
    let registry = claims::registry();
    let results: Vec<(Value, bool, String)> = registry
        .par_iter()
        .map(|c| match claims::run(c, cfg) {
            Ok(o) => {
                let ok = o.matches();
                let line = format!("{} {}", if ok { "PASS" } else { "FAIL" }, c.id);
                (claims::report(c, &o, cfg), ok, line)
            }
            Err(e) => (json!({"id": c.id, "quote": c.quote, "error": e.message, "match": false}), false, format!("FAIL {} ({})", c.id, e.message)),
        })
        .collect();
    let ok = results.iter().all(|r| r.1);
    let notes = if lines { results.iter().map(|r| r.2.clone()).collect() } else { Vec::new() };
    Ok(Output {
        value: json!({
            "passed": results.iter().filter(|r| r.1).count(),
            "total": results.len(),
            "claims": results.into_iter().map(|r| r.0).collect::<Vec<_>>(),
        }),
        ok,
        notes,
    })
}
