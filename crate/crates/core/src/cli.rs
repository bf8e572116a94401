//! Command-line front end: Betti tables, cycle printing, and the
//! verification suites, with JSON reports for regression testing.

use crate::cycles::{
    garnir_sum, hook_cycle, squarefree_term_check, squarefree_z_product, straighten,
    strand_span_check, z_cycle_vars,
};
use crate::glaction::{decomposition_verify, isotypic_verify};
use crate::koszul::{class_is_nonzero, homology_dim, is_cycle, lowest_strand_span_check, DegreeSlice, KoszulElement};
use crate::linalg::ExactField;
use crate::matching::{char2_witness, petersen_check, reduced_homology, squarefree_slice_compare, torsion};
use crate::partitions::{lr_selfconjugate_check, schur_dim, self_conjugate_enum};
use crate::report::{Check, Report};
use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "koszul2", about = "Exact Koszul homology of the square of the maximal ideal")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct RunConfig {
    /// Number of variables
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Field characteristic: 0 for the rationals, otherwise a prime
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    /// Homological degree bound
    #[arg(long, default_value_t = 3)]
    pub imax: usize,
    /// Internal degree bound
    #[arg(long, default_value_t = 8)]
    pub jmax: u32,
    /// Strand / cycle parameter t where applicable
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Seed for the randomized property checks
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Emit JSON instead of a table
    #[arg(long, default_value_t = false)]
    pub json: bool,
    /// Write output to this path instead of stdout
    #[arg(long, value_name = "PATH")]
    pub out: Option<std::path::PathBuf>,
    /// Include a Z-torsion report (matching suite)
    #[arg(long, default_value_t = false)]
    pub torsion: bool,
    /// Assert the printed element is a cycle (cycle command)
    #[arg(long, default_value_t = false)]
    pub check_cycle: bool,
}

impl RunConfig {
    pub fn field(&self) -> Result<ExactField, String> {
        ExactField::from_characteristic(self.characteristic)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Betti table of homology dimensions with the predicted partitions per cell
    Betti {
        #[command(flatten)]
        cfg: RunConfig,
    },
    /// Run a verification suite; exit code 0 iff every check passes
    Verify {
        which: VerifySuite,
        #[command(flatten)]
        cfg: RunConfig,
    },
    /// Print a cycle: `Z <i>`, `z <a1,..|b1,..>`, or `product <i1,i2,..>`
    Cycle {
        /// Z | z | product
        kind: String,
        /// index, "a|b" pair, or subset
        spec: String,
        #[command(flatten)]
        cfg: RunConfig,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifySuite {
    Garnir,
    Straighten,
    Isotypic,
    Decomposition,
    Strand,
    LowestStrand,
    Lr,
    Matching,
    Char2,
    NonzeroProducts,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    command: String,
    config: &'a RunConfig,
    checks: Vec<Check>,
    failures: usize,
}

fn emit(cfg: &RunConfig, text: String) -> Result<(), String> {
    match &cfg.out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Entry point; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Betti { cfg } => match cmd_betti(&cfg) {
            Ok(code) => code,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Verify { which, cfg } => match cmd_verify(&cfg, which) {
            Ok(code) => code,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Cycle { kind, spec, cfg } => match cmd_cycle(&cfg, &kind, &spec) {
            Ok(code) => code,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
    }
}

#[derive(Serialize)]
struct BettiCell {
    i: usize,
    j: u32,
    dim: usize,
    predicted: String,
    partitions: Vec<String>,
    matches: bool,
}

pub fn cmd_betti(cfg: &RunConfig) -> Result<i32, String> {
    let field = cfg.field()?;
    let mut cells = Vec::new();
    for i in 0..=cfg.imax {
        for j in 0..=cfg.jmax {
            let dim = homology_dim(cfg.n, i, &DegreeSlice::Internal(j), field);
            let lams = self_conjugate_enum(cfg.n, i as u32, j);
            let predicted: BigInt = lams.iter().map(|l| schur_dim(l, cfg.n)).sum();
            if dim == 0 && lams.is_empty() {
                continue;
            }
            cells.push(BettiCell {
                i,
                j,
                dim,
                predicted: predicted.to_string(),
                partitions: lams.iter().map(|l| l.to_string()).collect(),
                matches: BigInt::from(dim) == predicted,
            });
        }
    }
    let all_match = cells.iter().all(|c| c.matches);
    if cfg.json {
        let value = serde_json::json!({
            "command": "betti",
            "config": cfg,
            "cells": cells,
            "all_match": all_match,
        });
        emit(cfg, serde_json::to_string_pretty(&value).unwrap())?;
    } else {
        let mut text = format!(
            "Betti table for n={}, char={} (i <= {}, j <= {})\n",
            cfg.n, cfg.characteristic, cfg.imax, cfg.jmax
        );
        text.push_str("  i   j   dim   predicted  match  partitions\n");
        for c in &cells {
            text.push_str(&format!(
                "{:>3} {:>3} {:>5} {:>10}  {:>5}  {}\n",
                c.i,
                c.j,
                c.dim,
                c.predicted,
                if c.matches { "yes" } else { "NO" },
                c.partitions.join(" ; ")
            ));
        }
        emit(cfg, text)?;
    }
    Ok(if all_match { 0 } else { 1 })
}

pub fn cmd_verify(cfg: &RunConfig, which: VerifySuite) -> Result<i32, String> {
    let field = cfg.field()?;
    let report = match which {
        VerifySuite::Garnir => verify_garnir(cfg, field),
        VerifySuite::Straighten => verify_straighten(cfg, field),
        VerifySuite::Isotypic => verify_isotypic(cfg, field),
        VerifySuite::Decomposition => verify_decomposition(cfg, field),
        VerifySuite::Strand => strand_span_check(cfg.n, cfg.t, field),
        VerifySuite::LowestStrand => lowest_strand_span_check(cfg.n, cfg.imax, field),
        VerifySuite::Lr => verify_lr(cfg),
        VerifySuite::Matching => verify_matching(cfg, field),
        VerifySuite::Char2 => char2_witness(),
        VerifySuite::NonzeroProducts => verify_nonzero_products(cfg, field),
    };
    let name = format!("verify {}", serde_json::to_value(which).unwrap().as_str().unwrap());
    let json = JsonReport {
        command: name.clone(),
        config: cfg,
        checks: report.checks.clone(),
        failures: report.failures,
    };
    if cfg.json || cfg.out.is_some() {
        emit(cfg, serde_json::to_string_pretty(&json).unwrap())?;
    } else {
        let mut text = format!("{name}: {} checks, {} failures\n", report.checks.len(), report.failures);
        for c in &report.checks {
            text.push_str(&format!("  [{}] {}\n", if c.pass { "ok" } else { "FAIL" }, c.name));
        }
        emit(cfg, text)?;
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn verify_garnir(cfg: &RunConfig, field: ExactField) -> Report {
    let mut report = Report::new();
    let n = cfg.n;
    let t = cfg.t.max(1);
    // exhaustive when small
    if n <= 3 && t <= 2 {
        let mut all_zero = true;
        let mut count = 0usize;
        for a in std::iter::repeat(1..=n as u8).take(t + 2).multi_cartesian_product() {
            for btail in std::iter::repeat(1..=n as u8).take(t - 1).multi_cartesian_product().chain(
                if t == 1 { vec![Vec::new()] } else { Vec::new() },
            ) {
                if btail.len() != t - 1 {
                    continue;
                }
                count += 1;
                if !garnir_sum(&a, &btail, n, field).unwrap().is_zero() {
                    all_zero = false;
                }
            }
        }
        report.push(Check::bool(
            format!("garnir: exhaustive {count} cases vanish (n={n}, t={t})"),
            serde_json::json!({ "n": n, "t": t, "cases": count }),
            all_zero,
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut all_zero = true;
    let cases = 100usize;
    for _ in 0..cases {
        let a: Vec<u8> = (0..t + 2).map(|_| rng.gen_range(1..=n as u8)).collect();
        let btail: Vec<u8> = (0..t - 1).map(|_| rng.gen_range(1..=n as u8)).collect();
        for f in [field, ExactField::prime(2).unwrap(), ExactField::prime(3).unwrap()] {
            if !garnir_sum(&a, &btail, n, f).unwrap().is_zero() {
                all_zero = false;
            }
        }
    }
    report.push(Check::bool(
        format!("garnir: {cases} random cases vanish over char 0, 2, 3 (n={n}, t={t}, seed={})", cfg.seed),
        serde_json::json!({ "n": n, "t": t, "cases": cases, "seed": cfg.seed }),
        all_zero,
    ));
    report
}

fn verify_straighten(cfg: &RunConfig, field: ExactField) -> Report {
    let mut report = Report::new();
    let n = cfg.n.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let cases = 50usize;
    let mut ok = true;
    for _ in 0..cases {
        let t = rng.gen_range(1..=cfg.t.max(1).min(n - 1));
        let combos: Vec<Vec<u8>> = (1..=n as u8).combinations(t + 1).collect();
        let a = combos[rng.gen_range(0..combos.len())].clone();
        let mut b: Vec<u8> = (0..t).map(|_| rng.gen_range(1..=n as u8)).collect();
        b.sort_unstable();
        let coeffs = straighten(&a, &b, n, field).unwrap();
        let mut rebuilt = KoszulElement::zero(n, field);
        for (pair, c) in &coeffs {
            let mut z = z_cycle_vars(&pair.a, &pair.b, n, field).unwrap();
            z.scale(c);
            rebuilt.add(&z);
        }
        rebuilt.add(&z_cycle_vars(&a, &b, n, field).unwrap().negated());
        if !rebuilt.is_zero() {
            ok = false;
        }
    }
    report.push(Check::bool(
        format!("straighten: {cases} random reconstructions exact (n={n}, seed={})", cfg.seed),
        serde_json::json!({ "n": n, "t": cfg.t, "cases": cases, "seed": cfg.seed }),
        ok,
    ));
    report
}

fn verify_isotypic(cfg: &RunConfig, field: ExactField) -> Report {
    let mut report = Report::new();
    for w in 0..=cfg.jmax {
        for lam in crate::partitions::self_conjugate_of_weight(w) {
            if lam.is_empty() || lam.len() > cfg.n {
                continue;
            }
            report.merge(isotypic_verify(&lam, cfg.n, field));
        }
    }
    report
}

fn verify_decomposition(cfg: &RunConfig, field: ExactField) -> Report {
    let mut report = Report::new();
    for i in 0..=cfg.imax {
        for j in 0..=cfg.jmax {
            report.merge(decomposition_verify(cfg.n, i, j, field));
        }
    }
    report
}

fn verify_lr(cfg: &RunConfig) -> Report {
    let mut report = Report::new();
    for w in 1..=cfg.jmax {
        for lam in crate::partitions::self_conjugate_of_weight(w) {
            report.merge(lr_selfconjugate_check(&lam).unwrap());
        }
    }
    report
}

fn verify_matching(cfg: &RunConfig, field: ExactField) -> Report {
    let mut report = Report::new();
    report.merge(petersen_check());
    report.merge(squarefree_slice_compare(cfg.n, cfg.n / 2 + 1, field));
    report.push(Check::new(
        "matching: reduced H_1 of the complex on 5 points over Q",
        serde_json::json!({ "n": 5 }),
        serde_json::json!(6),
        serde_json::json!(reduced_homology(5, 1, ExactField::rationals())),
    ));
    if cfg.torsion {
        for dim in -1..=(cfg.n as i64 / 2) {
            let t = torsion(cfg.n, dim);
            report.push(Check::bool(
                format!(
                    "matching: torsion report dim {dim} (n={}): {:?}",
                    cfg.n,
                    t.iter().map(|x| x.to_string()).collect::<Vec<_>>()
                ),
                serde_json::json!({ "n": cfg.n, "dim": dim }),
                true,
            ));
        }
    }
    report
}

fn verify_nonzero_products(cfg: &RunConfig, field: ExactField) -> Report {
    let mut report = Report::new();
    let n = cfg.n;
    let all: Vec<usize> = (0..n).collect();
    for k in 1..=n {
        for subset in all.iter().copied().combinations(k) {
            let p = squarefree_z_product(&subset, n, field).unwrap();
            report.push(Check::bool(
                format!("nonzero class of the product over {subset:?} (n={n})"),
                serde_json::json!({ "n": n, "subset": subset }),
                class_is_nonzero(&p),
            ));
        }
    }
    report.merge(squarefree_term_check(n, field));
    report
}

pub fn cmd_cycle(cfg: &RunConfig, kind: &str, spec: &str) -> Result<i32, String> {
    let field = cfg.field()?;
    let n = cfg.n;
    let elem = match kind {
        "Z" => {
            let i: usize = spec.trim().parse().map_err(|_| format!("bad index {spec:?}"))?;
            hook_cycle(i, n, field).map_err(|e| e.to_string())?
        }
        "z" => {
            let (a_str, b_str) = spec
                .split_once('|')
                .ok_or_else(|| format!("expected a|b, got {spec:?}"))?;
            let parse = |s: &str| -> Result<Vec<u8>, String> {
                if s.trim().is_empty() {
                    return Ok(Vec::new());
                }
                s.split(',')
                    .map(|t| t.trim().parse::<u8>().map_err(|_| format!("bad index {t:?}")))
                    .collect()
            };
            z_cycle_vars(&parse(a_str)?, &parse(b_str)?, n, field).map_err(|e| e.to_string())?
        }
        "product" => {
            let subset: Result<Vec<usize>, String> = spec
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad index {t:?}")))
                .collect();
            squarefree_z_product(&subset?, n, field).map_err(|e| e.to_string())?
        }
        other => return Err(format!("unknown cycle kind {other:?} (expected Z, z, or product)")),
    };
    let cycle_ok = is_cycle(&elem);
    if cfg.json {
        let value = serde_json::json!({
            "command": "cycle",
            "config": cfg,
            "element": elem.to_json(),
            "text": elem.to_string(),
            "is_cycle": cycle_ok,
        });
        emit(cfg, serde_json::to_string_pretty(&value).unwrap())?;
    } else {
        emit(cfg, elem.to_string())?;
    }
    if cfg.check_cycle && !cycle_ok {
        return Ok(1);
    }
    Ok(0)
}
