//! Suite files are JSON:
//!
//! ```json
//! {
//!   "instances": ["cov-4.json", "cov-8.json"],
//!   "solvers": ["jspg", "serial"],
//!   "configs": [{ "epsilon": 0.1, "seed": 1 }, { "epsilon": 0.2 }],
//!   "grid_res": 10
//! }
//! ```
//!
//! Instance paths are relative to the suite file. Config entries take the
//! solver config field names plus `seed`; omitted fields keep their
//! defaults, and an omitted `sigma` means the instance's own claim.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use ossmax::SolverConfig;
use serde::Deserialize;

use crate::args::{BenchArgs, SolverKind};
use crate::commands::load_instance;
use crate::commands::solve::{run_one, summary_line};
use crate::failure::{CmdResult, Failure, IoContext};
use crate::record::{write_rows, writer_for, RunRecord};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Suite {
    #[serde(default)]
    instances: Vec<PathBuf>,
    #[serde(default = "default_solvers")]
    solvers: Vec<SolverKind>,
    #[serde(default = "default_configs")]
    configs: Vec<SuiteConfig>,
    #[serde(default = "default_grid_res")]
    grid_res: usize,
}

#[derive(Debug, Deserialize)]
struct SuiteConfig {
    #[serde(default)]
    seed: u64,
    /// Defaults to each instance's own claim.
    #[serde(default)]
    sigma: Option<f64>,
    #[serde(flatten)]
    cfg: SolverConfig,
}

fn default_solvers() -> Vec<SolverKind> {
    vec![SolverKind::Jspg]
}

fn default_configs() -> Vec<SuiteConfig> {
    vec![SuiteConfig {
        seed: 0,
        sigma: None,
        cfg: SolverConfig::default(),
    }]
}

fn default_grid_res() -> usize {
    10
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.total_cmp(b));
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        0.5 * (v[k / 2 - 1] + v[k / 2])
    }
}

/// Per solver and dimension medians, for the scaling checks.
pub fn summarize(rows: &[RunRecord]) -> String {
    let mut groups: BTreeMap<(String, usize), Vec<&RunRecord>> = BTreeMap::new();
    for r in rows {
        groups.entry((r.solver.clone(), r.n)).or_default().push(r);
    }
    let mut out = String::from(
        "solver\tn\truns\tadaptive_rounds\ttotal_rounds\tvalue_queries\tgradient_queries\n",
    );
    for ((solver, n), rs) in &groups {
        let med = |f: fn(&RunRecord) -> u64| median(rs.iter().map(|r| f(r) as f64).collect());
        let _ = writeln!(
            out,
            "{solver}\t{n}\t{}\t{}\t{}\t{}\t{}",
            rs.len(),
            med(|r| r.adaptive_rounds),
            med(|r| r.total_rounds),
            med(|r| r.value_queries),
            med(|r| r.gradient_queries)
        );
    }
    out
}

pub fn run(a: &BenchArgs, out_dir: &Path) -> CmdResult {
    let text = std::fs::read_to_string(&a.suite).io(format!("reading {}", a.suite.display()))?;
    let suite: Suite = serde_json::from_str(&text)
        .map_err(|e| Failure::validation(format!("{}: {e}", a.suite.display())))?;
    for c in &suite.configs {
        SolverConfig {
            sigma: c.sigma.unwrap_or(0.0),
            ..c.cfg.clone()
        }
        .validate()?;
    }
    let base = a.suite.parent().unwrap_or(Path::new("."));
    let instances = suite
        .instances
        .iter()
        .map(|p| load_instance(&base.join(p)))
        .collect::<Result<Vec<_>, _>>()?;

    let dir = a.out.clone().unwrap_or_else(|| out_dir.to_path_buf());
    let csv_path = dir.join("runs.csv");
    let mut w = writer_for(&csv_path, false)?;
    let mut rows = Vec::new();
    for inst in &instances {
        for &solver in &suite.solvers {
            for c in &suite.configs {
                let claimed = inst.build()?.0.sigma_claimed();
                let cfg = SolverConfig {
                    sigma: c.sigma.unwrap_or(claimed),
                    ..c.cfg.clone()
                };
                let r = run_one(inst, solver, &cfg, c.seed, suite.grid_res)?;
                println!("{}", summary_line(&r));
                write_rows(&mut w, std::slice::from_ref(&r))?;
                rows.push(r);
            }
        }
    }
    let summary_path = dir.join("summary.txt");
    std::fs::write(&summary_path, summarize(&rows))
        .io(format!("writing {}", summary_path.display()))?;
    println!(
        "{} runs; wrote {} and {}",
        rows.len(),
        csv_path.display(),
        summary_path.display()
    );
    Ok(())
}
