use std::path::Path;
use std::time::Instant;

use ossmax::instance::Instance;
use ossmax::objectives::{NoiseKind, NoisyObjective};
use ossmax::polytopes::opt_bounds;
use ossmax::solvers::{brute_force_opt, jspg_solve, serial_baseline_solve, spg_solve};
use ossmax::{Error, SolverConfig};

use crate::args::{SolveArgs, SolverKind};
use crate::commands::load_instance;
use crate::failure::{CmdResult, Failure};
use crate::record::{write_rows, writer_for, RunRecord};

/// Runs one solver and fills in the OPT bracket. The grid value is left
/// empty when the lattice is over budget.
pub fn run_one(
    inst: &Instance,
    solver: SolverKind,
    cfg: &SolverConfig,
    seed: u64,
    grid_res: usize,
) -> Result<RunRecord, Failure> {
    let (obj, poly) = inst.build()?;
    cfg.validate()?;
    let started = Instant::now();
    let sol = match solver {
        SolverKind::Jspg => jspg_solve(obj.as_ref(), poly.as_ref(), cfg)?,
        SolverKind::Serial => serial_baseline_solve(obj.as_ref(), poly.as_ref(), cfg)?,
        SolverKind::Spg => {
            let noisy = NoisyObjective::new(&*obj, cfg.noise_theta, NoiseKind::Uniform, seed)?;
            spg_solve(&noisy, poly.as_ref(), cfg)?
        }
    };
    let wall_ms = started.elapsed().as_secs_f64() * 1e3;

    let (opt_lower, opt_upper) = opt_bounds(obj.as_ref(), poly.as_ref())?;
    let opt_grid = match brute_force_opt(obj.as_ref(), poly.as_ref(), grid_res, 1e-9) {
        Ok(g) => Some(g.value),
        Err(Error::GridBudget { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let ratio_grid = opt_grid.filter(|g| *g > 0.0).map(|g| sol.value / g);
    Ok(RunRecord {
        instance_id: inst.id.clone(),
        objective: inst.objective.kind().into(),
        polytope: inst.polytope.kind().into(),
        n: inst.dimension(),
        solver: solver.name().into(),
        alpha: cfg.alpha,
        epsilon: cfg.epsilon,
        eta: cfg.eta,
        sigma: cfg.sigma,
        delta_tol: cfg.delta_tol,
        value_tol: cfg.value_tol,
        batch: cfg.spg_batch,
        theta: cfg.noise_theta,
        lipschitz: cfg.lipschitz,
        diameter: cfg.diameter,
        seed,
        value: sol.value,
        opt_lower,
        opt_upper,
        opt_grid,
        ratio_grid,
        adaptive_rounds: sol.trace.adaptive_rounds,
        total_rounds: sol.trace.total_rounds(),
        value_queries: sol.trace.value_queries,
        gradient_queries: sol.trace.gradient_queries,
        wall_ms,
    })
}

pub fn summary_line(r: &RunRecord) -> String {
    let grid = match (r.opt_grid, r.ratio_grid) {
        (Some(g), Some(q)) => format!("grid OPT {g:.6}, ratio {q:.4}"),
        (Some(g), None) => format!("grid OPT {g:.6}"),
        _ => format!("OPT in [{:.6}, {:.6}]", r.opt_lower, r.opt_upper),
    };
    format!(
        "{} on {}: value {:.6} ({grid}); {} adaptive rounds, {} value / {} gradient queries, {:.1} ms",
        r.solver, r.instance_id, r.value, r.adaptive_rounds, r.value_queries, r.gradient_queries, r.wall_ms
    )
}

pub fn run(a: &SolveArgs, out_dir: &Path) -> CmdResult {
    let inst = load_instance(&a.instance)?;
    let (obj, _) = inst.build()?;
    let cfg = a.config.config(obj.sigma_claimed());
    let record = run_one(&inst, a.solver, &cfg, a.config.seed, a.grid_res)?;
    let path = a.out.clone().unwrap_or_else(|| out_dir.join("runs.csv"));
    let mut w = writer_for(&path, true)?;
    write_rows(&mut w, std::slice::from_ref(&record))?;
    println!("{}", summary_line(&record));
    println!("appended to {}", path.display());
    Ok(())
}
