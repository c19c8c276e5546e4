use ossmax::instance::ObjectiveSpec;
use ossmax::objectives::{verify_eta_local, verify_oss, verify_semimetric, VerifyReport};

use crate::args::VerifyArgs;
use crate::commands::load_instance;
use crate::failure::{CmdResult, Failure};

const VALUE_TOL: f64 = 1e-9;

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn print_sampled(label: &str, r: &VerifyReport) {
    println!(
        "{} {label}: {} samples, worst violation {:.6e}",
        verdict(r.pass),
        r.trials,
        r.worst_violation
    );
    if !r.pass {
        let w = &r.witness;
        match w.step {
            Some(s) => println!("  witness x={:?} u={:?} step={s}", w.x, w.u),
            None => println!("  witness x={:?} u={:?}", w.x, w.u),
        }
    }
}

pub fn run(a: &VerifyArgs) -> CmdResult {
    let inst = load_instance(&a.instance)?;
    let (obj, _) = inst.build()?;
    let sigma = a.sigma.unwrap_or_else(|| obj.sigma_claimed());
    if !(sigma.is_finite() && sigma >= 0.0) {
        return Err(Failure::validation(format!(
            "sigma {sigma} must be finite and nonnegative"
        )));
    }
    let mut pass = true;
    println!(
        "{} ({}, n={}), sigma={sigma}",
        inst.id,
        inst.objective.kind(),
        inst.dimension()
    );

    if let ObjectiveSpec::QuadraticSemimetric { m, dimension, .. } = &inst.objective {
        let r = verify_semimetric(m, *dimension, sigma)?;
        println!(
            "{} semi-metric triples: worst excess {:.6e}",
            verdict(r.pass),
            r.worst_excess
        );
        if !r.pass {
            if let Some((i, j, k)) = r.witness {
                println!(
                    "  witness triple (i, j, k) = ({i}, {j}, {k}): M_ij > sigma (M_ik + M_kj)"
                );
            }
        }
        pass &= r.pass;
    }

    let r = verify_oss(obj.as_ref(), sigma, a.trials, a.seed, VALUE_TOL)?;
    print_sampled("one-sided smoothness", &r);
    pass &= r.pass;

    if let Some(eta) = a.eta {
        let r = verify_eta_local(obj.as_ref(), eta, a.trials, a.seed, VALUE_TOL)?;
        print_sampled(&format!("eta-local (eta={eta})"), &r);
        pass &= r.pass;
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
