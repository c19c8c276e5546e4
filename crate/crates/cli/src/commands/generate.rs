use std::path::Path;

use ossmax::instance::{Instance, ObjectiveSpec, PolytopeSpec};
use ossmax::objectives::{make_coverage_instance, random_semimetric_instance};

use crate::args::{GenerateArgs, ObjectiveKind, PolytopeKind};
use crate::failure::{CmdResult, IoContext};

pub fn build(a: &GenerateArgs) -> Result<Instance, crate::failure::Failure> {
    let n = a.n;
    let range = (a.weight_min, a.weight_max);
    let objective = match a.kind {
        ObjectiveKind::Coverage => {
            let f = make_coverage_instance(n, a.m.unwrap_or(2 * n), a.density, range, a.seed)?;
            ObjectiveSpec::from_coverage(&f)
        }
        ObjectiveKind::QuadraticSemimetric => {
            let (f, points) = random_semimetric_instance(n, a.point_dim, range, a.seed)?;
            ObjectiveSpec::from_quadratic(&f, Some(points))
        }
    };
    let polytope = match a.polytope {
        PolytopeKind::Box => PolytopeSpec::unit_box(n),
        PolytopeKind::Cardinality => PolytopeSpec::Cardinality {
            dimension: n,
            budget: a.budget.unwrap_or(n.div_ceil(2)),
        },
        PolytopeKind::MonotoneLinear => PolytopeSpec::MonotoneLinear {
            dimension: n,
            order: (1..n).map(|i| (i - 1, i)).collect(),
        },
    };
    let id = a
        .id
        .clone()
        .unwrap_or_else(|| format!("{}-{}-n{n}-s{}", objective.kind(), polytope.kind(), a.seed));
    let inst = Instance {
        id,
        seed: Some(a.seed),
        objective,
        polytope,
    };
    // Surfaces bad budgets and the like before anything is written.
    inst.build()?;
    Ok(inst)
}

pub fn run(a: &GenerateArgs, out_dir: &Path) -> CmdResult {
    let inst = build(a)?;
    let path = a
        .out
        .clone()
        .unwrap_or_else(|| out_dir.join(format!("{}.json", inst.id)));
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).io(format!("creating {}", dir.display()))?;
    }
    std::fs::write(&path, inst.to_json()).io(format!("writing {}", path.display()))?;
    println!("{}", path.display());
    Ok(())
}
