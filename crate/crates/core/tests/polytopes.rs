mod common;

use ossmax::objectives::LinearObjective;
use ossmax::polytopes::{membership, opt_bounds, OrderPolytope};
use ossmax::solvers::{brute_force_opt, jspg_solve};
use ossmax::{guaranteed_ratio, Polytope, SolverConfig};

#[test]
fn bounds_bracket_grid_optimum() {
    for case in common::suite() {
        let (lo, hi) = opt_bounds(case.obj(), case.poly.as_ref()).unwrap();
        let grid = brute_force_opt(case.obj(), case.poly.as_ref(), 10, 1e-9)
            .unwrap()
            .value;
        assert!(
            lo <= grid + 1e-12 && grid <= hi + 1e-12,
            "{}: {lo} {grid} {hi}",
            case.id
        );
    }
}

#[test]
fn order_polytope_is_not_downward_closed() {
    let p = OrderPolytope::new(2, vec![(0, 1)]).unwrap();
    assert!(membership(&p, &[0.2, 0.9], 1e-12).unwrap());
    // Lowering x₂ below x₁ leaves P.
    assert!(!membership(&p, &[0.2, 0.1], 1e-12).unwrap());
    assert!(membership(&p, &[0.2], 1e-12).is_err());
}

#[test]
fn jspg_on_order_polytope_prefers_the_constrained_coordinate() {
    // Weight on x₁ pulls it up, but x₁ ≤ x₂ forces x₂ along.
    let f = LinearObjective::new(vec![3.0, 0.5]).unwrap();
    let p = OrderPolytope::new(2, vec![(0, 1)]).unwrap();
    let cfg = SolverConfig {
        epsilon: 0.1,
        ..Default::default()
    };
    let sol = jspg_solve(&f, &p, &cfg).unwrap();
    assert!(p.contains(&sol.x, 1e-9));
    let grid = brute_force_opt(&f, &p, 10, 1e-9).unwrap().value;
    assert!(sol.value >= guaranteed_ratio(&cfg).unwrap() * grid);
}
