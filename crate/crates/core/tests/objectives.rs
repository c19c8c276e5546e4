mod common;

use ossmax::objectives::{
    hessian_form_or_fd, make_coverage_instance, random_semimetric_instance, verify_oss,
    LinearObjective, NoiseKind, NoisyObjective,
};
use ossmax::{Objective, StochasticOracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn coverage_matches_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in common::coverage_suite() {
        let common::Family::Coverage(f) = &case.family else {
            unreachable!()
        };
        for _ in 0..20 {
            let x: Vec<f64> = (0..f.dim()).map(|_| rng.gen()).collect();
            let closed = f.value(&x);
            let brute = common::enumerate_multilinear(f, &x);
            assert!(
                (closed - brute).abs() <= 1e-9,
                "{}: {closed} vs {brute}",
                case.id
            );
        }
    }
}

#[test]
fn coverage_gradient_matches_finite_differences() {
    let f = make_coverage_instance(5, 9, 0.4, (0.5, 2.0), 8).unwrap();
    let x = [0.3, 0.7, 0.1, 0.5, 0.9];
    let g = f.gradient(&x);
    for i in 0..5 {
        let (mut hi, mut lo) = (x.to_vec(), x.to_vec());
        hi[i] += 1e-6;
        lo[i] -= 1e-6;
        let fd = (f.value(&hi) - f.value(&lo)) / 2e-6;
        assert!((fd - g[i]).abs() < 1e-6, "{i}: {fd} vs {}", g[i]);
    }
}

/// Multilinear in each coordinate: every diagonal Hessian entry is zero.
#[test]
fn coverage_hessian_diagonal_vanishes() {
    let f = make_coverage_instance(4, 8, 0.5, (0.5, 1.0), 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let x: Vec<f64> = (0..4).map(|_| 0.1 + 0.8 * rng.gen::<f64>()).collect();
        for i in 0..4 {
            let mut e = vec![0.0; 4];
            e[i] = 1.0;
            assert!(hessian_form_or_fd(&f, &x, &e).abs() <= 1e-9);
        }
    }
}

#[test]
fn quadratic_hessian_form_is_exact() {
    let (q, _) = random_semimetric_instance(5, 2, (0.0, 1.0), 3).unwrap();
    let u = [0.2, 0.0, 0.4, 1.0, 0.3];
    let x = [0.5; 5];
    let fd = {
        // Central difference of the gradient, independent of the closed form.
        let (mut hi, mut lo) = (x.to_vec(), x.to_vec());
        for i in 0..5 {
            hi[i] += 1e-4 * u[i];
            lo[i] -= 1e-4 * u[i];
        }
        let (gh, gl) = (q.gradient(&hi), q.gradient(&lo));
        (0..5).map(|i| u[i] * (gh[i] - gl[i]) / 2e-4).sum::<f64>()
    };
    assert!((q.hessian_form(&x, &u).unwrap() - fd).abs() < 1e-9);
}

#[test]
fn noisy_samples_are_unbiased_with_bounded_variance() {
    let truth = make_coverage_instance(4, 6, 0.5, (0.5, 1.5), 2).unwrap();
    let x = [0.2, 0.4, 0.6, 0.8];
    let exact = truth.value(&x);
    let grad = truth.gradient(&x);
    for kind in [NoiseKind::Uniform, NoiseKind::Gaussian] {
        let theta = 0.5;
        let noisy = NoisyObjective::new(truth.clone(), theta, kind, 17).unwrap();
        let samples = 10_000;
        let values: Vec<f64> = (0..samples).map(|d| noisy.sample_value(&x, d)).collect();
        let mean = values.iter().sum::<f64>() / samples as f64;
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (samples - 1) as f64;
        let se = (var / samples as f64).sqrt();
        assert!(
            (mean - exact).abs() <= 3.0 * se,
            "{kind:?}: {mean} vs {exact} (se {se})"
        );

        let mut sq = 0.0;
        let mut sum = [0.0; 4];
        for d in 0..samples {
            let g = noisy.sample_gradient(&x, d);
            sq += g
                .iter()
                .zip(&grad)
                .map(|(a, b)| (a - b).powi(2))
                .sum::<f64>();
            for (s, gi) in sum.iter_mut().zip(&g) {
                *s += gi;
            }
        }
        let mse = sq / samples as f64;
        assert!(mse <= theta * theta * 1.05, "{kind:?}: {mse}");
        for (s, g) in sum.iter().zip(&grad) {
            // Per-coordinate variance θ²/n.
            let se = (theta * theta / 4.0 / samples as f64).sqrt();
            assert!((s / samples as f64 - g).abs() <= 3.0 * se);
        }
    }
}

#[test]
fn zero_noise_is_exact() {
    let truth = LinearObjective::new(vec![1.0, 2.0]).unwrap();
    let noisy = NoisyObjective::new(truth, 0.0, NoiseKind::Gaussian, 0).unwrap();
    assert_eq!(noisy.sample_gradient(&[0.5, 0.5], 3), vec![1.0, 2.0]);
    assert_eq!(noisy.sample_value(&[0.5, 0.5], 3), 1.5);
}

#[test]
fn shipped_families_pass_oss() {
    for case in common::suite() {
        let r = verify_oss(case.obj(), case.sigma(), 1000, 4, 1e-9).unwrap();
        assert!(r.pass, "{}: worst {}", case.id, r.worst_violation);
    }
}
