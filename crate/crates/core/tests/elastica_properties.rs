use proptest::prelude::*;
use vsa_core::elastica::*;

const EI: f64 = 0.84375;

fn tip(load: f64, arc: f64, steps: usize) -> ElasticaSolution {
    solve_tip_load(&ElasticaParams {
        flexural_rigidity: EI,
        load,
        arc_length: arc,
        steps,
        tol: 1e-13,
    })
    .unwrap()
}

#[test]
fn small_load_recovers_cantilever_formula() {
    let s: f64 = 0.05;
    // Load giving a linear tip deflection of 0.1 % of the span.
    let f = 3.0 * EI * 1e-3 * s / s.powi(3);
    let sol = tip(f, s, 20_000);
    let linear = f * s.powi(3) / (3.0 * EI);
    assert!((sol.deflection / linear - 1.0).abs() < 1e-3);
}

#[test]
fn step_halving_converges() {
    let coarse = tip(150.0, 0.04, 100_000);
    let fine = tip(150.0, 0.04, 200_000);
    let rel = (coarse.deflection - fine.deflection).abs() / fine.deflection;
    assert!(rel < 1e-8, "{rel:e}");

    // Observed order on a coarser ladder, well above round-off.
    let d: Vec<f64> = [200, 400, 800].iter().map(|&n| tip(150.0, 0.04, n).deflection).collect();
    let order = ((d[0] - d[1]) / (d[1] - d[2])).abs().log2();
    assert!(order >= 2.0, "order {order}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn deflection_increases_with_load(f1 in 1.0..400.0_f64, f2 in 1.0..400.0_f64) {
        prop_assume!((f1 - f2).abs() > 1e-3);
        let (lo, hi) = if f1 < f2 { (f1, f2) } else { (f2, f1) };
        prop_assert!(tip(lo, 0.04, 2000).deflection < tip(hi, 0.04, 2000).deflection);
    }

    #[test]
    fn loaded_beam_foreshortens(f in prop_oneof![-400.0..-0.01_f64, 0.01..400.0_f64]) {
        prop_assert!(tip(f, 0.04, 2000).foreshortening > 0.0);
    }

    #[test]
    fn inverse_then_forward_round_trips(a in 0.01..0.08_f64, ratio in -0.3..0.3_f64) {
        let dy = ratio * a;
        let opts = SolverOptions::default();
        let (f, sol) = force_from_constraint(dy, a, EI, &opts).unwrap();
        let fwd = solve_tip_load(&ElasticaParams {
            flexural_rigidity: EI,
            load: f,
            arc_length: sol.contact_arc,
            steps: opts.steps,
            tol: opts.tol,
        }).unwrap();
        prop_assert!((fwd.contact().x - a).abs() <= 1e-8 * a);
        prop_assert!((fwd.deflection - dy).abs() <= 1e-8 * a);
    }
}
