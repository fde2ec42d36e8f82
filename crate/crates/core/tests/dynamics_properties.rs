use vsa_core::config::Config;
use vsa_core::control::{position_command, ramp, stiffness_command, PidGains};
use vsa_core::dynamics::*;
use vsa_core::scenario::{convergence_audit, trajectory_table};
use vsa_core::spring::{joint_stiffness, motor_from_roller, ScrewParams, SpringBankParams};

fn cfg(dt: f64, duration: f64, record_every: usize) -> SimConfig {
    SimConfig {
        dt,
        duration,
        record_every,
    }
}

fn frictionless() -> Plant {
    let mut p = Plant::default();
    p.actuator = p.actuator.frictionless();
    p
}

#[test]
fn small_oscillation_matches_harmonic_solution() {
    let plant = frictionless();
    let x_r = 0.04;
    let amp = 1e-3;
    let drives = Drives {
        motor1: Actuation::Locked,
        motor2: Actuation::Locked,
        load: Actuation::Free,
    };
    let init = ActuatorState {
        q_l: -amp,
        q_m2: motor_from_roller(x_r, &plant.screw).unwrap(),
        ..Default::default()
    };
    let run = simulate(plant, drives, init, &cfg(1e-4, 0.2, 10)).into_result().unwrap();
    let omega = (joint_stiffness(0.0, x_r, &plant.spring) / plant.actuator.j_l).sqrt();
    let worst = run
        .rows
        .iter()
        .map(|r| (r.state.q_l + amp * (omega * r.state.t).cos()).abs())
        .fold(0.0, f64::max);
    assert!(worst < 1e-4 * amp, "max error {worst:e}");
    let peak = run.rows.iter().map(|r| r.state.q_l.abs()).fold(0.0, f64::max);
    assert!((peak - amp).abs() < 1e-6 * amp);
}

#[test]
fn integrator_order_at_least_four() {
    let audit = convergence_audit(&Config::default(), 0.1, 0.04, &cfg(1e-5, 1.0, 1000)).unwrap();
    assert!(audit.state_order >= 3.9, "state order {}", audit.state_order);
    assert!(audit.drift < 1e-3);
}

#[test]
fn zero_state_stays_put() {
    let run = simulate(Plant::default(), Drives::default(), ActuatorState::default(), &cfg(1e-4, 0.1, 100))
        .into_result()
        .unwrap();
    let s = run.final_state;
    assert_eq!([s.q_m1, s.q_m2, s.q_l, s.dq_m1, s.dq_m2, s.dq_l], [0.0; 6]);
    assert!(run.rows.iter().all(|r| r.flags.label() == "ok"));
}

#[test]
fn driven_run_balances_energy() {
    let plant = Plant::default();
    let drives = Drives {
        motor1: Actuation::Profile(Box::new(|t| 2.0 * (15.0 * t).sin())),
        motor2: Actuation::Profile(Box::new(|t| -2e-3 * (3.0 * t).cos())),
        load: Actuation::Profile(Box::new(|t| 0.5 * (7.0 * t).sin())),
    };
    let init = ActuatorState {
        q_m2: motor_from_roller(0.05, &plant.screw).unwrap(),
        ..Default::default()
    };
    let run = simulate(plant, drives, init, &cfg(1e-5, 1.0, 1000)).into_result().unwrap();
    let l = run.ledger;
    assert!(l.peak_energy > 0.1);
    assert!(l.max_abs_residual < 1e-3 * l.peak_energy, "{:e}", l.max_abs_residual / l.peak_energy);
    assert!(l.d_fric > 0.0 && l.d_stop == 0.0);
}

fn servo_run() -> Simulation {
    let plant = Plant::default();
    let spring = SpringBankParams::default();
    let screw = ScrewParams::default();
    let drives = Drives {
        motor1: Actuation::Controlled(Box::new(position_command(
            Box::new(ramp(0.0, 0.05, 0.0, 0.1)),
            PidGains::motor1_default(),
        ))),
        motor2: Actuation::Controlled(Box::new(stiffness_command(
            Box::new(|t| 300.0 + 500.0 * t),
            PidGains::motor2_default(),
            spring,
            screw,
        ))),
        load: Actuation::Free,
    };
    simulate(plant, drives, ActuatorState::default(), &cfg(1e-4, 0.3, 7))
}

#[test]
fn identical_inputs_identical_trajectories() {
    let a = servo_run().into_result().unwrap();
    let b = servo_run().into_result().unwrap();
    assert_eq!(trajectory_table(&a.rows).render(), trajectory_table(&b.rows).render());
    for (x, y) in a.rows.iter().zip(&b.rows) {
        assert_eq!(x.tau_m1.to_bits(), y.tau_m1.to_bits());
        assert_eq!(x.tau_m2.to_bits(), y.tau_m2.to_bits());
    }
}

#[test]
fn equilibrium_motor2_is_bare_inertia_damper() {
    let plant = Plant::default();
    let tau = -1e-3;
    let drives = Drives {
        motor1: Actuation::Locked,
        motor2: Actuation::Constant(tau),
        load: Actuation::Locked,
    };
    let run = simulate(plant, drives, ActuatorState::default(), &cfg(1e-4, 0.2, 1))
        .into_result()
        .unwrap();
    let (j, b) = (plant.actuator.j_m2, plant.actuator.b_m2);
    for r in &run.rows {
        let t = r.state.t;
        let exact_q = tau / b * (t - j / b * (1.0 - (-b * t / j).exp()));
        let exact_w = tau / b * (1.0 - (-b * t / j).exp());
        assert_eq!(r.tau_sd, 0.0);
        assert!((r.state.q_m2 - exact_q).abs() < 1e-12, "t={t}");
        assert!((r.state.dq_m2 - exact_w).abs() < 1e-12, "t={t}");
    }
}

fn frozen_roller_run(actuator: ActuatorParams, motor2_start: f64) -> Simulation {
    let mut plant = Plant::default();
    plant.actuator = actuator;
    let drives = Drives {
        motor1: Actuation::Profile(Box::new(|t| 5.0 * (20.0 * t).sin())),
        motor2: Actuation::Locked,
        load: Actuation::Free,
    };
    let init = ActuatorState {
        q_m1: 0.05,
        q_m2: motor2_start,
        ..Default::default()
    };
    simulate(plant, drives, init, &cfg(1e-4, 0.5, 5)).into_result().unwrap()
}

#[test]
fn frozen_roller_isolates_motor1_and_link() {
    let q_m2 = motor_from_roller(0.03, &ScrewParams::default()).unwrap();
    let a = frozen_roller_run(ActuatorParams::default(), q_m2);
    let heavy = ActuatorParams {
        j_m2: 1e-2,
        b_m2: 0.3,
        ..ActuatorParams::default()
    };
    let b = frozen_roller_run(heavy, q_m2);
    for (x, y) in a.rows.iter().zip(&b.rows) {
        let (s, u) = (&x.state, &y.state);
        assert_eq!(
            [s.q_m1, s.q_l, s.dq_m1, s.dq_l].map(f64::to_bits),
            [u.q_m1, u.q_l, u.dq_m1, u.dq_l].map(f64::to_bits)
        );
    }
}

#[test]
fn carriage_held_by_stop_equals_locked_carriage() {
    let plant = Plant::default();
    let run = |motor2: Actuation| {
        let drives = Drives {
            motor1: Actuation::Profile(Box::new(|t| 3.0 * (10.0 * t).sin())),
            motor2,
            load: Actuation::Free,
        };
        let init = ActuatorState {
            q_m1: 0.05,
            ..Default::default()
        };
        simulate(plant, drives, init, &cfg(1e-4, 0.3, 5)).into_result().unwrap()
    };
    // At x_max the spring's axial push and the motor torque both press
    // outward, so the carriage never leaves the stop.
    let pinned = run(Actuation::Constant(0.01));
    let locked = run(Actuation::Locked);
    for (p, l) in pinned.rows.iter().zip(&locked.rows) {
        assert_eq!(p.state.q_m2, 0.0);
        assert_eq!(p.state.q_l.to_bits(), l.state.q_l.to_bits());
        assert_eq!(p.state.q_m1.to_bits(), l.state.q_m1.to_bits());
        assert_eq!(p.p_m2, 0.0);
    }
}

#[test]
fn holding_stiffness_draws_no_motor2_power() {
    let spring = SpringBankParams::default();
    let screw = ScrewParams::default();
    for i in 0..71 {
        let x_r = 0.01 + 0.001 * i as f64;
        let k = joint_stiffness(0.0, x_r, &spring);
        let lp = stiffness_command(Box::new(move |_| k), PidGains::motor2_default(), spring, screw);
        let (q_m2, _) = lp.setpoint(k).unwrap();
        let drives = Drives {
            motor1: Actuation::Locked,
            motor2: Actuation::Controlled(Box::new(lp)),
            load: Actuation::Free,
        };
        let init = ActuatorState {
            q_m2,
            ..Default::default()
        };
        let run = simulate(Plant::default(), drives, init, &cfg(1e-4, 0.05, 1)).into_result().unwrap();
        assert!(run.rows.iter().all(|r| r.p_m2 == 0.0 && r.tau_m2 == 0.0), "x_r = {x_r}");
        assert_eq!(run.ledger.w_m2_abs, 0.0);
    }
}

#[test]
fn locked_carriage_holds_deflected_spring_for_free() {
    let plant = Plant::default();
    let drives = Drives {
        motor1: Actuation::Locked,
        motor2: Actuation::Locked,
        load: Actuation::Locked,
    };
    let init = ActuatorState {
        q_m1: 0.15,
        q_m2: motor_from_roller(0.02, &plant.screw).unwrap(),
        ..Default::default()
    };
    let run = simulate(plant, drives, init, &cfg(1e-4, 0.1, 10)).into_result().unwrap();
    assert!(run.rows.iter().all(|r| r.p_m2 == 0.0 && r.tau_sd != 0.0));
    assert_eq!(run.ledger.w_m2_abs, 0.0);
}
