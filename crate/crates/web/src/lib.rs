//! Browser bindings: torque families, the stiffness curve and a
//! soft-to-stiff sweep, all computed by `vsa-core` in the page.

use vsa_core::control::{blended_ramp, stiffness_command, PidGains};
use vsa_core::dynamics::{simulate, Actuation, ActuatorState, Drives, Plant, SimConfig};
use vsa_core::elastica::{deviation_at, CellStatus, SolverOptions};
use vsa_core::scenario::{linspace, sweep_work_bound, SWEEP_BLEND};
use vsa_core::spring::{
    joint_stiffness, motor_from_roller, potential_energy, spring_torque, ScrewParams, SpringBankParams,
};
use wasm_bindgen::prelude::*;

pub const Q_POINTS: usize = 61;
pub const FAMILY: usize = 8;
pub const CURVE_POINTS: usize = 71;

fn spring(leaves: u32, thickness_mm: f64) -> Result<SpringBankParams, JsError> {
    let s = SpringBankParams {
        count: leaves,
        thickness: thickness_mm * 1e-3,
        ..SpringBankParams::default()
    };
    s.check().map_err(|e| JsError::new(&e.to_string()))?;
    Ok(s)
}

/// Deflection grid shared by the torque plot (rad).
#[wasm_bindgen]
pub fn deflection_grid() -> Vec<f64> {
    linspace(-0.3, 0.3, Q_POINTS)
}

/// Roller positions of the torque family (m).
#[wasm_bindgen]
pub fn family_grid() -> Vec<f64> {
    let s = ScrewParams::default();
    linspace(s.x_min, s.x_max, FAMILY)
}

/// `τ_s` for every roller position in [`family_grid`], each over
/// [`deflection_grid`], concatenated. With `elastica` set, the contact force
/// comes from the large-deflection solver.
#[wasm_bindgen]
pub fn torque_family(leaves: u32, thickness_mm: f64, elastica: bool) -> Result<Vec<f64>, JsError> {
    let spring = spring(leaves, thickness_mm)?;
    let opts = SolverOptions::default();
    let q = deflection_grid();
    let mut out = Vec::with_capacity(FAMILY * Q_POINTS);
    for x in family_grid() {
        for &qd in &q {
            let tau = spring_torque(qd, x, &spring);
            let scale = if elastica && qd != 0.0 {
                let row = deviation_at(qd, x, &spring, &opts);
                match row.status {
                    CellStatus::Ok => 1.0 + row.rel_dev,
                    CellStatus::Failed(_) => f64::NAN,
                }
            } else {
                1.0
            };
            out.push(tau * scale);
        }
    }
    Ok(out)
}

/// Pairs `(x_r, k(0, x_r))` over the roller travel, flattened.
#[wasm_bindgen]
pub fn stiffness_curve(leaves: u32, thickness_mm: f64) -> Result<Vec<f64>, JsError> {
    let spring = spring(leaves, thickness_mm)?;
    let s = ScrewParams::default();
    Ok(linspace(s.x_min, s.x_max, CURVE_POINTS)
        .into_iter()
        .flat_map(|x| [x, joint_stiffness(0.0, x, &spring)])
        .collect())
}

/// Soft-to-stiff sweep held at deflection `q_d`.
///
/// Returns `[W_m2_abs, W_m2, ΔU, bound, n, t…, x_r…, W_m2_abs(t)…]` where
/// `n` is the number of samples and `bound` the friction+inertia work of
/// an unloaded sweep.
#[wasm_bindgen]
pub fn sweep_energy(q_d: f64) -> Result<Vec<f64>, JsError> {
    let plant = Plant::default();
    let (spring, screw) = (plant.spring, plant.screw);
    let (sweep_time, duration) = (1.0, 1.5);
    let blend = SWEEP_BLEND * sweep_time;
    let c = spring.bank_coefficient();
    let xr = blended_ramp(screw.x_max, screw.x_min, 0.0, sweep_time, blend);
    let target = Box::new(move |t: f64| c / xr(t));
    let drives = Drives {
        motor1: Actuation::Locked,
        motor2: Actuation::Controlled(Box::new(stiffness_command(
            target,
            PidGains::motor2_default(),
            spring,
            screw,
        ))),
        load: Actuation::Locked,
    };
    let q_start = motor_from_roller(screw.x_max, &screw).map_err(|e| JsError::new(&e.to_string()))?;
    let q_end = motor_from_roller(screw.x_min, &screw).map_err(|e| JsError::new(&e.to_string()))?;
    let init = ActuatorState {
        q_m1: q_d,
        q_m2: q_start,
        ..Default::default()
    };
    let cfg = SimConfig {
        dt: 1e-4,
        duration,
        record_every: 50,
    };
    let run = simulate(plant, drives, init, &cfg)
        .into_result()
        .map_err(|e| JsError::new(&e.to_string()))?;
    let (bound, _) = sweep_work_bound(plant.actuator.j_m2, plant.actuator.b_m2, q_end - q_start, sweep_time, blend);
    let delta_u = potential_energy(q_d, screw.x_min, &spring) - potential_energy(q_d, screw.x_max, &spring);
    let mut out = vec![
        run.ledger.w_m2_abs,
        run.ledger.w_m2,
        delta_u,
        bound,
        run.rows.len() as f64,
    ];
    out.extend(run.rows.iter().map(|r| r.state.t));
    out.extend(run.rows.iter().map(|r| r.x_r));
    out.extend(run.rows.iter().map(|r| r.ledger.w_m2_abs));
    Ok(out)
}
