//! Scenario runners. Each one produces one or more CSV tables plus a list
//! of self-audit checks and a JSON summary for the run manifest.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::config::Config;
use crate::control::{blended_ramp, position_command, ramp, stiffness_command};
use crate::dynamics::{
    simulate, Actuation, ActuatorState, Drives, SimConfig, Simulation, TrajectoryRow,
};
use crate::elastica::{compare_with_linear, max_deviation_by_band, CellStatus, SolverOptions};
use crate::error::{Result, VsaError};
use crate::spring::{
    joint_stiffness, motor_from_roller, potential_energy, screw_reaction, spring_torque,
    DEFLECTION_LIMIT,
};
use crate::table::{Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioKind {
    StaticTorque,
    StiffnessCurve,
    DisturbanceMap,
    DeflectionExperiment,
    StiffnessSweepEnergy,
    PassiveAudit,
    Simulate,
    ElasticaCompare,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 8] = [
        ScenarioKind::StaticTorque,
        ScenarioKind::StiffnessCurve,
        ScenarioKind::DisturbanceMap,
        ScenarioKind::DeflectionExperiment,
        ScenarioKind::StiffnessSweepEnergy,
        ScenarioKind::PassiveAudit,
        ScenarioKind::Simulate,
        ScenarioKind::ElasticaCompare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::StaticTorque => "static-torque",
            ScenarioKind::StiffnessCurve => "stiffness-curve",
            ScenarioKind::DisturbanceMap => "disturbance-map",
            ScenarioKind::DeflectionExperiment => "deflection-experiment",
            ScenarioKind::StiffnessSweepEnergy => "stiffness-sweep-energy",
            ScenarioKind::PassiveAudit => "passive-audit",
            ScenarioKind::Simulate => "simulate",
            ScenarioKind::ElasticaCompare => "elastica-compare",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    fn is_trajectory(self) -> bool {
        matches!(
            self,
            ScenarioKind::DeflectionExperiment
                | ScenarioKind::StiffnessSweepEnergy
                | ScenarioKind::PassiveAudit
                | ScenarioKind::Simulate
        )
    }
}

/// Force law behind the static tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForceOracle {
    #[default]
    ClosedForm,
    /// Closed-form loads rescaled by the large-deflection contact force.
    Elastica,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioSpec {
    pub kind: ScenarioKind,
    /// Deflection grid (rad); `None` selects the scenario default.
    pub q_grid: Option<Vec<f64>>,
    /// Roller-position grid (m); `None` selects the scenario default.
    pub x_grid: Option<Vec<f64>>,
    pub dt: Option<f64>,
    pub duration: Option<f64>,
    pub oracle: ForceOracle,
    pub out: Option<PathBuf>,
}

impl ScenarioSpec {
    pub fn new(kind: ScenarioKind) -> Self {
        Self {
            kind,
            q_grid: None,
            x_grid: None,
            dt: None,
            duration: None,
            oracle: ForceOracle::ClosedForm,
            out: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    /// Tables with an optional label; several tables go to separate files.
    pub tables: Vec<(Option<String>, Table)>,
    pub checks: Vec<Check>,
    pub summary: Map<String, Value>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// `n` evenly spaced points snapped to a 1e-12 lattice, so `0.02` comes
/// out as the double nearest to 0.02.
pub fn linspace(from: f64, to: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![from];
    }
    (0..n)
        .map(|i| {
            let v = from + (to - from) * i as f64 / (n - 1) as f64;
            (v * 1e12).round() / 1e12
        })
        .collect()
}

pub const FAMILY_POINTS: usize = 8;
pub const CURVE_POINTS: usize = 71;
pub const DEFLECTION_POINTS: usize = 61;
pub const DEFLECTION_SPAN: f64 = 0.3;

fn default_grids(kind: ScenarioKind, cfg: &Config) -> (Vec<f64>, Vec<f64>) {
    let (lo, hi) = (cfg.screw.x_min, cfg.screw.x_max);
    let q_span = linspace(-DEFLECTION_SPAN, DEFLECTION_SPAN, DEFLECTION_POINTS);
    match kind {
        ScenarioKind::StaticTorque | ScenarioKind::DisturbanceMap | ScenarioKind::ElasticaCompare => {
            (q_span, linspace(lo, hi, FAMILY_POINTS))
        }
        ScenarioKind::StiffnessCurve => (vec![0.0], linspace(lo, hi, CURVE_POINTS)),
        ScenarioKind::DeflectionExperiment => (vec![0.1], vec![0.25 * hi, hi]),
        ScenarioKind::StiffnessSweepEnergy => (vec![0.0, 0.15], vec![lo, hi]),
        ScenarioKind::PassiveAudit | ScenarioKind::Simulate => (vec![0.1], vec![0.5 * hi]),
    }
}

fn default_timing(kind: ScenarioKind) -> (f64, f64) {
    match kind {
        ScenarioKind::DeflectionExperiment => (1e-4, 2.0),
        ScenarioKind::StiffnessSweepEnergy => (1e-4, 1.5),
        ScenarioKind::PassiveAudit => (1e-5, 1.0),
        _ => (1e-4, 1.0),
    }
}

/// Grids after defaults, sorting and de-duplication.
pub fn resolve_grids(spec: &ScenarioSpec, cfg: &Config) -> Result<(Vec<f64>, Vec<f64>)> {
    let (dq, dx) = default_grids(spec.kind, cfg);
    let mut q = spec.q_grid.clone().unwrap_or(dq);
    let mut x = spec.x_grid.clone().unwrap_or(dx);
    let mut bad = Vec::new();
    for (name, g) in [("q_d", &q), ("x_r", &x)] {
        if g.is_empty() {
            bad.push(format!("{name} grid must not be empty"));
        }
        if g.iter().any(|v| !v.is_finite()) {
            bad.push(format!("{name} grid must contain only finite values"));
        }
    }
    if let Some(v) = q.iter().find(|v| v.abs() >= DEFLECTION_LIMIT) {
        bad.push(format!("q_d grid value {v} outside the admissible band |q_d| < pi/2"));
    }
    if let Some(v) = x.iter().find(|v| !(**v >= cfg.screw.x_min && **v <= cfg.screw.x_max)) {
        bad.push(format!(
            "x_r grid value {v} outside roller travel [{}, {}]",
            cfg.screw.x_min, cfg.screw.x_max
        ));
    }
    if !bad.is_empty() {
        return Err(VsaError::Validation(bad));
    }
    for g in [&mut q, &mut x] {
        g.sort_by(f64::total_cmp);
        g.dedup();
    }
    Ok((q, x))
}

/// Resolved integration settings: flag, then config, then scenario default.
pub fn resolve_timing(spec: &ScenarioSpec, cfg: &Config) -> Result<SimConfig> {
    let (dt, duration) = default_timing(spec.kind);
    let dt = spec.dt.or(cfg.sim.dt).unwrap_or(dt);
    let duration = spec.duration.or(cfg.sim.duration).unwrap_or(duration);
    let steps = if dt > 0.0 { (duration / dt).round() as usize } else { 0 };
    let sim = SimConfig {
        dt,
        duration,
        record_every: cfg.sim.record_every.unwrap_or(steps.div_ceil(2000).max(1)),
    };
    let bad = sim.violations();
    if bad.is_empty() {
        Ok(sim)
    } else {
        Err(VsaError::Validation(bad))
    }
}

pub fn run(spec: &ScenarioSpec, cfg: &Config) -> Result<Report> {
    let bad = cfg.violations();
    if !bad.is_empty() {
        return Err(VsaError::Validation(bad));
    }
    let (q, x) = resolve_grids(spec, cfg)?;
    let mut report = match spec.kind {
        ScenarioKind::StaticTorque => static_torque(cfg, &q, &x, spec.oracle),
        ScenarioKind::StiffnessCurve => stiffness_curve(cfg, &x),
        ScenarioKind::DisturbanceMap => disturbance_map(cfg, &q, &x, spec.oracle),
        ScenarioKind::ElasticaCompare => elastica_compare(cfg, &q, &x),
        ScenarioKind::DeflectionExperiment => {
            deflection_experiment(cfg, q[q.len() - 1], &x, &resolve_timing(spec, cfg)?)?
        }
        ScenarioKind::StiffnessSweepEnergy => stiffness_sweep_energy(cfg, &q, &x, &resolve_timing(spec, cfg)?)?,
        ScenarioKind::PassiveAudit => passive_audit(cfg, q[0], x[0], &resolve_timing(spec, cfg)?)?,
        ScenarioKind::Simulate => simulate_release(cfg, q[0], x[0], &resolve_timing(spec, cfg)?)?,
    };
    report.summary.insert("q_d_grid".into(), json!(q));
    report.summary.insert("x_r_grid".into(), json!(x));
    if spec.kind.is_trajectory() {
        let t = resolve_timing(spec, cfg)?;
        report.summary.insert("timing".into(), json!(t));
    }
    Ok(report)
}

fn summary(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Per-cell multiplier applied to the closed-form loads.
fn force_scale(cfg: &Config, q: &[f64], x: &[f64], oracle: ForceOracle) -> (Vec<f64>, Vec<Check>) {
    match oracle {
        ForceOracle::ClosedForm => (vec![1.0; q.len() * x.len()], Vec::new()),
        ForceOracle::Elastica => {
            let rows = compare_with_linear(q, x, &cfg.spring, &SolverOptions::default());
            let failed = rows.iter().filter(|r| r.status != CellStatus::Ok).count();
            let scale = rows
                .iter()
                .map(|r| match r.status {
                    CellStatus::Ok => 1.0 + r.rel_dev,
                    CellStatus::Failed(_) => f64::NAN,
                })
                .collect();
            let check = Check::new("elastica cells solved", failed == 0, format!("{failed} failed cells"));
            (scale, vec![check])
        }
    }
}

fn static_torque(cfg: &Config, q: &[f64], x: &[f64], oracle: ForceOracle) -> Report {
    let (scale, mut checks) = force_scale(cfg, q, x, oracle);
    let mut table = Table::new(&["q_d", "x_r", "tau_s"]);
    let mut torque = vec![vec![0.0; x.len()]; q.len()];
    for (i, &qd) in q.iter().enumerate() {
        for (j, &xr) in x.iter().enumerate() {
            let tau = spring_torque(qd, xr, &cfg.spring) * scale[i * x.len() + j];
            torque[i][j] = tau;
            table.push(vec![qd.into(), xr.into(), tau.into()]);
        }
    }
    let zero_ok = q
        .iter()
        .zip(&torque)
        .filter(|(qd, _)| **qd == 0.0)
        .all(|(_, row)| row.iter().all(|t| *t == 0.0));
    checks.push(Check::new("zero torque at q_d = 0", zero_ok, ""));
    let ordered = q
        .iter()
        .zip(&torque)
        .filter(|(qd, _)| **qd > 0.0)
        .all(|(_, row)| row.windows(2).all(|w| w[1] < w[0]));
    checks.push(Check::new(
        "torque strictly decreases with x_r at each q_d > 0",
        ordered,
        "",
    ));
    Report {
        tables: vec![(None, table)],
        checks,
        summary: summary(vec![("oracle", json!(oracle))]),
    }
}

fn stiffness_curve(cfg: &Config, x: &[f64]) -> Report {
    let k: Vec<f64> = x.iter().map(|&xr| joint_stiffness(0.0, xr, &cfg.spring)).collect();
    let mut table = Table::new(&["x_r", "k"]);
    for (xr, kv) in x.iter().zip(&k) {
        table.push(vec![(*xr).into(), (*kv).into()]);
    }
    let decreasing = k.windows(2).all(|w| w[1] < w[0]);
    let ratio = k[0] / k[k.len() - 1];
    let expected = x[x.len() - 1] / x[0];
    let checks = vec![
        Check::new("stiffness strictly decreases with x_r", decreasing, ""),
        Check::new(
            "endpoint ratio equals x_r ratio",
            ((ratio - expected) / expected).abs() < 1e-12,
            format!("k ratio {ratio}, x_r ratio {expected}"),
        ),
    ];
    Report {
        tables: vec![(None, table)],
        checks,
        summary: summary(vec![
            ("k_max", json!(k[0])),
            ("k_min", json!(k[k.len() - 1])),
            ("ratio", json!(ratio)),
        ]),
    }
}

fn disturbance_map(cfg: &Config, q: &[f64], x: &[f64], oracle: ForceOracle) -> Report {
    let (scale, mut checks) = force_scale(cfg, q, x, oracle);
    let mut table = Table::new(&["q_d", "x_r", "Q_x", "tau_sd_abs"]);
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    let mut zero_ok = true;
    let mut finite = true;
    for (i, &qd) in q.iter().enumerate() {
        for (j, &xr) in x.iter().enumerate() {
            let s = scale[i * x.len() + j];
            let r = screw_reaction(qd, xr, &cfg.spring, &cfg.screw);
            let (qx, tau) = (r.axial_force * s, (r.motor_torque * s).abs());
            if qd == 0.0 && tau != 0.0 {
                zero_ok = false;
            }
            finite &= tau.is_finite() && qx.is_finite();
            if tau > best.0 {
                best = (tau, qd, xr);
            }
            table.push(vec![qd.into(), xr.into(), qx.into(), tau.into()]);
        }
    }
    let q_edge = q.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    checks.push(Check::new("zero disturbance at q_d = 0", zero_ok, ""));
    checks.push(Check::new("all entries finite", finite, ""));
    checks.push(Check::new(
        "maximum on the (max |q_d|, min x_r) corner",
        best.1.abs() == q_edge && best.2 == x[0],
        format!("max {} at q_d = {}, x_r = {}", best.0, best.1, best.2),
    ));
    Report {
        tables: vec![(None, table)],
        checks,
        summary: summary(vec![
            ("oracle", json!(oracle)),
            ("max_tau_sd_abs", json!(best.0)),
            ("argmax", json!({"q_d": best.1, "x_r": best.2})),
        ]),
    }
}

/// Band within which the linear contact law must match the elastica.
pub const SMALL_DEFLECTION_BAND: f64 = 0.02;
pub const SMALL_DEFLECTION_TOL: f64 = 0.01;

fn elastica_compare(cfg: &Config, q: &[f64], x: &[f64]) -> Report {
    let rows = compare_with_linear(q, x, &cfg.spring, &SolverOptions::default());
    let mut table = Table::new(&["q_d", "x_r", "F_linear", "F_elastica", "rel_dev", "status"]);
    for r in &rows {
        table.push(vec![
            r.q_d.into(),
            r.x_r.into(),
            r.force_linear.into(),
            r.force_elastica.into(),
            r.rel_dev.into(),
            Cell::Text(r.status.label().to_string()),
        ]);
    }
    let bands = max_deviation_by_band(&rows);
    let small = bands
        .iter()
        .filter(|b| b.q_d_abs <= SMALL_DEFLECTION_BAND)
        .fold(0.0_f64, |m, b| m.max(b.max_abs_dev));
    let failed: usize = bands.iter().map(|b| b.failed).sum();
    let checks = vec![
        Check::new(
            "linear within 1% of elastica for |q_d| <= 0.02",
            small < SMALL_DEFLECTION_TOL,
            format!("max |rel_dev| {small}"),
        ),
        Check::new("all cells solved", failed == 0, format!("{failed} failed cells")),
    ];
    let bands: Vec<Value> = bands
        .iter()
        .map(|b| json!({"q_d_abs": b.q_d_abs, "max_abs_dev": b.max_abs_dev, "failed": b.failed}))
        .collect();
    Report {
        tables: vec![(None, table)],
        checks,
        summary: summary(vec![("bands", json!(bands))]),
    }
}

pub const TRAJECTORY_COLUMNS: [&str; 17] = [
    "t", "q_m1", "q_m2", "q_l", "dq_m1", "dq_m2", "dq_l", "x_r", "tau_s", "tau_sd", "k", "P_m1",
    "P_m2", "E_kin", "U_spring", "W_m2_abs", "flags",
];

pub fn trajectory_table(rows: &[TrajectoryRow]) -> Table {
    let mut table = Table::new(&TRAJECTORY_COLUMNS);
    for r in rows {
        let s = &r.state;
        table.push(vec![
            s.t.into(),
            s.q_m1.into(),
            s.q_m2.into(),
            s.q_l.into(),
            s.dq_m1.into(),
            s.dq_m2.into(),
            s.dq_l.into(),
            r.x_r.into(),
            r.tau_s.into(),
            r.tau_sd.into(),
            r.k.into(),
            r.p_m1.into(),
            r.p_m2.into(),
            r.ledger.e_kin.into(),
            r.ledger.u_spring.into(),
            r.ledger.w_m2_abs.into(),
            Cell::Text(r.flags.label()),
        ]);
    }
    table
}

fn ledger_json(sim: &Simulation) -> Value {
    let l = &sim.ledger;
    json!({
        "E_kin": l.e_kin,
        "U_spring": l.u_spring,
        "W_m1": l.w_m1,
        "W_m2": l.w_m2,
        "W_m2_abs": l.w_m2_abs,
        "W_ext": l.w_ext,
        "D_fric": l.d_fric,
        "D_stop": l.d_stop,
        "E0": l.e0,
        "max_abs_residual": l.max_abs_residual,
    })
}

/// Run independent simulations on scoped threads, results in input order.
fn run_all<F>(jobs: Vec<F>) -> Vec<Simulation>
where
    F: FnOnce() -> Simulation + Send,
{
    if std::thread::available_parallelism().map_or(1, |n| n.get()) <= 1 {
        return jobs.into_iter().map(|job| job()).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = jobs.into_iter().map(|job| scope.spawn(job)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("simulation worker panicked"))
            .collect()
    })
}

fn finish(label: &str, sim: Simulation) -> Result<Simulation> {
    sim.into_result()
        .map_err(|e| VsaError::Scenario(format!("{label}: {e}")))
}

/// Roller label used in file names and summaries.
fn label(prefix: &str, v: f64) -> String {
    format!("{prefix}{v}")
}

fn deflection_experiment(cfg: &Config, target: f64, x: &[f64], sim_cfg: &SimConfig) -> Result<Report> {
    let plant = cfg.plant();
    let ramp_time = 0.5 * sim_cfg.duration;
    let starts = x
        .iter()
        .map(|&xr| motor_from_roller(xr, &cfg.screw))
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<_> = starts
        .into_iter()
        .map(|q_m2| {
            let gains = cfg.control.motor1;
            move || {
                let drives = Drives {
                    motor1: Actuation::Controlled(Box::new(position_command(
                        Box::new(ramp(0.0, target, 0.0, ramp_time)),
                        gains,
                    ))),
                    motor2: Actuation::Locked,
                    load: Actuation::Locked,
                };
                let init = ActuatorState {
                    q_m2,
                    ..Default::default()
                };
                simulate(plant, drives, init, sim_cfg)
            }
        })
        .collect();
    let runs = run_all(jobs)
        .into_iter()
        .zip(x)
        .map(|(s, &xr)| finish(&label("x_r = ", xr), s))
        .collect::<Result<Vec<_>>>()?;

    let mut checks = Vec::new();
    let mut finals = Vec::new();
    for (run, &xr) in runs.iter().zip(x) {
        let last = run.rows.last().expect("at least one row");
        let expected = spring_torque(target, xr, &cfg.spring);
        let err = (last.tau_s - expected) / expected;
        checks.push(Check::new(
            format!("quasi-static torque within 2% of closed form at x_r = {xr}"),
            err.abs() < 0.02,
            format!("tau_s {} vs {}", last.tau_s, expected),
        ));
        finals.push(json!({"x_r": xr, "tau_s": last.tau_s, "q_d": last.state.deflection(), "expected": expected}));
    }
    let mut summary_pairs = vec![("target_deflection", json!(target)), ("final", json!(finals))];
    if runs.len() >= 2 {
        let (stiff, soft) = (&runs[0], &runs[runs.len() - 1]);
        let softer = stiff
            .rows
            .iter()
            .zip(&soft.rows)
            .filter(|(a, _)| a.tau_s > 0.0)
            .all(|(a, b)| b.tau_s < a.tau_s);
        let matched = stiff.rows.iter().filter(|r| r.tau_s > 0.0).count();
        checks.push(Check::new(
            "soft-mode torque below stiff-mode torque at every matched sample",
            softer && matched > 0,
            format!("{matched} matched samples"),
        ));
        let ratio = stiff.rows.last().unwrap().tau_s / soft.rows.last().unwrap().tau_s;
        let expected = x[x.len() - 1] / x[0];
        checks.push(Check::new(
            "quasi-static stiff/soft ratio equals x_r ratio within 1.25%",
            ((ratio - expected) / expected).abs() <= 0.0125,
            format!("ratio {ratio}, expected {expected}"),
        ));
        summary_pairs.push(("stiff_soft_ratio", json!(ratio)));
    }
    let tables = runs
        .iter()
        .zip(x)
        .map(|(r, &xr)| (Some(label("xr", xr)), trajectory_table(&r.rows)))
        .collect();
    Ok(Report {
        tables,
        checks,
        summary: summary(summary_pairs),
    })
}

/// Fraction of the sweep time spent in each acceleration blend.
pub const SWEEP_BLEND: f64 = 0.05;

/// Sweep occupies this fraction of the run; the rest lets the carriage settle.
pub const SWEEP_FRACTION: f64 = 2.0 / 3.0;

/// Motor-2 work needed to follow a blended ramp through `travel` radians in
/// `time` seconds with blends of `blend` seconds, for a bare inertia-damper
/// (`J`, `b`). Returns `(∫|τω| dt, ∫τω dt)`; the signed value is the
/// friction loss alone.
pub fn sweep_work_bound(inertia: f64, damping: f64, travel: f64, time: f64, blend: f64) -> (f64, f64) {
    let w = travel.abs() / (time - blend);
    let cruise = damping * w * w * (time - 2.0 * blend);
    if blend == 0.0 {
        return (cruise, cruise);
    }
    let a = w / blend;
    let ramp_friction = damping * w * w * blend / 3.0;
    let accel = 0.5 * inertia * w * w + ramp_friction;
    // Deceleration: power (bω − Ja)ω changes sign at ω* = Ja/b.
    let f = |v: f64| damping * v * v * v / 3.0 - inertia * a * v * v / 2.0;
    let w_star = if damping > 0.0 { inertia * a / damping } else { f64::INFINITY };
    let decel = if w <= w_star { -f(w) } else { f(w) - 2.0 * f(w_star) } / a;
    (cruise + accel + decel, cruise + 2.0 * ramp_friction)
}

fn stiffness_sweep_energy(cfg: &Config, q: &[f64], x: &[f64], sim_cfg: &SimConfig) -> Result<Report> {
    if x.len() < 2 {
        return Err(VsaError::Validation(vec![
            "x_r grid needs two distinct values (sweep endpoints)".to_string(),
        ]));
    }
    let (x_soft, x_stiff) = (x[x.len() - 1], x[0]);
    let plant = cfg.plant();
    let sweep_time = SWEEP_FRACTION * sim_cfg.duration;
    let blend = SWEEP_BLEND * sweep_time;
    let q_start = motor_from_roller(x_soft, &cfg.screw)?;
    let q_end = motor_from_roller(x_stiff, &cfg.screw)?;
    let c = cfg.spring.bank_coefficient();
    let jobs: Vec<_> = q
        .iter()
        .map(|&qd| {
            let (gains, spring, screw) = (cfg.control.motor2, cfg.spring, cfg.screw);
            move || {
                let xr = blended_ramp(x_soft, x_stiff, 0.0, sweep_time, blend);
                let target = Box::new(move |t: f64| c / xr(t));
                let drives = Drives {
                    motor1: Actuation::Locked,
                    motor2: Actuation::Controlled(Box::new(stiffness_command(target, gains, spring, screw))),
                    load: Actuation::Locked,
                };
                let init = ActuatorState {
                    q_m1: qd,
                    q_m2: q_start,
                    ..Default::default()
                };
                simulate(plant, drives, init, sim_cfg)
            }
        })
        .collect();
    let runs = run_all(jobs)
        .into_iter()
        .zip(q)
        .map(|(s, &qd)| finish(&label("q_d = ", qd), s))
        .collect::<Result<Vec<_>>>()?;

    let (w_abs_ref, w_fric_ref) = sweep_work_bound(
        cfg.dynamics.j_m2,
        cfg.dynamics.b_m2,
        q_end - q_start,
        sweep_time,
        blend,
    );
    let mut checks = Vec::new();
    let mut per_run = Vec::new();
    let base = q.iter().position(|v| *v == 0.0).map(|i| runs[i].ledger.w_m2_abs);
    for (run, &qd) in runs.iter().zip(q) {
        let l = &run.ledger;
        let reached = (run.final_state.q_m2 - q_end).abs();
        checks.push(Check::new(
            format!("carriage reaches the stiff end at q_d = {qd}"),
            reached < 1e-3,
            format!("final motor-2 error {reached} rad"),
        ));
        let delta_u = potential_energy(qd, x_stiff, &cfg.spring) - potential_energy(qd, x_soft, &cfg.spring);
        let mut entry = json!({
            "q_d": qd,
            "W_m2_abs": l.w_m2_abs,
            "W_m2": l.w_m2,
            "delta_U": delta_u,
            "ledger": ledger_json(run),
        });
        if qd == 0.0 {
            let dev = l.w_m2_abs / w_abs_ref - 1.0;
            checks.push(Check::new(
                "equilibrium sweep W_m2_abs within 10% of friction+inertia bound",
                dev.abs() <= 0.10,
                format!("W_m2_abs {} vs bound {w_abs_ref}", l.w_m2_abs),
            ));
        } else if let Some(w0) = base {
            let excess = l.w_m2_abs - w0;
            let dev = excess / delta_u - 1.0;
            checks.push(Check::new(
                format!("excess sweep work at q_d = {qd} within 5% of stored energy"),
                excess > 0.0 && dev.abs() <= 0.05,
                format!("excess {excess} vs delta_U {delta_u}"),
            ));
            entry["excess"] = json!(excess);
        }
        per_run.push(entry);
    }
    let tables = runs
        .iter()
        .zip(q)
        .map(|(r, &qd)| (Some(label("qd", qd)), trajectory_table(&r.rows)))
        .collect();
    Ok(Report {
        tables,
        checks,
        summary: summary(vec![
            ("sweep_time", json!(sweep_time)),
            ("blend_time", json!(blend)),
            ("W_abs_bound", json!(w_abs_ref)),
            ("W_friction", json!(w_fric_ref)),
            ("runs", json!(per_run)),
        ]),
    })
}

/// Undriven, frictionless run with motor 2 held at `x_r`.
pub fn passive_run(cfg: &Config, q0: f64, x_r: f64, sim_cfg: &SimConfig) -> Result<Simulation> {
    let mut plant = cfg.plant();
    plant.actuator = plant.actuator.frictionless();
    let drives = Drives {
        motor2: Actuation::Locked,
        ..Default::default()
    };
    let init = ActuatorState {
        q_m1: q0,
        q_m2: motor_from_roller(x_r, &cfg.screw)?,
        ..Default::default()
    };
    finish("passive run", simulate(plant, drives, init, sim_cfg))
}

/// Peak |E − E0| / E0, or the absolute peak when E0 is zero.
pub fn relative_drift(sim: &Simulation) -> f64 {
    let l = &sim.ledger;
    if l.e0 == 0.0 {
        l.max_abs_residual
    } else {
        l.max_abs_residual / l.e0
    }
}

pub const DRIFT_LIMIT: f64 = 1e-3;

/// Passive run at `dt` together with its step-size self-convergence.
#[derive(Debug)]
pub struct ConvergenceAudit {
    pub run: Simulation,
    /// Peak relative energy drift at `dt` and at `10 dt`.
    pub drift: f64,
    pub drift_coarse: f64,
    /// `log10(drift(10 dt) / drift(dt))`.
    pub drift_order: f64,
    /// Final-position error against a `dt / 10` reference, at `dt` and `10 dt`.
    pub state_error: f64,
    pub state_error_coarse: f64,
    /// `log10(state_error(10 dt) / state_error(dt))`; 4 for a fourth-order method.
    pub state_order: f64,
}

pub fn convergence_audit(cfg: &Config, q0: f64, x_r: f64, sim_cfg: &SimConfig) -> Result<ConvergenceAudit> {
    let coarse = SimConfig {
        dt: 10.0 * sim_cfg.dt,
        record_every: usize::MAX,
        ..*sim_cfg
    };
    let reference = SimConfig {
        dt: 0.1 * sim_cfg.dt,
        record_every: usize::MAX,
        ..*sim_cfg
    };
    let (fine, coarse, reference) = std::thread::scope(|scope| {
        let f = scope.spawn(|| passive_run(cfg, q0, x_r, sim_cfg));
        let c = scope.spawn(|| passive_run(cfg, q0, x_r, &coarse));
        let r = passive_run(cfg, q0, x_r, &reference);
        (f.join().expect("worker panicked"), c.join().expect("worker panicked"), r)
    });
    let (fine, coarse, reference) = (fine?, coarse?, reference?);
    let err = |s: &Simulation| {
        let (a, b) = (&s.final_state, &reference.final_state);
        (a.q_m1 - b.q_m1).abs().max((a.q_l - b.q_l).abs())
    };
    let (drift, drift_coarse) = (relative_drift(&fine), relative_drift(&coarse));
    let (state_error, state_error_coarse) = (err(&fine), err(&coarse));
    Ok(ConvergenceAudit {
        drift,
        drift_coarse,
        drift_order: (drift_coarse / drift).log10(),
        state_error,
        state_error_coarse,
        state_order: (state_error_coarse / state_error).log10(),
        run: fine,
    })
}

/// Lower bound on the energy-drift order. RK4 on an oscillator loses
/// energy as (ωh)⁶ per step, so the drift over a fixed time falls as h⁵.
pub const DRIFT_ORDER_MIN: f64 = 3.5;

fn passive_audit(cfg: &Config, q0: f64, x_r: f64, sim_cfg: &SimConfig) -> Result<Report> {
    let a = convergence_audit(cfg, q0, x_r, sim_cfg)?;
    let mut checks = vec![Check::new(
        "peak relative energy drift below 0.1%",
        a.drift < DRIFT_LIMIT,
        format!("drift {}", a.drift),
    )];
    if a.run.ledger.e0 > 0.0 {
        checks.push(Check::new(
            "energy drift shrinks at least 10^3.5 when dt drops 10x",
            a.drift_order >= DRIFT_ORDER_MIN,
            format!("log10 ratio {}", a.drift_order),
        ));
        checks.push(Check::new(
            "state error shrinks about 1e4 when dt drops 10x",
            (3.5..=4.5).contains(&a.state_order),
            format!("log10 ratio {}", a.state_order),
        ));
    } else {
        checks.push(Check::new("zero energy stays zero", a.drift == 0.0, ""));
    }
    let finite = |v: f64| if v.is_finite() { json!(v) } else { Value::Null };
    Ok(Report {
        tables: vec![(None, trajectory_table(&a.run.rows))],
        checks,
        summary: summary(vec![
            ("E0", json!(a.run.ledger.e0)),
            ("drift", json!(a.drift)),
            ("drift_coarse", json!(a.drift_coarse)),
            ("log10_drift_ratio", finite(a.drift_order)),
            ("state_error", json!(a.state_error)),
            ("state_error_coarse", json!(a.state_error_coarse)),
            ("log10_state_error_ratio", finite(a.state_order)),
        ]),
    })
}

/// Link released from a deflected rest state while both servo loops hold
/// motor 1 at zero and the stiffness at `k(0, x_r)`.
fn simulate_release(cfg: &Config, q0: f64, x_r: f64, sim_cfg: &SimConfig) -> Result<Report> {
    let plant = cfg.plant();
    let k = joint_stiffness(0.0, x_r, &cfg.spring);
    let drives = Drives {
        motor1: Actuation::Controlled(Box::new(position_command(Box::new(|_| 0.0), cfg.control.motor1))),
        motor2: Actuation::Controlled(Box::new(stiffness_command(
            Box::new(move |_| k),
            cfg.control.motor2,
            cfg.spring,
            cfg.screw,
        ))),
        load: Actuation::Free,
    };
    let init = ActuatorState {
        q_l: -q0,
        q_m2: motor_from_roller(x_r, &cfg.screw)?,
        ..Default::default()
    };
    let run = finish("simulation", simulate(plant, drives, init, sim_cfg))?;
    let scale = run.ledger.peak_energy.max(f64::MIN_POSITIVE);
    let balance = run.ledger.max_abs_residual / scale;
    let checks = vec![Check::new(
        "energy ledger balances",
        balance < 1e-6,
        format!("max |residual| / peak energy {balance}"),
    )];
    Ok(Report {
        tables: vec![(None, trajectory_table(&run.rows))],
        checks,
        summary: summary(vec![
            ("target_stiffness", json!(k)),
            ("final_deflection", json!(run.final_state.deflection())),
            ("ledger", ledger_json(&run)),
        ]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_hits_decimal_points() {
        assert_eq!(linspace(0.01, 0.08, 8), vec![0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08]);
        let q = linspace(-0.3, 0.3, 61);
        assert_eq!(q[30], 0.0);
        assert_eq!(q[40], 0.1);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in ScenarioKind::ALL {
            assert_eq!(ScenarioKind::from_name(k.name()), Some(k));
        }
    }

    #[test]
    fn grids_are_validated() {
        let cfg = Config::default();
        let mut spec = ScenarioSpec::new(ScenarioKind::StaticTorque);
        spec.x_grid = Some(vec![0.005]);
        assert!(matches!(resolve_grids(&spec, &cfg), Err(VsaError::Validation(_))));
        spec.x_grid = Some(vec![]);
        assert!(resolve_grids(&spec, &cfg).is_err());
        spec.x_grid = Some(vec![0.04, 0.02, 0.04]);
        assert_eq!(resolve_grids(&spec, &cfg).unwrap().1, vec![0.02, 0.04]);
    }

    #[test]
    fn sweep_bound_defaults() {
        // Constant-speed limit reduces to b ω² T.
        let (abs, fric) = sweep_work_bound(1e-5, 1e-5, 219.9114857512855, 1.0, 0.0);
        assert!((abs - 0.48361).abs() < 1e-5 && abs == fric);
        let (abs, fric) = sweep_work_bound(1e-5, 1e-5, 219.9114857512855, 1.0, 0.05);
        let w: f64 = 219.9114857512855 / 0.95;
        assert!((fric - 1e-5 * w * w * (0.9 + 0.1 / 3.0)).abs() < 1e-12);
        assert!((abs - (1e-5 * w * w * 0.9 + 1e-5 * w * w)).abs() < 1e-12);
    }

    #[test]
    fn static_table_examples() {
        let cfg = Config::default();
        let mut spec = ScenarioSpec::new(ScenarioKind::StaticTorque);
        spec.q_grid = Some(vec![0.0, 0.1]);
        spec.x_grid = Some(vec![0.02, 0.04, 0.08]);
        let r = run(&spec, &cfg).unwrap();
        assert!(r.passed());
        let tau = r.tables[0].1.column("tau_s").unwrap();
        assert_eq!(&tau[..3], &[0.0, 0.0, 0.0]);
        assert!((tau[4] - 51.820338).abs() < 1e-5);
        assert!((tau[3] / tau[5] - 4.0).abs() < 1e-12);
    }
}
