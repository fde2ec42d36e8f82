//! Three-body actuator dynamics: motor 1, motor 2 and the output link,
//! coupled through the leaf-spring bank.
//!
//! ```text
//! J_m1 q̈_m1 + b_m1 q̇_m1 = τ_m1 − τ_s
//! J_m2 q̈_m2 + b_m2 q̇_m2 = τ_m2 − τ_s^d
//! J_l  q̈_l  + b_l  q̇_l  = τ_s  − τ_l
//! ```
//!
//! `τ_s` and `τ_s^d` come from [`crate::spring`] at `q_d = q_m1 − q_l` and
//! the roller position set by the screw. The state is advanced by
//! fixed-step RK4; work done by each port and friction losses are carried
//! as extra quadrature states so the energy ledger is integrated to the
//! same order as the motion.

use serde::{Deserialize, Serialize};

use crate::error::{Result, VsaError};
use crate::spring::{
    joint_stiffness, motor_from_roller, potential_energy, roller_from_motor, screw_reaction,
    spring_torque, ScrewParams, SpringBankParams, DEFLECTION_LIMIT,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ActuatorParams {
    #[serde(rename = "J_m1")]
    pub j_m1: f64,
    #[serde(rename = "J_m2")]
    pub j_m2: f64,
    #[serde(rename = "J_l")]
    pub j_l: f64,
    pub b_m1: f64,
    pub b_m2: f64,
    pub b_l: f64,
}

impl Default for ActuatorParams {
    fn default() -> Self {
        Self {
            j_m1: 1e-3,
            j_m2: 1e-5,
            j_l: 1e-2,
            b_m1: 1e-3,
            b_m2: 1e-5,
            b_l: 1e-3,
        }
    }
}

impl ActuatorParams {
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        for (name, j) in [("J_m1", self.j_m1), ("J_m2", self.j_m2), ("J_l", self.j_l)] {
            if !(j > 0.0 && j.is_finite()) {
                v.push(format!("dynamics.{name} must be positive (got {j})"));
            }
        }
        for (name, b) in [("b_m1", self.b_m1), ("b_m2", self.b_m2), ("b_l", self.b_l)] {
            if !(b >= 0.0 && b.is_finite()) {
                v.push(format!("dynamics.{name} must be nonnegative (got {b})"));
            }
        }
        v
    }

    pub fn frictionless(self) -> Self {
        Self {
            b_m1: 0.0,
            b_m2: 0.0,
            b_l: 0.0,
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ActuatorState {
    pub q_m1: f64,
    pub q_m2: f64,
    pub q_l: f64,
    pub dq_m1: f64,
    pub dq_m2: f64,
    pub dq_l: f64,
    pub t: f64,
}

impl ActuatorState {
    #[inline]
    pub fn deflection(&self) -> f64 {
        self.q_m1 - self.q_l
    }

    fn is_finite(&self) -> bool {
        [self.q_m1, self.q_m2, self.q_l, self.dq_m1, self.dq_m2, self.dq_l, self.t]
            .iter()
            .all(|v| v.is_finite())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StateDerivative {
    pub dq_m1: f64,
    pub dq_m2: f64,
    pub dq_l: f64,
    pub ddq_m1: f64,
    pub ddq_m2: f64,
    pub ddq_l: f64,
}

/// Optional symmetric torque limits applied to the motor commands.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TorqueLimits {
    pub motor1: Option<f64>,
    pub motor2: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Plant {
    pub actuator: ActuatorParams,
    pub spring: SpringBankParams,
    pub screw: ScrewParams,
    pub limits: TorqueLimits,
}

/// Spring-side quantities at one configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpringLoads {
    pub q_d: f64,
    pub x_r: f64,
    pub roller_clamped: bool,
    pub tau_s: f64,
    pub tau_sd: f64,
}

/// Torque acting on one body during a stage.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PortTorque {
    Applied(f64),
    /// Constraint reaction holding the body at rest.
    Locked,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PortTorques {
    pub motor1: PortTorque,
    pub motor2: PortTorque,
    pub load: PortTorque,
}

impl Plant {
    pub fn new(actuator: ActuatorParams, spring: SpringBankParams, screw: ScrewParams) -> Self {
        Self {
            actuator,
            spring,
            screw,
            limits: TorqueLimits::default(),
        }
    }

    pub fn spring_loads(&self, state: &ActuatorState) -> Result<SpringLoads> {
        let q_d = state.deflection();
        if !(q_d.abs() < DEFLECTION_LIMIT) {
            return Err(VsaError::ModelDomain {
                q_d,
                state: Box::new(*state),
            });
        }
        let roller = roller_from_motor(state.q_m2, &self.screw);
        Ok(SpringLoads {
            q_d,
            x_r: roller.x_r,
            roller_clamped: roller.clamped,
            tau_s: spring_torque(q_d, roller.x_r, &self.spring),
            tau_sd: screw_reaction(q_d, roller.x_r, &self.spring, &self.screw).motor_torque,
        })
    }

    pub fn potential_energy(&self, state: &ActuatorState) -> f64 {
        let x_r = roller_from_motor(state.q_m2, &self.screw).x_r;
        potential_energy(state.deflection(), x_r, &self.spring)
    }

    pub fn kinetic_energy(&self, state: &ActuatorState) -> f64 {
        let a = &self.actuator;
        0.5 * (a.j_m1 * state.dq_m1 * state.dq_m1
            + a.j_m2 * state.dq_m2 * state.dq_m2
            + a.j_l * state.dq_l * state.dq_l)
    }

    /// Right-hand side of the equations of motion.
    pub fn state_derivative(&self, state: &ActuatorState, torques: &PortTorques) -> Result<StateDerivative> {
        let loads = self.spring_loads(state)?;
        Ok(self.derivative_with(state, &loads, torques))
    }

    fn derivative_with(&self, state: &ActuatorState, loads: &SpringLoads, torques: &PortTorques) -> StateDerivative {
        let a = &self.actuator;
        let accel = |port: PortTorque, drive_sign: f64, spring: f64, j: f64, b: f64, dq: f64| match port {
            PortTorque::Locked => 0.0,
            PortTorque::Applied(tau) => (drive_sign * tau - spring) / j - (b / j) * dq,
        };
        StateDerivative {
            dq_m1: state.dq_m1,
            dq_m2: state.dq_m2,
            dq_l: state.dq_l,
            ddq_m1: accel(torques.motor1, 1.0, loads.tau_s, a.j_m1, a.b_m1, state.dq_m1),
            ddq_m2: accel(torques.motor2, 1.0, loads.tau_sd, a.j_m2, a.b_m2, state.dq_m2),
            // Link: J_l q̈_l = τ_s − τ_l − b_l q̇_l
            ddq_l: accel(torques.load, -1.0, -loads.tau_s, a.j_l, a.b_l, state.dq_l),
        }
    }

    /// Torques actually exerted at each port, resolving constraint reactions.
    pub fn resolve(&self, state: &ActuatorState, loads: &SpringLoads, torques: &PortTorques) -> (f64, f64, f64) {
        let a = &self.actuator;
        let m1 = match torques.motor1 {
            PortTorque::Applied(t) => t,
            PortTorque::Locked => loads.tau_s + a.b_m1 * state.dq_m1,
        };
        let m2 = match torques.motor2 {
            PortTorque::Applied(t) => t,
            PortTorque::Locked => loads.tau_sd + a.b_m2 * state.dq_m2,
        };
        let l = match torques.load {
            PortTorque::Applied(t) => t,
            PortTorque::Locked => loads.tau_s - a.b_l * state.dq_l,
        };
        (m1, m2, l)
    }
}

pub fn mechanical_power(torque: f64, speed: f64) -> f64 {
    torque * speed
}

/// Output of a sampled controller for one step.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Command {
    pub torque: f64,
    pub saturated: bool,
    /// The controller had to clamp its reference to what the mechanism can reach.
    pub clamped: bool,
}

impl Command {
    pub fn torque(torque: f64) -> Self {
        Self {
            torque,
            ..Self::default()
        }
    }
}

/// A feedback law sampled once per integration step (zero-order hold).
pub trait Controller: Send {
    fn update(&mut self, state: &ActuatorState, dt: f64) -> Command;
}

impl<F> Controller for F
where
    F: FnMut(&ActuatorState) -> f64 + Send,
{
    fn update(&mut self, state: &ActuatorState, _dt: f64) -> Command {
        Command::torque(self(state))
    }
}

pub enum Actuation {
    Free,
    Constant(f64),
    /// Body held at rest by a constraint reaction.
    Locked,
    /// Torque as a pure function of time, evaluated at every RK stage.
    Profile(Box<dyn Fn(f64) -> f64 + Send>),
    /// Feedback law sampled at the start of each step and held across it.
    Controlled(Box<dyn Controller>),
}

impl std::fmt::Debug for Actuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Actuation::Free => f.write_str("Free"),
            Actuation::Constant(c) => write!(f, "Constant({c})"),
            Actuation::Locked => f.write_str("Locked"),
            Actuation::Profile(_) => f.write_str("Profile(..)"),
            Actuation::Controlled(_) => f.write_str("Controlled(..)"),
        }
    }
}

#[derive(Debug)]
pub struct Drives {
    pub motor1: Actuation,
    pub motor2: Actuation,
    pub load: Actuation,
}

impl Default for Drives {
    fn default() -> Self {
        Self {
            motor1: Actuation::Free,
            motor2: Actuation::Free,
            load: Actuation::Free,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StepFlags {
    /// Carriage sits on a travel stop.
    pub stop: bool,
    pub sat_m1: bool,
    pub sat_m2: bool,
    /// Stiffness or position reference clamped by a controller.
    pub clamped: bool,
}

impl StepFlags {
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if self.stop {
            parts.push("stop");
        }
        if self.sat_m1 {
            parts.push("sat_m1");
        }
        if self.sat_m2 {
            parts.push("sat_m2");
        }
        if self.clamped {
            parts.push("clamp");
        }
        if parts.is_empty() {
            "ok".to_string()
        } else {
            parts.join("|")
        }
    }
}

/// Cumulative energy bookkeeping for a run.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EnergyLedger {
    pub e_kin: f64,
    pub u_spring: f64,
    pub w_m1: f64,
    pub w_m2: f64,
    /// `∫|τ_m2 q̇_m2| dt`
    pub w_m2_abs: f64,
    /// Work done on the link by the environment, `−∫τ_l q̇_l dt`.
    pub w_ext: f64,
    pub d_fric: f64,
    /// Energy removed by the plastic travel stops.
    pub d_stop: f64,
    pub e0: f64,
    pub peak_energy: f64,
    pub max_abs_residual: f64,
}

impl EnergyLedger {
    pub fn total(&self) -> f64 {
        self.e_kin + self.u_spring
    }

    pub fn balance_residual(&self) -> f64 {
        self.total() - (self.w_m1 + self.w_m2 + self.w_ext - self.d_fric - self.d_stop) - self.e0
    }
}

// Integrated vector: 6 mechanical states, then W_m1, W_m2, |W_m2|, W_ext, D_fric.
const N: usize = 11;
type Vector = [f64; N];

fn pack(s: &ActuatorState) -> Vector {
    [s.q_m1, s.q_m2, s.q_l, s.dq_m1, s.dq_m2, s.dq_l, 0.0, 0.0, 0.0, 0.0, 0.0]
}

fn unpack(v: &Vector, t: f64) -> ActuatorState {
    ActuatorState {
        q_m1: v[0],
        q_m2: v[1],
        q_l: v[2],
        dq_m1: v[3],
        dq_m2: v[4],
        dq_l: v[5],
        t,
    }
}

fn axpy(base: &Vector, k: &Vector, h: f64) -> Vector {
    let mut out = *base;
    for i in 0..N {
        out[i] += h * k[i];
    }
    out
}

#[derive(Debug, Clone, Copy)]
pub enum Held {
    Free,
    Constant(f64),
    Locked,
    Profile,
    Sampled(f64),
}

/// Sampled inputs for one step, recorded alongside the trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StepInputs {
    pub tau_m1: f64,
    pub tau_m2: f64,
    pub tau_l: f64,
    pub flags: StepFlags,
}

/// Steps a plant under a set of drives and keeps the energy ledger.
pub struct Simulator {
    pub plant: Plant,
    pub drives: Drives,
    ledger: EnergyLedger,
    stop_hit: bool,
}

impl Simulator {
    pub fn new(plant: Plant, drives: Drives) -> Self {
        Self {
            plant,
            drives,
            ledger: EnergyLedger::default(),
            stop_hit: false,
        }
    }

    pub fn ledger(&self) -> &EnergyLedger {
        &self.ledger
    }

    /// Zero the velocity of locked bodies and start the ledger from `state`.
    pub fn prepare(&mut self, state: ActuatorState) -> ActuatorState {
        let mut s = state;
        if matches!(self.drives.motor1, Actuation::Locked) {
            s.dq_m1 = 0.0;
        }
        if matches!(self.drives.motor2, Actuation::Locked) {
            s.dq_m2 = 0.0;
        }
        if matches!(self.drives.load, Actuation::Locked) {
            s.dq_l = 0.0;
        }
        let e_kin = self.plant.kinetic_energy(&s);
        let u = self.plant.potential_energy(&s);
        self.ledger = EnergyLedger {
            e_kin,
            u_spring: u,
            e0: e_kin + u,
            peak_energy: e_kin + u,
            ..EnergyLedger::default()
        };
        s
    }

    fn hold(actuation: &mut Actuation, state: &ActuatorState, dt: f64, flags: &mut (bool, bool)) -> Held {
        match actuation {
            Actuation::Free => Held::Free,
            Actuation::Constant(c) => Held::Constant(*c),
            Actuation::Locked => Held::Locked,
            Actuation::Profile(_) => Held::Profile,
            Actuation::Controlled(ctrl) => {
                let cmd = ctrl.update(state, dt);
                flags.0 |= cmd.saturated;
                flags.1 |= cmd.clamped;
                Held::Sampled(cmd.torque)
            }
        }
    }

    fn stage_torque(actuation: &Actuation, held: Held, t: f64, limit: Option<f64>) -> (PortTorque, bool) {
        let raw = match held {
            Held::Free => 0.0,
            Held::Constant(c) | Held::Sampled(c) => c,
            Held::Locked => return (PortTorque::Locked, false),
            Held::Profile => match actuation {
                Actuation::Profile(f) => f(t),
                _ => unreachable!("profile hold without profile actuation"),
            },
        };
        match limit {
            Some(lim) if raw.abs() > lim => (PortTorque::Applied(raw.clamp(-lim, lim)), true),
            _ => (PortTorque::Applied(raw), false),
        }
    }

    fn stage(
        &self,
        held: [Held; 3],
        v: &Vector,
        t: f64,
    ) -> Result<(Vector, PortTorques, [f64; 3], bool, bool)> {
        let state = unpack(v, t);
        let (m1, sat1) = Self::stage_torque(&self.drives.motor1, held[0], t, self.plant.limits.motor1);
        let (m2, sat2) = Self::stage_torque(&self.drives.motor2, held[1], t, self.plant.limits.motor2);
        let (load, _) = Self::stage_torque(&self.drives.load, held[2], t, None);
        let torques = PortTorques {
            motor1: m1,
            motor2: m2,
            load,
        };
        let loads = self.plant.spring_loads(&state)?;
        let d = self.plant.derivative_with(&state, &loads, &torques);
        let (t1, t2, tl) = self.plant.resolve(&state, &loads, &torques);
        let a = &self.plant.actuator;
        let p_fric = a.b_m1 * state.dq_m1 * state.dq_m1
            + a.b_m2 * state.dq_m2 * state.dq_m2
            + a.b_l * state.dq_l * state.dq_l;
        let p_m2 = mechanical_power(t2, state.dq_m2);
        let out = [
            d.dq_m1,
            d.dq_m2,
            d.dq_l,
            d.ddq_m1,
            d.ddq_m2,
            d.ddq_l,
            mechanical_power(t1, state.dq_m1),
            p_m2,
            p_m2.abs(),
            -mechanical_power(tl, state.dq_l),
            p_fric,
        ];
        Ok((out, torques, [t1, t2, tl], sat1, sat2))
    }

    /// Sample the controllers at `state`; the result holds across the next step.
    pub fn sample(&mut self, state: &ActuatorState, dt: f64) -> Result<([Held; 3], StepInputs)> {
        let mut f1 = (false, false);
        let mut f2 = (false, false);
        let mut fl = (false, false);
        let held = [
            Self::hold(&mut self.drives.motor1, state, dt, &mut f1),
            Self::hold(&mut self.drives.motor2, state, dt, &mut f2),
            Self::hold(&mut self.drives.load, state, dt, &mut fl),
        ];
        let v = pack(state);
        let (_, _, resolved, sat1, sat2) = self.stage(held, &v, state.t)?;
        let stop = self.stop_hit || roller_from_motor(state.q_m2, &self.plant.screw).clamped;
        Ok((
            held,
            StepInputs {
                tau_m1: resolved[0],
                tau_m2: resolved[1],
                tau_l: resolved[2],
                flags: StepFlags {
                    stop,
                    sat_m1: f1.0 || sat1,
                    sat_m2: f2.0 || sat2,
                    clamped: f1.1 || f2.1 || fl.1,
                },
            },
        ))
    }

    /// True when the carriage rests on a travel stop and is being pushed into it.
    fn pinned_at_stop(&self, held: [Held; 3], state: &ActuatorState) -> Result<bool> {
        let s = &self.plant.screw;
        let x = s.x_ref + s.travel_per_radian() * state.q_m2;
        let eps = 1e-12 * s.x_max;
        let at_max = x >= s.x_max - eps && state.dq_m2 >= 0.0;
        let at_min = x <= s.x_min + eps && state.dq_m2 <= 0.0;
        if !(at_max || at_min) {
            return Ok(false);
        }
        let (k, ..) = self.stage(held, &pack(state), state.t)?;
        Ok((at_max && k[4] > 0.0) || (at_min && k[4] < 0.0))
    }

    fn advance(&mut self, mut held: [Held; 3], state: &ActuatorState, dt: f64) -> Result<ActuatorState> {
        let t = state.t;
        let pinned = self.pinned_at_stop(held, state)?;
        if pinned {
            held[1] = Held::Locked;
        }
        let y = pack(state);
        let (k1, ..) = self.stage(held, &y, t)?;
        let (k2, ..) = self.stage(held, &axpy(&y, &k1, 0.5 * dt), t + 0.5 * dt)?;
        let (k3, ..) = self.stage(held, &axpy(&y, &k2, 0.5 * dt), t + 0.5 * dt)?;
        let (k4, ..) = self.stage(held, &axpy(&y, &k3, dt), t + dt)?;
        let mut next = y;
        for i in 0..N {
            next[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        let mut out = unpack(&next, t + dt);
        if !out.is_finite() {
            return Err(VsaError::NonFinite { state: Box::new(out) });
        }

        let l = &mut self.ledger;
        l.w_m1 += next[6];
        l.w_m2 += next[7];
        l.w_m2_abs += next[8];
        l.w_ext += next[9];
        l.d_fric += next[10];

        let before = self.plant.kinetic_energy(&out) + self.plant.potential_energy(&out);
        if apply_stops(&mut out, &self.plant.screw) {
            let after = self.plant.kinetic_energy(&out) + self.plant.potential_energy(&out);
            self.ledger.d_stop += before - after;
            self.stop_hit = true;
        } else {
            self.stop_hit = pinned;
        }

        let l = &mut self.ledger;
        l.e_kin = self.plant.kinetic_energy(&out);
        l.u_spring = self.plant.potential_energy(&out);
        l.peak_energy = l.peak_energy.max(l.total());
        l.max_abs_residual = l.max_abs_residual.max(l.balance_residual().abs());
        Ok(out)
    }

    /// One classical RK4 step of length `dt`, controllers sampled at `state`.
    pub fn rk4_step(&mut self, state: &ActuatorState, dt: f64) -> Result<ActuatorState> {
        if !(dt > 0.0) {
            return Err(VsaError::invalid("dt", "time step must be positive"));
        }
        let (held, _) = self.sample(state, dt)?;
        self.advance(held, state, dt)
    }
}

/// Plastic travel stops: clamp the carriage and kill outward velocity.
fn apply_stops(state: &mut ActuatorState, screw: &ScrewParams) -> bool {
    let x = screw.x_ref + screw.travel_per_radian() * state.q_m2;
    let (bound, outward) = if x > screw.x_max {
        (screw.x_max, state.dq_m2 > 0.0)
    } else if x < screw.x_min {
        (screw.x_min, state.dq_m2 < 0.0)
    } else {
        return false;
    };
    state.q_m2 = motor_from_roller(bound, screw).expect("stop lies within travel");
    if outward {
        state.dq_m2 = 0.0;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimConfig {
    pub dt: f64,
    pub duration: f64,
    #[serde(default = "one")]
    pub record_every: usize,
}

fn one() -> usize {
    1
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            dt: 1e-4,
            duration: 1.0,
            record_every: 10,
        }
    }
}

impl SimConfig {
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            v.push(format!("sim.dt must be positive (got {})", self.dt));
        }
        if !(self.duration > 0.0 && self.duration.is_finite()) {
            v.push(format!("sim.duration must be positive (got {})", self.duration));
        }
        if self.dt > 0.0 && self.duration / self.dt > 1e8 {
            v.push("sim.duration/sim.dt must not exceed 1e8 steps".to_string());
        }
        if self.record_every == 0 {
            v.push("sim.record_every must be at least 1".to_string());
        }
        v
    }

    pub fn steps(&self) -> usize {
        (self.duration / self.dt).round() as usize
    }
}

/// One recorded sample of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryRow {
    pub state: ActuatorState,
    pub x_r: f64,
    pub tau_s: f64,
    pub tau_sd: f64,
    pub k: f64,
    pub tau_m1: f64,
    pub tau_m2: f64,
    pub p_m1: f64,
    pub p_m2: f64,
    pub ledger: EnergyLedger,
    pub flags: StepFlags,
}

#[derive(Debug)]
pub struct Simulation {
    pub rows: Vec<TrajectoryRow>,
    pub ledger: EnergyLedger,
    pub final_state: ActuatorState,
    /// Set when the run aborted; `rows` then hold the partial trajectory.
    pub error: Option<VsaError>,
}

impl Simulation {
    pub fn into_result(self) -> Result<Self> {
        match self.error {
            Some(e) => Err(e),
            None => Ok(self),
        }
    }
}

fn record(sim: &Simulator, state: &ActuatorState, inputs: &StepInputs) -> Result<TrajectoryRow> {
    let loads = sim.plant.spring_loads(state)?;
    Ok(TrajectoryRow {
        state: *state,
        x_r: loads.x_r,
        tau_s: loads.tau_s,
        tau_sd: loads.tau_sd,
        k: joint_stiffness(loads.q_d, loads.x_r, &sim.plant.spring),
        tau_m1: inputs.tau_m1,
        tau_m2: inputs.tau_m2,
        p_m1: mechanical_power(inputs.tau_m1, state.dq_m1),
        p_m2: mechanical_power(inputs.tau_m2, state.dq_m2),
        ledger: *sim.ledger(),
        flags: inputs.flags,
    })
}

/// Fixed-step rollout. Deterministic: identical inputs give bit-identical rows.
pub fn simulate(plant: Plant, drives: Drives, initial: ActuatorState, cfg: &SimConfig) -> Simulation {
    let mut sim = Simulator::new(plant, drives);
    let mut state = sim.prepare(initial);
    let t0 = state.t;
    let mut rows = Vec::new();
    let bad = cfg.violations();
    if !bad.is_empty() {
        return Simulation {
            rows,
            ledger: *sim.ledger(),
            final_state: state,
            error: Some(VsaError::Validation(bad)),
        };
    }
    let steps = cfg.steps();
    let mut error = None;
    for i in 0..=steps {
        let sampled = sim.sample(&state, cfg.dt).and_then(|(held, inputs)| {
            if i % cfg.record_every == 0 || i == steps {
                rows.push(record(&sim, &state, &inputs)?);
            }
            Ok(held)
        });
        let held = match sampled {
            Ok(h) => h,
            Err(e) => {
                error = Some(e);
                break;
            }
        };
        if i == steps {
            break;
        }
        match sim.advance(held, &state, cfg.dt) {
            Ok(mut next) => {
                next.t = t0 + (i + 1) as f64 * cfg.dt;
                state = next;
            }
            Err(e) => {
                error = Some(e);
                break;
            }
        }
    }
    Simulation {
        rows,
        ledger: *sim.ledger(),
        final_state: state,
        error,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torques(m1: f64, m2: f64, l: f64) -> PortTorques {
        PortTorques {
            motor1: PortTorque::Applied(m1),
            motor2: PortTorque::Applied(m2),
            load: PortTorque::Applied(l),
        }
    }

    fn state_at(q_m1: f64, q_l: f64, x_r: f64, screw: &ScrewParams) -> ActuatorState {
        ActuatorState {
            q_m1,
            q_l,
            q_m2: motor_from_roller(x_r, screw).unwrap(),
            ..ActuatorState::default()
        }
    }

    #[test]
    fn zero_state_is_fixed_point() {
        let plant = Plant::default();
        let d = plant
            .state_derivative(&ActuatorState::default(), &torques(0.0, 0.0, 0.0))
            .unwrap();
        assert_eq!(d, StateDerivative::default());
    }

    #[test]
    fn deflected_accelerations() {
        let plant = Plant::default();
        let s = state_at(0.1, 0.0, 0.04, &plant.screw);
        let d = plant.state_derivative(&s, &torques(0.0, 0.0, 0.0)).unwrap();
        assert!((d.ddq_l - 5182.0).abs() < 0.05, "{}", d.ddq_l);
        let tau = spring_torque(0.1, 0.04, &plant.spring);
        assert!((d.ddq_m1 + tau / plant.actuator.j_m1).abs() < 1e-9);
    }

    #[test]
    fn motor2_free_of_spring_at_equilibrium() {
        let plant = Plant::default();
        let s = state_at(0.0, 0.0, 0.04, &plant.screw);
        let d = plant.state_derivative(&s, &torques(0.0, 0.003, 0.0)).unwrap();
        assert_eq!(d.ddq_m2, 0.003 / plant.actuator.j_m2);
    }

    #[test]
    fn domain_violation_reported() {
        let plant = Plant::default();
        let s = ActuatorState {
            q_m1: 1.6,
            ..ActuatorState::default()
        };
        let err = plant.state_derivative(&s, &torques(0.0, 0.0, 0.0)).unwrap_err();
        assert!(matches!(err, VsaError::ModelDomain { .. }));
    }

    #[test]
    fn equilibrium_step_only_advances_time() {
        let mut sim = Simulator::new(Plant::default(), Drives::default());
        let s0 = sim.prepare(ActuatorState::default());
        let s1 = sim.rk4_step(&s0, 1e-3).unwrap();
        assert_eq!(s1, ActuatorState { t: 1e-3, ..s0 });
    }

    #[test]
    fn nonpositive_dt_rejected() {
        let mut sim = Simulator::new(Plant::default(), Drives::default());
        assert!(sim.rk4_step(&ActuatorState::default(), 0.0).is_err());
    }

    #[test]
    fn stops_clamp_carriage() {
        let plant = Plant::default();
        let drives = Drives {
            motor1: Actuation::Locked,
            motor2: Actuation::Constant(0.01),
            load: Actuation::Locked,
        };
        let run = simulate(plant, drives, ActuatorState::default(), &SimConfig {
            dt: 1e-4,
            duration: 0.05,
            record_every: 1,
        });
        assert!(run.error.is_none());
        assert_eq!(run.final_state.q_m2, 0.0);
        assert_eq!(run.final_state.dq_m2, 0.0);
        assert!(run.rows.iter().all(|r| r.x_r == 0.08));
        assert!(run.rows.last().unwrap().flags.stop);
    }

    #[test]
    fn torque_limits_saturate() {
        let mut plant = Plant::default();
        plant.limits.motor1 = Some(0.5);
        let drives = Drives {
            motor1: Actuation::Constant(2.0),
            ..Drives::default()
        };
        let run = simulate(plant, drives, ActuatorState::default(), &SimConfig {
            dt: 1e-4,
            duration: 1e-3,
            record_every: 1,
        });
        let row = run.rows[0];
        assert_eq!(row.tau_m1, 0.5);
        assert!(row.flags.sat_m1);
    }

    #[test]
    fn flags_label() {
        assert_eq!(StepFlags::default().label(), "ok");
        let f = StepFlags {
            stop: true,
            sat_m2: true,
            ..StepFlags::default()
        };
        assert_eq!(f.label(), "stop|sat_m2");
    }
}
