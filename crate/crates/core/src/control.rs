//! Motor-side servo loops: an equilibrium-position PID for motor 1 and a
//! stiffness loop for motor 2 (target stiffness → roller setpoint → motor
//! angle → PID).

use serde::{Deserialize, Serialize};

use crate::dynamics::{ActuatorState, Command, Controller};
use crate::error::Result;
use crate::spring::{motor_from_roller, stiffness_to_roller, ScrewParams, SpringBankParams};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PidGains {
    pub kp: f64,
    pub ki: f64,
    pub kd: f64,
    /// Time constant of the first-order filter on the measured derivative (s).
    pub d_filter_tc: f64,
    pub u_min: f64,
    pub u_max: f64,
    /// Bound on the integral contribution (N·m).
    pub windup_clamp: f64,
}

impl PidGains {
    pub fn motor1_default() -> Self {
        Self {
            kp: 200.0,
            ki: 20000.0,
            kd: 5.0,
            d_filter_tc: 1e-3,
            u_min: -500.0,
            u_max: 500.0,
            windup_clamp: 500.0,
        }
    }

    pub fn motor2_default() -> Self {
        Self {
            kp: 3.0,
            ki: 5.0,
            kd: 3.5e-3,
            d_filter_tc: 1e-3,
            u_min: -5.0,
            u_max: 5.0,
            windup_clamp: 5.0,
        }
    }

    pub fn violations(&self, block: &str) -> Vec<String> {
        let mut v = Vec::new();
        for (name, g) in [("kp", self.kp), ("ki", self.ki), ("kd", self.kd)] {
            if !(g >= 0.0 && g.is_finite()) {
                v.push(format!("control.{block}.{name} must be nonnegative (got {g})"));
            }
        }
        if !(self.d_filter_tc > 0.0) {
            v.push(format!(
                "control.{block}.d_filter_tc must be positive (got {})",
                self.d_filter_tc
            ));
        }
        if !(self.u_min < self.u_max) {
            v.push(format!(
                "control.{block}.u_min must be below u_max ({} >= {})",
                self.u_min, self.u_max
            ));
        }
        if !(self.windup_clamp >= 0.0) {
            v.push(format!(
                "control.{block}.windup_clamp must be nonnegative (got {})",
                self.windup_clamp
            ));
        }
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PidState {
    pub integral: f64,
    pub d_filtered: f64,
    pub last_measurement: Option<f64>,
    pub last_time: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PidOutput {
    pub u: f64,
    pub error: f64,
    pub saturated: bool,
}

/// One PID update. The derivative acts on the (filtered) measurement, so
/// setpoint steps do not kick the output. The integral is clamped to
/// `±windup_clamp` and frozen while the output is saturated in the
/// direction the error is pushing.
pub fn pid_step(gains: &PidGains, state: PidState, setpoint: f64, measurement: f64, dt: f64) -> (PidOutput, PidState) {
    let e = setpoint - measurement;

    let d_raw = match state.last_measurement {
        Some(prev) => (measurement - prev) / dt,
        None => 0.0,
    };
    let alpha = dt / (gains.d_filter_tc + dt);
    let d_filtered = state.d_filtered + alpha * (d_raw - state.d_filtered);

    let candidate = (state.integral + gains.ki * e * dt).clamp(-gains.windup_clamp, gains.windup_clamp);
    let unsat = |integral: f64| gains.kp * e + integral - gains.kd * d_filtered;

    let raw = unsat(candidate);
    let pushing_out = (raw > gains.u_max && e > 0.0) || (raw < gains.u_min && e < 0.0);
    let integral = if pushing_out { state.integral } else { candidate };
    let raw = unsat(integral);
    let u = raw.clamp(gains.u_min, gains.u_max);

    (
        PidOutput {
            u,
            error: e,
            saturated: u != raw,
        },
        PidState {
            integral,
            d_filtered,
            last_measurement: Some(measurement),
            last_time: state.last_time + dt,
        },
    )
}

/// Stateful wrapper around [`pid_step`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pid {
    pub gains: PidGains,
    pub state: PidState,
}

impl Pid {
    pub fn new(gains: PidGains) -> Self {
        Self {
            gains,
            state: PidState::default(),
        }
    }

    pub fn update(&mut self, setpoint: f64, measurement: f64, dt: f64) -> PidOutput {
        let (out, next) = pid_step(&self.gains, self.state, setpoint, measurement, dt);
        self.state = next;
        out
    }
}

pub type Profile = Box<dyn Fn(f64) -> f64 + Send>;

/// Motor-1 loop: closes the PID on `q_m1` against a setpoint profile.
pub struct PositionLoop {
    pub pid: Pid,
    profile: Profile,
}

pub fn position_command(profile: Profile, gains: PidGains) -> PositionLoop {
    PositionLoop {
        pid: Pid::new(gains),
        profile,
    }
}

impl Controller for PositionLoop {
    fn update(&mut self, state: &ActuatorState, dt: f64) -> Command {
        let setpoint = (self.profile)(state.t);
        let out = self.pid.update(setpoint, state.q_m1, dt);
        Command {
            torque: out.u,
            saturated: out.saturated,
            clamped: false,
        }
    }
}

/// Motor-2 loop: stiffness target → roller position → motor angle → PID on `q_m2`.
pub struct StiffnessLoop {
    pub pid: Pid,
    target: Profile,
    spring: SpringBankParams,
    screw: ScrewParams,
}

pub fn stiffness_command(
    target: Profile,
    gains: PidGains,
    spring: SpringBankParams,
    screw: ScrewParams,
) -> StiffnessLoop {
    StiffnessLoop {
        pid: Pid::new(gains),
        target,
        spring,
        screw,
    }
}

impl StiffnessLoop {
    /// Motor-2 angle for a stiffness target, with the clamp flag.
    pub fn setpoint(&self, k_target: f64) -> Result<(f64, bool)> {
        let roller = stiffness_to_roller(k_target, &self.spring, &self.screw)?;
        Ok((motor_from_roller(roller.x_r, &self.screw)?, roller.clamped))
    }
}

impl Controller for StiffnessLoop {
    fn update(&mut self, state: &ActuatorState, dt: f64) -> Command {
        let k = (self.target)(state.t);
        // A non-positive target asks for the softest setting.
        let (setpoint, clamped) = self.setpoint(k).unwrap_or_else(|_| {
            let q = motor_from_roller(self.screw.x_max, &self.screw).expect("x_max within travel");
            (q, true)
        });
        let out = self.pid.update(setpoint, state.q_m2, dt);
        Command {
            torque: out.u,
            saturated: out.saturated,
            clamped,
        }
    }
}

/// Linear ramp from `from` to `to` over `[start, start + duration]`, held outside.
pub fn ramp(from: f64, to: f64, start: f64, duration: f64) -> impl Fn(f64) -> f64 + Send + Clone {
    move |t| {
        if t <= start {
            from
        } else if t >= start + duration {
            to
        } else {
            from + (to - from) * (t - start) / duration
        }
    }
}

/// Move from `from` to `to` over `[start, start + duration]` at constant
/// speed, with constant-acceleration blends of length `blend` at both ends.
pub fn blended_ramp(from: f64, to: f64, start: f64, duration: f64, blend: f64) -> impl Fn(f64) -> f64 + Send + Clone {
    let blend = blend.clamp(0.0, 0.5 * duration);
    // Cruise speed such that the blends plus the cruise cover the distance.
    let speed = (to - from) / (duration - blend);
    let accel = if blend > 0.0 { speed / blend } else { 0.0 };
    move |t| {
        let tau = t - start;
        if tau <= 0.0 {
            from
        } else if tau >= duration {
            to
        } else if tau < blend {
            from + 0.5 * accel * tau * tau
        } else if tau <= duration - blend {
            from + 0.5 * speed * blend + speed * (tau - blend)
        } else {
            let rem = duration - tau;
            to - 0.5 * accel * rem * rem
        }
    }
}
