//! Closed-form model of the leaf-spring stiffness modulation mechanism.
//!
//! A bank of `n` identical cantilevered leaf springs is loaded by rollers
//! that ride a single carriage at distance `x_r` from the clamped root. The
//! output link deflection `q_d` rotates the roller about the joint axis, so
//! the contact sits at horizontal coordinate `a = x_r cos q_d` and imposes a
//! lateral deflection `δ = x_r sin q_d` on every spring.
//!
//! Everything here derives from the single stored energy
//!
//! ```text
//! U(q_d, x_r) = (3 n E I / 2) · sin²q_d / (x_r cos³q_d)
//! ```
//!
//! (the small-deflection cantilever law `F = 3 E I δ / a³` integrated over
//! `δ`). The link torque, the joint stiffness and the axial push on the
//! roller carriage are its partial derivatives, which keeps the coupling
//! with the dynamics exactly conservative.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Result, VsaError};

/// Open bound on `|q_d|`; the contact kinematics are singular at ±π/2.
pub const DEFLECTION_LIMIT: f64 = FRAC_PI_2;

/// Second moment of area of a rectangular section, `b t³ / 12`.
pub fn second_moment(width: f64, thickness: f64) -> Result<f64> {
    if !(width > 0.0 && width.is_finite()) {
        return Err(VsaError::invalid("b", format!("width must be positive, got {width}")));
    }
    if !(thickness > 0.0 && thickness.is_finite()) {
        return Err(VsaError::invalid(
            "t",
            format!("thickness must be positive, got {thickness}"),
        ));
    }
    Ok(rect_second_moment(width, thickness))
}

#[inline]
fn rect_second_moment(width: f64, thickness: f64) -> f64 {
    width * thickness * thickness * thickness / 12.0
}

/// Geometry and material of the parallel leaf-spring bank.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SpringBankParams {
    /// Young's modulus (Pa).
    #[serde(rename = "E")]
    pub youngs_modulus: f64,
    /// Leaf width (m).
    #[serde(rename = "b")]
    pub width: f64,
    /// Leaf thickness (m).
    #[serde(rename = "t")]
    pub thickness: f64,
    /// Free length of each leaf (m).
    #[serde(rename = "L")]
    pub length: f64,
    /// Number of leaves acting in parallel.
    #[serde(rename = "n")]
    pub count: u32,
}

impl Default for SpringBankParams {
    fn default() -> Self {
        Self {
            youngs_modulus: 200e9,
            width: 0.015,
            thickness: 0.0015,
            length: 0.08,
            count: 8,
        }
    }
}

impl SpringBankParams {
    pub fn new(youngs_modulus: f64, width: f64, thickness: f64, length: f64, count: u32) -> Result<Self> {
        let p = Self {
            youngs_modulus,
            width,
            thickness,
            length,
            count,
        };
        p.check()?;
        Ok(p)
    }

    /// Every violated invariant, one message per rule.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        if !(self.youngs_modulus > 0.0 && self.youngs_modulus.is_finite()) {
            v.push(format!("spring.E must be positive (got {})", self.youngs_modulus));
        }
        if !(self.width > 0.0 && self.width.is_finite()) {
            v.push(format!("spring.b must be positive (got {})", self.width));
        }
        if !(self.thickness > 0.0 && self.thickness.is_finite()) {
            v.push(format!("spring.t must be positive (got {})", self.thickness));
        }
        if !(self.length > 0.0 && self.length.is_finite()) {
            v.push(format!("spring.L must be positive (got {})", self.length));
        }
        if self.count < 1 {
            v.push("spring.n must be at least 1".to_string());
        }
        if self.thickness > self.width {
            v.push(format!(
                "spring.t: thickness exceeds width ({} > {}); thin-leaf model requires t <= b",
                self.thickness, self.width
            ));
        }
        v
    }

    pub fn check(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(VsaError::Validation(v))
        }
    }

    /// `I = b t³ / 12`, always recomputed from the section.
    pub fn second_moment(&self) -> f64 {
        rect_second_moment(self.width, self.thickness)
    }

    /// Flexural rigidity `E I` of one leaf (N·m²).
    pub fn flexural_rigidity(&self) -> f64 {
        self.youngs_modulus * self.second_moment()
    }

    /// `3 n E I`, the factor shared by every closed form below (N·m²).
    pub fn bank_coefficient(&self) -> f64 {
        3.0 * f64::from(self.count) * self.youngs_modulus * self.second_moment()
    }
}

/// Ball-screw carriage that positions the rollers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScrewParams {
    /// Carriage travel per screw revolution (m/rev).
    pub lead: f64,
    pub x_min: f64,
    pub x_max: f64,
    /// Roller position when the motor angle is zero.
    pub x_ref: f64,
    #[serde(default = "unit_efficiency")]
    pub efficiency: f64,
}

fn unit_efficiency() -> f64 {
    1.0
}

impl Default for ScrewParams {
    fn default() -> Self {
        Self {
            lead: 0.002,
            x_min: 0.01,
            x_max: 0.08,
            x_ref: 0.08,
            efficiency: 1.0,
        }
    }
}

impl ScrewParams {
    /// Violated invariants, checked against the spring the rollers ride on.
    pub fn violations(&self, spring: &SpringBankParams) -> Vec<String> {
        let mut v = Vec::new();
        if !(self.lead > 0.0 && self.lead.is_finite()) {
            v.push(format!("screw.lead must be positive (got {})", self.lead));
        }
        if !(self.x_min > 0.0) {
            v.push(format!(
                "screw.x_min must be nonzero and positive: rollers cannot reach the clamped root (got {})",
                self.x_min
            ));
        }
        if !(self.x_min < self.x_max) {
            v.push(format!(
                "screw.x_min must be below screw.x_max ({} >= {})",
                self.x_min, self.x_max
            ));
        }
        if self.x_max > spring.length {
            v.push(format!(
                "screw.x_max must not exceed spring.L ({} > {})",
                self.x_max, spring.length
            ));
        }
        if !(self.x_ref >= self.x_min && self.x_ref <= self.x_max) {
            v.push(format!(
                "screw.x_ref must lie in [x_min, x_max] (got {})",
                self.x_ref
            ));
        }
        if !(self.efficiency > 0.0 && self.efficiency <= 1.0) {
            v.push(format!(
                "screw.efficiency must lie in (0, 1] (got {})",
                self.efficiency
            ));
        }
        v
    }

    /// Carriage travel per radian of motor rotation (m/rad).
    #[inline]
    pub fn travel_per_radian(&self) -> f64 {
        self.lead / (2.0 * PI)
    }
}

/// Contact point of the roller in the spring's root frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Contact {
    /// Horizontal coordinate of the contact (m).
    pub a: f64,
    /// Lateral deflection imposed at the contact (m), signed like `q_d`.
    pub delta: f64,
}

pub fn contact_kinematics(q_d: f64, x_r: f64) -> Contact {
    let (s, c) = q_d.sin_cos();
    Contact {
        a: x_r * c,
        delta: x_r * s,
    }
}

/// Stored elastic energy of the whole bank (J).
pub fn potential_energy(q_d: f64, x_r: f64, spring: &SpringBankParams) -> f64 {
    let (s, c) = q_d.sin_cos();
    0.5 * spring.bank_coefficient() * s * s / (x_r * c * c * c)
}

/// Torque the bank exerts between motor 1 and the link, `∂U/∂q_d` (N·m).
pub fn spring_torque(q_d: f64, x_r: f64, spring: &SpringBankParams) -> f64 {
    let (s, c) = q_d.sin_cos();
    let c2 = c * c;
    spring.bank_coefficient() / (2.0 * x_r) * s * (2.0 + s * s) / (c2 * c2)
}

/// Tangent stiffness `∂τ_s/∂q_d` (N·m/rad). Reduces to `3nEI/x_r` at `q_d = 0`.
pub fn joint_stiffness(q_d: f64, x_r: f64, spring: &SpringBankParams) -> f64 {
    let (s, c) = q_d.sin_cos();
    let (s2, c2) = (s * s, c * c);
    let num = 2.0 * c2 + 3.0 * s2 * c2 + 8.0 * s2 + 4.0 * s2 * s2;
    spring.bank_coefficient() / (2.0 * x_r) * num / (c2 * c2 * c)
}

/// Spring reaction on the roller carriage.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScrewReaction {
    /// Axial force on the carriage, `−∂U/∂x_r` (N). Nonnegative: the leaves
    /// push the rollers toward the free end.
    pub axial_force: f64,
    /// Disturbance torque `τ_s^d` seen by motor 2 (N·m), entering its
    /// equation of motion as `J q̈ + b q̇ = τ_m2 − τ_s^d`.
    pub motor_torque: f64,
}

pub fn screw_reaction(q_d: f64, x_r: f64, spring: &SpringBankParams, screw: &ScrewParams) -> ScrewReaction {
    let (s, c) = q_d.sin_cos();
    let axial_force = 0.5 * spring.bank_coefficient() * s * s / (c * c * c * x_r * x_r);
    // `0.0 - x` keeps the equilibrium value +0.0 rather than -0.0.
    let motor_torque = 0.0 - screw.travel_per_radian() * axial_force / screw.efficiency;
    ScrewReaction {
        axial_force,
        motor_torque,
    }
}

/// Roller position with a flag telling whether a travel stop was hit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RollerPosition {
    pub x_r: f64,
    pub clamped: bool,
}

pub fn roller_from_motor(q_m2: f64, screw: &ScrewParams) -> RollerPosition {
    let free = screw.x_ref + screw.travel_per_radian() * q_m2;
    let x_r = free.clamp(screw.x_min, screw.x_max);
    RollerPosition {
        x_r,
        clamped: x_r != free,
    }
}

pub fn motor_from_roller(x_r: f64, screw: &ScrewParams) -> Result<f64> {
    if !(x_r >= screw.x_min && x_r <= screw.x_max) {
        return Err(VsaError::invalid(
            "x_r",
            format!(
                "roller position {x_r} outside travel [{}, {}]",
                screw.x_min, screw.x_max
            ),
        ));
    }
    Ok((x_r - screw.x_ref) * 2.0 * PI / screw.lead)
}

/// Roller position realising a target equilibrium stiffness, clamped to the travel.
pub fn stiffness_to_roller(k_target: f64, spring: &SpringBankParams, screw: &ScrewParams) -> Result<RollerPosition> {
    if !(k_target > 0.0) {
        return Err(VsaError::invalid(
            "k_target",
            format!("target stiffness must be positive, got {k_target}"),
        ));
    }
    let free = spring.bank_coefficient() / k_target;
    let x_r = free.clamp(screw.x_min, screw.x_max);
    Ok(RollerPosition {
        x_r,
        clamped: x_r != free,
    })
}

/// Equilibrium stiffness range `[k(x_max), k(x_min)]` reachable by the carriage.
pub fn stiffness_range(spring: &SpringBankParams, screw: &ScrewParams) -> (f64, f64) {
    (
        joint_stiffness(0.0, screw.x_max, spring),
        joint_stiffness(0.0, screw.x_min, spring),
    )
}
