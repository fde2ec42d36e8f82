//! JSON configuration: `spring`, `screw`, `dynamics`, `control` and `sim`
//! blocks, every field optional. Validation reports all violated rules at
//! once.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::control::PidGains;
use crate::dynamics::{ActuatorParams, Plant};
use crate::error::{Result, VsaError};
use crate::spring::{ScrewParams, SpringBankParams};

/// Gains as written in the file; absent fields fall back to the block default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PidPatch {
    pub kp: Option<f64>,
    pub ki: Option<f64>,
    pub kd: Option<f64>,
    pub d_filter_tc: Option<f64>,
    pub u_min: Option<f64>,
    pub u_max: Option<f64>,
    pub windup_clamp: Option<f64>,
}

impl PidPatch {
    pub fn apply(&self, base: PidGains) -> PidGains {
        PidGains {
            kp: self.kp.unwrap_or(base.kp),
            ki: self.ki.unwrap_or(base.ki),
            kd: self.kd.unwrap_or(base.kd),
            d_filter_tc: self.d_filter_tc.unwrap_or(base.d_filter_tc),
            u_min: self.u_min.unwrap_or(base.u_min),
            u_max: self.u_max.unwrap_or(base.u_max),
            windup_clamp: self.windup_clamp.unwrap_or(base.windup_clamp),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RawControl {
    motor1: PidPatch,
    motor2: PidPatch,
}

/// Timing overrides. Unset fields leave the scenario's own defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimOverrides {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dt: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub record_every: Option<usize>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RawConfig {
    spring: SpringBankParams,
    screw: ScrewParams,
    dynamics: ActuatorParams,
    control: RawControl,
    sim: SimOverrides,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ControlConfig {
    pub motor1: PidGains,
    pub motor2: PidGains,
}

impl Default for ControlConfig {
    fn default() -> Self {
        Self {
            motor1: PidGains::motor1_default(),
            motor2: PidGains::motor2_default(),
        }
    }
}

/// Fully resolved parameter set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub spring: SpringBankParams,
    pub screw: ScrewParams,
    pub dynamics: ActuatorParams,
    pub control: ControlConfig,
    pub sim: SimOverrides,
}

impl Config {
    pub fn violations(&self) -> Vec<String> {
        let mut v = self.spring.violations();
        v.extend(self.screw.violations(&self.spring));
        v.extend(self.dynamics.violations());
        v.extend(self.control.motor1.violations("motor1"));
        v.extend(self.control.motor2.violations("motor2"));
        if let Some(dt) = self.sim.dt {
            if !(dt > 0.0 && dt.is_finite()) {
                v.push(format!("sim.dt must be positive (got {dt})"));
            }
        }
        if let Some(d) = self.sim.duration {
            if !(d > 0.0 && d.is_finite()) {
                v.push(format!("sim.duration must be positive (got {d})"));
            }
        }
        if self.sim.record_every == Some(0) {
            v.push("sim.record_every must be at least 1".to_string());
        }
        v
    }

    pub fn plant(&self) -> Plant {
        Plant::new(self.dynamics, self.spring, self.screw)
    }
}

/// Parse and validate configuration text. `origin` only labels errors.
pub fn parse_config(text: &str, origin: &Path) -> Result<Config> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| VsaError::Parse {
        path: origin.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let cfg = Config {
        spring: raw.spring,
        screw: raw.screw,
        dynamics: raw.dynamics,
        control: ControlConfig {
            motor1: raw.control.motor1.apply(PidGains::motor1_default()),
            motor2: raw.control.motor2.apply(PidGains::motor2_default()),
        },
        sim: raw.sim,
    };
    let bad = cfg.violations();
    if bad.is_empty() {
        Ok(cfg)
    } else {
        Err(VsaError::Validation(bad))
    }
}

pub fn load_config(path: &Path) -> Result<Config> {
    let text = std::fs::read_to_string(path).map_err(|source| VsaError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Config> {
        parse_config(text, Path::new("test.json"))
    }

    #[test]
    fn empty_object_is_defaults() {
        assert_eq!(parse("{}").unwrap(), Config::default());
    }

    #[test]
    fn partial_block_keeps_other_fields() {
        let c = parse(r#"{"spring": {"n": 4}, "control": {"motor2": {"kp": 1.5}}}"#).unwrap();
        assert_eq!(c.spring.count, 4);
        assert_eq!(c.spring.width, 0.015);
        assert_eq!(c.control.motor2.kp, 1.5);
        assert_eq!(c.control.motor2.ki, PidGains::motor2_default().ki);
        assert_eq!(c.control.motor1, PidGains::motor1_default());
    }

    #[test]
    fn unknown_field_is_parse_error() {
        match parse("{\n  \"spring\": {\"E\": 1e9, \"Q\": 3}\n}") {
            Err(VsaError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn all_violations_listed() {
        let err = parse(r#"{"spring": {"t": 0.02}, "screw": {"x_min": 0}, "dynamics": {"J_l": -1}}"#).unwrap_err();
        let VsaError::Validation(v) = err else { panic!() };
        assert_eq!(v.len(), 3, "{v:?}");
        assert!(v.iter().any(|m| m.contains("thickness exceeds width")));
        assert!(v.iter().any(|m| m.contains("nonzero")));
        assert!(v.iter().any(|m| m.contains("J_l")));
    }

    #[test]
    fn missing_file() {
        assert!(matches!(
            load_config(Path::new("/nonexistent/c.json")),
            Err(VsaError::Io { .. })
        ));
    }
}
