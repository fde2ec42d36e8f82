//! Model, solvers and scenario runners for a leaf-spring variable
//! stiffness actuator.

pub mod app;
pub mod cli;
pub mod config;
pub mod control;
pub mod dynamics;
pub mod elastica;
pub mod error;
pub mod scenario;
pub mod spring;
pub mod table;

pub use error::{Result, VsaError};
