//! Escape velocity and mass-driver launch energy.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MassDriverSpec {
    /// Launch container mass overhead factor φ (>= 1).
    pub container_overhead: f64,
    /// Electrical-to-kinetic overhead multiplier α (>= 1); 2.0 means the
    /// driver draws twice the payload kinetic energy.
    pub driver_efficiency_factor: f64,
    /// Launch speed (m/s), normally the body's escape speed.
    pub launch_speed: f64,
}

impl MassDriverSpec {
    pub fn validate(&self) -> Result<()> {
        if self.container_overhead < 1.0 {
            return Err(Error::InvalidInput(format!(
                "container overhead {} must be >= 1",
                self.container_overhead
            )));
        }
        if self.driver_efficiency_factor < 1.0 {
            return Err(Error::InvalidInput(format!(
                "driver efficiency factor {} must be >= 1",
                self.driver_efficiency_factor
            )));
        }
        if self.launch_speed <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "launch speed {} must be > 0",
                self.launch_speed
            )));
        }
        Ok(())
    }
}

/// sqrt(2·G·M/r) (m/s).
pub fn escape_velocity(gravitational_constant: f64, body_mass: f64, body_radius: f64) -> Result<f64> {
    if body_radius <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "body radius {body_radius} must be > 0"
        )));
    }
    if body_mass < 0.0 {
        return Err(Error::InvalidInput("body mass must be >= 0".into()));
    }
    Ok((2.0 * gravitational_constant * body_mass / body_radius).sqrt())
}

/// Electrical energy to launch a payload: α·½·(φ·m)·v² (J).
pub fn launch_energy(payload_mass: f64, spec: &MassDriverSpec) -> Result<f64> {
    spec.validate()?;
    if payload_mass < 0.0 {
        return Err(Error::InvalidInput(format!("negative payload {payload_mass}")));
    }
    Ok(spec.driver_efficiency_factor
        * 0.5
        * spec.container_overhead
        * payload_mass
        * spec.launch_speed.powi(2))
}
