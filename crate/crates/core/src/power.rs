//! Solar plant sizing for a required daily energy.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlantRequest {
    /// Energy the plant must deliver per budgeting day (J).
    pub energy_per_day: f64,
    /// Mean daytime insolation (W/m²).
    pub insolation: f64,
    /// Usable sunlight per budgeting day (s).
    pub daylight_per_day: f64,
    /// Conversion efficiency: 1.0 for the solar-thermal collectors,
    /// 0.45 default for photovoltaics.
    pub conversion_efficiency: f64,
}

/// Collector area needed to meet the request (m²).
pub fn plant_area(req: &PlantRequest) -> Result<f64> {
    if req.energy_per_day <= 0.0 {
        return Err(Error::InvalidInput("energy per day must be > 0".into()));
    }
    if req.insolation <= 0.0 || req.daylight_per_day <= 0.0 {
        return Err(Error::InvalidInput("insolation and daylight must be > 0".into()));
    }
    if !(req.conversion_efficiency > 0.0 && req.conversion_efficiency <= 1.0) {
        return Err(Error::InvalidInput(format!(
            "conversion efficiency {} outside (0, 1]",
            req.conversion_efficiency
        )));
    }
    Ok(req.energy_per_day / (req.daylight_per_day * req.insolation * req.conversion_efficiency))
}
