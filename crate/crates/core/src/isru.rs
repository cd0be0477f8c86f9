//! Resource-chain energy models: water extraction, excavation, surface
//! haulage, rail transport, ore sizing and refining.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::registry::{HydrateParams, MaterialProperties};

/// One surface haul: move `payload_mass` of product embedded in a deposit
/// of the given purity over `distance`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HaulTask {
    /// Product mass to move (kg).
    pub payload_mass: f64,
    /// Product mass fraction at the pit; 1.0 when hauling pure product.
    pub purity: f64,
    /// One-way distance (m).
    pub distance: f64,
    /// Rolling friction coefficient.
    pub friction_coeff: f64,
    /// Vehicle movement ratio (>= 1, 1 = ideal path).
    pub movement_ratio: f64,
    /// Surface gravity (m/s²).
    pub gravity: f64,
}

impl HaulTask {
    fn validate(&self) -> Result<()> {
        if !(self.purity > 0.0 && self.purity <= 1.0) {
            return Err(Error::InvalidInput(format!("purity {} outside (0, 1]", self.purity)));
        }
        if self.movement_ratio < 1.0 {
            return Err(Error::InvalidInput(format!(
                "movement ratio {} must be >= 1",
                self.movement_ratio
            )));
        }
        if self.payload_mass < 0.0 || self.distance < 0.0 || self.friction_coeff < 0.0 {
            return Err(Error::InvalidInput("mass, distance and friction must be >= 0".into()));
        }
        Ok(())
    }
}

/// One excavation job: dig enough deposit to recover `payload_mass` of
/// product from a deposit of the given purity and density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DigTask {
    pub payload_mass: f64,
    pub purity: f64,
    /// Deposit bulk density (kg/m³).
    pub deposit_density: f64,
    /// Digging force (N).
    pub dig_force: f64,
    /// Excavation footprint of one robot vehicle (m²).
    pub robot_area: f64,
    pub movement_ratio: f64,
    pub friction_coeff: f64,
    pub gravity: f64,
}

impl DigTask {
    fn validate(&self) -> Result<()> {
        if self.deposit_density <= 0.0 {
            return Err(Error::InvalidInput("deposit density must be > 0".into()));
        }
        if self.robot_area <= 0.0 {
            return Err(Error::InvalidInput("robot area must be > 0".into()));
        }
        if !(self.purity > 0.0 && self.purity <= 1.0) {
            return Err(Error::InvalidInput(format!("purity {} outside (0, 1]", self.purity)));
        }
        if self.payload_mass < 0.0 || self.dig_force < 0.0 || self.friction_coeff < 0.0 {
            return Err(Error::InvalidInput("mass, force and friction must be >= 0".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RefineTask {
    pub material: MaterialProperties,
    pub mass: f64,
    /// Include the energy to recycle the process water by reverse osmosis.
    pub include_recycled_water: bool,
}

/// Energy to warm deposit ice to 0 °C, melt it, and heat the melt to the
/// outlet temperature (J).
pub fn melt_ice_to_water(
    ice: &MaterialProperties,
    water: &MaterialProperties,
    mass: f64,
    ice_temp_c: f64,
    out_temp_c: f64,
) -> Result<f64> {
    if mass < 0.0 {
        return Err(Error::InvalidInput(format!("negative mass {mass}")));
    }
    if ice_temp_c > 0.0 || out_temp_c < 0.0 {
        return Err(Error::InvalidInput(format!(
            "ice temperature {ice_temp_c} must be <= 0 <= outlet {out_temp_c}"
        )));
    }
    let warm_ice = 0.0 - ice_temp_c;
    let warm_water = out_temp_c - 0.0;
    Ok(mass * (water.heat_capacity * warm_water + ice.melt_enthalpy + ice.heat_capacity * warm_ice))
}

/// Energy to bake water out of hydrate-bearing regolith and condense it
/// back to ambient (J). `water_mass` is the recovered water, not the
/// regolith throughput.
pub fn dehydrate_regolith(
    params: &HydrateParams,
    sand: &MaterialProperties,
    water: &MaterialProperties,
    water_mass: f64,
) -> Result<f64> {
    if water_mass < 0.0 {
        return Err(Error::InvalidInput(format!("negative mass {water_mass}")));
    }
    let yield_pct = params.water_yield_pct;
    let heat_rise = params.bake_temperature_c - params.ambient_temperature_c;
    let dehydration = params.dehydration_energy * water_mass * (params.hydrate_fraction_pct / yield_pct);
    let sensible = heat_rise
        * (2.0 * water.heat_capacity * water_mass
            + params.salt_heat_capacity * (params.salt_fraction_pct / yield_pct) * water_mass
            + sand.heat_capacity * water_mass * (params.sand_fraction_pct / yield_pct));
    Ok(dehydration + sensible)
}

/// Truck haul energy (J): (1/purity)·m·g·η·d·χ.
pub fn haul_energy(task: &HaulTask) -> Result<f64> {
    task.validate()?;
    Ok((1.0 / task.purity)
        * task.payload_mass
        * task.gravity
        * task.friction_coeff
        * task.distance
        * task.movement_ratio)
}

/// Excavation energy (J): per-meter resistance (dig force plus friction on
/// the full excavated mass) times the total out-and-back pass distance.
pub fn dig_energy(task: &DigTask) -> Result<f64> {
    task.validate()?;
    let excavated_mass = task.payload_mass / task.purity;
    let resistance = task.movement_ratio * task.dig_force
        + excavated_mass * task.gravity * task.friction_coeff;
    let pass_distance = (excavated_mass / task.deposit_density) * (2.0 / task.robot_area);
    Ok(resistance * pass_distance)
}

/// Rail haul energy (J): φ·m·g·η·d.
pub fn rail_haul_energy(
    mass: f64,
    carriage_overhead: f64,
    friction: f64,
    distance: f64,
    gravity: f64,
) -> Result<f64> {
    if carriage_overhead < 1.0 {
        return Err(Error::InvalidInput(format!(
            "carriage overhead {carriage_overhead} must be >= 1"
        )));
    }
    if mass < 0.0 || friction < 0.0 || distance < 0.0 {
        return Err(Error::InvalidInput("mass, friction and distance must be >= 0".into()));
    }
    Ok(carriage_overhead * mass * gravity * friction * distance)
}

/// Ore mass that must be excavated to yield `target_mass` of product at
/// the given extraction efficiency and ore mass fraction (kg).
pub fn ore_mass_for_output(target_mass: f64, extraction_eff: f64, ore_fraction: f64) -> Result<f64> {
    if !(extraction_eff > 0.0 && extraction_eff <= 1.0) {
        return Err(Error::InvalidInput(format!(
            "extraction efficiency {extraction_eff} outside (0, 1]"
        )));
    }
    if !(ore_fraction > 0.0 && ore_fraction <= 1.0) {
        return Err(Error::InvalidInput(format!(
            "ore fraction {ore_fraction} outside (0, 1]"
        )));
    }
    if target_mass < 0.0 {
        return Err(Error::InvalidInput("target mass must be >= 0".into()));
    }
    Ok(target_mass / (extraction_eff * ore_fraction))
}

/// Refining energy for a product mass (J), optionally including the
/// recycled-water energy term.
pub fn refining_energy(task: &RefineTask) -> Result<f64> {
    if task.mass < 0.0 {
        return Err(Error::InvalidInput(format!("negative mass {}", task.mass)));
    }
    if task.material.refine_energy == 0.0 {
        return Err(Error::InvalidMaterial(task.material.name.clone()));
    }
    let per_kg = task.material.refine_energy
        + if task.include_recycled_water {
            task.material.recycled_water_energy
        } else {
            0.0
        };
    Ok(task.mass * per_kg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::default_registry;

    fn rel(actual: f64, expected: f64) -> f64 {
        ((actual - expected) / expected).abs()
    }

    #[test]
    fn melt_ice_examples() {
        let reg = default_registry();
        let ice = reg.material("ice").unwrap();
        let water = reg.material("water").unwrap();
        let e = melt_ice_to_water(ice, water, 1.0e5, -150.0, 25.0).unwrap();
        assert!(rel(e, 75_475.0e6) < 1e-9, "e = {e}");
        assert_eq!(melt_ice_to_water(ice, water, 0.0, -150.0, 25.0).unwrap(), 0.0);
        // Latent heat only at the melt point.
        let e = melt_ice_to_water(ice, water, 1.0, 0.0, 0.0).unwrap();
        assert!(rel(e, 333.55e3) < 1e-12);
        assert!(melt_ice_to_water(ice, water, -1.0, -150.0, 25.0).is_err());
        assert!(melt_ice_to_water(ice, water, 1.0, 10.0, 25.0).is_err());
    }

    #[test]
    fn dehydrate_examples() {
        let reg = default_registry();
        let sand = reg.material("sand").unwrap();
        let water = reg.material("water").unwrap();
        let e = dehydrate_regolith(&reg.process.hydrate, sand, water, 1.0e5).unwrap();
        assert!(rel(e, 233_273.0e6) < 1e-5, "e = {e}");
        assert_eq!(dehydrate_regolith(&reg.process.hydrate, sand, water, 0.0).unwrap(), 0.0);
        let e1 = dehydrate_regolith(&reg.process.hydrate, sand, water, 1.0).unwrap();
        assert!(rel(e1, 2.33273e6) < 1e-5, "e = {e1}");
    }

    #[test]
    fn haul_examples() {
        // Water ice overburden haul on the Moon.
        let e = haul_energy(&HaulTask {
            payload_mass: 1.0e5,
            purity: 0.9,
            distance: 5_000.0,
            friction_coeff: 0.01,
            movement_ratio: 1.2,
            gravity: 1.62,
        })
        .unwrap();
        assert!(rel(e, 10.8e6) < 1e-12, "e = {e}");
        // Ilmenite overburden haul.
        let e = haul_energy(&HaulTask {
            payload_mass: 4.53e5,
            purity: 0.8,
            distance: 5_000.0,
            friction_coeff: 0.01,
            movement_ratio: 1.2,
            gravity: 1.62,
        })
        .unwrap();
        assert!(rel(e, 55.0e6) < 1e-2, "e = {e}");
        // Processed Ti+Fe to the mass driver.
        let e = haul_energy(&HaulTask {
            payload_mass: 2.0e5,
            purity: 1.0,
            distance: 1_000.0,
            friction_coeff: 0.01,
            movement_ratio: 1.0,
            gravity: 1.62,
        })
        .unwrap();
        assert!(rel(e, 3.24e6) < 1e-12, "e = {e}");
    }

    #[test]
    fn dig_examples() {
        let ilmenite = DigTask {
            payload_mass: 4.53e5,
            purity: 0.8,
            deposit_density: 4_800.0,
            dig_force: 3_000.0,
            robot_area: 0.42,
            movement_ratio: 1.2,
            friction_coeff: 0.1,
            gravity: 1.62,
        };
        let e = dig_energy(&ilmenite).unwrap();
        assert!(rel(e, 53.5e6) < 1e-2, "e = {e}");
        let ice = DigTask {
            payload_mass: 1.0e5,
            purity: 0.9,
            deposit_density: 1_000.0,
            ..ilmenite
        };
        let e = dig_energy(&ice).unwrap();
        assert!(rel(e, 11.4e6) < 3e-3, "e = {e}");
        let empty = DigTask {
            payload_mass: 0.0,
            ..ilmenite
        };
        assert_eq!(dig_energy(&empty).unwrap(), 0.0);
        let bad = DigTask {
            robot_area: 0.0,
            ..ilmenite
        };
        assert!(dig_energy(&bad).is_err());
    }

    #[test]
    fn rail_examples() {
        let e = rail_haul_energy(1.0e5, 1.2, 0.005, 1.0e6, 1.62).unwrap();
        assert!(rel(e, 972.0e6) < 1e-12, "e = {e}");
        assert_eq!(rail_haul_energy(1.0e5, 1.2, 0.005, 0.0, 1.62).unwrap(), 0.0);
        let e1 = rail_haul_energy(1.0, 1.2, 0.005, 1.0e6, 1.62).unwrap();
        assert!(rel(e1, 9_720.0) < 1e-12, "e = {e1}");
        assert!(rail_haul_energy(1.0e5, 0.9, 0.005, 1.0e6, 1.62).is_err());
    }

    #[test]
    fn ore_mass_examples() {
        let m = ore_mass_for_output(1.0e5, 0.7, 0.316).unwrap();
        assert!(rel(m, 4.521e5) < 1e-3, "m = {m}");
        assert_eq!(ore_mass_for_output(42.0, 1.0, 1.0).unwrap(), 42.0);
        let m = ore_mass_for_output(1.0e5, 0.7, 0.37).unwrap();
        assert!(rel(m, 3.861e5) < 1e-3, "m = {m}");
        assert!(ore_mass_for_output(1.0e5, 0.0, 0.316).is_err());
        assert!(ore_mass_for_output(1.0e5, 0.7, 0.0).is_err());
    }

    #[test]
    fn refining_examples() {
        let reg = default_registry();
        let steel = refining_energy(&RefineTask {
            material: reg.material("low_grade_steel").unwrap().clone(),
            mass: 1.0e5,
            include_recycled_water: true,
        })
        .unwrap();
        assert!(rel(steel, 2.525e12) < 1e-12, "e = {steel}");
        let ti = refining_energy(&RefineTask {
            material: reg.material("titanium").unwrap().clone(),
            mass: 1.0e5,
            include_recycled_water: true,
        })
        .unwrap();
        assert!(rel(ti, 1.221e13) < 1e-12, "e = {ti}");
        let zero = refining_energy(&RefineTask {
            material: reg.material("titanium").unwrap().clone(),
            mass: 0.0,
            include_recycled_water: true,
        })
        .unwrap();
        assert_eq!(zero, 0.0);
        // Print feedstock has no refining data.
        assert!(refining_energy(&RefineTask {
            material: reg.material("sand").unwrap().clone(),
            mass: 1.0,
            include_recycled_water: false,
        })
        .is_err());
    }
}
