//! Central registry of physical constants, body profiles and material
//! properties.
//!
//! Every constant consumed by a formula elsewhere in the crate resolves
//! through exactly one entry here; formula code carries no embedded
//! physical literals. All values are SI (J, kg, m, s, K) unless the field
//! name says otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Joules per kilowatt-hour.
pub const J_PER_KWH: f64 = 3.6e6;
/// Joules per megajoule.
pub const J_PER_MJ: f64 = 1e6;
/// Joules per kilojoule.
pub const J_PER_KJ: f64 = 1e3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// Gravitational constant (m³/(kg·s²)).
    pub gravitational_constant: f64,
    /// Budgeting day length (s). Budgets are per Earth-day on both bodies.
    pub seconds_per_operating_day: f64,
    /// Conversion factor (J/kWh).
    pub joule_per_kwh: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            gravitational_constant: 6.674e-11,
            seconds_per_operating_day: 86_400.0,
            joule_per_kwh: J_PER_KWH,
        }
    }
}

/// Where a body's export water comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WaterSource {
    /// Buried ice in permanently shadowed polar craters, reached by rail.
    PolarIce,
    /// Mineral hydrates in nearby surface regolith, reached by truck.
    Hydrates,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BodyProfile {
    pub name: String,
    /// Surface gravity (m/s²).
    pub gravity: f64,
    /// Body mass (kg).
    pub body_mass: f64,
    /// Body radius (m).
    pub body_radius: f64,
    /// Configured escape speed (m/s). Stored, not derived: the derivation
    /// from mass and radius lives in the launch module and the two are
    /// reconciled in the claims ledger.
    pub escape_speed: f64,
    /// Mean daytime solar insolation (W/m²).
    pub insolation: f64,
    /// Usable sunlight per budgeting day (s).
    pub daylight_per_day: f64,
    pub water_source: WaterSource,
    /// Temperature of the raw water deposit (°C).
    pub ice_temperature_c: f64,
    /// One-way distance from the open pit to the base (m).
    pub pit_haul_distance: f64,
    /// One-way distance from refinery to mass driver (m).
    pub processed_haul_distance: f64,
    /// Rail length from the water deposit to the base (m); 0 if no rail.
    pub rail_distance: f64,
}

impl BodyProfile {
    pub fn validate(&self) -> Result<()> {
        if self.gravity <= 0.0 {
            return Err(Error::Config(format!("{}: gravity must be > 0", self.name)));
        }
        if self.insolation <= 0.0 {
            return Err(Error::Config(format!("{}: insolation must be > 0", self.name)));
        }
        if self.daylight_per_day <= 0.0 || self.daylight_per_day > 86_400.0 {
            return Err(Error::Config(format!(
                "{}: daylight_per_day must be in (0, 86400]",
                self.name
            )));
        }
        match self.water_source {
            WaterSource::PolarIce if self.rail_distance <= 0.0 => Err(Error::Config(format!(
                "{}: polar ice source requires rail_distance > 0",
                self.name
            ))),
            WaterSource::Hydrates if self.rail_distance != 0.0 => Err(Error::Config(format!(
                "{}: hydrate source requires rail_distance = 0",
                self.name
            ))),
            _ => Ok(()),
        }
    }
}

/// Thermophysical and refining properties of one material.
///
/// Structural-only materials (print feedstock) carry zeroed refining
/// fields; refining-only materials carry zeroed melt fields.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaterialProperties {
    pub name: String,
    /// Bulk density (kg/m³).
    pub density: f64,
    /// Specific heat capacity (J/(kg·K)).
    pub heat_capacity: f64,
    /// Latent heat of melting (J/kg).
    pub melt_enthalpy: f64,
    /// Temperature rise applied when processing (K).
    pub delta_t: f64,
    /// Refining energy (J/kg).
    pub refine_energy: f64,
    /// Process water demand (L/kg).
    pub water_per_kg: f64,
    /// Energy to recycle that process water (J/kg of product).
    pub recycled_water_energy: f64,
}

impl MaterialProperties {
    fn validate(&self) -> Result<()> {
        let fields = [
            self.density,
            self.heat_capacity,
            self.melt_enthalpy,
            self.delta_t,
            self.refine_energy,
            self.water_per_kg,
            self.recycled_water_energy,
        ];
        if fields.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::Config(format!(
                "{}: material properties must be finite and >= 0",
                self.name
            )));
        }
        Ok(())
    }
}

/// Regolith composition assumed for the hydrate dehydration model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HydrateParams {
    /// Heat of dehydration of the hydrate mineral (J/kg).
    pub dehydration_energy: f64,
    /// Heat capacity of the anhydrous salt (J/(kg·K)).
    pub salt_heat_capacity: f64,
    /// Hydrate mineral mass fraction of regolith (percent).
    pub hydrate_fraction_pct: f64,
    /// Anhydrous salt mass fraction of regolith (percent).
    pub salt_fraction_pct: f64,
    /// Quartz sand mass fraction of regolith (percent).
    pub sand_fraction_pct: f64,
    /// Recoverable water mass fraction of regolith (percent).
    pub water_yield_pct: f64,
    /// Bake-out temperature (°C).
    pub bake_temperature_c: f64,
    /// Ambient temperature the water is condensed back down to (°C).
    pub ambient_temperature_c: f64,
}

/// Shared process parameters for excavation, haulage and refining chains.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProcessParams {
    /// Rolling friction coefficient on prepared roads.
    pub friction_road: f64,
    /// Friction coefficient in rough pit terrain.
    pub friction_rough: f64,
    /// Friction coefficient on the rail line.
    pub friction_rail: f64,
    /// Vehicle movement ratio over terrain (>= 1, 1 = ideal path).
    pub movement_ratio: f64,
    /// Digging force per excavation pass (N).
    pub dig_force: f64,
    /// Excavation footprint of one robot vehicle (m²).
    pub robot_area: f64,
    /// Metal extraction efficiency of the refinery (fraction).
    pub extraction_efficiency: f64,
    /// Titanium mass fraction of ilmenite.
    pub titanium_fraction: f64,
    /// Iron mass fraction of ilmenite.
    pub iron_fraction: f64,
    /// Ilmenite mass fraction of the ore deposit.
    pub ilmenite_purity: f64,
    /// Water-ice mass fraction of the polar deposit.
    pub ice_purity: f64,
    /// Rail carriage mass overhead factor (>= 1).
    pub rail_carriage_overhead: f64,
    /// Launch container mass overhead factor (>= 1).
    pub launch_container_overhead: f64,
    /// Mass driver electrical-to-kinetic overhead multiplier (>= 1).
    pub driver_efficiency_factor: f64,
    /// Temperature the product water is delivered at (°C).
    pub water_outlet_temperature_c: f64,
    /// Default photovoltaic conversion efficiency.
    pub pv_efficiency: f64,
    /// Default solar-thermal conversion efficiency.
    pub thermal_efficiency: f64,
    pub hydrate: HydrateParams,
}

impl Default for ProcessParams {
    fn default() -> Self {
        Self {
            friction_road: 0.01,
            friction_rough: 0.1,
            friction_rail: 0.005,
            movement_ratio: 1.2,
            dig_force: 3_000.0,
            robot_area: 0.42,
            extraction_efficiency: 0.7,
            titanium_fraction: 0.316,
            iron_fraction: 0.37,
            ilmenite_purity: 0.8,
            ice_purity: 0.9,
            rail_carriage_overhead: 1.2,
            launch_container_overhead: 1.5,
            driver_efficiency_factor: 2.0,
            water_outlet_temperature_c: 25.0,
            pv_efficiency: 0.45,
            thermal_efficiency: 1.0,
            hydrate: HydrateParams {
                dehydration_energy: 138.0 * J_PER_KJ,
                salt_heat_capacity: 0.756 * J_PER_KJ,
                hydrate_fraction_pct: 9.4,
                salt_fraction_pct: 4.42,
                sand_fraction_pct: 90.6,
                water_yield_pct: 5.0,
                bake_temperature_c: 111.0,
                ambient_temperature_c: 25.0,
            },
        }
    }
}

/// The complete constants registry. Immutable after load; two loads of the
/// same configuration compare bit-identical.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Registry {
    pub constants: PhysicalConstants,
    pub bodies: Vec<BodyProfile>,
    pub materials: Vec<MaterialProperties>,
    pub process: ProcessParams,
}

impl Registry {
    pub fn body(&self, name: &str) -> Result<&BodyProfile> {
        self.bodies
            .iter()
            .find(|b| b.name == name)
            .ok_or_else(|| Error::UnknownBody(name.to_string()))
    }

    pub fn material(&self, name: &str) -> Result<&MaterialProperties> {
        self.materials
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| Error::UnknownMaterial(name.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        if self.constants.gravitational_constant <= 0.0 {
            return Err(Error::Config("gravitational constant must be > 0".into()));
        }
        for body in &self.bodies {
            body.validate()?;
        }
        for material in &self.materials {
            material.validate()?;
        }
        Ok(())
    }
}

fn material(name: &str, density: f64) -> MaterialProperties {
    MaterialProperties {
        name: name.to_string(),
        density,
        heat_capacity: 0.0,
        melt_enthalpy: 0.0,
        delta_t: 0.0,
        refine_energy: 0.0,
        water_per_kg: 0.0,
        recycled_water_energy: 0.0,
    }
}

/// Default registry: Moon and Mars profiles plus the material set used by
/// the construction, resource-chain and life-support models.
pub fn default_registry() -> Registry {
    let bodies = vec![
        BodyProfile {
            name: "moon".into(),
            gravity: 1.62,
            body_mass: 7.34e22,
            body_radius: 1.731e6,
            escape_speed: 2_440.0,
            insolation: 1_360.0,
            // Crater-rim reflectors keep the base lit around the clock.
            daylight_per_day: 86_400.0,
            water_source: WaterSource::PolarIce,
            ice_temperature_c: -150.0,
            pit_haul_distance: 5_000.0,
            processed_haul_distance: 1_000.0,
            rail_distance: 1.0e6,
        },
        BodyProfile {
            name: "mars".into(),
            gravity: 3.7,
            body_mass: 6.39e23,
            body_radius: 3.3895e6,
            escape_speed: 5_017.0,
            insolation: 544.0,
            daylight_per_day: 28_800.0,
            water_source: WaterSource::Hydrates,
            ice_temperature_c: 25.0,
            pit_haul_distance: 5_000.0,
            processed_haul_distance: 1_000.0,
            rail_distance: 0.0,
        },
    ];

    let materials = vec![
        MaterialProperties {
            heat_capacity: 0.830 * J_PER_KJ,
            melt_enthalpy: 156.0 * J_PER_KJ,
            delta_t: 1_973.0,
            ..material("sand", 1_500.0)
        },
        MaterialProperties {
            heat_capacity: 0.510 * J_PER_KJ,
            melt_enthalpy: 25.23 * J_PER_MJ,
            delta_t: 1_640.0,
            ..material("steel", 7_750.0)
        },
        MaterialProperties {
            heat_capacity: 2.108 * J_PER_KJ,
            melt_enthalpy: 333.55 * J_PER_KJ,
            ..material("ice", 1_000.0)
        },
        MaterialProperties {
            heat_capacity: 4.200 * J_PER_KJ,
            refine_energy: 16.0 * J_PER_MJ,
            ..material("water", 1_000.0)
        },
        material("ilmenite", 4_800.0),
        MaterialProperties {
            refine_energy: 25.0 * J_PER_MJ,
            water_per_kg: 23.0,
            recycled_water_energy: 0.25 * J_PER_MJ,
            ..material("low_grade_steel", 7_750.0)
        },
        MaterialProperties {
            refine_energy: 85.0 * J_PER_MJ,
            water_per_kg: 112.0,
            recycled_water_energy: 1.2 * J_PER_MJ,
            ..material("stainless_steel", 7_750.0)
        },
        MaterialProperties {
            refine_energy: 120.0 * J_PER_MJ,
            water_per_kg: 190.0,
            recycled_water_energy: 2.1 * J_PER_MJ,
            ..material("titanium", 4_506.0)
        },
        MaterialProperties {
            refine_energy: 138.0 * J_PER_MJ,
            water_per_kg: 200.0,
            recycled_water_energy: 2.1 * J_PER_MJ,
            ..material("aluminium", 2_700.0)
        },
    ];

    Registry {
        constants: PhysicalConstants::default(),
        bodies,
        materials,
        process: ProcessParams::default(),
    }
}
