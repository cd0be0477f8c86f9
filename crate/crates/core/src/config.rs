//! JSON configuration loading: partial overrides applied on top of the
//! built-in defaults.
//!
//! A config file is a JSON object with optional sections. Every section is
//! a patch: only the fields present are changed, everything else keeps its
//! default. Unknown keys anywhere are rejected so typos fail loudly.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::life_support::{CrewProfile, DietRow, DietTable};
use crate::registry::{MaterialProperties, WaterSource};
use crate::scenario::{CrewMode, Engine, ManifestEntry, ScenarioConfig};
use crate::structures::StructureSpec;

fn set<T: Copy>(slot: &mut T, patch: Option<T>) {
    if let Some(v) = patch {
        *slot = v;
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodyPatch {
    pub name: String,
    pub gravity: Option<f64>,
    pub body_mass: Option<f64>,
    pub body_radius: Option<f64>,
    pub escape_speed: Option<f64>,
    pub insolation: Option<f64>,
    pub daylight_per_day: Option<f64>,
    pub water_source: Option<WaterSource>,
    pub ice_temperature_c: Option<f64>,
    pub pit_haul_distance: Option<f64>,
    pub processed_haul_distance: Option<f64>,
    pub rail_distance: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialPatch {
    pub name: String,
    pub density: Option<f64>,
    pub heat_capacity: Option<f64>,
    pub melt_enthalpy: Option<f64>,
    pub delta_t: Option<f64>,
    pub refine_energy: Option<f64>,
    pub water_per_kg: Option<f64>,
    pub recycled_water_energy: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProcessPatch {
    pub friction_road: Option<f64>,
    pub friction_rough: Option<f64>,
    pub friction_rail: Option<f64>,
    pub movement_ratio: Option<f64>,
    pub dig_force: Option<f64>,
    pub robot_area: Option<f64>,
    pub extraction_efficiency: Option<f64>,
    pub titanium_fraction: Option<f64>,
    pub iron_fraction: Option<f64>,
    pub ilmenite_purity: Option<f64>,
    pub ice_purity: Option<f64>,
    pub rail_carriage_overhead: Option<f64>,
    pub launch_container_overhead: Option<f64>,
    pub driver_efficiency_factor: Option<f64>,
    pub water_outlet_temperature_c: Option<f64>,
    pub pv_efficiency: Option<f64>,
    pub thermal_efficiency: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrewPatch {
    pub body: String,
    pub headcount: Option<u32>,
    pub o2_moles_per_person: Option<f64>,
    pub o2_energy_per_mole: Option<f64>,
    pub electricity_kwh_per_person: Option<f64>,
    pub water_l_per_person: Option<f64>,
    pub water_recycle_energy: Option<f64>,
    pub waste_factor: Option<f64>,
    pub water_adjustment: Option<f64>,
    pub food_adjustment: Option<f64>,
}

/// One scenario in the config file. Anything left out falls back to the
/// body's default scenario.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioEntry {
    pub name: String,
    pub body: String,
    pub crew: Option<CrewMode>,
    pub method: Option<MethodName>,
    pub export_manifest: Option<Vec<ManifestEntry>>,
    pub include_rail: Option<bool>,
    pub overhead_energy: Option<f64>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodName {
    Print3d,
    Conventional,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ConfigFile {
    pub bodies: Vec<BodyPatch>,
    pub materials: Vec<MaterialPatch>,
    pub process: ProcessPatch,
    /// Full replacement of the structure catalog when present.
    pub structures: Option<Vec<StructureSpec>>,
    pub crew: Vec<CrewPatch>,
    /// Full replacement of the diet table when present.
    pub diet: Option<Vec<DietRow>>,
    pub scenarios: Vec<ScenarioEntry>,
}

impl ScenarioEntry {
    fn into_config(self) -> ScenarioConfig {
        let mut config = ScenarioConfig::default_for_body(&self.body);
        config.name = self.name;
        set(&mut config.crew, self.crew);
        if let Some(method) = self.method {
            config.method = match method {
                MethodName::Print3d => crate::construction::ConstructionMethod::print3d(),
                MethodName::Conventional => crate::construction::ConstructionMethod::steel_block(),
            };
        }
        if let Some(manifest) = self.export_manifest {
            config.export_manifest = manifest;
        }
        set(&mut config.include_rail, self.include_rail);
        set(&mut config.overhead_energy, self.overhead_energy);
        config
    }
}

/// An engine plus the named scenarios defined alongside it.
#[derive(Debug, Clone)]
pub struct LoadedConfig {
    pub engine: Engine,
    pub scenarios: Vec<ScenarioConfig>,
}

impl LoadedConfig {
    pub fn scenario(&self, name: &str) -> Result<&ScenarioConfig> {
        self.scenarios
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::UnknownScenario(name.to_string()))
    }
}

/// Apply a parsed config on top of the default engine.
pub fn apply_config(file: ConfigFile) -> Result<LoadedConfig> {
    let mut engine = Engine::default();

    for patch in file.bodies {
        let body = engine
            .registry
            .bodies
            .iter_mut()
            .find(|b| b.name == patch.name)
            .ok_or_else(|| Error::UnknownBody(patch.name.clone()))?;
        set(&mut body.gravity, patch.gravity);
        set(&mut body.body_mass, patch.body_mass);
        set(&mut body.body_radius, patch.body_radius);
        set(&mut body.escape_speed, patch.escape_speed);
        set(&mut body.insolation, patch.insolation);
        set(&mut body.daylight_per_day, patch.daylight_per_day);
        set(&mut body.water_source, patch.water_source);
        set(&mut body.ice_temperature_c, patch.ice_temperature_c);
        set(&mut body.pit_haul_distance, patch.pit_haul_distance);
        set(&mut body.processed_haul_distance, patch.processed_haul_distance);
        set(&mut body.rail_distance, patch.rail_distance);
    }

    for patch in file.materials {
        let material = match engine
            .registry
            .materials
            .iter_mut()
            .find(|m| m.name == patch.name)
        {
            Some(m) => m,
            None => {
                // New materials start zeroed; the patch supplies the data.
                engine.registry.materials.push(MaterialProperties {
                    name: patch.name.clone(),
                    density: 0.0,
                    heat_capacity: 0.0,
                    melt_enthalpy: 0.0,
                    delta_t: 0.0,
                    refine_energy: 0.0,
                    water_per_kg: 0.0,
                    recycled_water_energy: 0.0,
                });
                engine.registry.materials.last_mut().unwrap()
            }
        };
        set(&mut material.density, patch.density);
        set(&mut material.heat_capacity, patch.heat_capacity);
        set(&mut material.melt_enthalpy, patch.melt_enthalpy);
        set(&mut material.delta_t, patch.delta_t);
        set(&mut material.refine_energy, patch.refine_energy);
        set(&mut material.water_per_kg, patch.water_per_kg);
        set(&mut material.recycled_water_energy, patch.recycled_water_energy);
    }

    {
        let proc = &mut engine.registry.process;
        let p = file.process;
        set(&mut proc.friction_road, p.friction_road);
        set(&mut proc.friction_rough, p.friction_rough);
        set(&mut proc.friction_rail, p.friction_rail);
        set(&mut proc.movement_ratio, p.movement_ratio);
        set(&mut proc.dig_force, p.dig_force);
        set(&mut proc.robot_area, p.robot_area);
        set(&mut proc.extraction_efficiency, p.extraction_efficiency);
        set(&mut proc.titanium_fraction, p.titanium_fraction);
        set(&mut proc.iron_fraction, p.iron_fraction);
        set(&mut proc.ilmenite_purity, p.ilmenite_purity);
        set(&mut proc.ice_purity, p.ice_purity);
        set(&mut proc.rail_carriage_overhead, p.rail_carriage_overhead);
        set(&mut proc.launch_container_overhead, p.launch_container_overhead);
        set(&mut proc.driver_efficiency_factor, p.driver_efficiency_factor);
        set(&mut proc.water_outlet_temperature_c, p.water_outlet_temperature_c);
        set(&mut proc.pv_efficiency, p.pv_efficiency);
        set(&mut proc.thermal_efficiency, p.thermal_efficiency);
    }

    if let Some(structures) = file.structures {
        for spec in &structures {
            spec.validate()?;
        }
        engine.catalog = structures;
    }

    for patch in file.crew {
        let profile = match engine.crews.iter_mut().find(|(body, _)| *body == patch.body) {
            Some((_, p)) => p,
            None => {
                engine
                    .crews
                    .push((patch.body.clone(), CrewProfile::default_for_body(&patch.body)));
                &mut engine.crews.last_mut().unwrap().1
            }
        };
        set(&mut profile.headcount, patch.headcount);
        set(&mut profile.o2_moles_per_person, patch.o2_moles_per_person);
        set(&mut profile.o2_energy_per_mole, patch.o2_energy_per_mole);
        set(&mut profile.electricity_kwh_per_person, patch.electricity_kwh_per_person);
        set(&mut profile.water_l_per_person, patch.water_l_per_person);
        set(&mut profile.water_recycle_energy, patch.water_recycle_energy);
        set(&mut profile.waste_factor, patch.waste_factor);
        set(&mut profile.water_adjustment, patch.water_adjustment);
        set(&mut profile.food_adjustment, patch.food_adjustment);
        profile.validate()?;
    }

    if let Some(rows) = file.diet {
        engine.diet = DietTable { rows };
    }

    engine.registry.validate()?;

    let scenarios: Vec<ScenarioConfig> = file
        .scenarios
        .into_iter()
        .map(ScenarioEntry::into_config)
        .collect();
    for scenario in &scenarios {
        scenario.validate()?;
        // A scenario must name a body the registry knows about.
        engine.registry.body(&scenario.body)?;
    }

    Ok(LoadedConfig { engine, scenarios })
}

/// Parse a JSON config string and apply it.
pub fn parse_config(text: &str) -> Result<LoadedConfig> {
    let file: ConfigFile =
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
    apply_config(file)
}

/// Read, parse and apply a JSON config file.
pub fn load_config(path: &Path) -> Result<LoadedConfig> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text)
}
