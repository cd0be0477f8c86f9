//! Scenario composition: construction and daily-operations budgets for a
//! configured body, crew mode, construction method and export manifest.

use serde::{Deserialize, Serialize};

use crate::construction::{structure_construction_energy, ConstructionMethod, MethodKind};
use crate::error::{Error, Result};
use crate::isru::{
    dehydrate_regolith, dig_energy, haul_energy, melt_ice_to_water, ore_mass_for_output,
    rail_haul_energy, refining_energy, DigTask, HaulTask, RefineTask,
};
use crate::launch::{launch_energy, MassDriverSpec};
use crate::ledger::EnergyLedger;
use crate::life_support::{crew_daily_energy, CrewProfile, DietTable};
use crate::registry::{default_registry, BodyProfile, Registry, WaterSource};
use crate::structures::{default_catalog, StructureKind, StructureSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrewMode {
    Robotic,
    Human,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub material: String,
    /// Export mass per budgeting day (kg).
    pub kg_per_day: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioConfig {
    pub name: String,
    pub body: String,
    pub crew: CrewMode,
    pub method: ConstructionMethod,
    pub export_manifest: Vec<ManifestEntry>,
    /// Whether the superconductive rail is part of the build-out.
    pub include_rail: bool,
    /// Flat facility overhead/maintenance item (J/day); no formula exists
    /// for it, so it defaults to zero and is purely configurable.
    pub overhead_energy: f64,
}

impl ScenarioConfig {
    /// Default scenario for a body: human crew, 3D printing, 100 t/day
    /// each of water, low-grade steel, titanium and aluminium.
    pub fn default_for_body(body: &str) -> Self {
        Self {
            name: body.to_string(),
            body: body.to_string(),
            crew: CrewMode::Human,
            method: ConstructionMethod::print3d(),
            export_manifest: default_manifest(),
            include_rail: body == "moon",
            overhead_energy: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.method.validate()?;
        for entry in &self.export_manifest {
            if entry.kg_per_day < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "manifest mass for {} must be >= 0",
                    entry.material
                )));
            }
        }
        if self.overhead_energy < 0.0 {
            return Err(Error::InvalidInput("overhead energy must be >= 0".into()));
        }
        Ok(())
    }

    fn manifest_mass(&self, material: &str) -> f64 {
        self.export_manifest
            .iter()
            .filter(|e| e.material == material)
            .map(|e| e.kg_per_day)
            .sum()
    }
}

pub fn default_manifest() -> Vec<ManifestEntry> {
    ["water", "low_grade_steel", "titanium", "aluminium"]
        .iter()
        .map(|material| ManifestEntry {
            material: (*material).to_string(),
            kg_per_day: 1.0e5,
        })
        .collect()
}

/// Construction budget: the base itemized by structure kind, with the rail
/// line carried as its own ledger because it dwarfs the base proper.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionBudget {
    pub base: EnergyLedger,
    pub rail: Option<EnergyLedger>,
}

impl ConstructionBudget {
    pub fn grand_total(&self) -> f64 {
        self.base.total() + self.rail.as_ref().map_or(0.0, EnergyLedger::total)
    }
}

/// Element-wise ratio of two ledgers. Categories follow the left ledger's
/// order; a zero denominator yields `None` rather than infinity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub items: Vec<(String, Option<f64>)>,
    pub total: Option<f64>,
}

fn ratio(num: f64, den: f64) -> Option<f64> {
    if den == 0.0 {
        None
    } else {
        Some(num / den)
    }
}

pub fn ledger_ratios(a: &EnergyLedger, b: &EnergyLedger) -> RatioReport {
    let items = a
        .items()
        .iter()
        .map(|(name, e)| (name.clone(), b.get(name).and_then(|d| ratio(*e, d))))
        .collect();
    RatioReport {
        items,
        total: ratio(a.total(), b.total()),
    }
}

/// Scenario comparison: per-category operations ratios plus construction
/// grand-total ratio, all a-over-b.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub operations: RatioReport,
    pub construction_total: Option<f64>,
}

/// The evaluation engine: registry, structure catalog, crew and diet
/// defaults. Immutable during evaluation; clone to mutate for sweeps.
#[derive(Debug, Clone, PartialEq)]
pub struct Engine {
    pub registry: Registry,
    pub catalog: Vec<StructureSpec>,
    pub diet: DietTable,
    pub crews: Vec<(String, CrewProfile)>,
}

impl Default for Engine {
    fn default() -> Self {
        let registry = default_registry();
        let crews = registry
            .bodies
            .iter()
            .map(|b| (b.name.clone(), CrewProfile::default_for_body(&b.name)))
            .collect();
        Self {
            registry,
            catalog: default_catalog(),
            diet: DietTable::default(),
            crews,
        }
    }
}

impl Engine {
    pub fn crew_profile(&self, body: &str) -> CrewProfile {
        self.crews
            .iter()
            .find(|(name, _)| name == body)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| CrewProfile::default_for_body(body))
    }

    /// Construction budget for the scenario. Human-only structures are
    /// built only for a human crew; the rail is priced only under 3D
    /// printing (block construction of a 1,000 km line is not modeled).
    pub fn evaluate_construction(&self, config: &ScenarioConfig) -> Result<ConstructionBudget> {
        config.validate()?;
        let body = self.registry.body(&config.body)?;
        let sand = self.registry.material("sand")?;
        let steel = self.registry.material("steel")?;

        let mut base = EnergyLedger::new();
        let mut rail = None;
        for spec in &self.catalog {
            if spec.kind.human_only() && config.crew != CrewMode::Human {
                continue;
            }
            if spec.kind == StructureKind::SuperconductiveRail {
                if config.include_rail && config.method.variant == MethodKind::Print3d {
                    let e = structure_construction_energy(spec, &config.method, body, sand, steel)?;
                    let mut ledger = EnergyLedger::new();
                    ledger.push(spec.kind.label(), e);
                    rail = Some(ledger);
                }
                continue;
            }
            let e = structure_construction_energy(spec, &config.method, body, sand, steel)?;
            base.push(spec.kind.label(), e);
        }
        Ok(ConstructionBudget { base, rail })
    }

    fn water_chain_energy(&self, config: &ScenarioConfig, body: &BodyProfile) -> Result<f64> {
        let water_mass = config.manifest_mass("water");
        if water_mass == 0.0 {
            return Ok(0.0);
        }
        let proc = &self.registry.process;
        let ice = self.registry.material("ice")?;
        let water = self.registry.material("water")?;
        let sand = self.registry.material("sand")?;

        let (purity, deposit_density, extraction) = match body.water_source {
            WaterSource::PolarIce => {
                let melt = melt_ice_to_water(
                    ice,
                    water,
                    water_mass,
                    body.ice_temperature_c,
                    proc.water_outlet_temperature_c,
                )?;
                (proc.ice_purity, ice.density, melt)
            }
            WaterSource::Hydrates => {
                let bake = dehydrate_regolith(&proc.hydrate, sand, water, water_mass)?;
                (proc.hydrate.water_yield_pct / 100.0, sand.density, bake)
            }
        };

        let dig = dig_energy(&DigTask {
            payload_mass: water_mass,
            purity,
            deposit_density,
            dig_force: proc.dig_force,
            robot_area: proc.robot_area,
            movement_ratio: proc.movement_ratio,
            friction_coeff: proc.friction_rough,
            gravity: body.gravity,
        })?;
        let overburden_haul = haul_energy(&HaulTask {
            payload_mass: water_mass,
            purity,
            distance: body.pit_haul_distance,
            friction_coeff: proc.friction_road,
            movement_ratio: proc.movement_ratio,
            gravity: body.gravity,
        })?;
        let rail = if body.rail_distance > 0.0 {
            rail_haul_energy(
                water_mass,
                proc.rail_carriage_overhead,
                proc.friction_rail,
                body.rail_distance,
                body.gravity,
            )?
        } else {
            0.0
        };
        let processed_haul = haul_energy(&HaulTask {
            payload_mass: water_mass,
            purity: 1.0,
            distance: body.processed_haul_distance,
            friction_coeff: proc.friction_road,
            movement_ratio: 1.0,
            gravity: body.gravity,
        })?;
        Ok(dig + overburden_haul + rail + extraction + processed_haul)
    }

    fn metal_chain_energy(&self, config: &ScenarioConfig, body: &BodyProfile) -> Result<f64> {
        let proc = &self.registry.process;
        let ti_mass = config.manifest_mass("titanium");
        let fe_mass = config.manifest_mass("low_grade_steel");
        if ti_mass == 0.0 && fe_mass == 0.0 {
            return Ok(0.0);
        }
        // Titanium and iron both come out of the same ilmenite dig, so one
        // excavation sized for the more demanding product covers both.
        let for_ti = if ti_mass > 0.0 {
            ore_mass_for_output(ti_mass, proc.extraction_efficiency, proc.titanium_fraction)?
        } else {
            0.0
        };
        let for_fe = if fe_mass > 0.0 {
            ore_mass_for_output(fe_mass, proc.extraction_efficiency, proc.iron_fraction)?
        } else {
            0.0
        };
        let ilmenite_mass = for_ti.max(for_fe);
        let ilmenite = self.registry.material("ilmenite")?;

        let dig = dig_energy(&DigTask {
            payload_mass: ilmenite_mass,
            purity: proc.ilmenite_purity,
            deposit_density: ilmenite.density,
            dig_force: proc.dig_force,
            robot_area: proc.robot_area,
            movement_ratio: proc.movement_ratio,
            friction_coeff: proc.friction_rough,
            gravity: body.gravity,
        })?;
        let overburden_haul = haul_energy(&HaulTask {
            payload_mass: ilmenite_mass,
            purity: proc.ilmenite_purity,
            distance: body.pit_haul_distance,
            friction_coeff: proc.friction_road,
            movement_ratio: proc.movement_ratio,
            gravity: body.gravity,
        })?;
        let processed_haul = haul_energy(&HaulTask {
            payload_mass: ti_mass + fe_mass,
            purity: 1.0,
            distance: body.processed_haul_distance,
            friction_coeff: proc.friction_road,
            movement_ratio: 1.0,
            gravity: body.gravity,
        })?;
        Ok(dig + overburden_haul + processed_haul)
    }

    fn refining_item(&self, config: &ScenarioConfig) -> Result<f64> {
        let mut total = 0.0;
        for entry in &config.export_manifest {
            // Water production is priced by the water chain, not Table 2
            // refining; everything else in the manifest must be refinable.
            if entry.material == "water" || entry.kg_per_day == 0.0 {
                continue;
            }
            let material = self.registry.material(&entry.material)?;
            total += refining_energy(&RefineTask {
                material: material.clone(),
                mass: entry.kg_per_day,
                include_recycled_water: true,
            })?;
        }
        Ok(total)
    }

    /// Daily operations budget: water chain, metal chain, refining, mass
    /// driver, crew and flat overhead.
    pub fn evaluate_operations(&self, config: &ScenarioConfig) -> Result<EnergyLedger> {
        config.validate()?;
        let body = self.registry.body(&config.body)?;
        let proc = &self.registry.process;

        let mut ledger = EnergyLedger::new();
        ledger.push("water_chain", self.water_chain_energy(config, body)?);
        ledger.push("metal_chain", self.metal_chain_energy(config, body)?);
        ledger.push("refining", self.refining_item(config)?);

        let manifest_total: f64 = config.export_manifest.iter().map(|e| e.kg_per_day).sum();
        let driver = if manifest_total > 0.0 {
            launch_energy(
                manifest_total,
                &MassDriverSpec {
                    container_overhead: proc.launch_container_overhead,
                    driver_efficiency_factor: proc.driver_efficiency_factor,
                    launch_speed: body.escape_speed,
                },
            )?
        } else {
            0.0
        };
        ledger.push("mass_driver", driver);

        let crew = match config.crew {
            CrewMode::Human => {
                crew_daily_energy(&self.crew_profile(&config.body), &self.diet)?.total()
            }
            CrewMode::Robotic => 0.0,
        };
        ledger.push("crew", crew);
        ledger.push("overhead", config.overhead_energy);
        Ok(ledger)
    }

    pub fn compare_scenarios(
        &self,
        a: &ScenarioConfig,
        b: &ScenarioConfig,
    ) -> Result<ComparisonReport> {
        let ops_a = self.evaluate_operations(a)?;
        let ops_b = self.evaluate_operations(b)?;
        let con_a = self.evaluate_construction(a)?;
        let con_b = self.evaluate_construction(b)?;
        Ok(ComparisonReport {
            operations: ledger_ratios(&ops_a, &ops_b),
            construction_total: ratio(con_a.grand_total(), con_b.grand_total()),
        })
    }

    /// Apply one numeric parameter override. Paths are dotted:
    /// `body.<field>`, `process.<field>`, `method.<field>`,
    /// `manifest.<material>`, `crew.headcount`, `overhead`.
    pub fn apply_parameter(&mut self, config: &mut ScenarioConfig, path: &str, value: f64) -> Result<()> {
        let unknown = || Error::UnknownParameter(path.to_string());
        match path.split_once('.') {
            Some(("body", field)) => {
                let name = config.body.clone();
                let body = self
                    .registry
                    .bodies
                    .iter_mut()
                    .find(|b| b.name == name)
                    .ok_or_else(|| Error::UnknownBody(name.clone()))?;
                let slot = match field {
                    "gravity" => &mut body.gravity,
                    "escape_speed" => &mut body.escape_speed,
                    "insolation" => &mut body.insolation,
                    "daylight_per_day" => &mut body.daylight_per_day,
                    "ice_temperature_c" => &mut body.ice_temperature_c,
                    "pit_haul_distance" => &mut body.pit_haul_distance,
                    "processed_haul_distance" => &mut body.processed_haul_distance,
                    "rail_distance" => &mut body.rail_distance,
                    _ => return Err(unknown()),
                };
                *slot = value;
            }
            Some(("process", field)) => {
                let proc = &mut self.registry.process;
                let slot = match field {
                    "friction_road" => &mut proc.friction_road,
                    "friction_rough" => &mut proc.friction_rough,
                    "friction_rail" => &mut proc.friction_rail,
                    "movement_ratio" => &mut proc.movement_ratio,
                    "dig_force" => &mut proc.dig_force,
                    "robot_area" => &mut proc.robot_area,
                    "extraction_efficiency" => &mut proc.extraction_efficiency,
                    "titanium_fraction" => &mut proc.titanium_fraction,
                    "iron_fraction" => &mut proc.iron_fraction,
                    "ilmenite_purity" => &mut proc.ilmenite_purity,
                    "ice_purity" => &mut proc.ice_purity,
                    "rail_carriage_overhead" => &mut proc.rail_carriage_overhead,
                    "launch_container_overhead" => &mut proc.launch_container_overhead,
                    "driver_efficiency_factor" => &mut proc.driver_efficiency_factor,
                    _ => return Err(unknown()),
                };
                *slot = value;
            }
            Some(("method", field)) => {
                let slot = match field {
                    "mu_structure" => &mut config.method.mu_structure,
                    "mu_road" => &mut config.method.mu_road,
                    "transport_distance" => &mut config.method.transport_distance,
                    _ => return Err(unknown()),
                };
                *slot = value;
            }
            Some(("manifest", material)) => {
                if value < 0.0 {
                    return Err(Error::InvalidInput("manifest mass must be >= 0".into()));
                }
                match config
                    .export_manifest
                    .iter_mut()
                    .find(|e| e.material == material)
                {
                    Some(entry) => entry.kg_per_day = value,
                    None => config.export_manifest.push(ManifestEntry {
                        material: material.to_string(),
                        kg_per_day: value,
                    }),
                }
            }
            Some(("crew", "headcount")) => {
                if value < 0.0 {
                    return Err(Error::InvalidInput("headcount must be >= 0".into()));
                }
                let name = config.body.clone();
                let profile = self
                    .crews
                    .iter_mut()
                    .find(|(body, _)| *body == name)
                    .map(|(_, p)| p)
                    .ok_or_else(|| Error::UnknownBody(name.clone()))?;
                profile.headcount = value.round() as u32;
            }
            None if path == "overhead" => {
                config.overhead_energy = value;
            }
            _ => return Err(unknown()),
        }
        Ok(())
    }

    /// One independent operations evaluation per value, in input order.
    pub fn parameter_sweep(
        &self,
        config: &ScenarioConfig,
        path: &str,
        values: &[f64],
    ) -> Result<Vec<(f64, EnergyLedger)>> {
        let mut rows = Vec::with_capacity(values.len());
        for &value in values {
            let mut engine = self.clone();
            let mut cfg = config.clone();
            engine.apply_parameter(&mut cfg, path, value)?;
            rows.push((value, engine.evaluate_operations(&cfg)?));
        }
        Ok(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::J_PER_MJ;

    fn rel(actual: f64, expected: f64) -> f64 {
        ((actual - expected) / expected).abs()
    }

    fn moon_human() -> ScenarioConfig {
        ScenarioConfig::default_for_body("moon")
    }

    #[test]
    fn moon_operations_total_and_shares() {
        let engine = Engine::default();
        let ledger = engine.evaluate_operations(&moon_human()).unwrap();
        let total_mj = ledger.total() / J_PER_MJ;
        assert!(rel(total_mj, 3.27e7) < 0.05, "total = {total_mj} MJ");
        let refining_share = ledger.get("refining").unwrap() / ledger.total() * 100.0;
        assert!((refining_share - 86.6).abs() <= 2.0, "share = {refining_share}%");
    }

    #[test]
    fn mars_operations_total_and_driver_share() {
        let engine = Engine::default();
        let config = ScenarioConfig::default_for_body("mars");
        let ledger = engine.evaluate_operations(&config).unwrap();
        let total_mj = ledger.total() / J_PER_MJ;
        assert!(rel(total_mj, 4.42e7) < 0.05, "total = {total_mj} MJ");
        let driver_share = ledger.get("mass_driver").unwrap() / ledger.total() * 100.0;
        assert!((driver_share - 34.0).abs() <= 2.0, "share = {driver_share}%");
    }

    #[test]
    fn zero_manifest_robotic_is_zero() {
        let engine = Engine::default();
        let config = ScenarioConfig {
            crew: CrewMode::Robotic,
            export_manifest: Vec::new(),
            ..moon_human()
        };
        let ledger = engine.evaluate_operations(&config).unwrap();
        assert_eq!(ledger.total(), 0.0);
    }

    #[test]
    fn construction_refinery_line() {
        let engine = Engine::default();
        let config = ScenarioConfig {
            crew: CrewMode::Robotic,
            ..moon_human()
        };
        let budget = engine.evaluate_construction(&config).unwrap();
        let refinery = budget.base.get("refinery_dome").unwrap() / J_PER_MJ;
        assert!(rel(refinery, 1.749e9) < 1e-3, "refinery = {refinery} MJ");
        // Robotic base carries no human-only lines.
        assert!(budget.base.get("habitat_dome").is_none());
        assert!(budget.rail.is_some());
    }

    #[test]
    fn rail_only_under_print3d() {
        let engine = Engine::default();
        let config = ScenarioConfig {
            method: ConstructionMethod::steel_block(),
            ..moon_human()
        };
        let budget = engine.evaluate_construction(&config).unwrap();
        assert!(budget.rail.is_none());
    }

    #[test]
    fn driver_ratio_mars_over_moon() {
        let engine = Engine::default();
        let mars = ScenarioConfig::default_for_body("mars");
        let moon = moon_human();
        let report = engine.compare_scenarios(&mars, &moon).unwrap();
        let driver = report
            .operations
            .items
            .iter()
            .find(|(name, _)| name == "mass_driver")
            .unwrap()
            .1
            .unwrap();
        assert!(rel(driver, (5_017.0f64 / 2_440.0).powi(2)) < 1e-12);
    }

    #[test]
    fn identical_configs_compare_to_unity() {
        let engine = Engine::default();
        let report = engine.compare_scenarios(&moon_human(), &moon_human()).unwrap();
        for (_, r) in &report.operations.items {
            match r {
                Some(v) => assert_eq!(*v, 1.0),
                // Zero-valued categories (overhead) divide 0/0.
                None => {}
            }
        }
        assert_eq!(report.operations.total, Some(1.0));
    }

    #[test]
    fn sweep_rail_distance() {
        let engine = Engine::default();
        let rows = engine
            .parameter_sweep(&moon_human(), "body.rail_distance", &[0.0, 1.0e6])
            .unwrap();
        assert_eq!(rows.len(), 2);
        let delta = rows[1].1.get("water_chain").unwrap() - rows[0].1.get("water_chain").unwrap();
        assert!(rel(delta, 972.0e6) < 1e-9, "delta = {delta}");
    }

    #[test]
    fn sweep_manifest_mass_scales_refining_and_driver() {
        let engine = Engine::default();
        let base = engine.evaluate_operations(&moon_human()).unwrap();
        let mut config = moon_human();
        for entry in &mut config.export_manifest {
            entry.kg_per_day *= 2.0;
        }
        let doubled = engine.evaluate_operations(&config).unwrap();
        assert_eq!(doubled.get("refining"), base.get("refining").map(|e| 2.0 * e));
        assert_eq!(doubled.get("mass_driver"), base.get("mass_driver").map(|e| 2.0 * e));
    }

    #[test]
    fn single_value_sweep_equals_direct_evaluation() {
        let engine = Engine::default();
        let rows = engine
            .parameter_sweep(&moon_human(), "manifest.water", &[1.0e5])
            .unwrap();
        assert_eq!(rows[0].1, engine.evaluate_operations(&moon_human()).unwrap());
    }

    #[test]
    fn unknown_sweep_path_fails() {
        let engine = Engine::default();
        let err = engine
            .parameter_sweep(&moon_human(), "body.not_a_field", &[1.0])
            .unwrap_err();
        assert!(matches!(err, Error::UnknownParameter(_)));
    }

    #[test]
    fn human_crew_never_decreases_totals() {
        let engine = Engine::default();
        for body in ["moon", "mars"] {
            let human = ScenarioConfig::default_for_body(body);
            let robotic = ScenarioConfig {
                crew: CrewMode::Robotic,
                ..human.clone()
            };
            assert!(
                engine.evaluate_operations(&human).unwrap().total()
                    >= engine.evaluate_operations(&robotic).unwrap().total()
            );
            assert!(
                engine.evaluate_construction(&human).unwrap().grand_total()
                    >= engine.evaluate_construction(&robotic).unwrap().grand_total()
            );
        }
    }
}
