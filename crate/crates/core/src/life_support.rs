//! Daily life-support energy for a human crew: oxygen regeneration,
//! electricity, water recycling and food production.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ledger::EnergyLedger;
use crate::registry::{J_PER_KJ, J_PER_KWH, J_PER_MJ};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrewProfile {
    pub headcount: u32,
    /// Oxygen consumed per person per day (mol).
    pub o2_moles_per_person: f64,
    /// Energy to regenerate one mole of O₂ from CO₂ (J/mol).
    pub o2_energy_per_mole: f64,
    /// Personal electricity per person per day (kWh); body-dependent.
    pub electricity_kwh_per_person: f64,
    /// Water drawn per person per day (L).
    pub water_l_per_person: f64,
    /// Energy to recycle one liter of water (J/L).
    pub water_recycle_energy: f64,
    /// Food over-production factor; 2.0 means half the food is wasted.
    pub waste_factor: f64,
    /// Flat crew-wide adjustment to the water item (J/day), covering
    /// body-specific transport costs.
    pub water_adjustment: f64,
    /// Flat crew-wide adjustment to the food item (J/day).
    pub food_adjustment: f64,
}

impl CrewProfile {
    /// Default 300-person crew for the named body. Electricity drops on
    /// Mars (less night heating) and water/food carry small transport
    /// adjustments.
    pub fn default_for_body(body: &str) -> Self {
        let base = Self {
            headcount: 300,
            o2_moles_per_person: 98.2,
            o2_energy_per_mole: 566.0 * J_PER_KJ,
            electricity_kwh_per_person: 15.0,
            water_l_per_person: 300.0,
            water_recycle_energy: 0.36 * J_PER_MJ,
            waste_factor: 2.0,
            water_adjustment: 0.0,
            food_adjustment: 0.0,
        };
        if body == "mars" {
            Self {
                electricity_kwh_per_person: 10.0,
                water_adjustment: 10.0 * J_PER_MJ,
                food_adjustment: 1.64 * J_PER_MJ,
                ..base
            }
        } else {
            base
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.waste_factor < 1.0 {
            return Err(Error::InvalidInput(format!(
                "waste factor {} must be >= 1",
                self.waste_factor
            )));
        }
        let fields = [
            self.o2_moles_per_person,
            self.o2_energy_per_mole,
            self.electricity_kwh_per_person,
            self.water_l_per_person,
            self.water_recycle_energy,
        ];
        if fields.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidInput("crew profile fields must be >= 0".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DietRow {
    pub food: String,
    /// Net production energy (J/kg).
    pub production_energy: f64,
    /// Daily consumption per person (kg).
    pub daily_kg_per_person: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DietTable {
    pub rows: Vec<DietRow>,
}

impl DietTable {
    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    /// Per-person daily food production energy before waste (J).
    pub fn per_person_energy(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| r.production_energy * r.daily_kg_per_person)
            .sum()
    }

    /// Per-person daily food mass (kg).
    pub fn per_person_mass(&self) -> f64 {
        self.rows.iter().map(|r| r.daily_kg_per_person).sum()
    }
}

impl Default for DietTable {
    fn default() -> Self {
        let rows = [
            ("corn", 1.1, 0.306),
            ("milk", 2.2, 0.18),
            ("fruits_vegetables", 4.4, 0.864),
            ("eggs", 8.36, 0.09),
            ("chicken", 8.8, 0.09),
            ("cheese", 17.6, 0.09),
            ("goat", 30.8, 0.09),
            ("beef", 70.4, 0.09),
        ];
        Self {
            rows: rows
                .iter()
                .map(|(food, mj_per_kg, kg)| DietRow {
                    food: (*food).to_string(),
                    production_energy: mj_per_kg * J_PER_MJ,
                    daily_kg_per_person: *kg,
                })
                .collect(),
        }
    }
}

/// Daily food production energy for the crew, including waste (J).
pub fn food_energy(diet: &DietTable, headcount: u32, waste_factor: f64) -> f64 {
    f64::from(headcount) * waste_factor * diet.per_person_energy()
}

/// Itemized daily life-support ledger: oxygen, electricity, water, food.
pub fn crew_daily_energy(profile: &CrewProfile, diet: &DietTable) -> Result<EnergyLedger> {
    profile.validate()?;
    let n = f64::from(profile.headcount);
    let mut ledger = EnergyLedger::new();
    ledger.push("oxygen", n * profile.o2_moles_per_person * profile.o2_energy_per_mole);
    ledger.push(
        "electricity",
        n * profile.electricity_kwh_per_person * J_PER_KWH,
    );
    let water = n * profile.water_l_per_person * profile.water_recycle_energy
        + if profile.headcount > 0 { profile.water_adjustment } else { 0.0 };
    ledger.push("water", water);
    let food = food_energy(diet, profile.headcount, profile.waste_factor)
        + if profile.headcount > 0 { profile.food_adjustment } else { 0.0 };
    ledger.push("food", food);
    Ok(ledger)
}
