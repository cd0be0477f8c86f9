//! Construction energy for both building methods: in-situ fused-silica 3D
//! printing with steel reinforcement, and steel-frame with sand-block infill.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::registry::{BodyProfile, MaterialProperties};
use crate::structures::{structure_volume, StructureKind, StructureSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodKind {
    Print3d,
    SteelBlock,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstructionMethod {
    pub variant: MethodKind,
    /// Melted/steel volume fraction for buildings under block construction.
    pub mu_structure: f64,
    /// Melted/steel volume fraction for roads under block construction.
    pub mu_road: f64,
    /// Feedstock transport distance d for the g·d printing term (m).
    pub transport_distance: f64,
}

impl ConstructionMethod {
    pub fn print3d() -> Self {
        Self {
            variant: MethodKind::Print3d,
            mu_structure: 0.15,
            mu_road: 0.05,
            transport_distance: 0.0,
        }
    }

    pub fn steel_block() -> Self {
        Self {
            variant: MethodKind::SteelBlock,
            ..Self::print3d()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.mu_structure) || !(0.0..=1.0).contains(&self.mu_road) {
            return Err(Error::InvalidInput("mu must be in [0, 1]".into()));
        }
        if self.transport_distance < 0.0 {
            return Err(Error::InvalidInput("transport distance must be >= 0".into()));
        }
        Ok(())
    }
}

/// Specific melt energy of a material (J/kg): sensible heat to the melt
/// point plus latent heat of fusion.
fn melt_energy_per_kg(material: &MaterialProperties) -> f64 {
    material.heat_capacity * material.delta_t + material.melt_enthalpy
}

/// Energy to melt and fuse a sand volume in place, with an optional
/// feedstock transport term g·d (J).
pub fn sand_print_energy(
    sand: &MaterialProperties,
    volume: f64,
    transport_distance: f64,
    gravity: f64,
) -> Result<f64> {
    if volume < 0.0 {
        return Err(Error::InvalidInput(format!("negative volume {volume}")));
    }
    if transport_distance < 0.0 {
        return Err(Error::InvalidInput("negative transport distance".into()));
    }
    Ok(sand.density * volume * (melt_energy_per_kg(sand) + gravity * transport_distance))
}

/// Energy to print a steel-bar reinforced structure (J). A fraction
/// `steel_ratio` of the volume is melted steel, the remainder fused sand.
pub fn reinforced_print_energy(
    sand: &MaterialProperties,
    steel: &MaterialProperties,
    volume: f64,
    steel_ratio: f64,
) -> Result<f64> {
    if volume < 0.0 {
        return Err(Error::InvalidInput(format!("negative volume {volume}")));
    }
    if !(0.0..=1.0).contains(&steel_ratio) {
        return Err(Error::InvalidInput(format!(
            "steel ratio {steel_ratio} outside [0, 1]"
        )));
    }
    Ok(sand.density * (1.0 - steel_ratio) * volume * melt_energy_per_kg(sand)
        + steel_ratio * volume * steel.density * melt_energy_per_kg(steel))
}

/// Energy for steel-frame construction with sand-block infill (J). The same
/// fraction `mu` is applied to the steel frame and to the melted sand.
pub fn block_build_energy(
    sand: &MaterialProperties,
    steel: &MaterialProperties,
    volume: f64,
    mu: f64,
) -> Result<f64> {
    if volume < 0.0 {
        return Err(Error::InvalidInput(format!("negative volume {volume}")));
    }
    if !(0.0..=1.0).contains(&mu) {
        return Err(Error::InvalidInput(format!("mu {mu} outside [0, 1]")));
    }
    Ok(steel.density * volume * mu * melt_energy_per_kg(steel)
        + sand.density * volume * mu * melt_energy_per_kg(sand))
}

/// Total construction energy for all units of one catalog entry (J).
pub fn structure_construction_energy(
    spec: &StructureSpec,
    method: &ConstructionMethod,
    body: &BodyProfile,
    sand: &MaterialProperties,
    steel: &MaterialProperties,
) -> Result<f64> {
    method.validate()?;
    let volume = structure_volume(spec)?;
    let per_unit = match method.variant {
        MethodKind::Print3d => {
            let transport =
                sand.density * volume * body.gravity * method.transport_distance;
            reinforced_print_energy(sand, steel, volume, spec.steel_ratio)? + transport
        }
        MethodKind::SteelBlock => {
            let mu = if spec.kind == StructureKind::Road {
                method.mu_road
            } else {
                method.mu_structure
            };
            block_build_energy(sand, steel, volume, mu)?
        }
    };
    Ok(per_unit * f64::from(spec.quantity))
}

/// Time to deliver a construction energy budget at fixed plant power (s).
pub fn construction_time(total_energy: f64, plant_power: f64) -> Result<f64> {
    if plant_power <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "plant power must be > 0, got {plant_power}"
        )));
    }
    if total_energy < 0.0 {
        return Err(Error::InvalidInput("negative energy".into()));
    }
    Ok(total_energy / plant_power)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::default_registry;
    use crate::structures::default_catalog;

    fn rel(actual: f64, expected: f64) -> f64 {
        ((actual - expected) / expected).abs()
    }

    fn sand_steel() -> (MaterialProperties, MaterialProperties) {
        let reg = default_registry();
        (
            reg.material("sand").unwrap().clone(),
            reg.material("steel").unwrap().clone(),
        )
    }

    #[test]
    fn sand_print_per_cubic_meter() {
        let (sand, _) = sand_steel();
        let e = sand_print_energy(&sand, 1.0, 0.0, 1.62).unwrap();
        assert!(rel(e, 2_690.4e6) < 1e-4, "e = {e}");
        assert_eq!(sand_print_energy(&sand, 0.0, 0.0, 1.62).unwrap(), 0.0);
    }

    #[test]
    fn sand_print_road() {
        let (sand, _) = sand_steel();
        let e = sand_print_energy(&sand, 19_200.0, 0.0, 1.62).unwrap();
        assert!(rel(e, 5.166e13) < 1e-3, "e = {e}");
    }

    #[test]
    fn reinforced_print_examples() {
        let (sand, steel) = sand_steel();
        let e = reinforced_print_energy(&sand, &steel, 1.0, 0.1).unwrap();
        assert!(rel(e, 22_623.0e6) < 1e-4, "e = {e}");
        // S = 0 reduces to the plain sand print energy.
        let e0 = reinforced_print_energy(&sand, &steel, 1.0, 0.0).unwrap();
        assert_eq!(e0, sand_print_energy(&sand, 1.0, 0.0, 1.62).unwrap());
        let e1 = reinforced_print_energy(&sand, &steel, 1.0, 1.0).unwrap();
        assert!(rel(e1, 202_015.0e6) < 1e-5, "e = {e1}");
    }

    #[test]
    fn block_build_examples() {
        let (sand, steel) = sand_steel();
        let e = block_build_energy(&sand, &steel, 1.0, 0.15).unwrap();
        assert!(rel(e, 30_706.0e6) < 1e-4, "e = {e}");
        assert_eq!(block_build_energy(&sand, &steel, 1.0, 0.0).unwrap(), 0.0);
        let road = block_build_energy(&sand, &steel, 19_200.0, 0.05).unwrap();
        assert!(rel(road, 1.966e14) < 1e-3, "e = {road}");
    }

    #[test]
    fn invalid_inputs_rejected() {
        let (sand, steel) = sand_steel();
        assert!(sand_print_energy(&sand, -1.0, 0.0, 1.62).is_err());
        assert!(reinforced_print_energy(&sand, &steel, 1.0, 1.1).is_err());
        assert!(block_build_energy(&sand, &steel, 1.0, -0.1).is_err());
        assert!(construction_time(1.0, 0.0).is_err());
    }

    #[test]
    fn refinery_domes_print_energy() {
        let reg = default_registry();
        let (sand, steel) = sand_steel();
        let body = reg.body("moon").unwrap();
        let catalog = default_catalog();
        let refinery = catalog
            .iter()
            .find(|s| s.kind == StructureKind::RefineryDome)
            .unwrap();
        let e = structure_construction_energy(
            refinery,
            &ConstructionMethod::print3d(),
            body,
            &sand,
            &steel,
        )
        .unwrap();
        assert!(rel(e, 1.749e15) < 1e-3, "e = {e}");
    }

    #[test]
    fn power_pad_print_energy() {
        let reg = default_registry();
        let (sand, steel) = sand_steel();
        let body = reg.body("moon").unwrap();
        let catalog = default_catalog();
        let pad = catalog
            .iter()
            .find(|s| s.kind == StructureKind::PowerPad)
            .unwrap();
        let e = structure_construction_energy(
            pad,
            &ConstructionMethod::print3d(),
            body,
            &sand,
            &steel,
        )
        .unwrap();
        assert!(rel(e, 1.266e15) < 1e-3, "e = {e}");
    }

    #[test]
    fn zero_quantity_is_zero() {
        let reg = default_registry();
        let (sand, steel) = sand_steel();
        let body = reg.body("moon").unwrap();
        let spec = StructureSpec {
            quantity: 0,
            ..default_catalog()[0].clone()
        };
        let e = structure_construction_energy(
            &spec,
            &ConstructionMethod::print3d(),
            body,
            &sand,
            &steel,
        )
        .unwrap();
        assert_eq!(e, 0.0);
    }

    #[test]
    fn construction_time_examples() {
        assert_eq!(construction_time(8.64e13, 1.0e9).unwrap(), 86_400.0);
        assert_eq!(construction_time(0.0, 1.0e9).unwrap(), 0.0);
        let t1 = construction_time(1.0e12, 5.0e8).unwrap();
        let t2 = construction_time(2.0e12, 5.0e8).unwrap();
        assert_eq!(t2, 2.0 * t1);
    }

    #[test]
    fn reinforced_monotone_in_steel_ratio() {
        let (sand, steel) = sand_steel();
        let mut last = -1.0;
        for i in 0..=10 {
            let s = f64::from(i) / 10.0;
            let e = reinforced_print_energy(&sand, &steel, 1.0, s).unwrap();
            assert!(e > last);
            last = e;
        }
    }
}
