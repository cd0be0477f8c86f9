//! Structure catalog and per-structure construction volumes.
//!
//! The default catalog reproduces the base inventory exactly: fifteen
//! structure rows, each with its own volume formula. Volumes are per unit;
//! callers multiply by quantity.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    Road,
    RefineryDome,
    ServiceDome,
    ControlTower,
    WarehouseDome,
    FuelStorage,
    LandingPadSmall,
    LandingPadLarge,
    PowerPad,
    MassDriver,
    SuperconductiveRail,
    O2Extract,
    HumanServicesDome,
    HabitatDome,
    ServiceTubes,
}

impl StructureKind {
    pub const ALL: [StructureKind; 15] = [
        StructureKind::Road,
        StructureKind::RefineryDome,
        StructureKind::ServiceDome,
        StructureKind::ControlTower,
        StructureKind::WarehouseDome,
        StructureKind::FuelStorage,
        StructureKind::LandingPadSmall,
        StructureKind::LandingPadLarge,
        StructureKind::PowerPad,
        StructureKind::MassDriver,
        StructureKind::SuperconductiveRail,
        StructureKind::O2Extract,
        StructureKind::HumanServicesDome,
        StructureKind::HabitatDome,
        StructureKind::ServiceTubes,
    ];

    /// Structures only built when the base hosts a human crew.
    pub fn human_only(self) -> bool {
        matches!(
            self,
            StructureKind::O2Extract
                | StructureKind::HumanServicesDome
                | StructureKind::HabitatDome
                | StructureKind::ServiceTubes
        )
    }

    pub fn label(self) -> &'static str {
        match self {
            StructureKind::Road => "road",
            StructureKind::RefineryDome => "refinery_dome",
            StructureKind::ServiceDome => "service_dome",
            StructureKind::ControlTower => "control_tower",
            StructureKind::WarehouseDome => "warehouse_dome",
            StructureKind::FuelStorage => "fuel_storage",
            StructureKind::LandingPadSmall => "landing_pad_small",
            StructureKind::LandingPadLarge => "landing_pad_large",
            StructureKind::PowerPad => "power_pad",
            StructureKind::MassDriver => "mass_driver",
            StructureKind::SuperconductiveRail => "superconductive_rail",
            StructureKind::O2Extract => "o2_extract",
            StructureKind::HumanServicesDome => "human_services_dome",
            StructureKind::HabitatDome => "habitat_dome",
            StructureKind::ServiceTubes => "service_tubes",
        }
    }
}

/// Dimensional parameters of one structure, grouped by the shape its
/// volume formula assumes. All lengths in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Dims {
    /// Rectangular slab: V = L·W·D (roads, power pad).
    Slab { length: f64, width: f64, depth: f64 },
    /// Hemispherical dome shell on a circular base slab:
    /// V = (2/3)π(Ro³ − Ri³) + π·D·Ro².
    DomeShell {
        outer_radius: f64,
        inner_radius: f64,
        base_depth: f64,
    },
    /// Tapered tower, evaluated verbatim as
    /// V = H·L2² + H·(L1 − L2)·L2 (not a standard frustum).
    TaperedTower {
        height: f64,
        base_length: f64,
        top_length: f64,
    },
    /// Circular pad with a perimeter wall:
    /// V = 2π·r²·D + 2π·r·h·D.
    WalledTank {
        radius: f64,
        wall_thickness: f64,
        wall_height: f64,
    },
    /// Rectangular pad with blast walls on three sides:
    /// V = L·W·D + 2·L·H·D + W·H·D.
    WalledPad {
        length: f64,
        width: f64,
        depth: f64,
        wall_height: f64,
    },
    /// Elevated tube pair on posts, with an optional magnet track strip:
    /// V = 2π·L·((R+T)² − R²) + Dmag·W·L + (L/ε)·2·H·W².
    /// The 2π cylinder factor is the catalog's encoding of the tube pair.
    /// Slope has no effect on volume and is carried for documentation.
    ElevatedTube {
        length: f64,
        bore_radius: f64,
        wall_thickness: f64,
        post_height: f64,
        post_width: f64,
        post_spacing: f64,
        magnet_depth: f64,
        slope_deg: f64,
    },
    /// Hollow tube: V = π(Ro² − Ri²)·L.
    TubeShell {
        length: f64,
        outer_radius: f64,
        inner_radius: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureSpec {
    pub kind: StructureKind,
    pub quantity: u32,
    pub dims: Dims,
    /// Volumetric fraction of the printed structure occupied by steel.
    pub steel_ratio: f64,
}

impl StructureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.steel_ratio) {
            return Err(Error::InvalidSpec(format!(
                "{}: steel ratio {} outside [0, 1]",
                self.kind.label(),
                self.steel_ratio
            )));
        }
        let dims = match self.dims {
            Dims::Slab {
                length,
                width,
                depth,
            } => vec![length, width, depth],
            Dims::DomeShell {
                outer_radius,
                inner_radius,
                base_depth,
            } => {
                if inner_radius > outer_radius {
                    return Err(Error::InvalidSpec(format!(
                        "{}: inner radius {} exceeds outer radius {}",
                        self.kind.label(),
                        inner_radius,
                        outer_radius
                    )));
                }
                vec![outer_radius, inner_radius, base_depth]
            }
            Dims::TaperedTower {
                height,
                base_length,
                top_length,
            } => vec![height, base_length, top_length],
            Dims::WalledTank {
                radius,
                wall_thickness,
                wall_height,
            } => vec![radius, wall_thickness, wall_height],
            Dims::WalledPad {
                length,
                width,
                depth,
                wall_height,
            } => vec![length, width, depth, wall_height],
            Dims::ElevatedTube {
                length,
                bore_radius,
                wall_thickness,
                post_height,
                post_width,
                post_spacing,
                magnet_depth,
                ..
            } => {
                if post_spacing <= 0.0 {
                    return Err(Error::InvalidSpec(format!(
                        "{}: post spacing must be > 0",
                        self.kind.label()
                    )));
                }
                vec![
                    length,
                    bore_radius,
                    wall_thickness,
                    post_height,
                    post_width,
                    magnet_depth,
                ]
            }
            Dims::TubeShell {
                length,
                outer_radius,
                inner_radius,
            } => {
                if inner_radius > outer_radius {
                    return Err(Error::InvalidSpec(format!(
                        "{}: inner radius {} exceeds outer radius {}",
                        self.kind.label(),
                        inner_radius,
                        outer_radius
                    )));
                }
                vec![length, outer_radius, inner_radius]
            }
        };
        if dims.iter().any(|d| !d.is_finite() || *d < 0.0) {
            return Err(Error::InvalidSpec(format!(
                "{}: dimensions must be finite and >= 0",
                self.kind.label()
            )));
        }
        Ok(())
    }
}

/// Construction volume of one unit of the structure (m³).
pub fn structure_volume(spec: &StructureSpec) -> Result<f64> {
    spec.validate()?;
    let volume = match spec.dims {
        Dims::Slab {
            length,
            width,
            depth,
        } => length * width * depth,
        Dims::DomeShell {
            outer_radius,
            inner_radius,
            base_depth,
        } => {
            (2.0 / 3.0) * PI * (outer_radius.powi(3) - inner_radius.powi(3))
                + PI * base_depth * outer_radius.powi(2)
        }
        Dims::TaperedTower {
            height,
            base_length,
            top_length,
        } => height * top_length.powi(2) + height * (base_length - top_length) * top_length,
        Dims::WalledTank {
            radius,
            wall_thickness,
            wall_height,
        } => {
            2.0 * PI * radius.powi(2) * wall_thickness
                + 2.0 * PI * radius * wall_height * wall_thickness
        }
        Dims::WalledPad {
            length,
            width,
            depth,
            wall_height,
        } => length * width * depth + 2.0 * length * wall_height * depth + width * wall_height * depth,
        Dims::ElevatedTube {
            length,
            bore_radius,
            wall_thickness,
            post_height,
            post_width,
            post_spacing,
            magnet_depth,
            ..
        } => {
            // Post count L/ε is kept as a real number per the closed form.
            2.0 * PI * length * ((bore_radius + wall_thickness).powi(2) - bore_radius.powi(2))
                + magnet_depth * post_width * length
                + (length / post_spacing) * 2.0 * post_height * post_width.powi(2)
        }
        Dims::TubeShell {
            length,
            outer_radius,
            inner_radius,
        } => PI * (outer_radius.powi(2) - inner_radius.powi(2)) * length,
    };
    Ok(volume)
}

fn dome(kind: StructureKind, quantity: u32, outer: f64, inner: f64, base: f64, steel: f64) -> StructureSpec {
    StructureSpec {
        kind,
        quantity,
        dims: Dims::DomeShell {
            outer_radius: outer,
            inner_radius: inner,
            base_depth: base,
        },
        steel_ratio: steel,
    }
}

/// The default structure inventory for the mining base.
pub fn default_catalog() -> Vec<StructureSpec> {
    vec![
        StructureSpec {
            kind: StructureKind::Road,
            quantity: 1,
            dims: Dims::Slab {
                length: 12_000.0,
                width: 8.0,
                depth: 0.2,
            },
            steel_ratio: 0.05,
        },
        dome(StructureKind::RefineryDome, 9, 50.0, 49.6, 0.3, 0.1),
        dome(StructureKind::ServiceDome, 6, 25.0, 24.6, 0.3, 0.1),
        StructureSpec {
            kind: StructureKind::ControlTower,
            quantity: 1,
            dims: Dims::TaperedTower {
                height: 150.0,
                base_length: 25.0,
                top_length: 5.0,
            },
            steel_ratio: 0.1,
        },
        dome(StructureKind::WarehouseDome, 21, 25.0, 24.8, 0.3, 0.1),
        StructureSpec {
            kind: StructureKind::FuelStorage,
            quantity: 6,
            dims: Dims::WalledTank {
                radius: 25.0,
                wall_thickness: 0.1,
                wall_height: 2.0,
            },
            steel_ratio: 0.05,
        },
        StructureSpec {
            kind: StructureKind::LandingPadSmall,
            quantity: 3,
            dims: Dims::WalledPad {
                length: 100.0,
                width: 50.0,
                depth: 0.2,
                wall_height: 0.5,
            },
            steel_ratio: 0.05,
        },
        StructureSpec {
            kind: StructureKind::LandingPadLarge,
            quantity: 3,
            dims: Dims::WalledPad {
                length: 100.0,
                width: 100.0,
                depth: 0.2,
                wall_height: 0.5,
            },
            steel_ratio: 0.05,
        },
        StructureSpec {
            kind: StructureKind::PowerPad,
            quantity: 1,
            dims: Dims::Slab {
                length: 1_000.0,
                width: 1_000.0,
                depth: 0.1,
            },
            steel_ratio: 0.05,
        },
        StructureSpec {
            kind: StructureKind::MassDriver,
            quantity: 1,
            dims: Dims::ElevatedTube {
                length: 10_000.0,
                bore_radius: 3.0,
                wall_thickness: 0.5,
                post_height: 5.0,
                post_width: 1.0,
                post_spacing: 20.0,
                magnet_depth: 0.0,
                slope_deg: 5.0,
            },
            steel_ratio: 0.05,
        },
        StructureSpec {
            kind: StructureKind::SuperconductiveRail,
            quantity: 1,
            dims: Dims::ElevatedTube {
                length: 1.0e6,
                bore_radius: 3.0,
                wall_thickness: 0.5,
                post_height: 5.0,
                post_width: 1.0,
                post_spacing: 20.0,
                magnet_depth: 0.1,
                slope_deg: 0.0,
            },
            steel_ratio: 0.05,
        },
        StructureSpec {
            kind: StructureKind::O2Extract,
            quantity: 18,
            dims: Dims::WalledTank {
                radius: 50.0,
                wall_thickness: 0.2,
                wall_height: 3.0,
            },
            steel_ratio: 0.2,
        },
        dome(StructureKind::HumanServicesDome, 6, 50.0, 49.6, 0.3, 0.1),
        dome(StructureKind::HabitatDome, 300, 6.0, 5.9, 0.1, 0.2),
        StructureSpec {
            kind: StructureKind::ServiceTubes,
            quantity: 1,
            dims: Dims::TubeShell {
                length: 10_000.0,
                outer_radius: 1.1,
                inner_radius: 1.0,
            },
            steel_ratio: 0.1,
        },
    ]
}
