//! Deterministic energy-budget engine for off-world mining-base trade
//! studies.
//!
//! The crate models the full energy chain of a robotic mining and export
//! base on the Moon or Mars: structure construction (in-situ 3D printing
//! versus steel-frame block building), water and metal resource chains,
//! refining, mass-driver launch, crew life support and solar plant sizing.
//! Everything is computed in SI units (J, kg, m, s, K) from a single
//! constants registry, and every evaluation is deterministic: the same
//! configuration produces byte-identical reports.

pub mod claims;
pub mod config;
pub mod construction;
pub mod error;
pub mod isru;
pub mod launch;
pub mod ledger;
pub mod life_support;
pub mod power;
pub mod registry;
pub mod report;
pub mod scenario;
pub mod structures;

pub use error::{Error, Result};
pub use ledger::EnergyLedger;
pub use scenario::{Engine, ScenarioConfig};
