//! Itemized, exactly additive energy budgets.

use serde::{Deserialize, Serialize};

/// An ordered list of (category, joules) items. The total is always the
/// exact floating-point sum of the items in order; there are no hidden
/// terms, so reports and cross-checks can rely on additivity.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct EnergyLedger {
    items: Vec<(String, f64)>,
}

impl EnergyLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, category: impl Into<String>, energy_j: f64) {
        self.items.push((category.into(), energy_j));
    }

    pub fn items(&self) -> &[(String, f64)] {
        &self.items
    }

    pub fn get(&self, category: &str) -> Option<f64> {
        self.items
            .iter()
            .find(|(name, _)| name == category)
            .map(|(_, e)| *e)
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Exact sum of all items (J).
    pub fn total(&self) -> f64 {
        self.items.iter().map(|(_, e)| e).sum()
    }

    /// Items as percentages of the total. An all-zero ledger yields zero
    /// percentages rather than NaN.
    pub fn percents(&self) -> Vec<(String, f64)> {
        let total = self.total();
        self.items
            .iter()
            .map(|(name, e)| {
                let pct = if total == 0.0 { 0.0 } else { e / total * 100.0 };
                (name.clone(), pct)
            })
            .collect()
    }
}
