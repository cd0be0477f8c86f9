//! Report rendering: deterministic table, CSV and JSON output.
//!
//! All renderers are pure string builders over already-computed results, so
//! identical inputs produce byte-identical output. Energies are reported in
//! MJ; JSON numbers are rounded to six significant digits so the files diff
//! cleanly across platforms.

use serde_json::{json, Value};

use crate::claims::PaperClaim;
use crate::error::{Error, Result};
use crate::ledger::EnergyLedger;
use crate::registry::J_PER_MJ;
use crate::scenario::{ComparisonReport, ConstructionBudget};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Csv,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(ReportFormat::Table),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::InvalidInput(format!("unknown format: {other}"))),
        }
    }
}

/// Round to six significant digits. Keeps JSON numbers stable across
/// platforms and readable in diffs.
pub fn sig6(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.5e}").parse().unwrap()
}

/// Fixed-point with two decimals and thousands separators: 1234567.891
/// renders as "1,234,567.89".
pub fn group_thousands(x: f64) -> String {
    let formatted = format!("{:.2}", x.abs());
    let (int_part, frac_part) = formatted.split_once('.').unwrap();
    let mut grouped = String::new();
    for (i, c) in int_part.chars().enumerate() {
        if i > 0 && (int_part.len() - i) % 3 == 0 {
            grouped.push(',');
        }
        grouped.push(c);
    }
    let sign = if x < 0.0 { "-" } else { "" };
    format!("{sign}{grouped}.{frac_part}")
}

fn ledger_rows(ledger: &EnergyLedger) -> Vec<(String, f64, f64)> {
    ledger
        .items()
        .iter()
        .zip(ledger.percents())
        .map(|((name, e), (_, pct))| (name.clone(), e / J_PER_MJ, pct))
        .collect()
}

fn table(title: &str, headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    out.push_str(title);
    out.push('\n');
    let line = |cells: &[String], out: &mut String| {
        let mut parts = Vec::with_capacity(cells.len());
        for (i, cell) in cells.iter().enumerate() {
            if i == 0 {
                parts.push(format!("{cell:<width$}", width = widths[i]));
            } else {
                parts.push(format!("{cell:>width$}", width = widths[i]));
            }
        }
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&headers.iter().map(|h| (*h).to_string()).collect::<Vec<_>>(), &mut out);
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    line(&rule, &mut out);
    for row in rows {
        line(row, &mut out);
    }
    out
}

/// Render an itemized energy ledger (operations, or one construction
/// ledger) in the requested format.
pub fn render_ledger(title: &str, ledger: &EnergyLedger, format: ReportFormat) -> String {
    let rows = ledger_rows(ledger);
    let total_mj = ledger.total() / J_PER_MJ;
    match format {
        ReportFormat::Table => {
            let mut body: Vec<Vec<String>> = rows
                .iter()
                .map(|(name, mj, pct)| {
                    vec![name.clone(), group_thousands(*mj), format!("{pct:.2}")]
                })
                .collect();
            body.push(vec![
                "TOTAL".to_string(),
                group_thousands(total_mj),
                if ledger.is_empty() { "0.00".into() } else { "100.00".into() },
            ]);
            table(title, &["category", "energy_mj", "percent"], &body)
        }
        ReportFormat::Csv => {
            let mut out = String::from("category,energy_mj,percent\n");
            for (name, mj, pct) in &rows {
                out.push_str(&format!("{name},{:e},{:e}\n", sig6(*mj), sig6(*pct)));
            }
            out.push_str(&format!("TOTAL,{:e},1e2\n", sig6(total_mj)));
            out
        }
        ReportFormat::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(name, mj, pct)| {
                    json!({"category": name, "energy_mj": sig6(*mj), "percent": sig6(*pct)})
                })
                .collect();
            let doc = json!({
                "report": title,
                "items": items,
                "total_mj": sig6(total_mj),
            });
            let mut out = serde_json::to_string_pretty(&doc).expect("json render");
            out.push('\n');
            out
        }
    }
}

/// Parse a ledger back out of its CSV rendering (energies return as J).
/// The TOTAL row is validated against the item sum, closing the loop on
/// round-trip checks.
pub fn parse_ledger_csv(text: &str) -> Result<EnergyLedger> {
    let mut lines = text.lines();
    match lines.next() {
        Some("category,energy_mj,percent") => {}
        _ => return Err(Error::InvalidInput("missing ledger CSV header".into())),
    }
    let mut ledger = EnergyLedger::new();
    let mut total = None;
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::InvalidInput(format!("bad ledger CSV row: {line}")));
        }
        let mj: f64 = fields[1]
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad energy value: {}", fields[1])))?;
        if fields[0] == "TOTAL" {
            total = Some(mj * J_PER_MJ);
        } else {
            ledger.push(fields[0], mj * J_PER_MJ);
        }
    }
    if let Some(total) = total {
        let sum = ledger.total();
        let scale = total.abs().max(sum.abs()).max(1.0);
        if (total - sum).abs() > 1e-4 * scale {
            return Err(Error::InvalidInput(format!(
                "ledger CSV total {total} J does not match item sum {sum} J"
            )));
        }
    }
    Ok(ledger)
}

/// Render a construction budget: the base ledger, plus the rail line and a
/// grand total when a rail is part of the build.
pub fn render_construction(
    title: &str,
    budget: &ConstructionBudget,
    format: ReportFormat,
) -> String {
    match &budget.rail {
        None => render_ledger(title, &budget.base, format),
        Some(rail) => {
            // Fold base and rail into one ledger so every format shows the
            // same rows; the rail keeps its own labeled line.
            let mut combined = EnergyLedger::new();
            for (name, e) in budget.base.items() {
                combined.push(name.clone(), *e);
            }
            for (name, e) in rail.items() {
                combined.push(name.clone(), *e);
            }
            render_ledger(title, &combined, format)
        }
    }
}

fn ratio_cell(r: &Option<f64>) -> String {
    match r {
        Some(v) => format!("{:.4}", v),
        None => "n/a".to_string(),
    }
}

/// Render a scenario comparison (a-over-b ratios).
pub fn render_comparison(title: &str, report: &ComparisonReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Table => {
            let mut rows: Vec<Vec<String>> = report
                .operations
                .items
                .iter()
                .map(|(name, r)| vec![name.clone(), ratio_cell(r)])
                .collect();
            rows.push(vec!["operations_total".into(), ratio_cell(&report.operations.total)]);
            rows.push(vec![
                "construction_total".into(),
                ratio_cell(&report.construction_total),
            ]);
            table(title, &["category", "ratio"], &rows)
        }
        ReportFormat::Csv => {
            let mut out = String::from("category,ratio\n");
            let cell = |r: &Option<f64>| match r {
                Some(v) => format!("{:e}", sig6(*v)),
                None => "n/a".to_string(),
            };
            for (name, r) in &report.operations.items {
                out.push_str(&format!("{name},{}\n", cell(r)));
            }
            out.push_str(&format!("operations_total,{}\n", cell(&report.operations.total)));
            out.push_str(&format!("construction_total,{}\n", cell(&report.construction_total)));
            out
        }
        ReportFormat::Json => {
            let opt = |r: &Option<f64>| match r {
                Some(v) => json!(sig6(*v)),
                None => Value::Null,
            };
            let items: Vec<Value> = report
                .operations
                .items
                .iter()
                .map(|(name, r)| json!({"category": name, "ratio": opt(r)}))
                .collect();
            let doc = json!({
                "report": title,
                "operations": items,
                "operations_total": opt(&report.operations.total),
                "construction_total": opt(&report.construction_total),
            });
            let mut out = serde_json::to_string_pretty(&doc).expect("json render");
            out.push('\n');
            out
        }
    }
}

/// Render the claims ledger. Values stay in each claim's own units.
pub fn render_claims(claims: &[PaperClaim], format: ReportFormat) -> String {
    match format {
        ReportFormat::Table => {
            let rows: Vec<Vec<String>> = claims
                .iter()
                .map(|c| {
                    vec![
                        c.id.clone(),
                        format!("{:e}", sig6(c.claimed_value)),
                        format!("{:e}", sig6(c.computed_value)),
                        c.units.clone(),
                        c.status.label().to_string(),
                    ]
                })
                .collect();
            table(
                "claims",
                &["id", "claimed", "computed", "units", "status"],
                &rows,
            )
        }
        ReportFormat::Csv => {
            let mut out = String::from("id,claimed,computed,units,status\n");
            for c in claims {
                out.push_str(&format!(
                    "{},{:e},{:e},{},{}\n",
                    c.id,
                    sig6(c.claimed_value),
                    sig6(c.computed_value),
                    c.units,
                    c.status.label()
                ));
            }
            out
        }
        ReportFormat::Json => {
            let items: Vec<Value> = claims
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "description": c.description,
                        "claimed_value": sig6(c.claimed_value),
                        "computed_value": sig6(c.computed_value),
                        "units": c.units,
                        "computed_path": c.computed_path,
                        "tolerance": sig6(c.tolerance),
                        "status": c.status.label(),
                    })
                })
                .collect();
            let doc = json!({"report": "claims", "claims": items});
            let mut out = serde_json::to_string_pretty(&doc).expect("json render");
            out.push('\n');
            out
        }
    }
}

/// Render a parameter sweep: one row per value with the per-category
/// breakdown and the total.
pub fn render_sweep(
    path: &str,
    rows: &[(f64, EnergyLedger)],
    format: ReportFormat,
) -> String {
    let categories: Vec<String> = rows
        .first()
        .map(|(_, l)| l.items().iter().map(|(n, _)| n.clone()).collect())
        .unwrap_or_default();
    match format {
        ReportFormat::Table => {
            let mut headers: Vec<&str> = vec![path];
            for c in &categories {
                headers.push(c);
            }
            headers.push("total_mj");
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(value, ledger)| {
                    let mut row = vec![format!("{:e}", sig6(*value))];
                    for c in &categories {
                        row.push(group_thousands(ledger.get(c).unwrap_or(0.0) / J_PER_MJ));
                    }
                    row.push(group_thousands(ledger.total() / J_PER_MJ));
                    row
                })
                .collect();
            table("sweep", &headers, &body)
        }
        ReportFormat::Csv => {
            let mut out = String::from(path.to_string());
            for c in &categories {
                out.push(',');
                out.push_str(c);
            }
            out.push_str(",total_mj\n");
            for (value, ledger) in rows {
                out.push_str(&format!("{:e}", sig6(*value)));
                for c in &categories {
                    out.push_str(&format!(
                        ",{:e}",
                        sig6(ledger.get(c).unwrap_or(0.0) / J_PER_MJ)
                    ));
                }
                out.push_str(&format!(",{:e}\n", sig6(ledger.total() / J_PER_MJ)));
            }
            out
        }
        ReportFormat::Json => {
            let body: Vec<Value> = rows
                .iter()
                .map(|(value, ledger)| {
                    let items: Vec<Value> = ledger
                        .items()
                        .iter()
                        .map(|(n, e)| json!({"category": n, "energy_mj": sig6(e / J_PER_MJ)}))
                        .collect();
                    json!({
                        "value": sig6(*value),
                        "items": items,
                        "total_mj": sig6(ledger.total() / J_PER_MJ),
                    })
                })
                .collect();
            let doc = json!({"report": "sweep", "parameter": path, "rows": body});
            let mut out = serde_json::to_string_pretty(&doc).expect("json render");
            out.push('\n');
            out
        }
    }
}
