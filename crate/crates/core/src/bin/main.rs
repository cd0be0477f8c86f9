//! Command-line front end: evaluate scenarios, compare them, sweep
//! parameters and print the claims ledger.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use offworld_energy::claims::{default_fixtures, verify_paper_claims, ClaimStatus};
use offworld_energy::config::{load_config, LoadedConfig};
use offworld_energy::construction::ConstructionMethod;
use offworld_energy::error::{Error, Result};
use offworld_energy::report::{
    render_claims, render_comparison, render_construction, render_ledger, render_sweep,
    ReportFormat,
};
use offworld_energy::scenario::{CrewMode, Engine, ScenarioConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CrewArg {
    Robotic,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Print3d,
    Conventional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportArg {
    Construction,
    Operations,
    Compare,
    Claims,
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => ReportFormat::Table,
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Json => ReportFormat::Json,
        }
    }
}

/// Energy-budget reports for off-world mining bases.
#[derive(Debug, Parser)]
#[command(name = "offworld-energy", version, about)]
struct Cli {
    /// JSON configuration file with partial overrides and named scenarios.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Named scenario from the config file.
    #[arg(long)]
    scenario: Option<String>,

    /// Body to evaluate when no named scenario is given.
    #[arg(long, default_value = "moon")]
    body: String,

    /// Crew mode override.
    #[arg(long)]
    crew: Option<CrewArg>,

    /// Construction method override.
    #[arg(long)]
    method: Option<MethodArg>,

    /// Report to produce.
    #[arg(long, value_enum, default_value_t = ReportArg::Operations)]
    report: ReportArg,

    /// Second scenario (config name or body name) for --report compare.
    #[arg(long)]
    compare_with: Option<String>,

    /// Sweep specification PATH=START:STOP:STEPS for --report sweep.
    #[arg(long)]
    sweep: Option<String>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,

    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// PATH=START:STOP:STEPS -> (path, inclusive linspace).
fn parse_sweep(spec: &str) -> Result<(String, Vec<f64>)> {
    let bad = || Error::InvalidInput(format!("bad sweep spec (want PATH=START:STOP:STEPS): {spec}"));
    let (path, range) = spec.split_once('=').ok_or_else(bad)?;
    let parts: Vec<&str> = range.split(':').collect();
    if parts.len() != 3 || path.is_empty() {
        return Err(bad());
    }
    let start: f64 = parts[0].parse().map_err(|_| bad())?;
    let stop: f64 = parts[1].parse().map_err(|_| bad())?;
    let steps: usize = parts[2].parse().map_err(|_| bad())?;
    if steps == 0 {
        return Err(bad());
    }
    let values = if steps == 1 {
        vec![start]
    } else {
        (0..steps)
            .map(|i| start + (stop - start) * (i as f64) / ((steps - 1) as f64))
            .collect()
    };
    Ok((path.to_string(), values))
}

/// Resolve a scenario by config name first, then as a bare body name.
fn resolve_scenario(loaded: &LoadedConfig, name: &str) -> Result<ScenarioConfig> {
    if let Ok(s) = loaded.scenario(name) {
        return Ok(s.clone());
    }
    if loaded.engine.registry.body(name).is_ok() {
        return Ok(ScenarioConfig::default_for_body(name));
    }
    Err(Error::UnknownScenario(name.to_string()))
}

fn apply_overrides(cli: &Cli, config: &mut ScenarioConfig) {
    if let Some(crew) = cli.crew {
        config.crew = match crew {
            CrewArg::Robotic => CrewMode::Robotic,
            CrewArg::Human => CrewMode::Human,
        };
    }
    if let Some(method) = cli.method {
        config.method = match method {
            MethodArg::Print3d => ConstructionMethod::print3d(),
            MethodArg::Conventional => ConstructionMethod::steel_block(),
        };
    }
}

fn run(cli: &Cli) -> Result<String> {
    let loaded = match &cli.config {
        Some(path) => load_config(path)?,
        None => LoadedConfig {
            engine: Engine::default(),
            scenarios: Vec::new(),
        },
    };
    let engine = &loaded.engine;

    let mut config = match &cli.scenario {
        Some(name) => loaded.scenario(name)?.clone(),
        None => {
            engine.registry.body(&cli.body)?;
            ScenarioConfig::default_for_body(&cli.body)
        }
    };
    apply_overrides(cli, &mut config);
    let format: ReportFormat = cli.format.into();

    match cli.report {
        ReportArg::Operations => {
            let ledger = engine.evaluate_operations(&config)?;
            Ok(render_ledger(
                &format!("operations: {}", config.name),
                &ledger,
                format,
            ))
        }
        ReportArg::Construction => {
            let budget = engine.evaluate_construction(&config)?;
            Ok(render_construction(
                &format!("construction: {}", config.name),
                &budget,
                format,
            ))
        }
        ReportArg::Compare => {
            let other_name = cli.compare_with.as_deref().ok_or_else(|| {
                Error::InvalidInput("--report compare requires --compare-with".into())
            })?;
            let other = resolve_scenario(&loaded, other_name)?;
            let report = engine.compare_scenarios(&config, &other)?;
            Ok(render_comparison(
                &format!("compare: {} / {}", config.name, other.name),
                &report,
                format,
            ))
        }
        ReportArg::Claims => {
            let claims = verify_paper_claims(engine, &default_fixtures())?;
            let discrepant = claims
                .iter()
                .filter(|c| c.status == ClaimStatus::Discrepant)
                .count();
            let mut out = render_claims(&claims, format);
            if format == ReportFormat::Table {
                out.push_str(&format!(
                    "{} claims: {} match, {} discrepant\n",
                    claims.len(),
                    claims.len() - discrepant,
                    discrepant
                ));
            }
            Ok(out)
        }
        ReportArg::Sweep => {
            let spec = cli.sweep.as_deref().ok_or_else(|| {
                Error::InvalidInput("--report sweep requires --sweep PATH=START:STOP:STEPS".into())
            })?;
            let (path, values) = parse_sweep(spec)?;
            let rows = engine.parameter_sweep(&config, &path, &values)?;
            Ok(render_sweep(&path, &rows, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: {e}");
                    return ExitCode::from(3);
                }
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(1))
        }
    }
}
