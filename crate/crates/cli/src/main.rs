use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use telequec::mc_sim::{analytic_mean_yield, simulate_link, LinkSimConfig};
use telequec::oracle::equivalence::check_equivalence;
use telequec::protocol::{run_burst, write_trajectory_csv, BurstSchedule, PipelinedForward};
use telequec::qec::{CodeCatalog, CodeSpec};
use telequec::scheduler::{conjecture_probe, exhaustive_search, ProbeCell};
use telequec::table::{burst_series, code_curves, fmt_f64, write_burst_csv, write_code_csv};
use telequec::state::werner;

const DEFAULT_RHO0_GRID: &[f64] = &[
    0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1, 0.2, 0.3, 0.4,
];

/// Purification, swapping and asymmetric error correction over teleportation links.
///
/// Tables are written as CSV with a header row; floating-point columns carry
/// 17 significant digits. Set TELEQUEC_THREADS to cap the worker pool.
#[derive(Debug, Parser)]
#[command(name = "telequec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Repeated purification of a Werner pair: A, B, C, D, rho and A_eq per step.
    Evolve(EvolveArgs),
    /// Logical error of each code against the initial error rho0.
    Codes(CodesArgs),
    /// Error and asymmetry against swap level for Burst schedules.
    Burst(BurstArgs),
    /// Exhaustive search over purify/swap interleavings.
    ScheduleSearch(ScheduleArgs),
    /// Monte Carlo of pair detection and purification yield on one link.
    Simulate(SimulateArgs),
    /// Compare the recursions and closed forms with the brute-force references.
    OracleCheck(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct EvolveArgs {
    /// Initial Werner fidelity.
    #[arg(long, default_value_t = 0.8)]
    f0: f64,
    /// Number of purification rounds.
    #[arg(long, default_value_t = 9)]
    steps: u32,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct CatalogArgs {
    /// Code label, repeatable. Defaults to every code in the catalog.
    #[arg(long = "code")]
    codes: Vec<String>,
    /// Catalog file with one `label,n,k,e_g,e_z` entry per line.
    #[arg(long)]
    catalog: Option<PathBuf>,
}

impl CatalogArgs {
    fn selected(&self) -> Result<Vec<CodeSpec>, Failure> {
        let catalog = match &self.catalog {
            Some(path) => CodeCatalog::load(path)?,
            None => CodeCatalog::builtin(),
        };
        if self.codes.is_empty() {
            return Ok(catalog.entries().to_vec());
        }
        self.codes
            .iter()
            .map(|label| Ok(catalog.get(label)?.clone()))
            .collect()
    }
}

#[derive(Debug, Args)]
struct CodesArgs {
    /// Initial errors rho0, comma separated. Defaults to 0.01..0.1 and 0.2, 0.3, 0.4.
    #[arg(long, value_delimiter = ',', conflicts_with = "f0")]
    rho0_grid: Vec<f64>,
    /// Initial fidelities instead of rho0 (rho0 = 1 - f0).
    #[arg(long, value_delimiter = ',')]
    f0: Vec<f64>,
    /// Purification rounds before swapping.
    #[arg(long, default_value_t = 1)]
    burst: u32,
    /// Swap levels.
    #[arg(long, default_value_t = 0)]
    swaps: u32,
    #[command(flatten)]
    catalog: CatalogArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct BurstArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [0.9, 0.95, 0.99])]
    f0: Vec<f64>,
    /// Burst sizes b.
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
    burst: Vec<u32>,
    /// Highest swap level.
    #[arg(long, default_value_t = 9)]
    swaps: u32,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct ScheduleArgs {
    /// Initial fidelity; with --probe, a comma-separated list.
    #[arg(long, value_delimiter = ',', default_values_t = [0.9])]
    f0: Vec<f64>,
    /// Purification budget (maximum with --probe).
    #[arg(long, default_value_t = 2)]
    burst: u32,
    /// Swap levels (maximum with --probe).
    #[arg(long, default_value_t = 2)]
    swaps: u32,
    /// Search every (f0, b, s) cell up to the given budgets and list cells
    /// where some interleaving beats the Burst plan.
    #[arg(long)]
    probe: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    /// Pairs sent per attempt.
    #[arg(long, default_value_t = 1000)]
    m: u64,
    /// Detection probability per pair.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Purification rounds.
    #[arg(long, default_value_t = 2)]
    burst: u32,
    /// Initial Werner fidelity.
    #[arg(long, default_value_t = 0.8)]
    f0: f64,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Random Bell-diagonal states to push through the circuits.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Random Pauli channels per catalog code.
    #[arg(long, default_value_t = 50)]
    channels: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[command(flatten)]
    catalog: CatalogArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug)]
enum Failure {
    Validation(String),
    Numerical(String),
    Io(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 2,
            Failure::Numerical(_) => 3,
            Failure::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Validation(m) | Failure::Numerical(m) | Failure::Io(m) => f.write_str(m),
        }
    }
}

impl From<telequec::Error> for Failure {
    fn from(e: telequec::Error) -> Self {
        use telequec::Error as E;
        match e {
            E::Domain { .. } | E::Invalid { .. } | E::TooLarge { .. } | E::UnknownCode(_) => {
                Failure::Validation(e.to_string())
            }
            E::Degenerate(_) | E::Numerical(_) => Failure::Numerical(e.to_string()),
            E::Csv(_) | E::Io(_) => Failure::Io(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn open_output(output: &Output) -> Result<Box<dyn Write>, Failure> {
    Ok(match &output.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            Failure::Io(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: serde::Serialize>(output: &Output, value: &T) -> Result<(), Failure> {
    let mut w = open_output(output)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn evolve(args: &EvolveArgs) -> Result<(), Failure> {
    let schedule = BurstSchedule::new(args.steps, 0, werner(args.f0)?);
    let points = run_burst(&schedule)?;
    match args.output.format {
        Format::Csv => {
            let mut w = open_output(&args.output)?;
            write_trajectory_csv(&mut w, &points, &PipelinedForward)?;
            w.flush()?;
        }
        Format::Json => write_json(&args.output, &points)?,
    }
    Ok(())
}

fn codes(args: &CodesArgs) -> Result<(), Failure> {
    let grid: Vec<f64> = if !args.f0.is_empty() {
        args.f0.iter().map(|f| 1.0 - f).collect()
    } else if !args.rho0_grid.is_empty() {
        args.rho0_grid.clone()
    } else {
        DEFAULT_RHO0_GRID.to_vec()
    };
    let selected = args.catalog.selected()?;
    let rows = code_curves(&grid, args.burst, args.swaps, &selected)?;
    match args.output.format {
        Format::Csv => {
            let mut w = open_output(&args.output)?;
            write_code_csv(&mut w, &rows)?;
            w.flush()?;
        }
        Format::Json => write_json(&args.output, &rows)?,
    }
    Ok(())
}

fn burst(args: &BurstArgs) -> Result<(), Failure> {
    let rows = burst_series(&args.f0, &args.burst, args.swaps)?;
    match args.output.format {
        Format::Csv => {
            let mut w = open_output(&args.output)?;
            write_burst_csv(&mut w, &rows)?;
            w.flush()?;
        }
        Format::Json => write_json(&args.output, &rows)?,
    }
    Ok(())
}

fn write_cells_csv(output: &Output, cells: &[ProbeCell]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(open_output(output)?);
    w.write_record([
        "f0",
        "b",
        "s",
        "best_plan",
        "best_rho",
        "burst_plan",
        "burst_rho",
        "burst_optimal",
        "plans_evaluated",
        "best_expected_raw_pairs",
        "burst_expected_raw_pairs",
    ])?;
    for c in cells {
        let r = &c.report;
        w.write_record([
            fmt_f64(c.f0),
            r.purifications.to_string(),
            r.swaps.to_string(),
            r.best_plan.to_string(),
            fmt_f64(r.best_final_error),
            r.burst_plan.to_string(),
            fmt_f64(r.burst_plan_error),
            r.burst_is_optimal.to_string(),
            r.all_plans_evaluated.to_string(),
            fmt_f64(r.best_expected_raw_pairs),
            fmt_f64(r.burst_expected_raw_pairs),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn schedule_search(args: &ScheduleArgs) -> Result<(), Failure> {
    if args.probe {
        let probe = conjecture_probe(&args.f0, args.burst, args.swaps)?;
        return match args.output.format {
            Format::Json => write_json(
                &args.output,
                &json!({
                    "burst_always_optimal": probe.burst_always_optimal(),
                    "cells": probe.cells,
                    "counterexamples": probe.counterexamples,
                }),
            ),
            Format::Csv => write_cells_csv(&args.output, &probe.cells),
        };
    }
    let [f0] = args.f0[..] else {
        return Err(Failure::Validation(
            "schedule-search takes a single --f0 unless --probe is given".into(),
        ));
    };
    let report = exhaustive_search(args.burst, args.swaps, &werner(f0)?)?;
    match args.output.format {
        Format::Json => write_json(&args.output, &ProbeCell { f0, report }),
        Format::Csv => write_cells_csv(&args.output, &[ProbeCell { f0, report }]),
    }
}

fn simulate(args: &SimulateArgs) -> Result<(), Failure> {
    let config = LinkSimConfig {
        m: args.m,
        p: args.p,
        b: args.burst,
        initial_state: werner(args.f0)?,
        trials: args.trials,
        seed: args.seed,
    };
    let result = simulate_link(&config)?;
    let analytic = analytic_mean_yield(&config)?;
    match args.output.format {
        Format::Json => write_json(
            &args.output,
            &json!({ "config": config, "result": result, "analytic_mean_yield": analytic }),
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(open_output(&args.output)?);
            w.write_record([
                "round",
                "mean_yield",
                "yield_variance",
                "analytic_mean_yield",
                "pairs_formed",
                "empirical_success",
                "analytic_success",
                "z_score",
            ])?;
            for round in 0..result.mean_yield.len() {
                let mut record = vec![
                    round.to_string(),
                    fmt_f64(result.mean_yield[round]),
                    fmt_f64(result.yield_variance[round]),
                    fmt_f64(analytic[round]),
                ];
                if round == 0 {
                    record.extend(std::iter::repeat_n(String::new(), 4));
                } else {
                    record.extend([
                        result.pairs_formed[round - 1].to_string(),
                        fmt_f64(result.empirical_success[round - 1]),
                        fmt_f64(result.analytic_success[round - 1]),
                        fmt_f64(result.success_z_score(round)),
                    ]);
                }
                w.write_record(&record)?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

fn oracle_check(args: &OracleArgs) -> Result<(), Failure> {
    let catalog = CodeCatalog::new(args.catalog.selected()?)?;
    let report = check_equivalence(args.trials, args.channels, args.seed, &catalog)?;
    match args.output.format {
        Format::Json => write_json(
            &args.output,
            &json!({ "passed": report.passed(), "report": report }),
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(open_output(&args.output)?);
            w.write_record(["check", "cases", "max_deviation", "tolerance", "result"])?;
            for c in &report.checks {
                w.write_record([
                    c.name.to_string(),
                    c.cases.to_string(),
                    fmt_f64(c.max_deviation),
                    fmt_f64(c.tolerance),
                    (if c.passed() { "pass" } else { "fail" }).to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Numerical("oracle equivalence check failed".into()))
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("TELEQUEC_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            Failure::Validation(format!("TELEQUEC_THREADS must be a positive integer, got `{value}`"))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Io(e.to_string()))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    configure_threads()?;
    match &cli.command {
        Command::Evolve(a) => evolve(a),
        Command::Codes(a) => codes(a),
        Command::Burst(a) => burst(a),
        Command::ScheduleSearch(a) => schedule_search(a),
        Command::Simulate(a) => simulate(a),
        Command::OracleCheck(a) => oracle_check(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("telequec: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
