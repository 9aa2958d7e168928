//! Command-line front end: configuration ingestion, experiment sweeps, CSV
//! emission and self-tests.
//!
//! Configuration comes from a flat `key=value` file (`#` starts a comment)
//! and/or flags; flags override the file. SNR is accepted in dB and converted
//! internally with noise power normalized to 1.

use crate::analytic::{outage_theorem1, AnalyticContext, AnalyticError};
use crate::bessel::{bessel_k, BESSEL_K_FIXTURES};
use crate::channel::NetworkConfig;
use crate::game::{optimal_partition, GameError};
use crate::sim::{sweep, Partition, SweepOptions, SweepPoint, SweepRow};
use clap::{Args, Parser, Subcommand};
use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use thiserror::Error;

/// Exit code for configuration errors.
pub const EXIT_CONFIG: i32 = 2;
/// Exit code for downstream numerical errors.
pub const EXIT_NUMERICAL: i32 = 3;

pub const CSV_HEADER: &str =
    "snr_db,coalition_size,outage_sim,outage_sim_stderr,outage_thm1,outage_asym,validity_flag";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Numerical(_) | CliError::Io(_) => EXIT_NUMERICAL,
        }
    }
}

impl From<AnalyticError> for CliError {
    fn from(e: AnalyticError) -> Self {
        CliError::Numerical(e.to_string())
    }
}

impl From<GameError> for CliError {
    fn from(e: GameError) -> Self {
        CliError::Config(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ehrelay",
    about = "Outage and coalition-formation workbench for a wireless-powered relay network",
    version
)]
pub struct CliArgs {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monte-Carlo outage estimates over an SNR grid.
    Simulate(RunFlags),
    /// Closed-form high-SNR outage approximation.
    Analytic(RunFlags),
    /// Asymptotic outage law.
    Asymptotic(RunFlags),
    /// Simulation, closed form and asymptotics side by side.
    Compare(RunFlags),
    /// Coalition-game report: partition optimum, superadditivity, core.
    Game(RunFlags),
    /// Compare the Bessel kernel against its precomputed fixtures.
    #[command(hide = true, name = "bessel-selftest")]
    BesselSelftest,
}

#[derive(Debug, Clone, Default, Args)]
pub struct RunFlags {
    /// Flat key=value config file; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Disc radius D.
    #[arg(long)]
    pub disc_radius: Option<f64>,
    /// Path loss exponent (closed forms require 2).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Target rate R in bits per channel use.
    #[arg(long)]
    pub rate: Option<f64>,
    /// Energy harvesting efficiency in (0, 1].
    #[arg(long)]
    pub eta: Option<f64>,
    /// Number of user pairs (game mode).
    #[arg(long)]
    pub pairs: Option<usize>,
    /// Comma-separated, strictly increasing SNR grid in dB.
    #[arg(long, value_delimiter = ',')]
    pub snr_db: Option<Vec<f64>>,
    /// Comma-separated coalition sizes.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    /// Monte-Carlo trials per grid cell.
    #[arg(long)]
    pub trials: Option<u64>,
    /// Base random seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output path (stdout when omitted).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Emit a run-metadata record on stderr.
    #[arg(long)]
    pub manifest: bool,
}

/// Experiment mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Simulate,
    Analytic,
    Asymptotic,
    Compare,
    Game,
}

impl Mode {
    fn name(&self) -> &'static str {
        match self {
            Mode::Simulate => "simulate",
            Mode::Analytic => "analytic",
            Mode::Asymptotic => "asymptotic",
            Mode::Compare => "compare",
            Mode::Game => "game",
        }
    }
    fn needs_simulation(&self) -> bool {
        matches!(self, Mode::Simulate | Mode::Compare)
    }
    fn needs_closed_forms(&self) -> bool {
        !matches!(self, Mode::Simulate)
    }
}

/// Fully validated experiment description.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub mode: Mode,
    pub disc_radius: f64,
    pub alpha: f64,
    pub rate: f64,
    pub eta: f64,
    pub num_pairs: usize,
    pub snr_db: Vec<f64>,
    pub sizes: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub manifest: bool,
}

fn parse_key<T: std::str::FromStr>(map: &HashMap<String, String>, key: &str) -> Result<Option<T>, CliError> {
    match map.get(key) {
        None => Ok(None),
        Some(raw) => raw
            .parse()
            .map(Some)
            .map_err(|_| CliError::Config(format!("invalid value for key `{key}`: `{raw}`"))),
    }
}

fn parse_list<T: std::str::FromStr>(map: &HashMap<String, String>, key: &str) -> Result<Option<Vec<T>>, CliError> {
    match map.get(key) {
        None => Ok(None),
        Some(raw) => raw
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
            .map_err(|_| CliError::Config(format!("invalid value for key `{key}`: `{raw}`"))),
    }
}

const KNOWN_KEYS: &[&str] = &[
    "disc_radius",
    "alpha",
    "rate",
    "eta",
    "pairs",
    "snr_db",
    "sizes",
    "trials",
    "seed",
    "output",
];

fn read_config_file(path: &PathBuf) -> Result<HashMap<String, String>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Config(format!(
                "line {} of {}: expected key=value",
                lineno + 1,
                path.display()
            )));
        };
        let key = key.trim().to_string();
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(CliError::Config(format!("unknown config key `{key}`")));
        }
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

/// Merges defaults, config file and flags into a validated spec.
pub fn parse_config(mode: Mode, flags: &RunFlags) -> Result<ExperimentSpec, CliError> {
    let file = match &flags.config {
        Some(path) => read_config_file(path)?,
        None => HashMap::new(),
    };

    let spec = ExperimentSpec {
        mode,
        disc_radius: flags
            .disc_radius
            .or(parse_key(&file, "disc_radius")?)
            .unwrap_or(1.0),
        alpha: flags.alpha.or(parse_key(&file, "alpha")?).unwrap_or(2.0),
        rate: flags.rate.or(parse_key(&file, "rate")?).unwrap_or(0.5),
        eta: flags.eta.or(parse_key(&file, "eta")?).unwrap_or(1.0),
        num_pairs: flags.pairs.or(parse_key(&file, "pairs")?).unwrap_or(4),
        snr_db: flags
            .snr_db
            .clone()
            .or(parse_list(&file, "snr_db")?)
            .unwrap_or_else(|| vec![10.0, 20.0, 30.0, 40.0, 50.0]),
        sizes: flags
            .sizes
            .clone()
            .or(parse_list(&file, "sizes")?)
            .unwrap_or_else(|| vec![1, 2, 4]),
        trials: flags.trials.or(parse_key(&file, "trials")?).unwrap_or(1_000_000),
        seed: flags.seed.or(parse_key(&file, "seed")?).unwrap_or(42),
        output: flags
            .output
            .clone()
            .or(file.get("output").map(PathBuf::from)),
        manifest: flags.manifest,
    };
    validate_spec(&spec)?;
    Ok(spec)
}

fn validate_spec(spec: &ExperimentSpec) -> Result<(), CliError> {
    if !(spec.disc_radius > 0.0) {
        return Err(CliError::Config("key `disc_radius` must be > 0".into()));
    }
    if !(spec.alpha >= 2.0) {
        return Err(CliError::Config("key `alpha` must be >= 2".into()));
    }
    if spec.mode.needs_closed_forms() && (spec.alpha - 2.0).abs() > 1e-12 {
        return Err(CliError::Config(format!(
            "key `alpha`: closed-form modes require alpha=2 (got {}); use `simulate` for general alpha",
            spec.alpha
        )));
    }
    if !(spec.rate > 0.0) {
        return Err(CliError::Config("key `rate` must be > 0".into()));
    }
    if !(spec.eta > 0.0 && spec.eta <= 1.0) {
        return Err(CliError::Config("key `eta` must be in (0, 1]".into()));
    }
    if spec.snr_db.is_empty() {
        return Err(CliError::Config("key `snr_db` must be non-empty".into()));
    }
    if !spec.snr_db.windows(2).all(|w| w[0] < w[1]) {
        return Err(CliError::Config(
            "key `snr_db` must be strictly increasing".into(),
        ));
    }
    if spec.sizes.is_empty() || spec.sizes.iter().any(|&s| s == 0) {
        return Err(CliError::Config("key `sizes` must list positive sizes".into()));
    }
    if spec.mode.needs_simulation() && spec.trials < 1_000 {
        return Err(CliError::Config(
            "key `trials` must be >= 1000 in simulate mode".into(),
        ));
    }
    if spec.mode == Mode::Game && (spec.num_pairs == 0 || spec.num_pairs > crate::game::MAX_PLAYERS)
    {
        return Err(CliError::Config(format!(
            "key `pairs` must be in 1..={}",
            crate::game::MAX_PLAYERS
        )));
    }
    Ok(())
}

fn network_config(spec: &ExperimentSpec, snr_db: f64, num_pairs: usize) -> NetworkConfig {
    NetworkConfig {
        num_pairs,
        disc_radius: spec.disc_radius,
        path_loss_alpha: spec.alpha,
        tx_power: 10f64.powf(snr_db / 10.0),
        target_rate: spec.rate,
        harvest_efficiency: spec.eta,
        frame_duration: 1.0,
    }
}

/// Ten significant digits, scientific notation; empty string for a missing
/// column (never a fake zero).
fn fmt_value(v: Option<f64>) -> String {
    match v {
        Some(v) => format!("{v:.9e}"),
        None => String::new(),
    }
}

fn render_rows(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.snr_db,
            row.coalition_size,
            fmt_value(row.outage_sim.map(|e| e.outage_probability)),
            fmt_value(row.outage_sim.map(|e| e.std_error)),
            fmt_value(row.outage_thm1),
            fmt_value(row.outage_asym),
            if row.validity_flag { 1 } else { 0 },
        );
    }
    out
}

fn run_sweep(spec: &ExperimentSpec) -> Result<String, CliError> {
    let mut grid = Vec::new();
    for &snr in &spec.snr_db {
        for &size in &spec.sizes {
            grid.push(SweepPoint {
                config: network_config(spec, snr, size),
                partition: Partition::grand(size),
            });
        }
    }
    let options = SweepOptions {
        simulate: spec.mode.needs_simulation(),
        analytic: matches!(spec.mode, Mode::Analytic | Mode::Compare),
        asymptotic: matches!(spec.mode, Mode::Asymptotic | Mode::Compare),
        trials: spec.trials,
        seed: spec.seed,
    };
    let rows = sweep(&grid, &options)?;
    Ok(render_rows(&rows))
}

fn run_game(spec: &ExperimentSpec) -> Result<String, CliError> {
    let mut out = String::new();
    for &snr in &spec.snr_db {
        let config = network_config(spec, snr, spec.num_pairs);
        let outage = |m: usize| -> Result<f64, AnalyticError> {
            Ok(outage_theorem1(&AnalyticContext::from_config(&config, m)?)?.value)
        };
        // pre-evaluate so numerical errors surface before the game runs
        let mut by_size = vec![0.0; spec.num_pairs + 1];
        for (m, slot) in by_size.iter_mut().enumerate().skip(1) {
            *slot = outage(m)?;
        }
        let report = optimal_partition(spec.num_pairs, &|m| by_size[m], spec.rate)?;

        let _ = writeln!(out, "snr_db = {snr}");
        let _ = writeln!(out, "pairs = {}", report.num_pairs);
        let _ = writeln!(out, "rate = {}", report.rate);
        let _ = writeln!(out, "best_partition = {}", format_partition(&report.best_partition));
        let _ = writeln!(out, "best_value = {}", fmt_value(Some(report.best_value)));
        let _ = writeln!(
            out,
            "superadditive_large_pairs = {}",
            report.superadditivity.holds_for_large_pairs()
        );
        let _ = writeln!(
            out,
            "superadditivity_violations = {:?}",
            report.superadditivity.violations_large
        );
        let _ = writeln!(
            out,
            "singleton_pair_violations = {:?}",
            report.superadditivity.violations_singleton
        );
        let _ = writeln!(out, "equal_split_in_core = {}", report.core.in_core);
        for (size, margin) in &report.core.margins {
            let _ = writeln!(out, "core_margin_size_{size} = {}", fmt_value(Some(*margin)));
        }
        let _ = writeln!(
            out,
            "payoff_per_player = {}",
            fmt_value(Some(report.core.payoff_per_player))
        );
        if !report.partition_values.is_empty() {
            let _ = writeln!(out, "partition_table:");
            for (partition, value) in &report.partition_values {
                let _ = writeln!(
                    out,
                    "  {} = {}",
                    format_partition(partition),
                    fmt_value(Some(*value))
                );
            }
        }
    }
    Ok(out)
}

fn format_partition(p: &Partition) -> String {
    let blocks: Vec<String> = p
        .blocks()
        .iter()
        .map(|b| {
            let inner: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    blocks.join(" ")
}

fn run_bessel_selftest() -> String {
    let mut out = String::from("order,argument,value,reference,rel_error\n");
    let mut worst: f64 = 0.0;
    for &(n, x, reference) in BESSEL_K_FIXTURES {
        let value = bessel_k(n, x).expect("fixture grid is in-domain");
        let rel = ((value - reference) / reference).abs();
        worst = worst.max(rel);
        let _ = writeln!(out, "{n},{x:e},{value:.16e},{reference:.16e},{rel:.3e}");
    }
    let _ = writeln!(out, "# worst relative error: {worst:.3e}");
    out
}

fn emit_manifest(spec: &ExperimentSpec) {
    eprintln!(
        "# manifest: version={} mode={} seed={} trials={} disc_radius={} alpha={} rate={} eta={} snr_db={:?} sizes={:?} pairs={}",
        env!("CARGO_PKG_VERSION"),
        spec.mode.name(),
        spec.seed,
        spec.trials,
        spec.disc_radius,
        spec.alpha,
        spec.rate,
        spec.eta,
        spec.snr_db,
        spec.sizes,
        spec.num_pairs,
    );
}

fn deliver(spec_output: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match spec_output {
        Some(path) => {
            fs::write(path, text)?;
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

/// Runs one parsed command to completion; the caller maps the error to an
/// exit code.
pub fn run(command: &Command) -> Result<(), CliError> {
    if let Command::BesselSelftest = command {
        print!("{}", run_bessel_selftest());
        return Ok(());
    }
    let (mode, flags) = match command {
        Command::Simulate(f) => (Mode::Simulate, f),
        Command::Analytic(f) => (Mode::Analytic, f),
        Command::Asymptotic(f) => (Mode::Asymptotic, f),
        Command::Compare(f) => (Mode::Compare, f),
        Command::Game(f) => (Mode::Game, f),
        Command::BesselSelftest => unreachable!(),
    };
    let spec = parse_config(mode, flags)?;
    if spec.manifest {
        emit_manifest(&spec);
    }
    install_thread_pool()?;
    let text = match spec.mode {
        Mode::Game => run_game(&spec)?,
        _ => run_sweep(&spec)?,
    };
    deliver(&spec.output, &text)
}

/// Honors `EHRELAY_THREADS`; affects speed only, never results.
fn install_thread_pool() -> Result<(), CliError> {
    if let Ok(raw) = std::env::var("EHRELAY_THREADS") {
        let threads: usize = raw
            .parse()
            .map_err(|_| CliError::Config(format!("EHRELAY_THREADS must be an integer, got `{raw}`")))?;
        if threads > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global()
                .map_err(|e| CliError::Numerical(format!("thread pool: {e}")))?;
        }
    }
    Ok(())
}
