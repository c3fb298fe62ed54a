use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::config::{parse_config, parse_value, resolve_key, with_override};
use super::results::{current_timestamp, emit_results, Format, ResultFile};
use crate::engine::{preset, preset_names, run_campaign_with_workers, MetricsSummary, ScenarioConfig, WORKERS_ENV};
use crate::error::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "ntnsim",
    version,
    about = "UAV offloading in integrated terrestrial and LEO satellite networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one campaign and write its results.
    Run {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        opts: RunArgs,
    },
    /// Run the cartesian product of one or more parameter variations.
    Sweep {
        #[command(flatten)]
        source: Source,
        /// `key=v1,v2,...`; keys are dotted paths or unique leaf names.
        #[arg(long, required = true, value_name = "KEY=VALUES")]
        vary: Vec<String>,
        #[command(flatten)]
        opts: RunArgs,
    },
    /// List the built-in presets.
    Presets,
    /// Parse and validate a configuration without running it.
    Validate {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// TOML scenario file.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Built-in preset name.
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Output directory.
    #[arg(long, default_value = "results", value_name = "DIR")]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Both)]
    format: OutputFormat,
    /// Override the number of drops.
    #[arg(long)]
    drops: Option<usize>,
    /// Override the master seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (default: the environment variable, then all cores).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
    Both,
}

impl OutputFormat {
    fn formats(self) -> &'static [Format] {
        match self {
            OutputFormat::Csv => &[Format::Csv],
            OutputFormat::Json => &[Format::Json],
            OutputFormat::Both => &[Format::Csv, Format::Json],
        }
    }
}

impl Source {
    fn load(&self) -> Result<ScenarioConfig> {
        match (&self.config, &self.preset) {
            (Some(path), _) => parse_config(path),
            (None, Some(name)) => preset(name),
            (None, None) => Err(Error::Config("one of --config or --preset is required".into())),
        }
    }
}

/// Runs the command line `args` (program name first) and returns the
/// process exit code.
pub fn cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let parsed = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(parsed.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Presets => {
            for name in preset_names() {
                println!("{name}");
            }
            Ok(())
        }
        Command::Validate { source } => {
            let config = source.load()?;
            println!(
                "{}: ok ({}, {} drops)",
                config.name,
                config.mode.as_str(),
                config.run.n_drops
            );
            Ok(())
        }
        Command::Run { source, opts } => {
            let config = apply(source.load()?, &opts)?;
            run_one(&config, &opts)
        }
        Command::Sweep { source, vary, opts } => {
            let base = apply(source.load()?, &opts)?;
            let configs = sweep_configs(&base, &vary)?;
            for config in &configs {
                run_one(config, &opts)?;
            }
            Ok(())
        }
    }
}

fn apply(mut config: ScenarioConfig, opts: &RunArgs) -> Result<ScenarioConfig> {
    if let Some(n) = opts.drops {
        config.run.n_drops = n;
    }
    if let Some(s) = opts.seed {
        config.run.master_seed = s;
    }
    config.validate()?;
    Ok(config)
}

/// Parses `key=v1,v2,...`.
fn parse_vary(spec: &str) -> Result<(String, Vec<String>)> {
    let (key, values) = spec
        .split_once('=')
        .ok_or_else(|| Error::Config(format!("--vary expects KEY=V1,V2,..., got `{spec}`")))?;
    let values: Vec<String> = values
        .split(',')
        .map(|v| v.trim().to_string())
        .filter(|v| !v.is_empty())
        .collect();
    if values.is_empty() {
        return Err(Error::Config(format!("--vary `{key}` has no values")));
    }
    Ok((key.trim().to_string(), values))
}

/// Every combination of the variations applied to `base`, named after the
/// values they set. The last variation changes fastest.
pub fn sweep_configs(base: &ScenarioConfig, vary: &[String]) -> Result<Vec<ScenarioConfig>> {
    let mut configs = vec![base.clone()];
    for spec in vary {
        let (key, values) = parse_vary(spec)?;
        let path = resolve_key(base, &key)?;
        let leaf = path.rsplit('.').next().unwrap_or(&path).to_string();
        let mut next = Vec::with_capacity(configs.len() * values.len());
        for c in &configs {
            for v in &values {
                let mut out = with_override(c, &path, parse_value(v))?;
                out.name = format!("{}__{leaf}={v}", c.name);
                next.push(out);
            }
        }
        configs = next;
    }
    Ok(configs)
}

fn run_one(config: &ScenarioConfig, opts: &RunArgs) -> Result<()> {
    let workers = match opts.workers {
        Some(0) => return Err(Error::Config("--workers must be positive".into())),
        Some(n) => Some(n),
        None => workers_from_env()?,
    };
    let started = std::time::Instant::now();
    let summary = run_campaign_with_workers(config, workers)?;
    let result = ResultFile::new(config, summary, current_timestamp()?);
    std::fs::create_dir_all(&opts.out).map_err(|source| Error::Io {
        path: opts.out.display().to_string(),
        source,
    })?;
    let mut written = Vec::new();
    for &format in opts.format.formats() {
        let path = output_path(&opts.out, &config.name, format);
        emit_results(&result, format, &path)?;
        written.push(path.display().to_string());
    }
    print!("{}", summary_table(&result.summary));
    println!(
        "  {:.1} s, wrote {}",
        started.elapsed().as_secs_f64(),
        written.join(", ")
    );
    Ok(())
}

fn workers_from_env() -> Result<Option<usize>> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| Error::Config(format!("{WORKERS_ENV} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn output_path(dir: &Path, name: &str, format: Format) -> PathBuf {
    let safe: String = name
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || "._=-".contains(c) {
                c
            } else {
                '_'
            }
        })
        .collect();
    dir.join(format!("{safe}.{}", format.extension()))
}

/// Human-readable one-line-per-distribution summary.
pub fn summary_table(s: &MetricsSummary) -> String {
    let opt = |v: Option<f64>, scale: f64| v.map_or("-".to_string(), |x| format!("{:.3}", x * scale));
    let mut out = format!(
        "{} ({} drops, outage below {} dB)\n  {:<8} {:>8} {:>9} {:>10} {:>12} {:>12}\n",
        s.scenario,
        s.n_drops,
        s.outage_threshold_db,
        "link",
        "samples",
        "outage",
        "median dB",
        "mean Mbit/s",
        "p95 Mbit/s"
    );
    for d in &s.distributions {
        let _ = writeln!(
            out,
            "  {:<8} {:>8} {:>9} {:>10} {:>12} {:>12}",
            format!("{}-{}", d.population.as_str(), d.direction.as_str()),
            d.len(),
            opt(d.outage, 1.0),
            opt(d.median_sinr_db, 1.0),
            opt(d.mean_rate_bps, 1e-6),
            opt(d.p95_rate_bps, 1e-6),
        );
    }
    if let Some(r) = &s.relief {
        let _ = writeln!(
            out,
            "  relief: {} of {} UAVs relieved, mean muted {}, max muted {}",
            r.relieved,
            r.uavs,
            opt(r.mean_muted, 1.0),
            r.max_muted
        );
    }
    if let Some(p) = &s.partition {
        let _ = writeln!(
            out,
            "  partition: {} cells, mean UAV fraction {}, {} saturated",
            p.cells,
            opt(p.mean_fraction, 1.0),
            p.saturated
        );
    }
    out
}
