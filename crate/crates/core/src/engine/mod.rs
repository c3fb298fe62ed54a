//! Monte Carlo campaign driver: scenario presets, single drops, and the
//! aggregation of many drops into distributions and summary statistics.
//!
//! Drops run one after the other; the work inside a drop (gain rows, user
//! evaluations, uplink pools) is spread over the rayon pool. Every random
//! quantity comes from a substream addressed by drop, purpose and index, so
//! results do not depend on the number of worker threads.

mod config;
mod drop;
mod metrics;
mod presets;

pub use config::{
    AntennaConfig, ChannelOptions, Deployment, Mode, Noise, Power, RunOptions, ScenarioConfig, Spectrum,
    REQUIRED_SECTIONS,
};
pub use drop::{
    satellite_noise_temperature, DropRecords, DropState, PartitionRecord, ReliefRecord, Scenario, UlPool, UserRecord,
};
pub use metrics::{percentile, Direction, Distribution, MetricsSummary, PartitionStats, Population, ReliefStats};
pub use presets::{base_config, preset, preset_names, DEFAULT_SEED};

use crate::error::{Error, Result};

/// Environment variable overriding the worker-thread count.
pub const WORKERS_ENV: &str = "NTNSIM_WORKERS";

/// Records of one drop of `config`.
pub fn run_drop(config: &ScenarioConfig, drop_index: u64) -> Result<DropRecords> {
    Scenario::new(config.clone())?.run_drop(drop_index)
}

/// Runs every drop of `config` and aggregates the records. The worker count
/// comes from the environment when set.
pub fn run_campaign(config: &ScenarioConfig) -> Result<MetricsSummary> {
    let workers = match std::env::var(WORKERS_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| Error::Config(format!("{WORKERS_ENV} must be a positive integer, got `{v}`")))?,
        ),
        Err(_) => None,
    };
    run_campaign_with_workers(config, workers)
}

/// As [`run_campaign`] with an explicit worker count (`None`: rayon default).
pub fn run_campaign_with_workers(config: &ScenarioConfig, workers: Option<usize>) -> Result<MetricsSummary> {
    let scenario = Scenario::new(config.clone())?;
    let run = || -> Result<MetricsSummary> {
        let drops = (0..config.run.n_drops as u64)
            .map(|i| scenario.run_drop(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(summarize(&scenario, &drops))
    };
    match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Config(format!("cannot start {n} workers: {e}")))?
            .install(run),
        None => run(),
    }
}

/// Aggregates drop records of `scenario`.
pub fn summarize(scenario: &Scenario, drops: &[DropRecords]) -> MetricsSummary {
    let c = &scenario.config;
    MetricsSummary::aggregate(
        &c.name,
        drops,
        c.run.outage_threshold_db,
        c.run.exclude_edge_users,
        Some(scenario.n_tn_cells().saturating_sub(1)),
    )
}
