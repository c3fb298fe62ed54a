//! Scenario files, the command-line front end, and result serialization.
//!
//! Scenarios are TOML files whose sections mirror [`ScenarioConfig`]; a file
//! may instead name a preset and override individual keys. Results are
//! written as a JSON [`ResultFile`] (summary plus the configuration that
//! produced it) and as a long-format CSV sample table for plotting.
//!
//! [`ScenarioConfig`]: crate::engine::ScenarioConfig

mod cli;
mod config;
mod results;

pub use cli::{cli, summary_table, sweep_configs};
pub use config::{config_keys, parse_config, parse_config_str, parse_value, resolve_key, with_override, PRESET_KEY};
pub use results::{
    current_timestamp, emit_results, read_csv, read_json, sample_rows, version_string, Format, Metadata, ResultFile,
    SampleRow, CSV_HEADER, SCHEMA_VERSION, SOURCE_DATE_EPOCH,
};
