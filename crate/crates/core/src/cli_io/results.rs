use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::engine::{Direction, MetricsSummary, Population, ScenarioConfig};
use crate::error::{Error, Result};

/// Version of the CSV and JSON layouts below.
pub const SCHEMA_VERSION: u32 = 1;

/// Column names of the CSV sample table.
pub const CSV_HEADER: [&str; 5] = ["scenario", "population", "direction", "metric", "value"];

/// Environment variable pinning the recorded timestamp (seconds since the
/// Unix epoch) for reproducible artifacts.
pub const SOURCE_DATE_EPOCH: &str = "SOURCE_DATE_EPOCH";

/// Version string of this build.
pub fn version_string() -> String {
    format!("v{}", env!("CARGO_PKG_VERSION"))
}

/// Timestamp for new result files: `SOURCE_DATE_EPOCH` when set, otherwise
/// the wall clock.
pub fn current_timestamp() -> Result<u64> {
    match std::env::var(SOURCE_DATE_EPOCH) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("{SOURCE_DATE_EPOCH} must be an integer, got `{v}`"))),
        Err(_) => Ok(std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub schema_version: u32,
    pub version: String,
    pub timestamp_unix: u64,
    pub seed: u64,
    /// The exact configuration that produced the summary.
    pub config: ScenarioConfig,
}

/// A campaign result with enough metadata to reproduce it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultFile {
    pub metadata: Metadata,
    pub summary: MetricsSummary,
}

impl ResultFile {
    pub fn new(config: &ScenarioConfig, summary: MetricsSummary, timestamp_unix: u64) -> Self {
        Self {
            metadata: Metadata {
                schema_version: SCHEMA_VERSION,
                version: version_string(),
                timestamp_unix,
                seed: config.run.master_seed,
                config: config.clone(),
            },
            summary,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: Self = serde_json::from_str(text)?;
        if file.metadata.schema_version != SCHEMA_VERSION {
            return Err(Error::Config(format!(
                "result schema version {} is not supported (expected {SCHEMA_VERSION})",
                file.metadata.schema_version
            )));
        }
        Ok(file)
    }
}

/// One row of the CSV sample table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleRow {
    pub scenario: String,
    pub population: Population,
    pub direction: Direction,
    /// `sinr_db` or `rate_bps`.
    pub metric: String,
    pub value: f64,
}

/// Every sample of `summary` as CSV rows, each distribution's SINR values
/// followed by its rates, both ascending.
pub fn sample_rows(summary: &MetricsSummary) -> Vec<SampleRow> {
    let mut rows = Vec::new();
    for d in &summary.distributions {
        for (metric, values) in [("sinr_db", &d.sinr_db), ("rate_bps", &d.rate_bps)] {
            rows.extend(values.iter().map(|&value| SampleRow {
                scenario: summary.scenario.clone(),
                population: d.population,
                direction: d.direction,
                metric: metric.to_string(),
                value,
            }));
        }
    }
    rows
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path).map(BufReader::new).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Writes `result` to `path`: the full result as JSON, or the sample table
/// as CSV with a `# schema_version=` comment line first.
pub fn emit_results(result: &ResultFile, format: Format, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io = |source| Error::Io {
        path: path.display().to_string(),
        source,
    };
    let mut out = create(path)?;
    match format {
        Format::Json => out.write_all(result.to_json()?.as_bytes()).map_err(io)?,
        Format::Csv => {
            writeln!(out, "# schema_version={SCHEMA_VERSION}").map_err(io)?;
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(&mut out);
            w.write_record(CSV_HEADER)?;
            for row in sample_rows(&result.summary) {
                w.write_record([
                    row.scenario.as_str(),
                    row.population.as_str(),
                    row.direction.as_str(),
                    row.metric.as_str(),
                    // Shortest round-trip form, independent of locale.
                    &format!("{:?}", row.value),
                ])?;
            }
            w.flush().map_err(io)?;
        }
    }
    out.flush().map_err(io)
}

pub fn read_json(path: impl AsRef<Path>) -> Result<ResultFile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    ResultFile::from_json(&text)
}

pub fn read_csv(path: impl AsRef<Path>) -> Result<Vec<SampleRow>> {
    let reader = open(path.as_ref())?;
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(reader);
    let rows = r.deserialize().collect::<std::result::Result<Vec<SampleRow>, _>>()?;
    Ok(rows)
}
