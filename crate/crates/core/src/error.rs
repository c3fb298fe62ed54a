use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{name} = {value} is out of range, expected {range}")]
    OutOfRange { name: String, value: f64, range: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("unknown preset `{name}`; available presets: {available}")]
    UnknownPreset { name: String, available: String },

    #[error("degenerate geometry: {0}")]
    Geometry(String),

    #[error("empty cell set")]
    EmptyCellSet,

    #[error("user {0} is not scheduled")]
    NotScheduled(usize),

    #[error("drop {index}: {source}")]
    Drop { index: u64, source: Box<Error> },

    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn out_of_range(name: impl Into<String>, value: f64, range: impl Into<String>) -> Self {
        Error::OutOfRange {
            name: name.into(),
            value,
            range: range.into(),
        }
    }
}
