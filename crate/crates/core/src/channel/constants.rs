use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const CONSTANTS_VERSION: u32 = 1;

const DEFAULT_CONSTANTS: &str = include_str!("../../data/channel_constants.toml");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelConstants {
    pub version: u32,
    pub uma: UmaConstants,
    pub uma_aerial: AerialConstants,
    pub o2i: O2iConstants,
    pub ntn: NtnConstants,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UmaConstants {
    pub min_height_m: f64,
    pub max_height_m: f64,
    pub los_near_distance_m: f64,
    pub los_decay_m: f64,
    pub los_height_threshold_m: f64,
    pub effective_env_height_m: f64,
    pub los_intercept_db: f64,
    pub los_slope: f64,
    pub los_far_slope: f64,
    pub los_breakpoint_coef: f64,
    pub nlos_intercept_db: f64,
    pub nlos_slope: f64,
    pub nlos_height_coef: f64,
    pub sigma_los_db: f64,
    pub sigma_nlos_db: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AerialConstants {
    pub min_height_m: f64,
    pub max_height_m: f64,
    pub always_los_above_m: f64,
    pub los_d1_coef: f64,
    pub los_d1_offset: f64,
    pub los_d1_min_m: f64,
    pub los_p1_coef: f64,
    pub los_p1_offset: f64,
    pub los_intercept_db: f64,
    pub los_slope: f64,
    pub los_height_slope: f64,
    pub nlos_intercept_db: f64,
    pub nlos_slope: f64,
    pub nlos_height_slope: f64,
    pub sigma_los_coef_db: f64,
    pub sigma_los_decay_per_m: f64,
    pub sigma_nlos_db: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct O2iConstants {
    pub glass_fraction: f64,
    pub glass_loss_db: f64,
    pub glass_loss_per_ghz: f64,
    pub concrete_loss_db: f64,
    pub concrete_loss_per_ghz: f64,
    pub wall_offset_db: f64,
    pub indoor_loss_per_m: f64,
    pub sigma_db: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NtnConstants {
    pub elevation_grid_deg: Vec<f64>,
    pub los_probability: Vec<f64>,
    pub sigma_los_db: Vec<f64>,
    pub sigma_nlos_db: Vec<f64>,
    pub clutter_loss_nlos_db: Vec<f64>,
    pub atmospheric_zenith_db: f64,
    pub scintillation_db: f64,
    pub uav_always_los: bool,
}

impl Default for ChannelConstants {
    fn default() -> Self {
        Self::parse(DEFAULT_CONSTANTS).expect("embedded channel constants are valid")
    }
}

impl ChannelConstants {
    pub fn parse(text: &str) -> Result<Self> {
        let c: ChannelConstants = toml::from_str(text).map_err(|e| Error::Config(format!("channel constants: {e}")))?;
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if self.version != CONSTANTS_VERSION {
            return Err(Error::Config(format!(
                "channel constants version {} not supported (expected {CONSTANTS_VERSION})",
                self.version
            )));
        }
        let n = &self.ntn;
        let len = n.elevation_grid_deg.len();
        if len == 0
            || [
                n.los_probability.len(),
                n.sigma_los_db.len(),
                n.sigma_nlos_db.len(),
                n.clutter_loss_nlos_db.len(),
            ]
            .iter()
            .any(|&l| l != len)
        {
            return Err(Error::Config(
                "ntn tables must be non-empty and share one length".into(),
            ));
        }
        if n.elevation_grid_deg.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Config(
                "ntn.elevation_grid_deg must be strictly increasing".into(),
            ));
        }
        if n.los_probability.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::Config("ntn.los_probability entries must lie in [0, 1]".into()));
        }
        if self.uma.max_height_m > self.uma_aerial.min_height_m + 1e-9 {
            return Err(Error::Config("uma and uma_aerial height ranges overlap".into()));
        }
        Ok(())
    }
}

/// Linear interpolation in an elevation-indexed table, clamped at both ends.
pub(crate) fn interp(grid: &[f64], values: &[f64], x: f64) -> f64 {
    if x <= grid[0] {
        return values[0];
    }
    let last = grid.len() - 1;
    if x >= grid[last] {
        return values[last];
    }
    let i = grid.partition_point(|&g| g <= x) - 1;
    let t = (x - grid[i]) / (grid[i + 1] - grid[i]);
    values[i] + t * (values[i + 1] - values[i])
}
