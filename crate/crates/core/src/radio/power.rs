use serde::{Deserialize, Serialize};

use super::association::CellId;
use crate::error::{Error, Result};

/// Open-loop fractional uplink power control,
/// `P_k = min(P_max, P0 - alpha * G_dB)` for TN-served users; NTN-served
/// users transmit at `P_max`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowerControl {
    pub p0_dbm: f64,
    pub alpha: f64,
    pub p_max_dbm: f64,
}

impl Default for PowerControl {
    fn default() -> Self {
        Self {
            p0_dbm: -85.0,
            alpha: 0.8,
            p_max_dbm: 23.0,
        }
    }
}

impl PowerControl {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(Error::out_of_range("power.alpha", self.alpha, "[0, 1]"));
        }
        if !self.p0_dbm.is_finite() || !self.p_max_dbm.is_finite() {
            return Err(Error::Config("power.p0_dbm and power.p_max_dbm must be finite".into()));
        }
        Ok(())
    }

    /// Transmit power in dBm for a user served by `serving` over a link with
    /// large-scale gain `gain_db`.
    pub fn ul_power_dbm(&self, serving: CellId, gain_db: f64) -> f64 {
        match serving {
            CellId::Tn(_) => (self.p0_dbm - self.alpha * gain_db).min(self.p_max_dbm),
            CellId::Ntn(_) => self.p_max_dbm,
        }
    }
}
