use serde::{Deserialize, Serialize};

use super::{bessel_j1, AMPLITUDE_FLOOR};
use crate::error::{Error, Result};

/// Circular-aperture reflector with the Airy power pattern
/// `G(psi) = G_max * |2 J1(ka sin psi) / (ka sin psi)|^2`.
///
/// `ka` is solved at construction so that the pattern is exactly 3 dB down
/// at half the requested beamwidth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReflectorPattern {
    pub max_gain_dbi: f64,
    pub hpbw_deg: f64,
    ka: f64,
}

/// x at which |2 J1(x) / x| drops by 3 dB.
fn half_power_argument() -> f64 {
    let target = 10f64.powf(-3.0 / 20.0);
    let (mut lo, mut hi) = (1e-6, 3.8);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if airy_amplitude(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn airy_amplitude(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 8.0
    } else {
        2.0 * bessel_j1(x) / x
    }
}

impl ReflectorPattern {
    pub fn new(max_gain_dbi: f64, hpbw_deg: f64) -> Result<Self> {
        if !(hpbw_deg > 0.0 && hpbw_deg < 90.0) {
            return Err(Error::out_of_range("hpbw", hpbw_deg, "(0, 90)"));
        }
        let ka = half_power_argument() / (0.5 * hpbw_deg).to_radians().sin();
        Ok(Self {
            max_gain_dbi,
            hpbw_deg,
            ka,
        })
    }

    /// Wavenumber times aperture radius.
    pub fn ka(&self) -> f64 {
        self.ka
    }

    pub fn aperture_radius_wavelengths(&self) -> f64 {
        self.ka / std::f64::consts::TAU
    }

    /// Off-axis angle of the first null, degrees.
    pub fn first_null_deg(&self) -> f64 {
        (3.831_705_970_207_512 / self.ka).asin().to_degrees()
    }

    pub fn gain_db(&self, off_axis_deg: f64) -> f64 {
        let x = self.ka * off_axis_deg.to_radians().sin();
        let amp = airy_amplitude(x).abs().max(AMPLITUDE_FLOOR);
        self.max_gain_dbi + 20.0 * amp.log10()
    }
}
