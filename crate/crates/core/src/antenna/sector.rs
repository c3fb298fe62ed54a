use serde::{Deserialize, Serialize};

use super::AMPLITUDE_FLOOR;
use crate::error::{Error, Result};

/// Base-station antenna: vertical uniform linear array of 3GPP parabolic
/// elements, fed through one RF chain with fixed electrical downtilt.
///
/// Angles: `theta` is the zenith angle (0 = up, 90 = horizon, 180 = down),
/// `phi` the azimuth relative to the sector boresight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectorArrayPattern {
    pub element_max_gain_dbi: f64,
    pub horiz_hpbw_deg: f64,
    pub vert_hpbw_deg: f64,
    /// Front-to-back ratio, also the floor of the combined element pattern.
    pub front_back_db: f64,
    /// Vertical side-lobe floor of the element.
    pub vert_sidelobe_db: f64,
    pub n_elements: u32,
    /// Element spacing in wavelengths.
    pub element_spacing: f64,
    pub downtilt_deg: f64,
}

impl Default for SectorArrayPattern {
    fn default() -> Self {
        Self {
            element_max_gain_dbi: 8.0,
            horiz_hpbw_deg: 65.0,
            vert_hpbw_deg: 65.0,
            front_back_db: 30.0,
            vert_sidelobe_db: 30.0,
            n_elements: 10,
            element_spacing: 0.5,
            downtilt_deg: 12.0,
        }
    }
}

/// Azimuth-independent part of the pattern at one zenith angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerticalCut {
    /// Element vertical attenuation A_V (<= 0 dB).
    pub element_vertical_db: f64,
    /// Array factor, dB (10 log10 N at the steering angle).
    pub array_factor_db: f64,
}

impl SectorArrayPattern {
    pub fn validate(&self) -> Result<()> {
        if self.n_elements < 1 {
            return Err(Error::out_of_range("n_elements", self.n_elements as f64, "[1, inf)"));
        }
        if !(self.element_spacing > 0.0) {
            return Err(Error::out_of_range("element_spacing", self.element_spacing, "(0, inf)"));
        }
        if !(0.0..90.0).contains(&self.downtilt_deg) {
            return Err(Error::out_of_range("downtilt", self.downtilt_deg, "[0, 90)"));
        }
        if !(self.horiz_hpbw_deg > 0.0 && self.vert_hpbw_deg > 0.0) {
            return Err(Error::Config("element beamwidths must be positive".into()));
        }
        Ok(())
    }

    /// Zenith angle of the array main beam.
    pub fn steering_zenith_deg(&self) -> f64 {
        90.0 + self.downtilt_deg
    }

    fn horizontal_db(&self, phi_deg: f64) -> f64 {
        -(12.0 * (phi_deg / self.horiz_hpbw_deg).powi(2)).min(self.front_back_db)
    }

    fn vertical_db(&self, theta_deg: f64) -> f64 {
        -(12.0 * ((theta_deg - 90.0) / self.vert_hpbw_deg).powi(2)).min(self.vert_sidelobe_db)
    }

    /// Single-element gain, dBi.
    pub fn element_gain(&self, theta_deg: f64, phi_deg: f64) -> f64 {
        let phi = wrap_azimuth(phi_deg);
        let att = -(self.vertical_db(theta_deg) + self.horizontal_db(phi));
        self.element_max_gain_dbi - att.min(self.front_back_db)
    }

    /// Normalised array power factor `|sum_n exp(j n psi)|^2 / N` in dB, with
    /// `psi = 2 pi d (cos(theta) - cos(theta_steer))`.
    pub fn array_factor_db(&self, theta_deg: f64) -> f64 {
        let n = self.n_elements as f64;
        let psi = std::f64::consts::TAU
            * self.element_spacing
            * (theta_deg.to_radians().cos() - self.steering_zenith_deg().to_radians().cos());
        let den = (0.5 * psi).sin();
        let af = if den.abs() < 1e-12 {
            n
        } else {
            let amp = (0.5 * n * psi).sin() / den;
            (amp * amp / n).max(AMPLITUDE_FLOOR * AMPLITUDE_FLOOR)
        };
        10.0 * af.log10()
    }

    pub fn vertical_cut(&self, theta_deg: f64) -> VerticalCut {
        VerticalCut {
            element_vertical_db: self.vertical_db(theta_deg),
            array_factor_db: self.array_factor_db(theta_deg),
        }
    }

    /// Composite gain from a precomputed vertical cut; identical to
    /// [`Self::array_gain`] but lets co-located sectors share the zenith work.
    pub fn gain_from_cut(&self, cut: &VerticalCut, phi_deg: f64) -> f64 {
        let att = -(cut.element_vertical_db + self.horizontal_db(wrap_azimuth(phi_deg)));
        self.element_max_gain_dbi - att.min(self.front_back_db) + cut.array_factor_db
    }

    /// Element pattern plus array factor, dBi.
    pub fn array_gain(&self, theta_deg: f64, phi_deg: f64) -> f64 {
        self.gain_from_cut(&self.vertical_cut(theta_deg), phi_deg)
    }
}

/// Maps any azimuth onto (-180, 180].
pub fn wrap_azimuth(phi_deg: f64) -> f64 {
    let mut p = phi_deg % 360.0;
    if p <= -180.0 {
        p += 360.0;
    } else if p > 180.0 {
        p -= 360.0;
    }
    p
}
