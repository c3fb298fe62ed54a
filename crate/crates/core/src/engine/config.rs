use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::antenna::SectorArrayPattern;
use crate::error::{Error, Result};
use crate::geometry::TrafficParams;
use crate::radio::PowerControl;

/// Which network policy a scenario evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// All users on the terrestrial network.
    StandaloneTn,
    /// Terrestrial network, with dominant interferers of low-SINR UAVs muted.
    TnRelief,
    /// Terrestrial network, with a reserved UAV share of the uplink band.
    TnUlPartition,
    /// GUEs on the terrestrial network, UAVs on the satellite.
    TnNtnOffload,
}

impl Mode {
    pub const ALL: [Mode; 4] = [
        Mode::StandaloneTn,
        Mode::TnRelief,
        Mode::TnUlPartition,
        Mode::TnNtnOffload,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::StandaloneTn => "standalone_tn",
            Mode::TnRelief => "tn_relief",
            Mode::TnUlPartition => "tn_ul_partition",
            Mode::TnNtnOffload => "tn_ntn_offload",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Deployment {
    pub isd_m: f64,
    pub area_km2: f64,
    pub bs_height_m: f64,
    pub orbit_altitude_km: f64,
    /// Elevation of the satellite seen from the area centre.
    pub elevation_deg: f64,
    pub beam_hpbw_deg: f64,
    /// Angle between the centre beam and each ring beam.
    pub beam_spacing_deg: f64,
    /// Rotation of the beam ring about the nadir axis; 180 faces the area.
    pub ring_azimuth_deg: f64,
    pub frf: u8,
}

/// Per-cell (TN) and per-beam (NTN) bandwidths.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Spectrum {
    pub carrier_ghz: f64,
    pub tn_dl_mhz: f64,
    pub tn_ul_mhz: f64,
    pub ntn_dl_mhz: f64,
    pub ntn_ul_mhz: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Power {
    pub tn_dl_dbm: f64,
    /// Beam EIRP density at boresight.
    pub ntn_eirp_dbw_per_mhz: f64,
    pub uplink: PowerControl,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AntennaConfig {
    pub sector: SectorArrayPattern,
    pub reflector_max_gain_dbi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Noise {
    pub density_dbm_per_hz: f64,
    pub bs_noise_figure_db: f64,
    pub ue_noise_figure_db: f64,
    pub satellite_g_over_t_db: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelOptions {
    pub shadowing: bool,
    /// Rayleigh fading on terrestrial ground links; off means `|h| = 1`.
    pub rayleigh: bool,
    /// Fading draws per user for the rate expectation.
    pub fading_realizations: usize,
    /// Strongest downlink interferers given individual fading draws; the
    /// rest contribute their mean power.
    pub faded_interferers: usize,
    /// Replacement channel-constants file; the built-in set when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constants_file: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunOptions {
    pub n_drops: usize,
    pub master_seed: u64,
    pub outage_threshold_db: f64,
    pub uav_target_rate_bps: f64,
    /// Leave users within one ISD of the area boundary out of the statistics.
    pub exclude_edge_users: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    pub mode: Mode,
    pub deployment: Deployment,
    pub spectrum: Spectrum,
    pub traffic: TrafficParams,
    pub power: Power,
    pub antenna: AntennaConfig,
    pub noise: Noise,
    pub channel: ChannelOptions,
    pub run: RunOptions,
}

/// Top-level sections every configuration must define.
pub const REQUIRED_SECTIONS: [&str; 10] = [
    "name",
    "mode",
    "deployment",
    "spectrum",
    "traffic",
    "power",
    "antenna",
    "noise",
    "channel",
    "run",
];

fn check(name: &str, value: f64, ok: bool, range: &str) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(Error::out_of_range(name, value, range))
    }
}

fn positive(name: &str, value: f64) -> Result<()> {
    check(name, value, value > 0.0, "(0, inf)")
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        let d = &self.deployment;
        positive("deployment.isd_m", d.isd_m)?;
        positive("deployment.area_km2", d.area_km2)?;
        check(
            "deployment.bs_height_m",
            d.bs_height_m,
            d.bs_height_m > 1.5 && d.bs_height_m <= 100.0,
            "(1.5, 100]",
        )?;
        check(
            "deployment.orbit_altitude_km",
            d.orbit_altitude_km,
            (100.0..=40_000.0).contains(&d.orbit_altitude_km),
            "[100, 40000]",
        )?;
        check(
            "deployment.elevation_deg",
            d.elevation_deg,
            d.elevation_deg > 0.0 && d.elevation_deg <= 90.0,
            "(0, 90]",
        )?;
        check(
            "deployment.beam_hpbw_deg",
            d.beam_hpbw_deg,
            d.beam_hpbw_deg > 0.0 && d.beam_hpbw_deg < 90.0,
            "(0, 90)",
        )?;
        check(
            "deployment.beam_spacing_deg",
            d.beam_spacing_deg,
            d.beam_spacing_deg > 0.0 && d.beam_spacing_deg < 90.0,
            "(0, 90)",
        )?;
        check("deployment.ring_azimuth_deg", d.ring_azimuth_deg, true, "finite")?;
        if d.frf != 1 && d.frf != 3 {
            return Err(Error::out_of_range("deployment.frf", d.frf as f64, "{1, 3}"));
        }

        let s = &self.spectrum;
        check(
            "spectrum.carrier_ghz",
            s.carrier_ghz,
            s.carrier_ghz >= 0.5 && s.carrier_ghz <= 100.0,
            "[0.5, 100]",
        )?;
        positive("spectrum.tn_dl_mhz", s.tn_dl_mhz)?;
        check("spectrum.tn_ul_mhz", s.tn_ul_mhz, s.tn_ul_mhz >= 0.36, "[0.36, inf)")?;
        positive("spectrum.ntn_dl_mhz", s.ntn_dl_mhz)?;
        check("spectrum.ntn_ul_mhz", s.ntn_ul_mhz, s.ntn_ul_mhz >= 0.36, "[0.36, inf)")?;

        let t = &self.traffic;
        check(
            "traffic.users_per_cell",
            t.users_per_cell,
            t.users_per_cell >= 0.0,
            "[0, inf)",
        )?;
        check("traffic.uav_ratio", t.uav_ratio, t.uav_ratio >= 0.0, "[0, inf)")?;
        check(
            "traffic.uav_height",
            t.uav_height,
            t.uav_height > 22.5 && t.uav_height <= 300.0,
            "(22.5, 300]",
        )?;
        check(
            "traffic.indoor_fraction",
            t.indoor_fraction,
            (0.0..=1.0).contains(&t.indoor_fraction),
            "[0, 1]",
        )?;
        if t.min_floors < 1 || t.min_floors > t.max_floors || t.max_floors > 8 {
            return Err(Error::Config(format!(
                "traffic.min_floors/max_floors = {}/{} must satisfy 1 <= min <= max <= 8",
                t.min_floors, t.max_floors
            )));
        }
        check(
            "traffic.max_indoor_distance",
            t.max_indoor_distance,
            t.max_indoor_distance >= 0.0,
            "[0, inf)",
        )?;

        let p = &self.power;
        check(
            "power.tn_dl_dbm",
            p.tn_dl_dbm,
            (-30.0..=80.0).contains(&p.tn_dl_dbm),
            "[-30, 80]",
        )?;
        check(
            "power.ntn_eirp_dbw_per_mhz",
            p.ntn_eirp_dbw_per_mhz,
            (-30.0..=100.0).contains(&p.ntn_eirp_dbw_per_mhz),
            "[-30, 100]",
        )?;
        p.uplink.validate()?;

        self.antenna.sector.validate()?;
        check(
            "antenna.reflector_max_gain_dbi",
            self.antenna.reflector_max_gain_dbi,
            self.antenna.reflector_max_gain_dbi > 0.0 && self.antenna.reflector_max_gain_dbi <= 70.0,
            "(0, 70]",
        )?;

        let n = &self.noise;
        check("noise.density_dbm_per_hz", n.density_dbm_per_hz, true, "finite")?;
        check(
            "noise.bs_noise_figure_db",
            n.bs_noise_figure_db,
            n.bs_noise_figure_db >= 0.0,
            "[0, inf)",
        )?;
        check(
            "noise.ue_noise_figure_db",
            n.ue_noise_figure_db,
            n.ue_noise_figure_db >= 0.0,
            "[0, inf)",
        )?;
        check("noise.satellite_g_over_t_db", n.satellite_g_over_t_db, true, "finite")?;

        let c = &self.channel;
        if c.fading_realizations == 0 {
            return Err(Error::out_of_range("channel.fading_realizations", 0.0, "[1, inf)"));
        }

        let r = &self.run;
        if r.n_drops == 0 {
            return Err(Error::out_of_range("run.n_drops", 0.0, "[1, inf)"));
        }
        check("run.outage_threshold_db", r.outage_threshold_db, true, "finite")?;
        positive("run.uav_target_rate_bps", r.uav_target_rate_bps)?;
        Ok(())
    }
}
