use super::config::{
    AntennaConfig, ChannelOptions, Deployment, Mode, Noise, Power, RunOptions, ScenarioConfig, Spectrum,
};
use crate::antenna::SectorArrayPattern;
use crate::error::{Error, Result};
use crate::geometry::TrafficParams;
use crate::radio::PowerControl;

pub const DEFAULT_SEED: u64 = 20_240_601;

const CASES: [(&str, f64); 2] = [("case2", 0.007), ("case3", 0.071)];

const VARIANTS: [&str; 7] = [
    "standalone",
    "relief",
    "partition",
    "offload_90_frf1",
    "offload_90_frf3",
    "offload_87_frf1",
    "offload_87_frf3",
];

/// All preset names, `<case>.<variant>`.
pub fn preset_names() -> Vec<String> {
    CASES
        .iter()
        .flat_map(|(c, _)| VARIANTS.iter().map(move |v| format!("{c}.{v}")))
        .collect()
}

/// Reference system parameters with the given UAV ratio.
pub fn base_config(uav_ratio: f64) -> ScenarioConfig {
    ScenarioConfig {
        name: "custom".into(),
        mode: Mode::StandaloneTn,
        deployment: Deployment {
            isd_m: 500.0,
            area_km2: 52.0,
            bs_height_m: 25.0,
            orbit_altitude_km: 600.0,
            elevation_deg: 90.0,
            beam_hpbw_deg: 4.41,
            beam_spacing_deg: 4.41,
            ring_azimuth_deg: 0.0,
            frf: 1,
        },
        spectrum: Spectrum {
            carrier_ghz: 2.0,
            tn_dl_mhz: 10.0,
            tn_ul_mhz: 10.0,
            ntn_dl_mhz: 30.0,
            ntn_ul_mhz: 30.0,
        },
        traffic: TrafficParams {
            uav_ratio,
            ..TrafficParams::default()
        },
        power: Power {
            tn_dl_dbm: 46.0,
            ntn_eirp_dbw_per_mhz: 34.0,
            uplink: PowerControl::default(),
        },
        antenna: AntennaConfig {
            sector: SectorArrayPattern::default(),
            reflector_max_gain_dbi: 30.0,
        },
        noise: Noise {
            density_dbm_per_hz: -174.0,
            bs_noise_figure_db: 7.0,
            ue_noise_figure_db: 9.0,
            satellite_g_over_t_db: 1.1,
        },
        channel: ChannelOptions {
            shadowing: true,
            rayleigh: true,
            fading_realizations: 50,
            faded_interferers: 32,
            constants_file: None,
        },
        run: RunOptions {
            n_drops: 100,
            master_seed: DEFAULT_SEED,
            outage_threshold_db: -5.0,
            uav_target_rate_bps: 100e3,
            exclude_edge_users: false,
        },
    }
}

/// Named scenario, e.g. `case3.offload_87_frf3`.
pub fn preset(name: &str) -> Result<ScenarioConfig> {
    let unknown = || Error::UnknownPreset {
        name: name.to_string(),
        available: preset_names().join(", "),
    };
    let (case, variant) = name.split_once('.').ok_or_else(unknown)?;
    let ratio = CASES.iter().find(|(c, _)| *c == case).ok_or_else(unknown)?.1;
    let mut cfg = base_config(ratio);
    cfg.name = name.to_string();
    match variant {
        "standalone" => cfg.mode = Mode::StandaloneTn,
        "relief" => cfg.mode = Mode::TnRelief,
        "partition" => cfg.mode = Mode::TnUlPartition,
        _ => {
            let rest = variant.strip_prefix("offload_").ok_or_else(unknown)?;
            let (elev, frf) = match rest {
                "90_frf1" => (90.0, 1),
                "90_frf3" => (90.0, 3),
                "87_frf1" => (87.0, 1),
                "87_frf3" => (87.0, 3),
                _ => return Err(unknown()),
            };
            cfg.mode = Mode::TnNtnOffload;
            cfg.deployment.elevation_deg = elev;
            cfg.deployment.frf = frf;
            let band = if frf == 1 { 30.0 } else { 10.0 };
            cfg.spectrum.ntn_dl_mhz = band;
            cfg.spectrum.ntn_ul_mhz = band;
        }
    }
    Ok(cfg)
}
