use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Outcome of muting the dominant interferers of one UAV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Relief {
    /// Muted cells, strongest first.
    pub muted: Vec<usize>,
    pub sinr_before: f64,
    pub sinr_after: f64,
}

/// Greedily mutes the strongest interferers (received power, W/Hz) until the
/// SINR reaches `threshold_db` or nothing is left to mute.
pub fn tn_interference_relief(signal: f64, interferers: &[(usize, f64)], noise: f64, threshold_db: f64) -> Relief {
    let threshold = 10f64.powf(threshold_db / 10.0);
    let mut sorted = interferers.to_vec();
    sorted.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    // tail[i]: interference left once the i strongest are muted, summed from
    // the weakest upwards.
    let mut tail = vec![0.0; sorted.len() + 1];
    for i in (0..sorted.len()).rev() {
        tail[i] = tail[i + 1] + sorted[i].1;
    }
    let sinr_before = signal / (tail[0] + noise);
    let mut m = 0;
    while m < sorted.len() && signal / (tail[m] + noise) < threshold {
        m += 1;
    }
    Relief {
        muted: sorted[..m].iter().map(|&(c, _)| c).collect(),
        sinr_before,
        sinr_after: signal / (tail[m] + noise),
    }
}

/// Uplink band split of one cell between its UAVs and its GUEs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Partition {
    /// Fraction of the band reserved for UAVs.
    pub fraction: f64,
    /// The target could not be met for every UAV within the band.
    pub saturated: bool,
    /// Time-frequency resources `eta * B` (Hz) granted to each UAV.
    pub uav_resources_hz: Vec<f64>,
}

/// Smallest band fraction giving every UAV `target_bps`, given each UAV's
/// spectral efficiency (bit/s/Hz) on the reserved resources. Rates are
/// linear in `eta * B`, so UAV `k` needs `target / se_k` Hz. When the total
/// exceeds the band the cell is saturated and the band is split in
/// proportion to need.
pub fn ul_resource_partition(uav_spectral_eff: &[f64], band_hz: f64, target_bps: f64) -> Result<Partition> {
    if !(target_bps > 0.0) {
        return Err(Error::out_of_range("uav target rate", target_bps, "(0, inf)"));
    }
    if !(band_hz > 0.0) {
        return Err(Error::out_of_range("uplink band", band_hz, "(0, inf)"));
    }
    let mut capped = false;
    let need: Vec<f64> = uav_spectral_eff
        .iter()
        .map(|&se| {
            let n = if se > 0.0 { target_bps / se } else { f64::INFINITY };
            capped |= n > band_hz;
            n.min(band_hz)
        })
        .collect();
    let total: f64 = need.iter().sum();
    if total <= band_hz {
        Ok(Partition {
            fraction: total / band_hz,
            saturated: capped,
            uav_resources_hz: need,
        })
    } else {
        let scale = band_hz / total;
        Ok(Partition {
            fraction: 1.0,
            saturated: true,
            uav_resources_hz: need.iter().map(|n| n * scale).collect(),
        })
    }
}
