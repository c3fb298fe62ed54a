use super::association::{Association, CellId};
use super::gain::GainMatrix;
use crate::error::{Error, Result};

/// Transmit and noise power spectral densities, W/Hz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Densities {
    /// Downlink transmit density of every TN cell.
    pub tn_dl_tx: f64,
    /// Downlink transmit density of every NTN beam, before antenna gain.
    pub ntn_dl_tx: f64,
    /// User receiver noise including its noise figure.
    pub ue_noise: f64,
    /// TN base-station receiver noise including its noise figure.
    pub bs_noise: f64,
    /// Satellite receiver noise, `k_B * T`.
    pub sat_noise: f64,
}

/// Immutable state of one drop needed to evaluate any SINR.
#[derive(Debug, Clone, Copy)]
pub struct Network<'a> {
    pub tn_gain: &'a GainMatrix,
    pub ntn_gain: &'a GainMatrix,
    pub assoc: &'a Association,
    /// Frequency band of every NTN beam.
    pub beam_bands: &'a [usize],
    /// Uplink transmit density of every user, `P_k / B_k`.
    pub ul_tx: &'a [f64],
    pub densities: Densities,
}

fn tn_server(net: &Network<'_>, k: usize) -> Result<usize> {
    match net.assoc.serving.get(k) {
        Some(CellId::Tn(t)) => Ok(*t),
        _ => Err(Error::NotScheduled(k)),
    }
}

fn ntn_server(net: &Network<'_>, k: usize) -> Result<usize> {
    match net.assoc.serving.get(k) {
        Some(CellId::Ntn(n)) => Ok(*n),
        _ => Err(Error::NotScheduled(k)),
    }
}

/// Downlink SINR of a TN-served user; every other TN cell interferes at full
/// power. `fading(cell)` is `|h|^2` of the link from `cell` to the user.
pub fn sinr_dl_tn(net: &Network<'_>, k: usize, fading: impl Fn(usize) -> f64) -> Result<f64> {
    let t = tn_server(net, k)?;
    let p = net.densities.tn_dl_tx;
    let g = net.tn_gain.row(k);
    let signal = p * g[t] * fading(t);
    let interference: f64 = g
        .iter()
        .enumerate()
        .filter(|&(c, _)| c != t)
        .map(|(c, &gc)| p * gc * fading(c))
        .sum();
    Ok(signal / (interference + net.densities.ue_noise))
}

/// Downlink SINR of an NTN-served user; only co-band beams interfere.
pub fn sinr_dl_ntn(net: &Network<'_>, k: usize) -> Result<f64> {
    let n = ntn_server(net, k)?;
    let p = net.densities.ntn_dl_tx;
    let g = net.ntn_gain.row(k);
    let band = net.beam_bands[n];
    let signal = p * g[n];
    let interference: f64 = (0..g.len())
        .filter(|&m| m != n && net.beam_bands[m] == band)
        .map(|m| p * g[m])
        .sum();
    Ok(signal / (interference + net.densities.ue_noise))
}

/// Uplink SINR at the serving TN cell of user `k`, with `co_scheduled` the
/// users of other TN cells transmitting on the same PRB. `fading(j)` is
/// `|h|^2` of the link from user `j` to the serving cell.
pub fn sinr_ul_tn(net: &Network<'_>, k: usize, co_scheduled: &[usize], fading: impl Fn(usize) -> f64) -> Result<f64> {
    let t = tn_server(net, k)?;
    let signal = net.ul_tx[k] * net.tn_gain.get(k, t) * fading(k);
    let mut interference = 0.0;
    for &j in co_scheduled {
        match net.assoc.serving.get(j) {
            Some(CellId::Tn(c)) if *c != t && j != k => {}
            _ => {
                return Err(Error::Config(format!(
                    "user {j} cannot interfere on the uplink of TN cell {t}"
                )))
            }
        }
        interference += net.ul_tx[j] * net.tn_gain.get(j, t) * fading(j);
    }
    Ok(signal / (interference + net.densities.bs_noise))
}

/// Uplink SINR at the serving beam of user `k`; `co_scheduled` are users of
/// other beams in the same band transmitting on the same PRB.
pub fn sinr_ul_ntn(net: &Network<'_>, k: usize, co_scheduled: &[usize]) -> Result<f64> {
    let n = ntn_server(net, k)?;
    let band = net.beam_bands[n];
    let signal = net.ul_tx[k] * net.ntn_gain.get(k, n);
    let mut interference = 0.0;
    for &j in co_scheduled {
        match net.assoc.serving.get(j) {
            Some(CellId::Ntn(m)) if *m != n && net.beam_bands[*m] == band => {}
            _ => {
                return Err(Error::Config(format!(
                    "user {j} cannot interfere on the uplink of beam {n}"
                )))
            }
        }
        interference += net.ul_tx[j] * net.ntn_gain.get(j, n);
    }
    Ok(signal / (interference + net.densities.sat_noise))
}

/// `E[log2(1 + SINR)]` over the supplied fading realizations.
pub fn mean_spectral_efficiency(sinr: &[f64]) -> f64 {
    if sinr.is_empty() {
        return 0.0;
    }
    sinr.iter().map(|s| (1.0 + s).log2()).sum::<f64>() / sinr.len() as f64
}

/// Achievable rate `eta * B * E[log2(1 + SINR)]` in bit/s.
pub fn rate(eta: f64, bandwidth_hz: f64, sinr: &[f64]) -> f64 {
    debug_assert!((0.0..=1.0).contains(&eta) && bandwidth_hz > 0.0);
    eta * bandwidth_hz * mean_spectral_efficiency(sinr)
}
