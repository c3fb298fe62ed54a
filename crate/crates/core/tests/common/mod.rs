//! Shared fixtures for the integration and acceptance targets.
#![allow(dead_code)]

use ntnsim::engine::{preset, ScenarioConfig};
use ntnsim::radio::{Association, CellId, Densities, GainMatrix, Network};

/// A preset shrunk to a few sites so a drop takes milliseconds.
pub fn small(name: &str, area_km2: f64, n_drops: usize) -> ScenarioConfig {
    let mut c = preset(name).unwrap();
    c.deployment.area_km2 = area_km2;
    c.run.n_drops = n_drops;
    c
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

/// Two TN cells, one beam, four users with fixed linear gains.
///
/// Users 0 and 1 are served by cell 0 and cell 1, user 2 by cell 1 and
/// user 3 by the beam.
pub struct Toy {
    pub tn: [[f64; 2]; 4],
    pub ntn: [[f64; 1]; 4],
    pub ul_tx: [f64; 4],
    pub densities: Densities,
    pub serving: [CellId; 4],
}

impl Toy {
    pub fn new() -> Self {
        Self {
            tn: [[3.1e-9, 4.7e-11], [2.2e-12, 8.9e-10], [6.3e-13, 1.4e-10], [0.0, 0.0]],
            ntn: [[0.0], [0.0], [0.0], [2.5e-13]],
            ul_tx: [2.0e-9, 5.5e-10, 1.1e-8, 5.5e-7],
            densities: Densities {
                tn_dl_tx: 10f64.powf(1.6) / 1e7,
                ntn_dl_tx: 10f64.powf(0.4) / 1e6,
                ue_noise: 10f64.powf(-16.5) * 1e-3,
                bs_noise: 10f64.powf(-16.7) * 1e-3,
                sat_noise: 1.380_649e-23 * 776.247,
            },
            serving: [CellId::Tn(0), CellId::Tn(1), CellId::Tn(1), CellId::Ntn(0)],
        }
    }

    pub fn parts(&self) -> (GainMatrix, GainMatrix, Association) {
        let tn = GainMatrix::from_rows(self.tn.iter().map(|r| r.to_vec()).collect(), 2).unwrap();
        let ntn = GainMatrix::from_rows(self.ntn.iter().map(|r| r.to_vec()).collect(), 1).unwrap();
        let assoc = Association::new(self.serving.to_vec(), 2, 1).unwrap();
        (tn, ntn, assoc)
    }

    pub fn network<'a>(&'a self, tn: &'a GainMatrix, ntn: &'a GainMatrix, assoc: &'a Association) -> Network<'a> {
        Network {
            tn_gain: tn,
            ntn_gain: ntn,
            assoc,
            beam_bands: &[0],
            ul_tx: &self.ul_tx,
            densities: self.densities,
        }
    }

    // Brute-force reference values, written out term by term.

    pub fn dl_tn(&self, k: usize) -> f64 {
        let d = &self.densities;
        let own = if k == 0 { 0 } else { 1 };
        let other = 1 - own;
        d.tn_dl_tx * self.tn[k][own] / (d.tn_dl_tx * self.tn[k][other] + d.ue_noise)
    }

    pub fn dl_ntn(&self) -> f64 {
        let d = &self.densities;
        d.ntn_dl_tx * self.ntn[3][0] / d.ue_noise
    }

    /// User `k` at its cell with user `j` transmitting in the other cell.
    pub fn ul_tn(&self, k: usize, j: usize) -> f64 {
        let d = &self.densities;
        let own = if k == 0 { 0 } else { 1 };
        self.ul_tx[k] * self.tn[k][own] / (self.ul_tx[j] * self.tn[j][own] + d.bs_noise)
    }

    pub fn ul_ntn(&self) -> f64 {
        self.ul_tx[3] * self.ntn[3][0] / self.densities.sat_noise
    }
}
