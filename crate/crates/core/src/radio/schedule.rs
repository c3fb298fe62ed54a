use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Uplink allocation per scheduled user.
pub const PRB_BANDWIDTH_HZ: f64 = 360e3;

/// Time share `eta` and bandwidth of one user's allocation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grant {
    pub user: usize,
    pub eta: f64,
    pub bandwidth_hz: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CellSchedule {
    pub dl: Vec<Grant>,
    pub ul: Vec<Grant>,
    /// Users transmitting simultaneously in the uplink.
    pub n_ul_simultaneous: usize,
}

impl CellSchedule {
    pub fn dl_grant(&self, user: usize) -> Option<&Grant> {
        self.dl.iter().find(|g| g.user == user)
    }

    pub fn ul_grant(&self, user: usize) -> Option<&Grant> {
        self.ul.iter().find(|g| g.user == user)
    }
}

/// Round robin over `users` in a randomized order. Downlink: each user gets
/// the whole band for a `1/|U|` time share. Uplink: up to `B_ul / 360 kHz`
/// users transmit at once on 360 kHz each, sharing time equally.
pub fn schedule_cell<R: Rng + ?Sized>(users: &[usize], dl_band_hz: f64, ul_band_hz: f64, rng: &mut R) -> CellSchedule {
    if users.is_empty() {
        return CellSchedule::default();
    }
    let mut order = users.to_vec();
    order.shuffle(rng);
    let n = order.len();
    let slots = (ul_band_hz / PRB_BANDWIDTH_HZ + 1e-9).floor() as usize;
    let n_ul = slots.min(n);
    let dl = order
        .iter()
        .map(|&user| Grant {
            user,
            eta: 1.0 / n as f64,
            bandwidth_hz: dl_band_hz,
        })
        .collect();
    let ul = order
        .iter()
        .map(|&user| Grant {
            user,
            eta: n_ul as f64 / n as f64,
            bandwidth_hz: PRB_BANDWIDTH_HZ,
        })
        .collect();
    CellSchedule {
        dl,
        ul,
        n_ul_simultaneous: n_ul,
    }
}
