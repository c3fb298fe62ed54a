//! Radio resource management: association and offloading, uplink power
//! control, round-robin scheduling, per-PRB SINR for the four link types,
//! achievable rate, and the two terrestrial baseline mechanisms (downlink
//! interference relief by cell muting, uplink resource partitioning).
//!
//! Signals are expressed as power spectral densities (W/Hz), so a per-PRB
//! SINR is independent of the PRB width as long as transmitter and noise
//! densities are consistent.

mod association;
mod baseline;
mod gain;
mod power;
mod schedule;
mod sinr;

pub use association::{associate_offloaded, associate_standalone_tn, Association, CellId};
pub use baseline::{tn_interference_relief, ul_resource_partition, Partition, Relief};
pub use gain::GainMatrix;
pub use power::PowerControl;
pub use schedule::{schedule_cell, CellSchedule, Grant, PRB_BANDWIDTH_HZ};
pub use sinr::{mean_spectral_efficiency, rate, sinr_dl_ntn, sinr_dl_tn, sinr_ul_ntn, sinr_ul_tn, Densities, Network};
