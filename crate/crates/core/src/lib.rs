//! System-level Monte Carlo simulator of an integrated terrestrial (TN) and
//! LEO satellite (NTN) network serving ground users and UAVs at 2 GHz.
//!
//! The pipeline for one drop is
//! layout -> user drop -> large-scale gains -> association -> power control
//! -> scheduling -> per-PRB SINR -> rates, and the [`engine`] aggregates many
//! independent drops into CDFs, outage fractions and rate statistics.

// `!(x > 0.0)` deliberately rejects NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod antenna;
pub mod channel;
pub mod cli_io;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod radio;
pub mod rng;
pub mod units;

pub use error::{Error, Result};
