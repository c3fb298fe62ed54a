//! Radiation patterns: 3GPP sector element, downtilted vertical ULA, and a
//! circular-aperture reflector for the satellite beams. User terminals are
//! isotropic (0 dBi).

mod bessel;
mod reflector;
mod sector;

pub use bessel::bessel_j1;
pub use reflector::ReflectorPattern;
pub use sector::{SectorArrayPattern, VerticalCut};

/// Gain of the omnidirectional user antenna.
pub const USER_ANTENNA_GAIN_DBI: f64 = 0.0;

/// Linear amplitude floor used where a pattern has an exact null, so that
/// gains stay finite in dB.
pub(crate) const AMPLITUDE_FLOOR: f64 = 1e-15;
