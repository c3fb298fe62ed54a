//! Deployment geometry: hexagonal TN layout, LEO beam grid, user drops.
//!
//! TN geometry lives in a flat local tangent frame (x east, y north, z up)
//! whose origin is the centre of the urban area on the ground. The Earth is
//! only treated as a sphere for the satellite: its centre sits at
//! `(0, 0, -earth_radius)` in the same frame.

mod ntn;
mod tn;
mod users;
mod vec3;

pub use ntn::{build_beam_grid, nadir_angle, off_boresight_angle, slant_range, BeamGrid, EarthModel};
pub use tn::{build_tn_layout, tn_cell_area, AreaBound, TnCell, TnLayout, SECTOR_AZIMUTHS_DEG};
pub use users::{drop_users, TrafficParams, User, UserKind, OUTDOOR_HEIGHT_M};
pub use vec3::Vec3;
