use rand::Rng;
use rand_distr::{Distribution, Poisson};
use serde::{Deserialize, Serialize};

use super::{TnLayout, Vec3};
use crate::error::{Error, Result};

pub const OUTDOOR_HEIGHT_M: f64 = 1.5;
const FLOOR_HEIGHT_M: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UserKind {
    Gue,
    Uav,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct User {
    pub kind: UserKind,
    pub position: Vec3,
    pub indoor: bool,
    /// 1-based floor, indoor GUEs only.
    pub floor: Option<u32>,
    /// Horizontal distance travelled inside the building, indoor GUEs only.
    pub indoor_distance: f64,
    /// Within one ISD of the area boundary.
    pub edge: bool,
}

impl User {
    pub fn is_uav(&self) -> bool {
        self.kind == UserKind::Uav
    }

    pub fn height(&self) -> f64 {
        self.position.z
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrafficParams {
    pub users_per_cell: f64,
    /// UAV-to-GUE ratio (0.071 means one UAV per 14 GUEs).
    pub uav_ratio: f64,
    pub uav_height: f64,
    pub indoor_fraction: f64,
    pub min_floors: u32,
    pub max_floors: u32,
    pub max_indoor_distance: f64,
}

impl Default for TrafficParams {
    fn default() -> Self {
        Self {
            users_per_cell: 15.0,
            uav_ratio: 0.071,
            uav_height: 150.0,
            indoor_fraction: 0.8,
            min_floors: 4,
            max_floors: 8,
            max_indoor_distance: 25.0,
        }
    }
}

impl TrafficParams {
    /// Expected UAV share of the whole population.
    pub fn uav_share(&self) -> f64 {
        self.uav_ratio / (1.0 + self.uav_ratio)
    }
}

/// Drops users uniformly over the area disc.
///
/// The total count is Poisson with mean `users_per_cell * n_cells`; of those,
/// `round(total * ratio / (1 + ratio))` are UAVs. GUEs come first in the
/// returned vector, UAVs last.
pub fn drop_users<R: Rng + ?Sized>(layout: &TnLayout, traffic: &TrafficParams, rng: &mut R) -> Result<Vec<User>> {
    let radius = layout.area_bound.radius;
    if !(radius > 0.0) || layout.cells.is_empty() {
        return Err(Error::Geometry("empty deployment area".into()));
    }
    let mean = traffic.users_per_cell * layout.cells.len() as f64;
    let total = if mean > 0.0 {
        Poisson::new(mean)
            .map_err(|e| Error::Config(format!("users_per_cell: {e}")))?
            .sample(rng) as usize
    } else {
        0
    };
    let n_uav = (total as f64 * traffic.uav_share()).round() as usize;
    let n_gue = total - n_uav;

    let edge_radius = radius - layout.isd;
    let place = |rng: &mut R, z: f64| {
        let r = radius * rng.random::<f64>().sqrt();
        let t = std::f64::consts::TAU * rng.random::<f64>();
        (Vec3::new(r * t.cos(), r * t.sin(), z), r > edge_radius)
    };

    let mut users = Vec::with_capacity(total);
    for _ in 0..n_gue {
        let (mut position, edge) = place(rng, OUTDOOR_HEIGHT_M);
        let indoor = rng.random::<f64>() < traffic.indoor_fraction;
        let (floor, indoor_distance) = if indoor {
            let n_floors = rng.random_range(traffic.min_floors..=traffic.max_floors);
            let floor = rng.random_range(1..=n_floors);
            position.z = OUTDOOR_HEIGHT_M + FLOOR_HEIGHT_M * (floor - 1) as f64;
            (Some(floor), traffic.max_indoor_distance * rng.random::<f64>())
        } else {
            (None, 0.0)
        };
        users.push(User {
            kind: UserKind::Gue,
            position,
            indoor,
            floor,
            indoor_distance,
            edge,
        });
    }
    for _ in 0..n_uav {
        let (position, edge) = place(rng, traffic.uav_height);
        users.push(User {
            kind: UserKind::Uav,
            position,
            indoor: false,
            floor: None,
            indoor_distance: 0.0,
            edge,
        });
    }
    Ok(users)
}
