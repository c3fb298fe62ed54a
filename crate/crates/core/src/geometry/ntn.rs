use serde::{Deserialize, Serialize};

use super::Vec3;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EarthModel {
    pub earth_radius: f64,
    pub orbit_altitude: f64,
}

impl EarthModel {
    pub const DEFAULT_EARTH_RADIUS: f64 = 6_371_000.0;

    pub fn new(orbit_altitude: f64) -> Result<Self> {
        Self::with_radius(Self::DEFAULT_EARTH_RADIUS, orbit_altitude)
    }

    pub fn with_radius(earth_radius: f64, orbit_altitude: f64) -> Result<Self> {
        if !(earth_radius > 0.0 && earth_radius.is_finite()) {
            return Err(Error::out_of_range("earth_radius", earth_radius, "(0, inf)"));
        }
        if !(orbit_altitude > 0.0 && orbit_altitude.is_finite()) {
            return Err(Error::out_of_range("orbit_altitude", orbit_altitude, "(0, inf)"));
        }
        Ok(Self {
            earth_radius,
            orbit_altitude,
        })
    }

    /// Earth centre in the local tangent frame.
    pub fn centre(&self) -> Vec3 {
        Vec3::new(0.0, 0.0, -self.earth_radius)
    }
}

fn check_elevation(elevation_deg: f64) -> Result<()> {
    if elevation_deg > 0.0 && elevation_deg <= 90.0 {
        Ok(())
    } else {
        Err(Error::out_of_range("elevation", elevation_deg, "(0, 90]"))
    }
}

/// Ground-to-satellite distance at a given elevation angle:
/// `sqrt(R^2 sin^2(e) + h^2 + 2hR) - R sin(e)`.
pub fn slant_range(elevation_deg: f64, earth: &EarthModel) -> Result<f64> {
    check_elevation(elevation_deg)?;
    if elevation_deg == 90.0 {
        return Ok(earth.orbit_altitude);
    }
    let (r, h) = (earth.earth_radius, earth.orbit_altitude);
    let s = elevation_deg.to_radians().sin();
    Ok((r * r * s * s + h * h + 2.0 * h * r).sqrt() - r * s)
}

/// Angle at the satellite between nadir and a ground point seen at the given
/// elevation: `asin(R cos(e) / (R + h))`, degrees.
pub fn nadir_angle(elevation_deg: f64, earth: &EarthModel) -> Result<f64> {
    check_elevation(elevation_deg)?;
    let (r, h) = (earth.earth_radius, earth.orbit_altitude);
    Ok((r * elevation_deg.to_radians().cos() / (r + h)).asin().to_degrees())
}

/// Seven nadir-anchored beams: centre beam plus a hexagonal ring of six.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BeamGrid {
    pub satellite_position: Vec3,
    pub elevation_deg: f64,
    /// Unit vectors; index 0 is the centre (nadir) beam.
    pub boresights: [Vec3; 7],
    pub hpbw_deg: f64,
    /// Angle between the centre boresight and each ring boresight.
    pub ring_offset_deg: f64,
    pub frf: u8,
    pub bands: [usize; 7],
}

impl BeamGrid {
    pub const N_BEAMS: usize = 7;

    /// Beams other than `beam` sharing its band.
    pub fn co_band(&self, beam: usize) -> impl Iterator<Item = usize> + '_ {
        let band = self.bands[beam];
        (0..Self::N_BEAMS).filter(move |&b| b != beam && self.bands[b] == band)
    }

    pub fn n_bands(&self) -> usize {
        self.frf as usize
    }
}

/// Places the satellite so that the area centre sees it at `elevation_deg`,
/// points the centre beam at nadir and lays the ring at `ring_offset_deg`
/// from it, at azimuths `ring_azimuth_deg + k * 60`.
///
/// The satellite is displaced from the area along +x (its ground track).
/// Ring azimuths are measured around the nadir axis from the direction of +x
/// projected onto the plane orthogonal to nadir; azimuth 180 therefore faces
/// the area centre. Under FRF 3 the centre beam uses band 0 and the ring
/// alternates bands 1 and 2.
pub fn build_beam_grid(
    elevation_deg: f64,
    hpbw_deg: f64,
    ring_offset_deg: f64,
    ring_azimuth_deg: f64,
    frf: u8,
    earth: &EarthModel,
    area_center: [f64; 2],
) -> Result<BeamGrid> {
    check_elevation(elevation_deg)?;
    if !(hpbw_deg > 0.0 && hpbw_deg < 90.0) {
        return Err(Error::out_of_range("hpbw", hpbw_deg, "(0, 90)"));
    }
    if !(ring_offset_deg > 0.0 && ring_offset_deg < 90.0) {
        return Err(Error::out_of_range("beam spacing", ring_offset_deg, "(0, 90)"));
    }
    if frf != 1 && frf != 3 {
        return Err(Error::out_of_range("frf", frf as f64, "{1, 3}"));
    }
    let (r, h) = (earth.earth_radius, earth.orbit_altitude);
    let eta = nadir_angle(elevation_deg, earth)?.to_radians();
    // Earth-central angle between the area centre and the sub-satellite point.
    let beta = std::f64::consts::FRAC_PI_2 - elevation_deg.to_radians() - eta;
    let centre = earth.centre();
    let satellite_position = Vec3::new(
        area_center[0] + (r + h) * beta.sin(),
        area_center[1],
        (r + h) * beta.cos() - r,
    );

    let b0 = (centre - satellite_position).unit();
    let x = Vec3::new(1.0, 0.0, 0.0);
    let u = if beta.abs() < 1e-15 {
        x
    } else {
        (x - b0 * x.dot(b0)).unit()
    };
    let v = b0.cross(u);

    let mut boresights = [b0; 7];
    let off = ring_offset_deg.to_radians();
    for (k, b) in boresights.iter_mut().enumerate().skip(1) {
        let az = (ring_azimuth_deg + 60.0 * (k - 1) as f64).to_radians();
        *b = (b0 * off.cos() + (u * az.cos() + v * az.sin()) * off.sin()).unit();
    }

    let bands = if frf == 3 { [0, 1, 2, 1, 2, 1, 2] } else { [0; 7] };

    Ok(BeamGrid {
        satellite_position,
        elevation_deg,
        boresights,
        hpbw_deg,
        ring_offset_deg,
        frf,
        bands,
    })
}

/// Angle between the satellite-to-point direction and a beam boresight.
pub fn off_boresight_angle(boresight: Vec3, point: Vec3, satellite_position: Vec3) -> Result<f64> {
    let d = point - satellite_position;
    if d.norm() < 1e-9 {
        return Err(Error::Geometry("point coincides with the satellite".into()));
    }
    Ok(boresight.angle_deg(d))
}
