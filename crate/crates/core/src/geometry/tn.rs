use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Boresight azimuths of the three sectors of every site, degrees from +x.
pub const SECTOR_AZIMUTHS_DEG: [f64; 3] = [30.0, 150.0, 270.0];

/// Area of one sector cell for a given inter-site distance: sqrt(3) * ISD^2 / 6.
pub fn tn_cell_area(isd: f64) -> f64 {
    3f64.sqrt() * isd * isd / 6.0
}

/// Disc of area A_U centred on the local origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AreaBound {
    pub radius: f64,
}

impl AreaBound {
    pub fn from_area(area: f64) -> Self {
        Self {
            radius: (area / std::f64::consts::PI).sqrt(),
        }
    }

    pub fn area(&self) -> f64 {
        std::f64::consts::PI * self.radius * self.radius
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        x.hypot(y) <= self.radius * (1.0 + 1e-12)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TnCell {
    pub site: usize,
    pub azimuth_deg: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TnLayout {
    pub isd: f64,
    pub sites: Vec<[f64; 2]>,
    /// Cells `3 * s .. 3 * s + 3` belong to site `s`.
    pub cells: Vec<TnCell>,
    pub bs_height: f64,
    pub area_bound: AreaBound,
}

impl TnLayout {
    pub fn cell_area(&self) -> f64 {
        tn_cell_area(self.isd)
    }

    pub fn site_of(&self, cell: usize) -> usize {
        self.cells[cell].site
    }
}

/// Hexagonal grid of three-sector sites covering a disc of the given area.
///
/// Every lattice point (spacing `isd`) that falls inside the disc hosts a
/// site, so the cell count tracks `area / A_TN` up to the lattice fluctuation
/// of the outer ring. Sites are ordered by distance from the centre, then by
/// azimuth.
pub fn build_tn_layout(isd: f64, area: f64, bs_height: f64) -> Result<TnLayout> {
    if !(isd > 0.0 && isd.is_finite()) {
        return Err(Error::out_of_range("isd", isd, "(0, inf)"));
    }
    if !(area > 0.0 && area.is_finite()) {
        return Err(Error::out_of_range("area", area, "(0, inf)"));
    }
    if !(bs_height > 0.0) {
        return Err(Error::out_of_range("bs_height", bs_height, "(0, inf)"));
    }
    let bound = AreaBound::from_area(area);
    let rings = (bound.radius / (isd * 3f64.sqrt() / 2.0)).ceil() as i64 + 1;
    let (ax, ay) = (isd, 0.0);
    let (bx, by) = (isd * 0.5, isd * 3f64.sqrt() / 2.0);

    let mut sites = Vec::new();
    for i in -rings..=rings {
        for j in -rings..=rings {
            let x = i as f64 * ax + j as f64 * bx;
            let y = i as f64 * ay + j as f64 * by;
            if bound.contains(x, y) {
                sites.push([x, y]);
            }
        }
    }
    let key = |p: &[f64; 2]| {
        let r = (p[0].hypot(p[1]) * 1e6).round() as i64;
        let mut az = p[1].atan2(p[0]);
        if az < 0.0 {
            az += std::f64::consts::TAU;
        }
        (r, (az * 1e9).round() as i64)
    };
    sites.sort_by_key(key);

    let cells = (0..sites.len())
        .flat_map(|site| {
            SECTOR_AZIMUTHS_DEG
                .iter()
                .map(move |&azimuth_deg| TnCell { site, azimuth_deg })
        })
        .collect();

    Ok(TnLayout {
        isd,
        sites,
        cells,
        bs_height,
        area_bound: bound,
    })
}
