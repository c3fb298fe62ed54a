use serde::{Deserialize, Serialize};

use super::constants::ChannelConstants;
use super::propagation::{
    fspl_db, los_probability, ntn_clutter_loss, ntn_extra_losses, o2i_loss, shadow_sigma, tn_path_loss, LinkClass,
    LinkGeometry,
};
use crate::antenna::{ReflectorPattern, SectorArrayPattern, VerticalCut, USER_ANTENNA_GAIN_DBI};
use crate::error::{Error, Result};
use crate::geometry::{off_boresight_angle, BeamGrid, EarthModel, User, Vec3};

/// Large-scale budget of one link; `composite` is the linear power gain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkGain {
    pub path_loss_db: f64,
    pub shadow_db: f64,
    /// Atmospheric, scintillation and building-penetration losses.
    pub extra_losses_db: f64,
    pub tx_gain_dbi: f64,
    pub rx_gain_dbi: f64,
    pub composite: f64,
}

impl LinkGain {
    pub fn new(path_loss_db: f64, shadow_db: f64, extra_losses_db: f64, tx_gain_dbi: f64, rx_gain_dbi: f64) -> Self {
        let db = tx_gain_dbi + rx_gain_dbi - path_loss_db - shadow_db - extra_losses_db;
        Self {
            path_loss_db,
            shadow_db,
            extra_losses_db,
            tx_gain_dbi,
            rx_gain_dbi,
            composite: 10f64.powf(db / 10.0),
        }
    }

    pub fn composite_db(&self) -> f64 {
        self.tx_gain_dbi + self.rx_gain_dbi - self.path_loss_db - self.shadow_db - self.extra_losses_db
    }
}

/// Random inputs of one link: a uniform for the LoS state and standard
/// normals for shadowing and building penetration.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LinkDraws {
    pub los_uniform: f64,
    pub shadow_z: f64,
    pub o2i_z: f64,
}

#[derive(Debug, Clone, Copy)]
pub enum Transmitter<'a> {
    TnSector {
        site: [f64; 2],
        bs_height: f64,
        azimuth_deg: f64,
    },
    NtnBeam {
        grid: &'a BeamGrid,
        beam: usize,
    },
}

/// Quantities shared by the three sectors of one site towards one user.
#[derive(Debug, Clone, Copy)]
pub struct TnSiteLink {
    pub class: LinkClass,
    pub geometry: LinkGeometry,
    pub los: bool,
    pub path_loss_db: f64,
    pub sigma_db: f64,
    pub cut: VerticalCut,
    /// Direction from the site to the user, degrees counter-clockwise from +x.
    pub azimuth_deg: f64,
}

/// Quantities shared by the seven beams of the satellite towards one user.
#[derive(Debug, Clone, Copy)]
pub struct NtnUserLink {
    pub class: LinkClass,
    pub elevation_deg: f64,
    pub distance: f64,
    pub los: bool,
    /// Free-space loss plus clutter loss when NLoS.
    pub path_loss_db: f64,
    /// Atmospheric and scintillation losses.
    pub extra_losses_db: f64,
    pub sigma_db: f64,
}

#[derive(Debug, Clone)]
pub struct ChannelModel {
    pub constants: ChannelConstants,
    pub carrier_ghz: f64,
    pub earth: EarthModel,
    pub sector: SectorArrayPattern,
    pub reflector: ReflectorPattern,
    /// When false every shadowing sample is zero.
    pub shadowing: bool,
}

impl ChannelModel {
    pub fn tn_class(user: &User) -> LinkClass {
        if user.is_uav() {
            LinkClass::TnUav
        } else {
            LinkClass::TnGue
        }
    }

    pub fn ntn_class(user: &User) -> LinkClass {
        if user.is_uav() {
            LinkClass::NtnUav
        } else {
            LinkClass::NtnGue
        }
    }

    /// Building penetration of `user` (zero unless an indoor GUE).
    pub fn penetration_db(&self, user: &User, z: f64) -> f64 {
        if user.indoor && !user.is_uav() {
            o2i_loss(&self.constants, self.carrier_ghz, user.indoor_distance, z)
        } else {
            0.0
        }
    }

    pub fn tn_site_link(&self, site: [f64; 2], bs_height: f64, user: &User, los_uniform: f64) -> Result<TnSiteLink> {
        let class = Self::tn_class(user);
        let dx = user.position.x - site[0];
        let dy = user.position.y - site[1];
        let d2d_out = dx.hypot(dy);
        let d2d = d2d_out + if user.indoor { user.indoor_distance } else { 0.0 };
        let geometry = LinkGeometry::terrestrial(d2d, bs_height, user.height());
        let p = los_probability(&self.constants, class, &geometry)?;
        let los = los_uniform < p;
        let path_loss_db = tn_path_loss(&self.constants, los, &geometry, self.carrier_ghz)?;
        let sigma_db = if self.shadowing {
            shadow_sigma(&self.constants, class, los, &geometry)?
        } else {
            0.0
        };
        let theta = d2d_out.atan2(user.height() - bs_height).to_degrees();
        Ok(TnSiteLink {
            class,
            geometry,
            los,
            path_loss_db,
            sigma_db,
            cut: self.sector.vertical_cut(theta),
            azimuth_deg: dy.atan2(dx).to_degrees(),
        })
    }

    pub fn tn_sector_gain(
        &self,
        link: &TnSiteLink,
        sector_azimuth_deg: f64,
        shadow_z: f64,
        penetration_db: f64,
    ) -> LinkGain {
        let tx = self
            .sector
            .gain_from_cut(&link.cut, link.azimuth_deg - sector_azimuth_deg);
        LinkGain::new(
            link.path_loss_db,
            link.sigma_db * shadow_z,
            penetration_db,
            tx,
            USER_ANTENNA_GAIN_DBI,
        )
    }

    pub fn ntn_user_link(&self, grid: &BeamGrid, user: &User, los_uniform: f64) -> Result<NtnUserLink> {
        let class = Self::ntn_class(user);
        let d = grid.satellite_position - user.position;
        let distance = d.norm();
        if distance < 1e-9 {
            return Err(Error::Geometry("user coincides with the satellite".into()));
        }
        let up = (user.position - self.earth.centre()).unit();
        let elevation_deg = (d.dot(up) / distance).clamp(-1.0, 1.0).asin().to_degrees();
        if !(elevation_deg > 0.0) {
            return Err(Error::Geometry(format!(
                "satellite below the horizon of a user ({elevation_deg:.3} deg)"
            )));
        }
        let geometry = LinkGeometry {
            d2d: d.horizontal_norm(),
            d3d: distance,
            tx_height: self.earth.orbit_altitude,
            rx_height: user.height(),
            elevation_deg,
        };
        let p = los_probability(&self.constants, class, &geometry)?;
        let los = los_uniform < p;
        let sigma_db = if self.shadowing {
            shadow_sigma(&self.constants, class, los, &geometry)?
        } else {
            0.0
        };
        Ok(NtnUserLink {
            class,
            elevation_deg,
            distance,
            los,
            path_loss_db: fspl_db(distance, self.carrier_ghz) + ntn_clutter_loss(&self.constants, los, elevation_deg),
            extra_losses_db: ntn_extra_losses(&self.constants, elevation_deg),
            sigma_db,
        })
    }

    pub fn ntn_beam_gain(
        &self,
        link: &NtnUserLink,
        grid: &BeamGrid,
        beam: usize,
        user_position: Vec3,
        shadow_z: f64,
        penetration_db: f64,
    ) -> Result<LinkGain> {
        let boresight = *grid
            .boresights
            .get(beam)
            .ok_or_else(|| Error::out_of_range("beam index", beam as f64, "[0, 6]"))?;
        let off = off_boresight_angle(boresight, user_position, grid.satellite_position)?;
        Ok(LinkGain::new(
            link.path_loss_db,
            link.sigma_db * shadow_z,
            link.extra_losses_db + penetration_db,
            self.reflector.gain_db(off),
            USER_ANTENNA_GAIN_DBI,
        ))
    }

    /// Full budget of one transmitter-user link.
    pub fn link_gain(&self, tx: &Transmitter<'_>, user: &User, draws: &LinkDraws) -> Result<LinkGain> {
        let pen = self.penetration_db(user, draws.o2i_z);
        match *tx {
            Transmitter::TnSector {
                site,
                bs_height,
                azimuth_deg,
            } => {
                let link = self.tn_site_link(site, bs_height, user, draws.los_uniform)?;
                Ok(self.tn_sector_gain(&link, azimuth_deg, draws.shadow_z, pen))
            }
            Transmitter::NtnBeam { grid, beam } => {
                let link = self.ntn_user_link(grid, user, draws.los_uniform)?;
                self.ntn_beam_gain(&link, grid, beam, user.position, draws.shadow_z, pen)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_beam_grid, UserKind};
    use crate::units::lin_to_db;

    fn model(shadowing: bool) -> ChannelModel {
        ChannelModel {
            constants: ChannelConstants::default(),
            carrier_ghz: 2.0,
            earth: EarthModel::new(600e3).unwrap(),
            sector: SectorArrayPattern::default(),
            reflector: ReflectorPattern::new(30.0, 4.41).unwrap(),
            shadowing,
        }
    }

    fn user(kind: UserKind, x: f64, y: f64, z: f64, indoor: bool) -> User {
        User {
            kind,
            position: Vec3::new(x, y, z),
            indoor,
            floor: if indoor { Some(1) } else { None },
            indoor_distance: if indoor { 10.0 } else { 0.0 },
            edge: false,
        }
    }

    #[test]
    fn composite_round_trip() {
        let g = LinkGain::new(120.3, -3.2, 11.0, 14.5, 0.0);
        assert!(((lin_to_db(g.composite) - g.composite_db()) / g.composite_db()).abs() < 1e-9);
        assert!(g.composite > 0.0);
    }

    #[test]
    fn tn_boresight_outdoor_los() {
        let m = model(false);
        // user on the 30 deg sector azimuth, at the electrical tilt below the array
        let d = 23.5 / 12f64.to_radians().tan();
        let u = user(
            UserKind::Gue,
            d * 30f64.to_radians().cos(),
            d * 30f64.to_radians().sin(),
            1.5,
            false,
        );
        let tx = Transmitter::TnSector {
            site: [0.0, 0.0],
            bs_height: 25.0,
            azimuth_deg: 30.0,
        };
        let g = m.link_gain(&tx, &u, &LinkDraws::default()).unwrap();
        let link = m.tn_site_link([0.0, 0.0], 25.0, &u, 0.0).unwrap();
        assert!(link.los);
        let boresight = 8.0 - 12.0 * (12.0f64 / 65.0).powi(2) + 10.0;
        assert!((g.tx_gain_dbi - boresight).abs() < 1e-9);
        assert!((g.composite_db() - (boresight - g.path_loss_db)).abs() < 1e-9);
        assert_eq!(g.shadow_db, 0.0);
        assert_eq!(g.extra_losses_db, 0.0);
    }

    #[test]
    fn indoor_below_outdoor_twin() {
        let m = model(false);
        let tx = Transmitter::TnSector {
            site: [0.0, 0.0],
            bs_height: 25.0,
            azimuth_deg: 30.0,
        };
        let out = user(UserKind::Gue, 150.0, 80.0, 1.5, false);
        let mut ind = out.clone();
        ind.indoor = true;
        ind.floor = Some(1);
        ind.indoor_distance = 0.0;
        let d = LinkDraws::default();
        let go = m.link_gain(&tx, &out, &d).unwrap();
        let gi = m.link_gain(&tx, &ind, &d).unwrap();
        assert!(gi.composite < go.composite);
        assert!(gi.extra_losses_db > 0.0);
    }

    #[test]
    fn uav_never_penetrated() {
        let m = model(true);
        let mut u = user(UserKind::Uav, 100.0, 100.0, 150.0, false);
        assert_eq!(m.penetration_db(&u, 2.0), 0.0);
        u.indoor = true;
        assert_eq!(m.penetration_db(&u, 2.0), 0.0);
    }

    #[test]
    fn uav_ntn_nadir_beam_centre() {
        let m = model(false);
        let grid = build_beam_grid(90.0, 4.41, 4.41, 0.0, 1, &m.earth, [0.0, 0.0]).unwrap();
        let u = user(UserKind::Uav, 0.0, 0.0, 0.0, false);
        let tx = Transmitter::NtnBeam { grid: &grid, beam: 0 };
        let g = m.link_gain(&tx, &u, &LinkDraws::default()).unwrap();
        assert!((g.tx_gain_dbi - 30.0).abs() < 1e-9);
        assert!((g.path_loss_db - 154.034).abs() < 1e-3);
        assert!((g.extra_losses_db - 2.24).abs() < 1e-9);
        assert!((g.composite_db() - (30.0 - g.path_loss_db - 2.24)).abs() < 1e-9);
    }

    #[test]
    fn ntn_gue_nlos_adds_clutter() {
        let m = model(false);
        let grid = build_beam_grid(90.0, 4.41, 4.41, 0.0, 1, &m.earth, [0.0, 0.0]).unwrap();
        let u = user(UserKind::Gue, 0.0, 0.0, 1.5, false);
        let los = m.ntn_user_link(&grid, &u, 0.0).unwrap();
        let nlos = m.ntn_user_link(&grid, &u, 0.999).unwrap();
        assert!(los.los && !nlos.los);
        assert!((nlos.path_loss_db - los.path_loss_db - 25.5).abs() < 1e-9);
    }

    #[test]
    fn disabled_shadowing_is_deterministic() {
        let m = model(false);
        let tx = Transmitter::TnSector {
            site: [0.0, 0.0],
            bs_height: 25.0,
            azimuth_deg: 150.0,
        };
        let u = user(UserKind::Gue, -300.0, 20.0, 1.5, false);
        let d = LinkDraws {
            los_uniform: 0.5,
            shadow_z: 1.7,
            o2i_z: 0.0,
        };
        let a = m.link_gain(&tx, &u, &d).unwrap();
        let b = m.link_gain(&tx, &u, &d).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.shadow_db, 0.0);
    }
}
