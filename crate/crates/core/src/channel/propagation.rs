use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::constants::{interp, ChannelConstants};
use crate::error::{Error, Result};
use crate::geometry::{slant_range, EarthModel};
use crate::units::SPEED_OF_LIGHT;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LinkClass {
    TnGue,
    TnUav,
    NtnGue,
    NtnUav,
}

impl LinkClass {
    pub fn is_ntn(self) -> bool {
        matches!(self, LinkClass::NtnGue | LinkClass::NtnUav)
    }

    pub fn is_uav(self) -> bool {
        matches!(self, LinkClass::TnUav | LinkClass::NtnUav)
    }
}

/// Geometry of one link. `elevation_deg` is only read for satellite links.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkGeometry {
    pub d2d: f64,
    pub d3d: f64,
    pub tx_height: f64,
    pub rx_height: f64,
    pub elevation_deg: f64,
}

impl LinkGeometry {
    pub fn terrestrial(d2d: f64, tx_height: f64, rx_height: f64) -> Self {
        Self {
            d2d,
            d3d: d2d.hypot(tx_height - rx_height),
            tx_height,
            rx_height,
            elevation_deg: 90.0,
        }
    }
}

enum TnRegime {
    Ground,
    Aerial,
}

fn tn_regime(c: &ChannelConstants, h: f64) -> Result<TnRegime> {
    if h >= c.uma.min_height_m && h <= c.uma.max_height_m {
        Ok(TnRegime::Ground)
    } else if h > c.uma_aerial.min_height_m && h <= c.uma_aerial.max_height_m {
        Ok(TnRegime::Aerial)
    } else {
        Err(Error::out_of_range(
            "user height (m)",
            h,
            format!("[{}, {}]", c.uma.min_height_m, c.uma_aerial.max_height_m),
        ))
    }
}

/// LoS probability of a satellite link at the given elevation.
pub fn ntn_los_probability(c: &ChannelConstants, class: LinkClass, elevation_deg: f64) -> f64 {
    if class == LinkClass::NtnUav && c.ntn.uav_always_los {
        return 1.0;
    }
    interp(&c.ntn.elevation_grid_deg, &c.ntn.los_probability, elevation_deg)
}

pub fn los_probability(c: &ChannelConstants, class: LinkClass, g: &LinkGeometry) -> Result<f64> {
    if class.is_ntn() {
        return Ok(ntn_los_probability(c, class, g.elevation_deg));
    }
    let h = g.rx_height;
    let d = g.d2d;
    match tn_regime(c, h)? {
        TnRegime::Ground => {
            let u = &c.uma;
            if d <= u.los_near_distance_m {
                return Ok(1.0);
            }
            let c_h = if h <= u.los_height_threshold_m {
                0.0
            } else {
                ((h - u.los_height_threshold_m) / 10.0).powf(1.5)
            };
            let base = u.los_near_distance_m / d + (-d / u.los_decay_m).exp() * (1.0 - u.los_near_distance_m / d);
            Ok(base * (1.0 + c_h * 1.25 * (d / 100.0).powi(3) * (-d / 150.0).exp()))
        }
        TnRegime::Aerial => {
            let a = &c.uma_aerial;
            if h > a.always_los_above_m {
                return Ok(1.0);
            }
            let lh = h.log10();
            let d1 = (a.los_d1_coef * lh - a.los_d1_offset).max(a.los_d1_min_m);
            let p1 = a.los_p1_coef * lh - a.los_p1_offset;
            if d <= d1 {
                Ok(1.0)
            } else {
                Ok(d1 / d + (-d / p1).exp() * (1.0 - d1 / d))
            }
        }
    }
}

/// Terrestrial path loss in dB. NLoS never falls below LoS at equal geometry.
pub fn tn_path_loss(c: &ChannelConstants, los: bool, g: &LinkGeometry, fc_ghz: f64) -> Result<f64> {
    if !(g.d3d > 0.0) {
        return Err(Error::out_of_range("d3d", g.d3d, "(0, inf)"));
    }
    let h = g.rx_height;
    let f = 20.0 * fc_ghz.log10();
    let ld = g.d3d.log10();
    match tn_regime(c, h)? {
        TnRegime::Ground => {
            let u = &c.uma;
            let he = u.effective_env_height_m;
            let d_bp = 4.0 * (g.tx_height - he) * (h - he) * fc_ghz * 1e9 / SPEED_OF_LIGHT;
            let pl_los = if g.d2d <= d_bp {
                u.los_intercept_db + u.los_slope * ld + f
            } else {
                u.los_intercept_db + u.los_far_slope * ld + f
                    - u.los_breakpoint_coef * (d_bp * d_bp + (g.tx_height - h).powi(2)).log10()
            };
            if los {
                Ok(pl_los)
            } else {
                let nlos = u.nlos_intercept_db + u.nlos_slope * ld + f - u.nlos_height_coef * (h - 1.5);
                Ok(pl_los.max(nlos))
            }
        }
        TnRegime::Aerial => {
            let a = &c.uma_aerial;
            let lh = h.log10();
            let pl_los = a.los_intercept_db + (a.los_slope - a.los_height_slope * lh) * ld + f;
            if los {
                Ok(pl_los)
            } else {
                let nlos = a.nlos_intercept_db
                    + (a.nlos_slope - a.nlos_height_slope * lh) * ld
                    + 20.0 * (40.0 * std::f64::consts::PI * fc_ghz / 3.0).log10();
                Ok(pl_los.max(nlos))
            }
        }
    }
}

/// Free-space path loss, `32.45 + 20 log10(fc / GHz) + 20 log10(d / m)`.
pub fn fspl_db(distance_m: f64, fc_ghz: f64) -> f64 {
    32.45 + 20.0 * fc_ghz.log10() + 20.0 * distance_m.log10()
}

/// Mean LoS satellite path loss at the nominal slant range: free space plus
/// atmospheric absorption (zenith value / sin(elevation)) plus scintillation.
pub fn ntn_path_loss(c: &ChannelConstants, elevation_deg: f64, fc_ghz: f64, earth: &EarthModel) -> Result<f64> {
    let d = slant_range(elevation_deg, earth)?;
    Ok(fspl_db(d, fc_ghz) + ntn_extra_losses(c, elevation_deg))
}

pub(crate) fn ntn_extra_losses(c: &ChannelConstants, elevation_deg: f64) -> f64 {
    c.ntn.atmospheric_zenith_db / elevation_deg.to_radians().sin() + c.ntn.scintillation_db
}

pub(crate) fn ntn_clutter_loss(c: &ChannelConstants, los: bool, elevation_deg: f64) -> f64 {
    if los {
        0.0
    } else {
        interp(&c.ntn.elevation_grid_deg, &c.ntn.clutter_loss_nlos_db, elevation_deg)
    }
}

/// Shadow-fading standard deviation in dB.
pub fn shadow_sigma(c: &ChannelConstants, class: LinkClass, los: bool, g: &LinkGeometry) -> Result<f64> {
    if class.is_ntn() {
        let table = if los { &c.ntn.sigma_los_db } else { &c.ntn.sigma_nlos_db };
        return Ok(interp(&c.ntn.elevation_grid_deg, table, g.elevation_deg));
    }
    Ok(match tn_regime(c, g.rx_height)? {
        TnRegime::Ground => {
            if los {
                c.uma.sigma_los_db
            } else {
                c.uma.sigma_nlos_db
            }
        }
        TnRegime::Aerial => {
            let a = &c.uma_aerial;
            if los {
                a.sigma_los_coef_db * (-a.sigma_los_decay_per_m * g.rx_height).exp()
            } else {
                a.sigma_nlos_db
            }
        }
    })
}

/// Zero-mean Gaussian shadowing sample in dB.
pub fn shadow_draw<R: Rng + ?Sized>(
    c: &ChannelConstants,
    class: LinkClass,
    los: bool,
    g: &LinkGeometry,
    rng: &mut R,
) -> Result<f64> {
    let sigma = shadow_sigma(c, class, los, g)?;
    let z: f64 = rng.sample(StandardNormal);
    Ok(sigma * z)
}

/// Outdoor-to-indoor penetration loss for a user `indoor_distance` metres
/// inside a low-loss building; `z` is the user's standard-normal draw.
pub fn o2i_loss(c: &ChannelConstants, fc_ghz: f64, indoor_distance: f64, z: f64) -> f64 {
    let o = &c.o2i;
    let glass = o.glass_loss_db + o.glass_loss_per_ghz * fc_ghz;
    let concrete = o.concrete_loss_db + o.concrete_loss_per_ghz * fc_ghz;
    let wall = o.wall_offset_db
        - 10.0
            * (o.glass_fraction * 10f64.powf(-glass / 10.0) + (1.0 - o.glass_fraction) * 10f64.powf(-concrete / 10.0))
                .log10();
    wall + o.indoor_loss_per_m * indoor_distance + o.sigma_db * z
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c() -> ChannelConstants {
        ChannelConstants::default()
    }

    #[test]
    fn uav_at_150m_is_always_los() {
        for d in [0.0, 100.0, 1000.0, 5000.0] {
            let g = LinkGeometry::terrestrial(d, 25.0, 150.0);
            assert_eq!(los_probability(&c(), LinkClass::TnUav, &g).unwrap(), 1.0);
        }
    }

    #[test]
    fn ground_los_probability() {
        let p0 = los_probability(&c(), LinkClass::TnGue, &LinkGeometry::terrestrial(0.0, 25.0, 1.5)).unwrap();
        assert_eq!(p0, 1.0);
        // 18/500 + exp(-500/63) (1 - 18/500), hand-evaluated
        let p500 = los_probability(&c(), LinkClass::TnGue, &LinkGeometry::terrestrial(500.0, 25.0, 1.5)).unwrap();
        assert!((p500 - 0.036_344_584_26).abs() < 1e-9, "{p500}");
        let mut prev = 1.0;
        for d in (20..3000).step_by(10) {
            let p = los_probability(&c(), LinkClass::TnGue, &LinkGeometry::terrestrial(d as f64, 25.0, 1.5)).unwrap();
            assert!(p <= prev + 1e-15);
            prev = p;
        }
    }

    #[test]
    fn aerial_intermediate_height() {
        // h = 50 m: d1 = max(460 log10 50 - 700, 18) = 81.5 m
        let g = LinkGeometry::terrestrial(50.0, 25.0, 50.0);
        assert_eq!(los_probability(&c(), LinkClass::TnUav, &g).unwrap(), 1.0);
        let g = LinkGeometry::terrestrial(1000.0, 25.0, 50.0);
        let p = los_probability(&c(), LinkClass::TnUav, &g).unwrap();
        assert!(p > 0.0 && p < 1.0);
    }

    #[test]
    fn aerial_los_formula() {
        let g = LinkGeometry {
            d2d: 1000f64.powi(2).sub_sqrt(125.0),
            d3d: 1000.0,
            tx_height: 25.0,
            rx_height: 150.0,
            elevation_deg: 90.0,
        };
        let pl = tn_path_loss(&c(), true, &g, 2.0).unwrap();
        // 30.9 + (22.25 - 0.5 log10 150) * 3 + 20 log10 2
        let want = 30.9 + (22.25 - 0.5 * 150f64.log10()) * 3.0 + 20.0 * 2f64.log10();
        assert!((pl - want).abs() < 1e-12);
        assert!((pl - 100.406_463_02).abs() < 1e-6, "{pl}");
        let nlos = tn_path_loss(&c(), false, &g, 2.0).unwrap();
        assert!(nlos >= pl);
    }

    trait SubSqrt {
        fn sub_sqrt(self, dz: f64) -> f64;
    }
    impl SubSqrt for f64 {
        fn sub_sqrt(self, dz: f64) -> f64 {
            (self - dz * dz).sqrt()
        }
    }

    #[test]
    fn aerial_doubling_distance() {
        let g1 = LinkGeometry::terrestrial(800.0, 25.0, 150.0);
        let mut g2 = g1;
        g2.d3d *= 2.0;
        let d = tn_path_loss(&c(), true, &g2, 2.0).unwrap() - tn_path_loss(&c(), true, &g1, 2.0).unwrap();
        let slope = 22.25 - 0.5 * 150f64.log10();
        assert!((d - slope * 2f64.log10()).abs() < 1e-12);
    }

    #[test]
    fn ground_path_loss_monotone_and_nlos_above_los() {
        for h in [1.5, 10.5, 22.5] {
            for los in [true, false] {
                let mut prev = f64::NEG_INFINITY;
                for d in (10..5000).step_by(7) {
                    let g = LinkGeometry::terrestrial(d as f64, 25.0, h);
                    let pl = tn_path_loss(&c(), los, &g, 2.0).unwrap();
                    assert!(pl > prev, "h {h} los {los} d {d}");
                    prev = pl;
                    if !los {
                        assert!(pl >= tn_path_loss(&c(), true, &g, 2.0).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn ground_breakpoint_is_continuous() {
        let d_bp = 4.0 * 24.0 * 0.5 * 2e9 / SPEED_OF_LIGHT;
        let a = tn_path_loss(&c(), true, &LinkGeometry::terrestrial(d_bp - 1e-6, 25.0, 1.5), 2.0).unwrap();
        let b = tn_path_loss(&c(), true, &LinkGeometry::terrestrial(d_bp + 1e-6, 25.0, 1.5), 2.0).unwrap();
        assert!((a - b).abs() < 1e-6);
    }

    #[test]
    fn height_validity() {
        let e = tn_path_loss(&c(), true, &LinkGeometry::terrestrial(100.0, 25.0, 400.0), 2.0).unwrap_err();
        assert!(e.to_string().contains("[1.5, 300]"), "{e}");
        assert!(tn_path_loss(&c(), true, &LinkGeometry::terrestrial(100.0, 25.0, 0.5), 2.0).is_err());
    }

    #[test]
    fn satellite_path_loss() {
        let earth = EarthModel::new(600e3).unwrap();
        assert!((fspl_db(600e3, 2.0) - 154.0).abs() < 0.1);
        let p90 = ntn_path_loss(&c(), 90.0, 2.0, &earth).unwrap();
        assert!((p90 - (fspl_db(600e3, 2.0) + 0.04 + 2.2)).abs() < 1e-12);
        let p87 = ntn_path_loss(&c(), 87.0, 2.0, &earth).unwrap();
        let f87 = fspl_db(slant_range(87.0, &earth).unwrap(), 2.0);
        assert!((f87 - (fspl_db(600e3, 2.0) + 20.0 * (600.752_406_66f64 / 600.0).log10())).abs() < 1e-6);
        assert!((f87 - 154.04).abs() < 0.01);
        assert!(p87 > p90);
        let mut prev = f64::INFINITY;
        for e in 1..=90 {
            let p = ntn_path_loss(&c(), e as f64, 2.0, &earth).unwrap();
            assert!(p < prev);
            prev = p;
        }
        assert!(ntn_path_loss(&c(), 0.0, 2.0, &earth).is_err());
    }

    #[test]
    fn shadowing_statistics() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = LinkGeometry::terrestrial(300.0, 25.0, 1.5);
        let n = 100_000;
        let xs: Vec<f64> = (0..n)
            .map(|_| shadow_draw(&c(), LinkClass::TnGue, false, &g, &mut rng).unwrap())
            .collect();
        let mean = xs.iter().sum::<f64>() / n as f64;
        let sd = (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt();
        assert!(mean.abs() < 0.05, "{mean}");
        assert!((sd / 6.0 - 1.0).abs() < 0.02, "{sd}");
    }

    #[test]
    fn zero_sigma_gives_zero() {
        let mut consts = c();
        consts.uma.sigma_los_db = 0.0;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = LinkGeometry::terrestrial(300.0, 25.0, 1.5);
        for _ in 0..100 {
            assert_eq!(shadow_draw(&consts, LinkClass::TnGue, true, &g, &mut rng).unwrap(), 0.0);
        }
    }

    #[test]
    fn o2i_positive_at_zero_draw() {
        // 5 - 10 log10(0.3 * 10^-0.24 + 0.7 * 10^-1.3) at 2 GHz, d_in = 0
        let l = o2i_loss(&c(), 2.0, 0.0, 0.0);
        assert!((l - 11.825_319_57).abs() < 1e-6, "{l}");
        assert!((o2i_loss(&c(), 2.0, 10.0, 0.0) - l - 5.0).abs() < 1e-12);
    }
}
