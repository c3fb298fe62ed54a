use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Exp1, StandardNormal};

use super::propagation::LinkClass;

/// Small-scale fading coefficient. Terrestrial ground links are Rayleigh
/// (unit mean power); every other class is pure LoS with `|h| = 1`.
pub fn fading_draw<R: Rng + ?Sized>(class: LinkClass, rng: &mut R) -> Complex64 {
    match class {
        LinkClass::TnGue => {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
        }
        _ => Complex64::new(1.0, 0.0),
    }
}

/// `|h|^2` of a Rayleigh coefficient, drawn directly from its exponential law.
pub fn rayleigh_power<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(Exp1)
}
