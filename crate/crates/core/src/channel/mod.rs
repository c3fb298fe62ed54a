//! Large-scale gain composition and small-scale fading for every link class.
//!
//! Ground users follow the terrestrial urban-macro model, UAVs above 22.5 m
//! the aerial urban-macro model, satellite links free-space loss plus
//! atmospheric and scintillation terms with elevation-indexed urban tables.
//! All model constants come from [`ChannelConstants`].

mod constants;
mod fading;
mod link;
mod propagation;

pub use constants::{AerialConstants, ChannelConstants, NtnConstants, O2iConstants, UmaConstants, CONSTANTS_VERSION};
pub use fading::{fading_draw, rayleigh_power};
pub use link::{ChannelModel, LinkDraws, LinkGain, NtnUserLink, TnSiteLink, Transmitter};
pub use propagation::{
    fspl_db, los_probability, ntn_los_probability, ntn_path_loss, o2i_loss, shadow_draw, shadow_sigma, tn_path_loss,
    LinkClass, LinkGeometry,
};
