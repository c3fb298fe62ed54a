//! Decibel helpers and physical constants.

/// Boltzmann constant, J/K.
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Speed of light, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

#[inline]
pub fn db_to_lin(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

#[inline]
pub fn lin_to_db(lin: f64) -> f64 {
    10.0 * lin.log10()
}

#[inline]
pub fn dbm_to_watt(dbm: f64) -> f64 {
    db_to_lin(dbm - 30.0)
}

#[inline]
pub fn watt_to_dbm(w: f64) -> f64 {
    lin_to_db(w) + 30.0
}

/// Thermal noise power in watts over `bandwidth_hz` for a receiver with the
/// given noise density (dBm/Hz) and noise figure (dB).
pub fn thermal_noise_watt(density_dbm_hz: f64, bandwidth_hz: f64, noise_figure_db: f64) -> f64 {
    dbm_to_watt(density_dbm_hz + lin_to_db(bandwidth_hz) + noise_figure_db)
}

/// Noise power k_B * T * B in watts.
pub fn ktb_noise_watt(temperature_k: f64, bandwidth_hz: f64) -> f64 {
    BOLTZMANN * temperature_k * bandwidth_hz
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn db_roundtrip() {
        for x in [-174.0, -3.0, 0.0, 23.0, 46.0] {
            assert!((lin_to_db(db_to_lin(x)) - x).abs() < 1e-12);
        }
        assert!((dbm_to_watt(30.0) - 1.0).abs() < 1e-15);
        assert!((watt_to_dbm(0.001)).abs() < 1e-12);
    }

    #[test]
    fn thermal_noise_10mhz() {
        // -174 + 70 + 9 = -95 dBm
        let n = thermal_noise_watt(-174.0, 10e6, 9.0);
        assert!((watt_to_dbm(n) + 95.0).abs() < 1e-9);
    }
}
