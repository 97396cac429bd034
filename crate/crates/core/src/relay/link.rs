use crate::error::{Error, Result};

use super::config::{GeometryMode, ScenarioConfig};

/// Capacity of a real Gaussian link in bits per channel use, `log2(1 + x) / 2`.
pub fn gauss_cap(snr: f64) -> Result<f64> {
    if snr.is_nan() || snr < 0.0 {
        return Err(Error::Domain(format!(
            "SNR must be non-negative, got {snr}"
        )));
    }
    Ok(0.5 * snr.log2_1p())
}

trait Log2OnePlus {
    fn log2_1p(self) -> f64;
}

impl Log2OnePlus for f64 {
    fn log2_1p(self) -> f64 {
        self.ln_1p() / std::f64::consts::LN_2
    }
}

/// `B log2(1 + snr)` in bits per second.
pub fn shannon(bandwidth: f64, snr: f64) -> f64 {
    bandwidth * snr.log2_1p()
}

/// Distances, received powers and link capacities for one power split.
///
/// `zeta` is the share of source power aimed at the relay while the relay
/// listens; `beta` the relay's share of total power while it transmits.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkBudget {
    pub d1: f64,
    pub d2: f64,
    pub d_direct: f64,
    pub p_sr: f64,
    pub p_sd1: f64,
    pub p_sd2: f64,
    pub p_rd: f64,
    /// Source-relay capacity at power `zeta P`.
    pub c1: f64,
    /// Relay-destination capacity at full power.
    pub c2: f64,
    /// Direct capacity at power `(1 - zeta) P`.
    pub c3: f64,
}

/// The three path gains `1 / d^alpha` for source-relay, relay-destination and
/// source-destination.
pub fn path_gains(cfg: &ScenarioConfig) -> (f64, f64, f64) {
    let (d1, d2, d3) = distances(cfg);
    (
        d1.powf(-cfg.alpha),
        d2.powf(-cfg.alpha),
        d3.powf(-cfg.alpha),
    )
}

pub fn distances(cfg: &ScenarioConfig) -> (f64, f64, f64) {
    let detour = cfg.a * cfg.d;
    let direct = match cfg.geometry {
        GeometryMode::DirectD => cfg.d,
        GeometryMode::PaperFormula => detour,
    };
    (cfg.kappa * detour, (1.0 - cfg.kappa) * detour, direct)
}

impl LinkBudget {
    pub fn new(cfg: &ScenarioConfig, zeta: f64, beta: f64) -> Self {
        let (d1, d2, d_direct) = distances(cfg);
        let (g1, g2, g3) = path_gains(cfg);
        let p = cfg.power;
        LinkBudget {
            d1,
            d2,
            d_direct,
            p_sr: p * g1,
            p_sd1: p * g3,
            p_sd2: (1.0 - beta) * p * g3,
            p_rd: beta * p * g2,
            c1: shannon(cfg.bandwidth, zeta * p * g1),
            c2: shannon(cfg.bandwidth, p * g2),
            c3: shannon(cfg.bandwidth, (1.0 - zeta) * p * g3),
        }
    }
}

/// Direct-link SNR in dB at full power.
pub fn direct_snr_db(cfg: &ScenarioConfig) -> f64 {
    let (_, _, g3) = path_gains(cfg);
    10.0 * (cfg.power * g3).log10()
}
