//! Achievable rates of the three-node half-duplex Gaussian relay network.

use crate::error::{Error, Result};

use super::config::{CrossTerm, LogBase, ScenarioConfig};
use super::link::{path_gains, shannon, LinkBudget};
use super::optimize::{golden_section_max, maximize_unit, Argmax, DEFAULT_X_TOL};

/// Grid densities and tolerance for the deterministic optimizers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchSettings {
    /// Samples per axis of the coarse `(r, beta)` grid for the relay baseline.
    pub df_grid: usize,
    /// Samples of `zeta` before refinement.
    pub zeta_grid: usize,
    pub x_tol: f64,
}

impl Default for SearchSettings {
    fn default() -> Self {
        SearchSettings {
            df_grid: 101,
            zeta_grid: 1001,
            x_tol: DEFAULT_X_TOL,
        }
    }
}

/// Decode-and-forward relaying over a half-duplex Gaussian relay channel.
///
/// In a fraction `t` of the time the relay listens: the relay sees `P_SR`,
/// the destination `P_SD1`. In the rest the relay sends with power share
/// `beta`; the destination sees `P_SD2 = (1 - beta) p_sd` from the source and
/// `P_RD = beta p_rd` from the relay, with correlation `r` between them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DfChannel {
    pub p_sr: f64,
    pub p_sd: f64,
    pub p_rd: f64,
    pub log: LogBase,
    pub cross: CrossTerm,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DfOptimum {
    pub rate: f64,
    pub t: f64,
    pub r: f64,
    pub beta: f64,
}

impl DfChannel {
    pub fn from_config(cfg: &ScenarioConfig) -> Self {
        let (g1, g2, g3) = path_gains(cfg);
        DfChannel {
            p_sr: cfg.power * g1,
            p_sd: cfg.power * g3,
            p_rd: cfg.power * g2,
            log: cfg.df_log,
            cross: cfg.cross_term,
        }
    }

    fn cap(&self, x: f64) -> f64 {
        self.log.half_log1p(x.max(0.0))
    }

    // (relay-side, destination-side) rates while the relay listens
    fn listen_rates(&self) -> (f64, f64) {
        (self.cap(self.p_sr), self.cap(self.p_sd))
    }

    // (relay-side, destination-side) rates while the relay transmits
    fn relay_rates(&self, r: f64, beta: f64) -> (f64, f64) {
        let p_sd2 = (1.0 - beta) * self.p_sd;
        let p_rd = beta * self.p_rd;
        let paired = match self.cross {
            CrossTerm::PhaseTwo => p_sd2,
            CrossTerm::FullSource => self.p_sd,
        };
        let coherent = 2.0 * r * (paired * p_rd).sqrt();
        (
            self.cap((1.0 - r * r) * p_sd2),
            self.cap(p_sd2 + p_rd + coherent),
        )
    }

    /// The decode-and-forward rate for fixed `(t, r, beta)`.
    pub fn objective(&self, t: f64, r: f64, beta: f64) -> f64 {
        let (a, c) = self.listen_rates();
        let (b, e) = self.relay_rates(r, beta);
        (t * a + (1.0 - t) * b).min(t * c + (1.0 - t) * e)
    }

    /// Exact maximization over `t` of the minimum of two affine functions.
    pub fn best_t(&self, r: f64, beta: f64) -> (f64, f64) {
        let (a, c) = self.listen_rates();
        let (b, e) = self.relay_rates(r, beta);
        let mut best = (0.0, b.min(e));
        let at_one = a.min(c);
        if at_one > best.1 {
            best = (1.0, at_one);
        }
        let slope_gap = (a - b) - (c - e);
        if slope_gap != 0.0 {
            let t = (e - b) / slope_gap;
            if t > 0.0 && t < 1.0 {
                let v = (b + t * (a - b)).min(e + t * (c - e));
                if v > best.1 {
                    best = (t, v);
                }
            }
        }
        best
    }

    /// Coarse `(r, beta)` grid with `t` solved exactly, then golden-section
    /// refinement of `beta` around the best cell with `r` re-optimized at
    /// every probe.
    pub fn optimize(&self, settings: &SearchSettings) -> DfOptimum {
        let g = settings.df_grid.max(2);
        let step = 1.0 / (g - 1) as f64;
        let mut best = DfOptimum {
            rate: f64::NEG_INFINITY,
            t: 0.0,
            r: 0.0,
            beta: 0.0,
        };
        for ib in 0..g {
            let beta = ib as f64 * step;
            for ir in 0..g {
                let r = ir as f64 * step;
                let (t, v) = self.best_t(r, beta);
                if v > best.rate {
                    best = DfOptimum {
                        rate: v,
                        t,
                        r,
                        beta,
                    };
                }
            }
        }

        let best_r = |beta: f64| maximize_unit(|r| self.best_t(r, beta).1, g, settings.x_tol);
        let lo = (best.beta - step).max(0.0);
        let hi = (best.beta + step).min(1.0);
        let beta = golden_section_max(|b| best_r(b).value, lo, hi, settings.x_tol).x;
        let Argmax { x: r, .. } = best_r(beta);
        let (t, rate) = self.best_t(r, beta);
        if rate > best.rate {
            best = DfOptimum { rate, t, r, beta };
        }
        best
    }
}

/// Decode-and-forward baseline `R_GC`, per channel use.
pub fn r_gc(cfg: &ScenarioConfig) -> DfOptimum {
    r_gc_with(cfg, &SearchSettings::default())
}

pub fn r_gc_with(cfg: &ScenarioConfig, settings: &SearchSettings) -> DfOptimum {
    DfChannel::from_config(cfg).optimize(settings)
}

/// Signal-time rate from the three link capacities (bits/s):
/// two-hop flow, the schedule-coded flow, and the direct flow.
pub fn signal_time_rate(c1: f64, c2: f64, c3: f64, weight: f64, delta_t: f64) -> f64 {
    let sum = c1 + c2;
    if sum <= 0.0 {
        return 0.0;
    }
    let two_hop = c1 * c2 / sum;
    let coded = if two_hop > 0.0 {
        two_hop * weight / (c1.max(c2) * delta_t)
    } else {
        0.0
    };
    two_hop + coded + c2 * c3 / sum
}

/// Full-power SNRs of the three links plus the time-domain parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignalTimeLinks {
    pub snr_sr: f64,
    pub snr_rd: f64,
    pub snr_sd: f64,
    pub bandwidth: f64,
    /// Minimum detectable slot length in seconds.
    pub delta_t: f64,
    pub weight: f64,
}

impl SignalTimeLinks {
    pub fn from_config(cfg: &ScenarioConfig) -> Self {
        let (g1, g2, g3) = path_gains(cfg);
        SignalTimeLinks {
            snr_sr: cfg.power * g1,
            snr_rd: cfg.power * g2,
            snr_sd: cfg.power * g3,
            bandwidth: cfg.bandwidth,
            delta_t: cfg.ntr / cfg.bandwidth,
            weight: cfg.bits_per_pulse_pair,
        }
    }

    pub fn capacities(&self, zeta: f64) -> (f64, f64, f64) {
        (
            shannon(self.bandwidth, zeta * self.snr_sr),
            shannon(self.bandwidth, self.snr_rd),
            shannon(self.bandwidth, (1.0 - zeta) * self.snr_sd),
        )
    }

    pub fn rate(&self, zeta: f64) -> f64 {
        let (c1, c2, c3) = self.capacities(zeta);
        signal_time_rate(c1, c2, c3, self.weight, self.delta_t)
    }

    pub fn optimize(&self, settings: &SearchSettings) -> Argmax {
        maximize_unit(|z| self.rate(z), settings.zeta_grid, settings.x_tol)
    }
}

fn check_unit(name: &str, v: f64) -> Result<()> {
    if (0.0..=1.0).contains(&v) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must lie in [0, 1], got {v}")))
    }
}

/// Signal-time rate `R_ST` in bits/s at source power split `zeta`.
pub fn r_st(cfg: &ScenarioConfig, zeta: f64) -> Result<f64> {
    check_unit("zeta", zeta)?;
    Ok(SignalTimeLinks::from_config(cfg).rate(zeta))
}

/// `sup_zeta R_ST` and its maximizer.
pub fn r_st_opt(cfg: &ScenarioConfig) -> Argmax {
    r_st_opt_with(cfg, &SearchSettings::default())
}

pub fn r_st_opt_with(cfg: &ScenarioConfig, settings: &SearchSettings) -> Argmax {
    SignalTimeLinks::from_config(cfg).optimize(settings)
}

/// The half-duplex two-hop flow and the bounds around it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoHopChain {
    /// `min{C1, C2} / 2`
    pub lower: f64,
    /// `C1 C2 / (C1 + C2)`
    pub flow: f64,
    /// `min{max{C1, C2} / 2, min{C1, C2}}`
    pub upper: f64,
}

impl TwoHopChain {
    pub fn new(c1: f64, c2: f64) -> Self {
        let (lo, hi) = if c1 <= c2 { (c1, c2) } else { (c2, c1) };
        let flow = if c1 + c2 > 0.0 {
            c1 * c2 / (c1 + c2)
        } else {
            0.0
        };
        TwoHopChain {
            lower: 0.5 * lo,
            flow,
            upper: (0.5 * hi).min(lo),
        }
    }

    /// Smallest slack of `lower <= flow <= upper`; non-negative when it holds.
    pub fn slack(&self) -> f64 {
        (self.flow - self.lower).min(self.upper - self.flow)
    }
}

/// Full-power two-hop chain for the scenario geometry (bits/s).
pub fn two_hop_chain(cfg: &ScenarioConfig) -> TwoHopChain {
    let full = LinkBudget::new(cfg, 1.0, 0.0);
    TwoHopChain::new(full.c1, full.c2)
}

/// Two-hop upper bound `U_two` in bits/s.
pub fn two_hop_bound(cfg: &ScenarioConfig) -> f64 {
    two_hop_chain(cfg).upper
}

/// Bits delivered per period by each sub-flow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfoAmounts {
    pub two_hop: f64,
    pub time_coded: f64,
    pub direct: f64,
}

impl InfoAmounts {
    pub fn total(&self) -> f64 {
        self.two_hop + self.time_coded + self.direct
    }
}

pub fn info_amounts(cfg: &ScenarioConfig, zeta: f64, period: f64) -> Result<InfoAmounts> {
    check_unit("zeta", zeta)?;
    if !(period.is_finite() && period > 0.0) {
        return Err(Error::Domain(format!("T must be positive, got {period}")));
    }
    let links = SignalTimeLinks::from_config(cfg);
    let (c1, c2, c3) = links.capacities(zeta);
    let sum = c1 + c2;
    if sum <= 0.0 {
        return Ok(InfoAmounts {
            two_hop: 0.0,
            time_coded: 0.0,
            direct: 0.0,
        });
    }
    let two_hop = c1 * c2 / sum * period;
    let time_coded = if two_hop > 0.0 {
        two_hop * links.weight / (c1.max(c2) * links.delta_t)
    } else {
        0.0
    };
    Ok(InfoAmounts {
        two_hop,
        time_coded,
        direct: c2 * c3 / sum * period,
    })
}
