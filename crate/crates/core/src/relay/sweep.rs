use rayon::prelude::*;

use crate::error::{Error, Result};

use super::config::ScenarioConfig;
use super::link::direct_snr_db;
use super::rates::{r_gc_with, r_st_opt_with, two_hop_bound, SearchSettings, SignalTimeLinks};

/// Geometry and resolution of one curve in a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepCase {
    pub kappa: f64,
    pub a: f64,
    pub ntr: f64,
}

/// Rates at one sweep point. Normalized rates are divided by `2B`.
#[derive(Debug, Clone, PartialEq)]
pub struct RateReport {
    pub p_db: f64,
    pub snr_direct_db: f64,
    pub kappa: f64,
    pub a: f64,
    pub ntr: f64,
    /// Decode-and-forward baseline per channel use.
    pub r_gc: f64,
    /// Optimal signal-time rate in bits/s.
    pub r_st_opt: f64,
    pub r_st_normalized: f64,
    pub u_two_normalized: f64,
    /// Two-hop flow `C1 C2 / (C1 + C2)` at `zeta*`, bits/s.
    pub time_division_rate: f64,
    pub gamma: f64,
    pub zeta_star: f64,
    pub t_star: f64,
    pub r_star: f64,
    pub beta_star: f64,
}

/// Inclusive range `start, start + step, ..., end` without accumulated drift.
pub fn db_range(start: f64, end: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step.is_finite() && start.is_finite() && end >= start) {
        return Err(Error::Domain(format!(
            "bad range {start}:{end}:{step} (need start <= end and step > 0)"
        )));
    }
    let count = ((end - start) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| start + i as f64 * step).collect())
}

pub fn evaluate_point(cfg: &ScenarioConfig, settings: &SearchSettings) -> RateReport {
    let df = r_gc_with(cfg, settings);
    let st = r_st_opt_with(cfg, settings);
    let (c1, c2, _) = SignalTimeLinks::from_config(cfg).capacities(st.x);
    let time_division_rate = if c1 + c2 > 0.0 {
        c1 * c2 / (c1 + c2)
    } else {
        0.0
    };
    let norm = 2.0 * cfg.bandwidth;
    let r_st_normalized = st.value / norm;
    RateReport {
        p_db: cfg.power_db(),
        snr_direct_db: direct_snr_db(cfg),
        kappa: cfg.kappa,
        a: cfg.a,
        ntr: cfg.ntr,
        r_gc: df.rate,
        r_st_opt: st.value,
        r_st_normalized,
        u_two_normalized: two_hop_bound(cfg) / norm,
        time_division_rate,
        gamma: r_st_normalized / df.rate,
        zeta_star: st.x,
        t_star: df.t,
        r_star: df.r,
        beta_star: df.beta,
    }
}

/// Evaluates every `(case, power)` pair, cases outermost, in input order.
pub fn sweep(
    base: &ScenarioConfig,
    p_db: &[f64],
    cases: &[SweepCase],
    settings: &SearchSettings,
) -> Result<Vec<RateReport>> {
    let points = cases
        .iter()
        .flat_map(|case| {
            p_db.iter().map(move |&p| {
                let cfg = ScenarioConfig {
                    kappa: case.kappa,
                    a: case.a,
                    ntr: case.ntr,
                    ..base.clone()
                };
                (p, cfg.with_power_db(p))
            })
        })
        .collect::<Vec<_>>();
    for (_, cfg) in &points {
        cfg.validate()?;
    }
    Ok(points
        .par_iter()
        .map(|(p, cfg)| RateReport {
            p_db: *p,
            ..evaluate_point(cfg, settings)
        })
        .collect())
}

/// The cartesian product `kappas x as x ntrs` in that nesting order.
pub fn grid_cases(kappas: &[f64], detours: &[f64], ntrs: &[f64]) -> Vec<SweepCase> {
    let mut out = Vec::with_capacity(kappas.len() * detours.len() * ntrs.len());
    for &kappa in kappas {
        for &a in detours {
            for &ntr in ntrs {
                out.push(SweepCase { kappa, a, ntr });
            }
        }
    }
    out
}
