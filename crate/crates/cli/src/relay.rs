use sigtime_core::relay::{
    db_range, grid_cases, sweep, CrossTerm, GeometryMode, LogBase, ScenarioConfig, SearchSettings,
};

use crate::output::{emit, real, Table};
use crate::{Failure, Globals, Outcome};

#[derive(clap::Subcommand)]
pub enum Command {
    /// Sweep total power and report signal-time and decode-and-forward rates.
    ///
    /// Flags override values from --config, which override built-in defaults.
    /// Distances are in metres, bandwidth in Hz, power in dB (noise power 1).
    Sweep(SweepArgs),
}

#[derive(clap::Args)]
pub struct SweepArgs {
    /// Base source-destination distance, metres.
    #[arg(long)]
    d: Option<f64>,
    /// Relay position ratios in (0, 1), comma separated.
    #[arg(long, value_delimiter = ',')]
    kappa: Option<Vec<f64>>,
    /// Detour factors > 1, comma separated.
    #[arg(long, value_delimiter = ',')]
    a: Option<Vec<f64>>,
    /// Normalized time resolutions B*dT, comma separated.
    #[arg(long, value_delimiter = ',')]
    ntr: Option<Vec<f64>>,
    /// Total power in dB as START:END:STEP or a single value.
    #[arg(long, value_name = "RANGE", default_value = "1:50:0.5")]
    p_db: String,
    /// Path-loss exponent.
    #[arg(long)]
    alpha: Option<f64>,
    /// Bandwidth, Hz.
    #[arg(long, alias = "B")]
    bandwidth: Option<f64>,
    /// Bits carried per slot pair by the time code.
    #[arg(long)]
    bits_per_pulse_pair: Option<f64>,
    /// Direct-link distance: direct_d or paper_formula.
    #[arg(long)]
    geometry: Option<String>,
    /// Source power in the relay baseline's coherent term: sd2 or sd1.
    #[arg(long)]
    cross_term: Option<String>,
    /// Logarithm of the relay baseline: nats or bits.
    #[arg(long)]
    df_log: Option<String>,
    /// Coarse samples per axis for the relay baseline search.
    #[arg(long, default_value_t = SearchSettings::default().df_grid)]
    df_grid: usize,
    /// Coarse samples of the power split before refinement.
    #[arg(long, default_value_t = SearchSettings::default().zeta_grid)]
    zeta_grid: usize,
}

const COLUMNS: [&str; 16] = [
    "p_db",
    "snr_db",
    "kappa",
    "a",
    "ntr",
    "r_gc",
    "r_st_norm",
    "u_two_norm",
    "gamma",
    "zeta_star",
    "t_star",
    "r_star",
    "beta_star",
    "geometry_mode",
    "cross_term",
    "df_log",
];

fn parse_range(text: &str) -> Result<Vec<f64>, Failure> {
    let bad = |msg: String| Failure::usage("--p-db", msg);
    let nums = text
        .split(':')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad(format!("expected START:END:STEP or a number, got {text:?}")))?;
    match nums[..] {
        [p] if p.is_finite() => Ok(vec![p]),
        [start, end, step] => db_range(start, end, step).map_err(|e| bad(e.to_string())),
        _ => Err(bad(format!(
            "expected START:END:STEP or a number, got {text:?}"
        ))),
    }
}

fn keyword<T: std::str::FromStr<Err = sigtime_core::Error>>(
    flag: &'static str,
    value: &Option<String>,
    slot: &mut T,
) -> Result<(), Failure> {
    if let Some(v) = value {
        *slot = v
            .parse()
            .map_err(|e: sigtime_core::Error| Failure::usage(flag, e.to_string()))?;
    }
    Ok(())
}

fn check_all(
    flag: &'static str,
    values: &[f64],
    ok: impl Fn(f64) -> bool,
    rule: &str,
) -> Result<(), Failure> {
    match values.iter().find(|&&v| !ok(v)) {
        Some(v) => Err(Failure::usage(flag, format!("{rule}, got {v}"))),
        None => Ok(()),
    }
}

fn scenario(args: &SweepArgs, globals: &Globals) -> Result<ScenarioConfig, Failure> {
    let mut cfg = ScenarioConfig::default();
    if let Some(path) = &globals.config {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Failure::usage("--config", format!("cannot read {}: {e}", path.display()))
        })?;
        cfg = cfg
            .apply_text(&text)
            .map_err(|e| Failure::usage("--config", e.to_string()))?;
    }
    let positive = |v: f64| v.is_finite() && v > 0.0;
    for (flag, value, slot) in [
        ("--d", args.d, &mut cfg.d),
        ("--alpha", args.alpha, &mut cfg.alpha),
        ("--bandwidth", args.bandwidth, &mut cfg.bandwidth),
    ] {
        if let Some(v) = value {
            check_all(flag, &[v], positive, "must be positive")?;
            *slot = v;
        }
    }
    if let Some(w) = args.bits_per_pulse_pair {
        check_all(
            "--bits-per-pulse-pair",
            &[w],
            |v| v.is_finite() && v >= 0.0,
            "must be non-negative",
        )?;
        cfg.bits_per_pulse_pair = w;
    }
    keyword::<GeometryMode>("--geometry", &args.geometry, &mut cfg.geometry)?;
    keyword::<CrossTerm>("--cross-term", &args.cross_term, &mut cfg.cross_term)?;
    keyword::<LogBase>("--df-log", &args.df_log, &mut cfg.df_log)?;
    Ok(cfg)
}

pub fn run(cmd: &Command, globals: &Globals) -> Outcome {
    let Command::Sweep(args) = cmd;
    let cfg = scenario(args, globals)?;
    let kappas = args.kappa.clone().unwrap_or(vec![cfg.kappa]);
    let detours = args.a.clone().unwrap_or(vec![cfg.a]);
    let ntrs = args.ntr.clone().unwrap_or(vec![cfg.ntr]);
    check_all(
        "--kappa",
        &kappas,
        |v| v > 0.0 && v < 1.0,
        "must lie in (0, 1)",
    )?;
    check_all(
        "--a",
        &detours,
        |v| v.is_finite() && v > 1.0,
        "must exceed 1",
    )?;
    check_all(
        "--ntr",
        &ntrs,
        |v| v.is_finite() && v > 0.0,
        "must be positive",
    )?;
    let p_db = parse_range(&args.p_db)?;
    for (flag, points) in [("--df-grid", args.df_grid), ("--zeta-grid", args.zeta_grid)] {
        if points < 2 {
            return Err(Failure::usage(
                flag,
                format!("need at least 2 samples, got {points}"),
            ));
        }
    }
    let settings = SearchSettings {
        df_grid: args.df_grid,
        zeta_grid: args.zeta_grid,
        ..SearchSettings::default()
    };

    let cases = grid_cases(&kappas, &detours, &ntrs);
    let rows = sweep(&cfg, &p_db, &cases, &settings).map_err(Failure::module("relay"))?;
    let mut csv = Table::new(&COLUMNS);
    for r in rows {
        csv.row(vec![
            real(r.p_db),
            real(r.snr_direct_db),
            real(r.kappa),
            real(r.a),
            real(r.ntr),
            real(r.r_gc),
            real(r.r_st_normalized),
            real(r.u_two_normalized),
            real(r.gamma),
            real(r.zeta_star),
            real(r.t_star),
            real(r.r_star),
            real(r.beta_star),
            cfg.geometry.to_string(),
            cfg.cross_term.to_string(),
            cfg.df_log.to_string(),
        ]);
    }
    emit(&csv.into_string(), globals.csv.as_deref()).map_err(|error| Failure::Module {
        module: "relay",
        error,
    })
}
