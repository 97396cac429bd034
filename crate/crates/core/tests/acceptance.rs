//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test -p sigtime-core --test acceptance`.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sigtime_core::ballot::{brute_force_count, catalan_closed_form, BallotTable};
use sigtime_core::codebook::build_codebook;
use sigtime_core::codeword::Codeword;
use sigtime_core::concat::ConcatScheme;
use sigtime_core::rank::PathCountTable;
use sigtime_core::relay::{
    db_range, grid_cases, r_gc, r_st_opt, sweep, CrossTerm, LogBase, RateReport, ScenarioConfig,
    SearchSettings, SignalTimeLinks, TwoHopChain,
};

/// Pair count of the component block in the rate-loss and storage checks.
const COMPONENT_PAIRS: usize = 60;

struct Outcome {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn outcome(id: u32, name: &'static str, pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        id,
        name,
        pass,
        detail: detail.into(),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn brute_words(n: usize) -> HashSet<String> {
    let len = 2 * n;
    (0u64..1 << len)
        .map(|w| {
            (0..len)
                .map(|p| {
                    if w >> (len - 1 - p) & 1 == 1 {
                        '1'
                    } else {
                        '0'
                    }
                })
                .collect::<String>()
        })
        .filter(|s| {
            let mut h = 0i32;
            for c in s.chars() {
                h += if c == '1' { 1 } else { -1 };
                if h < 0 {
                    return false;
                }
            }
            h == 0
        })
        .collect()
}

fn catalan_identity() -> Outcome {
    let (mismatch, took) = timed(|| {
        let mut table = BallotTable::with_max_n(150);
        (1..=150).find(|&n| table.s_count(n) != catalan_closed_form(n))
    });
    outcome(
        1,
        "S(n) == C(2n,n)/(n+1) exactly for n = 1..150, < 10 s",
        mismatch.is_none() && took < Duration::from_secs(10),
        format!("first mismatch {mismatch:?}, {took:.2?}"),
    )
}

fn oracle_equivalence() -> Outcome {
    let (failures, took) = timed(|| {
        let mut table = BallotTable::new();
        let mut failures = Vec::new();
        for n in 0..=10 {
            if brute_force_count(n).unwrap() != table.s_count(n) {
                failures.push(format!("count n={n}"));
            }
            let book: HashSet<String> = build_codebook(n)
                .unwrap()
                .iter()
                .map(|w| w.to_string())
                .collect();
            if book != brute_words(n) {
                failures.push(format!("book n={n}"));
            }
        }
        failures
    });
    outcome(
        2,
        "brute-force count and codebook set equality, n <= 10, < 60 s",
        failures.is_empty() && took < Duration::from_secs(60),
        format!("failures {failures:?}, {took:.2?}"),
    )
}

fn bits_per_pulse() -> Outcome {
    let bpp = BallotTable::new().rate_figures(150).bits_per_pulse;
    outcome(
        3,
        "bits per pulse at 2n = 300 is 0.9611 +- 5e-5",
        (bpp - 0.9611).abs() <= 5e-5,
        format!("{bpp:.7}"),
    )
}

fn unique_decodability() -> Outcome {
    let mut table = BallotTable::new();
    let mut bad = Vec::new();
    for n in 0..=12 {
        let book = build_codebook(n).unwrap();
        let words: Vec<Codeword> = book.iter().collect();
        let distinct: HashSet<&Codeword> = words.iter().collect();
        let ok = BigUint::from(words.len()) == table.s_count(n)
            && distinct.len() == words.len()
            && words.iter().all(|w| w.is_valid() && w.len() == 2 * n);
        if !ok {
            bad.push(n);
        }
    }
    outcome(
        4,
        "codebook has S(n) distinct valid words, n <= 12",
        bad.is_empty(),
        format!("failing n {bad:?}"),
    )
}

fn rank_bijection() -> Outcome {
    let (failures, took) = timed(|| {
        let mut failures = Vec::new();
        for n in 0..=10 {
            let book = build_codebook(n).unwrap();
            let pct = PathCountTable::new(n);
            for (i, w) in book.iter().enumerate() {
                let i = BigUint::from(i);
                if pct.rank(&w).ok() != Some(i.clone()) || pct.unrank(&i).ok() != Some(w) {
                    failures.push(format!("n={n} i={i}"));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0050);
        for n in [50, 100] {
            let pct = PathCountTable::new(n);
            let total = pct.total().clone();
            let byte_len = total.to_bytes_le().len() + 8;
            for _ in 0..1000 {
                let bytes: Vec<u8> = (0..byte_len).map(|_| rng.random()).collect();
                let i = BigUint::from_bytes_le(&bytes) % &total;
                let w = pct.unrank(&i).unwrap();
                if !w.is_valid() || pct.rank(&w).unwrap() != i {
                    failures.push(format!("n={n} i={i}"));
                }
            }
        }
        failures
    });
    outcome(
        5,
        "rank/unrank bijection: exhaustive n <= 10, 1000 random at n = 50, 100, < 30 s",
        failures.is_empty() && took < Duration::from_secs(30),
        format!("{} failures, {took:.2?}", failures.len()),
    )
}

fn rate_loss() -> Outcome {
    let block = 2 * COMPONENT_PAIRS;
    let worst = |block: usize| {
        (2..=300)
            .step_by(2)
            .map(|len| (len, ConcatScheme::plan(len, block).unwrap().metrics().rho_r))
            .fold((0, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a })
    };
    let (len, rho) = worst(block);
    let (_, rho_symbols) = worst(COMPONENT_PAIRS);
    let at_200 = ConcatScheme::plan(200, block).unwrap().metrics().rho_r;
    outcome(
        6,
        "max rho_R over 2n = 2..300 with L = 60 is < 0.06",
        rho < 0.06,
        format!(
            "max {rho:.5} at 2n={len} (blocks of {block} slots), rho_R(200) = {at_200:.5}; \
             with {COMPONENT_PAIRS}-slot blocks the max would be {rho_symbols:.5}"
        ),
    )
}

fn storage_ratio() -> Outcome {
    let m = ConcatScheme::plan(200, 2 * COMPONENT_PAIRS)
        .unwrap()
        .metrics();
    let literal = ConcatScheme::plan(200, COMPONENT_PAIRS).unwrap().metrics();
    outcome(
        7,
        "rho_M(L = 60, 2n = 200) <= 1e-23",
        m.rho_m <= 1e-23,
        format!(
            "rho_M = {:.4e} (stored {} of {} words); {COMPONENT_PAIRS}-slot blocks: {:.4e}",
            m.rho_m, m.stored_words, m.optimal_words, literal.rho_m
        ),
    )
}

fn full_grid(base: &ScenarioConfig) -> Vec<RateReport> {
    let cases = grid_cases(&[0.35, 0.75], &[1.5, 2.0], &[6.0, 12.0]);
    let p = db_range(1.0, 50.0, 0.5).unwrap();
    sweep(base, &p, &cases, &SearchSettings::default()).unwrap()
}

fn coding_gain(rows: &[RateReport], literal: &[RateReport]) -> Outcome {
    let worst = rows
        .iter()
        .min_by(|a, b| a.gamma.total_cmp(&b.gamma))
        .unwrap();
    let literal_min = literal
        .iter()
        .map(|r| r.gamma)
        .fold(f64::INFINITY, f64::min);
    outcome(
        8,
        "gamma > 1 on the full grid (792 points)",
        rows.iter().all(|r| r.gamma > 1.0),
        format!(
            "min gamma {:.5} at kappa={} a={} ntr={} P={} dB; \
             with a log2 baseline and the P_SD1 cross-term the min is {literal_min:.5}",
            worst.gamma, worst.kappa, worst.a, worst.ntr, worst.p_db
        ),
    )
}

fn two_hop_chain(rows: &[RateReport], base: &ScenarioConfig) -> Outcome {
    let mut min_slack = f64::INFINITY;
    for r in rows {
        let cfg = ScenarioConfig {
            kappa: r.kappa,
            a: r.a,
            ntr: r.ntr,
            ..base.clone()
        }
        .with_power_db(r.p_db);
        let links = SignalTimeLinks::from_config(&cfg);
        for zeta in [1.0, r.zeta_star] {
            let (c1, c2, _) = links.capacities(zeta);
            min_slack = min_slack.min(TwoHopChain::new(c1, c2).slack());
        }
    }
    outcome(
        9,
        "1/2 min <= C1C2/(C1+C2) <= min{1/2 max, min} at every point",
        min_slack >= -1e-12,
        format!("min slack {min_slack:.3e}"),
    )
}

fn resolution_monotone(rows: &[RateReport]) -> Outcome {
    let mut violations = 0;
    let mut pairs = 0;
    for fine in rows.iter().filter(|r| r.ntr == 6.0) {
        let coarse = rows
            .iter()
            .find(|r| {
                r.ntr == 12.0 && r.kappa == fine.kappa && r.a == fine.a && r.p_db == fine.p_db
            })
            .unwrap();
        pairs += 1;
        if fine.r_st_opt < coarse.r_st_opt {
            violations += 1;
        }
    }
    outcome(
        10,
        "R_ST_opt(ntr = 6) >= R_ST_opt(ntr = 12) pointwise",
        violations == 0 && pairs == 396,
        format!("{violations} violations over {pairs} pairs"),
    )
}

fn allocation_trends(rows: &[RateReport]) -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for a in [1.5, 2.0] {
        for r in rows
            .iter()
            .filter(|r| r.kappa == 0.75 && r.a == a && r.p_db == 1.0)
        {
            pass &= r.zeta_star > 0.95;
            notes.push(format!(
                "k=0.75 a={a} ntr={} low: {:.4}",
                r.ntr, r.zeta_star
            ));
        }
    }
    for r in rows
        .iter()
        .filter(|r| r.kappa == 0.35 && r.a == 2.0 && r.p_db == 50.0)
    {
        pass &= r.zeta_star < 0.05;
        notes.push(format!("k=0.35 a=2 ntr={} high: {:.4}", r.ntr, r.zeta_star));
    }
    pass &= notes.len() == 6;
    outcome(
        11,
        "zeta* > 0.95 at lowest SNR for kappa = 0.75; < 0.05 at highest SNR for kappa = 0.35, a = 2",
        pass,
        notes.join("; "),
    )
}

// Dense-grid oracles, written against the raw link formulas.

/// Brute-force maximum of the decode-and-forward objective over the box
/// `t, r, beta` in `ranges`, `points` samples per axis.
fn df_grid_box(cfg: &ScenarioConfig, ranges: [(f64, f64); 3], points: usize) -> (f64, [f64; 3]) {
    let d1 = cfg.kappa * cfg.a * cfg.d;
    let d2 = (1.0 - cfg.kappa) * cfg.a * cfg.d;
    let d3 = cfg.d;
    let p = cfg.power;
    let cap = |x: f64| match cfg.df_log {
        LogBase::Nats => 0.5 * (1.0 + x).ln(),
        LogBase::Bits => 0.5 * (1.0 + x).log2(),
    };
    let axis = |(lo, hi): (f64, f64)| -> Vec<f64> {
        (0..points)
            .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
            .collect()
    };
    let (ts, rs, betas) = (axis(ranges[0]), axis(ranges[1]), axis(ranges[2]));
    let listen_relay = cap(p / d1.powf(cfg.alpha));
    let listen_dest = cap(p / d3.powf(cfg.alpha));
    let mut best = (f64::NEG_INFINITY, [0.0; 3]);
    for &beta in &betas {
        let p_sd2 = (1.0 - beta) * p / d3.powf(cfg.alpha);
        let p_rd = beta * p / d2.powf(cfg.alpha);
        let paired = match cfg.cross_term {
            CrossTerm::PhaseTwo => p_sd2,
            CrossTerm::FullSource => p / d3.powf(cfg.alpha),
        };
        for &r in &rs {
            let tx_relay = cap((1.0 - r * r) * p_sd2);
            let tx_dest = cap(p_sd2 + p_rd + 2.0 * r * (paired * p_rd).sqrt());
            for &t in &ts {
                let v = (t * listen_relay + (1.0 - t) * tx_relay)
                    .min(t * listen_dest + (1.0 - t) * tx_dest);
                if v > best.0 {
                    best = (v, [t, r, beta]);
                }
            }
        }
    }
    best
}

/// The `1001^3` grid maximum, and the same grid followed by four `201^3`
/// grids, each centred on the running best and ten times narrower.
fn df_dense_grid(cfg: &ScenarioConfig) -> (f64, f64) {
    let (coarse, mut at) = df_grid_box(cfg, [(0.0, 1.0); 3], 1001);
    let mut fine = coarse;
    let mut half_width = 2e-2;
    for _ in 0..4 {
        let ranges = at.map(|x| ((x - half_width).max(0.0), (x + half_width).min(1.0)));
        let (v, x) = df_grid_box(cfg, ranges, 201);
        if v > fine {
            (fine, at) = (v, x);
        }
        half_width /= 10.0;
    }
    (coarse, fine)
}

fn st_dense_grid(cfg: &ScenarioConfig, points: usize) -> (f64, f64) {
    let d1 = cfg.kappa * cfg.a * cfg.d;
    let d2 = (1.0 - cfg.kappa) * cfg.a * cfg.d;
    let d3 = cfg.d;
    let b = cfg.bandwidth;
    let dt = cfg.ntr / b;
    let mut best = (f64::NEG_INFINITY, 0.0);
    for i in 0..points {
        let z = i as f64 / (points - 1) as f64;
        let c1 = b * (1.0 + z * cfg.power / d1.powf(cfg.alpha)).log2();
        let c2 = b * (1.0 + cfg.power / d2.powf(cfg.alpha)).log2();
        let c3 = b * (1.0 + (1.0 - z) * cfg.power / d3.powf(cfg.alpha)).log2();
        let v = c1 * c2 / (c1 + c2) * (1.0 + cfg.bits_per_pulse_pair / (c1.max(c2) * dt))
            + c2 * c3 / (c1 + c2);
        if v > best.0 {
            best = (v, z);
        }
    }
    best
}

fn optimizer_configs() -> Vec<ScenarioConfig> {
    include_str!("data/optimizer_configs.txt")
        .lines()
        .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let v: Vec<f64> = l.split_whitespace().map(|x| x.parse().unwrap()).collect();
            ScenarioConfig {
                kappa: v[1],
                a: v[2],
                ntr: v[3],
                ..ScenarioConfig::default()
            }
            .with_power_db(v[0])
        })
        .collect()
}

fn optimizer_soundness() -> Outcome {
    let settings = SearchSettings::default();
    let zeta_cell = 1.0 / (settings.zeta_grid - 1) as f64;
    let mut pass = true;
    let mut notes = Vec::new();
    for (k, cfg) in optimizer_configs().iter().enumerate() {
        let df = r_gc(cfg).rate;
        let (df_grid, df_zoomed) = df_dense_grid(cfg);
        let st = r_st_opt(cfg);
        let (st_oracle, zeta_oracle) = st_dense_grid(cfg, 100_001);
        // The 1001^3 grid cannot resolve a kinked optimum to 1e-6, so it only
        // bounds the refined value from below; the zoomed grid pins it.
        pass &= df >= df_grid - 1e-6
            && (df - df_zoomed).abs() <= 1e-6
            && (st.value - st_oracle).abs() <= 1e-6
            && (st.x - zeta_oracle).abs() <= zeta_cell;
        notes.push(format!(
            "#{k}: df-grid {:+.1e} df-zoom {:+.1e} st {:+.1e}",
            df - df_grid,
            df - df_zoomed,
            st.value - st_oracle
        ));
    }
    outcome(
        12,
        "refined optima within 1e-6 of dense-grid oracles on 5 fixed configs",
        pass,
        notes.join(", "),
    )
}

fn main() -> ExitCode {
    let base = ScenarioConfig::default();
    let literal = ScenarioConfig {
        df_log: LogBase::Bits,
        cross_term: CrossTerm::FullSource,
        ..base.clone()
    };
    let mut results = vec![
        catalan_identity(),
        oracle_equivalence(),
        bits_per_pulse(),
        unique_decodability(),
        rank_bijection(),
        rate_loss(),
        storage_ratio(),
    ];
    let rows = full_grid(&base);
    let literal_rows = full_grid(&literal);
    results.push(coding_gain(&rows, &literal_rows));
    results.push(two_hop_chain(&rows, &base));
    results.push(resolution_monotone(&rows));
    results.push(allocation_trends(&rows));
    results.push(optimizer_soundness());

    let mut failed = 0;
    for r in &results {
        println!(
            "criterion {:>2}: {} | {} | {}",
            r.id,
            if r.pass { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
        failed += usize::from(!r.pass);
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
