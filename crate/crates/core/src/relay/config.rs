use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::ballot::{catalan_closed_form, RateFigure};
use crate::error::{Error, Result};

/// Which distance sets the direct source-destination path loss.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GeometryMode {
    /// Direct link over the base distance `d`.
    #[default]
    DirectD,
    /// Direct link over the detour length `a * d`.
    PaperFormula,
}

/// Logarithm used by the decode-and-forward capacity `C(x) = log(1 + x) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LogBase {
    #[default]
    Nats,
    Bits,
}

impl LogBase {
    pub fn half_log1p(self, x: f64) -> f64 {
        match self {
            LogBase::Nats => 0.5 * x.ln_1p(),
            LogBase::Bits => 0.5 * x.ln_1p() / std::f64::consts::LN_2,
        }
    }
}

/// Source power paired with the relay power in the coherent-combining term of
/// the decode-and-forward rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CrossTerm {
    /// `2 r sqrt(P_SD2 P_RD)`: source power while the relay transmits.
    #[default]
    PhaseTwo,
    /// `2 r sqrt(P_SD1 P_RD)`: full source power.
    FullSource,
}

macro_rules! keyword_enum {
    ($ty:ty, $what:literal, $($variant:path => $name:literal),+) => {
        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s.trim() {
                    $($name => Ok($variant),)+
                    other => Err(Error::Config(format!(
                        concat!("unknown ", $what, " {:?} (expected one of: {})"),
                        other,
                        [$($name),+].join(", ")
                    ))),
                }
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($variant => $name,)+ })
            }
        }
    };
}

keyword_enum!(GeometryMode, "geometry_mode", GeometryMode::DirectD => "direct_d", GeometryMode::PaperFormula => "paper_formula");
keyword_enum!(LogBase, "df_log", LogBase::Nats => "nats", LogBase::Bits => "bits");
keyword_enum!(CrossTerm, "cross_term", CrossTerm::PhaseTwo => "sd2", CrossTerm::FullSource => "sd1");

/// Bits carried per slot pair by the optimal length-300 schedule code,
/// `log2 S(150) / 150`.
pub fn default_pulse_pair_weight() -> f64 {
    static WEIGHT: OnceLock<f64> = OnceLock::new();
    *WEIGHT.get_or_init(|| RateFigure::from_count(150, &catalan_closed_form(150)).weight_a)
}

/// One relay-network operating point. Noise is normalized so `B N0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    /// Total transmit power, linear.
    pub power: f64,
    /// Base distance in metres.
    pub d: f64,
    /// Detour factor: `d1 + d2 = a d`.
    pub a: f64,
    /// Relay position, `d1 = kappa a d`.
    pub kappa: f64,
    pub alpha: f64,
    /// Bandwidth in Hz.
    pub bandwidth: f64,
    /// Normalized time resolution `B * dT`.
    pub ntr: f64,
    pub bits_per_pulse_pair: f64,
    pub geometry: GeometryMode,
    pub df_log: LogBase,
    pub cross_term: CrossTerm,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            power: 100.0,
            d: 10.0,
            a: 1.5,
            kappa: 0.35,
            alpha: 2.0,
            bandwidth: 1.0,
            ntr: 6.0,
            bits_per_pulse_pair: default_pulse_pair_weight(),
            geometry: GeometryMode::DirectD,
            df_log: LogBase::Nats,
            cross_term: CrossTerm::PhaseTwo,
        }
    }
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

impl ScenarioConfig {
    pub fn with_power_db(mut self, p_db: f64) -> Self {
        self.power = db_to_linear(p_db);
        self
    }

    pub fn power_db(&self) -> f64 {
        linear_to_db(self.power)
    }

    pub fn validate(&self) -> Result<()> {
        let check = |ok: bool, what: &str, v: f64| {
            if ok {
                Ok(())
            } else {
                Err(Error::Config(format!("{what} out of range: {v}")))
            }
        };
        let finite_pos = |v: f64| v.is_finite() && v > 0.0;
        check(finite_pos(self.power), "P", self.power)?;
        check(finite_pos(self.d), "d", self.d)?;
        check(
            self.a.is_finite() && self.a > 1.0,
            "a (must exceed 1)",
            self.a,
        )?;
        check(
            self.kappa > 0.0 && self.kappa < 1.0,
            "kappa (must lie in (0, 1))",
            self.kappa,
        )?;
        check(finite_pos(self.alpha), "alpha", self.alpha)?;
        check(finite_pos(self.bandwidth), "B", self.bandwidth)?;
        check(finite_pos(self.ntr), "ntr", self.ntr)?;
        check(
            self.bits_per_pulse_pair.is_finite() && self.bits_per_pulse_pair >= 0.0,
            "bits_per_pulse_pair",
            self.bits_per_pulse_pair,
        )
    }

    /// Parses flat `key = value` lines over `self`; `#` starts a comment.
    pub fn apply_text(mut self, text: &str) -> Result<Self> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .or_else(|| line.split_once(':'))
                .ok_or_else(|| {
                    Error::Config(format!("line {}: expected `key = value`", lineno + 1))
                })?;
            self.set(key.trim(), value.trim())
                .map_err(|e| Error::Config(format!("line {}: {}", lineno + 1, strip(e))))?;
        }
        self.validate()?;
        Ok(self)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let num = || {
            value
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("{key}: not a number: {value:?}")))
        };
        match key {
            "P" | "power" => self.power = num()?,
            "P_dB" | "p_db" => self.power = db_to_linear(num()?),
            "d" => self.d = num()?,
            "a" => self.a = num()?,
            "kappa" => self.kappa = num()?,
            "alpha" => self.alpha = num()?,
            "B" | "bandwidth" => self.bandwidth = num()?,
            "ntr" => self.ntr = num()?,
            "bits_per_pulse_pair" => self.bits_per_pulse_pair = num()?,
            "geometry_mode" => self.geometry = value.parse()?,
            "df_log" => self.df_log = value.parse()?,
            "cross_term" => self.cross_term = value.parse()?,
            other => return Err(Error::Config(format!("unknown key {other:?}"))),
        }
        Ok(())
    }
}

fn strip(e: Error) -> String {
    match e {
        Error::Config(msg) => msg,
        other => other.to_string(),
    }
}
