use std::path::PathBuf;

use num_bigint::BigUint;
use sigtime_core::codebook::{Codebook, DEFAULT_MAX_N};
use sigtime_core::flow::simulate_flow;
use sigtime_core::{Codeword, PathCountTable};

use crate::output::{emit, real, Table};
use crate::{Failure, Globals, Outcome};

#[derive(clap::Subcommand)]
pub enum Command {
    /// Write every word of length 2n, one per line, in canonical order.
    Build {
        /// Half-length n.
        #[arg(long)]
        n: usize,
        /// Output file (defaults to --csv, then stdout).
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Refuse to materialize books beyond this n.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Print the canonical index of a word.
    Rank {
        /// Word over '1' (source-relay slot) and '0' (relay-destination slot).
        #[arg(long)]
        word: String,
    },
    /// Print the word with a given canonical index.
    Unrank {
        #[arg(long)]
        n: usize,
        /// Decimal index in [0, S(n)).
        #[arg(long)]
        index: String,
    },
    /// Replay a word through the relay and print the slot trace as CSV.
    Simulate {
        #[arg(long)]
        word: String,
        /// Source-relay capacity, bits/s.
        #[arg(long)]
        c1: f64,
        /// Relay-destination capacity, bits/s.
        #[arg(long)]
        c2: f64,
        /// Period in seconds.
        #[arg(long = "T", value_name = "SECONDS")]
        period: f64,
    },
}

fn parse_word(word: &str) -> Result<Codeword, Failure> {
    word.parse()
        .map_err(|e: sigtime_core::Error| Failure::usage("--word", e.to_string()))
}

fn positive(flag: &'static str, v: f64) -> Result<f64, Failure> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Failure::usage(
            flag,
            format!("must be positive and finite, got {v}"),
        ))
    }
}

pub fn run(cmd: &Command, globals: &Globals) -> Outcome {
    let module = Failure::module("codebook");
    match cmd {
        Command::Build { n, out, max_n } => {
            if n > max_n {
                return Err(Failure::usage(
                    "--n",
                    format!("{n} exceeds --max-n {max_n}; raise --max-n to build it"),
                ));
            }
            let book = Codebook::build_with_cap(*n, *max_n).map_err(module)?;
            let mut text = String::with_capacity(book.len() * (2 * n + 1));
            for w in book.iter() {
                text.push_str(&w.to_string());
                text.push('\n');
            }
            let path = out.as_deref().or(globals.csv.as_deref());
            emit(&text, path).map_err(|error| Failure::Module {
                module: "codebook",
                error,
            })
        }
        Command::Rank { word } => {
            let word = parse_word(word)?;
            if !word.is_valid() {
                return Err(Failure::usage(
                    "--word",
                    "not a schedule word (needs equal 1s and 0s, no prefix with more 0s than 1s)",
                ));
            }
            let index = PathCountTable::new(word.len() / 2)
                .rank(&word)
                .map_err(module)?;
            println!("{index}");
            Ok(())
        }
        Command::Unrank { n, index } => {
            let index: BigUint = index.parse().map_err(|_| {
                Failure::usage("--index", format!("not a decimal integer: {index:?}"))
            })?;
            let pct = PathCountTable::new(*n);
            if index >= *pct.total() {
                return Err(Failure::usage(
                    "--index",
                    format!("must be below S({n}) = {}, got {index}", pct.total()),
                ));
            }
            let word = pct.unrank(&index).map_err(module)?;
            println!("{word}");
            Ok(())
        }
        Command::Simulate {
            word,
            c1,
            c2,
            period,
        } => {
            let word = parse_word(word)?;
            let (c1, c2) = (positive("--c1", *c1)?, positive("--c2", *c2)?);
            let period = positive("--T", *period)?;
            let trace = simulate_flow(&word, c1, c2, period).map_err(module)?;
            let mut csv = Table::new(&[
                "slot",
                "link",
                "duration_s",
                "bits",
                "buffer_bits",
                "delivered_bits",
            ]);
            for s in &trace.slots {
                csv.row(vec![
                    s.slot.to_string(),
                    s.link.label().to_string(),
                    real(s.duration),
                    real(s.bits),
                    real(s.buffer),
                    real(s.delivered),
                ]);
            }
            emit(&csv.into_string(), globals.csv.as_deref()).map_err(|error| Failure::Module {
                module: "codebook",
                error,
            })
        }
    }
}
