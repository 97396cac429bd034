use num_bigint::BigUint;
use sigtime_core::{Codeword, ConcatScheme};

use crate::output::{emit, real, Table};
use crate::{Failure, Globals, Outcome};

#[derive(clap::Subcommand)]
pub enum Command {
    /// Rate loss and storage ratio for every even length up to --len-max.
    Metrics {
        /// Component size in slot pairs (blocks have 2L slots).
        #[arg(long = "L", value_name = "PAIRS")]
        pairs: usize,
        /// Largest total length 2n in slots.
        #[arg(long, value_name = "SLOTS")]
        len_max: usize,
        /// Smallest total length 2n in slots.
        #[arg(long, value_name = "SLOTS", default_value_t = 2)]
        len_min: usize,
    },
    /// Map an index to a concatenated word.
    Encode {
        #[arg(long = "L", value_name = "PAIRS")]
        pairs: usize,
        /// Total length 2n in slots.
        #[arg(long, value_name = "SLOTS")]
        len: usize,
        #[arg(long)]
        index: String,
    },
    /// Map a concatenated word back to its index.
    Decode {
        #[arg(long = "L", value_name = "PAIRS")]
        pairs: usize,
        #[arg(long)]
        word: String,
    },
}

fn block_len(pairs: usize) -> Result<usize, Failure> {
    if pairs == 0 {
        return Err(Failure::usage("--L", "must be at least 1"));
    }
    Ok(2 * pairs)
}

fn even_len(flag: &'static str, len: usize) -> Result<usize, Failure> {
    if len < 2 || !len.is_multiple_of(2) {
        return Err(Failure::usage(
            flag,
            format!("must be even and at least 2, got {len}"),
        ));
    }
    Ok(len)
}

pub fn run(cmd: &Command, globals: &Globals) -> Outcome {
    let module = Failure::module("concat");
    match cmd {
        Command::Metrics {
            pairs,
            len_max,
            len_min,
        } => {
            let block = block_len(*pairs)?;
            let (lo, hi) = (
                even_len("--len-min", *len_min)?,
                even_len("--len-max", *len_max)?,
            );
            if lo > hi {
                return Err(Failure::usage("--len-min", "exceeds --len-max"));
            }
            let mut csv = Table::new(&[
                "len",
                "m",
                "r",
                "rate",
                "rho_R",
                "rho_M",
                "stored_words",
                "stored_bits",
            ]);
            for len in (lo..=hi).step_by(2) {
                let plan = ConcatScheme::plan(len, block).map_err(module)?;
                let m = plan.metrics();
                csv.row(vec![
                    len.to_string(),
                    plan.m().to_string(),
                    plan.r().to_string(),
                    real(m.rate_per_pulse),
                    real(m.rho_r),
                    real(m.rho_m),
                    m.stored_words.to_string(),
                    m.stored_bits.to_string(),
                ]);
            }
            emit(&csv.into_string(), globals.csv.as_deref()).map_err(|error| Failure::Module {
                module: "concat",
                error,
            })
        }
        Command::Encode { pairs, len, index } => {
            let block = block_len(*pairs)?;
            let len = even_len("--len", *len)?;
            let index: BigUint = index.parse().map_err(|_| {
                Failure::usage("--index", format!("not a decimal integer: {index:?}"))
            })?;
            let plan = ConcatScheme::plan(len, block).map_err(module)?;
            if index >= plan.capacity() {
                return Err(Failure::usage(
                    "--index",
                    format!(
                        "must be below the capacity {}, got {index}",
                        plan.capacity()
                    ),
                ));
            }
            let word = plan.encode(&index).map_err(module)?;
            println!("{word}");
            Ok(())
        }
        Command::Decode { pairs, word } => {
            let block = block_len(*pairs)?;
            let word: Codeword = word
                .parse()
                .map_err(|e: sigtime_core::Error| Failure::usage("--word", e.to_string()))?;
            let len = even_len("--word", word.len())?;
            let index = ConcatScheme::plan(len, block)
                .and_then(|plan| plan.decode(&word))
                .map_err(module)?;
            println!("{index}");
            Ok(())
        }
    }
}
