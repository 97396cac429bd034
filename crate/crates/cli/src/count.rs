use sigtime_core::BallotTable;

use crate::output::{emit, real, Table};
use crate::{Failure, Globals, Outcome};

#[derive(clap::Args)]
pub struct Args {
    /// Largest half-length n (words have 2n slots).
    #[arg(long, value_name = "N")]
    n_max: usize,
}

pub fn run(args: &Args, globals: &Globals) -> Outcome {
    if args.n_max == 0 {
        return Err(Failure::usage("--n-max", "must be at least 1"));
    }
    let mut table = BallotTable::with_max_n(args.n_max);
    let mut csv = Table::new(&["n", "S_n", "log2_Sn", "bits_per_pulse"]);
    for n in 1..=args.n_max {
        let s = table.s_count(n);
        let fig = table.rate_figures(n);
        csv.row(vec![
            n.to_string(),
            s.to_string(),
            real(fig.bits_total),
            real(fig.bits_per_pulse),
        ]);
    }
    emit(&csv.into_string(), globals.csv.as_deref()).map_err(|error| Failure::Module {
        module: "count",
        error,
    })
}
