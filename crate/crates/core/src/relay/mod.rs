//! Rate analysis of the three-node Gaussian relay network: source `S`,
//! half-duplex relay `R`, destination `D`, with a direct `S-D` link.
//!
//! The signal-time rate splits source information into a two-hop flow, a
//! flow carried by the slot schedule itself, and a direct flow. It is
//! compared with a decode-and-forward baseline and the two-hop bound.

pub mod config;
pub mod link;
pub mod optimize;
pub mod rates;
pub mod sweep;

pub use config::{CrossTerm, GeometryMode, LogBase, ScenarioConfig};
pub use link::{gauss_cap, LinkBudget};
pub use rates::{
    info_amounts, r_gc, r_gc_with, r_st, r_st_opt, r_st_opt_with, two_hop_bound, two_hop_chain,
    DfChannel, DfOptimum, InfoAmounts, SearchSettings, SignalTimeLinks, TwoHopChain,
};
pub use sweep::{db_range, grid_cases, sweep, RateReport, SweepCase};
