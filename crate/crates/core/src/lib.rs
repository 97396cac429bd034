//! Signal-time codes for half-duplex relay schedules.
//!
//! * [`ballot`]: exact counts `F(n, k)` and `S(n)` of available schedule words.
//! * [`codebook`], [`rank`], [`flow`]: optimal codebooks, index/word mapping
//!   without storage, and replay of a schedule through the relay.
//! * [`concat`]: long codes from concatenated component codes.
//! * [`relay`]: rate analysis of the three-node Gaussian relay network.

pub mod ballot;
pub mod codebook;
pub mod codeword;
pub mod concat;
pub mod error;
pub mod flow;
pub mod rank;
pub mod relay;

pub use ballot::{BallotTable, RateFigure};
pub use codebook::Codebook;
pub use codeword::Codeword;
pub use concat::{ConcatMetrics, ConcatScheme};
pub use error::{Error, Result};
pub use flow::FlowTrace;
pub use rank::PathCountTable;
