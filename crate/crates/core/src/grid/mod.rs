//! Deterministic simulation of the distributed algorithm on a logical
//! `p_r x p_c` worker grid.
//!
//! Workers are simulated in one thread as a bulk-synchronous sequence of
//! local steps and collectives. Each collective is charged to [`CommStats`]
//! and logged in the [`Trace`] under these conventions:
//!
//! * all-gather and all-to-all within a group of `g` workers: `g(g-1)`
//!   messages, whatever the payload;
//! * all-reduce and scan over `p > 1` workers: `2p` messages;
//! * a word is one integer, so an `(index, value)` pair is 2 words and a
//!   sort tuple is 3. Only entries that leave their worker are charged.
//!
//! A 1x1 grid therefore never sends anything.

mod context;
mod ops;
mod stats;

pub use context::{distribute, Block, GridContext, GridShape};
pub use ops::{dist_rcm, dist_rcm_with, DistRcm};
pub use stats::{Collective, CommStats, Counters, PrimitiveKind, Scope, Trace, TraceEvent};

#[cfg(test)]
mod tests;
