//! Reverse Cuthill-McKee bandwidth reduction for sparse symmetric matrices.
//!
//! The ordering is expressed with a handful of sparse-vector primitives
//! ([`primitives`]) so that the same driver runs serially ([`rcm`]) or on a
//! simulated 2D process grid with message accounting ([`grid`]). A classic
//! queue-based implementation is kept alongside as an oracle.

pub mod error;
pub mod generate;
pub mod grid;
pub mod metrics;
pub mod primitives;
pub mod rcm;
pub mod sparse;

pub use error::{Error, MatrixMarketError, Result};
pub use metrics::{bandwidth, envelope_size, report, OrderingReport};
pub use rcm::{rcm, rcm_with, Method, RcmOptions, RcmOutcome};
pub use sparse::{
    degrees, load_matrix_market, permute_symmetric, write_matrix_market, DenseVec, Permutation,
    SparsePatternCsc, SparseVec,
};
