//! Sparse containers: the symmetric matrix pattern (the graph), sparse and
//! dense integer vectors, permutations, and Matrix Market I/O.

mod mtx;
mod pattern;
mod permutation;
mod vector;

pub use mtx::{load_matrix_market, write_matrix_market};
pub use pattern::{degrees, permute_symmetric, ColumnPattern, SparsePatternCsc};
pub use permutation::{read_permutation, write_permutation, Permutation};
pub use vector::{DenseVec, SparseVec};
