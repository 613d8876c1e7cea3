use std::ops::Range;

use crate::error::Result;
use crate::primitives::{self, Select2ndMin, SpmspvWorkspace};
use crate::sparse::{DenseVec, SparsePatternCsc, SparseVec};

/// Where the algebraic RCM gets its primitives from.
///
/// The driver in this module only talks to the graph through this trait, so
/// the same code runs on a single in-memory matrix or on a simulated process
/// grid. Implementations must return exactly what the serial primitives
/// return.
pub trait PrimitiveBackend {
    fn n(&self) -> usize;

    /// SpMSpV over `(select2nd, min)`.
    fn spmspv(&mut self, x: &SparseVec) -> Result<SparseVec>;

    /// `sort_perm` where every value of `x` is known to lie in
    /// `parent_labels`. The range lets distributed implementations bucket
    /// without an extra reduction.
    fn sort_perm(
        &mut self,
        x: &SparseVec,
        y: &DenseVec,
        parent_labels: Range<i64>,
    ) -> Result<SparseVec>;

    fn reduce_argmin(&mut self, x: &SparseVec, y: &DenseVec) -> Result<usize>;

    fn select_unset(&mut self, x: &SparseVec, y: &DenseVec) -> Result<SparseVec> {
        primitives::select(x, y, |v| v == DenseVec::UNSET)
    }

    fn set(&mut self, y: &mut DenseVec, x: &SparseVec) -> Result<()> {
        primitives::set(y, x)
    }

    fn set_from_dense(&mut self, x: &mut SparseVec, y: &DenseVec) -> Result<()> {
        primitives::set_from_dense(x, y)
    }

    /// Called once at the start of every full breadth-first search.
    fn bfs_started(&mut self) {}
}

/// The primitives applied directly to one in-memory pattern.
#[derive(Debug)]
pub struct SerialBackend<'a> {
    a: &'a SparsePatternCsc,
    ws: SpmspvWorkspace,
    bfs_runs: usize,
}

impl<'a> SerialBackend<'a> {
    pub fn new(a: &'a SparsePatternCsc) -> Self {
        Self {
            a,
            ws: SpmspvWorkspace::new(a.n()),
            bfs_runs: 0,
        }
    }

    pub fn bfs_runs(&self) -> usize {
        self.bfs_runs
    }
}

impl PrimitiveBackend for SerialBackend<'_> {
    fn n(&self) -> usize {
        self.a.n()
    }

    fn spmspv(&mut self, x: &SparseVec) -> Result<SparseVec> {
        Ok(primitives::spmspv_with(self.a, x, &Select2ndMin, &mut self.ws)?.vector)
    }

    fn sort_perm(
        &mut self,
        x: &SparseVec,
        y: &DenseVec,
        _parent_labels: Range<i64>,
    ) -> Result<SparseVec> {
        primitives::sort_perm(x, y)
    }

    fn reduce_argmin(&mut self, x: &SparseVec, y: &DenseVec) -> Result<usize> {
        primitives::reduce_argmin(x, y)
    }

    fn bfs_started(&mut self) {
        self.bfs_runs += 1;
    }
}
