use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use log::warn;

use crate::error::{Error, Result};
use crate::generate;
use crate::grid::stats::{CommStats, Trace};
use crate::primitives::SpmspvWorkspace;
use crate::sparse::{
    degrees, permute_symmetric, ColumnPattern, DenseVec, Permutation, SparsePatternCsc,
};

/// Logical `rows x cols` worker grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridShape {
    pub rows: usize,
    pub cols: usize,
}

impl GridShape {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidGrid(format!(
                "dimensions must be positive, got {rows}x{cols}"
            )));
        }
        Ok(Self { rows, cols })
    }

    pub fn square(side: usize) -> Result<Self> {
        Self::new(side, side)
    }

    pub fn workers(&self) -> usize {
        self.rows * self.cols
    }
}

impl FromStr for GridShape {
    type Err = Error;

    /// `R` for a square grid or `RxC`.
    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidGrid(format!("`{s}` is not R or RxC")))
        };
        match s.split_once(['x', 'X']) {
            Some((r, c)) => Self::new(parse(r)?, parse(c)?),
            None => Self::square(parse(s)?),
        }
    }
}

impl fmt::Display for GridShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// The off-diagonal entries of one `A_ij` tile, stored CSC with local
/// row and column indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    rows: Range<usize>,
    cols: Range<usize>,
    col_ptr: Vec<usize>,
    row_idx: Vec<usize>,
}

impl Block {
    pub fn rows(&self) -> Range<usize> {
        self.rows.clone()
    }

    pub fn cols(&self) -> Range<usize> {
        self.cols.clone()
    }

    pub fn nnz(&self) -> usize {
        self.row_idx.len()
    }
}

impl ColumnPattern for Block {
    fn nrows(&self) -> usize {
        self.rows.len()
    }

    fn ncols(&self) -> usize {
        self.cols.len()
    }

    fn column(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_idx[self.col_ptr[j]..self.col_ptr[j + 1]]
            .iter()
            .copied()
    }
}

/// A matrix tiled over a simulated worker grid, plus the run's accounting.
///
/// Worker `(i, j)` owns tile `A_ij`: rows `i*br .. (i+1)*br` and columns
/// `j*bc .. (j+1)*bc`, with `br = ceil(n/rows)`, `bc = ceil(n/cols)` and
/// the last tiles cut short. Vector entry `v` lives on worker
/// `(v / br, v / bc)`, so the owners of a column block sit in one grid
/// column and the owners of a row block sit in one grid row.
#[derive(Debug)]
pub struct GridContext {
    pub(crate) shape: GridShape,
    pub(crate) matrix: SparsePatternCsc,
    pub(crate) degrees: DenseVec,
    pub(crate) relabel: Option<Permutation>,
    pub(crate) block_rows: usize,
    pub(crate) block_cols: usize,
    pub(crate) blocks: Vec<Block>,
    pub(crate) workspaces: Vec<SpmspvWorkspace>,
    pub(crate) stats: CommStats,
    pub(crate) trace: Trace,
}

fn tile(n: usize, parts: usize) -> usize {
    n.div_ceil(parts).max(1)
}

/// Tiles `a` over `shape`. With `randomize`, vertices are first relabeled by
/// a permutation drawn from `seed`; results are mapped back to `a`'s ids.
pub fn distribute(
    a: &SparsePatternCsc,
    shape: GridShape,
    seed: u64,
    randomize: bool,
) -> Result<GridContext> {
    let n = a.n();
    if shape.rows > n || shape.cols > n {
        warn!("grid {shape} is larger than the matrix order {n}; some workers own nothing");
    }
    let (matrix, relabel) = if randomize {
        let p = generate::random_permutation(n, &mut generate::rng(seed));
        (permute_symmetric(a, &p)?, Some(p))
    } else {
        (a.clone(), None)
    };

    let br = tile(n, shape.rows);
    let bc = tile(n, shape.cols);
    let range = |k: usize, b: usize| (k * b).min(n)..((k + 1) * b).min(n);
    let mut columns: Vec<Vec<Vec<usize>>> = (0..shape.workers())
        .map(|w| vec![Vec::new(); range(w % shape.cols, bc).len()])
        .collect();
    for c in 0..n {
        let j = c / bc;
        for r in matrix.neighbors(c) {
            let i = r / br;
            columns[i * shape.cols + j][c - j * bc].push(r - i * br);
        }
    }
    let blocks: Vec<Block> = columns
        .into_iter()
        .enumerate()
        .map(|(w, cols)| {
            let (i, j) = (w / shape.cols, w % shape.cols);
            let mut col_ptr = Vec::with_capacity(cols.len() + 1);
            col_ptr.push(0);
            let mut row_idx = Vec::new();
            for col in cols {
                // neighbors arrive sorted, so each local column is sorted
                row_idx.extend(col);
                col_ptr.push(row_idx.len());
            }
            Block {
                rows: range(i, br),
                cols: range(j, bc),
                col_ptr,
                row_idx,
            }
        })
        .collect();
    let workspaces = blocks
        .iter()
        .map(|b| SpmspvWorkspace::new(b.rows.len()))
        .collect();

    Ok(GridContext {
        shape,
        degrees: degrees(&matrix),
        matrix,
        relabel,
        block_rows: br,
        block_cols: bc,
        blocks,
        workspaces,
        stats: CommStats::default(),
        trace: Trace::default(),
    })
}

impl GridContext {
    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn workers(&self) -> usize {
        self.shape.workers()
    }

    /// The matrix as distributed (relabeled when randomized).
    pub fn matrix(&self) -> &SparsePatternCsc {
        &self.matrix
    }

    /// Degrees of [`GridContext::matrix`], distributed like every vector.
    pub fn degrees(&self) -> &DenseVec {
        &self.degrees
    }

    /// Original id -> distributed id, when randomized.
    pub fn relabeling(&self) -> Option<&Permutation> {
        self.relabel.as_ref()
    }

    pub fn block(&self, i: usize, j: usize) -> &Block {
        &self.blocks[i * self.shape.cols + j]
    }

    pub fn stats(&self) -> &CommStats {
        &self.stats
    }

    pub fn trace(&self) -> &Trace {
        &self.trace
    }

    pub fn reset_accounting(&mut self) {
        self.stats = CommStats::default();
        self.trace.clear();
    }

    /// Grid coordinates of the worker owning vector entry `v`.
    pub fn owner(&self, v: usize) -> (usize, usize) {
        (v / self.block_rows, v / self.block_cols)
    }

    pub(crate) fn owner_rank(&self, v: usize) -> usize {
        let (i, j) = self.owner(v);
        i * self.shape.cols + j
    }

    pub(crate) fn row_block_start(&self, i: usize) -> usize {
        (i * self.block_rows).min(self.n())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grid_specs() {
        assert_eq!(
            "2".parse::<GridShape>().unwrap(),
            GridShape { rows: 2, cols: 2 }
        );
        assert_eq!(
            "2x3".parse::<GridShape>().unwrap(),
            GridShape { rows: 2, cols: 3 }
        );
        assert!("0".parse::<GridShape>().is_err());
        assert!("2x".parse::<GridShape>().is_err());
        assert!("ax2".parse::<GridShape>().is_err());
        assert_eq!(GridShape::new(4, 1).unwrap().to_string(), "4x1");
    }

    #[test]
    fn single_worker_owns_everything() {
        let a = generate::grid2d(3);
        let ctx = distribute(&a, GridShape::square(1).unwrap(), 0, false).unwrap();
        let b = ctx.block(0, 0);
        assert_eq!(b.rows(), 0..9);
        assert_eq!(b.cols(), 0..9);
        assert_eq!(b.nnz(), a.nnz());
        assert!((0..9).all(|v| ctx.owner(v) == (0, 0)));
    }

    #[test]
    fn two_by_two_on_eight() {
        let a = generate::complete(8);
        let ctx = distribute(&a, GridShape::square(2).unwrap(), 0, false).unwrap();
        assert_eq!(ctx.block(0, 0).rows(), 0..4);
        assert_eq!(ctx.block(0, 0).cols(), 0..4);
        assert_eq!(ctx.block(1, 0).rows(), 4..8);
        // diagonal tiles lose their 4 diagonal slots
        assert_eq!(ctx.block(0, 0).nnz(), 12);
        assert_eq!(ctx.block(0, 1).nnz(), 16);
    }

    #[test]
    fn ragged_tiles_cover_every_entry_once() {
        let a = generate::erdos_renyi(23, 0.3, true, &mut generate::rng(1));
        for (r, c) in [(2, 3), (4, 4), (5, 2), (30, 1)] {
            let ctx = distribute(&a, GridShape::new(r, c).unwrap(), 0, false).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for i in 0..r {
                for j in 0..c {
                    let b = ctx.block(i, j);
                    for lc in 0..b.ncols() {
                        for lr in b.column(lc) {
                            assert!(seen.insert((lr + b.rows().start, lc + b.cols().start)));
                        }
                    }
                }
            }
            let expected: std::collections::BTreeSet<_> =
                a.entries().filter(|(i, j)| i != j).collect();
            assert_eq!(seen, expected);
        }
    }

    #[test]
    fn randomized_distribution_is_seed_deterministic() {
        let a = generate::random_tree(30, &mut generate::rng(2));
        let shape = GridShape::square(2).unwrap();
        let x = distribute(&a, shape, 42, true).unwrap();
        let y = distribute(&a, shape, 42, true).unwrap();
        assert_eq!(x.matrix(), y.matrix());
        assert_eq!(x.relabeling(), y.relabeling());
        assert_eq!(x.blocks, y.blocks);
        let z = distribute(&a, shape, 43, true).unwrap();
        assert_ne!(x.relabeling(), z.relabeling());
    }
}
