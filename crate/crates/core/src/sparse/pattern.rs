use crate::error::{Error, Result};
use crate::sparse::{DenseVec, Permutation};

/// Column access to a boolean sparse matrix, used by the SpMSpV kernel.
///
/// `column(j)` yields the row indices of the structural nonzeros of column
/// `j`, excluding anything the implementor treats as a self-loop.
pub trait ColumnPattern {
    fn nrows(&self) -> usize;
    fn ncols(&self) -> usize;
    fn column(&self, j: usize) -> impl Iterator<Item = usize> + '_;
}

/// Structurally symmetric square sparsity pattern in compressed-column form.
///
/// This is the graph of the matrix: column `j` lists the neighbors of vertex
/// `j`. Diagonal entries may be stored but are never reported as neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePatternCsc {
    n: usize,
    col_ptr: Vec<usize>,
    row_idx: Vec<usize>,
}

impl SparsePatternCsc {
    /// Builds a pattern from raw CSC arrays, checking every invariant
    /// including structural symmetry.
    pub fn new(n: usize, col_ptr: Vec<usize>, row_idx: Vec<usize>) -> Result<Self> {
        let pattern = Self::from_parts_unchecked(n, col_ptr, row_idx);
        pattern.validate()?;
        Ok(pattern)
    }

    pub(crate) fn from_parts_unchecked(n: usize, col_ptr: Vec<usize>, row_idx: Vec<usize>) -> Self {
        Self {
            n,
            col_ptr,
            row_idx,
        }
    }

    /// Builds the symmetric pattern containing `(i, j)` and `(j, i)` for every
    /// listed pair. Duplicates are coalesced; `(i, i)` stores a self-loop.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut columns: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, j) in edges {
            if i >= n {
                return Err(Error::VertexOutOfRange { vertex: i, n });
            }
            if j >= n {
                return Err(Error::VertexOutOfRange { vertex: j, n });
            }
            columns[j].push(i);
            if i != j {
                columns[i].push(j);
            }
        }
        Ok(Self::from_columns(columns))
    }

    /// Packs per-column row lists, sorting and deduplicating each column.
    /// The caller is responsible for symmetry.
    pub(crate) fn from_columns(mut columns: Vec<Vec<usize>>) -> Self {
        let n = columns.len();
        let mut col_ptr = Vec::with_capacity(n + 1);
        col_ptr.push(0);
        let total = columns.iter().map(Vec::len).sum();
        let mut row_idx = Vec::with_capacity(total);
        for col in &mut columns {
            col.sort_unstable();
            col.dedup();
            row_idx.extend_from_slice(col);
            col_ptr.push(row_idx.len());
        }
        Self {
            n,
            col_ptr,
            row_idx,
        }
    }

    /// An `n x n` pattern with no entries.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            col_ptr: vec![0; n + 1],
            row_idx: Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        if self.col_ptr.len() != n + 1 {
            return Err(Error::InvalidPattern(format!(
                "col_ptr has length {}, expected {}",
                self.col_ptr.len(),
                n + 1
            )));
        }
        if self.col_ptr[0] != 0 || self.col_ptr[n] != self.row_idx.len() {
            return Err(Error::InvalidPattern(
                "col_ptr must start at 0 and end at nnz".into(),
            ));
        }
        for j in 0..n {
            let (lo, hi) = (self.col_ptr[j], self.col_ptr[j + 1]);
            if lo > hi {
                return Err(Error::InvalidPattern(format!(
                    "col_ptr decreases at column {j}"
                )));
            }
            let col = &self.row_idx[lo..hi];
            if let Some(&bad) = col.iter().find(|&&i| i >= n) {
                return Err(Error::InvalidPattern(format!(
                    "row index {bad} out of range in column {j}"
                )));
            }
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidPattern(format!(
                    "row indices of column {j} are not strictly increasing"
                )));
            }
        }
        for j in 0..n {
            for &i in self.rows_of(j) {
                if !self.contains(j, i) {
                    return Err(Error::InvalidPattern(format!(
                        "entry ({i}, {j}) has no mirror ({j}, {i})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored entries, counting both triangles and any diagonal.
    pub fn nnz(&self) -> usize {
        self.row_idx.len()
    }

    pub fn col_ptr(&self) -> &[usize] {
        &self.col_ptr
    }

    pub fn row_idx(&self) -> &[usize] {
        &self.row_idx
    }

    /// Stored row indices of column `j`, diagonal included.
    pub fn rows_of(&self, j: usize) -> &[usize] {
        &self.row_idx[self.col_ptr[j]..self.col_ptr[j + 1]]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rows_of(j).binary_search(&i).is_ok()
    }

    /// Neighbors of `v` in increasing order, excluding `v` itself.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows_of(v).iter().copied().filter(move |&i| i != v)
    }

    pub fn degree(&self, v: usize) -> usize {
        let col = self.rows_of(v);
        col.len() - usize::from(col.binary_search(&v).is_ok())
    }

    /// All stored entries as `(row, col)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |j| self.rows_of(j).iter().map(move |&i| (i, j)))
    }
}

impl ColumnPattern for SparsePatternCsc {
    fn nrows(&self) -> usize {
        self.n
    }

    fn ncols(&self) -> usize {
        self.n
    }

    fn column(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors(j)
    }
}

/// Vertex degrees, self-loops excluded.
pub fn degrees(a: &SparsePatternCsc) -> DenseVec {
    DenseVec::from((0..a.n()).map(|v| a.degree(v) as i64).collect::<Vec<_>>())
}

/// Computes `P A P^T`: entry `(i, j)` of `a` moves to
/// `(new_label[i], new_label[j])`.
pub fn permute_symmetric(a: &SparsePatternCsc, p: &Permutation) -> Result<SparsePatternCsc> {
    if p.len() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            got: p.len(),
        });
    }
    let n = a.n();
    let labels = p.new_labels();
    let mut col_ptr = vec![0usize; n + 1];
    for j in 0..n {
        col_ptr[labels[j] + 1] = a.rows_of(j).len();
    }
    for j in 0..n {
        col_ptr[j + 1] += col_ptr[j];
    }
    let mut row_idx = vec![0usize; a.nnz()];
    for j in 0..n {
        let dst = labels[j];
        let out = &mut row_idx[col_ptr[dst]..col_ptr[dst + 1]];
        for (slot, &i) in out.iter_mut().zip(a.rows_of(j)) {
            *slot = labels[i];
        }
        out.sort_unstable();
    }
    Ok(SparsePatternCsc::from_parts_unchecked(n, col_ptr, row_idx))
}
