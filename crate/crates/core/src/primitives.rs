//! The six vector/matrix primitives that the algebraic RCM is written in:
//! `ind`, `select`, `set`, `spmspv`, `reduce_argmin` and `sort_perm`.

use crate::error::{Error, Result};
use crate::sparse::{ColumnPattern, DenseVec, SparseVec};

/// Overloaded `(multiply, add)` pair for SpMSpV.
///
/// `add` must be associative and commutative so that the order in which
/// partial products are folded never matters.
pub trait Semiring {
    /// Combines a matrix entry with the vector value of its column. Pattern
    /// matrices pass `1` for every structural nonzero.
    fn multiply(&self, matrix_entry: i64, vector_value: i64) -> i64;
    fn add(&self, a: i64, b: i64) -> i64;
}

/// `(select2nd, min)`: each output row keeps the smallest vector value among
/// its adjacent inputs, so a child adopts its minimum-label parent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Select2ndMin;

impl Semiring for Select2ndMin {
    #[inline]
    fn multiply(&self, _matrix_entry: i64, vector_value: i64) -> i64 {
        vector_value
    }

    #[inline]
    fn add(&self, a: i64, b: i64) -> i64 {
        a.min(b)
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

/// Indices of the stored entries of `x`, ascending.
pub fn ind(x: &SparseVec) -> &[usize] {
    x.indices()
}

/// Keeps the entries `x[i]` for which `pred(y[i])` holds.
pub fn select<P>(x: &SparseVec, y: &DenseVec, pred: P) -> Result<SparseVec>
where
    P: Fn(i64) -> bool,
{
    check_len(x.len(), y.len())?;
    let (indices, values) = x.iter().filter(|&(i, _)| pred(y[i])).unzip();
    Ok(SparseVec::from_parts_unchecked(x.len(), indices, values))
}

/// Writes `y[i] = x[i]` for every stored index of `x`, in place.
pub fn set(y: &mut DenseVec, x: &SparseVec) -> Result<()> {
    check_len(y.len(), x.len())?;
    for (i, v) in x.iter() {
        y[i] = v;
    }
    Ok(())
}

/// The sparse-target form of `set`: overwrites each stored value `x[i]`
/// with `y[i]`, leaving the support unchanged.
pub fn set_from_dense(x: &mut SparseVec, y: &DenseVec) -> Result<()> {
    check_len(x.len(), y.len())?;
    let indices = x.indices().to_vec();
    for (v, i) in x.values_mut().iter_mut().zip(indices) {
        *v = y[i];
    }
    Ok(())
}

/// The index `i` in `ind(x)` minimizing `y[i]`; ties go to the smallest `i`.
pub fn reduce_argmin(x: &SparseVec, y: &DenseVec) -> Result<usize> {
    check_len(x.len(), y.len())?;
    x.indices()
        .iter()
        .copied()
        .min_by_key(|&i| (y[i], i))
        .ok_or(Error::EmptyVector)
}

/// Ranks the stored entries of `x` by the tuple `(x[i], y[i], i)`.
///
/// The result has the same support as `x`; its value at `i` is the 0-based
/// position of `i`'s tuple in ascending lexicographic order.
pub fn sort_perm(x: &SparseVec, y: &DenseVec) -> Result<SparseVec> {
    check_len(x.len(), y.len())?;
    let mut tuples: Vec<(i64, i64, usize, usize)> = x
        .iter()
        .enumerate()
        .map(|(slot, (i, v))| (v, y[i], i, slot))
        .collect();
    tuples.sort_unstable();
    let mut ranks = vec![0i64; x.nnz()];
    for (rank, &(_, _, _, slot)) in tuples.iter().enumerate() {
        ranks[slot] = rank as i64;
    }
    Ok(SparseVec::from_parts_unchecked(
        x.len(),
        x.indices().to_vec(),
        ranks,
    ))
}

/// Dense accumulator for SpMSpV, reset through its touched-row list so each
/// call costs time proportional to the work done, not to the row count.
#[derive(Clone, Debug, Default)]
pub struct SpmspvWorkspace {
    acc: Vec<i64>,
    occupied: Vec<bool>,
    touched: Vec<usize>,
}

impl SpmspvWorkspace {
    pub fn new(nrows: usize) -> Self {
        Self {
            acc: vec![0; nrows],
            occupied: vec![false; nrows],
            touched: Vec::new(),
        }
    }

    fn ensure(&mut self, nrows: usize) {
        if self.acc.len() < nrows {
            self.acc.resize(nrows, 0);
            self.occupied.resize(nrows, false);
        }
    }
}

/// Result of one SpMSpV together with the number of multiplies performed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpmspvOutput {
    pub vector: SparseVec,
    pub flops: u64,
}

/// `A * x` over `sr`. Rows with no contributing column are absent from the
/// result.
pub fn spmspv<M, S>(a: &M, x: &SparseVec, sr: &S) -> Result<SparseVec>
where
    M: ColumnPattern,
    S: Semiring,
{
    let mut ws = SpmspvWorkspace::new(a.nrows());
    Ok(spmspv_with(a, x, sr, &mut ws)?.vector)
}

/// [`spmspv`] reusing a caller-owned workspace, also reporting the flop count.
pub fn spmspv_with<M, S>(
    a: &M,
    x: &SparseVec,
    sr: &S,
    ws: &mut SpmspvWorkspace,
) -> Result<SpmspvOutput>
where
    M: ColumnPattern,
    S: Semiring,
{
    check_len(a.ncols(), x.len())?;
    ws.ensure(a.nrows());
    let mut flops = 0u64;
    for (k, xk) in x.iter() {
        for row in a.column(k) {
            let product = sr.multiply(1, xk);
            flops += 1;
            if ws.occupied[row] {
                ws.acc[row] = sr.add(ws.acc[row], product);
            } else {
                ws.occupied[row] = true;
                ws.acc[row] = product;
                ws.touched.push(row);
            }
        }
    }
    ws.touched.sort_unstable();
    let mut values = Vec::with_capacity(ws.touched.len());
    for &row in &ws.touched {
        values.push(ws.acc[row]);
        ws.occupied[row] = false;
    }
    let indices = std::mem::take(&mut ws.touched);
    Ok(SpmspvOutput {
        vector: SparseVec::from_parts_unchecked(a.nrows(), indices, values),
        flops,
    })
}
