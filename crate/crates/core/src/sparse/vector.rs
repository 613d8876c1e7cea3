use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// A subset of vertices carrying one signed integer per member.
///
/// Entries are kept sorted by index with no duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    len: usize,
    indices: Vec<usize>,
    values: Vec<i64>,
}

impl SparseVec {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            indices: Vec::new(),
            values: Vec::new(),
        }
    }

    pub fn singleton(len: usize, index: usize, value: i64) -> Result<Self> {
        Self::from_entries(len, vec![(index, value)])
    }

    /// Builds a vector from `(index, value)` pairs that must already be
    /// sorted by index and unique.
    pub fn from_entries(len: usize, entries: Vec<(usize, i64)>) -> Result<Self> {
        if let Some(w) = entries.windows(2).find(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidSparseVec(format!(
                "indices {} and {} are not strictly increasing",
                w[0].0, w[1].0
            )));
        }
        if let Some(&(i, _)) = entries.last() {
            if i >= len {
                return Err(Error::InvalidSparseVec(format!(
                    "index {i} out of range for length {len}"
                )));
            }
        }
        let (indices, values) = entries.into_iter().unzip();
        Ok(Self {
            len,
            indices,
            values,
        })
    }

    /// Like [`SparseVec::from_entries`] but sorts first. Duplicate indices
    /// are still an error.
    pub fn from_unsorted(len: usize, mut entries: Vec<(usize, i64)>) -> Result<Self> {
        entries.sort_unstable_by_key(|&(i, _)| i);
        Self::from_entries(len, entries)
    }

    pub(crate) fn from_parts_unchecked(len: usize, indices: Vec<usize>, values: Vec<i64>) -> Self {
        debug_assert_eq!(indices.len(), values.len());
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(indices.last().is_none_or(|&i| i < len));
        Self {
            len,
            indices,
            values,
        }
    }

    /// Logical length (the vertex count), not the number of entries.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut [i64] {
        &mut self.values
    }

    pub fn get(&self, index: usize) -> Option<i64> {
        self.indices
            .binary_search(&index)
            .ok()
            .map(|k| self.values[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.indices
            .iter()
            .copied()
            .zip(self.values.iter().copied())
    }

    /// Adds `offset` to every stored value.
    pub fn offset_values(&mut self, offset: i64) {
        for v in &mut self.values {
            *v += offset;
        }
    }
}

/// Full-length vector of signed integers; `-1` conventionally means unset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseVec(Vec<i64>);

impl DenseVec {
    pub const UNSET: i64 = -1;

    pub fn filled(len: usize, value: i64) -> Self {
        Self(vec![value; len])
    }

    pub fn unset(len: usize) -> Self {
        Self::filled(len, Self::UNSET)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }
}

impl From<Vec<i64>> for DenseVec {
    fn from(values: Vec<i64>) -> Self {
        Self(values)
    }
}

impl Index<usize> for DenseVec {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for DenseVec {
    fn index_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.0[i]
    }
}
