use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// A bijection on `0..n`, stored as `new_label[v]` = position of vertex `v`
/// in the new ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    new_label: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            new_label: (0..n).collect(),
        }
    }

    pub fn from_new_labels(new_label: Vec<usize>) -> Result<Self> {
        let n = new_label.len();
        let mut seen = vec![false; n];
        for (v, &label) in new_label.iter().enumerate() {
            if label >= n {
                return Err(Error::InvalidPermutation(format!(
                    "vertex {v} has label {label}, expected < {n}"
                )));
            }
            if std::mem::replace(&mut seen[label], true) {
                return Err(Error::InvalidPermutation(format!(
                    "label {label} assigned twice"
                )));
            }
        }
        Ok(Self { new_label })
    }

    /// Builds the permutation that places `order[k]` at position `k`.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        Self::from_new_labels(order.to_vec())?;
        let mut new_label = vec![0; order.len()];
        for (pos, &v) in order.iter().enumerate() {
            new_label[v] = pos;
        }
        Ok(Self { new_label })
    }

    pub fn len(&self) -> usize {
        self.new_label.len()
    }

    pub fn is_empty(&self) -> bool {
        self.new_label.is_empty()
    }

    pub fn new_label(&self, v: usize) -> usize {
        self.new_label[v]
    }

    pub fn new_labels(&self) -> &[usize] {
        &self.new_label
    }

    /// Vertices listed by their new position.
    pub fn order(&self) -> Vec<usize> {
        self.inverse().new_label
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (v, &label) in self.new_label.iter().enumerate() {
            inv[label] = v;
        }
        Self { new_label: inv }
    }

    /// `self` applied first, then `then`.
    pub fn then(&self, then: &Permutation) -> Result<Self> {
        if then.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: then.len(),
            });
        }
        Ok(Self {
            new_label: self.new_label.iter().map(|&l| then.new_label[l]).collect(),
        })
    }
}

/// Writes one line per vertex: line `v` holds `new_label[v]`, 0-based.
pub fn write_permutation<W: Write>(p: &Permutation, mut out: W) -> std::io::Result<()> {
    for &label in p.new_labels() {
        writeln!(out, "{label}")?;
    }
    out.flush()
}

/// Reads the format of [`write_permutation`]. Blank lines are skipped.
pub fn read_permutation<R: BufRead>(reader: R) -> Result<Permutation> {
    let mut labels = Vec::new();
    for (k, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::InvalidPermutation(e.to_string()))?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let label = t.parse().map_err(|_| {
            Error::InvalidPermutation(format!("line {}: `{t}` is not a label", k + 1))
        })?;
        labels.push(label);
    }
    Permutation::from_new_labels(labels)
}
