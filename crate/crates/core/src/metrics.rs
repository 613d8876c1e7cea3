//! Ordering quality: bandwidth, envelope (profile) size and the summary
//! report printed by the CLI.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::sparse::{permute_symmetric, Permutation, SparsePatternCsc};

/// Column bandwidths `beta_i = i - f_i`, where `f_i` is the smallest row
/// index stored in column `i`. Columns whose first entry is on or below the
/// diagonal contribute 0.
pub fn column_bandwidths(a: &SparsePatternCsc) -> Vec<usize> {
    (0..a.n())
        .map(|i| match a.rows_of(i).first() {
            Some(&first) if first < i => i - first,
            _ => 0,
        })
        .collect()
}

/// `max |i - j|` over stored entries; 0 for an empty or diagonal matrix.
pub fn bandwidth(a: &SparsePatternCsc) -> usize {
    a.entries().map(|(i, j)| i.abs_diff(j)).max().unwrap_or(0)
}

/// Bandwidth from the first-nonzero-per-column formulation. Agrees with
/// [`bandwidth`] on any symmetric pattern.
pub fn bandwidth_by_columns(a: &SparsePatternCsc) -> usize {
    column_bandwidths(a).into_iter().max().unwrap_or(0)
}

/// Envelope size `sum_i beta_i`.
pub fn envelope_size(a: &SparsePatternCsc) -> usize {
    column_bandwidths(a).into_iter().sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingReport {
    pub n: usize,
    /// Stored entries, both triangles.
    pub m: usize,
    pub bandwidth_before: usize,
    pub bandwidth_after: usize,
    pub envelope_before: usize,
    pub envelope_after: usize,
    pub pseudo_diameter: usize,
    pub components: usize,
}

/// Number of connected components (isolated vertices count as one each).
pub fn component_count(a: &SparsePatternCsc) -> usize {
    let n = a.n();
    let mut seen = vec![false; n];
    let mut stack = Vec::new();
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for u in a.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    count
}

pub fn report(
    a: &SparsePatternCsc,
    p: &Permutation,
    pseudo_diameter: usize,
) -> Result<OrderingReport> {
    let b = permute_symmetric(a, p)?;
    Ok(OrderingReport {
        n: a.n(),
        m: a.nnz(),
        bandwidth_before: bandwidth(a),
        bandwidth_after: bandwidth(&b),
        envelope_before: envelope_size(a),
        envelope_after: envelope_size(&b),
        pseudo_diameter,
        components: component_count(a),
    })
}
