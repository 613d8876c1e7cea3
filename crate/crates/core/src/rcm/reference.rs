//! Textbook queue-based Cuthill-McKee and pseudo-peripheral search. These do
//! not touch the primitives and serve as the oracle for the algebraic path.

use crate::error::{Error, Result};
use crate::rcm::levels::bfs_levels;
use crate::rcm::{PeripheralSearch, RcmOptions, RcmOutcome};
use crate::sparse::{DenseVec, Permutation, SparsePatternCsc};

fn min_degree_vertex(vertices: impl Iterator<Item = usize>, degrees: &DenseVec) -> usize {
    vertices
        .min_by_key(|&v| (degrees[v], v))
        .expect("non-empty vertex set")
}

pub(crate) fn reference_pseudo_peripheral(
    a: &SparsePatternCsc,
    degrees: &DenseVec,
    start: usize,
) -> Result<PeripheralSearch> {
    let mut ls = bfs_levels(a, start)?;
    let mut search = PeripheralSearch {
        root: start,
        eccentricity: ls.eccentricity(),
        bfs_runs: 1,
        accepted: vec![(start, ls.eccentricity())],
    };
    loop {
        let candidate = min_degree_vertex(ls.last_level().iter().copied(), degrees);
        if candidate == search.root {
            break;
        }
        let cand = bfs_levels(a, candidate)?;
        search.bfs_runs += 1;
        if cand.eccentricity() <= ls.eccentricity() {
            break;
        }
        ls = cand;
        search.root = candidate;
        search.eccentricity = ls.eccentricity();
        search.accepted.push((candidate, ls.eccentricity()));
    }
    Ok(search)
}

/// Labels the component of `root` from `base_label`: every labeled vertex,
/// in label order, appends its unlabeled neighbors sorted by
/// `(degree, index)`. Returns the labeled vertices in label order.
pub(crate) fn label_component_queue(
    a: &SparsePatternCsc,
    degrees: &DenseVec,
    root: usize,
    base_label: i64,
    cm: &mut DenseVec,
) -> Result<Vec<usize>> {
    let n = a.n();
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    let mut order = vec![root];
    cm[root] = base_label;
    let mut head = 0;
    let mut found = Vec::new();
    while head < order.len() {
        let v = order[head];
        head += 1;
        found.clear();
        found.extend(a.neighbors(v).filter(|&u| cm[u] == DenseVec::UNSET));
        found.sort_unstable_by_key(|&u| (degrees[u], u));
        for &u in &found {
            cm[u] = base_label + order.len() as i64;
            order.push(u);
        }
    }
    Ok(order)
}

pub(crate) fn reference_order(a: &SparsePatternCsc, options: &RcmOptions) -> Result<RcmOutcome> {
    let n = a.n();
    if let Some(s) = options.start {
        if s >= n {
            return Err(Error::VertexOutOfRange { vertex: s, n });
        }
    }
    let degrees = crate::sparse::degrees(a);
    let mut cm = DenseVec::unset(n);
    let mut outcome = RcmOutcome::empty(n);
    let mut labeled = 0usize;
    let mut cm_order = Vec::with_capacity(n);
    for seed in 0..n {
        if cm[seed] != DenseVec::UNSET {
            continue;
        }
        let component = bfs_levels(a, seed)?;
        outcome.bfs_runs += 1;
        let start = match options.start {
            Some(s) if component.vertices().any(|v| v == s) => s,
            _ => min_degree_vertex(component.vertices(), &degrees),
        };
        let search = reference_pseudo_peripheral(a, &degrees, start)?;
        let order = label_component_queue(a, &degrees, search.root, labeled as i64, &mut cm)?;
        labeled += order.len();
        outcome.bfs_runs += search.bfs_runs + 1;
        outcome.record_component(search, order.len());
        cm_order.extend(order);
    }
    debug_assert_eq!(labeled, n);
    let mut new_labels = vec![0; n];
    for (pos, v) in cm_order.into_iter().enumerate() {
        new_labels[v] = n - 1 - pos;
    }
    outcome.permutation = Permutation::from_new_labels(new_labels)?;
    Ok(outcome)
}
