use crate::error::{Error, Result};
use crate::rcm::backend::PrimitiveBackend;
use crate::rcm::{PeripheralSearch, RcmOptions, RcmOutcome};
use crate::sparse::{DenseVec, Permutation, SparseVec};

/// Reusable per-run scratch: the BFS level vector and the list of entries to
/// reset afterwards.
pub(crate) struct Scratch {
    levels: DenseVec,
    visited: Vec<usize>,
}

impl Scratch {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            levels: DenseVec::unset(n),
            visited: Vec::new(),
        }
    }

    fn reset(&mut self) {
        for &v in &self.visited {
            self.levels[v] = DenseVec::UNSET;
        }
        self.visited.clear();
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}

/// One level-synchronous BFS from `root`. Returns the eccentricity of `root`
/// and its last non-empty level. The visited set stays in `scratch` until
/// the next reset.
fn bfs<B: PrimitiveBackend>(
    backend: &mut B,
    root: usize,
    scratch: &mut Scratch,
) -> Result<(usize, SparseVec)> {
    backend.bfs_started();
    scratch.reset();
    let n = backend.n();
    scratch.levels[root] = 0;
    scratch.visited.push(root);
    let mut cur = SparseVec::singleton(n, root, 0)?;
    let mut depth = 0usize;
    loop {
        backend.set_from_dense(&mut cur, &scratch.levels)?;
        let reached = backend.spmspv(&cur)?;
        let mut next = backend.select_unset(&reached, &scratch.levels)?;
        if next.is_empty() {
            break;
        }
        depth += 1;
        for v in next.values_mut() {
            *v = depth as i64;
        }
        backend.set(&mut scratch.levels, &next)?;
        scratch.visited.extend_from_slice(next.indices());
        cur = next;
    }
    Ok((depth, cur))
}

/// Iterated BFS with last-level shrinking. Each round picks the
/// minimum-degree vertex of the current root's last level and keeps it only
/// if its level structure is strictly longer.
pub(crate) fn pseudo_peripheral_on<B: PrimitiveBackend>(
    backend: &mut B,
    degrees: &DenseVec,
    start: usize,
    scratch: &mut Scratch,
) -> Result<PeripheralSearch> {
    let n = backend.n();
    check_vertex(start, n)?;
    if degrees.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: degrees.len(),
        });
    }
    let (mut ecc, mut last) = bfs(backend, start, scratch)?;
    let mut search = PeripheralSearch {
        root: start,
        eccentricity: ecc,
        bfs_runs: 1,
        accepted: vec![(start, ecc)],
    };
    loop {
        let candidate = backend.reduce_argmin(&last, degrees)?;
        if candidate == search.root {
            break;
        }
        let (cand_ecc, cand_last) = bfs(backend, candidate, scratch)?;
        search.bfs_runs += 1;
        if cand_ecc <= ecc {
            break;
        }
        ecc = cand_ecc;
        last = cand_last;
        search.root = candidate;
        search.eccentricity = ecc;
        search.accepted.push((candidate, ecc));
    }
    scratch.reset();
    Ok(search)
}

/// Cuthill-McKee labels for the component of `root`, starting at
/// `base_label`. Writes into `cm` (unset entries must be `-1`) and returns
/// the size of each labeled level.
pub(crate) fn label_component_on<B: PrimitiveBackend>(
    backend: &mut B,
    degrees: &DenseVec,
    root: usize,
    base_label: i64,
    cm: &mut DenseVec,
) -> Result<Vec<usize>> {
    let n = backend.n();
    check_vertex(root, n)?;
    backend.bfs_started();
    cm[root] = base_label;
    let mut labeled = base_label + 1;
    let mut cur = SparseVec::singleton(n, root, base_label)?;
    let mut level_sizes = vec![1];
    loop {
        backend.set_from_dense(&mut cur, cm)?;
        let reached = backend.spmspv(&cur)?;
        let next = backend.select_unset(&reached, cm)?;
        if next.is_empty() {
            break;
        }
        // the frontier holds the most recently assigned block of labels
        let parents = (labeled - cur.nnz() as i64)..labeled;
        let mut ranks = backend.sort_perm(&next, degrees, parents)?;
        ranks.offset_values(labeled);
        labeled += ranks.nnz() as i64;
        backend.set(cm, &ranks)?;
        level_sizes.push(next.nnz());
        cur = next;
    }
    Ok(level_sizes)
}

/// Orders every component and reverses the concatenated CM labeling.
pub(crate) fn order_on<B: PrimitiveBackend>(
    backend: &mut B,
    degrees: &DenseVec,
    options: &RcmOptions,
) -> Result<RcmOutcome> {
    let n = backend.n();
    if let Some(s) = options.start {
        check_vertex(s, n)?;
    }
    let mut cm = DenseVec::unset(n);
    let mut scratch = Scratch::new(n);
    let mut outcome = RcmOutcome::empty(n);
    let mut labeled = 0usize;
    let mut next_unvisited = 0usize;

    while labeled < n {
        while cm[next_unvisited] != DenseVec::UNSET {
            next_unvisited += 1;
        }
        // discover the component to find its minimum-degree vertex
        bfs(backend, next_unvisited, &mut scratch)?;
        outcome.bfs_runs += 1;
        let start = match options.start {
            Some(s) if scratch.levels[s] != DenseVec::UNSET => s,
            _ => {
                let mut members = scratch.visited.clone();
                members.sort_unstable();
                let component =
                    SparseVec::from_parts_unchecked(n, members, vec![0; scratch.visited.len()]);
                backend.reduce_argmin(&component, degrees)?
            }
        };
        let search = pseudo_peripheral_on(backend, degrees, start, &mut scratch)?;
        let sizes = label_component_on(backend, degrees, search.root, labeled as i64, &mut cm)?;
        let count: usize = sizes.iter().sum();
        labeled += count;
        outcome.bfs_runs += search.bfs_runs + 1;
        outcome.record_component(search, count);
    }

    let new_labels = cm
        .as_slice()
        .iter()
        .map(|&label| n - 1 - label as usize)
        .collect();
    outcome.permutation = Permutation::from_new_labels(new_labels)?;
    Ok(outcome)
}
