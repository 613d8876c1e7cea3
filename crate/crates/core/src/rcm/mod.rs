//! Reverse Cuthill-McKee ordering.
//!
//! Two independent implementations share one contract. The algebraic one is
//! written purely in terms of the primitives (through [`PrimitiveBackend`],
//! so it also runs on the simulated grid); the reference one is the classic
//! queue algorithm. Ties are broken by smallest vertex index everywhere,
//! which makes the two produce identical permutations.

mod algebraic;
mod backend;
mod levels;
mod reference;

pub use backend::{PrimitiveBackend, SerialBackend};
pub use levels::{bfs_levels, LevelStructure};

use crate::error::{Error, Result};
use crate::sparse::{degrees, DenseVec, Permutation, SparsePatternCsc, SparseVec};

/// Result of a pseudo-peripheral vertex search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeripheralSearch {
    /// Root of the last completed BFS.
    pub root: usize,
    pub eccentricity: usize,
    /// Full BFS traversals performed, rejected candidates included.
    pub bfs_runs: usize,
    /// Every accepted root with its eccentricity, starting vertex first.
    pub accepted: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Built from SpMSpV, select, set, reduce and sort_perm.
    #[default]
    Algebraic,
    /// Queue-based reference.
    Reference,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RcmOptions {
    pub method: Method,
    /// Seeds the pseudo-peripheral search of the component containing this
    /// vertex. Other components still start from their minimum-degree vertex.
    pub start: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcmOutcome {
    pub permutation: Permutation,
    pub components: usize,
    /// Largest pseudo-peripheral eccentricity over all components.
    pub pseudo_diameter: usize,
    /// Component discovery, peripheral search and labeling traversals.
    pub bfs_runs: usize,
    /// Pseudo-peripheral root of each component, in processing order.
    pub roots: Vec<usize>,
    pub component_sizes: Vec<usize>,
}

impl RcmOutcome {
    fn empty(n: usize) -> Self {
        Self {
            permutation: Permutation::identity(n),
            components: 0,
            pseudo_diameter: 0,
            bfs_runs: 0,
            roots: Vec::new(),
            component_sizes: Vec::new(),
        }
    }

    fn record_component(&mut self, search: PeripheralSearch, size: usize) {
        self.components += 1;
        self.pseudo_diameter = self.pseudo_diameter.max(search.eccentricity);
        self.roots.push(search.root);
        self.component_sizes.push(size);
    }
}

fn check_degrees(a: &SparsePatternCsc, d: &DenseVec) -> Result<()> {
    if d.len() == a.n() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: a.n(),
            got: d.len(),
        })
    }
}

/// Pseudo-peripheral vertex of `start`'s component, found with the
/// algebraic primitives.
pub fn pseudo_peripheral(
    a: &SparsePatternCsc,
    d: &DenseVec,
    start: usize,
) -> Result<PeripheralSearch> {
    check_degrees(a, d)?;
    let mut backend = SerialBackend::new(a);
    let mut scratch = algebraic::Scratch::new(a.n());
    algebraic::pseudo_peripheral_on(&mut backend, d, start, &mut scratch)
}

/// Same search using queue-based level structures.
pub fn reference_pseudo_peripheral(
    a: &SparsePatternCsc,
    d: &DenseVec,
    start: usize,
) -> Result<PeripheralSearch> {
    check_degrees(a, d)?;
    reference::reference_pseudo_peripheral(a, d, start)
}

fn labels_over_component(cm: &DenseVec) -> SparseVec {
    let (indices, values) = cm
        .as_slice()
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l != DenseVec::UNSET)
        .map(|(v, &l)| (v, l))
        .unzip();
    SparseVec::from_parts_unchecked(cm.len(), indices, values)
}

/// Cuthill-McKee labels (not reversed) of `r`'s component, numbered
/// consecutively from `base_label`, computed with the primitives. Returns
/// the labels and how many vertices were labeled.
pub fn rcm_order_algebraic(
    a: &SparsePatternCsc,
    d: &DenseVec,
    r: usize,
    base_label: i64,
) -> Result<(SparseVec, usize)> {
    check_degrees(a, d)?;
    let mut backend = SerialBackend::new(a);
    let mut cm = DenseVec::unset(a.n());
    let sizes = algebraic::label_component_on(&mut backend, d, r, base_label, &mut cm)?;
    Ok((labels_over_component(&cm), sizes.iter().sum()))
}

/// Queue-based counterpart of [`rcm_order_algebraic`].
pub fn reference_rcm(
    a: &SparsePatternCsc,
    d: &DenseVec,
    r: usize,
    base_label: i64,
) -> Result<(SparseVec, usize)> {
    check_degrees(a, d)?;
    let mut cm = DenseVec::unset(a.n());
    let order = reference::label_component_queue(a, d, r, base_label, &mut cm)?;
    Ok((labels_over_component(&cm), order.len()))
}

/// Runs the algebraic ordering on an arbitrary primitive backend.
pub fn rcm_on<B: PrimitiveBackend>(
    backend: &mut B,
    d: &DenseVec,
    options: &RcmOptions,
) -> Result<RcmOutcome> {
    if d.len() != backend.n() {
        return Err(Error::DimensionMismatch {
            expected: backend.n(),
            got: d.len(),
        });
    }
    algebraic::order_on(backend, d, options)
}

pub fn rcm_with(a: &SparsePatternCsc, options: &RcmOptions) -> Result<RcmOutcome> {
    match options.method {
        Method::Algebraic => rcm_on(&mut SerialBackend::new(a), &degrees(a), options),
        Method::Reference => reference::reference_order(a, options),
    }
}

/// Reverse Cuthill-McKee permutation of `a`, algebraic method, default seeds.
pub fn rcm(a: &SparsePatternCsc) -> Permutation {
    rcm_with(a, &RcmOptions::default())
        .expect("default options on a valid pattern cannot fail")
        .permutation
}
