//! Seeded synthetic graphs for tests, benchmarks and the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::sparse::{Permutation, SparsePatternCsc};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    Permutation::from_new_labels(labels).expect("shuffle of 0..n is a bijection")
}

pub fn path(n: usize) -> SparsePatternCsc {
    SparsePatternCsc::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid indices")
}

/// Path `0-1-...-(n-1)` with vertex ids shuffled.
pub fn scrambled_path<R: Rng>(n: usize, rng: &mut R) -> SparsePatternCsc {
    let p = random_permutation(n, rng);
    let l = p.new_labels();
    SparsePatternCsc::from_edges(n, (1..n).map(|i| (l[i - 1], l[i]))).expect("valid indices")
}

pub fn star(n: usize) -> SparsePatternCsc {
    SparsePatternCsc::from_edges(n, (1..n).map(|i| (0, i))).expect("valid indices")
}

pub fn complete(n: usize) -> SparsePatternCsc {
    SparsePatternCsc::from_edges(n, (0..n).flat_map(|i| (0..i).map(move |j| (i, j))))
        .expect("valid indices")
}

/// `k x k` 5-point stencil graph, row-major vertex ids.
pub fn grid2d(k: usize) -> SparsePatternCsc {
    let id = |r: usize, c: usize| r * k + c;
    let mut edges = Vec::new();
    for r in 0..k {
        for c in 0..k {
            if c + 1 < k {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < k {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    SparsePatternCsc::from_edges(k * k, edges).expect("valid indices")
}

/// Erdős–Rényi `G(n, p)`, optionally with a few self-loops sprinkled in.
pub fn erdos_renyi<R: Rng>(n: usize, p: f64, self_loops: bool, rng: &mut R) -> SparsePatternCsc {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..i {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
        if self_loops && rng.gen_bool(0.1) {
            edges.push((i, i));
        }
    }
    SparsePatternCsc::from_edges(n, edges).expect("valid indices")
}

/// Uniformly attached random tree: vertex `i` hangs off a random earlier
/// vertex, then ids are shuffled.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> SparsePatternCsc {
    let p = random_permutation(n, rng);
    let l = p.new_labels().to_vec();
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (l[i], l[rng.gen_range(0..i)])).collect();
    SparsePatternCsc::from_edges(n, edges).expect("valid indices")
}

/// Disjoint union, with `b`'s vertices numbered after `a`'s.
pub fn disjoint_union(a: &SparsePatternCsc, b: &SparsePatternCsc) -> SparsePatternCsc {
    let off = a.n();
    let edges = a
        .entries()
        .chain(b.entries().map(|(i, j)| (i + off, j + off)));
    SparsePatternCsc::from_edges(a.n() + b.n(), edges).expect("valid indices")
}

/// The mixed random suite: Erdős–Rényi graphs across densities (connected
/// and not), random trees and forests, with `n` in `1..=max_n`.
pub fn random_suite(count: usize, max_n: usize, seed: u64) -> Vec<SparsePatternCsc> {
    let mut rng = rng(seed);
    (0..count)
        .map(|k| {
            let n = rng.gen_range(1..=max_n);
            match k % 4 {
                0 => {
                    let p = rng.gen_range(0.0..0.3);
                    erdos_renyi(n, p, rng.gen_bool(0.3), &mut rng)
                }
                1 => {
                    // dense enough to usually be connected
                    let p = (2.0 * (n as f64).ln().max(1.0) / n as f64).min(1.0);
                    erdos_renyi(n, p, false, &mut rng)
                }
                2 => random_tree(n, &mut rng),
                _ => {
                    let split = rng.gen_range(0..=n);
                    let forest = disjoint_union(
                        &random_tree(split, &mut rng),
                        &random_tree(n - split, &mut rng),
                    );
                    let p = random_permutation(n, &mut rng);
                    crate::sparse::permute_symmetric(&forest, &p).expect("same order")
                }
            }
        })
        .collect()
}
