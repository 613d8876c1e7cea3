use super::*;
use crate::generate;
use crate::metrics::bandwidth;
use crate::primitives::{self, Select2ndMin};
use crate::rcm::rcm;
use crate::sparse::{degrees, permute_symmetric, DenseVec, SparseVec};

fn sv(len: usize, entries: &[(usize, i64)]) -> SparseVec {
    SparseVec::from_entries(len, entries.to_vec()).unwrap()
}

fn ctx(a: &crate::sparse::SparsePatternCsc, r: usize, c: usize) -> GridContext {
    distribute(a, GridShape::new(r, c).unwrap(), 0, false).unwrap()
}

#[test]
fn single_worker_spmspv_sends_nothing() {
    let a = generate::path(4);
    let mut g = ctx(&a, 1, 1);
    let x = sv(4, &[(1, 7), (2, 9)]);
    let out = g.dist_spmspv(&x, &Select2ndMin).unwrap();
    assert_eq!(out, primitives::spmspv(&a, &x, &Select2ndMin).unwrap());
    assert_eq!(g.stats().total().messages, 0);
    assert_eq!(g.stats().total().words, 0);
}

#[test]
fn path_spmspv_on_two_by_two() {
    let a = generate::path(4);
    let mut g = ctx(&a, 2, 2);
    let out = g.dist_spmspv(&sv(4, &[(0, 5)]), &Select2ndMin).unwrap();
    assert_eq!(out, sv(4, &[(1, 5)]));
    assert!(g.trace().alltoall_conserved());
}

#[test]
fn empty_frontier_still_handshakes() {
    let a = generate::path(8);
    let mut g = ctx(&a, 2, 2);
    let out = g.dist_spmspv(&SparseVec::new(8), &Select2ndMin).unwrap();
    assert!(out.is_empty());
    let events = g.trace().events();
    assert_eq!(events.len(), 2);
    assert_eq!(events[0].scope, Scope::GridColumn);
    assert_eq!(events[1].scope, Scope::GridRow);
    // 2 columns x 2*1 pairs, then 2 rows x 2*1 pairs
    assert_eq!(events[0].messages, 4);
    assert_eq!(events[1].messages, 4);
    assert!(events.iter().all(|e| e.words == 0));
}

#[test]
fn spmspv_matches_serial_on_all_grids() {
    let mut rng = generate::rng(9);
    for a in generate::random_suite(60, 40, 21) {
        let n = a.n();
        for (r, c) in [(1, 1), (2, 2), (2, 3), (3, 1), (4, 4)] {
            let mut g = ctx(&a, r, c);
            let x = {
                use rand::Rng;
                let mut entries: Vec<(usize, i64)> = Vec::new();
                for i in 0..n {
                    if rng.gen_bool(0.3) {
                        entries.push((i, rng.gen_range(0..100)));
                    }
                }
                sv(n, &entries)
            };
            let serial =
                primitives::spmspv_with(&a, &x, &Select2ndMin, &mut Default::default()).unwrap();
            let dist = g.dist_spmspv(&x, &Select2ndMin).unwrap();
            assert_eq!(dist, serial.vector);
            // tiles partition the off-diagonal entries
            assert_eq!(g.stats().spmspv.flops, serial.flops);
            assert!(g.trace().alltoall_conserved());
        }
    }
}

#[test]
fn sort_perm_example_on_two_by_two() {
    let a = generate::path(8);
    let mut g = ctx(&a, 2, 2);
    let mut y = DenseVec::filled(8, 0);
    y[3] = 2;
    y[5] = 3;
    y[7] = 1;
    let x = sv(8, &[(3, 1), (5, 0), (7, 0)]);
    let ranks = g.dist_sort_perm(&x, &y, 0..2).unwrap();
    assert_eq!(ranks, sv(8, &[(3, 2), (5, 1), (7, 0)]));
    assert_eq!(ranks, primitives::sort_perm(&x, &y).unwrap());
    assert!(g.trace().alltoall_conserved());
}

#[test]
fn sort_perm_single_bucket_is_imbalanced_but_correct() {
    let a = generate::complete(16);
    let mut g = ctx(&a, 2, 2);
    let y = DenseVec::from((0..16).map(|v| (v % 3) as i64).collect::<Vec<_>>());
    let x = sv(16, &(0..16).map(|i| (i, 4)).collect::<Vec<_>>());
    let ranks = g.dist_sort_perm(&x, &y, 4..8).unwrap();
    assert_eq!(ranks, primitives::sort_perm(&x, &y).unwrap());
    let first = &g.trace().events()[0];
    assert_eq!(first.collective, Collective::AllToAll);
    assert_eq!(first.max_delivered, 16);
}

#[test]
fn sort_perm_rejects_out_of_range_labels() {
    let a = generate::path(4);
    let mut g = ctx(&a, 2, 2);
    let x = sv(4, &[(0, 3)]);
    assert!(matches!(
        g.dist_sort_perm(&x, &DenseVec::filled(4, 0), 0..3),
        Err(crate::Error::ValueOutOfRange { value: 3, .. })
    ));
}

#[test]
fn reduce_matches_serial() {
    let a = generate::star(9);
    let d = degrees(&a);
    for (r, c) in [(1, 1), (2, 2), (3, 2)] {
        let mut g = ctx(&a, r, c);
        let x = sv(9, &[(0, 0), (4, 0), (8, 0)]);
        assert_eq!(g.dist_reduce_argmin(&x, &d).unwrap(), 4);
        assert!(g.dist_reduce_argmin(&SparseVec::new(9), &d).is_err());
    }
}

#[test]
fn dist_rcm_matches_serial_across_grids() {
    for a in generate::random_suite(40, 48, 33) {
        let serial = rcm(&a);
        for (r, c) in [(1, 1), (2, 2), (4, 4), (2, 3), (5, 3)] {
            let run = dist_rcm(&mut ctx(&a, r, c)).unwrap();
            assert_eq!(run.outcome.permutation, serial, "grid {r}x{c}");
        }
    }
}

#[test]
fn scrambled_path_on_grid() {
    let a = generate::scrambled_path(8, &mut generate::rng(4));
    let run = dist_rcm(&mut ctx(&a, 2, 2)).unwrap();
    let b = permute_symmetric(&a, &run.outcome.permutation).unwrap();
    assert_eq!(bandwidth(&b), 1);
}

#[test]
fn randomized_run_is_a_valid_ordering() {
    let k = 8;
    let a = generate::grid2d(k);
    let shape = GridShape::square(2).unwrap();
    let mut g = distribute(&a, shape, 7, true).unwrap();
    let run = dist_rcm(&mut g).unwrap();
    let b = permute_symmetric(&a, &run.outcome.permutation).unwrap();
    assert!(bandwidth(&b) <= k + 1);
    // same as ordering the relabeled matrix serially, mapped back
    let relabeled_order = rcm(g.matrix());
    let pi = g.relabeling().unwrap();
    assert_eq!(run.outcome.permutation, pi.then(&relabeled_order).unwrap());
    let again = dist_rcm(&mut distribute(&a, shape, 7, true).unwrap()).unwrap();
    assert_eq!(again, run);
}

#[test]
fn repeated_runs_have_identical_accounting() {
    let a = generate::erdos_renyi(40, 0.08, false, &mut generate::rng(5));
    let mut g = ctx(&a, 2, 3);
    let first = dist_rcm(&mut g).unwrap();
    let trace = g.trace().clone();
    let second = dist_rcm(&mut g).unwrap();
    assert_eq!(first, second);
    assert_eq!(&trace, g.trace());
}

#[test]
fn per_primitive_counters_sum_to_trace() {
    let a = generate::grid2d(6);
    let mut g = ctx(&a, 2, 2);
    let run = dist_rcm(&mut g).unwrap();
    let s = &run.stats;
    let trace_messages: u64 = g.trace().events().iter().map(|e| e.messages).sum();
    let trace_words: u64 = g.trace().events().iter().map(|e| e.words).sum();
    assert_eq!(s.total().messages, trace_messages);
    assert_eq!(s.total().words, trace_words);
    for kind in [
        PrimitiveKind::Spmspv,
        PrimitiveKind::SortPerm,
        PrimitiveKind::Reduce,
    ] {
        let m: u64 = g
            .trace()
            .events()
            .iter()
            .filter(|e| e.primitive == kind)
            .map(|e| e.messages)
            .sum();
        assert_eq!(s.get(kind).messages, m);
    }
    assert_eq!(s.other.messages, 0);
    assert_eq!(s.iters, run.outcome.bfs_runs);
    assert!(g.trace().alltoall_conserved());
}

#[test]
fn messages_grow_with_grid() {
    let a = generate::grid2d(10);
    let mut totals = Vec::new();
    for side in [1, 2, 4] {
        let run = dist_rcm(&mut ctx(&a, side, side)).unwrap();
        totals.push((run.stats.total().messages, run.stats.iters));
    }
    assert_eq!(totals[0].0, 0);
    assert!(totals[0].0 < totals[1].0 && totals[1].0 < totals[2].0);
    assert!(totals.iter().all(|t| t.1 == totals[0].1));
}

#[test]
fn start_override_is_mapped_through_relabeling() {
    let a = generate::path(9);
    let opts = crate::rcm::RcmOptions {
        start: Some(4),
        ..Default::default()
    };
    let plain = crate::rcm::rcm_with(&a, &opts).unwrap();
    let mut g = distribute(&a, GridShape::square(2).unwrap(), 1, true).unwrap();
    let run = dist_rcm_with(&mut g, &opts).unwrap();
    assert_eq!(run.outcome.pseudo_diameter, plain.pseudo_diameter);
    assert_eq!(
        bandwidth(&permute_symmetric(&a, &run.outcome.permutation).unwrap()),
        1
    );
    assert!(dist_rcm_with(
        &mut g,
        &crate::rcm::RcmOptions {
            start: Some(9),
            ..Default::default()
        }
    )
    .is_err());
}
