use std::ops::Range;

use crate::error::{Error, Result};
use crate::grid::context::GridContext;
use crate::grid::stats::{Collective, CommStats, Counters, PrimitiveKind, Scope, TraceEvent};
use crate::primitives::{self, spmspv_with, Select2ndMin, Semiring};
use crate::rcm::{rcm_on, PrimitiveBackend, RcmOptions, RcmOutcome};
use crate::sparse::{DenseVec, SparseVec};

/// Messages for a pairwise collective (all-gather, all-to-all) within one
/// group of `g` workers.
fn pairwise(g: usize) -> u64 {
    (g * (g - 1)) as u64
}

/// Messages for a reduction or scan over `p` workers.
fn tree_reduction(p: usize) -> u64 {
    if p > 1 {
        2 * p as u64
    } else {
        0
    }
}

fn ceil_log2(k: usize) -> u64 {
    if k <= 1 {
        0
    } else {
        u64::from(usize::BITS - (k - 1).leading_zeros())
    }
}

impl GridContext {
    fn check_len(&self, got: usize) -> Result<()> {
        if got == self.n() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n(),
                got,
            })
        }
    }

    fn record(&mut self, event: TraceEvent, flops: u64) {
        let c = self.stats.get_mut(event.primitive);
        *c += Counters {
            flops,
            messages: event.messages,
            words: event.words,
        };
        self.trace.push(event);
    }

    fn charge(&mut self, kind: PrimitiveKind, flops: u64) {
        self.stats.get_mut(kind).flops += flops;
    }

    /// Splits `x` by owning worker rank.
    pub(crate) fn segments(&self, x: &SparseVec) -> Vec<Vec<(usize, i64)>> {
        let mut segs = vec![Vec::new(); self.workers()];
        for (i, v) in x.iter() {
            segs[self.owner_rank(i)].push((i, v));
        }
        segs
    }

    /// Distributed SpMSpV: all-gather of the input along grid columns,
    /// local multiply of every tile, then an all-to-all along grid rows that
    /// folds partial results with `sr.add` at the owners.
    pub fn dist_spmspv<S: Semiring>(&mut self, x: &SparseVec, sr: &S) -> Result<SparseVec> {
        self.check_len(x.len())?;
        let (pr, pc) = (self.shape.rows, self.shape.cols);
        let n = self.n();
        let segs = self.segments(x);

        // all-gather along each grid column
        let mut gathered: Vec<Vec<(usize, i64)>> = vec![Vec::new(); pc];
        let mut words = 0u64;
        let mut delivered = 0u64;
        for (rank, seg) in segs.iter().enumerate() {
            gathered[rank % pc].extend_from_slice(seg);
            words += 2 * seg.len() as u64 * (pr as u64 - 1);
            delivered += seg.len() as u64 * pr as u64;
        }
        self.record(
            TraceEvent {
                step: 0,
                primitive: PrimitiveKind::Spmspv,
                collective: Collective::AllGather,
                scope: Scope::GridColumn,
                messages: pc as u64 * pairwise(pr),
                words,
                entries_in: x.nnz() as u64,
                entries_out: delivered,
                max_delivered: gathered.iter().map(|g| g.len() as u64).max().unwrap_or(0),
            },
            0,
        );

        // local multiply on every tile
        let mut partials: Vec<SparseVec> = Vec::with_capacity(self.workers());
        let mut flops = 0u64;
        for (rank, (block, ws)) in self.blocks.iter().zip(&mut self.workspaces).enumerate() {
            let j = rank % pc;
            let start = block.cols().start;
            // owners of a column block sit in row-block order, so this is sorted
            let (idx, val): (Vec<usize>, Vec<i64>) =
                gathered[j].iter().map(|&(i, v)| (i - start, v)).unzip();
            let local = SparseVec::from_parts_unchecked(block.cols().len(), idx, val);
            let out = spmspv_with(block, &local, sr, ws)?;
            flops += out.flops;
            partials.push(out.vector);
        }

        // all-to-all along each grid row, merged at the owner
        let mut received: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.workers()];
        let mut remote = 0u64;
        let mut handed = 0u64;
        for (src, partial) in partials.iter().enumerate() {
            let row_start = self.row_block_start(src / pc);
            for (lr, v) in partial.iter() {
                let r = row_start + lr;
                let dst = self.owner_rank(r);
                debug_assert_eq!(dst / pc, src / pc);
                if dst != src {
                    remote += 1;
                }
                received[dst].push((r, v));
                handed += 1;
            }
        }
        self.record(
            TraceEvent {
                step: 0,
                primitive: PrimitiveKind::Spmspv,
                collective: Collective::AllToAll,
                scope: Scope::GridRow,
                messages: pr as u64 * pairwise(pc),
                words: 2 * remote,
                entries_in: handed,
                entries_out: received.iter().map(|r| r.len() as u64).sum(),
                max_delivered: received.iter().map(|r| r.len() as u64).max().unwrap_or(0),
            },
            flops,
        );

        let mut merged: Vec<(usize, i64)> = Vec::new();
        for mut inbox in received {
            inbox.sort_unstable_by_key(|&(i, _)| i);
            let start = merged.len();
            for (i, v) in inbox {
                match merged[start..].last_mut() {
                    Some(last) if last.0 == i => last.1 = sr.add(last.1, v),
                    _ => merged.push((i, v)),
                }
            }
        }
        merged.sort_unstable_by_key(|&(i, _)| i);
        let (idx, val) = merged.into_iter().unzip();
        Ok(SparseVec::from_parts_unchecked(n, idx, val))
    }

    /// Distributed `sort_perm` by bucket sort. Values of `x` must lie in
    /// `parent_labels`; worker `k` of `p` sorts the `k`-th equal slice of
    /// that range. Tuples travel to their bucket by all-to-all, bucket sizes
    /// are prefix-summed, and ranks travel back by a second all-to-all.
    pub fn dist_sort_perm(
        &mut self,
        x: &SparseVec,
        y: &DenseVec,
        parent_labels: Range<i64>,
    ) -> Result<SparseVec> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let (lo, hi) = (parent_labels.start, parent_labels.end);
        if let Some((index, value)) = x.iter().find(|&(_, v)| !(lo..hi).contains(&v)) {
            return Err(Error::ValueOutOfRange {
                index,
                value,
                lo,
                hi,
            });
        }
        let p = self.workers();
        let width = (hi - lo).max(1) as u128;
        let bucket_of = |v: i64| (((v - lo) as u128 * p as u128) / width) as usize;

        let mut buckets: Vec<Vec<(i64, i64, usize)>> = vec![Vec::new(); p];
        let mut remote = 0u64;
        for (i, v) in x.iter() {
            let dst = bucket_of(v);
            if dst != self.owner_rank(i) {
                remote += 1;
            }
            buckets[dst].push((v, y[i], i));
        }
        self.record(
            TraceEvent {
                step: 0,
                primitive: PrimitiveKind::SortPerm,
                collective: Collective::AllToAll,
                scope: Scope::All,
                messages: pairwise(p),
                words: 3 * remote,
                entries_in: x.nnz() as u64,
                entries_out: buckets.iter().map(|b| b.len() as u64).sum(),
                max_delivered: buckets.iter().map(|b| b.len() as u64).max().unwrap_or(0),
            },
            0,
        );

        let mut sort_flops = 0u64;
        for b in &mut buckets {
            b.sort_unstable();
            sort_flops += b.len() as u64 * ceil_log2(b.len());
        }
        self.charge(PrimitiveKind::SortPerm, sort_flops);

        let sizes: Vec<usize> = buckets.iter().map(Vec::len).collect();
        let scan_messages = tree_reduction(p);
        self.record(
            TraceEvent {
                step: 0,
                primitive: PrimitiveKind::SortPerm,
                collective: Collective::Scan,
                scope: Scope::All,
                messages: scan_messages,
                words: scan_messages,
                entries_in: p as u64,
                entries_out: p as u64,
                max_delivered: 1,
            },
            p as u64,
        );

        let mut ranked: Vec<(usize, i64)> = Vec::with_capacity(x.nnz());
        let mut inbox = vec![0u64; p];
        let mut offset = 0usize;
        remote = 0;
        for (b, bucket) in buckets.iter().enumerate() {
            for (pos, &(_, _, i)) in bucket.iter().enumerate() {
                let dst = self.owner_rank(i);
                if dst != b {
                    remote += 1;
                }
                inbox[dst] += 1;
                ranked.push((i, (offset + pos) as i64));
            }
            offset += sizes[b];
        }
        self.record(
            TraceEvent {
                step: 0,
                primitive: PrimitiveKind::SortPerm,
                collective: Collective::AllToAll,
                scope: Scope::All,
                messages: pairwise(p),
                words: 2 * remote,
                entries_in: ranked.len() as u64,
                entries_out: inbox.iter().sum(),
                max_delivered: inbox.iter().copied().max().unwrap_or(0),
            },
            0,
        );

        ranked.sort_unstable_by_key(|&(i, _)| i);
        let (idx, val) = ranked.into_iter().unzip();
        Ok(SparseVec::from_parts_unchecked(self.n(), idx, val))
    }

    /// Local arg-min on every worker followed by an all-reduce of
    /// `(value, index)` pairs.
    pub fn dist_reduce_argmin(&mut self, x: &SparseVec, y: &DenseVec) -> Result<usize> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let p = self.workers();
        let local: Vec<Option<(i64, usize)>> = self
            .segments(x)
            .into_iter()
            .map(|seg| seg.into_iter().map(|(i, _)| (y[i], i)).min())
            .collect();
        let messages = tree_reduction(p);
        self.record(
            TraceEvent {
                step: 0,
                primitive: PrimitiveKind::Reduce,
                collective: Collective::AllReduce,
                scope: Scope::All,
                messages,
                words: 2 * messages,
                entries_in: p as u64,
                entries_out: p as u64,
                max_delivered: 1,
            },
            x.nnz() as u64,
        );
        local
            .into_iter()
            .flatten()
            .min()
            .map(|(_, i)| i)
            .ok_or(Error::EmptyVector)
    }
}

impl PrimitiveBackend for GridContext {
    fn n(&self) -> usize {
        self.matrix.n()
    }

    fn spmspv(&mut self, x: &SparseVec) -> Result<SparseVec> {
        self.dist_spmspv(x, &Select2ndMin)
    }

    fn sort_perm(
        &mut self,
        x: &SparseVec,
        y: &DenseVec,
        parent_labels: Range<i64>,
    ) -> Result<SparseVec> {
        self.dist_sort_perm(x, y, parent_labels)
    }

    fn reduce_argmin(&mut self, x: &SparseVec, y: &DenseVec) -> Result<usize> {
        self.dist_reduce_argmin(x, y)
    }

    // vectors and dense vectors share one distribution, so these stay local

    fn select_unset(&mut self, x: &SparseVec, y: &DenseVec) -> Result<SparseVec> {
        self.charge(PrimitiveKind::Other, x.nnz() as u64);
        primitives::select(x, y, |v| v == DenseVec::UNSET)
    }

    fn set(&mut self, y: &mut DenseVec, x: &SparseVec) -> Result<()> {
        self.charge(PrimitiveKind::Other, x.nnz() as u64);
        primitives::set(y, x)
    }

    fn set_from_dense(&mut self, x: &mut SparseVec, y: &DenseVec) -> Result<()> {
        self.charge(PrimitiveKind::Other, x.nnz() as u64);
        primitives::set_from_dense(x, y)
    }

    fn bfs_started(&mut self) {
        self.stats.iters += 1;
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistRcm {
    /// Ordering and per-component details, in the caller's vertex ids.
    pub outcome: RcmOutcome,
    pub stats: CommStats,
}

/// RCM with every primitive executed on the grid. Accounting is reset first.
pub fn dist_rcm(ctx: &mut GridContext) -> Result<DistRcm> {
    dist_rcm_with(ctx, &RcmOptions::default())
}

/// [`dist_rcm`] with a start-vertex override (given in original ids).
/// `options.method` is ignored; the grid always runs the algebraic method.
pub fn dist_rcm_with(ctx: &mut GridContext, options: &RcmOptions) -> Result<DistRcm> {
    ctx.reset_accounting();
    let n = ctx.n();
    let mut opts = options.clone();
    if let (Some(s), Some(pi)) = (opts.start, ctx.relabel.as_ref()) {
        if s >= n {
            return Err(Error::VertexOutOfRange { vertex: s, n });
        }
        opts.start = Some(pi.new_label(s));
    }
    let d = ctx.degrees.clone();
    let mut outcome = rcm_on(ctx, &d, &opts)?;
    if let Some(pi) = ctx.relabel.as_ref() {
        outcome.permutation = pi.then(&outcome.permutation)?;
        let back = pi.inverse();
        for r in &mut outcome.roots {
            *r = back.new_label(*r);
        }
    }
    Ok(DistRcm {
        outcome,
        stats: ctx.stats.clone(),
    })
}
