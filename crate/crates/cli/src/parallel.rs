//! Parallel drivers for bound verification.
//!
//! Work is cut into index-contiguous chunks, each folded into its own
//! [`ScanAccumulator`] on a worker, and the partial accumulators are merged
//! in chunk order. Reports are identical for any worker count.

use std::io::BufRead;

use mis_extremal_core::extremal::{
    labeled_graphs, Coverage, ExtremalReport, ScanAccumulator, Side,
};
use mis_extremal_core::Graph;
use rayon::prelude::*;
use thiserror::Error;

use crate::codec::{CodecError, GraphStream};

/// Masks per exhaustive work unit.
const MASK_CHUNK: u64 = 1 << 12;
/// Graphs read from a stream before fanning out.
const STREAM_BATCH: usize = 1 << 14;
/// Graphs per stream work unit.
const STREAM_CHUNK: usize = 256;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Core(#[from] mis_extremal_core::Error),
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error(
        "line {line}: graph has {found} vertices but the stream started with order {expected}"
    )]
    MixedOrders {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("input stream contains no graphs")]
    EmptyStream,
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Target sizes to check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Targets {
    One(usize),
    /// Every `t` in `1..=n`.
    All,
}

impl Targets {
    pub fn resolve(&self, n: usize) -> Vec<usize> {
        match self {
            Targets::One(t) => vec![*t],
            Targets::All => (1..=n).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub side: Side,
    pub targets: Targets,
    pub workers: usize,
    pub allow_order_8: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            side: Side::Mis,
            targets: Targets::All,
            workers: 1,
            allow_order_8: false,
        }
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, VerifyError> {
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()?)
}

/// Scans every labeled graph on `n` vertices.
pub fn verify_exhaustive(
    n: usize,
    opts: &VerifyOptions,
) -> Result<Vec<ExtremalReport>, VerifyError> {
    let all = labeled_graphs(n, opts.allow_order_8)?;
    let ts = opts.targets.resolve(n);
    let empty = ScanAccumulator::new(n, opts.side, &ts)?;
    let total = all.masks().end;
    let chunks: Vec<u64> = (0..total.div_ceil(MASK_CHUNK)).collect();

    let parts = pool(opts.workers)?.install(|| {
        chunks
            .par_iter()
            .map(|&c| {
                let mut acc = empty.clone();
                let slice = all.slice(c * MASK_CHUNK..(c + 1) * MASK_CHUNK);
                let start = slice.masks().start;
                for (i, g) in slice.enumerate() {
                    acc.observe(start + i as u64, &g)?;
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>, mis_extremal_core::Error>>()
    })?;

    let mut acc = empty;
    for part in parts {
        acc.merge(part);
    }
    Ok(acc.finish(&Coverage::ExhaustiveLabeled(n))?)
}

fn fold_batch(
    pool: &rayon::ThreadPool,
    empty: &ScanAccumulator,
    first_index: u64,
    batch: &[Graph],
) -> Result<Vec<ScanAccumulator>, mis_extremal_core::Error> {
    pool.install(|| {
        batch
            .par_chunks(STREAM_CHUNK)
            .enumerate()
            .map(|(c, graphs)| {
                let mut acc = empty.clone();
                let base = first_index + (c * STREAM_CHUNK) as u64;
                for (i, g) in graphs.iter().enumerate() {
                    acc.observe(base + i as u64, g)?;
                }
                Ok(acc)
            })
            .collect()
    })
}

/// Scans the graphs of `stream`, which must all share one order.
/// `source` names the stream in the report's coverage line.
pub fn verify_stream<R: BufRead>(
    mut stream: GraphStream<R>,
    source: &str,
    opts: &VerifyOptions,
) -> Result<Vec<ExtremalReport>, VerifyError> {
    let first = stream.next().ok_or(VerifyError::EmptyStream)??;
    let n = first.graph.order();
    let ts = opts.targets.resolve(n);
    let empty = ScanAccumulator::new(n, opts.side, &ts)?;
    let pool = pool(opts.workers)?;

    let mut acc = empty.clone();
    let mut batch = vec![first.graph];
    let mut batch_start = 0u64;
    loop {
        let mut exhausted = false;
        while batch.len() < STREAM_BATCH {
            match stream.next() {
                Some(rec) => {
                    let rec = rec?;
                    if rec.graph.order() != n {
                        return Err(VerifyError::MixedOrders {
                            line: rec.line,
                            expected: n,
                            found: rec.graph.order(),
                        });
                    }
                    batch.push(rec.graph);
                }
                None => {
                    exhausted = true;
                    break;
                }
            }
        }
        for part in fold_batch(&pool, &empty, batch_start, &batch)? {
            acc.merge(part);
        }
        batch_start += batch.len() as u64;
        batch.clear();
        if exhausted {
            break;
        }
    }
    Ok(acc.finish(&Coverage::Stream(source.to_owned()))?)
}
