//! The sharp bound on maximal independent sets of size `t`, its extremal
//! graphs, proof-trace diagnostics and exhaustive verification.
//!
//! For `n = q t + r` with `0 <= r < t`, every graph on `n` vertices has at
//! most `f(n, t) = q^(t-r) (q+1)^r` maximal independent sets of size `t`,
//! and `H = (t-r) K_q + r K_{q+1}` is the only graph attaining it. Under
//! complementation the statement becomes one about maximal cliques of size
//! `t`, with the Turán graph `T(n, t)` as the unique extremal graph.

mod split;
mod verify;

pub use split::{
    induction_split, no_t_clique_condition, subcase, SplitReport, Subcase, VertexChoice,
};
pub use verify::{
    labeled_graph_count, labeled_graphs, verify_bound, Coverage, ExtremalReport, LabeledGraphs,
    ScanAccumulator, Side, EXHAUSTIVE_DEFAULT_MAX, EXHAUSTIVE_OPT_IN_MAX,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::vertex_set::VertexSet;

/// `n = q t + r`, `0 <= r < t`, and `f = q^(t-r) (q+1)^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundDecomposition {
    pub n: usize,
    pub t: usize,
    pub q: usize,
    pub r: usize,
    pub f: u64,
}

fn checked_pow(base: usize, exp: usize) -> Result<u64> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow)?;
    (base as u64).checked_pow(exp).ok_or(Error::Overflow)
}

/// The bound `f(n, t)`. For `n < t` this is `0` (there is no independent set
/// of size `t`); for `n = t` it is `1`.
pub fn bound_f(n: usize, t: usize) -> Result<BoundDecomposition> {
    if t == 0 {
        return Err(Error::ZeroTargetSize);
    }
    let (q, r) = (n / t, n % t);
    let f = checked_pow(q, t - r)?
        .checked_mul(checked_pow(q + 1, r)?)
        .ok_or(Error::Overflow)?;
    Ok(BoundDecomposition { n, t, q, r, f })
}

/// Block sizes `q` (repeated `t - r` times) then `q + 1` (repeated `r` times).
fn balanced_blocks(n: usize, t: usize) -> impl Iterator<Item = (usize, usize)> {
    let (q, r) = (n / t, n % t);
    let mut start = 0;
    (0..t).map(move |i| {
        let len = if i < t - r { q } else { q + 1 };
        let block = (start, len);
        start += len;
        block
    })
}

/// `H = (t-r) K_q + r K_{q+1}` with vertices numbered block by block.
pub fn build_h(n: usize, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::ZeroTargetSize);
    }
    if n < t {
        return Err(Error::OrderBelowTarget { n, t });
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges = alloc::vec::Vec::new();
    for (start, len) in balanced_blocks(n, t) {
        for u in start..start + len {
            for v in u + 1..start + len {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Turán graph `T(n, k)`: complete `k`-partite, part sizes `q` then `q + 1`
/// in the same block order as [`build_h`].
pub fn build_turan(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k > n {
        return Err(Error::PartsOutOfRange { n, k });
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut part = [0usize; MAX_VERTICES];
    for (i, (start, len)) in balanced_blocks(n, k).enumerate() {
        part[start..start + len].fill(i);
    }
    let mut edges = alloc::vec::Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Classical maximum of the total number of maximal independent sets over
/// graphs on `n >= 2` vertices: `3^(n/3)`, `4·3^((n-4)/3)` or `2·3^((n-2)/3)`
/// according to `n mod 3`.
pub fn moon_moser_total(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::MoonMoserOrder(n));
    }
    let (factor, exp) = match n % 3 {
        0 => (1, n / 3),
        1 => (4, (n - 4) / 3),
        _ => (2, (n - 2) / 3),
    };
    checked_pow(3, exp)?
        .checked_mul(factor)
        .ok_or(Error::Overflow)
}

/// Vertices of `H(n, t)` block `i`; used by tests that need the block layout.
#[doc(hidden)]
pub fn h_blocks(n: usize, t: usize) -> alloc::vec::Vec<VertexSet> {
    balanced_blocks(n, t)
        .map(|(start, len)| VertexSet::full(start + len) - VertexSet::full(start))
        .collect()
}
