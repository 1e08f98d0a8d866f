//! Canonical forms and isomorphism testing for graphs on at most ten vertices.
//!
//! The canonical form is the lexicographically smallest upper-triangle bit
//! string (pairs in column order `(0,1),(0,2),(1,2),(0,3),...`) over all
//! relabelings that list vertices by ascending degree. Restricting to
//! degree-sorted labelings keeps the form invariant: degree classes are
//! preserved by every isomorphism.
//!
//! The search assigns positions left to right. Placing a vertex at position
//! `p` fixes column `p` of the bit string, so at each level only candidates
//! achieving the smallest column can lead to the minimum; the rest are cut,
//! and the surviving branches are bounded against the best key found so far.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 10;

/// Labeling-invariant key: equal forms iff isomorphic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    /// Upper-triangle bits, first pair in the most significant of the
    /// `n(n-1)/2` low bits.
    key: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn key(&self) -> u64 {
        self.key
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let m = pair_count(n);
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.key >> (m - 1 - k)) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, edges).expect("canonical key decodes to a valid graph")
    }
}

struct Search<'a> {
    rows: &'a [VertexSet],
    /// Degree required at each position.
    slot_degree: [usize; CANON_MAX_ORDER],
    degree: [usize; CANON_MAX_ORDER],
    total_bits: usize,
    perm: [usize; CANON_MAX_ORDER],
    best: Option<u64>,
}

impl Search<'_> {
    /// Column `pos` bits for vertex `v` against the vertices already placed.
    #[inline]
    fn column(&self, pos: usize, v: usize) -> u64 {
        let row = self.rows[v];
        let mut c = 0u64;
        for &u in &self.perm[..pos] {
            c = (c << 1) | row.contains(u) as u64;
        }
        c
    }

    fn descend(&mut self, pos: usize, used: VertexSet, prefix: u64, bits: usize) {
        let n = self.rows.len();
        if pos == n {
            if self.best.map_or(true, |b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let want = self.slot_degree[pos];
        let mut min_col = u64::MAX;
        let mut candidates = [0usize; CANON_MAX_ORDER];
        let mut columns = [0u64; CANON_MAX_ORDER];
        let mut count = 0;
        for v in 0..n {
            if used.contains(v) || self.degree[v] != want {
                continue;
            }
            let c = self.column(pos, v);
            min_col = min_col.min(c);
            candidates[count] = v;
            columns[count] = c;
            count += 1;
        }
        let next_bits = bits + pos;
        let next_prefix = (prefix << pos) | min_col;
        for i in 0..count {
            if columns[i] != min_col {
                continue;
            }
            // siblings share next_prefix, and best only decreases
            if let Some(b) = self.best {
                if next_prefix > b >> (self.total_bits - next_bits) {
                    return;
                }
            }
            self.perm[pos] = candidates[i];
            self.descend(pos + 1, used.with(candidates[i]), next_prefix, next_bits);
        }
    }
}

/// Canonical form of `g`; `n <= 10`.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::CanonOrderTooLarge(n));
    }
    let rows = g.rows();
    let mut degree = [0usize; CANON_MAX_ORDER];
    for (v, r) in rows.iter().enumerate() {
        degree[v] = r.len();
    }
    let mut slot_degree = [0usize; CANON_MAX_ORDER];
    slot_degree[..n].copy_from_slice(&degree[..n]);
    slot_degree[..n].sort_unstable();

    let mut search = Search {
        rows,
        slot_degree,
        degree,
        total_bits: pair_count(n),
        perm: [0; CANON_MAX_ORDER],
        best: None,
    };
    search.descend(0, VertexSet::EMPTY, 0, 0);
    Ok(CanonicalForm {
        n: n as u8,
        key: search.best.unwrap_or(0),
    })
}

/// Whether `a` and `b` are isomorphic; both orders must be at most 10.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    let fa = canonical_form(a)?;
    let fb = canonical_form(b)?;
    Ok(fa == fb)
}
