//! Immutable simple graphs on at most [`MAX_VERTICES`] vertices.
//!
//! A [`Graph`] is a vertex count plus one [`VertexSet`] adjacency row per
//! vertex. Every operation returns a new value; nothing is mutated after
//! construction, so graphs can be shared freely between worker threads.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest supported order. One adjacency row is one `u64`.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [VertexSet; MAX_VERTICES],
}

/// Position of the pair `(i, j)`, `i < j`, in column order
/// `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`.
#[inline]
pub const fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Number of vertex pairs on `n` vertices.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: [VertexSet::EMPTY; MAX_VERTICES],
        })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g.debug_check();
        Ok(g)
    }

    /// Builds a graph from a bit mask over vertex pairs in column order
    /// (bit `k` is the `k`-th pair as numbered by [`pair_index`]).
    /// Needs `n <= 11` so that all pairs fit in 64 bits.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self> {
        if pair_count(n) > 64 {
            return Err(Error::TooManyVertices(n));
        }
        let mut g = Graph::empty(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (mask >> k) & 1 == 1 {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_pair_mask`]. `None` when `n > 11`.
    pub fn pair_mask(&self) -> Option<u64> {
        if pair_count(self.n) > 64 {
            return None;
        }
        let mut mask = 0u64;
        for (u, v) in self.edges() {
            mask |= 1u64 << pair_index(u, v);
        }
        Some(mask)
    }

    /// Order of the graph.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`. Panics if `v >= 64`; returns the empty set
    /// for `n <= v < 64`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Adjacency rows `adj[0..n]`.
    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Degree `d(v)`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Minimum degree `δ(G)`; undefined on the graph with no vertices.
    pub fn min_degree(&self) -> Result<usize> {
        self.rows()
            .iter()
            .map(|r| r.len())
            .min()
            .ok_or(Error::NoVertices)
    }

    /// Lowest-index vertex of minimum degree.
    pub fn min_degree_vertex(&self) -> Result<usize> {
        let mut best: Option<(usize, usize)> = None;
        for (v, row) in self.rows().iter().enumerate() {
            let d = row.len();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((v, d));
            }
        }
        best.map(|(v, _)| v).ok_or(Error::NoVertices)
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows().iter().enumerate().flat_map(|(u, row)| {
            let above = VertexSet::from_bits(row.bits() & !VertexSet::full(u + 1).bits());
            above.iter().map(move |v| (u, v))
        })
    }

    /// Complement graph: `uv` is an edge iff `u != v` and `uv` is not an edge here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: [VertexSet::EMPTY; MAX_VERTICES],
        };
        for v in 0..self.n {
            g.adj[v] = self.adj[v].complement_within(self.n).without(v);
        }
        g.debug_check();
        g
    }

    /// `G[S]`, with the members of `S` relabeled `0..|S|` in ascending order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<Graph> {
        if let Some(v) = keep.last() {
            self.check_vertex(v)?;
        }
        let old: Vec<usize> = keep.iter().collect();
        let mut g = Graph {
            n: old.len(),
            adj: [VertexSet::EMPTY; MAX_VERTICES],
        };
        for (i, &u) in old.iter().enumerate() {
            let row = self.adj[u] & keep;
            for (j, &w) in old.iter().enumerate() {
                if row.contains(w) {
                    g.adj[i].insert(j);
                }
            }
        }
        g.debug_check();
        Ok(g)
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertices().without(v))
    }

    /// `G1 + G2`: the vertices of `other` follow those of `self`, no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut g = Graph { n, adj: self.adj };
        for v in 0..other.n {
            // other.n >= 1 here, so self.n <= 63 and the shift is in range
            g.adj[self.n + v] = VertexSet::from_bits(other.adj[v].bits() << self.n);
        }
        g.debug_check();
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::VertexOutOfRange {
                vertex: perm.len(),
                n: self.n,
            });
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            self.check_vertex(p)?;
            if seen.contains(p) {
                return Err(Error::VertexOutOfRange {
                    vertex: p,
                    n: self.n,
                });
            }
            seen.insert(p);
        }
        let mut g = Graph {
            n: self.n,
            adj: [VertexSet::EMPTY; MAX_VERTICES],
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        Ok(g)
    }

    /// `S` is pairwise non-adjacent.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// `S` is pairwise adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.adj[v]))
    }

    /// Symmetric, loop-free, and no bits at or above `n`.
    pub fn invariants_hold(&self) -> bool {
        let all = self.vertices();
        (0..MAX_VERTICES).all(|v| {
            let row = self.adj[v];
            if v >= self.n {
                return row.is_empty();
            }
            row.is_subset(all) && !row.contains(v) && row.iter().all(|u| self.adj[u].contains(v))
        })
    }

    #[inline]
    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    fn debug_check(&self) {
        debug_assert!(self.invariants_hold(), "malformed graph {self:?}");
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    /// Edge set of `G[S]` computed pair by pair.
    fn brute_induced(g: &Graph, keep: &[usize]) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for i in 0..keep.len() {
            for j in i + 1..keep.len() {
                if g.has_edge(keep[i], keep[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn from_edges_examples() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(edge_set(&p4), [(0, 1), (1, 2), (2, 3)]);
        let k3 = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        let k2 = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        assert_eq!(k2.edge_count(), 1);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(Graph::empty(65), Err(Error::TooManyVertices(65)));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            Graph::complete(3).unwrap().complement(),
            Graph::empty(3).unwrap()
        );
        let p4 = path(4);
        assert_eq!(p4.complement().complement(), p4);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let comp = two_k2.complement();
        // brute force: every pair not in 2K2
        let mut expected = vec![];
        for u in 0..4 {
            for v in u + 1..4 {
                if !two_k2.has_edge(u, v) {
                    expected.push((u, v));
                }
            }
        }
        assert_eq!(edge_set(&comp), expected);
        // and that is the 4-cycle 0-2-1-3-0
        let c4 = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(comp, c4);
    }

    #[test]
    fn complement_of_full_order() {
        let g = Graph::empty(64).unwrap().complement();
        assert_eq!(g, Graph::complete(64).unwrap());
        assert_eq!(g.edge_count(), 64 * 63 / 2);
    }

    #[test]
    fn induced_subgraph_examples() {
        let p4 = path(4);
        let s: VertexSet = [0, 1, 2].into_iter().collect();
        assert_eq!(p4.induced_subgraph(s).unwrap(), path(3));

        let k5 = Graph::complete(5).unwrap();
        let s: VertexSet = [1, 3, 4].into_iter().collect();
        assert_eq!(k5.induced_subgraph(s).unwrap(), Graph::complete(3).unwrap());

        let c5 = cycle(5);
        let keep = [0, 2, 3];
        let sub = c5.induced_subgraph(keep.into_iter().collect()).unwrap();
        assert_eq!(edge_set(&sub), brute_induced(&c5, &keep));
        assert_eq!(edge_set(&sub), [(1, 2)]);

        assert_eq!(
            p4.induced_subgraph(VertexSet::singleton(4)),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        );
        assert_eq!(p4.induced_subgraph(p4.vertices()).unwrap(), p4);
        assert_eq!(p4.induced_subgraph(VertexSet::EMPTY).unwrap().order(), 0);
    }

    #[test]
    fn delete_vertex_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.delete_vertex(0).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(path(4).delete_vertex(3).unwrap(), path(3));
        let c5 = cycle(5);
        let del = c5.delete_vertex(2).unwrap();
        assert_eq!(edge_set(&del), brute_induced(&c5, &[0, 1, 3, 4]));
        // 3-4-0-1 relabeled 2-3-0-1: a path on four vertices
        let p4 = Graph::from_edges(4, [(2, 3), (3, 0), (0, 1)]).unwrap();
        assert_eq!(del, p4);
        assert!(c5.delete_vertex(5).is_err());
    }

    #[test]
    fn disjoint_union_examples() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.disjoint_union(&k1).unwrap(), Graph::empty(2).unwrap());
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let u = k2.disjoint_union(&k3).unwrap();
        assert_eq!((u.order(), u.edge_count()), (5, 4));

        let kk = k3.disjoint_union(&k3).unwrap();
        let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let mut expected = vec![];
        for a in 0..6 {
            for b in a + 1..6 {
                if !k33.has_edge(a, b) {
                    expected.push((a, b));
                }
            }
        }
        assert_eq!(edge_set(&kk), expected);
        assert_eq!(kk, k33.complement());

        let big = Graph::empty(40).unwrap();
        assert_eq!(big.disjoint_union(&big), Err(Error::TooManyVertices(80)));
        let g = Graph::complete(63).unwrap().disjoint_union(&k1).unwrap();
        assert!(g.invariants_hold());
        assert_eq!(g.degree(63).unwrap(), 0);
    }

    #[test]
    fn degrees() {
        assert_eq!(cycle(5).min_degree().unwrap(), 2);
        assert_eq!(path(4).min_degree().unwrap(), 1);
        assert_eq!(
            Graph::empty(0).unwrap().min_degree(),
            Err(Error::NoVertices)
        );
        assert_eq!(path(4).degree(1).unwrap(), 2);
        assert!(path(4).degree(4).is_err());
        assert_eq!(path(4).min_degree_vertex().unwrap(), 0);
    }

    #[test]
    fn pair_mask_round_trip() {
        let p4 = path(4);
        let m = p4.pair_mask().unwrap();
        // (0,1)->0, (1,2)->2, (2,3)->5
        assert_eq!(m, 0b100101);
        assert_eq!(Graph::from_pair_mask(4, m).unwrap(), p4);
        assert!(Graph::from_pair_mask(12, 0).is_err());
        assert!(Graph::empty(12).unwrap().pair_mask().is_none());
    }

    #[test]
    fn permute_checks() {
        let p3 = path(3);
        let q = p3.permute(&[1, 0, 2]).unwrap();
        assert_eq!(edge_set(&q), [(0, 1), (0, 2)]);
        assert!(p3.permute(&[0, 0, 1]).is_err());
        assert!(p3.permute(&[0, 1]).is_err());
    }

    #[test]
    fn independence_predicates() {
        let p4 = path(4);
        assert!(p4.is_independent([0, 2].into_iter().collect()));
        assert!(!p4.is_independent([0, 1].into_iter().collect()));
        assert!(p4.is_clique([1, 2].into_iter().collect()));
        assert!(p4.is_clique(VertexSet::EMPTY));
    }
}
