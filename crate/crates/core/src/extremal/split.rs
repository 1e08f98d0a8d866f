//! Diagnostics mirroring the induction on `n + t`, in the clique framing:
//! degree thresholds that rule out `t`-maximal cliques, and the split of the
//! `t`-maximal cliques by whether they contain a chosen vertex.

use core::fmt;

use super::bound_f;
use crate::enumerate::{enumerate_maximal_cliques, maximal_clique_size_profile};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which branch of the case analysis `(G, t)` falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subcase {
    /// `n < t`: no clique of size `t` exists at all.
    Trivial,
    /// `r > 0`, `δ(G) >= n - q`.
    OneA,
    /// `r > 0`, `δ(G) <= n - q - 1`.
    OneB,
    /// `r = 0`, `δ(G) >= n - q + 1`.
    TwoA,
    /// `r = 0`, `δ(G) <= n - q`.
    TwoB,
}

impl Subcase {
    pub fn as_str(self) -> &'static str {
        match self {
            Subcase::Trivial => "trivial",
            Subcase::OneA => "1a",
            Subcase::OneB => "1b",
            Subcase::TwoA => "2a",
            Subcase::TwoB => "2b",
        }
    }
}

impl fmt::Display for Subcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies `(G, t)` by `r` and the minimum-degree threshold.
pub fn subcase(g: &Graph, t: usize) -> Result<Subcase> {
    let b = bound_f(g.order(), t)?;
    if b.n < t {
        return Ok(Subcase::Trivial);
    }
    let delta = g.min_degree()?;
    Ok(if b.r > 0 {
        if delta + b.q >= b.n {
            Subcase::OneA
        } else {
            Subcase::OneB
        }
    } else if delta + b.q > b.n {
        Subcase::TwoA
    } else {
        Subcase::TwoB
    })
}

/// True iff the degree threshold forcing every `t` vertices to share a
/// common neighbor holds: `δ(G) >= n - q` when `r > 0`, `δ(G) >= n - q + 1`
/// when `r = 0`. When it holds, `G` has no maximal clique of size `t`.
pub fn no_t_clique_condition(g: &Graph, t: usize) -> Result<bool> {
    if t == 0 {
        return Err(Error::ZeroTargetSize);
    }
    if g.order() == 0 {
        return Ok(false);
    }
    Ok(matches!(subcase(g, t)?, Subcase::OneA | Subcase::TwoA))
}

/// Vertex to split on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum VertexChoice {
    /// Lowest-index vertex of minimum degree.
    #[default]
    Auto,
    Vertex(usize),
}

/// Counts behind the A/B split at vertex `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub t: usize,
    pub v: usize,
    pub subcase: Subcase,
    /// `t`-maximal cliques of `G` containing `v`.
    pub a_count: u64,
    /// `t`-maximal cliques of `G` avoiding `v`.
    pub b_count: u64,
    /// `(t-1)`-maximal cliques of `G[N(v)]`.
    pub nbhd_count: u64,
    /// `t`-maximal cliques of `G - v`.
    pub gminus_count: u64,
    /// `t`-maximal cliques of `G`.
    pub total: u64,
}

/// Computes every count of the split by direct enumeration and checks
/// `a = nbhd`, `a + b = total` and `b <= gminus`.
pub fn induction_split(g: &Graph, t: usize, choice: VertexChoice) -> Result<SplitReport> {
    if t == 0 {
        return Err(Error::ZeroTargetSize);
    }
    let v = match choice {
        VertexChoice::Auto => g.min_degree_vertex()?,
        VertexChoice::Vertex(v) => {
            g.degree(v)?;
            v
        }
    };

    let (mut a_count, mut b_count) = (0u64, 0u64);
    enumerate_maximal_cliques(g, |c| {
        if c.len() == t {
            if c.contains(v) {
                a_count += 1;
            } else {
                b_count += 1;
            }
        }
    });
    let total = maximal_clique_size_profile(g).get(t);
    let nbhd = g.induced_subgraph(g.neighbors(v))?;
    let nbhd_count = maximal_clique_size_profile(&nbhd).get(t - 1);
    let gminus_count = maximal_clique_size_profile(&g.delete_vertex(v)?).get(t);

    if a_count != nbhd_count {
        return Err(Error::SplitIdentity("a_count != nbhd_count"));
    }
    if a_count + b_count != total {
        return Err(Error::SplitIdentity("a_count + b_count != total"));
    }
    if b_count > gminus_count {
        return Err(Error::SplitIdentity("b_count > gminus_count"));
    }
    Ok(SplitReport {
        t,
        v,
        subcase: subcase(g, t)?,
        a_count,
        b_count,
        nbhd_count,
        gminus_count,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::build_turan;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    #[test]
    fn threshold_examples() {
        assert!(no_t_clique_condition(&Graph::complete(7).unwrap(), 3).unwrap());
        assert!(!no_t_clique_condition(&path(4), 2).unwrap());
        assert!(!no_t_clique_condition(&build_turan(6, 2).unwrap(), 2).unwrap());
        assert!(!no_t_clique_condition(&Graph::empty(0).unwrap(), 2).unwrap());
        assert_eq!(
            no_t_clique_condition(&path(4), 0),
            Err(Error::ZeroTargetSize)
        );
    }

    #[test]
    fn subcase_examples() {
        assert_eq!(
            subcase(&build_turan(7, 3).unwrap(), 3).unwrap(),
            Subcase::OneB
        );
        assert_eq!(
            subcase(&Graph::complete(7).unwrap(), 3).unwrap(),
            Subcase::OneA
        );
        assert_eq!(
            subcase(&build_turan(6, 3).unwrap(), 3).unwrap(),
            Subcase::TwoB
        );
        assert_eq!(
            subcase(&Graph::complete(6).unwrap(), 3).unwrap(),
            Subcase::TwoA
        );
        assert_eq!(subcase(&path(2), 3).unwrap(), Subcase::Trivial);
        assert_eq!(
            subcase(&Graph::empty(0).unwrap(), 1).unwrap(),
            Subcase::Trivial
        );
    }

    #[test]
    fn split_on_turan_7_3() {
        let g = build_turan(7, 3).unwrap();
        let s = induction_split(&g, 3, VertexChoice::Auto).unwrap();
        assert_eq!(s.a_count + s.b_count, 12);
        assert_eq!(s.v, 4, "the part of size 3 has the minimum degree 4");
        // v sits in a part of size q+1 = 3: 2·2 cliques through it, 8 avoiding it
        assert_eq!((s.a_count, s.b_count), (4, 8));
        for v in 0..7 {
            let s = induction_split(&g, 3, VertexChoice::Vertex(v)).unwrap();
            assert_eq!(s.total, 12);
        }
    }

    #[test]
    fn split_small_cases() {
        let s = induction_split(&Graph::complete(3).unwrap(), 1, VertexChoice::Vertex(0)).unwrap();
        assert_eq!((s.a_count, s.b_count), (0, 0));
        let s = induction_split(&path(4).complement(), 2, VertexChoice::Auto).unwrap();
        assert_eq!(s.a_count + s.b_count, 3);
        // isolated vertex is a 1-maximal clique
        let s = induction_split(&Graph::empty(2).unwrap(), 1, VertexChoice::Vertex(1)).unwrap();
        assert_eq!(
            (s.a_count, s.b_count, s.nbhd_count, s.gminus_count),
            (1, 1, 1, 1)
        );
    }

    #[test]
    fn split_errors() {
        let g = path(4);
        assert_eq!(
            induction_split(&g, 2, VertexChoice::Vertex(4)),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        );
        assert_eq!(
            induction_split(&g, 0, VertexChoice::Auto),
            Err(Error::ZeroTargetSize)
        );
        assert_eq!(
            induction_split(&Graph::empty(0).unwrap(), 1, VertexChoice::Auto),
            Err(Error::NoVertices)
        );
    }
}
