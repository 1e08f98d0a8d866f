//! Maximal independent sets and maximal cliques, by size.
//!
//! Both are produced by one recursion: pivoted Bron–Kerbosch maximal-clique
//! enumeration over bitset rows. Maximal independent sets of `G` are exactly
//! the maximal cliques of the complement, so the MIS entry points complement
//! first and then run the same kernel.
//!
//! The subset-scan oracle in this module never touches that kernel; it is
//! there to check it.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`oracle_mis_size_profile`] and [`independent_set_counts`].
pub const ORACLE_MAX_ORDER: usize = 24;

/// Number of maximal independent sets (or maximal cliques) of each size.
///
/// `counts[s]` for `s = 0..=n` is the coefficient of `x^s` in the maximal
/// independence polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SizeProfile {
    n: usize,
    counts: Vec<u64>,
}

impl SizeProfile {
    /// Wraps explicit counts; `counts.len()` must be `n + 1`.
    pub fn from_counts(n: usize, counts: Vec<u64>) -> Self {
        assert_eq!(counts.len(), n + 1, "profile needs n + 1 entries");
        SizeProfile { n, counts }
    }

    fn zeroed(n: usize) -> Self {
        SizeProfile {
            n,
            counts: vec![0; n + 1],
        }
    }

    #[inline]
    fn bump(&mut self, size: usize) {
        let c = &mut self.counts[size];
        *c = c
            .checked_add(1)
            .unwrap_or_else(|| panic!("{}", Error::Overflow));
    }

    /// Order of the source graph.
    pub fn order(&self) -> usize {
        self.n
    }

    /// `counts[0..=n]`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Count for size `s`; zero for `s > n`.
    pub fn get(&self, s: usize) -> u64 {
        self.counts.get(s).copied().unwrap_or(0)
    }

    /// Total over all sizes.
    pub fn total(&self) -> Result<u64> {
        self.counts
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow)
    }

    /// Polynomial coefficients, constant term first, without trailing zeros.
    pub fn coefficients(&self) -> &[u64] {
        let end = self
            .counts
            .iter()
            .rposition(|&c| c != 0)
            .map_or(1, |i| i + 1);
        &self.counts[..end.min(self.counts.len())]
    }

    /// Largest size with a non-zero count.
    pub fn degree(&self) -> usize {
        self.coefficients().len() - 1
    }
}

/// Renders the polynomial, highest power first, e.g. `2x^3+5x^2`.
impl fmt::Display for SizeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, &c) in self.coefficients().iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (c, s) {
                (_, 0) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "x^{s}")?,
                (_, 1) => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{s}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Pivoted Bron–Kerbosch over `rows`. Reports every maximal clique
/// containing `r`, extending it from `p` and excluding `x`.
///
/// Pivot: the vertex of `p ∪ x` with the most neighbors in `p`, lowest index
/// on ties. Branch vertices are taken in ascending order.
fn expand<F: FnMut(VertexSet)>(
    rows: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    visit: &mut F,
) {
    if p.is_empty() {
        if x.is_empty() {
            visit(r);
        }
        return;
    }
    let mut pivot = 0;
    let mut best = 0;
    let mut found = false;
    for u in (p | x).iter() {
        let c = (p & rows[u]).len();
        if !found || c > best {
            pivot = u;
            best = c;
            found = true;
        }
    }
    for v in (p - rows[pivot]).iter() {
        let nv = rows[v];
        expand(rows, r.with(v), p & nv, x & nv, visit);
        p.remove(v);
        x.insert(v);
    }
}

fn cliques_of<F: FnMut(VertexSet)>(g: &Graph, visit: &mut F) {
    expand(
        g.rows(),
        VertexSet::EMPTY,
        g.vertices(),
        VertexSet::EMPTY,
        visit,
    );
}

/// Calls `visit` once per maximal clique of `g`; returns how many were visited.
pub fn enumerate_maximal_cliques<F: FnMut(VertexSet)>(g: &Graph, mut visit: F) -> u64 {
    let mut count = 0u64;
    cliques_of(g, &mut |s| {
        count = count
            .checked_add(1)
            .expect("maximal clique count overflowed u64");
        visit(s);
    });
    count
}

/// Calls `visit` once per maximal independent set of `g`; returns how many
/// were visited. The order is deterministic and depends only on vertex labels.
pub fn enumerate_mis<F: FnMut(VertexSet)>(g: &Graph, visit: F) -> u64 {
    enumerate_maximal_cliques(&g.complement(), visit)
}

/// Maximal cliques of `g` counted by size.
pub fn maximal_clique_size_profile(g: &Graph) -> SizeProfile {
    let mut profile = SizeProfile::zeroed(g.order());
    cliques_of(g, &mut |s| profile.bump(s.len()));
    profile
}

/// Maximal independent sets of `g` counted by size.
pub fn mis_size_profile(g: &Graph) -> SizeProfile {
    maximal_clique_size_profile(&g.complement())
}

/// Coefficients of `I_max(G; x)`, constant term first, trailing zeros dropped.
pub fn maximal_independence_polynomial(g: &Graph) -> Vec<u64> {
    mis_size_profile(g).coefficients().to_vec()
}

/// Bitmap over all `2^n` vertex subsets: bit `S` set iff `S` is independent.
fn independence_table(g: &Graph) -> Result<Vec<u64>> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::OracleOrderTooLarge {
            n,
            max: ORACLE_MAX_ORDER,
        });
    }
    let subsets = 1usize << n;
    let mut table = vec![0u64; subsets.div_ceil(64)];
    table[0] |= 1;
    for mask in 1..subsets {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let rest_ok = (table[rest / 64] >> (rest % 64)) & 1 == 1;
        if rest_ok && (g.neighbors(low).bits() as usize & rest) == 0 {
            table[mask / 64] |= 1 << (mask % 64);
        }
    }
    Ok(table)
}

#[inline]
fn table_has(table: &[u64], mask: usize) -> bool {
    (table[mask / 64] >> (mask % 64)) & 1 == 1
}

/// Number of independent sets of each size (maximal or not), `counts[0] = 1`.
/// Scans all `2^n` subsets; `n <= 24`.
pub fn independent_set_counts(g: &Graph) -> Result<Vec<u64>> {
    let table = independence_table(g)?;
    let mut counts = vec![0u64; g.order() + 1];
    for mask in 0..1usize << g.order() {
        if table_has(&table, mask) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(counts)
}

/// Reference MIS size profile by subset scan: `S` counts iff it is
/// independent and no `S ∪ {v}` is. `n <= 24`.
pub fn oracle_mis_size_profile(g: &Graph) -> Result<SizeProfile> {
    let table = independence_table(g)?;
    let n = g.order();
    let mut profile = SizeProfile::zeroed(n);
    for mask in 0..1usize << n {
        if !table_has(&table, mask) {
            continue;
        }
        let maximal = (0..n)
            .filter(|v| mask & (1 << v) == 0)
            .all(|v| !table_has(&table, mask | (1 << v)));
        if maximal {
            profile.bump(mask.count_ones() as usize);
        }
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    fn visits(g: &Graph) -> Vec<VertexSet> {
        let mut out = vec![];
        let c = enumerate_mis(g, |s| out.push(s));
        assert_eq!(c as usize, out.len());
        out
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            visits(&Graph::complete(3).unwrap()),
            [set(&[0]), set(&[1]), set(&[2])]
        );
        assert_eq!(visits(&path(4)), [set(&[0, 2]), set(&[0, 3]), set(&[1, 3])]);
        assert_eq!(visits(&Graph::empty(4).unwrap()), [set(&[0, 1, 2, 3])]);
        assert_eq!(visits(&Graph::empty(0).unwrap()), [VertexSet::EMPTY]);
    }

    #[test]
    fn profile_examples() {
        let c5 = mis_size_profile(&cycle(5));
        assert_eq!(c5.counts(), [0, 0, 5, 0, 0, 0]);
        let k3 = Graph::complete(3).unwrap();
        let kk = k3.disjoint_union(&k3).unwrap();
        assert_eq!(mis_size_profile(&kk).get(2), 9);
        assert_eq!(mis_size_profile(&kk).total().unwrap(), 9);
        assert_eq!(
            mis_size_profile(&Graph::complete(1).unwrap()).counts(),
            [0, 1]
        );
        assert_eq!(mis_size_profile(&Graph::empty(0).unwrap()).counts(), [1]);
    }

    #[test]
    fn clique_profile_examples() {
        let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert_eq!(maximal_clique_size_profile(&k33).get(2), 9);
        assert_eq!(
            maximal_clique_size_profile(&Graph::complete(4).unwrap()).counts(),
            [0, 0, 0, 0, 1]
        );
        assert_eq!(maximal_clique_size_profile(&cycle(5)).get(2), 5);
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(
            maximal_independence_polynomial(&Graph::complete(3).unwrap()),
            [0, 3]
        );
        assert_eq!(maximal_independence_polynomial(&path(4)), [0, 0, 3]);
        assert_eq!(
            maximal_independence_polynomial(&Graph::empty(0).unwrap()),
            [1]
        );
        assert_eq!(mis_size_profile(&path(4)).to_string(), "3x^2");
        assert_eq!(
            mis_size_profile(&Graph::complete(3).unwrap()).to_string(),
            "3x"
        );
        assert_eq!(mis_size_profile(&Graph::empty(0).unwrap()).to_string(), "1");
        // P5: {0,2,4} plus {0,3},{1,3},{1,4}
        assert_eq!(mis_size_profile(&path(5)).to_string(), "x^3+3x^2");
        assert_eq!(mis_size_profile(&path(5)).degree(), 3);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            oracle_mis_size_profile(&path(4)).unwrap().coefficients(),
            [0, 0, 3]
        );
        for n in [1, 5, 24] {
            assert_eq!(
                oracle_mis_size_profile(&Graph::complete(n).unwrap())
                    .unwrap()
                    .get(1),
                n as u64
            );
        }
        assert_eq!(oracle_mis_size_profile(&cycle(5)).unwrap().get(2), 5);
        assert_eq!(
            oracle_mis_size_profile(&Graph::empty(0).unwrap())
                .unwrap()
                .counts(),
            [1]
        );
        assert_eq!(
            oracle_mis_size_profile(&Graph::empty(25).unwrap()),
            Err(Error::OracleOrderTooLarge { n: 25, max: 24 })
        );
    }

    #[test]
    fn independent_set_count_examples() {
        assert_eq!(
            independent_set_counts(&Graph::complete(3).unwrap()).unwrap(),
            [1, 3, 0, 0]
        );
        assert_eq!(independent_set_counts(&path(3)).unwrap(), [1, 3, 1, 0]);
        assert_eq!(
            independent_set_counts(&Graph::empty(6).unwrap()).unwrap(),
            [1, 6, 15, 20, 15, 6, 1]
        );
        assert!(independent_set_counts(&Graph::empty(25).unwrap()).is_err());
    }

    #[test]
    fn visited_sets_are_maximal_independent() {
        let g =
            Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (0, 6), (2, 6)]).unwrap();
        let mut seen = vec![];
        enumerate_mis(&g, |s| {
            assert!(g.is_independent(s));
            for v in s.complement_within(7).iter() {
                assert!(!g.is_independent(s.with(v)), "{s} extends by {v}");
            }
            seen.push(s);
        });
        let mut dedup = seen.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), seen.len());
        assert_eq!(seen.len() as u64, mis_size_profile(&g).total().unwrap());
    }
}
