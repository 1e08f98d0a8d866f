//! Exhaustive and stream-driven verification of the bound.
//!
//! A [`ScanAccumulator`] folds graphs into per-`t` maxima and the set of
//! canonical forms attaining the bound. Accumulators over disjoint slices of
//! a source merge associatively and commutatively, so a parallel driver that
//! merges partial results in index order produces the same report as a
//! sequential scan.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use super::{bound_f, build_h, build_turan, BoundDecomposition};
use crate::canon::{canonical_form, CanonicalForm};
use crate::enumerate::{maximal_clique_size_profile, mis_size_profile, SizeProfile};
use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};

/// Largest order scanned exhaustively without opt-in.
pub const EXHAUSTIVE_DEFAULT_MAX: usize = 7;
/// Largest order scanned exhaustively with the opt-in.
pub const EXHAUSTIVE_OPT_IN_MAX: usize = 8;

/// Number of labeled simple graphs on `n` vertices, `2^(n(n-1)/2)`.
/// Only meaningful for `n <= 11`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

/// Every labeled graph on `n` vertices, ordered by pair mask.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    masks: Range<u64>,
}

impl LabeledGraphs {
    /// The sub-range of masks `range`, clipped to the valid masks.
    pub fn slice(&self, range: Range<u64>) -> LabeledGraphs {
        let end = labeled_graph_count(self.n);
        LabeledGraphs {
            n: self.n,
            masks: range.start.min(end)..range.end.min(end),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Remaining masks.
    pub fn masks(&self) -> Range<u64> {
        self.masks.clone()
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let mask = self.masks.next()?;
        Some(Graph::from_pair_mask(self.n, mask).expect("order checked at construction"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.masks.size_hint()
    }
}

/// All labeled graphs on `n` vertices. Orders above 7 need `allow_order_8`,
/// and 8 is the hard ceiling.
pub fn labeled_graphs(n: usize, allow_order_8: bool) -> Result<LabeledGraphs> {
    let max = if allow_order_8 {
        EXHAUSTIVE_OPT_IN_MAX
    } else {
        EXHAUSTIVE_DEFAULT_MAX
    };
    if n > max {
        return Err(Error::LabeledOrderTooLarge {
            n,
            opt_in: allow_order_8,
        });
    }
    Ok(LabeledGraphs {
        n,
        masks: 0..labeled_graph_count(n),
    })
}

/// Which profile the verifier reads.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Side {
    /// Maximal independent sets; extremal graph `H(n, t)`.
    #[default]
    Mis,
    /// Maximal cliques; extremal graph `T(n, t)`.
    Clique,
}

impl Side {
    pub fn profile(self, g: &Graph) -> SizeProfile {
        match self {
            Side::Mis => mis_size_profile(g),
            Side::Clique => maximal_clique_size_profile(g),
        }
    }

    pub fn expected(self, n: usize, t: usize) -> Result<Graph> {
        match self {
            Side::Mis => build_h(n, t),
            Side::Clique => build_turan(n, t),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Mis => "mis",
            Side::Clique => "clique",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a report's graphs were drawn from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coverage {
    /// Every labeled graph of the given order.
    ExhaustiveLabeled(usize),
    /// An external stream, named by its source.
    Stream(String),
}

impl Coverage {
    pub fn is_exhaustive(&self) -> bool {
        matches!(self, Coverage::ExhaustiveLabeled(_))
    }
}

impl fmt::Display for Coverage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coverage::ExhaustiveLabeled(n) => write!(f, "exhaustive-labeled({n})"),
            Coverage::Stream(src) => write!(f, "stream({src})"),
        }
    }
}

/// Outcome of verifying one `(n, t)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub side: Side,
    pub bound: BoundDecomposition,
    /// Largest `counts[t]` seen.
    pub max_observed: u64,
    /// Distinct canonical forms of graphs with `counts[t] = f`, ascending.
    pub attainers: Vec<CanonicalForm>,
    /// Canonical form of `H(n, t)` (MIS side) or `T(n, t)` (clique side).
    pub expected: CanonicalForm,
    pub bound_holds: bool,
    /// `attainers` is exactly `[expected]`. Only a uniqueness proof under
    /// exhaustive coverage.
    pub unique_attainer: bool,
    /// Index of the first graph exceeding the bound, if any.
    pub first_violation: Option<u64>,
    pub graphs_examined: u64,
    pub coverage: Coverage,
}

impl ExtremalReport {
    pub fn n(&self) -> usize {
        self.bound.n
    }

    pub fn t(&self) -> usize {
        self.bound.t
    }

    /// Bound respected and, under exhaustive coverage, the attainer unique.
    pub fn passed(&self) -> bool {
        self.bound_holds && (!self.coverage.is_exhaustive() || self.unique_attainer)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct TargetState {
    bound: BoundDecomposition,
    max_observed: u64,
    attainers: BTreeSet<CanonicalForm>,
    first_violation: Option<u64>,
}

/// Running state of a verification over graphs of one order and a fixed
/// list of target sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanAccumulator {
    n: usize,
    side: Side,
    targets: Vec<TargetState>,
    examined: u64,
}

impl ScanAccumulator {
    /// Every `t` must satisfy `1 <= t <= n`.
    pub fn new(n: usize, side: Side, ts: &[usize]) -> Result<Self> {
        let targets = ts
            .iter()
            .map(|&t| {
                let bound = bound_f(n, t)?;
                if n < t {
                    return Err(Error::OrderBelowTarget { n, t });
                }
                Ok(TargetState {
                    bound,
                    max_observed: 0,
                    attainers: BTreeSet::new(),
                    first_violation: None,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ScanAccumulator {
            n,
            side,
            targets,
            examined: 0,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn graphs_examined(&self) -> u64 {
        self.examined
    }

    /// Folds in the graph at position `index` of the source.
    pub fn observe(&mut self, index: u64, g: &Graph) -> Result<()> {
        if g.order() != self.n {
            return Err(Error::MixedOrders {
                index,
                expected: self.n,
                found: g.order(),
            });
        }
        let profile = self.side.profile(g);
        let mut canon: Option<CanonicalForm> = None;
        for target in &mut self.targets {
            let count = profile.get(target.bound.t);
            target.max_observed = target.max_observed.max(count);
            if count > target.bound.f && target.first_violation.is_none() {
                target.first_violation = Some(index);
            }
            if count == target.bound.f {
                let form = match canon {
                    Some(c) => c,
                    None => *canon.insert(canonical_form(g)?),
                };
                target.attainers.insert(form);
            }
        }
        self.examined += 1;
        Ok(())
    }

    /// Combines with the accumulator of a later slice of the same source.
    pub fn merge(&mut self, other: ScanAccumulator) {
        assert_eq!(
            (self.n, self.side, self.targets.len()),
            (other.n, other.side, other.targets.len()),
            "merging accumulators of different scans"
        );
        for (mine, theirs) in self.targets.iter_mut().zip(other.targets) {
            debug_assert_eq!(mine.bound, theirs.bound);
            mine.max_observed = mine.max_observed.max(theirs.max_observed);
            mine.attainers.extend(theirs.attainers);
            mine.first_violation = match (mine.first_violation, theirs.first_violation) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
        self.examined += other.examined;
    }

    /// One report per target size, in the order they were requested.
    pub fn finish(self, coverage: &Coverage) -> Result<Vec<ExtremalReport>> {
        let side = self.side;
        let examined = self.examined;
        self.targets
            .into_iter()
            .map(|target| {
                let expected = canonical_form(&side.expected(target.bound.n, target.bound.t)?)?;
                let attainers: Vec<CanonicalForm> = target.attainers.into_iter().collect();
                Ok(ExtremalReport {
                    side,
                    bound: target.bound,
                    max_observed: target.max_observed,
                    unique_attainer: attainers == [expected],
                    attainers,
                    expected,
                    bound_holds: target.max_observed <= target.bound.f,
                    first_violation: target.first_violation,
                    graphs_examined: examined,
                    coverage: coverage.clone(),
                })
            })
            .collect()
    }
}

/// Sequential verification of one target size over `graphs`, which must all
/// have the same order. An empty source is reported as [`Error::NoVertices`].
pub fn verify_bound<I>(
    graphs: I,
    t: usize,
    side: Side,
    coverage: &Coverage,
) -> Result<ExtremalReport>
where
    I: IntoIterator<Item = Graph>,
{
    let mut iter = graphs.into_iter().peekable();
    let n = iter.peek().ok_or(Error::NoVertices)?.order();
    let mut acc = ScanAccumulator::new(n, side, &[t])?;
    for (i, g) in iter.enumerate() {
        acc.observe(i as u64, &g)?;
    }
    Ok(acc.finish(coverage)?.remove(0))
}
