use core::fmt;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// A vertex index is not below the graph order.
    VertexOutOfRange {
        /// Offending vertex.
        vertex: usize,
        /// Graph order.
        n: usize,
    },
    /// An edge `(v, v)` was supplied.
    LoopEdge(usize),
    /// The requested order does not fit the 64-vertex representation.
    TooManyVertices(usize),
    /// Minimum degree or an automatic vertex choice on the graph with no vertices.
    NoVertices,
    /// The subset-scan oracle only runs up to a fixed order.
    OracleOrderTooLarge {
        /// Requested order.
        n: usize,
        /// Largest supported order.
        max: usize,
    },
    /// Target size `t = 0` is not accepted by the extremal operations.
    ZeroTargetSize,
    /// `build_h` needs `n >= t`.
    OrderBelowTarget {
        /// Graph order.
        n: usize,
        /// Target size.
        t: usize,
    },
    /// Turán graph part count outside `1..=n`.
    PartsOutOfRange {
        /// Graph order.
        n: usize,
        /// Requested number of parts.
        k: usize,
    },
    /// Exhaustive labeled enumeration refused for this order.
    LabeledOrderTooLarge {
        /// Requested order.
        n: usize,
        /// Whether the order-8 opt-in was given.
        opt_in: bool,
    },
    /// Canonical labeling refused for this order.
    CanonOrderTooLarge(usize),
    /// A verification source contained graphs of different orders.
    MixedOrders {
        /// Zero-based position of the offending graph in the source.
        index: u64,
        /// Order of the first graph.
        expected: usize,
        /// Order of the offending graph.
        found: usize,
    },
    /// One of the A/B split identities failed; this indicates an enumeration bug.
    SplitIdentity(&'static str),
    /// A 64-bit count overflowed.
    Overflow,
    /// The classical total-count maximum is only defined here for `n >= 2`.
    MoonMoserOrder(usize),
}

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(
                    f,
                    "vertex {vertex} out of range for a graph on {n} vertices"
                )
            }
            Error::LoopEdge(v) => write!(f, "loop edge at vertex {v}"),
            Error::TooManyVertices(n) => write!(f, "{n} vertices exceeds the limit of 64"),
            Error::NoVertices => write!(f, "graph has no vertices"),
            Error::OracleOrderTooLarge { n, max } => {
                write!(f, "subset-scan oracle supports n <= {max}, got {n}")
            }
            Error::ZeroTargetSize => write!(f, "target size t must be at least 1"),
            Error::OrderBelowTarget { n, t } => {
                write!(f, "extremal graph needs n >= t, got n = {n}, t = {t}")
            }
            Error::PartsOutOfRange { n, k } => {
                write!(f, "Turán graph needs 1 <= k <= n, got n = {n}, k = {k}")
            }
            Error::LabeledOrderTooLarge { n, opt_in } => {
                if *opt_in {
                    write!(f, "exhaustive labeled enumeration supports n <= 8, got {n}")
                } else {
                    write!(
                        f,
                        "exhaustive labeled enumeration supports n <= 7 (n = 8 needs an explicit opt-in), got {n}"
                    )
                }
            }
            Error::CanonOrderTooLarge(n) => {
                write!(f, "canonical labeling supports n <= 10, got {n}")
            }
            Error::MixedOrders {
                index,
                expected,
                found,
            } => write!(
                f,
                "graph {index} has {found} vertices but the source started with order {expected}"
            ),
            Error::SplitIdentity(which) => write!(f, "split identity violated: {which}"),
            Error::Overflow => write!(f, "count overflowed 64 bits"),
            Error::MoonMoserOrder(n) => write!(f, "classical maximum needs n >= 2, got {n}"),
        }
    }
}

impl core::error::Error for Error {}
