//! graph6 (short form) and a plain edge-list text format, plus line-oriented
//! streaming over files of either.
//!
//! graph6: the first byte is `n + 63`; the upper triangle follows in column
//! order `(0,1),(0,2),(1,2),(0,3),...`, packed big-endian into 6-bit groups,
//! zero-padded, each group written as `value + 63`.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based vertices.

use std::io::BufRead;

use mis_extremal_core::graph::{pair_count, Graph};
use thiserror::Error;

/// Optional header written by some graph6 producers.
pub const GRAPH6_HEADER: &str = ">>graph6<<";
/// Largest order representable in short-form graph6.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("graph6 string for n = {n} must be {expected} bytes, got {found}")]
    WrongLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("long-form graph6 (n > 62) is not supported")]
    LongForm,
    #[error("sparse6 input is not supported")]
    Sparse6,
    #[error("digraph6 input is not supported")]
    Digraph6,
    #[error("graph6 supports n <= 62, got {0}")]
    OrderTooLarge(usize),
    #[error("non-zero padding bits in the last graph6 byte")]
    NonZeroPadding,
}

#[derive(Debug, Error)]
pub enum CodecError {
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: header declares {declared} edges, found {found}")]
    EdgeCount {
        line: usize,
        declared: usize,
        found: usize,
    },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        source: mis_extremal_core::Error,
    },
    #[error("line {line}: blank line inside a graph6 stream")]
    BlankLine { line: usize },
    #[error("line {line}: {source}")]
    Io { line: usize, source: std::io::Error },
}

impl CodecError {
    /// 1-based line the error refers to.
    pub fn line(&self) -> usize {
        match self {
            CodecError::Graph6 { line, .. }
            | CodecError::Parse { line, .. }
            | CodecError::EdgeCount { line, .. }
            | CodecError::Graph { line, .. }
            | CodecError::BlankLine { line }
            | CodecError::Io { line, .. } => *line,
        }
    }
}

/// Decodes one short-form graph6 string. A leading `>>graph6<<` is skipped.
pub fn graph6_decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text).as_bytes();
    let (&first, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    match first {
        b':' => return Err(Graph6Error::Sparse6),
        b'&' => return Err(Graph6Error::Digraph6),
        126 => return Err(Graph6Error::LongForm),
        _ => {}
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidChar {
            offset,
            byte: bytes[offset],
        });
    }
    let n = (first - 63) as usize;
    let bits = pair_count(n);
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected: expected + 1,
            found: bytes.len(),
        });
    }
    let pad = expected * 6 - bits;
    if let Some(&last) = body.last() {
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - 63;
            if (group >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 pairs are in range and loop-free"))
}

/// Encodes `g` as minimal-length short-form graph6, without header.
pub fn graph6_encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let bits = pair_count(n);
    let mut groups = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                groups[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(groups.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(groups.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// Normalized edge-list text: header, then edges `u < v` in ascending order,
/// each line newline-terminated.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), CodecError> {
    let mut it = text.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize, CodecError> {
        let tok = tok.ok_or_else(|| CodecError::Parse {
            line,
            message: format!("expected two integers, got {text:?}"),
        })?;
        tok.parse().map_err(|_| CodecError::Parse {
            line,
            message: format!("{tok:?} is not a non-negative integer"),
        })
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(CodecError::Parse {
            line,
            message: format!("expected two integers, got {text:?}"),
        });
    }
    Ok((a, b))
}

/// Parses a single edge-list graph. Trailing blank lines are allowed,
/// anything else after the `m` edge lines is an error.
pub fn read_edge_list(text: &str) -> Result<Graph, CodecError> {
    let mut stream = GraphStream::new(text.as_bytes(), Format::EdgeList);
    let g = match stream.next() {
        Some(r) => r?.graph,
        None => {
            return Err(CodecError::Parse {
                line: 1,
                message: "missing \"n m\" header".into(),
            })
        }
    };
    if let Some(extra) = stream.next() {
        let line = match extra {
            Ok(rec) => rec.line,
            Err(e) => e.line(),
        };
        return Err(CodecError::Parse {
            line,
            message: "unexpected content after the declared edges".into(),
        });
    }
    Ok(g)
}

/// Input format of a [`GraphStream`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Graph6,
    EdgeList,
}

/// A decoded graph and the 1-based line it started on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub line: usize,
    pub graph: Graph,
}

/// Line-oriented reader yielding graphs in file order. Stops after the first
/// error.
pub struct GraphStream<R> {
    reader: R,
    format: Format,
    line: usize,
    count: u64,
    pending_blank: Option<usize>,
    done: bool,
    buf: String,
}

impl<R: BufRead> GraphStream<R> {
    pub fn new(reader: R, format: Format) -> Self {
        GraphStream {
            reader,
            format,
            line: 0,
            count: 0,
            pending_blank: None,
            done: false,
            buf: String::new(),
        }
    }

    /// Records yielded so far.
    pub fn records_read(&self) -> u64 {
        self.count
    }

    /// Reads the next physical line into `buf`; false at EOF.
    fn read_line(&mut self) -> Result<bool, CodecError> {
        self.buf.clear();
        let read = self
            .reader
            .read_line(&mut self.buf)
            .map_err(|source| CodecError::Io {
                line: self.line + 1,
                source,
            })?;
        if read == 0 {
            return Ok(false);
        }
        self.line += 1;
        Ok(true)
    }

    fn current(&self) -> &str {
        self.buf.trim_end_matches(['\n', '\r'])
    }

    fn next_graph6(&mut self) -> Result<Option<Record>, CodecError> {
        loop {
            let line_no = self.line + 1;
            if !self.read_line()? {
                return Ok(None);
            }
            let text = self.current();
            if text.trim().is_empty() {
                self.pending_blank.get_or_insert(line_no);
                continue;
            }
            if let Some(blank) = self.pending_blank {
                return Err(CodecError::BlankLine { line: blank });
            }
            let graph = graph6_decode(text).map_err(|source| CodecError::Graph6 {
                line: line_no,
                source,
            })?;
            return Ok(Some(Record {
                line: line_no,
                graph,
            }));
        }
    }

    fn next_edge_list(&mut self) -> Result<Option<Record>, CodecError> {
        let (start, (n, m)) = loop {
            let line_no = self.line + 1;
            if !self.read_line()? {
                return Ok(None);
            }
            let text = self.current();
            if text.trim().is_empty() {
                continue;
            }
            break (line_no, parse_pair(line_no, text)?);
        };
        let mut edges = Vec::with_capacity(m.min(1 << 12));
        while edges.len() < m {
            let line_no = self.line + 1;
            if !self.read_line()? || self.current().trim().is_empty() {
                return Err(CodecError::EdgeCount {
                    line: start,
                    declared: m,
                    found: edges.len(),
                });
            }
            edges.push(parse_pair(line_no, self.current())?);
        }
        let graph = Graph::from_edges(n, edges).map_err(|source| CodecError::Graph {
            line: start,
            source,
        })?;
        Ok(Some(Record { line: start, graph }))
    }
}

impl<R: BufRead> Iterator for GraphStream<R> {
    type Item = Result<Record, CodecError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let res = match self.format {
            Format::Graph6 => self.next_graph6(),
            Format::EdgeList => self.next_edge_list(),
        };
        match res {
            Ok(Some(rec)) => {
                self.count += 1;
                Some(Ok(rec))
            }
            Ok(None) => {
                self.done = true;
                None
            }
            Err(e) => {
                self.done = true;
                Some(Err(e))
            }
        }
    }
}
