//! Line-oriented output: `key=value` records or CSV with a header row.

use std::io::{self, Write};

use clap::ValueEnum;
use mis_extremal_core::extremal::{ExtremalReport, SplitReport};
use mis_extremal_core::{BoundDecomposition, CanonicalForm, SizeProfile};

use crate::codec::graph6_encode;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// One `key=value ...` record per line.
    #[default]
    Kv,
    /// CSV with a header row.
    Csv,
}

/// Records sharing one set of columns.
#[derive(Clone, Debug, Default)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// In CSV mode the header is written even when there are no rows, unless
    /// `header_if_empty` is false.
    pub fn write(
        &self,
        format: OutputFormat,
        header_if_empty: bool,
        out: &mut dyn Write,
    ) -> io::Result<()> {
        match format {
            OutputFormat::Kv => {
                for row in &self.rows {
                    let line: Vec<String> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    writeln!(out, "{}", line.join(" "))?;
                }
                Ok(())
            }
            OutputFormat::Csv => {
                if self.rows.is_empty() && !header_if_empty {
                    return Ok(());
                }
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// graph6 of the canonical representative.
pub fn canon_label(form: &CanonicalForm) -> String {
    graph6_encode(&form.to_graph()).expect("canonical forms have at most 10 vertices")
}

pub fn count_table() -> Table {
    Table::new(&["index", "n", "counts", "total", "polynomial"])
}

pub fn count_row(index: u64, profile: &SizeProfile) -> Vec<String> {
    vec![
        index.to_string(),
        profile.order().to_string(),
        join(profile.coefficients()),
        profile
            .total()
            .expect("total fits 64 bits for n <= 64")
            .to_string(),
        profile.to_string(),
    ]
}

pub fn bound_table() -> Table {
    Table::new(&["n", "t", "q", "r", "f"])
}

pub fn bound_row(b: &BoundDecomposition) -> Vec<String> {
    vec![
        b.n.to_string(),
        b.t.to_string(),
        b.q.to_string(),
        b.r.to_string(),
        b.f.to_string(),
    ]
}

pub fn verify_table() -> Table {
    Table::new(&[
        "side",
        "coverage",
        "n",
        "t",
        "q",
        "r",
        "f",
        "max_observed",
        "bound_holds",
        "unique_attainer",
        "graphs_examined",
        "attainers",
        "expected",
        "first_violation",
    ])
}

pub fn verify_row(r: &ExtremalReport) -> Vec<String> {
    let attainers: Vec<String> = r.attainers.iter().map(canon_label).collect();
    vec![
        r.side.to_string(),
        r.coverage.to_string(),
        r.bound.n.to_string(),
        r.bound.t.to_string(),
        r.bound.q.to_string(),
        r.bound.r.to_string(),
        r.bound.f.to_string(),
        r.max_observed.to_string(),
        r.bound_holds.to_string(),
        r.unique_attainer.to_string(),
        r.graphs_examined.to_string(),
        if attainers.is_empty() {
            "none".into()
        } else {
            attainers.join(",")
        },
        canon_label(&r.expected),
        r.first_violation
            .map_or_else(|| "none".into(), |i| i.to_string()),
    ]
}

pub fn trace_table() -> Table {
    Table::new(&[
        "index",
        "n",
        "t",
        "subcase",
        "v",
        "a_count",
        "b_count",
        "nbhd_count",
        "gminus_count",
        "total",
    ])
}

pub fn trace_row(index: u64, n: usize, s: &SplitReport) -> Vec<String> {
    vec![
        index.to_string(),
        n.to_string(),
        s.t.to_string(),
        s.subcase.to_string(),
        s.v.to_string(),
        s.a_count.to_string(),
        s.b_count.to_string(),
        s.nbhd_count.to_string(),
        s.gminus_count.to_string(),
        s.total.to_string(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use mis_extremal_core::{bound_f, mis_size_profile, Graph};

    #[test]
    fn kv_and_csv() {
        let mut t = count_table();
        let p = mis_size_profile(&Graph::complete(3).unwrap());
        t.push(count_row(0, &p));
        let mut kv = Vec::new();
        t.write(OutputFormat::Kv, true, &mut kv).unwrap();
        assert_eq!(
            String::from_utf8(kv).unwrap(),
            "index=0 n=3 counts=0,3 total=3 polynomial=3x\n"
        );
        let mut csv = Vec::new();
        t.write(OutputFormat::Csv, true, &mut csv).unwrap();
        assert_eq!(
            String::from_utf8(csv).unwrap(),
            "index,n,counts,total,polynomial\n0,3,\"0,3\",3,3x\n"
        );
    }

    #[test]
    fn empty_tables() {
        let t = bound_table();
        let mut out = Vec::new();
        t.write(OutputFormat::Csv, false, &mut out).unwrap();
        assert!(out.is_empty());
        t.write(OutputFormat::Csv, true, &mut out).unwrap();
        assert_eq!(out, b"n,t,q,r,f\n");
        let mut t = bound_table();
        t.push(bound_row(&bound_f(6, 2).unwrap()));
        assert!(!t.is_empty());
    }
}
