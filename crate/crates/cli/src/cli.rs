//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when verification finds a graph violating the
//! bound or a non-unique attainer, 2 on usage, input or range errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::str::FromStr;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use mis_extremal_core::extremal::{induction_split, ExtremalReport, Side, VertexChoice};
use mis_extremal_core::{bound_f, build_h, build_turan, mis_size_profile};

use crate::codec::{graph6_encode, write_edge_list, Format, GraphStream};
use crate::parallel::{verify_exhaustive, verify_stream, Targets, VerifyOptions};
use crate::report::{self, OutputFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mis-extremal",
    version,
    about = "Count maximal independent sets by size and verify the sharp bound on them"
)]
pub struct Cli {
    /// Print wall time to stderr.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-graph counts of maximal independent sets by size.
    Count(CountArgs),
    /// Tabulate the bound q^(t-r) (q+1)^r.
    Bound(BoundArgs),
    /// Emit the extremal graph H(n,t) or the Turán graph T(n,t).
    Extremal(ExtremalArgs),
    /// Check the bound and uniqueness of the extremal graph.
    Verify(VerifyArgs),
    /// Split counts at a vertex, as in the induction on n + t.
    Trace(TraceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

impl From<InputFormat> for Format {
    fn from(f: InputFormat) -> Format {
        match f {
            InputFormat::Graph6 => Format::Graph6,
            InputFormat::Edgelist => Format::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    H,
    Turan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Mis,
    Clique,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file, `-` for stdin.
    #[arg(short, long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    format: InputFormat,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Kv)]
    output: OutputFormat,
}

/// Inclusive range `a..b`.
#[derive(Debug, Clone, Copy)]
struct TRange(usize, usize);

impl FromStr for TRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected a range like 1..6, got {s:?}"))?;
        let a = a.parse().map_err(|_| format!("bad range start {a:?}"))?;
        let b = b
            .trim_start_matches('=')
            .parse()
            .map_err(|_| format!("bad range end {b:?}"))?;
        Ok(TRange(a, b))
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("sizes").required(true).args(["t", "t_range", "all_t"])))]
struct BoundArgs {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    t: Option<usize>,
    /// Inclusive range of sizes, e.g. 1..6.
    #[arg(long)]
    t_range: Option<TRange>,
    /// Every t in 1..=n.
    #[arg(long)]
    all_t: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    output: OutputFormat,
}

#[derive(Debug, Args)]
struct ExtremalArgs {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    t: usize,
    #[arg(long, value_enum, default_value_t = Which::H)]
    which: Which,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    format: InputFormat,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["n", "input"])))]
#[command(group(ArgGroup::new("sizes").required(true).args(["t", "all_t"])))]
struct VerifyArgs {
    /// Scan every labeled graph on n vertices.
    #[arg(short)]
    n: Option<usize>,
    /// Scan the graphs of a file (`-` for stdin); all must share one order.
    #[arg(short, long)]
    input: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    format: InputFormat,
    #[arg(short)]
    t: Option<usize>,
    /// Every t in 1..=n.
    #[arg(long)]
    all_t: bool,
    #[arg(long, value_enum, default_value_t = SideArg::Mis)]
    side: SideArg,
    /// Allow the exhaustive scan at n = 8 (2^28 graphs).
    #[arg(long = "n8-opt-in")]
    n8_opt_in: bool,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    workers: u16,
    #[arg(long, value_enum, default_value_t = OutputFormat::Kv)]
    output: OutputFormat,
}

#[derive(Debug, Args)]
struct TraceArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(short)]
    t: usize,
    /// Vertex to split on, or `auto` for the lowest-index minimum-degree vertex.
    #[arg(long, default_value = "auto")]
    vertex: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Kv)]
    output: OutputFormat,
}

/// A failed command: exit code and message for stderr.
#[derive(Debug)]
struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

fn open_input<'a>(
    path: &str,
    stdin: &'a mut dyn BufRead,
) -> Result<Box<dyn BufRead + 'a>, Failure> {
    if path == "-" {
        Ok(Box::new(stdin))
    } else {
        let f = File::open(path).map_err(|e| Failure(EXIT_USAGE, format!("{path}: {e}")))?;
        Ok(Box::new(BufReader::new(f)))
    }
}

fn cmd_count(args: &CountArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> CmdResult {
    let reader = open_input(&args.input.input, stdin)?;
    let mut table = report::count_table();
    for (i, rec) in GraphStream::new(reader, args.input.format.into()).enumerate() {
        let rec = rec?;
        table.push(report::count_row(i as u64, &mis_size_profile(&rec.graph)));
    }
    table.write(args.output, false, out)?;
    Ok(EXIT_OK)
}

fn cmd_bound(args: &BoundArgs, out: &mut dyn Write) -> CmdResult {
    let ts: Vec<usize> = match (args.t, args.t_range, args.all_t) {
        (Some(t), _, _) => vec![t],
        (_, Some(TRange(a, b)), _) => (a..=b).collect(),
        _ => (1..=args.n).collect(),
    };
    let mut table = report::bound_table();
    for t in ts {
        table.push(report::bound_row(&bound_f(args.n, t)?));
    }
    table.write(args.output, true, out)?;
    Ok(EXIT_OK)
}

fn cmd_extremal(args: &ExtremalArgs, out: &mut dyn Write) -> CmdResult {
    let g = match args.which {
        Which::H => build_h(args.n, args.t)?,
        Which::Turan => build_turan(args.n, args.t)?,
    };
    match args.format {
        InputFormat::Graph6 => writeln!(out, "{}", graph6_encode(&g)?)?,
        InputFormat::Edgelist => write!(out, "{}", write_edge_list(&g))?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> CmdResult {
    let opts = VerifyOptions {
        side: match args.side {
            SideArg::Mis => Side::Mis,
            SideArg::Clique => Side::Clique,
        },
        targets: match args.t {
            Some(t) => Targets::One(t),
            None => Targets::All,
        },
        workers: args.workers as usize,
        allow_order_8: args.n8_opt_in,
    };
    let reports = match (&args.n, &args.input) {
        (Some(n), _) => verify_exhaustive(*n, &opts)?,
        (None, Some(path)) => {
            let reader = open_input(path, stdin)?;
            let name = if path == "-" { "stdin" } else { path.as_str() };
            verify_stream(GraphStream::new(reader, args.format.into()), name, &opts)?
        }
        (None, None) => unreachable!("clap requires a source"),
    };

    let code = verify_exit_code(&reports);
    let passed = code == EXIT_OK;
    let mut table = report::verify_table();
    for r in &reports {
        table.push(report::verify_row(r));
    }
    if args.output == OutputFormat::Kv {
        writeln!(out, "command=verify")?;
    }
    table.write(args.output, true, out)?;
    if args.output == OutputFormat::Kv {
        writeln!(out, "result={}", if passed { "pass" } else { "fail" })?;
    }
    Ok(code)
}

fn verify_exit_code(reports: &[ExtremalReport]) -> i32 {
    if reports.iter().all(ExtremalReport::passed) {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

fn cmd_trace(args: &TraceArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> CmdResult {
    let choice = if args.vertex == "auto" {
        VertexChoice::Auto
    } else {
        VertexChoice::Vertex(args.vertex.parse().map_err(|_| {
            Failure(
                EXIT_USAGE,
                format!(
                    "--vertex expects a vertex index or `auto`, got {:?}",
                    args.vertex
                ),
            )
        })?)
    };
    let reader = open_input(&args.input.input, stdin)?;
    let mut table = report::trace_table();
    for (i, rec) in GraphStream::new(reader, args.input.format.into()).enumerate() {
        let rec = rec?;
        let split = induction_split(&rec.graph, args.t, choice)
            .map_err(|e| Failure(EXIT_USAGE, format!("line {}: {e}", rec.line)))?;
        table.push(report::trace_row(i as u64, rec.graph.order(), &split));
    }
    table.write(args.output, false, out)?;
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code. Errors go to `err`.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are reported as errors but belong on stdout
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return e.exit_code();
        }
    };
    let start = Instant::now();
    let result = match &cli.command {
        Command::Count(a) => cmd_count(a, stdin, out),
        Command::Bound(a) => cmd_bound(a, out),
        Command::Extremal(a) => cmd_extremal(a, out),
        Command::Verify(a) => cmd_verify(a, stdin, out),
        Command::Trace(a) => cmd_trace(a, stdin, out),
    };
    if cli.timing {
        let _ = writeln!(err, "wall_time_ms={}", start.elapsed().as_millis());
    }
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}
