use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use jaco_core::tables::{self, TableKind};
use jaco_core::{DegreeSequence, GraphFamily, Metric, SimpleGraph, SweepParams, TheoremId};

/// Linear Jaco graphs: degree tables, irregularity metrics and recursion checks.
#[derive(Debug, Parser)]
#[command(name = "jaco", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Dot,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Irr,
    Firr,
    Firrpm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Fast,
    Naive,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degree table of J*_1 ..= J*_n with irr_t or firr_t per row.
    Table {
        #[arg(value_enum)]
        kind: KindArg,
        n_max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact metric value for one graph.
    Metric {
        #[arg(value_enum)]
        kind: KindArg,
        /// jaco:N, path:N, cycle:N, star:N, biclique:N:M, or an edge-list file
        graph: String,
        #[arg(long, value_enum, default_value = "fast")]
        method: MethodArg,
    },
    /// Check recursions and identities against from-scratch oracles.
    Verify {
        /// thm21, thm31, thm32, cor31, lemma31, thm33
        #[arg(required = true)]
        theorems: Vec<String>,
        /// Range lo..hi (inclusive) or a single value
        #[arg(long)]
        n: String,
        /// Defaults to the --n range
        #[arg(long)]
        m: Option<String>,
        /// Fix the edge-joint vertex for thm33
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the JSON report here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a graph as DOT, edge list or JSON.
    Export {
        graph: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit 2: bad arguments or I/O trouble.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<ExitCode, UsageError>;

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, UsageError> {
    let num = |p: &str| {
        p.trim()
            .parse::<usize>()
            .map_err(|_| UsageError(format!("bad range {s:?}")))
    };
    let range = match s.split_once("..") {
        Some((lo, hi)) => num(lo)?..=num(hi.strip_prefix('=').unwrap_or(hi))?,
        None => {
            let v = num(s)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(UsageError(format!("empty range {s:?}")));
    }
    Ok(range)
}

enum GraphInput {
    Family(GraphFamily),
    File(SimpleGraph),
}

fn parse_graph(spec: &str) -> Result<GraphInput, UsageError> {
    if let Some(path) = spec.strip_prefix("file:") {
        return read_edge_list(Path::new(path));
    }
    match spec.parse::<GraphFamily>() {
        Ok(f) => Ok(GraphInput::Family(f)),
        Err(e) if Path::new(spec).is_file() => read_edge_list(Path::new(spec)).map_err(|_| e.into()),
        Err(e) => Err(e.into()),
    }
}

fn read_edge_list(path: &Path) -> Result<GraphInput, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    Ok(GraphInput::File(SimpleGraph::parse_edge_list(&text)?))
}

impl GraphInput {
    fn degrees(&self) -> Result<DegreeSequence, UsageError> {
        match self {
            GraphInput::Family(f) => Ok(f.degrees()?),
            GraphInput::File(g) => Ok(g.degree_sequence()),
        }
    }

    fn graph(self) -> Result<SimpleGraph, UsageError> {
        match self {
            GraphInput::Family(f) => Ok(f.build()?),
            GraphInput::File(g) => Ok(g),
        }
    }
}

fn emit(out: Option<&Path>, body: &str) -> Result<(), UsageError> {
    match out {
        Some(path) => fs::write(path, body).map_err(|e| UsageError(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn cmd_table(kind: KindArg, n_max: usize, format: Format, out: Option<&Path>) -> CmdResult {
    let kind = match kind {
        KindArg::Irr => TableKind::Irr,
        KindArg::Firr => TableKind::Firr,
        KindArg::Firrpm => return Err(UsageError("tables exist for irr and firr only".into())),
    };
    let rows = tables::table_rows(kind, n_max)?;
    let body = match format {
        Format::Text => tables::render_text(kind, &rows),
        Format::Csv => tables::render_csv(kind, &rows),
        Format::Json => tables::render_json(&rows) + "\n",
        other => return Err(UsageError(format!("table does not support {other:?} output"))),
    };
    emit(out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_metric(kind: KindArg, graph: &str, method: MethodArg) -> CmdResult {
    let degrees = parse_graph(graph)?.degrees()?;
    let metric = match kind {
        KindArg::Irr => Metric::Total,
        KindArg::Firr => Metric::Fibonacci,
        KindArg::Firrpm => Metric::SignedFibonacci,
    };
    let value = match method {
        MethodArg::Fast => metric.evaluate(&degrees),
        MethodArg::Naive => metric.evaluate_naive(&degrees),
    };
    emit(None, &format!("{value}\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    theorems: &[String],
    n: &str,
    m: Option<&str>,
    i: Option<usize>,
    format: Format,
    out: Option<&Path>,
) -> CmdResult {
    let ids = theorems
        .iter()
        .map(|t| t.parse::<TheoremId>())
        .collect::<Result<Vec<_>, _>>()?;
    let mut params = SweepParams::new(parse_range(n)?);
    if let Some(m) = m {
        params = params.with_m(parse_range(m)?);
    }
    params.i = i;
    if !matches!(format, Format::Text | Format::Json) {
        return Err(UsageError(format!("verify does not support {format:?} output")));
    }
    let report = jaco_core::verify_sweep(&ids, &params)?;
    let json = report.to_json() + "\n";
    if let Some(path) = out {
        emit(Some(path), &json)?;
    }
    match format {
        Format::Json if out.is_none() => emit(None, &json)?,
        _ => emit(None, &report.to_text())?,
    }
    Ok(if report.all_matched() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_export(graph: &str, format: Format, out: Option<&Path>) -> CmdResult {
    let g = parse_graph(graph)?.graph()?;
    let body = match format {
        Format::Dot => g.to_dot(),
        Format::Edgelist => g.to_edge_list(),
        Format::Json => g.to_json() + "\n",
        other => return Err(UsageError(format!("export does not support {other:?} output"))),
    };
    emit(out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Table {
            kind,
            n_max,
            format,
            out,
        } => cmd_table(kind, n_max, format, out.as_deref()),
        Command::Metric {
            kind,
            graph,
            method,
        } => cmd_metric(kind, &graph, method),
        Command::Verify {
            theorems,
            n,
            m,
            i,
            format,
            out,
        } => cmd_verify(&theorems, &n, m.as_deref(), i, format, out.as_deref()),
        Command::Export { graph, format, out } => cmd_export(&graph, format, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
