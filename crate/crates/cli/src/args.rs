use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use itline::io::Format;
use itline::Caps;

#[derive(Parser, Debug)]
#[command(name = "itline", version, about = "Iterated line graph invariants and exact index checks")]
pub struct Cli {
    #[command(flatten)]
    pub caps: CapsArgs,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

/// Resource caps. Each can also come from an `ITLINE_*` variable; flags win.
#[derive(Args, Debug, Clone, Serialize)]
pub struct CapsArgs {
    /// Largest tower level, in vertices.
    #[arg(long, global = true, env = "ITLINE_MAX_VERTICES")]
    pub max_vertices: Option<usize>,
    /// Deepest tower level.
    #[arg(long, global = true, env = "ITLINE_MAX_DEPTH")]
    pub max_depth: Option<usize>,
    /// Largest graph handed to a Hamiltonian or trail oracle.
    #[arg(long, global = true, env = "ITLINE_ORACLE_MAX_VERTICES")]
    pub oracle_max_vertices: Option<usize>,
    /// Largest edge count for exhaustive collapsibility.
    #[arg(long, global = true, env = "ITLINE_COLLAPSIBLE_MAX_EDGES")]
    pub collapsible_max_edges: Option<usize>,
    /// Search nodes per oracle call.
    #[arg(long, global = true, env = "ITLINE_SEARCH_BUDGET")]
    pub search_budget: Option<u64>,
}

impl CapsArgs {
    pub fn resolve(&self) -> Caps {
        let d = Caps::default();
        Caps {
            max_vertices: self.max_vertices.unwrap_or(d.max_vertices),
            max_depth: self.max_depth.unwrap_or(d.max_depth),
            oracle_max_vertices: self.oracle_max_vertices.unwrap_or(d.oracle_max_vertices),
            collapsible_max_edges: self.collapsible_max_edges.unwrap_or(d.collapsible_max_edges),
            search_budget: self.search_budget.unwrap_or(d.search_budget),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormatArg {
    Graph6,
    Edgelist,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Edgelist => Format::Edgelist,
        }
    }
}

/// Where graphs come from: a file (`-` for stdin) or a named graph.
#[derive(Args, Debug, Clone, Serialize)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// A built-in graph such as `petersen` or `fig1-tree`.
    #[arg(long, value_name = "NAME")]
    pub named: Option<String>,
    /// Input format; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    #[serde(skip)]
    pub format: Option<FormatArg>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full report per graph: class, path statistics, triangularity, bounds and exact indices.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Triangularity levels to report.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        k: Vec<u32>,
        /// (s,t) pairs for the i_{s,t} rows, as `s:t`.
        #[arg(long, value_delimiter = ',', default_value = "0:0,0:1,1:0", value_parser = parse_pair)]
        st: Vec<(usize, usize)>,
        /// s values for the h_s rows.
        #[arg(long, value_delimiter = ',', default_value = "0,1")]
        hs: Vec<usize>,
        /// Bounds only, no exact index computation.
        #[arg(long)]
        no_exact: bool,
        /// Also write each graph in DOT format to DIR/<id>.dot.
        #[arg(long, value_name = "DIR")]
        dot: Option<PathBuf>,
    },
    /// Per-level summaries of the line graph tower, one JSON line per level.
    Tower {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Depth at which the tower reaches minimum degree three.
    Dtilde {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Mode::Audit)]
        mode: Mode,
        /// Same as `--mode audit`.
        #[arg(long)]
        audit: bool,
        /// Disagreements are appended here.
        #[arg(long, value_name = "FILE", default_value = "counterexamples.g6")]
        counterexamples: PathBuf,
    },
    /// Exact index along the tower next to its closed-form bound.
    Index {
        #[command(subcommand)]
        kind: IndexKind,
    },
    /// Runs one exact oracle and prints its certificate.
    Oracle {
        #[arg(value_enum)]
        name: OracleName,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 0)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// Runs verification suites over a corpus.
    Verify {
        /// A suite name or `all`.
        #[arg(long)]
        suite: String,
        /// `builtin` or a graph file.
        #[arg(long, default_value = "builtin")]
        corpus: String,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// One row per checked graph.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
        /// Simple counterexamples in graph6, written when any are found.
        #[arg(long, value_name = "FILE", default_value = "counterexamples.g6")]
        counterexamples: PathBuf,
    },
    /// Writes a generated corpus.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, value_enum, default_value_t = FormatArg::Graph6, global = true)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Formula,
    Direct,
    Audit,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(tag = "index", rename_all = "lowercase")]
pub enum IndexKind {
    /// First level that is k-triangular.
    Tk {
        #[command(flatten)]
        #[serde(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: u32,
    },
    /// First s-Hamiltonian level.
    Hs {
        #[command(flatten)]
        #[serde(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 0)]
        s: usize,
    },
    /// First (s,t)-supereulerian level.
    Ist {
        #[command(flatten)]
        #[serde(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 0)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// First supereulerian level.
    S {
        #[command(flatten)]
        #[serde(flatten)]
        input: InputArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleName {
    Hamiltonian,
    SHamiltonian,
    Supereulerian,
    DominatingTrail,
    StSupereulerian,
    Collapsible,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GenKind {
    /// Trees with all degrees 1 or 3, one per isomorphism class.
    BFamily {
        #[arg(long, default_value_t = 14)]
        max_vertices: usize,
    },
    /// Connected random graphs, `per_n` for each order.
    Random {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        min_order: usize,
        #[arg(long, default_value_t = 9)]
        max_order: usize,
        #[arg(long, default_value_t = 50)]
        per_n: usize,
    },
    /// Random admissible graphs with minimum degree at most two.
    LowDegree {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// The built-in named graphs.
    Named,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected s:t, got `{s}`"))?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    Ok((num(a)?, num(b)?))
}
