use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "nodal-strata", version, about = "Indegree divisors, graphical zonotopes and strata of nodal isospectral families")]
struct Cli {
    /// Output format; not every subcommand supports every format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Cap on edges for every exponential enumeration.
    #[arg(long, global = true, env = "SPECTRAL_STRATA_MAX_EDGES", default_value_t = 20)]
    max_edges: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Table,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
            Format::Table => "table",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Indegree questions about a single graph.
    Graph(GraphArgs),
    /// Lattice points or vertices of a graphical zonotope.
    Zonotope(ZonotopeArgs),
    /// Strata of an isospectral family.
    Strata(StrataArgs),
    /// The Hasse diagram of the strata of a loopless graph.
    Hasse(HasseArgs),
    /// Exact questions about one matrix polynomial.
    Matpoly(MatpolyArgs),
    /// A matrix polynomial in a chosen stratum of a line arrangement.
    Sample(SampleArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GraphAction {
    Indeg,
    Bpoly,
    Classify,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Enumerate,
    Flow,
    Inequalities,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[arg(value_enum)]
    action: GraphAction,
    /// Graph JSON, as a path or inline.
    #[arg(long)]
    graph: String,
    /// Divisor JSON such as `{"v1": 1}`; vertices left out are zero.
    #[arg(long)]
    divisor: Option<String>,
    #[arg(long, value_enum, default_value_t = MethodArg::Flow)]
    method: MethodArg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ZonotopeAction {
    Points,
    Vertices,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["complete", "graph"]))]
struct ZonotopeArgs {
    #[arg(value_enum, default_value_t = ZonotopeAction::Points)]
    action: ZonotopeAction,
    /// The permutohedron: zonotope of the complete graph on N vertices.
    #[arg(long, value_name = "N")]
    complete: Option<usize>,
    #[arg(long)]
    graph: Option<String>,
    /// Print only the number of points.
    #[arg(long)]
    count: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StrataAction {
    Enumerate,
    Adjacency,
    Local,
    Components,
    Cr,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["lines", "graph"]))]
struct StrataArgs {
    #[arg(value_enum, default_value_t = StrataAction::Enumerate)]
    action: StrataAction,
    /// Generic arrangement of N lines: m = 1 and dual graph K_N.
    #[arg(long, value_name = "N")]
    lines: Option<usize>,
    /// Dual graph JSON, as a path or inline.
    #[arg(long)]
    graph: Option<String>,
    /// Degree of the matrix polynomial, with --graph.
    #[arg(short, long, default_value_t = 1)]
    m: usize,
    /// Matrix size, with --graph; defaults to the number of vertices.
    #[arg(short, long)]
    n: Option<usize>,
    /// Shorthand for --format table.
    #[arg(long)]
    table: bool,
    /// Stratum JSON `{"subgraph": [...], "divisor": {...}}`: the larger
    /// stratum for `adjacency`.
    #[arg(long)]
    from: Option<String>,
    /// Stratum JSON: the smaller stratum for `adjacency`, the base for `local`.
    #[arg(long)]
    at: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum HasseAction {
    Export,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["lines", "graph"]))]
struct HasseArgs {
    #[arg(value_enum, default_value_t = HasseAction::Export)]
    action: HasseAction,
    #[arg(long, value_name = "N")]
    lines: Option<usize>,
    #[arg(long)]
    graph: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MatpolyAction {
    Charpoly,
    Classify,
    Reducibility,
}

#[derive(Args, Debug)]
struct MatpolyArgs {
    #[arg(value_enum)]
    action: MatpolyAction,
    /// Matrix polynomial JSON `{"m", "n", "coeffs"}`, as a path or inline.
    #[arg(long)]
    poly: String,
    /// Line arrangement JSON `{"lines": [[a, b], ...]}`. When left out it is
    /// read off a linear polynomial with diagonal leading coefficient.
    #[arg(long)]
    arrangement: Option<String>,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long)]
    arrangement: String,
    /// Stratum JSON `{"subgraph": [...], "divisor": {...}}`.
    #[arg(long)]
    stratum: String,
    /// Comma-separated nonzero rationals; small defaults are tried otherwise.
    #[arg(long, value_delimiter = ',')]
    params: Option<Vec<String>>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            report(&commands::CliError::Usage(e.to_string()));
            return ExitCode::from(2);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            report(&e);
            ExitCode::from(2)
        }
    }
}

fn report(e: &commands::CliError) {
    let v = serde_json::json!({"error": e.kind(), "message": e.to_string()});
    eprintln!("{v}");
}
