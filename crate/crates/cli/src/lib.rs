//! The `dcl` command line.
//!
//! Every subcommand reads an edge list from a file argument or standard
//! input. Exit codes: 0 positive answer, 1 negative answer, 2 input or
//! configuration error, 3 enumeration cap exceeded.

use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use dcl_core::io::{export_dot, parse_graph, parse_labeling, parse_vector, serialize_graph};
use dcl_core::io::{serialize_labeling, serialize_orientation};
use dcl_core::labeling::{label_graph, LabelOutcome};
use dcl_core::realization::{OracleLimits, DEFAULT_MAX_ORIENTATIONS, DEFAULT_MAX_VECTORS};
use dcl_core::{
    find_forbidden_configuration, generate, is_degree_complete_oracle, realize, recognize,
    Decomposition, Error, Family, GeneratorSpec, Graph, Labeling, OracleVerdict, Recognition,
    Route, UnlabeledWitness,
};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dcl",
    version,
    about = "Degree complete labelings: recognize, label, verify, realize",
    after_help = "Graphs are edge lists: a header `n m`, then m lines `u v` with 1-based \
                  vertices. Labelings are n lines `vertex label`.\n\
                  Exit codes: 0 positive, 1 negative, 2 input/configuration error, \
                  3 enumeration cap exceeded."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RouteArg {
    /// Remove X1 and X2, expect paths
    Iii,
    /// Remove X1 and F, expect paths
    Iv,
    /// Search for T1, T2 or a cycle of length at least 4
    Ii,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Iii => Route::RemoveX2,
            RouteArg::Iv => Route::RemoveF,
            RouteArg::Ii => Route::Obstructions,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Insert triangle apexes into the residual path
    X2,
    /// Use the path left after deleting F
    F,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyArg {
    Path,
    Cycle,
    Star,
    Caterpillar,
    T1,
    T2,
    #[value(alias = "triangle-chain")]
    TriangleChain,
    #[value(alias = "random-gnm")]
    RandomGnm,
    #[value(alias = "random-dcl")]
    RandomDcl,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Path => Family::Path,
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::Star => Family::Star,
            FamilyArg::Caterpillar => Family::Caterpillar,
            FamilyArg::T1 => Family::T1,
            FamilyArg::T2 => Family::T2,
            FamilyArg::TriangleChain => Family::TriangleChain,
            FamilyArg::RandomGnm => Family::RandomGnm,
            FamilyArg::RandomDcl => Family::RandomDcl,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the graph has a degree complete labeling
    Check {
        /// Edge list file; standard input when omitted or `-`
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "iii")]
        route: RouteArg,
    },
    /// Print a degree complete labeling
    Label {
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "x2")]
        method: MethodArg,
        /// Also write the labeled graph as Graphviz DOT
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Test a labeled graph for crossing or nested disjoint edges
    Verify {
        graph: Option<PathBuf>,
        /// Labeling file; vertex ids are the labels when omitted
        #[arg(long, value_name = "PATH")]
        labeling: Option<PathBuf>,
    },
    /// Brute-force degree completeness over all orientations
    Oracle {
        graph: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        labeling: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_VECTORS)]
        max_vectors: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_ORIENTATIONS)]
        max_orientations: u64,
    },
    /// Find an orientation with the given out-degree vector
    Realize {
        graph: Option<PathBuf>,
        /// Out-degrees by label, comma separated, e.g. 0,2,1,0
        #[arg(long, value_name = "CSV")]
        vector: String,
        #[arg(long, value_name = "PATH")]
        labeling: Option<PathBuf>,
    },
    /// Generate a graph
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Number of vertices (fixed for t1 and t2)
        #[arg(long)]
        n: Option<usize>,
        /// Number of edges (random_gnm)
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the graph as Graphviz DOT
    ExportDot {
        graph: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        labeling: Option<PathBuf>,
    },
}

/// A failure that ends the command with a diagnostic.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: String,
}

impl Io<'_> {
    fn read(&mut self, path: Option<&Path>) -> Result<(String, String), Failure> {
        match path {
            Some(p) if p != Path::new("-") => fs::read_to_string(p)
                .map(|t| (t, p.display().to_string()))
                .map_err(|e| input_failure(format!("{}: {e}", p.display()))),
            _ => {
                let mut text = String::new();
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| input_failure(format!("<stdin>: {e}")))?;
                Ok((text, "<stdin>".to_string()))
            }
        }
    }

    fn graph(&mut self, path: Option<&Path>) -> Result<Graph, Failure> {
        let (text, name) = self.read(path)?;
        parse_graph(&text).map_err(|e| input_failure(format!("{name}: {e}")))
    }

    fn labeled(
        &mut self,
        graph: Option<&Path>,
        labeling: Option<&Path>,
    ) -> Result<(Graph, Labeling), Failure> {
        let g = self.graph(graph)?;
        let f = match labeling {
            None => Labeling::identity(g.order()),
            Some(p) => {
                let (text, name) = self.read(Some(p))?;
                parse_labeling(&text).map_err(|e| input_failure(format!("{name}: {e}")))?
            }
        };
        if f.len() != g.order() {
            return Err(input_failure(format!(
                "labeling covers {} vertices, graph has {}",
                f.len(),
                g.order()
            )));
        }
        Ok((g, f))
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_decomposition(out: &mut String, d: &Decomposition) {
    let _ = writeln!(out, "YES");
    let _ = writeln!(out, "ROUTE {}", d.route);
    let _ = writeln!(out, "X1 {}", join(&d.x1));
    let _ = writeln!(out, "X2 {}", join(&d.x2));
    let _ = writeln!(out, "F {}", join(&d.f));
    for p in &d.paths {
        let _ = writeln!(out, "PATH {}", join(p));
    }
}

fn write_witness(out: &mut String, w: &UnlabeledWitness) {
    let _ = writeln!(out, "NO");
    let _ = writeln!(out, "OBSTRUCTION {w}");
    let _ = writeln!(out, "EDGES {}", join(&w.edges));
}

fn execute(cmd: Command, io: &mut Io<'_>) -> Result<i32, Failure> {
    match cmd {
        Command::Check { graph, route } => {
            let g = io.graph(graph.as_deref())?;
            match recognize(&g, route.into())? {
                Recognition::Labelable(d) => {
                    write_decomposition(&mut io.out, &d);
                    Ok(EXIT_POSITIVE)
                }
                Recognition::Obstructed(w) => {
                    write_witness(&mut io.out, &w);
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Label { graph, method, dot } => {
            let g = io.graph(graph.as_deref())?;
            let route = match method {
                MethodArg::X2 => Route::RemoveX2,
                MethodArg::F => Route::RemoveF,
            };
            match label_graph(&g, route)? {
                LabelOutcome::Labeled { labeling, .. } => {
                    if let Some(path) = dot {
                        fs::write(&path, export_dot(&g, Some(&labeling)))
                            .map_err(|e| input_failure(format!("{}: {e}", path.display())))?;
                    }
                    io.out.push_str(&serialize_labeling(&labeling));
                    Ok(EXIT_POSITIVE)
                }
                LabelOutcome::Obstructed(w) => {
                    write_witness(&mut io.out, &w);
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Verify { graph, labeling } => {
            let (g, f) = io.labeled(graph.as_deref(), labeling.as_deref())?;
            let lg = g.apply_labeling(&f)?;
            match find_forbidden_configuration(&lg) {
                None => {
                    io.out.push_str("DEGREE-COMPLETE\n");
                    Ok(EXIT_POSITIVE)
                }
                Some(w) => {
                    let order = f.order();
                    let vertex_edges = w
                        .edges()
                        .map(|e| format!("{}-{}", order[e.lo() - 1], order[e.hi() - 1]));
                    let _ = writeln!(io.out, "NOT-DEGREE-COMPLETE {w}");
                    let _ = writeln!(io.out, "EDGES {}", join(vertex_edges));
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Oracle {
            graph,
            labeling,
            max_vectors,
            max_orientations,
        } => {
            let (g, f) = io.labeled(graph.as_deref(), labeling.as_deref())?;
            let lg = g.apply_labeling(&f)?;
            let limits = OracleLimits {
                max_vectors,
                max_orientations,
            };
            match is_degree_complete_oracle(&lg, limits)? {
                OracleVerdict::Complete => {
                    io.out.push_str("ORACLE-COMPLETE\n");
                    Ok(EXIT_POSITIVE)
                }
                OracleVerdict::Incomplete(s) => {
                    let _ = writeln!(io.out, "ORACLE-INCOMPLETE {s}");
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Realize {
            graph,
            vector,
            labeling,
        } => {
            let s = parse_vector(&vector).map_err(|e| input_failure(format!("--vector: {e}")))?;
            let (g, f) = io.labeled(graph.as_deref(), labeling.as_deref())?;
            let lg = g.apply_labeling(&f)?;
            match realize(&lg, &s)? {
                Some(o) => {
                    io.out.push_str("REALIZABLE\n");
                    io.out.push_str(&serialize_orientation(&o));
                    Ok(EXIT_POSITIVE)
                }
                None => {
                    io.out.push_str("NOT-REALIZABLE\n");
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Gen { family, n, m, seed } => {
            let spec = GeneratorSpec {
                family: family.into(),
                n,
                m,
                seed,
            };
            io.out.push_str(&serialize_graph(&generate(&spec)?));
            Ok(EXIT_POSITIVE)
        }
        Command::ExportDot { graph, labeling } => {
            let g = io.graph(graph.as_deref())?;
            let dot = match labeling {
                None => export_dot(&g, None),
                Some(p) => {
                    let (text, name) = io.read(Some(&p))?;
                    let f =
                        parse_labeling(&text).map_err(|e| input_failure(format!("{name}: {e}")))?;
                    g.apply_labeling(&f)?;
                    export_dot(&g, Some(&f))
                }
            };
            io.out.push_str(&dot);
            Ok(EXIT_POSITIVE)
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
                EXIT_INPUT
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
                EXIT_POSITIVE
            };
        }
    };
    let mut io = Io {
        stdin,
        out: String::new(),
    };
    let code = match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    };
    if stdout
        .write_all(io.out.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return EXIT_INPUT;
    }
    code
}
