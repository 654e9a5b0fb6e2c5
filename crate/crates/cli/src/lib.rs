//! The `leavitt` command line.
//!
//! Every subcommand writes a deterministic text report. Exit status is 0 when
//! the command succeeded and all its checks passed, 1 when a check failed and
//! 2 on malformed input.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand};
use leavitt_core::contraction::{contract, validate};
use leavitt_core::graph::{is_full, parse_graph, parse_multigraph, saturated_hereditary_closure, Graph};
use leavitt_core::morita::{MoritaContext, SampleBounds};
use leavitt_core::moves::{collapse_segment, desingularise_truncated, in_delay, DelayVector, Fixture, FixtureName};
use leavitt_core::reduction::{reduce, verify_certificate, Reduction, ReductionCertificate};
use leavitt_core::{Algebra, Element, RingSpec, VertexSet};

#[derive(Parser, Debug)]
#[command(name = "leavitt", version, about = "Leavitt path algebras of finite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SetArg {
    /// Comma-separated vertex identifiers.
    #[arg(long, value_name = "V1,V2,..", allow_hyphen_values = true)]
    set: String,
}

#[derive(Args, Debug)]
struct G0Arg {
    /// Comma-separated vertex identifiers of G^0.
    #[arg(long, value_name = "V1,V2,..")]
    g0: String,
}

#[derive(Args, Debug)]
struct RingArg {
    /// `Z` or `Zmod:<n>`.
    #[arg(long, default_value = "Z")]
    ring: RingSpec,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Saturated hereditary closure of a vertex set.
    Closure {
        graph: PathBuf,
        #[command(flatten)]
        set: SetArg,
    },
    /// Whether a vertex set is full.
    Full {
        graph: PathBuf,
        #[command(flatten)]
        set: SetArg,
    },
    /// The quotient graph by the closure of a vertex set.
    Quotient {
        graph: PathBuf,
        #[command(flatten)]
        set: SetArg,
    },
    /// Normal form of an expression.
    Nf {
        graph: PathBuf,
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Product of two expressions.
    Mul {
        graph: PathBuf,
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Homogeneous component of given degree.
    Grade {
        graph: PathBuf,
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        deg: i64,
    },
    /// Checks the Morita context of a vertex set on random samples.
    Morita {
        graph: PathBuf,
        #[command(flatten)]
        set: SetArg,
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Checks the hypotheses for contracting onto G^0.
    CgValidate {
        graph: PathBuf,
        #[command(flatten)]
        g0: G0Arg,
    },
    /// Contracts onto G^0 and prints the graph with its witness paths.
    CgContract {
        graph: PathBuf,
        #[command(flatten)]
        g0: G0Arg,
    },
    /// Verifies a contraction: family, homomorphism, preimages, injectivity.
    CgVerify {
        graph: PathBuf,
        #[command(flatten)]
        g0: G0Arg,
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 4)]
        maxlen: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// In-delays a graph by the delays listed in a file.
    DelayIn {
        graph: PathBuf,
        #[arg(long)]
        d: PathBuf,
        /// Print the vertices to contract back onto instead of the graph.
        #[arg(long)]
        emit_g0: bool,
    },
    /// Truncated desingularisation of a graph with bundles.
    Desing {
        graph: PathBuf,
        #[arg(long)]
        depth: usize,
        /// Print the vertices to contract back onto instead of the graph.
        #[arg(long)]
        emit_g0: bool,
    },
    /// Collapses an acyclic segment of non-singular vertices.
    Collapse {
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        seg: String,
    },
    /// One of the example graphs EX51, EX52, EX53 at a finite depth.
    Fixture {
        name: String,
        #[arg(long)]
        depth: usize,
        /// Print the expected contraction instead of the graph.
        #[arg(long, conflicts_with = "emit_g0")]
        emit_expected: bool,
        /// Print the vertices to contract onto instead of the graph.
        #[arg(long)]
        emit_g0: bool,
    },
    /// Searches for a reduction certificate.
    Reduce {
        graph: PathBuf,
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        maxlen: Option<usize>,
    },
    /// Rechecks a reduction certificate.
    VerifyCert {
        graph: PathBuf,
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        cert: PathBuf,
    },
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn checked(stdout: String, passed: bool) -> Outcome {
        Outcome { code: if passed { 0 } else { 1 }, stdout, stderr: String::new() }
    }
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Res = Result<Outcome, InputError>;

fn read(path: &FsPath) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_graph(path: &FsPath) -> Result<Graph, InputError> {
    let text = read(path)?;
    parse_graph(&text).map_err(|e| InputError(format!("{}:{e}", path.display())))
}

fn vertex_set(g: &Graph, list: &str) -> Result<VertexSet, InputError> {
    let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(g.vertex_set(&names)?)
}

fn set_text(g: &Graph, vs: &VertexSet) -> String {
    let names: Vec<&str> = vs.iter().map(|&v| g.vertex_name(v)).collect();
    names.join(",")
}

fn parse_expr(alg: &Algebra, text: &str) -> Result<Element, InputError> {
    alg.parse(text).map_err(|e| InputError(format!("expression: {e}")))
}

fn dispatch(cmd: Command) -> Res {
    match cmd {
        Command::Closure { graph, set } => {
            let g = load_graph(&graph)?;
            let h = saturated_hereditary_closure(&g, &vertex_set(&g, &set.set)?)?;
            Ok(Outcome::ok(format!("{{{}}}\n", set_text(&g, &h))))
        }
        Command::Full { graph, set } => {
            let g = load_graph(&graph)?;
            Ok(Outcome::ok(format!("{}\n", is_full(&g, &vertex_set(&g, &set.set)?)?)))
        }
        Command::Quotient { graph, set } => {
            let g = load_graph(&graph)?;
            let h = saturated_hereditary_closure(&g, &vertex_set(&g, &set.set)?)?;
            Ok(Outcome::ok(g.quotient(&h)?.to_text()))
        }
        Command::Nf { graph, ring, expr } => {
            let alg = Algebra::new(load_graph(&graph)?, ring.ring);
            Ok(Outcome::ok(format!("{}\n", parse_expr(&alg, &expr)?.to_expr())))
        }
        Command::Mul { graph, ring, lhs, rhs } => {
            let alg = Algebra::new(load_graph(&graph)?, ring.ring);
            let x = &parse_expr(&alg, &lhs)? * &parse_expr(&alg, &rhs)?;
            Ok(Outcome::ok(format!("{}\n", x.to_expr())))
        }
        Command::Grade { graph, ring, expr, deg } => {
            let alg = Algebra::new(load_graph(&graph)?, ring.ring);
            Ok(Outcome::ok(format!("{}\n", parse_expr(&alg, &expr)?.grade_component(deg).to_expr())))
        }
        Command::Morita { graph, set, ring, samples, seed } => {
            let g = load_graph(&graph)?;
            let vs = vertex_set(&g, &set.set)?;
            let ctx = MoritaContext::new(Algebra::new(g, ring.ring), vs)?;
            let report = ctx.verify(samples, seed, SampleBounds::default());
            Ok(Outcome::checked(report.to_string(), report.passed()))
        }
        Command::CgValidate { graph, g0 } => {
            let g = load_graph(&graph)?;
            let report = validate(&g, &vertex_set(&g, &g0.g0)?);
            Ok(Outcome::checked(report.to_string(), report.passed()))
        }
        Command::CgContract { graph, g0 } => {
            let g = load_graph(&graph)?;
            let g0 = vertex_set(&g, &g0.g0)?;
            let report = validate(&g, &g0);
            if !report.passed() {
                return Ok(Outcome::checked(report.to_string(), false));
            }
            let res = contract(&Algebra::new(g, RingSpec::Integers), &g0)?;
            Ok(Outcome::ok(res.to_text()))
        }
        Command::CgVerify { graph, g0, ring, maxlen, samples, seed } => {
            let g = load_graph(&graph)?;
            let g0 = vertex_set(&g, &g0.g0)?;
            let report = validate(&g, &g0);
            if !report.passed() {
                return Ok(Outcome::checked(report.to_string(), false));
            }
            let res = contract(&Algebra::new(g, ring.ring), &g0)?;
            let report = res.verify(maxlen, samples, seed);
            Ok(Outcome::checked(report.to_string(), report.passed()))
        }
        Command::DelayIn { graph, d, emit_g0 } => {
            let g = load_graph(&graph)?;
            let dv = DelayVector::parse(&g, &read(&d)?).map_err(|e| InputError(format!("{}:{e}", d.display())))?;
            let moved = in_delay(&g, &dv)?;
            Ok(Outcome::ok(if emit_g0 {
                format!("{}\n", set_text(&moved.graph, &moved.g0))
            } else {
                moved.graph.to_text()
            }))
        }
        Command::Desing { graph, depth, emit_g0 } => {
            let text = read(&graph)?;
            let m = parse_multigraph(&text).map_err(|e| InputError(format!("{}:{e}", graph.display())))?;
            let moved = desingularise_truncated(&m, depth)?;
            Ok(Outcome::ok(if emit_g0 {
                format!("{}\n", set_text(&moved.graph, &moved.g0))
            } else {
                moved.graph.to_text()
            }))
        }
        Command::Collapse { graph, seg } => {
            let g = load_graph(&graph)?;
            let seg = vertex_set(&g, &seg)?;
            match collapse_segment(&Algebra::new(g, RingSpec::Integers), &seg) {
                Ok((report, res)) => Ok(Outcome::ok(format!("{report}{}", res.to_text()))),
                Err(leavitt_core::moves::MoveError::NotCollapsible(report)) => {
                    Ok(Outcome::checked(report.to_string(), false))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Fixture { name, depth, emit_expected, emit_g0 } => {
            let fx = Fixture::new(name.parse::<FixtureName>()?, depth)?;
            let out = if emit_expected {
                fx.expected_text()?
            } else if emit_g0 {
                format!("{}\n", set_text(&fx.graph, &fx.g0))
            } else {
                fx.graph.to_text()
            };
            Ok(Outcome::ok(out))
        }
        Command::Reduce { graph, ring, expr, maxlen } => {
            let alg = Algebra::new(load_graph(&graph)?, ring.ring);
            let x = parse_expr(&alg, &expr)?;
            match reduce(&x, maxlen)? {
                Reduction::Found(cert) => Ok(Outcome::ok(format!("{}\n", cert.to_text(alg.graph())))),
                Reduction::Exhausted { bound } => Ok(Outcome::checked(format!("exhausted bound={bound}\n"), false)),
            }
        }
        Command::VerifyCert { graph, ring, expr, cert } => {
            let alg = Algebra::new(load_graph(&graph)?, ring.ring);
            let x = parse_expr(&alg, &expr)?;
            let text = read(&cert)?;
            let c = ReductionCertificate::parse(alg.graph(), text.trim())
                .map_err(|e| InputError(format!("{}: {e}", cert.display())))?;
            let ok = verify_certificate(&x, &c);
            let mut out = String::new();
            let _ = writeln!(out, "certificate: {}", if ok { "PASS" } else { "FAIL" });
            Ok(Outcome::checked(out, ok))
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(InputError(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}
