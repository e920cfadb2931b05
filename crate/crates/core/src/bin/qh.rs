//! Command-line front end: load an algebra description, run one analysis,
//! print text, JSON, or DOT.
//!
//! Exit codes separate "the computation says no" (0, with the verdict in
//! the payload) from "the input is invalid" (2).

use clap::{Args, Parser, Subcommand};
use qhstruct::report::{
    biquiver_report, check_report, connect_report, enumerate_report, standard_report, to_json,
    twist_graph_report, verify_report, AlgebraSummary, BiquiverReport, CheckReport, ConnectReport,
    EnumerateReport, StandardReport, TwistGraphReport, VerifyReport,
};
use qhstruct::{
    biquiver, biquiver_dot, twist_graph, twist_graph_dot, Algebra, AlgebraFile, ExplorerError,
    ParseError, Perm, PermError, Strategy,
};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "qh",
    version,
    about = "Quasi-hereditary structures on bound quiver algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArg {
    /// Algebra description file.
    #[arg(long, value_name = "FILE")]
    algebra: PathBuf,
}

#[derive(Args)]
struct OrderArgs {
    /// One-line notation sigma(1),...,sigma(n): the position of each vertex.
    #[arg(long, value_name = "CSV")]
    perm: Option<String>,
    /// Word i_l,...,i_1 in adjacent transpositions, rightmost applied first.
    #[arg(long, value_name = "CSV")]
    word: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the order gives a quasi-hereditary structure.
    Check {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print all standard and costandard dimension vectors for the order.
    Standard {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long)]
        json: bool,
    },
    /// Hom/Ext invariants between neighboring standard modules.
    Biquiver {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// List every quasi-hereditary order.
    Enumerate {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// brute (test all n! orders) or bfs (walk twistable moves).
        #[arg(long, default_value = "brute")]
        strategy: String,
        #[arg(long)]
        json: bool,
    },
    /// Graph of quasi-hereditary orders joined by twistable positions.
    TwistGraph {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, default_value = "brute")]
        strategy: String,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Certified path of twists between two quasi-hereditary orders.
    Connect {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// One-line notation of the starting order.
        #[arg(long, value_name = "CSV")]
        from: String,
        /// One-line notation of the target order.
        #[arg(long, value_name = "CSV")]
        to: String,
        #[arg(long)]
        json: bool,
    },
    /// Connect every ordered pair of quasi-hereditary orders.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Explorer(#[from] ExplorerError),
    #[error("{0}")]
    Input(String),
}

fn main() -> ExitCode {
    if let Ok(raw) = std::env::var("QH_THREADS") {
        match raw.parse::<usize>() {
            Ok(k) if k >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global();
            }
            _ => {
                eprintln!("error: QH_THREADS must be a positive integer, got `{raw}`");
                return ExitCode::from(2);
            }
        }
    }
    match run(Cli::parse()) {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Single stdout write; a broken pipe downstream is a normal way for the
/// reader to stop early, not an error.
fn emit(s: &str) {
    use std::io::Write as _;
    if std::io::stdout().lock().write_all(s.as_bytes()).is_err() {
        std::process::exit(0);
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    Ok(match cli.command {
        Command::Check {
            algebra,
            order,
            json,
        } => {
            let a = load(&algebra.algebra)?;
            let sigma = order.resolve(a.n())?;
            let r = check_report(&a, &sigma);
            if json {
                json_line(&r)
            } else {
                render_check(&r)
            }
        }
        Command::Standard {
            algebra,
            order,
            json,
        } => {
            let a = load(&algebra.algebra)?;
            let sigma = order.resolve(a.n())?;
            let r = standard_report(&a, &sigma);
            if json {
                json_line(&r)
            } else {
                render_standard(&r)
            }
        }
        Command::Biquiver {
            algebra,
            order,
            json,
            dot,
        } => {
            let a = load(&algebra.algebra)?;
            let sigma = order.resolve(a.n())?;
            if dot {
                biquiver_dot(&biquiver(&a, &sigma))
            } else {
                let r = biquiver_report(&a, &sigma);
                if json {
                    json_line(&r)
                } else {
                    render_biquiver(&r)
                }
            }
        }
        Command::Enumerate {
            algebra,
            strategy,
            json,
        } => {
            let a = load(&algebra.algebra)?;
            let r = enumerate_report(&a, parse_strategy(&strategy)?)?;
            if json {
                json_line(&r)
            } else {
                render_enumerate(&r)
            }
        }
        Command::TwistGraph {
            algebra,
            strategy,
            json,
            dot,
        } => {
            let a = load(&algebra.algebra)?;
            let strategy = parse_strategy(&strategy)?;
            if dot {
                twist_graph_dot(&twist_graph(&a, strategy)?)
            } else {
                let r = twist_graph_report(&a, strategy)?;
                if json {
                    json_line(&r)
                } else {
                    render_twist_graph(&r)
                }
            }
        }
        Command::Connect {
            algebra,
            from,
            to,
            json,
        } => {
            let a = load(&algebra.algebra)?;
            let from = parse_perm(&from, a.n())?;
            let to = parse_perm(&to, a.n())?;
            let r = connect_report(&a, &from, &to)?;
            if json {
                json_line(&r)
            } else {
                render_connect(&r)
            }
        }
        Command::Verify { algebra, json } => {
            let a = load(&algebra.algebra)?;
            let r = verify_report(&a)?;
            if json {
                json_line(&r)
            } else {
                render_verify(&r)
            }
        }
    })
}

fn json_line<T: serde::Serialize>(r: &T) -> String {
    let mut s = to_json(r);
    s.push('\n');
    s
}

fn load(path: &Path) -> Result<Arc<Algebra>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(AlgebraFile::parse(&text)?.build()?)
}

fn parse_strategy(s: &str) -> Result<Strategy, CliError> {
    s.parse().map_err(CliError::Input)
}

fn parse_csv(s: &str, what: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            CliError::Input(format!(
                "{what} must be comma-separated integers, got `{s}`"
            ))
        })
}

fn parse_perm(s: &str, n: usize) -> Result<Perm, CliError> {
    let entries = parse_csv(s, "permutation")?;
    if entries.len() != n {
        return Err(CliError::Input(format!(
            "permutation has {} entries but the algebra has {n} vertices",
            entries.len()
        )));
    }
    Ok(Perm::from_one_line(&entries)?)
}

impl OrderArgs {
    fn resolve(&self, n: usize) -> Result<Perm, CliError> {
        let from_perm = self.perm.as_deref().map(|s| parse_perm(s, n)).transpose()?;
        let from_word = self
            .word
            .as_deref()
            .map(|s| {
                let letters = parse_csv(s, "word")?;
                if let Some(&bad) = letters.iter().find(|&&i| i < 1 || i >= n) {
                    return Err(CliError::Input(format!(
                        "word letter {bad} out of range 1..={}",
                        n - 1
                    )));
                }
                let shifted: Vec<usize> = letters.iter().map(|&i| i - 1).collect();
                Ok(Perm::from_word(n, &shifted)?)
            })
            .transpose()?;
        match (from_perm, from_word) {
            (Some(p), Some(w)) if p != w => Err(CliError::Input(format!(
                "--perm and --word disagree: {} vs {}",
                csv(&p.one_line()),
                csv(&w.one_line())
            ))),
            (Some(p), _) => Ok(p),
            (None, Some(w)) => Ok(w),
            (None, None) => Err(CliError::Input(
                "one of --perm or --word is required".into(),
            )),
        }
    }
}

fn csv(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn dims(v: &[usize]) -> String {
    format!("({})", csv(v))
}

fn header(out: &mut String, a: &AlgebraSummary) {
    let _ = writeln!(
        out,
        "algebra {} over {}: {} vertices, dimension {}",
        a.name, a.field, a.vertices, a.dimension
    );
}

fn render_check(r: &CheckReport) -> String {
    let mut out = String::new();
    header(&mut out, &r.algebra);
    let _ = writeln!(out, "order: {}", csv(&r.order));
    let _ = writeln!(
        out,
        "condition (a): {} ([Delta(i):S(i)] = {})",
        if r.condition_a { "ok" } else { "FAILED" },
        csv(&r.delta_simple_multiplicity)
    );
    if r.filtration.ok {
        let rows = r
            .filtration
            .multiplicities
            .as_ref()
            .expect("present when ok");
        let rows: Vec<String> = rows.iter().map(|m| dims(m)).collect();
        let _ = writeln!(
            out,
            "Delta-filtration: ok; [P(i):Delta(k)] rows {}",
            rows.join(" ")
        );
    } else if let Some(f) = &r.filtration.failure {
        let _ = writeln!(
            out,
            "Delta-filtration: FAILED at P({}), position {} (vertex {}): layer {} != {} x Delta = {}",
            f.projective,
            f.position,
            f.layer_vertex,
            dims(&f.layer_dims),
            f.multiplicity,
            dims(&f.standard_dims)
        );
    } else {
        let _ = writeln!(
            out,
            "Delta-filtration: FAILED (condition (a) already fails)"
        );
    }
    match r
        .heredity
        .steps
        .iter()
        .find(|s| !s.idempotent_condition || !s.projectivity_condition)
    {
        None => {
            let _ = writeln!(
                out,
                "heredity chain: ok ({} stages)",
                r.heredity.steps.len()
            );
        }
        Some(s) => {
            let _ = writeln!(
                out,
                "heredity chain: FAILED at position {} (vertex {}): {}",
                s.position,
                s.vertex,
                if s.idempotent_condition {
                    "trace ideal not projective"
                } else {
                    "e rad e != 0"
                }
            );
        }
    }
    for (i, c) in r.k0_coefficients.iter().enumerate() {
        match c {
            Some(c) => {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(
                    out,
                    "K0: [P({})] = ({}) in the Delta-basis",
                    i + 1,
                    parts.join(",")
                );
            }
            None => {
                let _ = writeln!(out, "K0: [P({})] has no integral Delta-expansion", i + 1);
            }
        }
    }
    let _ = writeln!(
        out,
        "verdict: {}",
        if r.quasi_hereditary {
            "quasi-hereditary"
        } else {
            "not quasi-hereditary"
        }
    );
    out
}

fn render_standard(r: &StandardReport) -> String {
    let mut out = String::new();
    header(&mut out, &r.algebra);
    let _ = writeln!(out, "order: {}", csv(&r.order));
    for m in &r.standard {
        let _ = writeln!(
            out,
            "Delta({}) = {}  dim {}",
            m.vertex,
            dims(&m.dims),
            m.total
        );
    }
    for m in &r.costandard {
        let _ = writeln!(
            out,
            "Nabla({}) = {}  dim {}",
            m.vertex,
            dims(&m.dims),
            m.total
        );
    }
    out
}

fn render_biquiver(r: &BiquiverReport) -> String {
    let mut out = String::new();
    header(&mut out, &r.algebra);
    let _ = writeln!(
        out,
        "order: {} (vertex by position: {})",
        csv(&r.order),
        csv(&r.vertex_by_position)
    );
    for (p, v) in r.vertex_by_position.iter().enumerate() {
        let _ = writeln!(
            out,
            "pos {}: Delta({}) {}",
            p + 1,
            v,
            dims(&r.standard_dims_by_position[p])
        );
    }
    for nb in &r.neighbors {
        let side = match (nb.twistable, nb.standard_side, nb.costandard_side) {
            (false, _, _) => "not twistable",
            (true, true, true) => "twistable (both sides)",
            (true, true, false) => "twistable (standard side)",
            _ => "twistable (costandard side)",
        };
        let _ = writeln!(
            out,
            "pair {}-{}: Hom {}, Ext {}, coHom {}, coExt {}; {}",
            nb.position,
            nb.position + 1,
            nb.hom,
            nb.ext,
            nb.cohom,
            nb.coext,
            side
        );
    }
    let set = |v: &[usize]| format!("{{{}}}", csv(v));
    let _ = writeln!(
        out,
        "solid (Ext != 0): {}  dotted (Hom != 0): {}",
        set(&r.solid),
        set(&r.dotted)
    );
    out
}

fn render_enumerate(r: &EnumerateReport) -> String {
    let mut out = String::new();
    header(&mut out, &r.algebra);
    let _ = writeln!(
        out,
        "{} quasi-hereditary orders (strategy {}):",
        r.count, r.strategy
    );
    for o in &r.orders {
        let _ = writeln!(out, "{}", csv(o));
    }
    out
}

fn render_twist_graph(r: &TwistGraphReport) -> String {
    let mut out = String::new();
    header(&mut out, &r.algebra);
    let _ = writeln!(
        out,
        "{} nodes, {} edges (strategy {})",
        r.node_count, r.edge_count, r.strategy
    );
    for n in &r.nodes {
        let _ = writeln!(out, "node {}", csv(n));
    }
    for e in &r.edges {
        let _ = writeln!(
            out,
            "{} -- {} at position {}",
            csv(&e.from),
            csv(&e.to),
            e.position
        );
    }
    out
}

fn render_connect(r: &ConnectReport) -> String {
    let mut out = String::new();
    header(&mut out, &r.algebra);
    let _ = writeln!(out, "from {} to {}", csv(&r.from), csv(&r.to));
    let _ = writeln!(
        out,
        "word: {} (length {}, inversion distance {}, {}, {}, method {})",
        csv(&r.word),
        r.length,
        r.inversion_distance,
        if r.minimal { "minimal" } else { "not minimal" },
        if r.certified {
            "certified"
        } else {
            "NOT certified"
        },
        r.method
    );
    let steps: Vec<String> = r.intermediates.iter().map(|o| csv(o)).collect();
    let _ = writeln!(out, "path: {}", steps.join(" -> "));
    out
}

fn render_verify(r: &VerifyReport) -> String {
    let mut out = String::new();
    header(&mut out, &r.algebra);
    let _ = writeln!(
        out,
        "{} orders, {} ordered pairs: {}, {}, max word length {}, {} bfs fallbacks",
        r.orders,
        r.pairs,
        if r.all_certified {
            "all certified"
        } else {
            "NOT all certified"
        },
        if r.all_minimal {
            "all words minimal"
        } else {
            "NOT all words minimal"
        },
        r.max_word_len,
        r.fallbacks
    );
    let _ = writeln!(
        out,
        "verdict: {}",
        if r.all_certified {
            "connected by certified twists"
        } else {
            "certification incomplete"
        }
    );
    out
}
