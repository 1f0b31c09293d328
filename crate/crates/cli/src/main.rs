use std::collections::HashMap;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use interlace_core::euler::{euler_circuit_count_best, transposition_orbit};
use interlace_core::verify::enumerate::{GraphEnumeration, ENUMERATION_LIMIT};
use interlace_core::verify::{
    run_conjecture_suite, run_extremal_suite, run_identity_suite, VerificationReport,
};
use interlace_core::{
    circuit_partition_polynomial, digraph_from_word, martin_polynomial, parse_edge_list,
    parse_graph6, to_graph6, DoubleOccurrenceWord, Graph, IntPolynomial, InterlaceSolver,
};
use serde_json::{json, Value};

/// Exhaustive work above this order needs `--force`.
const DEFAULT_ORDER_LIMIT: usize = 7;

#[derive(Parser)]
#[command(name = "interlace", version, about = "Interlace polynomials, Euler circuits and circuit partitions")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Interlace polynomial of each graph in the input.
    Poly {
        /// Input file; standard input if absent or `-`.
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Euler circuits and circuit partitions of the digraph traced by each
    /// double occurrence word in the input (one word per line).
    Euler {
        #[arg(value_enum)]
        query: EulerQuery,
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = WordFormat::Word)]
        format: WordFormat,
    },
    /// Every labeled graph of one order, with its polynomial.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Only connected graphs.
        #[arg(long)]
        connected: bool,
        /// One representative per distinct polynomial, with a count.
        #[arg(long)]
        distinct: bool,
        /// Allow orders above 7.
        #[arg(long)]
        force: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        opts: SuiteOptions,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    /// `n m` header, then one `u v` pair per line.
    Edgelist,
    /// One graph6 string per line.
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum WordFormat {
    /// Whitespace-separated symbols.
    Word,
}

#[derive(Clone, Copy, ValueEnum)]
enum EulerQuery {
    Count,
    Partitions,
    Martin,
    Orbit,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Identities,
    Extremal,
    Conjectures,
}

#[derive(Args)]
struct SuiteOptions {
    /// Largest order enumerated exhaustively.
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    /// Random instances (default 1000 for identities, 5000 for conjectures).
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Allow n-max above 7.
    #[arg(long)]
    force: bool,
}

/// Failure modes of a command: bad input or arguments, or a suite that
/// found violations.
enum Failure {
    Usage(String),
    Violations,
}

type Outcome = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_input(file: &Option<PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match file {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?
        }
        _ => {
            io::stdin().read_to_string(&mut text).map_err(usage)?;
        }
    }
    Ok(text)
}

fn check_order(n: usize, force: bool) -> Outcome {
    if n > ENUMERATION_LIMIT {
        return Err(usage(format!("order {n} is beyond the enumeration limit {ENUMERATION_LIMIT}")));
    }
    if n > DEFAULT_ORDER_LIMIT && !force {
        return Err(usage(format!("order {n} is above {DEFAULT_ORDER_LIMIT}; pass --force to run it")));
    }
    Ok(())
}

fn coefficients(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

fn emit(out: &mut impl Write, line: impl std::fmt::Display) -> Outcome {
    writeln!(out, "{line}").map_err(usage)
}

fn graphs(text: &str, format: GraphFormat) -> Result<Vec<Graph>, Failure> {
    match format {
        GraphFormat::Edgelist => Ok(vec![parse_edge_list(text).map_err(usage)?]),
        GraphFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| parse_graph6(l).map_err(|e| usage(format!("line {}: {e}", i + 1))))
            .collect(),
    }
}

fn poly(file: &Option<PathBuf>, format: GraphFormat, json: bool, out: &mut impl Write) -> Outcome {
    let mut solver = InterlaceSolver::new();
    for g in graphs(&read_input(file)?, format)? {
        let q = solver.polynomial(&g);
        if json {
            let v = json!({
                "graph6": to_graph6(&g),
                "order": g.order(),
                "size": g.size(),
                "polynomial": q.to_string(),
                "coefficients": coefficients(&q),
            });
            emit(out, v)?;
        } else {
            emit(out, q)?;
        }
    }
    Ok(())
}

fn euler(query: EulerQuery, file: &Option<PathBuf>, json: bool, out: &mut impl Write) -> Outcome {
    let text = read_input(file)?;
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .collect();
    if lines.is_empty() {
        return Err(usage("no word in the input"));
    }
    for line in lines {
        let (w, labels) = DoubleOccurrenceWord::parse(line).map_err(usage)?;
        let d = digraph_from_word(&w);
        let word = w.render(&labels);
        let (text, value) = match query {
            EulerQuery::Count => {
                let c = euler_circuit_count_best(&d).map_err(usage)?;
                (c.to_string(), json!({ "word": word, "euler_circuits": c.to_string() }))
            }
            EulerQuery::Partitions => {
                let r = circuit_partition_polynomial(&d).map_err(usage)?;
                let v = json!({ "word": word, "polynomial": r.to_string(), "coefficients": coefficients(&r) });
                (r.to_string(), v)
            }
            EulerQuery::Martin => {
                let m = martin_polynomial(&d).map_err(usage)?;
                let v = json!({ "word": word, "polynomial": m.to_string(), "coefficients": coefficients(&m) });
                (m.to_string(), v)
            }
            EulerQuery::Orbit => {
                let orbit = transposition_orbit(&w).map_err(usage)?;
                let best = euler_circuit_count_best(&d).map_err(usage)?;
                let circuits: Vec<String> = orbit.iter().map(|c| c.word(&d).render(&labels)).collect();
                let mut text = format!("orbit size {} (Euler circuits {best})", orbit.len());
                for c in &circuits {
                    text.push_str("\n  ");
                    text.push_str(c);
                }
                let v = json!({
                    "word": word,
                    "orbit_size": orbit.len(),
                    "euler_circuits": best.to_string(),
                    "circuits": circuits,
                });
                (text, v)
            }
        };
        if json {
            emit(out, value)?;
        } else {
            emit(out, text)?;
        }
    }
    Ok(())
}

fn enumerate(n: usize, connected: bool, distinct: bool, force: bool, json: bool, out: &mut impl Write) -> Outcome {
    check_order(n, force)?;
    let mut solver = InterlaceSolver::new();
    let graphs = GraphEnumeration::new(n, connected).map_err(usage)?;
    if !distinct {
        for g in graphs {
            let q = solver.polynomial(&g);
            if json {
                emit(out, json!({ "graph6": to_graph6(&g), "polynomial": q.to_string() }))?;
            } else {
                emit(out, format!("{} {q}", to_graph6(&g)))?;
            }
        }
        return Ok(());
    }
    let mut index: HashMap<IntPolynomial, usize> = HashMap::new();
    let mut classes: Vec<(String, IntPolynomial, u64)> = Vec::new();
    for g in graphs {
        let q = solver.polynomial(&g);
        let i = *index.entry(q.clone()).or_insert_with(|| {
            classes.push((to_graph6(&g), q, 0));
            classes.len() - 1
        });
        classes[i].2 += 1;
    }
    for (g6, q, count) in classes {
        if json {
            emit(out, json!({ "graph6": g6, "polynomial": q.to_string(), "count": count }))?;
        } else {
            emit(out, format!("{g6} {count} {q}"))?;
        }
    }
    Ok(())
}

fn print_report(r: &VerificationReport, extra: &[String], json: bool, out: &mut impl Write) -> Outcome {
    if json {
        emit(out, serde_json::to_string(r).map_err(usage)?)?;
    } else {
        emit(
            out,
            format!(
                "{}: n_max {}, seed {}, {} instances checked, {} violations, {} ms",
                r.suite,
                r.n_max,
                r.seed,
                r.checked,
                r.violations.len(),
                r.elapsed_ms
            ),
        )?;
        for line in extra {
            emit(out, line)?;
        }
        for v in r.violations.iter().take(20) {
            emit(out, format!("  {} {}", v.graph6, v.detail))?;
        }
        if r.violations.len() > 20 {
            emit(out, format!("  ... {} more", r.violations.len() - 20))?;
        }
    }
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Violations)
    }
}

fn verify(suite: Suite, o: &SuiteOptions, json: bool, out: &mut impl Write) -> Outcome {
    check_order(o.n_max, o.force)?;
    match suite {
        Suite::Identities => {
            let r = run_identity_suite(o.n_max, o.samples.unwrap_or(1000), o.seed);
            print_report(&r, &[], json, out)
        }
        Suite::Extremal => print_report(&run_extremal_suite(o.n_max), &[], json, out),
        Suite::Conjectures => {
            let c = run_conjecture_suite(o.n_max, o.samples.unwrap_or(5000), o.seed);
            let mut report = c.report.clone();
            if !c.k13_flagged {
                report.violations.push(interlace_core::Violation {
                    graph6: to_graph6(&Graph::star(3).expect("small")),
                    detail: "K_1,3 was not found to be non-log-concave".into(),
                });
            }
            let extra = [
                format!("distinct polynomials and samples analysed: {}", c.distinct_polynomials),
                format!("internal zeros: {}", c.internal_zeros),
                format!("not log-concave: {} (K_1,3 among them: {})", c.log_concavity_failures, c.k13_flagged),
            ];
            print_report(&report, &extra, json, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Poly { file, format } => poly(file, *format, cli.json, &mut out),
        Command::Euler { query, file, format: WordFormat::Word } => euler(*query, file, cli.json, &mut out),
        Command::Enumerate { n, connected, distinct, force } => {
            enumerate(*n, *connected, *distinct, *force, cli.json, &mut out)
        }
        Command::Verify { suite, opts } => verify(*suite, opts, cli.json, &mut out),
    };
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(2),
        Err(Failure::Violations) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("interlace: {msg}");
            ExitCode::from(2)
        }
    }
}
