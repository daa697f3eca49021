//! `operad-hopf`: coproducts, antipodes, series and divisibility posets from
//! the command line, plus the property-check suites.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use operad_hopf::algebra::render::{poly_json, poly_latex, poly_text, tensor_json, tensor_latex, tensor_text};
use operad_hopf::algebra::{Polynomial, TypeKey};
use operad_hopf::antipode::AntipodeRegistry;
use operad_hopf::hopf::{HopfContext, Weight};
use operad_hopf::operads::{Assembly, Operad, OperadRegistry};
use operad_hopf::posets::{build_poset, POSET_CAP};
use operad_hopf::series::m_series;
use operad_hopf::structures::{
    format_graph, format_tree, parse_graph, parse_tree, pretty_name, Caps, Species, Structure, MAX_N_ENV,
};
use operad_hopf::verify::{run_suite, Suite, VerifyOptions};
use operad_hopf::Error;

#[derive(Parser)]
#[command(name = "operad-hopf", version, about = "Exact computations in the natural Hopf algebra of a set operad")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one quantity for one structure.
    Compute {
        #[command(subcommand)]
        what: Compute,
    },
    /// Run a property-check suite.
    Verify(VerifyArgs),
    /// List the operads and antipode methods.
    List,
}

#[derive(Subcommand)]
enum Compute {
    /// Δ of the type of a structure.
    Coproduct(StructArgs),
    /// S of the type of a structure.
    Antipode {
        #[command(flatten)]
        input: StructArgs,
        /// Antipode method, by registry name.
        #[arg(long, default_value = "recursive")]
        method: String,
    },
    /// The generating series M^ω(x), as an exponential series.
    Series {
        #[arg(long)]
        operad: String,
        /// Truncation order.
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[arg(long, value_enum, default_value_t = WeightArg::Identity)]
        weight: WeightArg,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// The divisibility poset on assemblies over {1..n}.
    Poset {
        #[arg(long)]
        operad: String,
        #[arg(long)]
        n: usize,
        /// Emit Graphviz for the Hasse diagram.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Args)]
struct StructArgs {
    #[arg(long)]
    operad: String,
    /// Graph text, e.g. "n=3; 1 2; 2 3" (add "p=1" for a pointed graph).
    #[arg(long, group = "input")]
    graph: Option<String>,
    /// Tree text, e.g. "1(2,3(4))".
    #[arg(long, group = "input")]
    tree: Option<String>,
    /// Size of a set, or of a pointed set pointed at 1.
    #[arg(long, group = "input")]
    n: Option<usize>,
    /// Size cap; overrides OPERAD_HOPF_MAX_N.
    #[arg(long)]
    max_n: Option<usize>,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args)]
struct FormatArgs {
    #[arg(long, conflicts_with = "latex")]
    json: bool,
    #[arg(long)]
    latex: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightArg {
    Identity,
    Antipode,
    Counit,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = parse_suite)]
    suite: Suite,
    #[arg(long)]
    max_size: Option<usize>,
    /// Restrict to one operad.
    #[arg(long)]
    operad: Option<String>,
    #[arg(long, default_value_t = 6)]
    order: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).map_err(|e| e.to_string())
}

/// Caps with the usual precedence: flag, then environment, then `fallback`.
fn caps(max_n: Option<usize>, fallback: Caps) -> Caps {
    match max_n {
        Some(n) => Caps::uniform(n),
        None if std::env::var_os(MAX_N_ENV).is_some() => Caps::from_env(),
        None => fallback,
    }
}

/// Conservative defaults for interactive work; factorization counts grow
/// super-exponentially.
const INTERACTIVE_CAPS: Caps = Caps { general: 6, graphs: 4 };

fn namer(k: &TypeKey) -> String {
    pretty_name(k)
}

fn structure(op: &dyn Operad, args: &StructArgs) -> operad_hopf::Result<Structure> {
    let species = op.species();
    let bad = |what: &str| Error::Parse(format!("operad {} takes {what}", op.name()));
    match (&args.graph, &args.tree, args.n) {
        (Some(g), _, _) => {
            let s = parse_graph(g)?;
            if s.species() != species {
                return Err(bad(match species {
                    Species::Graph => "a graph without a point",
                    Species::PointedGraph => "a pointed graph (add p=v)",
                    _ => "no graph",
                }));
            }
            Ok(s)
        }
        (_, Some(t), _) => match species {
            Species::Tree(kind) => parse_tree(t, kind),
            _ => Err(bad("no tree")),
        },
        (_, _, Some(n)) if n > 0 => match species {
            Species::Set => Ok(Structure::set(1..=n as u32)),
            Species::PointedSet => Ok(Structure::pointed_set(1..=n as u32, 1)),
            _ => Err(bad("no --n; pass --graph or --tree")),
        },
        _ => Err(Error::Parse("give one of --graph, --tree or a positive --n".into())),
    }
}

fn piece_text(s: &Structure) -> String {
    match s {
        Structure::Set(ls) => format!("{{{}}}", ls.iter().map(u32::to_string).collect::<Vec<_>>().join(",")),
        Structure::PointedSet(ls, p) => {
            let items: Vec<String> = ls.iter().map(|u| if u == p { format!("{u}*") } else { u.to_string() }).collect();
            format!("{{{}}}", items.join(","))
        }
        Structure::Tree(_, t) => format_tree(t),
        g => format!("[{}]", format_graph(g).unwrap_or_default()),
    }
}

fn assembly_text(a: &Assembly) -> String {
    a.pieces().iter().map(piece_text).collect::<Vec<_>>().join(" | ")
}

fn emit(
    format: &FormatArgs,
    json: impl FnOnce() -> Value,
    latex: impl FnOnce() -> String,
    text: impl FnOnce() -> String,
) {
    if format.json {
        println!("{}", serde_json::to_string_pretty(&json()).expect("json values serialize"));
    } else if format.latex {
        println!("{}", latex());
    } else {
        println!("{}", text());
    }
}

fn compute(what: Compute) -> operad_hopf::Result<()> {
    let operads = OperadRegistry::standard();
    match what {
        Compute::Coproduct(args) => {
            let ctx = HopfContext::new(operads.get(&args.operad)?, caps(args.max_n, INTERACTIVE_CAPS));
            let m = structure(ctx.operad(), &args)?;
            let key = ctx.key_of(&m)?;
            let d = ctx.coproduct(&key)?;
            emit(
                &args.format,
                || json!({ "operad": args.operad, "type": key.wire(), "coproduct": tensor_json(&d) }),
                || tensor_latex(&d, &namer),
                || tensor_text(&d, &namer),
            );
        }
        Compute::Antipode { input, method } => {
            let ctx = HopfContext::new(operads.get(&input.operad)?, caps(input.max_n, INTERACTIVE_CAPS));
            let method = AntipodeRegistry::standard().get(&method)?;
            if !method.supports(&ctx) {
                return Err(Error::Unsupported(format!("method {} on operad {}", method.name(), input.operad)));
            }
            let m = structure(ctx.operad(), &input)?;
            let key = ctx.key_of(&m)?;
            let s = method.antipode(&ctx, &key)?;
            emit(
                &input.format,
                || json!({ "operad": input.operad, "method": method.name(), "type": key.wire(), "antipode": poly_json(&s) }),
                || poly_latex(&s, &namer),
                || poly_text(&s, &namer),
            );
        }
        Compute::Series { operad, order, weight, format } => {
            let ctx = HopfContext::new(operads.get(&operad)?, caps(None, Caps::uniform(order)));
            let w = match weight {
                WeightArg::Identity => Weight::identity(),
                WeightArg::Antipode => Weight::antipode(Arc::clone(&ctx)),
                WeightArg::Counit => Weight::counit(),
            };
            let series = m_series(&ctx, &w, order)?;
            emit(
                &format,
                || json!({ "operad": operad, "series": series.json() }),
                || series.latex(&namer),
                || series.text(&namer),
            );
        }
        Compute::Poset { operad, n, dot, json, max_n } => {
            let op = operads.get(&operad)?;
            if n == 0 {
                return Err(Error::Range("the ground set needs at least one label".into()));
            }
            let labels: Vec<u32> = (1..=n as u32).collect();
            let poset = build_poset(op.as_ref(), &labels, max_n.unwrap_or(POSET_CAP))?;
            if let Some(v) = poset.partial_order_violation() {
                return Err(Error::InvalidStructure(v));
            }
            if dot {
                print!("{}", poset.to_dot(&assembly_text));
            } else if json {
                let elements: Vec<String> = poset.ground().iter().map(assembly_text).collect();
                let v = json!({ "operad": operad, "n": n, "elements": elements, "hasse": poset.hasse_edges() });
                println!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
            } else {
                println!("{} assemblies, {} covering relations", poset.len(), poset.hasse_edges().len());
                for (i, j) in poset.hasse_edges() {
                    let q = poset
                        .interval_type(i, j)
                        .map(|m| poly_text(&Polynomial::monomial(m), &namer))
                        .unwrap_or_default();
                    println!(
                        "{}  <  {}    [{q}]",
                        assembly_text(&poset.ground()[i]),
                        assembly_text(&poset.ground()[j])
                    );
                }
            }
        }
    }
    Ok(())
}

fn list() {
    println!("operads:");
    let operads = OperadRegistry::standard();
    for name in operads.names() {
        let op = operads.get(name).expect("registered name");
        println!("  {name:<10} {}", op.description());
    }
    println!("antipode methods:");
    let methods = AntipodeRegistry::standard();
    for name in methods.names() {
        let m = methods.get(name).expect("registered name");
        println!("  {name:<10} {}", m.description());
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SizeCapExceeded { .. } => 3,
        Error::Parse(_) | Error::UnknownName(_) | Error::SpeciesMismatch { .. } | Error::Unsupported(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { what } => compute(what),
        Command::List => {
            list();
            Ok(())
        }
        Command::Verify(args) => {
            let opts =
                VerifyOptions { max_size: args.max_size, operad: args.operad, order: args.order, seed: args.seed };
            match run_suite(args.suite, &opts) {
                Ok(report) => {
                    if args.json {
                        println!("{}", report.json());
                    } else {
                        println!("{report}");
                    }
                    if !report.passed {
                        if let Some(c) = report.first_failure() {
                            let why = c.counterexample.as_deref().unwrap_or("no detail");
                            eprintln!("first counterexample ({}): {why}", c.name);
                        }
                        return ExitCode::from(1);
                    }
                    Ok(())
                }
                Err(e) => Err(e),
            }
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
