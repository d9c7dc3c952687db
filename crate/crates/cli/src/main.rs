use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use indcx::complex::independence_complex;
use indcx::homology::{BettiTable, Coefficients};
use indcx::homotopy::{predict, reduce, Outcome, DEFAULT_BUDGET};
use indcx::morse::{element_matching, product_order};
use indcx::verify::{graph_homology, run_suites, Suite, SuiteOptions, Verdict};
use indcx::{Family, Graph, Label, Limits};
use serde_json::json;

const EXIT_MISMATCH: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_USAGE: u8 = 3;

/// Independence complexes of graphs: homology, Morse matchings and
/// homotopy types, checked against closed-form predictions.
#[derive(Parser)]
#[command(name = "indcx", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Refuse to enumerate more than N faces (default: $INDCX_MAX_FACES or 50000000).
    #[arg(long, global = true, value_name = "N")]
    budget_faces: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family's graph as an edge list or JSON.
    Gen(GenArgs),
    /// Reduced Betti numbers of Ind(G).
    Betti(BettiArgs),
    /// Element matching on Ind(G): critical cells and acyclicity.
    Morse(MorseArgs),
    /// Run the rule-based homotopy reducer and print its trace.
    Reduce(ReduceArgs),
    /// Run verification suites (a suite name or `all`).
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    /// Pick by file extension or content.
    Auto,
    EdgeList,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Coeff {
    Z2,
    Int,
}

impl From<Coeff> for Coefficients {
    fn from(c: Coeff) -> Coefficients {
        match c {
            Coeff::Z2 => Coefficients::Mod2,
            Coeff::Int => Coefficients::Integer,
        }
    }
}

#[derive(Args)]
struct Target {
    /// A family and its parameters (e.g. `mycielskian 3 4`), or `file PATH`.
    #[arg(required = true, num_args = 1.., value_name = "SPEC")]
    target: Vec<String>,

    /// Format of graph files, for reading and writing.
    #[arg(long, value_enum, default_value = "auto")]
    graph_format: GraphFormat,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    target: Target,

    /// Write here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BettiArgs {
    #[command(flatten)]
    target: Target,

    /// Only compute dimensions LO..=HI.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
    window: Option<Vec<usize>>,

    /// Full range even for families that default to a window.
    #[arg(long, conflicts_with = "window")]
    full: bool,

    #[arg(long, value_enum, default_value = "z2")]
    coeff: Coeff,

    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct MorseArgs {
    #[command(flatten)]
    target: Target,

    /// Vertex order, whitespace separated, e.g. "3 1 2" or "(1,1) (1,2)".
    /// Defaults to the product order for `product`, else label order.
    #[arg(long)]
    order: Option<String>,

    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    target: Target,

    /// Maximum number of rule applications.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,

    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    suite: String,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Random instances per randomized suite.
    #[arg(long)]
    count: Option<usize>,

    /// `n` values for mycielskian and kn_lr, e.g. `3,4` or `2..5`.
    #[arg(long, value_parser = parse_values)]
    n: Option<Values>,

    /// `r` values for mycielskian and kn_lr, e.g. `2..7`.
    #[arg(long, value_parser = parse_values)]
    r: Option<Values>,

    #[arg(long, value_enum, default_value = "z2")]
    coeff: Coeff,

    /// Omit wall-clock times so identical runs give identical output.
    #[arg(long)]
    deterministic: bool,

    /// Let conjecture mismatches fail the run.
    #[arg(long)]
    strict_conjectures: bool,

    #[arg(long, value_enum, default_value = "table")]
    format: Format,

    /// Also write the JSON report here.
    #[arg(long, value_name = "PATH")]
    json_out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq)]
struct Values(Vec<usize>);

/// `2..7` (inclusive), `3,5,8` or a single number.
fn parse_values(s: &str) -> Result<Values, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad number {t:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if a > b {
            return Err(format!("empty range {s}"));
        }
        return Ok(Values((a..=b).collect()));
    }
    s.split(',').map(num).collect::<Result<_, _>>().map(Values)
}

/// Splits at whitespace outside parentheses, so `(1, 2)` stays whole.
fn split_labels(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, None);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if let Some(st) = start.take() {
                out.push(&s[st..i]);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push(&s[st..]);
    }
    out
}

fn read_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let json = match format {
        GraphFormat::Json => true,
        GraphFormat::EdgeList => false,
        GraphFormat::Auto => {
            path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{')
        }
    };
    Ok(if json { Graph::from_json(&text)? } else { Graph::from_edge_list(&text)? })
}

fn load(t: &Target) -> Result<(Graph, Option<Family>)> {
    if t.target[0] == "file" {
        let [_, path] = t.target.as_slice() else { bail!("expected `file PATH`") };
        return Ok((read_graph(Path::new(path), t.graph_format)?, None));
    }
    let family = Family::from_tokens(&t.target)?;
    Ok((family.graph()?, Some(family)))
}

fn describe(t: &Target) -> String {
    t.target.join(" ")
}

fn betti_table_text(table: &BettiTable) -> String {
    let mut out = String::from("dim  betti  torsion\n");
    for (d, b) in &table.betti {
        let tors = table.torsion.get(d).map(|t| t.join(" ")).unwrap_or_default();
        writeln!(out, "{d:>3}  {b:>5}  {tors}").unwrap();
    }
    out
}

fn cmd_gen(args: &GenArgs) -> Result<u8> {
    let (g, _) = load(&args.target)?;
    let json = matches!(args.target.graph_format, GraphFormat::Json)
        || (matches!(args.target.graph_format, GraphFormat::Auto)
            && args.output.as_ref().is_some_and(|p| p.extension().is_some_and(|e| e == "json")));
    let text = if json { g.to_json() + "\n" } else { g.to_edge_list() };
    match &args.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_betti(args: &BettiArgs, limits: &Limits) -> Result<u8> {
    let (g, family) = load(&args.target)?;
    let window = match (&args.window, args.full) {
        (Some(w), _) => {
            if w[0] > w[1] {
                bail!("empty window {}..{}", w[0], w[1]);
            }
            Some((w[0], w[1]))
        }
        (None, true) => None,
        (None, false) => family.and_then(|f| f.default_window()),
    };
    let (table, faces) = graph_homology(&g, window, args.coeff.into(), limits)?;
    match args.format {
        Format::Json => println!("{}", table.to_json()),
        Format::Csv => print!("{}", table.to_csv()),
        Format::Table => {
            println!("{}: {} vertices, {} edges, {faces} faces", describe(&args.target), g.vertex_count(), g.edge_count());
            if let Some((lo, hi)) = window {
                println!("window: dimensions {lo}..{hi}");
            }
            print!("{}", betti_table_text(&table));
            if let Some(p) = family.map(|f| predict(&f)).transpose().ok().flatten() {
                let verdict = if table.agrees_with(&p.homotopy) { "agrees" } else { "DISAGREES" };
                println!("predicted {} ({:?}): {verdict}", p.homotopy, p.status);
            }
        }
    }
    Ok(0)
}

fn cmd_morse(args: &MorseArgs, limits: &Limits) -> Result<u8> {
    let (g, family) = load(&args.target)?;
    let order: Vec<Label> = match (&args.order, family) {
        (Some(s), _) => split_labels(s).into_iter().map(str::parse).collect::<indcx::Result<_>>()?,
        (None, Some(Family::Product { m, n })) => product_order(m, n),
        (None, _) => g.labels().to_vec(),
    };
    let k = independence_complex(&g, None, limits)?;
    let matching = element_matching(&k, &order)?;
    let acyclicity = matching.verify_acyclic(&k)?;
    let conclusion = if acyclicity.acyclic { matching.wedge_conclusion(&k)? } else { None };
    match args.format {
        Format::Json => {
            let report = json!({
                "graph": describe(&args.target),
                "faces": k.face_count(),
                "acyclic": acyclicity.acyclic,
                "cycle_witness": acyclicity.witness.as_ref().map(|w| {
                    w.iter().map(|f| f.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>()
                }),
                "empty_face_matched": matching.empty_face_matched(),
                "conclusion": conclusion.as_ref().map(ToString::to_string),
                "matching": matching.to_file(),
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Format::Csv => {
            println!("dim,critical");
            for (d, c) in matching.critical_counts() {
                println!("{d},{c}");
            }
        }
        Format::Table => {
            println!("{}: {} faces, {} matched pairs", describe(&args.target), k.face_count(), matching.pairs().len());
            println!("acyclic: {}", acyclicity.acyclic);
            if let Some(w) = &acyclicity.witness {
                let cycle: Vec<String> = w.iter().map(|f| fmt_face(f)).collect();
                println!("cycle: {}", cycle.join(" -> "));
            }
            println!("empty face matched: {}", matching.empty_face_matched());
            println!("critical cells by dimension: {:?}", matching.critical_counts());
            for f in matching.critical_labels() {
                println!("  {}", fmt_face(&f));
            }
            if let Some(c) = conclusion {
                println!("homotopy type: {c}");
            }
        }
    }
    Ok(0)
}

fn fmt_face(f: &[Label]) -> String {
    let parts: Vec<String> = f.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn cmd_reduce(args: &ReduceArgs) -> Result<u8> {
    let (g, _) = load(&args.target)?;
    let r = reduce(&g, args.budget);
    let (result, residual) = match &r.outcome {
        Outcome::Type(t) => (t.to_string(), None),
        Outcome::Stuck(h) => ("stuck".to_string(), Some(h)),
    };
    match args.format {
        Format::Json => {
            let report = json!({
                "graph": describe(&args.target),
                "result": result,
                "stuck": residual.is_some(),
                "residual": residual.map(|h| serde_json::from_str::<serde_json::Value>(&h.to_json()).expect("graph JSON")),
                "trace": r.trace,
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Format::Csv => {
            println!("depth,step");
            for s in &r.trace {
                println!("{},\"{}\"", s.depth, serde_json::to_string(&s.rule)?.replace('"', "'"));
            }
        }
        Format::Table => {
            for s in &r.trace {
                println!("{}{}", "  ".repeat(s.depth), serde_json::to_string(&s.rule)?);
            }
            match residual {
                None => println!("result: {result}"),
                Some(h) => println!("result: stuck on {} vertices, {} edges", h.vertex_count(), h.edge_count()),
            }
        }
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs, limits: &Limits) -> Result<u8> {
    let suites: Vec<Suite> = if args.suite == "all" { Suite::ALL.to_vec() } else { vec![args.suite.parse()?] };
    let opts = SuiteOptions {
        seed: args.seed,
        count: args.count,
        coefficients: args.coeff.into(),
        limits: *limits,
        deterministic: args.deterministic,
        strict_conjectures: args.strict_conjectures,
        n_values: args.n.clone().map(|v| v.0),
        r_values: args.r.clone().map(|v| v.0),
    };
    let report = run_suites(&suites, &opts);
    if let Some(path) = &args.json_out {
        std::fs::write(path, report.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    match args.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Table => print!("{}", report.to_table()),
    }
    Ok(match report.verdict() {
        Verdict::Pass => 0,
        Verdict::Mismatch => EXIT_MISMATCH,
        Verdict::ResourceLimited => EXIT_RESOURCE,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let limits = cli.budget_faces.map_or_else(Limits::from_env, Limits::new);
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Betti(a) => cmd_betti(a, &limits),
        Command::Morse(a) => cmd_morse(a, &limits),
        Command::Reduce(a) => cmd_reduce(a),
        Command::Verify(a) => cmd_verify(a, &limits),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let resource = e.downcast_ref::<indcx::Error>().is_some_and(indcx::Error::is_resource);
            ExitCode::from(if resource { EXIT_RESOURCE } else { EXIT_USAGE })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_lists() {
        assert_eq!(parse_values("2..5").unwrap(), Values(vec![2, 3, 4, 5]));
        assert_eq!(parse_values("2..=3").unwrap(), Values(vec![2, 3]));
        assert_eq!(parse_values("3,4").unwrap(), Values(vec![3, 4]));
        assert!(parse_values("5..2").is_err());
        assert!(parse_values("x").is_err());
    }

    #[test]
    fn labels_split_outside_parentheses() {
        assert_eq!(split_labels(" (1, 1) (2,1)  3 "), vec!["(1, 1)", "(2,1)", "3"]);
        assert!(split_labels("   ").is_empty());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
