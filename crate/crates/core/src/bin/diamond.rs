//! `diamond`: build graded graphs, compute their path groups, survey Young
//! diagrams and check Young's orthogonal form.
//!
//! Exit codes: 0 success, 1 survey mismatch, 2 usage or parse error,
//! 3 size budget exceeded.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use diamond_core::deform::{
    check_relations, closure_probe, combinatorial_limit_check, deformed_generators, write_matrix_csv,
    DeformationParams, ProbeOptions, ProbeOutcome, YoungBasis,
};
use diamond_core::group::{minimal_block_system, orbits};
use diamond_core::limits::ConfigError;
use diamond_core::survey::{survey, write_csv, ExpectedRule, Mismatch};
use diamond_core::{
    all_generators, boolean_lattice, classify_group, count_paths, ideal_lattice, pascal_interval, young_interval,
    Error, FinitePoset, GradedGraph, Limits, PathTable, YoungDiagram,
};

#[derive(Parser)]
#[command(name = "diamond", version, about = "Path groups of diamond-shaped graded graphs")]
struct Cli {
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

/// Budgets: defaults, then `DIAMOND_BUDGET_*`, then the config file, then flags.
#[derive(Args)]
struct BudgetArgs {
    /// key = value budget file (keys: vertices, paths, poset_elements, yof_relations_n, yof_probe_n)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_name = "N")]
    max_vertices: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    max_paths: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    max_poset_elements: Option<usize>,
    /// Largest n for relation checks, limit checks and matrix export
    #[arg(long, global = true, value_name = "N")]
    yof_relations_n: Option<usize>,
    /// Largest n for closure probes
    #[arg(long, global = true, value_name = "N")]
    yof_probe_n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and export it as JSON or DOT
    Graph {
        family: Family,
        /// boolean: n; pascal: a,b[,c..]; young: parts; skew: lambda/mu; ideals: a<c,b<c; json: file
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the graph here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Order of the path group, with optional classification, transitivity and blocks
    Group {
        family: Family,
        spec: String,
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        transitivity: bool,
        #[arg(long)]
        blocks: bool,
    },
    /// Survey every Young diagram with at most n_max cells as CSV
    Table {
        n_max: u32,
        /// Worker threads; rows are emitted in the same order either way
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Young's orthogonal form and its deformations
    Yof {
        lambda: String,
        /// young, combinatorial or custom:ANGLE (radians)
        mode: String,
        #[arg(long)]
        relations: bool,
        /// Closure probe with this many elements at most
        #[arg(long, value_name = "MAX")]
        probe: Option<usize>,
        #[arg(long)]
        limit_check: bool,
        /// Write one sigma_<k>.csv per generator into this directory
        #[arg(long, value_name = "DIR")]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Boolean,
    Pascal,
    Young,
    Skew,
    Ideals,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{context}: {source}")]
    Io { context: String, source: io::Error },
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_budget() => 3,
            _ => 2,
        }
    }

    fn io(context: impl Into<String>) -> impl FnOnce(io::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Io { context, source }
    }
}

fn core<E: Into<Error>>(e: E) -> CliError {
    CliError::Core(e.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let limits = resolve_limits(&cli.budget)?;
    match cli.command {
        Command::Graph {
            family,
            spec,
            format,
            out,
        } => cmd_graph(family, &spec, format, out.as_deref(), &limits),
        Command::Group {
            family,
            spec,
            classify,
            transitivity,
            blocks,
        } => cmd_group(family, &spec, classify, transitivity, blocks, &limits),
        Command::Table { n_max, jobs, out } => cmd_table(n_max, jobs, out.as_deref(), &limits),
        Command::Yof {
            lambda,
            mode,
            relations,
            probe,
            limit_check,
            csv,
            tol,
        } => cmd_yof(
            &lambda,
            &mode,
            relations,
            probe,
            limit_check,
            csv.as_deref(),
            tol,
            &limits,
        ),
    }
}

fn resolve_limits(args: &BudgetArgs) -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    limits.apply_env();
    if let Some(path) = &args.config {
        limits.apply_config_file(path)?;
    }
    let flags = [
        (args.max_vertices, &mut limits.vertices),
        (args.max_paths, &mut limits.paths),
        (args.max_poset_elements, &mut limits.poset_elements),
        (args.yof_relations_n, &mut limits.yof_relations_n),
        (args.yof_probe_n, &mut limits.yof_probe_n),
    ];
    for (flag, slot) in flags {
        if let Some(v) = flag {
            *slot = v;
        }
    }
    Ok(limits)
}

fn parse_diagram(text: &str) -> Result<YoungDiagram, CliError> {
    YoungDiagram::parse(text).map_err(|e| CliError::Usage(format!("bad diagram {text:?}: {e}")))
}

fn parse_counts(text: &str) -> Result<Vec<u32>, CliError> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad integer {tok:?} in {text:?}")))
        })
        .collect()
}

/// A constructed graph; Young intervals from the empty diagram keep their shape.
struct Built {
    graph: GradedGraph,
    lambda: Option<YoungDiagram>,
}

fn build(family: Family, spec: &str, limits: &Limits) -> Result<Built, CliError> {
    let graph = match family {
        Family::Boolean => {
            let n = spec
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad integer {spec:?}")))?;
            boolean_lattice(n, limits).map_err(core)?
        }
        Family::Pascal => {
            let target = parse_counts(spec)?;
            if target.len() < 2 {
                return Err(CliError::Usage(format!(
                    "pascal target {spec:?} needs at least 2 coordinates"
                )));
            }
            pascal_interval(&target, limits).map_err(core)?
        }
        Family::Young => {
            let lambda = parse_diagram(spec)?;
            let graph = young_interval(&lambda, &YoungDiagram::empty(), limits).map_err(core)?;
            return Ok(Built {
                graph,
                lambda: Some(lambda),
            });
        }
        Family::Skew => {
            let (outer, inner) = spec
                .split_once('/')
                .ok_or_else(|| CliError::Usage(format!("skew shape {spec:?} must look like lambda/mu")))?;
            young_interval(&parse_diagram(outer)?, &parse_diagram(inner)?, limits).map_err(core)?
        }
        Family::Ideals => {
            let poset = FinitePoset::parse(spec).map_err(|e| CliError::Usage(e.to_string()))?;
            ideal_lattice(&poset, limits).map_err(core)?
        }
        Family::Json => {
            let text = fs::read_to_string(spec).map_err(CliError::io(format!("cannot read {spec}")))?;
            let graph = GradedGraph::from_json(&text).map_err(|e| CliError::Usage(format!("{spec}: {e}")))?;
            if graph.vertex_count() > limits.vertices {
                return Err(core(Error::Budget(format!(
                    "{} vertices exceed the budget of {}",
                    graph.vertex_count(),
                    limits.vertices
                ))));
            }
            graph
        }
    };
    Ok(Built { graph, lambda: None })
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(CliError::io(format!("cannot write {}", path.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(CliError::io("stdout")),
    }
}

fn cmd_graph(family: Family, spec: &str, format: Format, out: Option<&Path>, limits: &Limits) -> Result<u8, CliError> {
    let g = build(family, spec, limits)?.graph;
    let text = match format {
        Format::Json => g.to_json() + "\n",
        Format::Dot => g.to_dot(),
    };
    write_output(out, &text)?;
    let sizes: Vec<String> = g.level_sizes().iter().map(usize::to_string).collect();
    let summary = format!(
        "vertices: {}\nedges: {}\nlevels: {} ({})\npaths: {}",
        g.vertex_count(),
        g.edge_count(),
        g.n() + 1,
        sizes.join(" "),
        count_paths(&g)
    );
    // Keep stdout clean when it carries the graph itself.
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}

fn cmd_group(
    family: Family,
    spec: &str,
    classify: bool,
    transitivity: bool,
    blocks: bool,
    limits: &Limits,
) -> Result<u8, CliError> {
    let Built { graph, lambda } = build(family, spec, limits)?;
    let pt = PathTable::enumerate(&graph, limits).map_err(core)?;
    let gens = all_generators(&graph, &pt).map_err(core)?;
    let degree = pt.len();
    let c = classify_group(&gens, degree).map_err(core)?;

    let mut doc = json!({
        "family": family.to_possible_value().map(|v| v.get_name().to_string()),
        "spec": spec,
        "degree": degree,
        "order": c.order.to_string(),
    });
    if let Some(lambda) = &lambda {
        let rule = ExpectedRule::for_diagram(lambda);
        let predicted = rule.predicted_order(lambda.n(), degree);
        doc["diagram"] = json!({
            "lambda": lambda.id(),
            "is_hook": lambda.is_hook(),
            "is_symmetric": lambda.is_symmetric(),
            "rule": format!("{rule:?}"),
            "predicted_order": predicted.to_string(),
            "match": predicted == c.order,
        });
    }
    if classify {
        doc["classification"] = c.to_json_value(false);
        doc["label"] = Value::from(c.label());
    }
    if transitivity {
        doc["transitivity"] = json!({
            "orbits": orbits(&gens, degree).len(),
            "transitive": c.transitive,
            "two_transitive": c.two_transitive,
        });
    }
    if blocks {
        doc["blocks"] = if c.transitive {
            serde_json::to_value(minimal_block_system(&gens, degree).map_err(core)?).expect("blocks serialize")
        } else {
            Value::Null
        };
    }
    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    Ok(0)
}

fn cmd_table(n_max: u32, jobs: usize, out: Option<&Path>, limits: &Limits) -> Result<u8, CliError> {
    if !(2..=9).contains(&n_max) {
        return Err(CliError::Usage(format!("n_max {n_max} must lie in 2..=9")));
    }
    let rows = survey(n_max, limits, jobs.max(1))?;
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf)?;
    write_output(out, &String::from_utf8(buf).expect("csv is utf-8"))?;

    let bad: Vec<_> = rows.iter().filter(|r| !r.matches).collect();
    eprintln!("{} diagrams, {} mismatches", rows.len(), bad.len());
    for r in &bad {
        let why = match r.mismatch() {
            Some(Mismatch::SingleTableau) => "single tableau, trivial group".to_string(),
            Some(Mismatch::TransposeOf(t)) => format!("transpose of listed diagram ({})", t.id()),
            _ => "unexplained".to_string(),
        };
        eprintln!(
            "  ({}) rule {:?}, computed {}: {why}",
            r.lambda.id(),
            r.rule,
            r.classification.label()
        );
    }
    Ok(if bad.is_empty() { 0 } else { 1 })
}

fn parse_mode(mode: &str) -> Result<DeformationParams, CliError> {
    match mode {
        "young" => Ok(DeformationParams::young()),
        "combinatorial" => Ok(DeformationParams::combinatorial()),
        _ => {
            let angle = mode.strip_prefix("custom:").ok_or_else(|| {
                CliError::Usage(format!("bad mode {mode:?}; use young, combinatorial or custom:ANGLE"))
            })?;
            let alpha: f64 = angle
                .parse()
                .map_err(|_| CliError::Usage(format!("bad angle {angle:?}")))?;
            if !alpha.is_finite() {
                return Err(CliError::Usage(format!("bad angle {angle:?}")));
            }
            Ok(DeformationParams::custom_uniform(alpha))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_yof(
    lambda_text: &str,
    mode: &str,
    relations: bool,
    probe: Option<usize>,
    limit_check: bool,
    csv_dir: Option<&Path>,
    tol: f64,
    limits: &Limits,
) -> Result<u8, CliError> {
    let lambda = parse_diagram(lambda_text)?;
    let params = parse_mode(mode)?;
    let n = lambda.n();
    let over = |what: &str, max: usize| core(Error::Budget(format!("{what} allows n <= {max}, diagram has n = {n}")));
    if (relations || limit_check || csv_dir.is_some() || probe.is_none()) && n > limits.yof_relations_n {
        return Err(over("yof_relations_n", limits.yof_relations_n));
    }
    if probe.is_some() && n > limits.yof_probe_n {
        return Err(over("yof_probe_n", limits.yof_probe_n));
    }
    let graph = young_interval(&lambda, &YoungDiagram::empty(), limits).map_err(core)?;
    let pt = PathTable::enumerate(&graph, limits).map_err(core)?;
    let basis = YoungBasis::new(&graph, &pt).map_err(core)?;
    let gens = deformed_generators(&basis, &params).map_err(core)?;

    let mut doc = json!({
        "lambda": lambda.id(),
        "mode": mode,
        "dim": basis.dim(),
        "tableaux": basis.tableaux().iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    if relations {
        let report = check_relations(&gens, tol).map_err(core)?;
        doc["relations"] = serde_json::to_value(&report).expect("report serializes");
    }
    if let Some(max) = probe {
        let mats: Vec<_> = gens.iter().map(|g| g.matrix.clone()).collect();
        let outcome = closure_probe(&mats, max, &ProbeOptions::default()).map_err(core)?;
        doc["probe"] = match outcome {
            ProbeOutcome::Finite(count) => json!({"max_elements": max, "verdict": "Finite", "count": count}),
            ProbeOutcome::ExceededBound => json!({"max_elements": max, "verdict": "ExceededBound"}),
        };
    }
    if limit_check {
        doc["limit_check"] = Value::from(combinatorial_limit_check(&basis, 1e-9));
    }
    if let Some(dir) = csv_dir {
        fs::create_dir_all(dir).map_err(CliError::io(format!("cannot create {}", dir.display())))?;
        for g in &gens {
            let path = dir.join(format!("sigma_{}.csv", g.k));
            let file = fs::File::create(&path).map_err(CliError::io(format!("cannot write {}", path.display())))?;
            write_matrix_csv(&g.matrix, file)?;
        }
    }
    if !(relations || probe.is_some() || limit_check) {
        let mats: Vec<Value> = gens
            .iter()
            .map(|g| {
                let rows: Vec<Vec<f64>> = g.matrix.row_iter().map(|r| r.iter().copied().collect()).collect();
                json!({"k": g.k, "matrix": rows})
            })
            .collect();
        doc["generators"] = Value::from(mats);
    }
    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    Ok(0)
}
