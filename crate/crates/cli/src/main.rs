//! `semibranch`: decide, construct and check good pairs from the shell.
//!
//! Exit codes: 0 yes / valid / pass, 1 no (with a certificate), 2 input
//! error, 3 internal inconsistency.

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semibranch::config::Budgets;
use semibranch::digraph::validate_semicomplete;
use semibranch::goodpair::{
    construct_good_pair_with, decide_good_pair_with, Construction, Decision,
};
use semibranch::io::{parse_auto, write_dot, write_edge_list};
use semibranch::oracle::{
    oracle_good_pair, random_semicomplete, semicomplete_count, semicomplete_from_index, Constraint,
    GeneratorConfig, ENUMERATION_LIMIT,
};
use semibranch::structure::{
    arc_disjoint_path_pair_with, detect_obstruction_type_with, PathPairOutcome,
};
use semibranch::verdict::{parse_verdict, verify_verdict, Verdict};
use semibranch::{fixtures, ArcPath, Digraph, Error};

const SCHEMA: u32 = semibranch::verdict::SCHEMA;

#[derive(Parser)]
#[command(
    name = "semibranch",
    version,
    about = "Good (u,v)-pairs in semicomplete digraphs"
)]
#[command(after_help = concat!(
    "Budgets: --search-nodes (default 1000000) caps backtracking searches; --exhaustive-n (default 5) is the largest \
     order cross-checked by exhaustive partition search. Environment overrides: ",
    "SEMIBRANCH_SEARCH_NODES, SEMIBRANCH_EXHAUSTIVE_N.\n\n",
    "Exit codes: 0 yes/valid/pass, 1 no with certificate, 2 input error, 3 internal inconsistency."
))]
struct Cli {
    /// Output style. `json` is the versioned structured form.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    /// Node cap for backtracking searches.
    #[arg(long, global = true)]
    search_nodes: Option<u64>,
    /// Largest order cross-checked by exhaustive partition search.
    #[arg(long, global = true)]
    exhaustive_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    EdgeList,
    Dot,
}

#[derive(Args)]
struct Input {
    /// Instance file (edge list or DOT subset); `-` reads stdin.
    file: Option<PathBuf>,
    /// Use a built-in fixture instead of a file.
    #[arg(long, conflicts_with = "file")]
    fixture: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an instance and check that it is semicomplete.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Decide whether a good (u,v)-pair exists.
    Decide {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        u: usize,
        #[arg(short)]
        v: usize,
    },
    /// Build a good (u,v)-pair or a certificate that none exists.
    Construct {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        u: usize,
        #[arg(short)]
        v: usize,
    },
    /// Re-check a JSON verdict against the instance.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Verdict file as written by `construct --output json`.
        #[arg(long)]
        verdict: PathBuf,
    },
    /// Arc-disjoint (x1,y1)- and (x2,y2)-paths, or the obstruction.
    Paths {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        x1: usize,
        #[arg(long)]
        y1: usize,
        #[arg(long)]
        x2: usize,
        #[arg(long)]
        y2: usize,
    },
    /// Look for a layered obstruction with roles (u, w, v).
    Detect {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        u: usize,
        #[arg(short)]
        w: usize,
        #[arg(short)]
        v: usize,
    },
    /// Compare decisions with brute force on every labeled digraph of order n.
    Sweep {
        #[arg(long)]
        n: usize,
        /// First instance index.
        #[arg(long, default_value_t = 0)]
        start: u64,
        /// Number of instances; all remaining by default.
        #[arg(long)]
        count: Option<u64>,
    },
    /// Print a seeded random semicomplete digraph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.0)]
        digon_prob: f64,
        /// any, tournament, strong, 2-arc-strong or non-strong.
        #[arg(long, default_value = "any")]
        constraint: Constraint,
        #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
        format: GraphFormat,
    },
    /// List the built-in fixtures, print one, or write them all to a directory.
    Fixtures {
        #[arg(long)]
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
        format: GraphFormat,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInconsistency(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Text or JSON, plus the exit code.
struct Report {
    text: String,
    json: Value,
    code: u8,
}

fn load(input: &Input) -> Result<Digraph, Failure> {
    match (&input.fixture, &input.file) {
        (Some(name), _) => fixtures::by_name(name)
            .map(|f| f.digraph)
            .ok_or_else(|| Failure::Input(format!("unknown fixture `{name}`"))),
        (None, Some(path)) => {
            let text = read_text(path)?;
            parse_auto(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        (None, None) => Err(Failure::Input("give an instance file or --fixture".into())),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let mut s = String::new();
    let r = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| s = t)
    };
    r.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(s)
}

fn check_vertices(d: &Digraph, vs: &[usize]) -> Result<(), Failure> {
    match vs.iter().find(|&&x| x >= d.n()) {
        Some(&x) => Err(Failure::Input(format!(
            "vertex {x} out of range for n = {}",
            d.n()
        ))),
        None => Ok(()),
    }
}

fn arcs_text(arcs: &[(usize, usize)]) -> String {
    let parts: Vec<String> = arcs.iter().map(|(a, b)| format!("{a}->{b}")).collect();
    parts.join(" ")
}

fn path_text(p: &ArcPath) -> String {
    let parts: Vec<String> = p.vertices.iter().map(usize::to_string).collect();
    parts.join(" -> ")
}

fn verdict_report(verdict: &Verdict, code: u8) -> Report {
    let mut text = String::new();
    match (&verdict.certificate, &verdict.out, &verdict.in_arcs) {
        (Some(c), _, _) => {
            let _ = writeln!(text, "no {}", c.label());
            let _ = write!(
                text,
                "certificate: {}",
                serde_json::to_string(c).expect("certificates serialize")
            );
        }
        (None, Some(o), Some(i)) => {
            let _ = writeln!(text, "yes");
            let _ = writeln!(text, "out: {}", arcs_text(o));
            let _ = write!(text, "in: {}", arcs_text(i));
        }
        _ => text.push_str("yes"),
    }
    Report {
        text,
        json: serde_json::to_value(verdict).expect("verdicts serialize"),
        code,
    }
}

fn graph_text(d: &Digraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(d),
        GraphFormat::Dot => write_dot(d),
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let mut budgets = Budgets::from_env();
    if let Some(x) = cli.search_nodes {
        budgets.search_nodes = x;
    }
    if let Some(x) = cli.exhaustive_n {
        budgets.exhaustive_n = x;
    }
    match &cli.command {
        Command::Validate { input } => {
            let d = load(input)?;
            let w = validate_semicomplete(&d).map_err(|e| Failure::Input(e.to_string()))?;
            let strong = d.is_strong();
            Ok(Report {
                text: format!(
                    "valid semicomplete digraph: n = {}, {} arcs, {} digons, {}",
                    w.n,
                    w.arcs,
                    w.digons,
                    if strong { "strong" } else { "not strong" }
                ),
                json: json!({"schema": SCHEMA, "result": "valid", "n": w.n, "arcs": w.arcs, "digons": w.digons, "strong": strong}),
                code: 0,
            })
        }
        Command::Decide { input, u, v } => {
            let d = load(input)?;
            check_vertices(&d, &[*u, *v])?;
            Ok(match decide_good_pair_with(&d, *u, *v, budgets)? {
                Decision::Yes => verdict_report(&Verdict::decision(*u, *v), 0),
                Decision::No(c) => verdict_report(&Verdict::no(*u, *v, c), 1),
            })
        }
        Command::Construct { input, u, v } => {
            let d = load(input)?;
            check_vertices(&d, &[*u, *v])?;
            Ok(match construct_good_pair_with(&d, *u, *v, budgets)? {
                Construction::Pair(p) => verdict_report(&Verdict::pair(*u, *v, &p), 0),
                Construction::NoPair(c) => verdict_report(&Verdict::no(*u, *v, c), 1),
            })
        }
        Command::Verify { input, verdict } => {
            let d = load(input)?;
            let text = read_text(verdict)?;
            let parsed = parse_verdict(&text)
                .map_err(|e| Failure::Input(format!("{}: {e}", verdict.display())))?;
            Ok(match verify_verdict(&d, &parsed) {
                Ok(()) => Report {
                    text: "valid".into(),
                    json: json!({"schema": SCHEMA, "result": "valid"}),
                    code: 0,
                },
                Err(m) => Report {
                    text: format!("invalid: {m}"),
                    json: json!({"schema": SCHEMA, "result": "invalid", "reason": m}),
                    code: 1,
                },
            })
        }
        Command::Paths {
            input,
            x1,
            y1,
            x2,
            y2,
        } => {
            let d = load(input)?;
            check_vertices(&d, &[*x1, *y1, *x2, *y2])?;
            validate_semicomplete(&d).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(
                match arc_disjoint_path_pair_with(&d, *x1, *y1, *x2, *y2, budgets)? {
                    PathPairOutcome::Paths(p1, p2) => Report {
                        text: format!("paths\n{}\n{}", path_text(&p1), path_text(&p2)),
                        json: json!({"schema": SCHEMA, "result": "paths", "paths": [p1.vertices, p2.vertices]}),
                        code: 0,
                    },
                    PathPairOutcome::Obstruction(o) => {
                        let body = serde_json::to_value(&o).expect("obstructions serialize");
                        Report {
                            text: format!("obstruction: {body}"),
                            json: json!({"schema": SCHEMA, "result": "obstruction", "obstruction": body}),
                            code: 1,
                        }
                    }
                },
            )
        }
        Command::Detect { input, u, w, v } => {
            let d = load(input)?;
            check_vertices(&d, &[*u, *w, *v])?;
            validate_semicomplete(&d).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(
                match detect_obstruction_type_with(&d, *u, *w, *v, budgets) {
                    None => Report {
                        text: "none".into(),
                        json: json!({"schema": SCHEMA, "result": "none"}),
                        code: 0,
                    },
                    Some(c) => {
                        let body = serde_json::to_value(&c).expect("certificates serialize");
                        Report {
                            text: format!("certificate: {body}"),
                            json: json!({"schema": SCHEMA, "result": "certificate", "certificate": body}),
                            code: 1,
                        }
                    }
                },
            )
        }
        Command::Sweep { n, start, count } => sweep(*n, *start, *count, budgets),
        Command::Random {
            n,
            seed,
            digon_prob,
            constraint,
            format,
        } => {
            let d =
                random_semicomplete(&GeneratorConfig::new(*n, *digon_prob, *seed, *constraint))?;
            let text = graph_text(&d, *format);
            Ok(Report {
                json: json!({"schema": SCHEMA, "n": d.n(), "arcs": d.arcs()}),
                text: text.trim_end().to_string(),
                code: 0,
            })
        }
        Command::Fixtures { name, out, format } => {
            fixtures_cmd(name.as_deref(), out.as_deref(), *format)
        }
    }
}

fn sweep(n: usize, start: u64, count: Option<u64>, budgets: Budgets) -> Result<Report, Failure> {
    if n > ENUMERATION_LIMIT {
        return Err(Failure::Input(format!(
            "sweep supports n <= {ENUMERATION_LIMIT}"
        )));
    }
    let total = semicomplete_count(n);
    let end = count.map_or(total, |c| start.saturating_add(c).min(total));
    let mut decisions = 0u64;
    for index in start..end {
        let d = semicomplete_from_index(n, index)?;
        for u in 0..n {
            for v in 0..n {
                let yes = decide_good_pair_with(&d, u, v, budgets)? == Decision::Yes;
                let exists = oracle_good_pair(&d, u, v)?.is_some();
                if yes != exists {
                    return Ok(Report {
                        text: format!(
                            "fail: instance {index} roots ({u},{v}): decide {yes}, oracle {exists}"
                        ),
                        json: json!({"schema": SCHEMA, "result": "fail", "n": n, "index": index, "u": u, "v": v}),
                        code: 3,
                    });
                }
                decisions += 1;
            }
        }
    }
    let instances = end.saturating_sub(start);
    Ok(Report {
        text: format!(
            "pass: n = {n}, {instances} instances, {decisions} decisions match the oracle"
        ),
        json: json!({"schema": SCHEMA, "result": "pass", "n": n, "instances": instances, "decisions": decisions}),
        code: 0,
    })
}

fn roles_text(r: &fixtures::Roles) -> String {
    let mut s = Vec::new();
    for (k, x) in [("u", r.u), ("w", r.w), ("v", r.v), ("z", r.z)] {
        if let Some(x) = x {
            s.push(format!("{k}={x}"));
        }
    }
    s.join(" ")
}

fn fixtures_cmd(
    name: Option<&str>,
    out: Option<&Path>,
    format: GraphFormat,
) -> Result<Report, Failure> {
    let list = match name {
        Some(name) => vec![fixtures::by_name(name)
            .ok_or_else(|| Failure::Input(format!("unknown fixture `{name}`")))?],
        None => fixtures::all(),
    };
    let ext = match format {
        GraphFormat::EdgeList => "txt",
        GraphFormat::Dot => "dot",
    };
    let mut text = String::new();
    let mut entries = Vec::new();
    for f in &list {
        let roles = roles_text(&f.roles);
        if let Some(dir) = out {
            fs::create_dir_all(dir)
                .map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
            let path = dir.join(format!("{}.{ext}", f.name));
            fs::write(&path, graph_text(&f.digraph, format))
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let _ = writeln!(text, "wrote {} ({roles})", path.display());
        } else if name.is_some() {
            text.push_str(&graph_text(&f.digraph, format));
        } else {
            let _ = writeln!(
                text,
                "{}",
                format!("{:<7} n={} {roles}", f.name, f.digraph.n()).trim_end()
            );
        }
        entries.push(
            json!({"name": f.name, "n": f.digraph.n(), "roles": f.roles, "arcs": f.digraph.arcs()}),
        );
    }
    Ok(Report {
        text: text.trim_end().to_string(),
        json: json!({"schema": SCHEMA, "fixtures": entries}),
        code: 0,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(r) => {
            match cli.output {
                Output::Text => println!("{}", r.text),
                Output::Json => println!("{}", r.json),
            }
            ExitCode::from(r.code)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}
