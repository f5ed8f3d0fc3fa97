mod source;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use balanced_coloring::coloring::{check_identities, report, verify, IdentityStatus};
use balanced_coloring::constructions::{characterize_family, Verdict};
use balanced_coloring::graph::{decode_graph6, encode_graph6, to_edge_list};
use balanced_coloring::solver::{census, census_with, enumerate, solve, Budget, SolveStatus, SolverConfig};
use balanced_coloring::trees::{decompose_cnbc_tree, replay, Decomposition, TreeBuildScript};
use balanced_coloring::{Coloring, Mode};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use source::{read_text, SourceArgs};

const EXIT_NO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "balanced-coloring", version, about = "Balanced red/blue vertex colorings of graphs")]
struct Cli {
    /// Neighbourhood kind: `cnb` (closed) or `nb` (open).
    #[arg(long, global = true, value_name = "cnb|nb")]
    mode: Option<Mode>,
    /// Search node budget.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_nodes: Option<u64>,
    /// Search time budget in milliseconds.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_ms: Option<u64>,
    /// Disable the necessary-condition prefilters and twin/leaf forcing.
    #[arg(long, global = true)]
    bare: bool,
    /// Census worker threads.
    #[arg(long, global = true, env = "BALANCED_COLORING_WORKERS", value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a coloring and print its balance report.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        /// Coloring as an R/B string, one letter per vertex.
        #[arg(long)]
        coloring: Option<Coloring>,
    },
    /// Decide whether a balanced coloring exists.
    Solve {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// List valid colorings.
    Enumerate {
        #[command(flatten)]
        source: SourceArgs,
        /// Stop after this many colorings.
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Solve every graph6 line of the input, one JSON line per graph.
    Census {
        /// graph6 lines from FILE, or `-` for stdin.
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Closed-form verdict for a named family, falling back to the solver.
    Family {
        #[arg(required = true, value_name = "SPEC")]
        spec: Vec<String>,
    },
    /// Audit the counting identities on a valid coloring.
    Identities {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        coloring: Option<Coloring>,
    },
    /// Tree tools.
    Tree {
        #[command(subcommand)]
        command: TreeCommand,
    },
}

#[derive(Debug, Subcommand)]
enum TreeCommand {
    /// Whether a tree has a CNB coloring.
    Check {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Build script for a tree with a CNB coloring, or the reason it has none.
    Decompose {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Rebuild a tree from a script of 4-vertex additions applied to K2.
    Replay {
        /// JSON script as printed by `tree decompose`.
        #[arg(long, value_name = "FILE", conflicts_with = "anchors")]
        script: Option<String>,
        /// Comma separated anchor vertices, one per addition.
        #[arg(long, value_delimiter = ',', required_unless_present = "script")]
        anchors: Vec<usize>,
    },
}

struct Ctx {
    mode: Option<Mode>,
    config: SolverConfig,
    workers: Option<usize>,
    format: Format,
    out: BufWriter<io::Stdout>,
}

impl Ctx {
    fn mode(&self, from_spec: Option<Mode>) -> Result<Mode> {
        match (self.mode, from_spec) {
            (Some(a), Some(b)) if a != b => bail!("conflicting modes {a} and {b}"),
            (Some(m), _) | (None, Some(m)) => Ok(m),
            (None, None) => Ok(Mode::Cnb),
        }
    }

    fn emit(&mut self, json: &Value, tsv: &[String]) -> Result<()> {
        match self.format {
            Format::Json => writeln!(self.out, "{json}")?,
            Format::Tsv => writeln!(self.out, "{}", tsv.join("\t"))?,
        }
        Ok(())
    }
}

fn status_code(s: SolveStatus) -> u8 {
    match s {
        SolveStatus::Sat => 0,
        SolveStatus::Unsat => EXIT_NO,
        SolveStatus::Timeout => EXIT_TIMEOUT,
    }
}

fn opt_string(c: &Option<Coloring>) -> String {
    c.as_ref().map_or_else(|| "-".to_string(), Coloring::to_string)
}

fn run(cli: Cli) -> Result<u8> {
    let mut config = if cli.bare { SolverConfig::bare() } else { SolverConfig::default() };
    config = config.with_budget(Budget {
        max_nodes: cli.budget_nodes.unwrap_or(config.budget.max_nodes),
        max_time: cli.budget_ms.map_or(config.budget.max_time, Duration::from_millis),
    });
    let mut ctx = Ctx {
        mode: cli.mode,
        config,
        workers: cli.workers.map(|w| w as usize),
        format: cli.format,
        out: BufWriter::new(io::stdout()),
    };
    let code = match cli.command {
        Command::Verify { source, coloring } => cmd_verify(&mut ctx, &source, coloring)?,
        Command::Solve { source } => cmd_solve(&mut ctx, &source)?,
        Command::Enumerate { source, limit } => cmd_enumerate(&mut ctx, &source, limit)?,
        Command::Census { input } => cmd_census(&mut ctx, &input)?,
        Command::Family { spec } => cmd_family(&mut ctx, &spec)?,
        Command::Identities { source, coloring } => cmd_identities(&mut ctx, &source, coloring)?,
        Command::Tree { command } => match command {
            TreeCommand::Check { source } => cmd_tree(&mut ctx, &source, false)?,
            TreeCommand::Decompose { source } => cmd_tree(&mut ctx, &source, true)?,
            TreeCommand::Replay { script, anchors } => cmd_replay(&mut ctx, script.as_deref(), &anchors)?,
        },
    };
    ctx.out.flush()?;
    Ok(code)
}

fn pick_coloring(flag: Option<Coloring>, positional: Option<Coloring>) -> Result<Coloring> {
    match (flag, positional) {
        (Some(_), Some(_)) => bail!("coloring given twice"),
        (Some(c), None) | (None, Some(c)) => Ok(c),
        (None, None) => bail!("no coloring given: pass --coloring RBSTRING"),
    }
}

fn cmd_verify(ctx: &mut Ctx, source: &SourceArgs, coloring: Option<Coloring>) -> Result<u8> {
    let r = source.resolve(coloring.is_none())?;
    let mode = ctx.mode(r.mode)?;
    let c = pick_coloring(coloring, r.coloring)?;
    let v = verify(&r.graph, &c, mode)?;
    let rep = report(&r.graph, &c)?;
    let violation = v.first_violation.map(|vx| {
        let res = match mode {
            Mode::Cnb => rep.closed_residuals[vx],
            Mode::Nb => rep.open_residuals[vx],
        };
        json!({ "vertex": vx, "residual": res })
    });
    let json = json!({
        "graph": r.label,
        "mode": mode,
        "coloring": c,
        "valid": v.valid,
        "first_violation": violation,
        "report": rep,
    });
    let tsv = [
        if v.valid { "valid" } else { "invalid" }.to_string(),
        mode.to_string(),
        v.first_violation.map_or_else(|| "-".into(), |x| x.to_string()),
        rep.red_count.to_string(),
        rep.blue_count.to_string(),
        rep.rr.to_string(),
        rep.bb.to_string(),
        rep.rb.to_string(),
    ];
    ctx.emit(&json, &tsv)?;
    Ok(if v.valid { 0 } else { EXIT_NO })
}

fn cmd_solve(ctx: &mut Ctx, source: &SourceArgs) -> Result<u8> {
    let r = source.resolve(false)?;
    let mode = ctx.mode(r.mode)?;
    let o = solve(&r.graph, mode, &ctx.config);
    let json = json!({
        "graph": r.label,
        "n": r.graph.n(),
        "mode": mode,
        "status": o.status,
        "witness": o.witness,
        "nodes": o.nodes,
        "propagations": o.propagations,
        "millis": o.millis,
    });
    let tsv = [o.status.as_str().to_string(), opt_string(&o.witness), o.nodes.to_string(), o.millis.to_string()];
    ctx.emit(&json, &tsv)?;
    Ok(status_code(o.status))
}

fn cmd_enumerate(ctx: &mut Ctx, source: &SourceArgs, limit: usize) -> Result<u8> {
    let r = source.resolve(false)?;
    let mode = ctx.mode(r.mode)?;
    let e = enumerate(&r.graph, mode, limit, &ctx.config);
    match ctx.format {
        Format::Json => {
            let json = json!({
                "graph": r.label,
                "mode": mode,
                "status": e.status,
                "count": e.colorings.len(),
                "cap_exceeded": e.cap_exceeded,
                "colorings": e.colorings,
                "nodes": e.nodes,
                "millis": e.millis,
            });
            writeln!(ctx.out, "{json}")?;
        }
        Format::Tsv => {
            for c in &e.colorings {
                writeln!(ctx.out, "{c}")?;
            }
        }
    }
    Ok(status_code(e.status))
}

fn cmd_census(ctx: &mut Ctx, input: &str) -> Result<u8> {
    let text = read_text(input)?;
    let mut lines = Vec::new();
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        graphs.push(decode_graph6(line.as_bytes()).with_context(|| format!("line {}", i + 1))?);
        lines.push(line.to_string());
    }
    let mode = ctx.mode(None)?;
    let results = match ctx.workers {
        Some(w) => census_with(&graphs, mode, &ctx.config, w),
        None => census(&graphs, mode, &ctx.config),
    };
    let mut timeouts = false;
    for (i, (g6, o)) in lines.iter().zip(&results).enumerate() {
        timeouts |= o.status == SolveStatus::Timeout;
        let json = json!({
            "index": i,
            "graph6": g6,
            "n": graphs[i].n(),
            "status": o.status,
            "witness": o.witness,
            "nodes": o.nodes,
            "millis": o.millis,
        });
        let tsv = [i.to_string(), g6.clone(), o.status.as_str().to_string(), opt_string(&o.witness)];
        ctx.emit(&json, &tsv)?;
    }
    Ok(if timeouts { EXIT_TIMEOUT } else { 0 })
}

fn cmd_family(ctx: &mut Ctx, spec: &[String]) -> Result<u8> {
    let source = SourceArgs {
        spec: spec.to_vec(),
        input: None,
        graph6: None,
    };
    let r = source.resolve(false)?;
    let family = r.family.expect("family specs always resolve to a family");
    let mode = ctx.mode(r.mode)?;
    let v = characterize_family(&family, mode)?;
    let (value, provenance, witness, status) = match v.value {
        Verdict::Unknown => {
            let o = solve(&r.graph, mode, &ctx.config);
            let value = match o.status {
                SolveStatus::Sat => Verdict::Yes,
                SolveStatus::Unsat => Verdict::No,
                SolveStatus::Timeout => Verdict::Unknown,
            };
            (value, "solver", o.witness, Some(o.status))
        }
        value => (value, "theorem", v.witness.clone(), None),
    };
    let json = json!({
        "family": family.to_string(),
        "mode": mode,
        "verdict": value,
        "reason": v.reason,
        "theorem": v.theorem,
        "provenance": provenance,
        "solver_status": status,
        "graph6": encode_graph6(&r.graph),
        "witness": witness,
    });
    let tsv = [value.to_string(), provenance.to_string(), v.theorem.to_string(), opt_string(&witness)];
    ctx.emit(&json, &tsv)?;
    Ok(match value {
        Verdict::Yes => 0,
        Verdict::No => EXIT_NO,
        Verdict::Unknown => EXIT_TIMEOUT,
    })
}

fn cmd_identities(ctx: &mut Ctx, source: &SourceArgs, coloring: Option<Coloring>) -> Result<u8> {
    let r = source.resolve(coloring.is_none())?;
    let mode = ctx.mode(r.mode)?;
    let c = pick_coloring(coloring, r.coloring)?;
    let checks = check_identities(&r.graph, &c, mode)?;
    let failed = checks.iter().any(|x| x.status == IdentityStatus::Fails);
    match ctx.format {
        Format::Json => {
            let json = json!({ "graph": r.label, "mode": mode, "coloring": c, "checks": checks, "all_hold": !failed });
            writeln!(ctx.out, "{json}")?;
        }
        Format::Tsv => {
            for x in &checks {
                let status = serde_json::to_value(x.status)?;
                writeln!(ctx.out, "{}\t{}", x.name, status.as_str().unwrap_or("?"))?;
            }
        }
    }
    Ok(if failed { EXIT_NO } else { 0 })
}

fn cmd_tree(ctx: &mut Ctx, source: &SourceArgs, full: bool) -> Result<u8> {
    let r = source.resolve(false)?;
    let d = decompose_cnbc_tree(&r.graph)?;
    let cnbc = d.is_cnbc();
    let json = if full {
        let mut j = serde_json::to_value(&d)?;
        if let Decomposition::Cnbc { script, labels } = &d {
            let (_, c) = replay(script)?;
            let mut colors = vec!['?'; labels.len()];
            for (i, &l) in labels.iter().enumerate() {
                colors[l] = c.color(i).as_char();
            }
            j["coloring"] = Value::String(colors.into_iter().collect());
        }
        j
    } else {
        let mut j = json!({ "graph": r.label, "cnbc": cnbc });
        if let Decomposition::NotCnbc { rejection } = &d {
            j["rejection"] = serde_json::to_value(rejection)?;
        }
        j
    };
    let tsv = [if cnbc { "cnbc" } else { "not-cnbc" }.to_string()];
    ctx.emit(&json, &tsv)?;
    Ok(if cnbc { 0 } else { EXIT_NO })
}

fn cmd_replay(ctx: &mut Ctx, script: Option<&str>, anchors: &[usize]) -> Result<u8> {
    let script: TreeBuildScript = match script {
        Some(path) => {
            let v: Value = serde_json::from_str(&read_text(path)?).context("parsing script JSON")?;
            // accept both a bare script and a full `tree decompose` record
            serde_json::from_value(v.get("script").cloned().unwrap_or(v)).context("parsing script JSON")?
        }
        None => {
            let mut s = TreeBuildScript::default();
            for &z in anchors {
                s.push(z);
            }
            s
        }
    };
    let (g, c) = replay(&script)?;
    let json = json!({
        "n": g.n(),
        "graph6": encode_graph6(&g),
        "coloring": c,
        "edge_list": to_edge_list(&g),
    });
    let tsv = [encode_graph6(&g), c.to_string()];
    ctx.emit(&json, &tsv)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
