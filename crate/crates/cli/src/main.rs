use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use seifert_core::conway::{conway_skein_with, SkeinConfig, DEFAULT_SKEIN_CAP};
use seifert_core::jones::{kauffman_jones_capped, DEFAULT_JONES_CAP};
use seifert_core::theorem::analyze;
use seifert_cli::checks::Caps;
use seifert_cli::corpus::load_corpus;
use seifert_cli::input::{parse_any, parse_generator, parse_outer_face, parse_pd_text};
use seifert_cli::report::{analyze_report, poly_json, render_text};
use seifert_cli::suites::{self, run_suite, SuiteOptions};

#[derive(Parser)]
#[command(name = "seifert", version, about = "Seifert graph blocks, block Seifert matrices and knot polynomial checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse one diagram.
    Analyze(AnalyzeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// PD text, or the JSON form `{"crossings": [...], "unknots": 0}`.
    #[arg(long, conflicts_with_all = ["gen", "file"])]
    pd: Option<String>,
    /// Generator spec such as "pretzel 4 -1 -1", "wedge 4 -2", "torus2 7" or "torus2 3 + torus2 3".
    #[arg(long, conflicts_with = "file")]
    gen: Option<String>,
    /// Read the diagram (PD, JSON or generator spec) from a file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Outer face as EDGE or EDGE:left / EDGE:right.
    #[arg(long)]
    outer_face: Option<String>,
    /// Also compute the Conway and Jones polynomials (within the caps).
    #[arg(long)]
    invariants: bool,
    /// Print the Seifert graph in DOT form.
    #[arg(long)]
    dot: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: cromwell, matrices, dual, tables, random-lemma9, genus-bound, torus-claim.
    suite_name: Option<String>,
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    max_crossings: Option<usize>,
    /// Skein cap for the Conway polynomial.
    #[arg(long, default_value_t = DEFAULT_SKEIN_CAP)]
    skein_cap: usize,
    /// State-sum cap for the Jones polynomial.
    #[arg(long, default_value_t = DEFAULT_JONES_CAP)]
    jones_cap: usize,
    /// JSON list of corpus entries to run instead of the built-in corpus.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    /// List every check, not only failures and notes.
    #[arg(long)]
    verbose: bool,
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<bool> {
    let (label, d) = match (&args.pd, &args.gen, &args.file) {
        (Some(pd), _, _) => {
            let t = pd.trim();
            let d = if t.starts_with('{') || t.starts_with('[') { parse_any(t)? } else { parse_pd_text(t)? };
            (pd.clone(), d)
        }
        (_, Some(g), _) => (g.clone(), parse_generator(g)?),
        (_, _, Some(f)) => {
            let text = read(f)?;
            let d = parse_any(&text).with_context(|| format!("in {}", f.display()))?;
            (f.display().to_string(), d)
        }
        _ => bail!("give a diagram with --pd, --gen or --file"),
    };
    let outer = args.outer_face.as_deref().map(parse_outer_face).transpose()?;
    let a = analyze(&d, outer)?;
    let report = analyze_report(&label, &a);
    if args.dot {
        emit(&format!("{}\n", a.graph.to_dot(Some(&a.blocks))))?;
        return Ok(true);
    }
    let mut value = serde_json::to_value(&report)?;
    let mut text = render_text(&report);
    if args.invariants {
        let obj = value.as_object_mut().ok_or_else(|| anyhow!("report is not an object"))?;
        match conway_skein_with(&d, &SkeinConfig::default()) {
            Ok(p) => {
                text += &format!("conway: {p}\n");
                obj.insert("conway".into(), serde_json::json!({ "text": p.to_text(), "terms": poly_json(&p) }));
            }
            Err(e) => text += &format!("conway: skipped ({e})\n"),
        }
        match kauffman_jones_capped(&d, DEFAULT_JONES_CAP) {
            Ok(f) => {
                text += &format!("jones f: {f}\n");
                obj.insert("jones".into(), serde_json::json!({ "text": f.to_text(), "terms": poly_json(&f) }));
            }
            Err(e) => text += &format!("jones: skipped ({e})\n"),
        }
    }
    if args.json {
        emit(&format!("{}\n", serde_json::to_string_pretty(&value)?))?;
    } else {
        emit(&text)?;
    }
    Ok(true)
}

fn cmd_verify(args: VerifyArgs) -> Result<bool> {
    let name = match (args.suite_name, args.suite) {
        (Some(a), Some(b)) if a != b => bail!("suite given twice: `{a}` and `{b}`"),
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => bail!("name a suite: {}", suites::SUITES.join(", ")),
    };
    let corpus = args.corpus.as_ref().map(|p| read(p).and_then(|t| load_corpus(&t))).transpose()?;
    let opts = SuiteOptions {
        seed: args.seed,
        trials: args.trials,
        max_crossings: args.max_crossings,
        caps: Caps { skein: args.skein_cap, jones: args.jones_cap },
        corpus,
    };
    let report = run_suite(&name, &opts)?;
    if args.json {
        emit(&format!("{}\n", serde_json::to_string_pretty(&report)?))?;
    } else {
        emit(&suites::render_text(&report, args.verbose))?;
    }
    Ok(report.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(v) => cmd_verify(v),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
