//! `dcat`: parse presentations, build free truncations, run the projection
//! and adjunction audits, and emit deterministic reports.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dcat_core::adjunction::{faithfulness_probe, triangle_identities, FaithfulnessVerdict, FAITHFULNESS_THRESHOLD};
use dcat_core::doublecat::{h_star, length};
use dcat_core::freeggd::{build_layers, free_length_evidence, parse_term, Bounds, FreeTruncation, Generator, Signature, UniverseError};
use dcat_core::presentations::{parse_document, render, DecoratedBicategory, DoubleCategory, Presentation};
use dcat_core::projection::*;

#[derive(Parser, Debug)]
#[command(name = "dcat", version, about = "Free globularly generated double categories and canonical projections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Truncation depth.
    #[arg(long, default_value_t = 2, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    depth: u64,
    /// Maximal number of generators in an enumerated term.
    #[arg(long = "word-bound", default_value_t = 4, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    word_bound: u64,
    /// Bound on the filtration of a finite double category.
    #[arg(long, default_value_t = 8, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    kmax: u64,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Free truncation of a decorated bicategory.
    Build { file: PathBuf },
    /// Projection and adjunction audits for B and C with H*C = B.
    Audit {
        b: PathBuf,
        c: PathBuf,
        /// Exchange the anchors of two generators, named by 2-cell or
        /// decoration morphism, e.g. `a0,a1`.
        #[arg(long)]
        swap: Option<String>,
    },
    /// Length of double categories and length evidence of decorated bicategories.
    Length { files: Vec<PathBuf> },
    /// π^C of one term, given inline or as a `.term` file.
    Project { b: PathBuf, c: PathBuf, term: String },
    /// Axiom checks on every block of a file.
    Validate { file: PathBuf },
    /// Canonical serialization of the last block of a file.
    Render { file: PathBuf },
}

/// A run outcome: exit code and either a report or a raw text body.
enum Outcome {
    Report(u8, Value),
    Raw(String),
}

struct Failure(u8, String);

const PASS: u8 = 0;
const AUDIT_FAIL: u8 = 1;
const INPUT_ERROR: u8 = 2;
const HYPOTHESIS: u8 = 3;

fn input(msg: impl Into<String>) -> Failure {
    Failure(INPUT_ERROR, msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { INPUT_ERROR } else { PASS };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(Outcome::Report(code, v)) => {
            let v = with_config(&cli, v);
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&v).expect("json")),
                Format::Text => print!("{}", text(&v)),
            }
            ExitCode::from(code)
        }
        Ok(Outcome::Raw(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn bounds(cli: &Cli) -> Bounds {
    Bounds { depth: cli.depth as usize, word: cli.word_bound as usize, ..Default::default() }
}

fn with_config(cli: &Cli, mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("seed".into(), json!(cli.seed));
        m.entry("bounds").or_insert_with(|| serde_json::to_value(bounds(cli)).expect("json"));
        m.insert("kmax".into(), json!(cli.kmax));
    }
    v
}

/// `path = value` lines in key order.
fn text(v: &Value) -> String {
    fn go(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    go(&if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") }, x, out);
                }
            }
            Value::Array(xs) if !xs.is_empty() => {
                for (i, x) in xs.iter().enumerate() {
                    go(&format!("{prefix}[{i}]"), x, out);
                }
            }
            x => out.push_str(&format!("{prefix} = {x}\n")),
        }
    }
    let mut out = String::new();
    go("", v, &mut out);
    out
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

/// The last block of a `.dcat` file.
fn load(path: &Path) -> Result<(String, Presentation), Failure> {
    let doc = parse_document(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))?;
    doc.blocks.into_iter().last().ok_or_else(|| input(format!("{}: empty document", path.display())))
}

fn load_decorated(path: &Path) -> Result<DecoratedBicategory, Failure> {
    match load(path)? {
        (_, Presentation::Decorated(b)) => checked(path, Presentation::Decorated(b.clone())).map(|_| b),
        (name, _) => Err(input(format!("{}: block {name} is not a decorated bicategory", path.display()))),
    }
}

fn load_double(path: &Path) -> Result<DoubleCategory, Failure> {
    match load(path)? {
        (_, Presentation::Double(c)) => checked(path, Presentation::Double(c.clone())).map(|_| c),
        (name, _) => Err(input(format!("{}: block {name} is not a double category", path.display()))),
    }
}

fn checked(path: &Path, p: Presentation) -> Result<(), Failure> {
    let r = p.validate();
    match r.violations.first() {
        None => Ok(()),
        Some(v) => Err(input(format!("{}: {} fails at {:?}", path.display(), v.law, v.witness))),
    }
}

fn universe_error(e: UniverseError) -> Failure {
    input(e.to_string())
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Render { file } => {
            let (name, p) = load(file)?;
            Ok(Outcome::Raw(render(&name, &p)))
        }
        Command::Build { file } => build(cli, file),
        Command::Length { files } => length_cmd(cli, files),
        Command::Project { b, c, term } => project(b, c, term),
        Command::Audit { b, c, swap } => audit(cli, b, c, swap.as_deref()),
    }
}

fn validate(file: &Path) -> Result<Outcome, Failure> {
    let doc = parse_document(&read(file)?).map_err(|e| input(format!("{}: {e}", file.display())))?;
    let mut blocks = serde_json::Map::new();
    let mut all = true;
    for (name, p) in &doc.blocks {
        let r = p.validate();
        all &= r.is_valid();
        blocks.insert(name.clone(), json!({ "valid": r.is_valid(), "violations": r.violations }));
    }
    Ok(Outcome::Report(if all { PASS } else { AUDIT_FAIL }, json!({ "blocks": blocks, "valid": all })))
}

fn build(cli: &Cli, file: &Path) -> Result<Outcome, Failure> {
    let b = load_decorated(file)?;
    let sig = Signature::new(&b).map_err(|e| input(e.to_string()))?;
    let u = build_layers(&sig, bounds(cli)).map_err(universe_error)?;
    let tr = FreeTruncation::from_universe(&sig, &u);
    let reps: Vec<Value> =
        tr.reps.iter().map(|r| json!({ "term": r.term.render(&sig), "h_layer": r.h_layer, "v_layer": r.v_layer })).collect();
    let report = json!({
        "bounds": u.bounds,
        "universe": { "terms": u.len(), "layers": u.layers },
        "truncation": { "squares": tr.len(), "layers": tr.layers, "incomplete": tr.incomplete, "representatives": reps },
    });
    Ok(Outcome::Report(PASS, report))
}

fn length_cmd(cli: &Cli, files: &[PathBuf]) -> Result<Outcome, Failure> {
    if files.is_empty() {
        return Err(input("length needs at least one file"));
    }
    let (mut lc, mut lb) = (None, None);
    let mut entries = serde_json::Map::new();
    for f in files {
        let (name, p) = load(f)?;
        checked(f, p.clone())?;
        match p {
            Presentation::Double(c) => {
                let l = length(&c, cli.kmax as usize).value();
                lc = Some(l);
                entries.insert(name, json!({ "kind": "double", "length": l }));
            }
            Presentation::Decorated(b) => {
                let sig = Signature::new(&b).map_err(|e| input(e.to_string()))?;
                let u = build_layers(&sig, bounds(cli)).map_err(universe_error)?;
                let ev = free_length_evidence(&sig, &u);
                lb = Some(ev.consistent_with_length);
                entries.insert(name, json!({ "kind": "decorated", "evidence": ev }));
            }
            _ => return Err(input(format!("{}: block {name} has no length", f.display()))),
        }
    }
    let mut report = json!({ "inputs": entries });
    let mut code = PASS;
    if let (Some(c), Some(b)) = (lc, lb) {
        let holds = c.is_some_and(|c| c <= b);
        report["length_bounded_by_evidence"] = json!(holds);
        if !holds {
            code = AUDIT_FAIL;
        }
    }
    Ok(Outcome::Report(code, report))
}

fn context(b: &Path, c: &Path) -> Result<ProjectionContext, Failure> {
    let (b, c) = (load_decorated(b)?, load_double(c)?);
    ProjectionContext::new(&b, &c).map_err(|e| match e {
        ProjectionError::Hypothesis(_) => Failure(HYPOTHESIS, format!("out-of-hypothesis: {e}")),
        e => input(e.to_string()),
    })
}

fn project(b: &Path, c: &Path, term: &str) -> Result<Outcome, Failure> {
    let ctx = context(b, c)?;
    let src = if term.ends_with(".term") { read(Path::new(term))? } else { term.to_string() };
    let t = parse_term(&ctx.sig, src.trim()).map_err(|e| input(e.to_string()))?;
    let square = ctx.project(&t).map_err(|e| input(e.to_string()))?;
    let frame = ctx.target.frame(&square).cloned();
    Ok(Outcome::Report(PASS, json!({ "term": t.render(&ctx.sig), "square": square, "frame": frame })))
}

fn generator(sig: &Signature, name: &str) -> Option<Generator> {
    let name = name.trim();
    sig.cell2_index(name).map(Generator::Glob).or_else(|| sig.dmor_index(name).map(Generator::HId))
}

fn audit(cli: &Cli, b: &Path, c: &Path, swap: Option<&str>) -> Result<Outcome, Failure> {
    let base = load_decorated(b)?;
    let target = load_double(c)?;
    if h_star(&target) != base && h_star(&dcat_core::doublecat::gamma(&target)) != base {
        return Ok(Outcome::Report(HYPOTHESIS, json!({ "verdict": "out-of-hypothesis", "reason": "H*C and H*γC differ from B" })));
    }
    let mut ctx = context(b, c)?;
    if let Some(s) = swap {
        let (x, y) = s.split_once(',').ok_or_else(|| input("--swap expects two names separated by a comma"))?;
        let gx = generator(&ctx.sig, x).ok_or_else(|| input(format!("unknown generator {x}")))?;
        let gy = generator(&ctx.sig, y).ok_or_else(|| input(format!("unknown generator {y}")))?;
        ctx = ctx.with_swapped(gx, gy);
    }
    let u = build_layers(&ctx.sig, bounds(cli)).map_err(universe_error)?;
    let tr = FreeTruncation::from_universe(&ctx.sig, &u);
    let strict = audit_strictness(&ctx, &u, &tr);
    let norm = audit_normalization(&ctx, &u);
    let surj = audit_surjectivity(&ctx, &u, cli.depth as usize);
    let uniq = audit_uniqueness(&ctx, &u, &ReverseFold::agreeing_with(&ctx)).map_err(|e| input(e.to_string()))?;
    let restr = h_star_restriction_check(&ctx);
    let compositions = tr.check_compositions(&u, 1000, cli.seed);
    let tri = triangle_identities(&ctx, &u);
    let faith = faithfulness_probe(&ctx.target, &ctx.target, FAITHFULNESS_THRESHOLD, 10_000, cli.seed);
    let verdict = |ok: bool| if ok { "pass" } else { "fail" };
    let checks = [
        ("strictness", strict.strict),
        ("normalization", norm.mismatches.is_empty()),
        ("surjectivity", surj.surjective_up_to >= cli.depth as usize),
        ("uniqueness", matches!(uniq, Uniqueness::Equal { .. })),
        ("restriction", restr.holds),
        ("compositions", compositions.is_empty()),
        ("triangle1", tri.triangle1 == "pass"),
        ("triangle2", tri.triangle2 == "pass"),
        ("faithfulness", faith.verdict != FaithfulnessVerdict::Fail),
    ];
    let all = checks.iter().all(|(_, ok)| *ok);
    let summary: serde_json::Map<String, Value> = checks.iter().map(|(k, ok)| (k.to_string(), json!(verdict(*ok)))).collect();
    let report = json!({
        "bounds": u.bounds,
        "verdict": verdict(all),
        "summary": summary,
        "gamma_substituted": ctx.gamma_substituted,
        "universe_terms": u.len(),
        "truncation_squares": tr.len(),
        "strictness": strict,
        "normalization": norm,
        "surjectivity": surj,
        "uniqueness": uniq,
        "restriction": restr,
        "compositions": compositions,
        "adjunction": tri,
        "faithfulness": faith,
    });
    Ok(Outcome::Report(if all { PASS } else { AUDIT_FAIL }, report))
}
