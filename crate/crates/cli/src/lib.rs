//! `deflab` command line. [`dispatch`] is the whole program; `main` only wires
//! it to the process streams.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 usage or input error,
//! 3 precondition or claim failure.

use std::io::{self, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use deflab_core::certifier::{
    bounded_diameter_matching_with, lemma6_induced_matching, lemma6_tight_instance,
    max_induced_matching, pair_classify, structured_matching_with, CertError, PairVerdict,
    Precondition, RejectReason, INDUCED_MATCHING_CAP,
};
use deflab_core::families::{
    catalog, characterization_family, generate, predicted_deficiency, FamilyKind, FamilySpec,
    Variant,
};
use deflab_core::graph::{read_graphs, Graph};
use deflab_core::lab::{enumerate_connected, exhaustive_check};
use deflab_core::matching::deficiency;
use deflab_core::subgraph::{family_leq, is_free, Family, FreeVerdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FAILURE: i32 = 3;

/// Largest `--max-size` accepted by `verify-lemmas`.
pub const MAX_LEMMA_SIZE: usize = 120;

#[derive(Parser, Debug)]
#[command(name = "deflab", version, about = "Matching deficiency workbench")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the parallel commands.
    #[arg(long, global = true, env = "DEFLAB_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph; prints graph6 and its landmarks.
    Gen { spec: String },
    /// Deficiency of each graph.
    Def { graph: String },
    /// Check freeness against family A, family B or a custom family.
    Free {
        graph: String,
        /// `A`, `B`, or a list such as "star(4), T(3), bones".
        #[arg(long)]
        family: String,
        /// Parameter of the A and B families.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Whether every member of F2 contains some member of F1.
    Leq { f1: String, f2: String },
    /// Run a constructive matching procedure and print its report.
    Certify {
        graph: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Diameter)]
        mode: Mode,
        /// Run even when the forbidden-subgraph hypothesis fails.
        #[arg(long)]
        record: bool,
    },
    /// Check the closed-form deficiency formulas on every spec up to a size.
    VerifyLemmas {
        #[arg(long, default_value_t = 18)]
        max_size: usize,
    },
    /// Stream every connected graph of one order as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive deficiency screen over small connected graphs.
    Check {
        #[arg(long)]
        family: String,
        #[arg(long)]
        bound: usize,
        #[arg(long)]
        max_n: usize,
    },
    /// Classify a pair of forbidden graphs.
    Pairs {
        #[arg(long)]
        h1: String,
        #[arg(long)]
        h2: String,
        #[arg(long)]
        d: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    Diameter,
    Structured,
}

enum Fail {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail::Io(e)
    }
}

type Res = Result<i32, Fail>;

fn usage(msg: impl std::fmt::Display) -> Fail {
    Fail::Usage(msg.to_string())
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn dispatch(argv: &[String], out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.jobs {
        Some(0) => Err(usage("--jobs must be positive")),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| run(&cli, out)),
            Err(e) => Err(usage(e)),
        },
        None => run(&cli, out),
    };
    let result = result.and_then(|code| out.flush().map(|_| code).map_err(Fail::Io));
    match result {
        Ok(code) => code,
        Err(Fail::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Fail::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Fail::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn run(cli: &Cli, out: &mut (dyn Write + Send)) -> Res {
    let json = cli.json;
    match &cli.command {
        Command::Gen { spec } => gen(spec, json, out),
        Command::Def { graph } => def(graph, json, out),
        Command::Free { graph, family, n } => free(graph, family, *n, json, out),
        Command::Leq { f1, f2 } => leq(f1, f2, json, out),
        Command::Certify { graph, n, mode, record } => certify(graph, *n, *mode, *record, out),
        Command::VerifyLemmas { max_size } => verify_lemmas(*max_size, json, out),
        Command::Enumerate { n } => enumerate(*n, json, out),
        Command::Check { family, bound, max_n } => check(family, *bound, *max_n, json, out),
        Command::Pairs { h1, h2, d } => pairs(h1, h2, *d, json, out),
    }
}

/// A leading `@` forces a file; otherwise a spec is tried before a path.
fn load_graphs(arg: &str) -> Result<Vec<Graph>, Fail> {
    let read = |path: &str| -> Result<Vec<Graph>, Fail> {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
        let graphs = read_graphs(&text).map_err(|e| usage(format!("{path}: {e}")))?;
        if graphs.is_empty() {
            return Err(usage(format!("{path}: no graphs")));
        }
        Ok(graphs)
    };
    if let Some(path) = arg.strip_prefix('@') {
        return read(path);
    }
    match arg.parse::<FamilySpec>() {
        Ok(spec) => Ok(vec![generate(&spec).graph]),
        Err(spec_err) if !Path::new(arg).exists() => {
            Err(usage(format!("{arg:?} is neither a graph spec ({spec_err}) nor a file")))
        }
        Err(_) => read(arg),
    }
}

fn load_one(arg: &str) -> Result<Graph, Fail> {
    let mut graphs = load_graphs(arg)?;
    if graphs.len() != 1 {
        return Err(usage(format!("{arg}: expected one graph, found {}", graphs.len())));
    }
    Ok(graphs.remove(0))
}

fn parse_family(text: &str, n: Option<usize>) -> Result<Family, Fail> {
    if let Ok(variant) = text.parse::<Variant>() {
        let n = n.ok_or_else(|| usage("--n is required for families A and B"))?;
        let specs = characterization_family(variant, n).map_err(usage)?;
        return Ok(Family::from_specs(&specs));
    }
    text.parse().map_err(usage)
}

fn emit(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    writeln!(out, "{v}")
}

fn gen(spec: &str, json: bool, out: &mut dyn Write) -> Res {
    let spec: FamilySpec = spec.parse().map_err(usage)?;
    let g = generate(&spec);
    let landmarks = serde_json::to_value(&g.landmarks).expect("plain map");
    if json {
        emit(
            out,
            &json!({
                "spec": spec.to_string(),
                "order": g.graph.order(),
                "size": g.graph.size(),
                "graph6": g.graph.to_graph6(),
                "landmarks": landmarks,
            }),
        )?;
    } else {
        writeln!(out, "{}", g.graph.to_graph6())?;
        writeln!(out, "{landmarks}")?;
    }
    Ok(EXIT_OK)
}

fn def(arg: &str, json: bool, out: &mut dyn Write) -> Res {
    let graphs = load_graphs(arg)?;
    let ds: Vec<usize> = graphs.par_iter().map(deficiency).collect();
    if json {
        let rows: Vec<Value> = graphs
            .iter()
            .zip(&ds)
            .map(|(g, d)| json!({"graph6": g.to_graph6(), "order": g.order(), "deficiency": d}))
            .collect();
        emit(out, &Value::Array(rows))?;
    } else {
        for d in ds {
            writeln!(out, "{d}")?;
        }
    }
    Ok(EXIT_OK)
}

fn free(arg: &str, family: &str, n: Option<usize>, json: bool, out: &mut dyn Write) -> Res {
    let fam = parse_family(family, n)?;
    let graphs = load_graphs(arg)?;
    let verdicts: Vec<FreeVerdict> = graphs.par_iter().map(|g| is_free(g, &fam)).collect();
    let all_free = verdicts.iter().all(FreeVerdict::is_free);
    if json {
        let rows: Vec<Value> = verdicts
            .iter()
            .enumerate()
            .map(|(i, v)| match v {
                FreeVerdict::Free => json!({"index": i, "free": true}),
                FreeVerdict::Contains { member, embedding } => {
                    json!({"index": i, "free": false, "member": member, "embedding": embedding})
                }
            })
            .collect();
        emit(out, &Value::Array(rows))?;
    } else {
        for (i, v) in verdicts.iter().enumerate() {
            match v {
                FreeVerdict::Free => writeln!(out, "{i}: free")?,
                FreeVerdict::Contains { member, embedding } => {
                    writeln!(out, "{i}: contains {member} at {:?}", embedding.0)?
                }
            }
        }
    }
    Ok(if all_free { EXIT_OK } else { EXIT_NEGATIVE })
}

fn leq(f1: &str, f2: &str, json: bool, out: &mut dyn Write) -> Res {
    let a: Family = f1.parse().map_err(usage)?;
    let b: Family = f2.parse().map_err(usage)?;
    let v = family_leq(&a, &b).map_err(usage)?;
    if json {
        emit(out, &json!({ "leq": v }))?;
    } else {
        writeln!(out, "{v}")?;
    }
    Ok(if v { EXIT_OK } else { EXIT_NEGATIVE })
}

fn certify(arg: &str, n: usize, mode: Mode, record: bool, out: &mut dyn Write) -> Res {
    let graphs = load_graphs(arg)?;
    let policy = if record { Precondition::Record } else { Precondition::Enforce };
    let mut code = EXIT_OK;
    for g in &graphs {
        let report = match mode {
            Mode::Diameter => bounded_diameter_matching_with(g, n, policy),
            Mode::Structured => structured_matching_with(g, n, policy),
        };
        match report {
            Ok(r) => {
                emit(out, &r.to_json())?;
                if !r.all_pass() {
                    code = EXIT_FAILURE;
                }
            }
            Err(e @ (CertError::BadParams(_) | CertError::TooLarge { .. })) => return Err(usage(e)),
            Err(e) => {
                let witness = match &e {
                    CertError::PreconditionViolated { witness, .. } | CertError::ClaimFailed { witness, .. } => {
                        witness.clone()
                    }
                    _ => Vec::new(),
                };
                emit(out, &json!({"error": e.to_string(), "witness": witness}))?;
                code = EXIT_FAILURE;
            }
        }
    }
    Ok(code)
}

#[derive(Default)]
struct Suite {
    name: &'static str,
    checked: usize,
    mismatches: Vec<String>,
}

fn suite_name(kind: FamilyKind) -> Option<&'static str> {
    Some(match kind {
        FamilyKind::FrakH => "frakH formula",
        FamilyKind::FrakK => "frakK formula",
        FamilyKind::H1 => "H1 odd and even t",
        FamilyKind::H3 | FamilyKind::H4 => "H3 and H4 odd and even t",
        FamilyKind::Star
        | FamilyKind::Path
        | FamilyKind::Cycle
        | FamilyKind::Complete
        | FamilyKind::Empty
        | FamilyKind::CompleteBipartite => "elementary graphs",
        _ => return None,
    })
}

fn verify_lemmas(max_size: usize, json: bool, out: &mut dyn Write) -> Res {
    if max_size > MAX_LEMMA_SIZE {
        return Err(usage(format!("--max-size is capped at {MAX_LEMMA_SIZE}")));
    }
    let names = [
        "frakH formula",
        "frakK formula",
        "H1 odd and even t",
        "H3 and H4 odd and even t",
        "elementary graphs",
        "induced matching tightness",
    ];
    let mut suites: Vec<Suite> = names.iter().map(|&name| Suite { name, ..Suite::default() }).collect();
    let results: Vec<(&str, String, bool)> = catalog(max_size, max_size)
        .par_iter()
        .filter_map(|spec| {
            let name = suite_name(spec.kind())?;
            let predicted = predicted_deficiency(spec)?;
            let actual = deficiency(&generate(spec).graph);
            Some((name, format!("{spec}: predicted {predicted}, computed {actual}"), predicted == actual))
        })
        .collect();
    for (name, line, ok) in results {
        let s = suites.iter_mut().find(|s| s.name == name).expect("known suite");
        s.checked += 1;
        if !ok {
            s.mismatches.push(line);
        }
    }
    let tight = suites.last_mut().expect("tightness suite");
    for n in 1..=max_size {
        for p in 2..=max_size {
            let order = (p - 1) * (n + 1);
            if order > max_size || order > INDUCED_MATCHING_CAP {
                break;
            }
            let inst = lemma6_tight_instance(n, p).expect("valid parameters");
            let nu = max_induced_matching(&inst.graph).expect("within cap");
            let refused = lemma6_induced_matching(&inst.graph, &inst.x, &inst.y, n, p).is_err();
            tight.checked += 1;
            if nu != p - 1 || !refused {
                tight.mismatches.push(format!("tight({n},{p}): induced matching number {nu}"));
            }
        }
    }
    let ok = suites.iter().all(|s| s.mismatches.is_empty());
    if json {
        let rows: Vec<Value> = suites
            .iter()
            .map(|s| json!({"suite": s.name, "checked": s.checked, "mismatches": s.mismatches}))
            .collect();
        emit(out, &Value::Array(rows))?;
    } else {
        for s in &suites {
            let tag = if s.mismatches.is_empty() { "ok" } else { "MISMATCH" };
            writeln!(out, "{tag} {}: {} checked", s.name, s.checked)?;
            for m in &s.mismatches {
                writeln!(out, "  {m}")?;
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE })
}

fn enumerate(n: usize, json: bool, out: &mut dyn Write) -> Res {
    let stream = enumerate_connected(n).map_err(usage)?;
    if json {
        write!(out, "[")?;
        for (i, g) in stream.enumerate() {
            let sep = if i == 0 { "" } else { "," };
            write!(out, "{sep}\n{}", Value::String(g.to_graph6()))?;
        }
        writeln!(out, "\n]")?;
    } else {
        for g in stream {
            writeln!(out, "{}", g.to_graph6())?;
        }
    }
    Ok(EXIT_OK)
}

fn check(family: &str, bound: usize, max_n: usize, json: bool, out: &mut dyn Write) -> Res {
    let fam: Family = family.parse().map_err(usage)?;
    let report = exhaustive_check(&fam, bound, max_n).map_err(usage)?;
    if json {
        emit(out, &serde_json::to_value(&report).expect("plain struct"))?;
    } else {
        writeln!(out, "{}", report.predicate)?;
        writeln!(
            out,
            "{} graphs checked, {} failures, {} ms",
            report.instances_checked,
            report.failures.len(),
            report.wall_time_ms
        )?;
        for f in &report.failures {
            writeln!(out, "{f}")?;
        }
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn verdict_text(v: PairVerdict) -> String {
    match v {
        PairVerdict::Member(s) => format!("Member({s})"),
        PairVerdict::NotMember(RejectReason::Shape) => "NotMember(Shape)".into(),
        PairVerdict::NotMember(RejectReason::SRange { s }) => format!("NotMember(SRange({s}))"),
    }
}

fn pairs(h1: &str, h2: &str, d: usize, json: bool, out: &mut dyn Write) -> Res {
    let (a, b) = (load_one(h1)?, load_one(h2)?);
    let v = pair_classify(&a, &b, d).map_err(usage)?;
    if json {
        emit(out, &json!({"verdict": v, "text": verdict_text(v)}))?;
    } else {
        writeln!(out, "{}", verdict_text(v))?;
    }
    Ok(if matches!(v, PairVerdict::Member(_)) { EXIT_OK } else { EXIT_NEGATIVE })
}
