//! The `ptg` command line: argument types and a `run` that turns a command
//! into an exit code and `key: value` report lines.
//!
//! Exit codes: 0 the property holds (or the artifact was produced), 1 it fails
//! with a witness, 2 parse or validation error, 3 unknown within the budget or
//! vertex cap.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use ptg_core::colouring::{solve, verify_matchings, DEFAULT_BUDGET};
use ptg_core::discharging::{charge_label, DischargeError};
use ptg_core::format::{emit_colouring, parse_colouring};
use ptg_core::planar::Graph;
use ptg_core::structure::{detect_all, detect_conf, region_label, PrimeVerdict, Structure, StructureError};
use ptg_core::switching::{switch_on_path, Chord, SwitchError, Switched};
use ptg_core::target::{set_label, validate_target, Verdict};
use ptg_core::{
    discharge, emit_target, find_guenin_cut, is_prime, parse_ptg, verify_guenin_cut, Colouring, PtgDocument,
    SolveOptions, SolveOutcome, SwitchSpec, Target, TargetError, DEFAULT_ODD_SET_CAP,
};

#[derive(Parser, Debug)]
#[command(
    name = "ptg",
    version,
    about = "Plane d-targets: colouring, configurations, discharging, switching"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the degree and odd-cut axioms
    Validate { file: PathBuf },
    /// Vertex count and score sequence
    Score { file: PathBuf },
    /// Search for a d-edge-colouring (non-planar graphs are accepted)
    #[command(alias = "color")]
    Colour {
        file: PathBuf,
        /// Search nodes before answering unknown [default: PTG_BUDGET or 5000000]
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check `matching <k>:` lines against a target; COLOURING may be `-`
    Verify { file: PathBuf, colouring: PathBuf },
    /// List reducible configurations
    Scan {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=16))]
        conf: Option<u8>,
    },
    /// Region charges of a 7-target
    Discharge { file: PathBuf },
    /// Decide whether a 7-target is prime
    Prime { file: PathBuf },
    /// Switch on the path x-u-v-y
    Switch {
        file: PathBuf,
        #[command(flatten)]
        path: PathArgs,
        /// Write the switched target here (`-` for stdout, replacing the report)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Switch on x-u-v-y and search for a cut certificate for one colour class
    Cuts {
        file: PathBuf,
        #[command(flatten)]
        path: PathArgs,
        /// Colour class, counted from 1
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        class: u64,
        /// Colouring of the switched target; solved for when absent
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(clap::Args, Debug)]
pub struct PathArgs {
    pub x: String,
    pub u: String,
    pub v: String,
    pub y: String,
    /// Region for a new chord xy, as its comma-separated boundary vertices
    #[arg(long)]
    pub region: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Code {
    Holds = 0,
    Fails = 1,
    Invalid = 2,
    Unknown = 3,
}

/// What a command prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: Code,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Default)]
struct Report {
    lines: Vec<String>,
}

impl Report {
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        self.lines.push(format!("{key}: {value}"));
        self
    }

    // one line per item, sorted
    fn list(&mut self, key: &str, items: impl IntoIterator<Item = String>) -> &mut Self {
        let mut items: Vec<String> = items.into_iter().collect();
        items.sort();
        for i in items {
            self.kv(key, i);
        }
        self
    }

    fn raw(&mut self, text: &str) -> &mut Self {
        self.lines.extend(text.lines().map(str::to_string));
        self
    }

    fn done(&mut self, code: Code) -> Result<(Code, String), Failure> {
        let mut out = self.lines.join("\n");
        out.push('\n');
        Ok((code, out))
    }
}

struct Failure {
    code: Code,
    message: String,
}

fn invalid(message: impl std::fmt::Display) -> Failure {
    Failure {
        code: Code::Invalid,
        message: message.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| invalid(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn document(path: &Path) -> Result<PtgDocument, Failure> {
    parse_ptg(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn target(path: &Path) -> Result<Target, Failure> {
    let doc = document(path)?;
    let at = |e: &dyn std::fmt::Display| format!("{}: {e}", path.display());
    let emb = doc.embedding().map_err(|e| invalid(at(&e)))?;
    let m = doc.multiplicities(emb.graph()).map_err(|e| invalid(at(&e)))?;
    Target::with_cap(emb, doc.d, m, DEFAULT_ODD_SET_CAP).map_err(|e| match e {
        TargetError::CapExceeded { .. } => Failure {
            code: Code::Unknown,
            message: at(&e),
        },
        _ => invalid(at(&e)),
    })
}

// non-planar inputs are fine for colouring
fn graph_and_m(path: &Path) -> Result<(Graph, u32, Vec<u32>), Failure> {
    let doc = document(path)?;
    let g = doc.graph().map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    let m = doc
        .multiplicities(&g)
        .map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    Ok((g, doc.d, m))
}

fn budget(flag: Option<u64>, env: Option<&str>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match env {
        None => Ok(DEFAULT_BUDGET),
        Some(s) => match s.trim().parse::<u64>() {
            Ok(b) if b > 0 => Ok(b),
            _ => Err(invalid(format!("PTG_BUDGET must be a positive integer, got `{s}`"))),
        },
    }
}

fn verdict_line(r: &mut Report, key: &str, v: &Verdict, g: &Graph) {
    match v {
        Verdict::Pass => r.kv(key, "pass"),
        Verdict::Fail(w) => r.kv(key, format!("fail {}", w.describe(g))),
        Verdict::Unchecked(why) => r.kv(key, format!("unchecked {why}")),
    };
}

fn validate(file: &Path) -> Result<(Code, String), Failure> {
    let doc = document(file)?;
    let emb = doc.embedding().map_err(invalid)?;
    let m = doc.multiplicities(emb.graph()).map_err(invalid)?;
    let g = emb.graph();
    let report = validate_target(&emb, doc.d, &m, DEFAULT_ODD_SET_CAP);
    let mut r = Report::default();
    r.kv("vertices", g.vertex_count())
        .kv("edges", g.edge_count())
        .kv("regions", emb.region_count())
        .kv("d", doc.d);
    verdict_line(&mut r, "degree", &report.degree, g);
    verdict_line(&mut r, "odd_cuts", &report.odd_cuts, g);
    let (valid, code) = if report.is_valid() {
        ("yes", Code::Holds)
    } else if report.degree.witness().is_some() || report.odd_cuts.witness().is_some() {
        ("no", Code::Fails)
    } else {
        ("unknown", Code::Unknown)
    };
    r.kv("valid", valid).done(code)
}

fn score(file: &Path) -> Result<(Code, String), Failure> {
    let t = target(file)?;
    Report::default()
        .kv("vertices", t.vertex_count())
        .kv("edges", t.graph().edge_count())
        .kv("d", t.d())
        .kv("total_multiplicity", t.total_multiplicity())
        .kv("score", t.score_sequence())
        .done(Code::Holds)
}

fn colouring_lines(r: &mut Report, g: &Graph, c: &Colouring) {
    r.raw(&emit_colouring(g, c));
}

fn colour(file: &Path, budget: u64) -> Result<(Code, String), Failure> {
    let (g, d, m) = graph_and_m(file)?;
    let mut r = Report::default();
    match solve(&g, d, &m, SolveOptions::with_budget(budget)) {
        SolveOutcome::Colourable(c) => {
            r.kv("colourable", "yes");
            colouring_lines(&mut r, &g, &c);
            r.done(Code::Holds)
        }
        SolveOutcome::NotColourable(why) => r.kv("colourable", "no").kv("reason", why).done(Code::Fails),
        SolveOutcome::Unknown { nodes } => r.kv("colourable", "unknown").kv("nodes", nodes).done(Code::Unknown),
    }
}

fn verify(file: &Path, colouring: &Path) -> Result<(Code, String), Failure> {
    let (g, d, m) = graph_and_m(file)?;
    let text = read(colouring)?;
    let matchings = parse_colouring(&g, &text).map_err(|e| invalid(format!("{}: {e}", colouring.display())))?;
    let report = verify_matchings(&g, d, &m, &matchings);
    let mut r = Report::default();
    if report.passed() {
        return r.kv("colouring", "valid").done(Code::Holds);
    }
    r.kv("colouring", "invalid");
    // failures keep the verifier's order: count, matchings, edges
    for f in &report.failures {
        r.kv("failure", f.describe(&g));
    }
    r.done(Code::Fails)
}

fn structure_error(e: StructureError) -> Failure {
    invalid(e)
}

fn scan(file: &Path, conf: Option<u8>) -> Result<(Code, String), Failure> {
    let t = target(file)?;
    let s = Structure::new(&t).map_err(structure_error)?;
    let matches = match conf {
        Some(k) => detect_conf(&s, k as usize),
        None => detect_all(&s),
    }
    .map_err(structure_error)?;
    let mut r = Report::default();
    if let Some(k) = conf {
        r.kv("conf", k);
    }
    r.kv("matches", matches.len());
    r.list("match", matches.iter().map(|m| m.describe(t.embedding())));
    r.done(if matches.is_empty() { Code::Fails } else { Code::Holds })
}

fn discharge_cmd(file: &Path) -> Result<(Code, String), Failure> {
    let t = target(file)?;
    let report = match discharge(&t) {
        Ok(rep) => rep,
        Err(DischargeError::IdentityViolated { alpha, beta }) => {
            return Report::default()
                .kv("sum_alpha", alpha)
                .kv("sum_beta", beta)
                .kv("identity", "violated")
                .done(Code::Fails)
        }
        Err(e) => return Err(invalid(e)),
    };
    let g = t.graph();
    let emb = t.embedding();
    let mut r = Report::default();
    r.kv("sum_alpha", report.sum_alpha)
        .kv("sum_beta", report.sum_beta)
        .kv("overcharged", report.overcharged().len());
    r.list(
        "region",
        report.regions.iter().map(|c| {
            format!(
                "{} kind={} alpha={} beta={} total={}",
                charge_label(&t, c),
                c.kind.label(),
                c.alpha,
                c.beta,
                c.total()
            )
        }),
    );
    r.list(
        "edge",
        report.edges.iter().map(|e| {
            format!(
                "{} rule={} {}={:+} {}={:+}",
                g.edge_label(e.edge),
                e.rule,
                region_label(emb, e.regions.0),
                e.values.0,
                region_label(emb, e.regions.1),
                e.values.1
            )
        }),
    );
    r.done(Code::Holds)
}

fn prime(file: &Path) -> Result<(Code, String), Failure> {
    let t = target(file)?;
    let verdict = is_prime(&t, DEFAULT_ODD_SET_CAP).map_err(structure_error)?;
    let mut r = Report::default();
    match verdict {
        PrimeVerdict::Prime => r.kv("prime", "yes").done(Code::Holds),
        PrimeVerdict::NotPrime { first, matches } => {
            r.kv("prime", "no")
                .kv("witness", first.describe(t.embedding()))
                .kv("matches", matches.len());
            r.list("match", matches.iter().map(|m| m.describe(t.embedding())));
            r.done(Code::Fails)
        }
        PrimeVerdict::Unknown(why) => r.kv("prime", "unknown").kv("reason", why).done(Code::Unknown),
    }
}

fn spec(t: &Target, p: &PathArgs) -> Result<SwitchSpec, Failure> {
    let region: Option<Vec<&str>> = p.region.as_deref().map(|s| s.split(',').map(str::trim).collect());
    SwitchSpec::from_names(
        t.embedding(),
        [p.x.as_str(), p.u.as_str(), p.v.as_str(), p.y.as_str()],
        region.as_deref(),
    )
    .map_err(invalid)
}

// Ok(Err(..)) is a switch that is rejected with a witness
fn do_switch(t: &Target, p: &PathArgs) -> Result<Result<Switched, (Code, String)>, Failure> {
    let sp = spec(t, p)?;
    match switch_on_path(t, &sp, DEFAULT_ODD_SET_CAP) {
        Ok(s) => Ok(Ok(s)),
        Err(SwitchError::NegativeMultiplicity(e)) => Ok(Err(Report::default()
            .kv("valid", "no")
            .kv("witness", format!("m({e}) would become negative"))
            .done(Code::Fails)?)),
        Err(SwitchError::OddCutViolation { witness, .. }) => Ok(Err(Report::default()
            .kv("valid", "no")
            .kv("witness", witness)
            .done(Code::Fails)?)),
        Err(e @ SwitchError::Target(TargetError::CapExceeded { .. })) => Err(Failure {
            code: Code::Unknown,
            message: e.to_string(),
        }),
        Err(e) => Err(invalid(e)),
    }
}

fn switch_summary(r: &mut Report, before: &Target, s: &Switched) {
    let g = s.target.graph();
    let sw = s.switch;
    let names = [sw.x, sw.u, sw.v, sw.y].map(|v| g.name(v).to_string());
    r.kv("path", names.join("-"));
    match sw.chord {
        Chord::Existing => r.kv("chord", "existing"),
        Chord::New(reg) => r.kv("chord", format!("new in {}", region_label(before.embedding(), reg))),
    };
    let old = before.graph();
    r.list(
        "change",
        sw.edges(g).iter().map(|&e| {
            let edge = g.edge(e);
            let was = old.edge_between(edge.u, edge.v).map_or(0, |f| before.m(f));
            format!("{} {} -> {}", g.edge_label(e), was, s.target.m(e))
        }),
    );
}

fn switch(file: &Path, p: &PathArgs, out: Option<&Path>) -> Result<(Code, String), Failure> {
    let t = target(file)?;
    let s = match do_switch(&t, p)? {
        Ok(s) => s,
        Err(rejected) => return Ok(rejected),
    };
    let text = emit_target(&s.target);
    if out == Some(Path::new("-")) {
        return Ok((Code::Holds, text));
    }
    let mut r = Report::default();
    switch_summary(&mut r, &t, &s);
    r.kv("valid", "yes")
        .kv("vertices", s.target.vertex_count())
        .kv("edges", s.target.graph().edge_count())
        .kv("score", s.target.score_sequence());
    if let Some(path) = out {
        fs::write(path, text).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
        r.kv("written", path.display());
    }
    r.done(Code::Holds)
}

fn cuts(
    file: &Path,
    p: &PathArgs,
    class: usize,
    colouring: Option<&Path>,
    budget: u64,
) -> Result<(Code, String), Failure> {
    let t = target(file)?;
    let s = match do_switch(&t, p)? {
        Ok(s) => s,
        Err(rejected) => return Ok(rejected),
    };
    let g = s.target.graph();
    let mut r = Report::default();
    switch_summary(&mut r, &t, &s);
    let c = match colouring {
        Some(path) => {
            let text = read(path)?;
            let ms = parse_colouring(g, &text).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
            let report = verify_matchings(g, s.target.d(), s.target.multiplicities(), &ms);
            if let Some(f) = report.failures.first() {
                return Err(invalid(format!("{}: {}", path.display(), f.describe(g))));
            }
            Colouring::new(ms)
        }
        None => match ptg_core::solve_colouring(&s.target, SolveOptions::with_budget(budget)) {
            SolveOutcome::Colourable(c) => c,
            SolveOutcome::NotColourable(why) => {
                return r.kv("colourable", "no").kv("reason", why).done(Code::Fails);
            }
            SolveOutcome::Unknown { nodes } => {
                return r.kv("colourable", "unknown").kv("nodes", nodes).done(Code::Unknown);
            }
        },
    };
    let i = class - 1;
    let found = match find_guenin_cut(&s.target, &c, &s.switch, i, DEFAULT_ODD_SET_CAP) {
        Ok(found) => found,
        Err(SwitchError::ExcludedClass(k)) => {
            r.kv("cut", "none")
                .kv("reason", format!("class {k} holds the new chord"));
            colouring_lines(&mut r, g, &c);
            return r.done(Code::Fails);
        }
        Err(e @ SwitchError::Target(TargetError::CapExceeded { .. })) => {
            return Err(Failure {
                code: Code::Unknown,
                message: e.to_string(),
            })
        }
        Err(e) => return Err(invalid(e)),
    };
    r.kv("class", class);
    let code = match found {
        Some(cut) => {
            let report = verify_guenin_cut(&s.target, &c, &s.switch, cut.class, &cut.q, cut.x);
            let mut q: Vec<String> = cut.q.iter().map(|&e| g.edge_label(e)).collect();
            q.sort();
            r.kv("cut", "found")
                .kv("x", format!("{{{}}}", set_label(g, cut.x)))
                .kv("q", q.join(" "))
                .kv(
                    "meets",
                    cut.intersections
                        .iter()
                        .map(|n| n.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                )
                .kv("verify", &report);
            if report.passed() {
                Code::Holds
            } else {
                Code::Fails
            }
        }
        None => {
            r.kv("cut", "none");
            Code::Fails
        }
    };
    colouring_lines(&mut r, g, &c);
    r.done(code)
}

/// Run one command. `budget_env` is the value of `PTG_BUDGET`, if set.
pub fn run(cli: &Cli, budget_env: Option<&str>) -> Output {
    let result = match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Score { file } => score(file),
        Command::Colour { file, budget: b } => budget(*b, budget_env).and_then(|b| colour(file, b)),
        Command::Verify { file, colouring } => verify(file, colouring),
        Command::Scan { file, conf } => scan(file, *conf),
        Command::Discharge { file } => discharge_cmd(file),
        Command::Prime { file } => prime(file),
        Command::Switch { file, path, out } => switch(file, path, out.as_deref()),
        Command::Cuts {
            file,
            path,
            class,
            colouring,
            budget: b,
        } => budget(*b, budget_env).and_then(|b| cuts(file, path, *class as usize, colouring.as_deref(), b)),
    };
    match result {
        Ok((code, stdout)) => Output {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Output {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(name: &str) -> String {
        format!("{}/../core/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    fn run_args(args: &[&str], env: Option<&str>) -> Output {
        let cli = Cli::try_parse_from(std::iter::once("ptg").chain(args.iter().copied())).unwrap();
        run(&cli, env)
    }

    #[test]
    fn budget_resolution() {
        assert_eq!(budget(None, None).ok(), Some(DEFAULT_BUDGET));
        assert_eq!(budget(None, Some(" 12 ")).ok(), Some(12));
        assert_eq!(budget(Some(0), Some("12")).ok(), Some(0));
        assert!(budget(None, Some("0")).is_err());
        assert!(budget(None, Some("-3")).is_err());
    }

    #[test]
    fn lists_are_sorted() {
        let mut r = Report::default();
        r.list("k", ["b".to_string(), "a".to_string()]);
        assert_eq!(r.lines, ["k: a", "k: b"]);
    }

    #[test]
    fn score_of_prism() {
        let out = run_args(&["score", &fixture("prism7.ptg")], None);
        assert_eq!(out.code, Code::Holds);
        assert!(out.stdout.ends_with("score: 0 0 6 3 0 0 0 0\n"), "{}", out.stdout);
    }

    #[test]
    fn colour_alias_and_env_budget() {
        let out = run_args(&["color", &fixture("k4.ptg")], Some("1"));
        // one node is not enough to finish K4
        assert_eq!(out.code, Code::Unknown);
        let out = run_args(&["colour", &fixture("k4.ptg")], None);
        assert_eq!(out.code, Code::Holds);
        assert_eq!(out.stdout.lines().filter(|l| l.starts_with("matching ")).count(), 3);
    }

    #[test]
    fn errors_go_to_stderr() {
        let out = run_args(&["discharge", "/definitely/missing.ptg"], None);
        assert_eq!(out.code, Code::Invalid);
        assert!(out.stdout.is_empty() && out.stderr.starts_with("error: "));
    }
}
