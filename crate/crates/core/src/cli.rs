//! The `shifted-chains` command line: argument definitions and command
//! implementations. Exit codes: 0 on success, 1 on a verification
//! mismatch, 2 on usage, parse or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bijections::{classify_via_theta, theta, theta_inv, ThetaContext};
use crate::error::{Error, Result};
use crate::formulas::{
    f_by_tableaux, f_recursive, i_count, j_count, multichain_counts, prop2_rhs, prop3_rhs, saturated_count, v_count,
};
use crate::lattice::{classify_multichain, degree, degree_formula, Multichain};
use crate::oracles::{
    enumerate_interval, enumerate_min_chains, enumerate_multichains, enumerate_tableaux, enumerate_type_v_brute,
    f_bruteforce,
};
use crate::paths::{parse_path, Path};
use crate::render::{render, render_labelled_path, Figure, FigureFormat};
use crate::report::{Report, Status};
use crate::tableaux::{Shape, ShiftedTableau, TableauClass};
use crate::verify::{run_suites, Suite, VerifyOptions};

/// Environment variable overriding the enumeration cap.
pub const MAX_N_ENV: &str = "SHIFTED_CHAINS_MAX_N";
pub const DEFAULT_MAX_N: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "shifted-chains", version, about = "Chains of binary paths and shifted tableaux")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Statistics of a path: heights, valleys, degree, shape, f and saturated count.
    Analyze(AnalyzeArgs),
    /// A single count.
    Count(CountArgs),
    /// Multichain to tableau or back.
    Convert(ConvertArgs),
    /// Exhaustive cross-checks against the reference enumerations.
    Verify(VerifyArgs),
    /// SVG or TikZ picture of a path, tableau or multichain.
    Figure(FigureArgs),
    /// List the objects behind a count.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Table,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    pub format: ReportFormat,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub path: String,
    /// Also compute f by brute force and by recursion.
    #[arg(long)]
    pub cross_check: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    /// f(P) from increasing tableaux.
    F,
    /// f(P) by breadth-first search over small steps.
    FBrute,
    /// f(P) by the product rules and the two sums, with the reduction trace.
    FRecursive,
    Saturated,
    /// Multichains P = ... = P_{μ-1} < P_μ <= ... <= P_k = u^n.
    Multichains,
    /// |[a, u^m d^m]|.
    I,
    /// |[P, u^n]|.
    J,
    /// Type-V multichains from --path to --to.
    V,
    /// The prime sum over the Dyck path --path.
    Prop2,
    /// The prefix sum over the Dyck prefix --path.
    Prop3,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub kind: CountKind,
    #[arg(long)]
    pub path: String,
    #[arg(long)]
    pub to: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub mu: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    ChainToTableau,
    TableauToChain,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    #[arg(long, value_enum)]
    pub direction: Direction,
    /// Multichain text (one word per line) or tableau JSON; standard input if omitted or `-`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Length of the multichain; required for tableau-to-chain.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    pub format: ReportFormat,
    /// Write the converted multichain or tableau to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    /// Suite to run (repeatable); all suites if omitted.
    #[arg(long = "suite")]
    pub suites: Vec<String>,
    /// Largest multichain length checked by the theta suite.
    #[arg(long, default_value_t = 4)]
    pub k: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectKind {
    Path,
    Tableau,
    Multichain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FigureKind {
    Svg,
    Tikz,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    #[arg(long, value_enum)]
    pub object: ObjectKind,
    /// The path word, for `--object path`.
    #[arg(long)]
    pub path: Option<String>,
    /// Tableau JSON or multichain text; standard input if omitted or `-`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Tableau JSON whose entries label the cells of `--path`.
    #[arg(long)]
    pub labels: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: FigureKind,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumerateKind {
    /// Paths between --path and --to.
    Interval,
    /// Minimum-length small-interval chains from --path to the top.
    MinChains,
    /// Multichains of length --k from --path to the top.
    Multichains,
    /// Type-V multichains from the Dyck path --path.
    TypeV,
    /// Tableaux of --shape.
    Tableaux,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Weak,
    Increasing,
    Standard,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    pub kind: EnumerateKind,
    #[arg(long)]
    pub path: Option<String>,
    #[arg(long)]
    pub to: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Strict partition, e.g. `6,4,1`.
    #[arg(long)]
    pub shape: Option<String>,
    #[arg(long, value_enum, default_value_t = ClassArg::Increasing)]
    pub class: ClassArg,
    #[arg(long)]
    pub max: Option<u32>,
    /// Require the maximum entry to equal --max.
    #[arg(long)]
    pub exact: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// What a command produced: text for standard output (or `--out`) and the
/// exit code.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub out: Option<PathBuf>,
    pub exit_code: i32,
    /// Extra lines for standard error.
    pub diagnostics: Vec<String>,
}

/// The enumeration cap: `SHIFTED_CHAINS_MAX_N` when set, otherwise 12.
pub fn max_n_cap() -> Result<usize> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{} must be a non-negative integer, found {:?}", MAX_N_ENV, v))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_cap(what: &'static str, size: usize) -> Result<()> {
    let limit = max_n_cap()?;
    if size > limit {
        return Err(Error::LimitExceeded { what, size, limit });
    }
    Ok(())
}

fn word(text: &str) -> Result<Path> {
    match text.trim() {
        "ε" => Ok(Path::empty()),
        w => parse_path(w),
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {}", p.display(), e))),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Io(e.to_string()))?;
            Ok(s)
        }
    }
}

/// A tableau from `{"shape": .., "rows": ..}` or a bare array of rows.
pub fn parse_tableau(text: &str) -> Result<ShiftedTableau> {
    ShiftedTableau::from_json(text).or_else(|first| match serde_json::from_str::<Vec<Vec<u32>>>(text) {
        Ok(rows) => ShiftedTableau::new(rows),
        Err(_) => Err(first),
    })
}

fn parse_shape(text: &str) -> Result<Shape> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    let parts = trimmed
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("invalid part {:?} in shape {:?}", s, text))))
        .collect::<Result<Vec<_>>>()?;
    Shape::new(parts)
}

fn render_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Table => report.to_table(),
    }
}

fn finish(mut report: Report, started: Instant, output: &OutputArgs) -> Outcome {
    report.set_elapsed(started.elapsed());
    Outcome {
        text: render_report(&report, output.format),
        out: output.out.clone(),
        exit_code: report.status.exit_code(),
        diagnostics: Vec::new(),
    }
}

fn join_points(points: impl Iterator<Item = (usize, i32)>) -> String {
    points.map(|(x, y)| format!("({},{})", x, y)).collect::<Vec<_>>().join(" ")
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> Result<Outcome> {
    let started = Instant::now();
    let p = word(&args.path)?;
    if args.cross_check {
        check_cap("path length", p.len())?;
    }
    let mut r = Report::new("analyze");
    r.input("path", &p);
    let heights: Vec<String> = p.heights().as_slice().iter().map(|h| h.to_string()).collect();
    let profile = p.valley_peak_profile();
    let class = p.classify();
    let stripped = p.strip_leading_ups();
    r.result("n", p.len())
        .result("ups", p.ups())
        .result("downs", p.downs())
        .result("heights", heights.join(","))
        .result("valleys", join_points(profile.valleys.iter().map(|v| (v.position, v.height))))
        .result("peaks", join_points(profile.peaks.iter().map(|v| (v.position, v.height))))
        .result("lv", p.lv().map_or("none".to_string(), |v| v.to_string()))
        .result("hv", p.hv().map_or("none".to_string(), |v| v.to_string()))
        .result("is_dyck", class.is_dyck)
        .result("is_dyck_prefix", class.is_dyck_prefix)
        .result("is_dyck_suffix", class.is_dyck_suffix)
        .result("delta", degree_formula(&p))
        .result("delta_iterated", degree(&p))
        .result("first_ascent", p.len() - stripped.len());
    let shape = if stripped.is_empty() { Shape::default() } else { Shape::of_path(&stripped)? };
    r.result("shape", &shape).result("f", f_by_tableaux(&p));
    if args.cross_check {
        let brute = f_bruteforce(&p).value;
        let rec = f_recursive(&p).value;
        let tab = f_by_tableaux(&p);
        let agree = brute == tab && tab == rec;
        r.result("f_bruteforce", &brute).result("f_recursive", &rec).result("f_agree", agree);
        if !agree {
            r.status = Status::Mismatch;
        }
    }
    r.result("saturated", saturated_count(&p).map_or("n/a".to_string(), |c| c.to_string()));
    Ok(finish(r, started, &args.output))
}

fn require<T: Copy>(value: Option<T>, flag: &str, kind: &str) -> Result<T> {
    value.ok_or_else(|| Error::Parse(format!("--{} is required for {}", flag, kind)))
}

pub fn cmd_count(args: &CountArgs) -> Result<Outcome> {
    let started = Instant::now();
    let p = word(&args.path)?;
    let mut r = Report::new("count");
    r.input("kind", args.kind.to_possible_value().expect("no skipped variants").get_name()).input("path", &p);
    let value = match args.kind {
        CountKind::F => f_by_tableaux(&p),
        CountKind::FBrute => {
            check_cap("path length", p.len())?;
            f_bruteforce(&p).value
        }
        CountKind::FRecursive => {
            let res = f_recursive(&p);
            let trace = serde_json::to_string(&res.trace).expect("traces serialize");
            r.result("trace", trace);
            res.value
        }
        CountKind::Saturated => saturated_count(&p)?,
        CountKind::Multichains => {
            let k = require(args.k, "k", "multichains")?;
            let mu = require(args.mu, "mu", "multichains")?;
            r.input("k", k).input("mu", mu);
            multichain_counts(&p, k, mu)?
        }
        CountKind::I => i_count(&p)?,
        CountKind::J => j_count(&p),
        CountKind::V => {
            let to = word(args.to.as_deref().ok_or_else(|| Error::Parse("--to is required for v".into()))?)?;
            r.input("to", &to);
            v_count(&p, &to)?
        }
        CountKind::Prop2 => prop2_rhs(&p)?,
        CountKind::Prop3 => prop3_rhs(&p)?,
    };
    r.result("value", value);
    Ok(finish(r, started, &args.output))
}

pub fn cmd_convert(args: &ConvertArgs) -> Result<Outcome> {
    let started = Instant::now();
    let text = read_input(args.input.as_ref())?;
    let mut r = Report::new("convert");
    r.input("direction", match args.direction {
        Direction::ChainToTableau => "chain-to-tableau",
        Direction::TableauToChain => "tableau-to-chain",
    });
    let (chain, tableau, payload) = match args.direction {
        Direction::ChainToTableau => {
            let c = Multichain::parse_text(&text)?;
            let t = theta(&c)?;
            let payload = t.to_json() + "\n";
            (c, t, payload)
        }
        Direction::TableauToChain => {
            let k = require(args.k, "k", "tableau-to-chain")?;
            let t = parse_tableau(&text)?;
            let c = theta_inv(&t, k)?;
            let payload = c.to_text();
            (c, t, payload)
        }
    };
    let k = chain.length();
    let ctx = ThetaContext::new(chain.bottom().clone(), k)?;
    let from_tableau = classify_via_theta(&tableau, k)?;
    let from_chain = classify_multichain(&chain, true)?;
    r.input("k", k)
        .result("bottom", chain.bottom())
        .result("shape", tableau.shape())
        .result("tableau", tableau.to_json())
        .result("multichain", chain.paths().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "))
        .result("max", tableau.max_entry())
        .result("repeated_bottoms", ctx.repeated_bottoms(&tableau)?)
        .result("tableau.entries_form_interval", from_tableau.is_chain)
        .result("tableau.increasing", from_tableau.small_intervals)
        .result("tableau.standard_interval", from_tableau.is_saturated)
        .result("chain.is_chain", from_chain.is_chain)
        .result("chain.small_intervals", from_chain.small_intervals)
        .result("chain.saturated", from_chain.is_saturated);
    if let Some(out) = &args.out {
        fs::write(out, &payload).map_err(|e| Error::Io(format!("{}: {}", out.display(), e)))?;
        r.result("written", out.display());
    }
    r.set_elapsed(started.elapsed());
    Ok(Outcome { text: render_report(&r, args.format), out: None, exit_code: 0, diagnostics: Vec::new() })
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let started = Instant::now();
    check_cap("--max-n", args.max_n)?;
    let suites = if args.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.suites.iter().map(|s| s.parse()).collect::<Result<Vec<Suite>>>()?
    };
    let mut r = Report::new("verify");
    r.input("max_n", args.max_n).input("k", args.k);
    let options = VerifyOptions { max_n: args.max_n, max_k: Some(args.k) };
    let mut diagnostics = Vec::new();
    for outcome in run_suites(&suites, &options) {
        let name = outcome.suite.name();
        r.result(&format!("{}.instances", name), outcome.instances);
        match &outcome.counterexample {
            None => {
                r.result(&format!("{}.result", name), "pass");
            }
            Some(ce) => {
                r.result(&format!("{}.result", name), "fail");
                r.result(&format!("{}.counterexample", name), ce);
                diagnostics.push(format!("{}: counterexample: {}", name, ce));
                r.status = Status::Mismatch;
            }
        }
    }
    let mut outcome = finish(r, started, &args.output);
    outcome.diagnostics = diagnostics;
    Ok(outcome)
}

pub fn cmd_figure(args: &FigureArgs) -> Result<Outcome> {
    let format = match args.format {
        FigureKind::Svg => FigureFormat::Svg,
        FigureKind::Tikz => FigureFormat::Tikz,
    };
    let text = match args.object {
        ObjectKind::Path => {
            let p = word(args.path.as_deref().ok_or_else(|| Error::Parse("--path is required for a path figure".into()))?)?;
            match &args.labels {
                Some(file) => {
                    let t = parse_tableau(&read_input(Some(file))?)?;
                    let expected = Shape::of_path(&p.strip_leading_ups())?;
                    if t.shape() != &expected {
                        return Err(Error::InvalidShape(format!("labels have shape {} but λ({}) = {}", t.shape(), p, expected)));
                    }
                    render_labelled_path(&p, &t, format)
                }
                None => render(&Figure::Path(&p), format),
            }
        }
        ObjectKind::Tableau => render(&Figure::Tableau(&parse_tableau(&read_input(args.input.as_ref())?)?), format),
        ObjectKind::Multichain => {
            render(&Figure::Multichain(&Multichain::parse_text(&read_input(args.input.as_ref())?)?), format)
        }
    };
    Ok(Outcome { text, out: args.out.clone(), exit_code: 0, diagnostics: Vec::new() })
}

pub fn cmd_enumerate(args: &EnumerateArgs) -> Result<Outcome> {
    let path = |flag: &str| -> Result<Path> {
        let p = word(args.path.as_deref().ok_or_else(|| Error::Parse(format!("--path is required for {}", flag)))?)?;
        check_cap("path length", p.len())?;
        Ok(p)
    };
    let items: Vec<String> = match args.kind {
        EnumerateKind::Interval => {
            let p = path("interval")?;
            let q = word(args.to.as_deref().ok_or_else(|| Error::Parse("--to is required for interval".into()))?)?;
            enumerate_interval(&p, &q)?.iter().map(|r| r.to_string()).collect()
        }
        EnumerateKind::MinChains => enumerate_min_chains(&path("min-chains")?).iter().map(Multichain::to_text).collect(),
        EnumerateKind::Multichains => {
            let p = path("multichains")?;
            let k = require(args.k, "k", "multichains")?;
            enumerate_multichains(&p, k).iter().map(Multichain::to_text).collect()
        }
        EnumerateKind::TypeV => {
            enumerate_type_v_brute(&path("type-v")?)?.iter().map(|(b, c)| format!("# {}\n{}", display_word(b), c.to_text())).collect()
        }
        EnumerateKind::Tableaux => {
            let shape = parse_shape(args.shape.as_deref().ok_or_else(|| Error::Parse("--shape is required for tableaux".into()))?)?;
            check_cap("shape size", shape.first_row())?;
            let class = match args.class {
                ClassArg::Weak => TableauClass::Weak,
                ClassArg::Increasing => TableauClass::Increasing,
                ClassArg::Standard => TableauClass::Standard,
            };
            let max = match class {
                TableauClass::Standard => 0,
                _ => require(args.max, "max", "weak and increasing tableaux")?,
            };
            enumerate_tableaux(&shape, class, max, args.exact).iter().map(ShiftedTableau::to_json).collect()
        }
    };
    let text = match args.output.format {
        ReportFormat::Table => {
            let sep = if matches!(args.kind, EnumerateKind::Interval | EnumerateKind::Tableaux) { "\n" } else { "\n\n" };
            let mut s: String = items.iter().map(|i| i.trim_end().to_string()).collect::<Vec<_>>().join(sep);
            if !s.is_empty() {
                s.push('\n');
            }
            s
        }
        ReportFormat::Json => {
            let value = serde_json::json!({ "count": items.len().to_string(), "items": items });
            serde_json::to_string_pretty(&value).expect("listings serialize") + "\n"
        }
    };
    Ok(Outcome { text, out: args.output.out.clone(), exit_code: 0, diagnostics: Vec::new() })
}

fn display_word(p: &Path) -> String {
    if p.is_empty() {
        "ε".to_string()
    } else {
        p.to_string()
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Count(a) => cmd_count(a),
        Command::Convert(a) => cmd_convert(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Figure(a) => cmd_figure(a),
        Command::Enumerate(a) => cmd_enumerate(a),
    }
}

/// Parses the arguments, runs the command, writes its output and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            for line in &outcome.diagnostics {
                eprintln!("{}", line);
            }
            match &outcome.out {
                Some(file) => {
                    if let Err(e) = fs::write(file, &outcome.text) {
                        eprintln!("error: {}: {}", file.display(), e);
                        return 2;
                    }
                }
                None => print!("{}", outcome.text),
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("shifted-chains").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn analyze_reports_the_expected_statistics() {
        let out = execute(&parse(&["analyze", "--path", "duduud", "--format", "json"])).unwrap();
        let json: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(json["results"]["delta"], "6");
        assert_eq!(json["results"]["shape"], "(6,4,1)");
        assert_eq!(json["results"]["saturated"], "198");
        let out = execute(&parse(&["analyze", "--path", "uuuu", "--format", "json", "--cross-check"])).unwrap();
        let json: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(json["results"]["delta"], "0");
        assert_eq!(json["results"]["f"], "1");
        assert_eq!(json["results"]["f_agree"], "true");
        assert!(matches!(execute(&parse(&["analyze", "--path", "abc"])), Err(Error::InvalidStep { .. })));
    }

    #[test]
    fn verify_rejects_sizes_beyond_the_cap() {
        let err = execute(&parse(&["verify", "--max-n", "99"])).unwrap_err();
        assert!(matches!(err, Error::LimitExceeded { .. }));
    }

    #[test]
    fn shapes_parse() {
        assert_eq!(parse_shape("6,4,1").unwrap().parts(), &[6, 4, 1]);
        assert_eq!(parse_shape("(2,1)").unwrap().parts(), &[2, 1]);
        assert!(parse_shape("2,2").is_err());
        assert_eq!(parse_tableau("[[1]]").unwrap().rows(), &[vec![1]]);
    }
}
