//! `coloop`: coefficient tables, co-operation expansions, axiom sweeps,
//! series arithmetic and witness reproduction.

mod algebra;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coloop::coloops::{expected, sample_products, sweep, Axiom, CoOpTable, Expectation, Flavor, Kind, Side, Verdict};
use coloop::combinatorics::{bit_sequences, compositions, lagrange_d, lagrange_d_labeled, m_sequences, tree_of_msequence};
use coloop::freealg::NcPoly;
use coloop::operators::{left_rec, right_e_rec, right_op_m, right_rec, symbols};
use coloop::seriesloops::{
    diff_inverse, divide, series_inverse, witness_with_seed, Mode, SeriesFlavor, TruncatedSeries, UCD_SEED,
};
use coloop::algebras::CdElement;
use coloop::{MatCd, MatQ, Q, VERSION, Z};
use serde_json::{json, Value};

use algebra::{emit_series, parse_series, AlgebraSpec, Elem};

#[derive(Parser)]
#[command(name = "coloop", version = VERSION, about = "Exact computations with the loops Inv(A), Diff(A) and their coloop bialgebras")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized checks and searches.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Lagrange coefficients d and labeled coefficients d^e.
    Coeffs {
        #[arg(long, value_enum)]
        kind: CoeffKind,
        #[arg(long)]
        n: u32,
    },
    /// Image of x_n under a co-operation.
    Coop {
        #[arg(long)]
        flavor: Flavor,
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        n: u32,
    },
    /// Expansion of L, R, R_m or R^e on generic arguments of given degrees.
    Operators {
        #[arg(long, value_enum)]
        op: OpKind,
        /// Argument degrees, e.g. 1,2,1.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// M-sequence for R_m.
        #[arg(long, value_delimiter = ',')]
        m: Vec<u32>,
        /// Bit sequence for R^e.
        #[arg(long, value_delimiter = ',')]
        e: Vec<u8>,
    },
    /// Run the coloop axiom battery.
    Verify {
        #[arg(long)]
        flavor: Flavor,
        #[arg(long, default_value_t = 7)]
        max_degree: u32,
        /// Also check the axioms on this many sampled products of generators.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Output format for the report (overrides --format).
        #[arg(long, value_enum)]
        report: Option<Format>,
    },
    /// Divide two truncated series.
    Divide {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long)]
        side: Side,
        #[arg(long, value_enum, default_value_t = ModeArg::Recursive)]
        mode: ModeArg,
        /// Dividend, as series JSON.
        #[arg(long)]
        a: Option<String>,
        /// Divisor, as series JSON.
        #[arg(long)]
        b: Option<String>,
    },
    /// Inverse of a truncated series (two-sided for diff).
    Invert {
        #[command(flatten)]
        series: SeriesArgs,
        /// Required for inv: right gives e/a, left gives a\e.
        #[arg(long)]
        side: Option<Side>,
        #[arg(long)]
        a: Option<String>,
    },
    /// Recompute a stored counterexample.
    Witness {
        name: String,
    },
    /// Planar binary trees of the M-sequences of length l.
    Trees {
        #[arg(long)]
        l: usize,
    },
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long)]
    flavor: SeriesFlavor,
    #[arg(long)]
    order: usize,
    /// free, q, m<k>q, quat, oct, sed, m<k>quat, m<k>oct, m<k>sed.
    #[arg(long, default_value = "free")]
    algebra: AlgebraSpec,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffKind {
    D,
    De,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    L,
    R,
    Rm,
    Re,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Recursive,
    Closed,
}

/// Failure modes mapped to exit codes.
enum Failure {
    /// A verification or witness assertion failed (exit 1).
    Check,
    /// Bad input (exit 2).
    Usage(String),
}

impl From<coloop::Error> for Failure {
    fn from(e: coloop::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<(), Failure>;

struct Out {
    format: Format,
    stdout: io::StdoutLock<'static>,
}

impl Out {
    fn header(&mut self, seed: Option<u64>) -> io::Result<()> {
        match self.format {
            Format::Text => {
                writeln!(self.stdout, "coloop {VERSION}")?;
                if let Some(s) = seed {
                    writeln!(self.stdout, "seed {s}")?;
                }
            }
            // keep CSV parseable
            Format::Csv => {
                eprintln!("coloop {VERSION}");
                if let Some(s) = seed {
                    eprintln!("seed {s}");
                }
            }
            Format::Json => {}
        }
        Ok(())
    }

    fn json(&mut self, command: &str, seed: Option<u64>, mut body: Value) -> io::Result<()> {
        let obj = body.as_object_mut().expect("json bodies are objects");
        obj.insert("version".into(), json!(VERSION));
        obj.insert("command".into(), json!(command));
        if let Some(s) = seed {
            obj.insert("seed".into(), json!(s));
        }
        writeln!(self.stdout, "{}", serde_json::to_string_pretty(&body).expect("serializable"))
    }

    fn csv(&mut self, header: &[&str], rows: &[Vec<String>]) -> Run {
        let mut w = csv::Writer::from_writer(&mut self.stdout);
        w.write_record(header)?;
        for r in rows {
            w.write_record(r)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn tuple(xs: &[impl ToString]) -> String {
    format!("({})", xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn coeffs(out: &mut Out, kind: CoeffKind, n: u32) -> Run {
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    // (composition prefix, e, value) for every composition of n in at least two parts
    let mut rows: Vec<(Vec<u32>, Option<Vec<u8>>, Z)> = Vec::new();
    for len in 2..=n as usize {
        for c in compositions(n, len) {
            let prefix = c[..len - 1].to_vec();
            match kind {
                CoeffKind::D => rows.push((prefix.clone(), None, lagrange_d(&prefix))),
                CoeffKind::De => {
                    for e in bit_sequences(len - 1) {
                        let d = lagrange_d_labeled(&e, &prefix);
                        rows.push((prefix.clone(), Some(e), d));
                    }
                }
            }
        }
    }
    out.header(None)?;
    match out.format {
        Format::Text => {
            for (c, e, d) in &rows {
                match e {
                    None => writeln!(out.stdout, "d{} = {d}", tuple(c))?,
                    Some(e) => writeln!(out.stdout, "d^{}{} = {d}", tuple(e), tuple(c))?,
                }
            }
        }
        Format::Csv => {
            let n = n.to_string();
            match kind {
                CoeffKind::D => {
                    let rs: Vec<_> = rows.iter().map(|(c, _, d)| vec![n.clone(), tuple(c), d.to_string()]).collect();
                    out.csv(&["n", "composition", "d"], &rs)?;
                }
                CoeffKind::De => {
                    let rs: Vec<_> = rows
                        .iter()
                        .map(|(c, e, d)| vec![n.clone(), tuple(e.as_deref().unwrap_or(&[])), tuple(c), d.to_string()])
                        .collect();
                    out.csv(&["n", "e", "composition", "d_e"], &rs)?;
                }
            }
        }
        Format::Json => {
            let rs: Vec<Value> = rows
                .iter()
                .map(|(c, e, d)| match e {
                    None => json!({"composition": c, "d": d.to_string()}),
                    Some(e) => json!({"composition": c, "e": e, "d": d.to_string()}),
                })
                .collect();
            let kind = match kind {
                CoeffKind::D => "d",
                CoeffKind::De => "de",
            };
            out.json("coeffs", None, json!({"kind": kind, "n": n, "rows": rs}))?;
        }
    }
    Ok(())
}

fn poly_terms(p: &NcPoly) -> Vec<(String, String)> {
    p.terms().map(|(w, c)| (if w.is_empty() { "1".into() } else { w.to_string() }, c.to_string())).collect()
}

fn coop(out: &mut Out, flavor: Flavor, kind: Kind, n: u32) -> Run {
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    let p = CoOpTable::shared(flavor).image(kind, n);
    out.header(None)?;
    match out.format {
        Format::Text => writeln!(out.stdout, "{kind}(x{n}) = {p}")?,
        Format::Csv => {
            let rs: Vec<_> = poly_terms(&p).into_iter().map(|(w, c)| vec![w, c]).collect();
            out.csv(&["word", "coefficient"], &rs)?;
        }
        Format::Json => {
            let terms: Vec<Value> = poly_terms(&p).into_iter().map(|(w, c)| json!({"word": w, "coefficient": c})).collect();
            out.json(
                "coop",
                None,
                json!({"flavor": flavor.name(), "kind": kind.name(), "n": n, "polynomial": p.to_string(), "terms": terms}),
            )?;
        }
    }
    Ok(())
}

fn operators(out: &mut Out, op: OpKind, degrees: &[u32], m: &[u32], e: &[u8]) -> Run {
    if degrees.contains(&0) {
        return Err(Failure::Usage("degrees must be positive".into()));
    }
    let a = symbols(degrees);
    let (name, t) = match op {
        OpKind::L => ("L", left_rec(&a)),
        OpKind::R => ("R", right_rec(&a)),
        OpKind::Rm => ("R_m", right_op_m(m, &a)?),
        OpKind::Re => ("R^e", right_e_rec(e, &a)?),
    };
    let args: Vec<String> = a.iter().map(ToString::to_string).collect();
    out.header(None)?;
    match out.format {
        Format::Text => writeln!(out.stdout, "{name}({}) = {t}", args.join(", "))?,
        Format::Csv => {
            let rs: Vec<_> = t
                .terms()
                .map(|(ws, c)| {
                    let f: Vec<String> = ws.iter().map(ToString::to_string).collect();
                    vec![f.join(" | "), c.to_string()]
                })
                .collect();
            out.csv(&["tensor", "coefficient"], &rs)?;
        }
        Format::Json => out.json(
            "operators",
            None,
            json!({"op": name, "degrees": degrees, "m": m, "e": e, "arguments": args, "expansion": t.to_string()}),
        )?,
    }
    Ok(())
}

fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::ExpectedFail => "expected-fail",
        Verdict::Regression => "regression",
    }
}

fn verify(out: &mut Out, flavor: Flavor, max_degree: u32, samples: usize, seed: u64) -> Run {
    if max_degree == 0 {
        return Err(Failure::Usage("--max-degree must be positive".into()));
    }
    let records = sweep(flavor, max_degree)?;
    // sampled products, checked only for the axioms expected to hold
    let mut sample_failures = Vec::new();
    let sampled = samples > 0;
    if sampled {
        let table = CoOpTable::shared(flavor);
        let words = sample_products(seed, samples, max_degree.min(5));
        for axiom in Axiom::ALL {
            if expected(flavor, axiom) != Expectation::Holds {
                continue;
            }
            for w in &words {
                let q = NcPoly::monomial(w.clone(), Z::from(1));
                if axiom.check_on(table, max_degree, &q)?.is_some() {
                    sample_failures.push(format!("{axiom} on {w}"));
                }
            }
        }
    }
    let regressions = records.iter().filter(|r| r.verdict == Verdict::Regression).count() + sample_failures.len();
    let expected_fails = records.iter().filter(|r| r.verdict == Verdict::ExpectedFail).count();
    let seed_shown = sampled.then_some(seed);
    out.header(seed_shown)?;
    match out.format {
        Format::Text => {
            for r in &records {
                write!(out.stdout, "{:<14} {:<16} x{:<2} {}", verdict_name(&r.verdict), r.axiom.name(), r.n, r.pass)?;
                match &r.discrepancy {
                    Some(d) => writeln!(out.stdout, "  {d}")?,
                    None => writeln!(out.stdout)?,
                }
            }
            for f in &sample_failures {
                writeln!(out.stdout, "regression     sampled {f}")?;
            }
            writeln!(
                out.stdout,
                "{flavor}: {} checks, {expected_fails} expected failures, {regressions} regressions",
                records.len()
            )?;
        }
        Format::Csv => {
            let rs: Vec<_> = records
                .iter()
                .map(|r| {
                    vec![
                        r.axiom.name().to_string(),
                        r.n.to_string(),
                        r.pass.to_string(),
                        verdict_name(&r.verdict).to_string(),
                        r.discrepancy.as_ref().map(ToString::to_string).unwrap_or_default(),
                    ]
                })
                .collect();
            out.csv(&["axiom", "n", "pass", "verdict", "discrepancy"], &rs)?;
        }
        Format::Json => {
            let rs: Vec<Value> = records
                .iter()
                .map(|r| {
                    json!({
                        "axiom": r.axiom.name(),
                        "n": r.n,
                        "pass": r.pass,
                        "verdict": verdict_name(&r.verdict),
                        "discrepancy": r.discrepancy.as_ref().map(ToString::to_string),
                    })
                })
                .collect();
            out.json(
                "verify",
                seed_shown,
                json!({
                    "flavor": flavor.name(),
                    "max_degree": max_degree,
                    "records": rs,
                    "sample_failures": sample_failures,
                    "expected_failures": expected_fails,
                    "regressions": regressions,
                }),
            )?;
        }
    }
    if regressions > 0 {
        return Err(Failure::Check);
    }
    Ok(())
}

fn default_symbolic(flavor: SeriesFlavor, order: usize, letter: fn(u32) -> NcPoly) -> TruncatedSeries<NcPoly> {
    TruncatedSeries::new(flavor, (1..=order as u32).map(letter).collect()).expect("order is positive")
}

/// Explicit series are required outside the free algebra.
fn load<A: Elem>(text: Option<&str>, args: &SeriesArgs) -> Result<TruncatedSeries<A>, Failure> {
    let t = text.ok_or_else(|| Failure::Usage("series arguments are required unless --algebra free".into()))?;
    Ok(parse_series(t, args.algebra, args.flavor, args.order)?)
}

fn print_series<A: Elem>(out: &mut Out, command: &str, label: &str, s: &TruncatedSeries<A>) -> Run {
    out.header(None)?;
    match out.format {
        Format::Text => {
            writeln!(out.stdout, "{label} = {s}")?;
            for (i, c) in s.coeffs().iter().enumerate() {
                writeln!(out.stdout, "  [{}] {c}", i + 1)?;
            }
        }
        Format::Csv => {
            let rs: Vec<_> = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![(i + 1).to_string(), c.emit().to_string()])
                .collect();
            out.csv(&["n", "coefficient"], &rs)?;
        }
        Format::Json => out.json(command, None, json!({"label": label, "result": emit_series(s)}))?,
    }
    Ok(())
}

fn divide_in<A: Elem>(out: &mut Out, side: Side, mode: Mode, a: &TruncatedSeries<A>, b: &TruncatedSeries<A>) -> Run {
    let c = divide(side, mode, a, b)?;
    let label = match side {
        Side::Right => "a / b",
        Side::Left => "a \\ b",
    };
    print_series(out, "divide", label, &c)
}

fn invert_in<A: Elem>(out: &mut Out, side: Option<Side>, a: &TruncatedSeries<A>) -> Run {
    let (label, inv) = match (a.flavor(), side) {
        (SeriesFlavor::Diff, _) => ("a^-1", diff_inverse(a)?),
        (SeriesFlavor::Inv, Some(Side::Right)) => ("e / a", series_inverse(Side::Right, a)?),
        (SeriesFlavor::Inv, Some(Side::Left)) => ("a \\ e", series_inverse(Side::Left, a)?),
        (SeriesFlavor::Inv, None) => return Err(Failure::Usage("inv inverses are one-sided: pass --side".into())),
    };
    print_series(out, "invert", label, &inv)
}

fn check_order(args: &SeriesArgs) -> Run {
    if args.order == 0 {
        return Err(Failure::Usage("--order must be positive".into()));
    }
    Ok(())
}

macro_rules! with_algebra {
    ($spec:expr, $A:ident => $body:expr) => {
        match $spec {
            AlgebraSpec::Free => {
                type $A = NcPoly;
                $body
            }
            AlgebraSpec::Rational => {
                type $A = Q;
                $body
            }
            AlgebraSpec::MatQ(_) => {
                type $A = MatQ;
                $body
            }
            AlgebraSpec::Cd(_) => {
                type $A = CdElement;
                $body
            }
            AlgebraSpec::MatCd(..) => {
                type $A = MatCd;
                $body
            }
        }
    };
}

fn divide_cmd(out: &mut Out, args: &SeriesArgs, side: Side, mode: Mode, a: Option<&str>, b: Option<&str>) -> Run {
    check_order(args)?;
    if args.algebra == AlgebraSpec::Free {
        let a = match a {
            Some(t) => parse_series(t, args.algebra, args.flavor, args.order)?,
            None => default_symbolic(args.flavor, args.order, NcPoly::x),
        };
        let b = match b {
            Some(t) => parse_series(t, args.algebra, args.flavor, args.order)?,
            None => default_symbolic(args.flavor, args.order, NcPoly::y),
        };
        return divide_in(out, side, mode, &a, &b);
    }
    with_algebra!(args.algebra, A => {
        let a: TruncatedSeries<A> = load(a, args)?;
        let b: TruncatedSeries<A> = load(b, args)?;
        divide_in(out, side, mode, &a, &b)
    })
}

fn invert_cmd(out: &mut Out, args: &SeriesArgs, side: Option<Side>, a: Option<&str>) -> Run {
    check_order(args)?;
    if args.algebra == AlgebraSpec::Free {
        let a = match a {
            Some(t) => parse_series(t, args.algebra, args.flavor, args.order)?,
            None => default_symbolic(args.flavor, args.order, NcPoly::x),
        };
        return invert_in(out, side, &a);
    }
    with_algebra!(args.algebra, A => {
        let a: TruncatedSeries<A> = load(a, args)?;
        invert_in(out, side, &a)
    })
}

fn witness_cmd(out: &mut Out, name: &str, seed: Option<u64>) -> Run {
    let seeded = name == "ucd-not-loop";
    let seed = seed.unwrap_or(UCD_SEED);
    let r = witness_with_seed(name, seed)?;
    // the report carries its own seed line in text form
    out.header(None)?;
    match out.format {
        Format::Text => writeln!(out.stdout, "{r}")?,
        Format::Csv => {
            let rs: Vec<_> = r
                .assertions
                .iter()
                .map(|a| vec![a.claim.clone(), a.expected.clone(), a.actual.clone(), a.holds.to_string()])
                .collect();
            out.csv(&["claim", "expected", "actual", "holds"], &rs)?;
        }
        Format::Json => {
            let mut body = serde_json::to_value(&r).expect("serializable");
            body["passed"] = json!(r.passed());
            if !seeded {
                body.as_object_mut().expect("object").remove("seed");
            }
            out.json("witness", None, body)?;
        }
    }
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn trees(out: &mut Out, l: usize) -> Run {
    let rows: Vec<(Vec<u32>, String)> = m_sequences(l)
        .into_iter()
        .map(|m| {
            let t = tree_of_msequence(&m).map(|t| t.to_string());
            t.map(|t| (m, t))
        })
        .collect::<Result<_, _>>()?;
    out.header(None)?;
    match out.format {
        Format::Text => {
            for (m, t) in &rows {
                writeln!(out.stdout, "{} {t}", tuple(m))?;
            }
        }
        Format::Csv => {
            let rs: Vec<_> = rows.iter().map(|(m, t)| vec![tuple(m), t.clone()]).collect();
            out.csv(&["m", "tree"], &rs)?;
        }
        Format::Json => {
            let rs: Vec<Value> = rows.iter().map(|(m, t)| json!({"m": m, "tree": t})).collect();
            out.json("trees", None, json!({"l": l, "trees": rs}))?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Run {
    let format = match &cli.command {
        Command::Verify { report: Some(f), .. } => *f,
        _ => cli.format,
    };
    let mut out = Out { format, stdout: io::stdout().lock() };
    match cli.command {
        Command::Coeffs { kind, n } => coeffs(&mut out, kind, n),
        Command::Coop { flavor, kind, n } => coop(&mut out, flavor, kind, n),
        Command::Operators { op, degrees, m, e } => operators(&mut out, op, &degrees, &m, &e),
        Command::Verify { flavor, max_degree, samples, .. } => {
            verify(&mut out, flavor, max_degree, samples, cli.seed.unwrap_or(0))
        }
        Command::Divide { series, side, mode, a, b } => {
            let mode = match mode {
                ModeArg::Recursive => Mode::Recursive,
                ModeArg::Closed => Mode::Closed,
            };
            divide_cmd(&mut out, &series, side, mode, a.as_deref(), b.as_deref())
        }
        Command::Invert { series, side, a } => invert_cmd(&mut out, &series, side, a.as_deref()),
        Command::Witness { name } => witness_cmd(&mut out, &name, cli.seed),
        Command::Trees { l } => trees(&mut out, l),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
