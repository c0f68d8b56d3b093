use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use swappoly::constructions::{
    capelli_swap, even_analysis, odd_coefficient, RegevPattern,
};
use swappoly::exact::{ExactMatrix, ExactScalar};
use swappoly::ncpoly::text::{format_tensor, parse, ParsedPoly};
use swappoly::ncpoly::{estimate_work, Assignment, Letter, TensorPoly2};
use swappoly::symmetric::{weingarten, weingarten_scaled};
use swappoly::two_by_two::{
    balanced_q_prime, bracket_square, esss_family, esss_invariant, p_xy, q_xy, Generator,
};
use swappoly::verify::suite::{poincare_report, printed_lines_report};
use swappoly::verify::{
    checks, run_checks, verify_central, verify_swap, CheckDef, CheckReport, Group, Provenance,
    Status,
};
use swappoly::Error;

#[derive(Parser)]
#[command(name = "swappoly", version, about = "Exact swap tensor polynomials over matrix algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// List every registered check id with its anchor and exit.
    #[arg(long)]
    list_checks: bool,
    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verifiers and the regression suite.
    Verify {
        #[arg(value_enum)]
        what: VerifyWhat,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Points for `--poly` verification.
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Tensor polynomial file to verify instead of the catalog.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Build a construction and certify it.
    Construct {
        #[arg(value_enum)]
        what: ConstructWhat,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Degree-1 invariants for `esss`, e.g. `trx,try`.
        #[arg(long, value_delimiter = ',')]
        deg1: Vec<String>,
        /// Degree-2 invariants for `esss`, e.g. `detx,trxy`.
        #[arg(long, value_delimiter = ',')]
        deg2: Vec<String>,
        /// Print the polynomial in text form instead of a report.
        #[arg(long)]
        emit: bool,
    },
    /// Weingarten class function Wg(n, d).
    Weingarten {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        /// Multiply by (n!)².
        #[arg(long)]
        scaled: bool,
    },
    /// Two generic 2×2 matrices.
    TwoByTwo {
        #[command(subcommand)]
        what: TwoByTwoCmd,
    },
    /// The odd-d coefficient for a range of h.
    OddCoefficient {
        /// Inclusive range `A..B`.
        #[arg(long, value_parser = parse_range)]
        h_range: (usize, usize),
    },
    /// Evaluate a polynomial file at a matrix assignment file.
    Eval {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        at: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyWhat {
    All,
    Swap,
    Central,
    Identities,
    Goldman,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructWhat {
    P,
    Q,
    QPrime,
    Regev,
    EvenSwap,
    OddSwap,
    CapelliSwap,
    Esss,
}

#[derive(Subcommand)]
enum TwoByTwoCmd {
    Poincare {
        #[arg(long, default_value_t = 7)]
        maxdeg: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    Gram {
        #[arg(long)]
        seed: Option<u64>,
    },
    RewriteTeo {
        #[arg(long)]
        seed: Option<u64>,
    },
    VerifyIdentities {
        #[arg(long)]
        seed: Option<u64>,
    },
    QCheck {
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad start {a:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// Why a command stopped before producing output.
enum Stop {
    Usage(String),
    Budget { estimated: u128, budget: u128 },
    Other(String),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { estimated, budget } => Stop::Budget { estimated, budget },
            Error::TermCap { estimated, cap } => Stop::Budget { estimated, budget: cap },
            Error::Precondition(_) | Error::Dimension(_) | Error::Parse { .. } => {
                Stop::Usage(e.to_string())
            }
            other => Stop::Other(other.to_string()),
        }
    }
}

type Out = Result<Vec<Line>, Stop>;

/// One unit of output.
enum Line {
    Report(CheckReport),
    Row(Vec<(&'static str, Value)>),
    Text(String),
}

fn need_seed(seed: Option<u64>) -> Result<u64, Stop> {
    seed.ok_or_else(|| Stop::Usage("--seed is required for randomized commands".into()))
}

fn reports(r: Vec<CheckReport>) -> Vec<Line> {
    r.into_iter().map(Line::Report).collect()
}

fn by_ids(ids: &[&str], seed: u64) -> Vec<Line> {
    let defs: Vec<CheckDef> = checks().into_iter().filter(|c| ids.contains(&c.id)).collect();
    reports(run_checks(&defs, seed))
}

fn by_filter(seed: u64, keep: impl Fn(&CheckDef) -> bool) -> Vec<Line> {
    let defs: Vec<CheckDef> = checks().into_iter().filter(|c| keep(c)).collect();
    reports(run_checks(&defs, seed))
}

fn read(path: &str) -> Result<String, Stop> {
    fs::read_to_string(path).map_err(|e| Stop::Usage(format!("{path}: {e}")))
}

fn read_tensor(path: &str) -> Result<TensorPoly2, Stop> {
    match parse(&read(path)?)? {
        ParsedPoly::Tensor(t) => Ok(t),
        ParsedPoly::Plain(_) => Err(Stop::Usage(format!("{path}: expected a tensor polynomial"))),
    }
}

fn verify(what: VerifyWhat, d: Option<usize>, seed: u64, trials: usize, poly: Option<String>) -> Out {
    if let Some(path) = poly {
        if !matches!(what, VerifyWhat::Swap | VerifyWhat::Central) {
            return Err(Stop::Usage("--poly applies to `verify swap` and `verify central`".into()));
        }
        if trials < 3 {
            return Err(Stop::Usage(format!("--trials {trials}: need at least 3")));
        }
        let t = read_tensor(&path)?;
        let d = d.unwrap_or(2);
        if d < 2 {
            return Err(Stop::Usage("--d must be at least 2".into()));
        }
        let r = match what {
            VerifyWhat::Swap => verify_swap("verify.swap", "prop:crit", &t, d, trials, seed, None),
            _ => verify_central("verify.central", "thm:cca", &t, d, trials, seed, None),
        };
        return Ok(vec![Line::Report(r)]);
    }
    let group = match what {
        VerifyWhat::All => None,
        VerifyWhat::Swap => Some(Group::Swap),
        VerifyWhat::Central => Some(Group::Central),
        VerifyWhat::Identities => Some(Group::Identities),
        VerifyWhat::Goldman => Some(Group::Goldman),
    };
    let out = by_filter(seed, |c| {
        group.map_or(true, |g| c.group == g) && d.map_or(true, |d| c.covers(d))
    });
    if out.is_empty() {
        return Err(Stop::Usage("no registered check matches the filter".into()));
    }
    Ok(out)
}

fn generator(s: &str) -> Result<Generator, Stop> {
    let key = s.trim().to_ascii_lowercase().replace(['(', ')'], "");
    Generator::ALL
        .into_iter()
        .find(|g| g.name().replace(['(', ')'], "") == key)
        .ok_or_else(|| Stop::Usage(format!("unknown invariant {s:?}; use trx, detx, try, dety, trxy")))
}

fn xy(asg: &Assignment) -> swappoly::Result<(ExactMatrix, ExactMatrix)> {
    Ok((asg.get(Letter::x(1))?.clone(), asg.get(Letter::y(1))?.clone()))
}

fn factorial_square(n: usize) -> u128 {
    (1..=n as u128).try_fold(1u128, |a, k| a.checked_mul(k)).map_or(u128::MAX, |f| f.saturating_mul(f))
}

fn construct(
    what: ConstructWhat,
    d: usize,
    seed: Option<u64>,
    deg1: &[String],
    deg2: &[String],
    emit: bool,
) -> Out {
    use ConstructWhat::*;
    let two_only = matches!(what, P | Q | QPrime | Esss);
    if two_only && d != 2 {
        return Err(Stop::Usage(format!("this construction is for d = 2, not {d}")));
    }
    if emit {
        let t = match what {
            P => p_xy(),
            Q => q_xy(),
            QPrime => balanced_q_prime(),
            Esss => esss_family(&gens(deg1)?, &gens(deg2)?)?,
            CapelliSwap => capelli_swap(d)?.h_swap,
            _ => return Err(Stop::Usage("--emit applies to p, q, q-prime, esss, capelli-swap".into())),
        };
        return Ok(vec![Line::Text(format_tensor(&t))]);
    }
    // Cost refusals come before asking for a seed.
    match what {
        Regev if d < 2 => return Err(Stop::Usage("--d must be at least 2".into())),
        Regev if d > 3 => {
            // Three points, each streaming both families.
            let p = RegevPattern::new(d);
            let per_point = estimate_work(&p.x_pattern(), d).saturating_add(estimate_work(&p.y_pattern(), d));
            let estimated = per_point.saturating_mul(3);
            let budget = swappoly::ncpoly::stream::DEFAULT_WORK_BUDGET;
            if estimated > budget {
                return Err(Stop::Budget { estimated, budget });
            }
            return Err(Stop::Usage(format!("regev is registered for d = 2, 3 only, not {d}")));
        }
        EvenSwap if d % 2 == 1 => return Err(Stop::Usage(format!("d = {d} is not even"))),
        EvenSwap if d > 2 => {
            even_analysis(d)?;
            return Ok(vec![Line::Report(printed_lines_report(
                &format!("even.d{d}"),
                "rem:manc",
                &[d],
                seed.unwrap_or(0),
            ))]);
        }
        OddSwap if d % 2 == 0 => return Err(Stop::Usage(format!("d = {d} is not odd"))),
        OddSwap if d != 3 => {
            return Err(Stop::Budget { estimated: factorial_square(d * d), budget: factorial_square(9) })
        }
        CapelliSwap => {
            capelli_swap(d)?;
        }
        _ => {}
    }
    let seed = need_seed(seed)?;
    Ok(match what {
        P => by_ids(&["two-by-two.p", "two-by-two.p.central"], seed),
        Q => by_ids(&["two-by-two.q", "two-by-two.q.central"], seed),
        QPrime => by_ids(&["two-by-two.q-prime"], seed),
        Regev if d == 2 => by_ids(&["regev.d2"], seed),
        Regev => by_ids(&["regev.d3"], seed),
        EvenSwap => by_ids(&["even.d2", "even.d2.printed"], seed),
        OddSwap => by_ids(&["odd.d3", "odd.d3.labels"], seed),
        CapelliSwap => by_ids(&["capelli.d2", "capelli.d2.central", "capelli.d2.swap"], seed),
        Esss => {
            let (g1, g2) = (gens(deg1)?, gens(deg2)?);
            let t = esss_family(&g1, &g2)?;
            let s = bracket_square();
            let inv = esss_invariant(&g1, &g2).mul(&s).mul(&s);
            let f = move |a: &Assignment| -> swappoly::Result<ExactScalar> {
                let (x, y) = xy(a)?;
                Ok(inv.eval(&x, &y))
            };
            let mut r = verify_swap("construct.esss", "thm:esss", &t, 2, 5, seed, Some(&f));
            r.require(t.is_balanced(), "balanced");
            r.measure("terms", t.len());
            r.measure("slot_degree", t.slot_degree());
            vec![Line::Report(r)]
        }
    })
}

fn gens(names: &[String]) -> Result<Vec<Generator>, Stop> {
    names.iter().filter(|s| !s.is_empty()).map(|s| generator(s)).collect()
}

fn weingarten_rows(n: usize, d: usize, scaled: bool) -> Out {
    let w = if scaled { weingarten_scaled(n, d) } else { weingarten(n, d) };
    Ok(w.iter()
        .map(|(p, v)| Line::Row(vec![("partition", json!(p.label())), ("value", json!(v.to_string()))]))
        .collect())
}

fn odd_rows(a: usize, b: usize) -> Out {
    if a < 2 {
        return Err(Stop::Usage("h starts at 2".into()));
    }
    if b > 8 {
        return Err(Stop::Budget { estimated: factorial_square(2 * b), budget: factorial_square(16) });
    }
    let mut out = vec![];
    for h in a..=b {
        let c = odd_coefficient(h)?;
        let mut r = CheckReport::new(format!("odd.coefficient.h{h}"), "eq:nzc", 0);
        r.require(c.nonzero, "nonzero");
        r.measure("h", h);
        r.measure("value", c.value.to_string());
        r.measure("scaled", c.scaled_n.to_string());
        r.measure("nonzero", c.nonzero);
        if h == 3 {
            let want = ExactScalar::ratio(-1867, 105);
            r.expect("scaled", want.to_string(), Provenance::Paper);
            r.require(c.scaled_n == want, "h = 3 scaled value");
        }
        out.push(Line::Report(r));
    }
    Ok(out)
}

fn read_assignment(path: &str, letters: &[Letter]) -> Result<Assignment, Stop> {
    let text = read(path)?;
    let mut toks = text.split_whitespace();
    let mut header = |name: &str| -> Result<usize, Stop> {
        toks.next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Stop::Usage(format!("{path}: missing header field {name}")))
    };
    let d = header("d")?;
    let k = header("k")?;
    if d == 0 {
        return Err(Stop::Usage(format!("{path}: d must be positive")));
    }
    if k != letters.len() {
        return Err(Stop::Usage(format!(
            "{path}: {k} matrices for {} letters ({})",
            letters.len(),
            letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
        )));
    }
    let vals: Vec<ExactScalar> = toks.map(|t| t.parse()).collect::<Result<_, _>>()?;
    if vals.len() != k * d * d {
        return Err(Stop::Usage(format!("{path}: expected {} entries, found {}", k * d * d, vals.len())));
    }
    let mut asg = Assignment::new(d);
    for (i, l) in letters.iter().enumerate() {
        let m = ExactMatrix::new(d, d, vals[i * d * d..(i + 1) * d * d].to_vec())?;
        asg.insert(*l, m)?;
    }
    Ok(asg)
}

fn matrix_json(m: &ExactMatrix) -> Value {
    json!((0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn eval(poly: &str, at: &str) -> Out {
    let parsed = parse(&read(poly)?)?;
    let letters: Vec<Letter> = match &parsed {
        ParsedPoly::Plain(p) => p.letters().into_iter().collect(),
        ParsedPoly::Tensor(t) => t.letters().into_iter().collect(),
    };
    let asg = read_assignment(at, &letters)?;
    let (kind, m) = match &parsed {
        ParsedPoly::Plain(p) => ("matrix", p.eval(&asg)?),
        ParsedPoly::Tensor(t) => ("tensor", t.eval_tensor(&asg)?.into_matrix()),
    };
    Ok(vec![Line::Row(vec![
        ("kind", json!(kind)),
        ("d", json!(asg.d())),
        ("value", matrix_json(&m)),
    ])])
}

fn run(cli: Cli) -> Out {
    if cli.list_checks {
        return Ok(checks()
            .into_iter()
            .map(|c| {
                Line::Row(vec![
                    ("check", json!(c.id)),
                    ("anchor", json!(c.anchor)),
                    ("group", json!(c.group.label())),
                    ("d", json!(c.dims)),
                    ("criterion", json!(c.criterion)),
                ])
            })
            .collect());
    }
    let Some(cmd) = cli.cmd else {
        return Err(Stop::Usage("no command given; see --help".into()));
    };
    match cmd {
        Cmd::Verify { what, d, seed, trials, poly } => verify(what, d, need_seed(seed)?, trials, poly),
        Cmd::Construct { what, d, seed, deg1, deg2, emit } => construct(what, d, seed, &deg1, &deg2, emit),
        Cmd::Weingarten { n, d, scaled } => weingarten_rows(n as usize, d as usize, scaled),
        Cmd::TwoByTwo { what } => match what {
            TwoByTwoCmd::Poincare { maxdeg, seed } => {
                if maxdeg > swappoly::two_by_two::poincare::MAXDEG_BUDGET {
                    return Err(Stop::Budget {
                        estimated: 1u128 << maxdeg.min(127),
                        budget: 1u128 << swappoly::two_by_two::poincare::MAXDEG_BUDGET,
                    });
                }
                Ok(vec![Line::Report(poincare_report(maxdeg, need_seed(seed)?))])
            }
            TwoByTwoCmd::Gram { seed } => Ok(by_ids(&["two-by-two.gram"], need_seed(seed)?)),
            TwoByTwoCmd::RewriteTeo { seed } => Ok(by_ids(
                &["two-by-two.literal-split", "two-by-two.q-prime"],
                need_seed(seed)?,
            )),
            TwoByTwoCmd::VerifyIdentities { seed } => {
                let seed = need_seed(seed)?;
                Ok(by_filter(seed, |c| c.group == Group::Identities && c.covers(2)))
            }
            TwoByTwoCmd::QCheck { seed } => Ok(by_ids(&["two-by-two.q", "two-by-two.q.central"], need_seed(seed)?)),
        },
        Cmd::OddCoefficient { h_range: (a, b) } => odd_rows(a, b),
        Cmd::Eval { poly, at } => eval(&poly, &at),
    }
}

fn report_value(r: &CheckReport) -> Value {
    serde_json::to_value(r).expect("serializable")
}

fn write_line(out: &mut impl Write, line: &Line, fmt: Format) -> io::Result<()> {
    match (line, fmt) {
        (Line::Text(s), _) => write!(out, "{s}"),
        (Line::Report(r), Format::Json) => writeln!(out, "{}", report_value(r)),
        (Line::Report(r), Format::Tsv) => writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.check,
            r.anchor,
            r.status.label(),
            r.seed,
            Value::Array(r.measured.clone())
        ),
        (Line::Report(r), Format::Human) => {
            writeln!(out, "{:<8} {}  [{}]", r.status.label(), r.check, r.anchor)?;
            for m in &r.measured {
                if let Value::Object(o) = m {
                    for (k, v) in o {
                        let v = match v {
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        };
                        writeln!(out, "         {k} = {v}")?;
                    }
                }
            }
            for n in &r.notes {
                writeln!(out, "         {n}")?;
            }
            Ok(())
        }
        (Line::Row(cols), Format::Json) => {
            let o: serde_json::Map<String, Value> =
                cols.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            writeln!(out, "{}", Value::Object(o))
        }
        (Line::Row(cols), _) => {
            let sep = if fmt == Format::Tsv { "\t" } else { "  " };
            let cells: Vec<String> = cols
                .iter()
                .map(|(_, v)| match v {
                    Value::String(s) => s.clone(),
                    Value::Array(rows) if rows.iter().all(Value::is_array) => rows
                        .iter()
                        .map(|r| {
                            r.as_array()
                                .unwrap()
                                .iter()
                                .map(|c| c.as_str().map_or(c.to_string(), str::to_string))
                                .collect::<Vec<_>>()
                                .join(" ")
                        })
                        .collect::<Vec<_>>()
                        .join("; "),
                    other => other.to_string(),
                })
                .collect();
            writeln!(out, "{}", cells.join(sep))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let fmt = cli.format;
    match run(cli) {
        Ok(lines) => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            let mut failed = false;
            let mut refused = None;
            for l in &lines {
                if let Line::Report(r) = l {
                    failed |= r.status == Status::Fail;
                    refused = refused.or(r.refused);
                }
                if write_line(&mut out, l, fmt).is_err() {
                    return ExitCode::from(1);
                }
            }
            if let Some((estimated, budget)) = refused {
                eprintln!("refused: estimated cost {estimated} exceeds budget {budget}");
                return ExitCode::from(3);
            }
            ExitCode::from(u8::from(failed))
        }
        Err(Stop::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Stop::Budget { estimated, budget }) => {
            eprintln!("refused: estimated cost {estimated} exceeds budget {budget}");
            ExitCode::from(3)
        }
        Err(Stop::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
