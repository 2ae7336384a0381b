//! Command-line front end: Smith forms, abelianizations, family closed forms,
//! CRS bounds, and seeded verification suites.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use compring::arith::{parse_poly, DEFAULT_FACTOR_BUDGET};
use compring::companion::{element_matrix, smith_fast_traced};
use compring::groups::families::crs_lower_bound;
use compring::groups::{abelianization, abelianization_oracle, parse_word, AbelianGroup, CrsParams, FamilyParams};
use compring::matrix::{determinantal_divisors_bruteforce, smith_form};
use compring::{Error, IntMatrix};

pub mod verify;

pub use verify::{verify_suite, Report, SUITES};

#[derive(Parser, Debug)]
#[command(name = "compring", version, about = "Exact Smith forms in companion rings and abelianizations of cyclically presented groups")]
struct Cli {
    /// Emit JSON instead of a human-readable summary.
    #[arg(long, global = true)]
    json: bool,
    /// Run both the fast path and the elimination oracle and compare them.
    #[arg(long, global = true)]
    verify: bool,
    /// Work budget for integer factorization.
    #[arg(long, global = true, default_value_t = DEFAULT_FACTOR_BUDGET)]
    factor_budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smith normal form of f(C_g), or of an explicit integer matrix.
    Smith(SmithArgs),
    /// Abelianization of the cyclically presented group G_n(w).
    Abelianize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
    },
    /// Closed-form abelianization of a named family.
    Family(FamilyArgs),
    /// Seeded property suite comparing structural results with the oracle.
    Verify {
        /// One of swap, compose, nonunit, gamma, families, bounds.
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
    /// Lower bound on d(G^ab) for a CRS group.
    Bound(CrsArgs),
}

#[derive(Args, Debug)]
struct SmithArgs {
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<String>,
    /// `{"rows": m, "cols": n, "entries": [[...], ...]}` or a bare array of
    /// rows; entries may be numbers or decimal strings.
    #[arg(long, conflicts_with_all = ["f", "g"])]
    matrix: Option<String>,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Family parameters as a JSON object, e.g. {"family":"fracfib","k":1,"n":5}.
    #[arg(long)]
    params: Option<String>,
    #[command(subcommand)]
    which: Option<FamilyCmd>,
}

#[derive(Subcommand, Debug)]
enum FamilyCmd {
    /// Fractional Fibonacci groups F^(k)(n).
    Fracfib {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: usize,
    },
    /// Two-value circulant (--s --a --b) or periodic form (--alpha --beta --l).
    Neuwirth {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<i64>,
        #[arg(long)]
        alpha: Option<u64>,
        #[arg(long)]
        beta: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
    },
    /// Generalized Fibonacci groups H(r,n,s).
    Hrns {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
    /// G_n(x_0 x_k x_l).
    Length3 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Lower-bound family G_n(h,k;m,q;r,s;l); pipeline result only.
    Crs(CrsArgs),
    /// Cocktail-party circulant of size 2m.
    Cocktail {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct CrsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    h: usize,
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    s: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
    l: i64,
}

impl From<CrsArgs> for CrsParams {
    fn from(a: CrsArgs) -> Self {
        CrsParams { n: a.n, h: a.h, k: a.k, m: a.m, q: a.q, r: a.r, s: a.s, l: a.l }
    }
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::FactorizationLimit(_) | Error::EnumerationLimit { .. } => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<Output, Failure>;

/// What a command produced: JSON envelope, human text, and whether a
/// requested verification failed.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

pub fn ints_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn group_json(g: &AbelianGroup) -> Value {
    json!({
        "torsion": ints_json(g.torsion()),
        "betti": g.betti(),
        "d": g.d(),
        "order": g.order().map(|o| o.to_string()),
        "display": g.to_string(),
    })
}

fn method(verify: bool, agree: bool) -> &'static str {
    match (verify, agree) {
        (false, _) => "fast",
        (true, true) => "both-agree",
        (true, false) => "disagree",
    }
}

fn parse_matrix(text: &str) -> Result<IntMatrix, Failure> {
    let v: Value = serde_json::from_str(text).map_err(|e| Failure::usage(format!("matrix JSON: {e}")))?;
    let (rows, shape) = match &v {
        Value::Object(obj) => {
            let dim = |key: &str| {
                obj.get(key)
                    .and_then(Value::as_u64)
                    .map(|d| d as usize)
                    .ok_or_else(|| Failure::usage(format!("matrix object needs an integer {key:?}")))
            };
            let entries = obj.get("entries").ok_or_else(|| Failure::usage("matrix object needs \"entries\""))?;
            (entries, Some((dim("rows")?, dim("cols")?)))
        }
        _ => (&v, None),
    };
    let rows = rows.as_array().ok_or_else(|| Failure::usage("matrix entries must be an array of rows"))?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().ok_or_else(|| Failure::usage("matrix rows must be arrays"))?;
        let mut r = Vec::with_capacity(row.len());
        for x in row {
            let s = match x {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                _ => return Err(Failure::usage(format!("matrix entry {x} is not an integer"))),
            };
            r.push(s.parse::<BigInt>().map_err(|_| Failure::usage(format!("matrix entry {s:?} is not an integer")))?);
        }
        out.push(r);
    }
    if let Some((m, n)) = shape {
        if out.len() != m || out.iter().any(|r| r.len() != n) {
            return Err(Failure::usage(format!("matrix entries do not match the declared {m}x{n} shape")));
        }
    }
    Ok(IntMatrix::from_rows(out)?)
}

fn matrix_json(m: &IntMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": Value::Array(m.to_rows().iter().map(|r| ints_json(r)).collect()),
    })
}

fn cmd_smith(args: &SmithArgs, verify: bool, budget: u64) -> CmdResult {
    if let Some(text) = &args.matrix {
        let m = parse_matrix(text)?;
        let s = smith_form(&m, false);
        let mut ok = true;
        if verify {
            let k = m.rows().min(m.cols());
            let divisors = determinantal_divisors_bruteforce(&m, k)?;
            ok = divisors == s.determinantal_divisors;
        }
        let m_name = if verify { method(true, ok) } else { "oracle" };
        return Ok(Output {
            json: json!({ "input": { "matrix": matrix_json(&m) }, "invariant_factors": ints_json(&s.invariant_factors), "method": m_name }),
            text: format!("invariant factors: {}\nmethod: {m_name}", join(&s.invariant_factors)),
            ok,
        });
    }
    let (Some(f), Some(g)) = (&args.f, &args.g) else {
        return Err(Failure::usage("smith needs --f and --g, or --matrix"));
    };
    let f = parse_poly(f)?;
    let g = parse_poly(g)?;
    let (s, trace) = smith_fast_traced(&f, &g, budget)?;
    let mut ok = true;
    if verify {
        let oracle = smith_form(&element_matrix(&f.rem(&g)?, &g), false);
        ok = oracle.invariant_factors == s.invariant_factors;
    }
    let m = method(verify, ok);
    Ok(Output {
        json: json!({
            "input": { "f": f.to_string(), "g": g.to_string() },
            "invariant_factors": ints_json(&s.invariant_factors),
            "method": m,
            "steps": trace.steps,
            "oracle_blocks": trace.oracle_blocks,
        }),
        text: format!("invariant factors: {}\nmethod: {m}", join(&s.invariant_factors)),
        ok,
    })
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_abelianize(n: usize, word: &str, verify: bool, budget: u64) -> CmdResult {
    let w = parse_word(word, n)?;
    let g = abelianization(&w, budget)?;
    let ok = !verify || abelianization_oracle(&w) == g;
    let m = method(verify, ok);
    Ok(Output {
        json: json!({
            "input": { "n": n, "word": w.to_string() },
            "exponent_polynomial": w.exponent_polynomial().to_string(),
            "group": group_json(&g),
            "method": m,
        }),
        text: format!("{g}\nmethod: {m}"),
        ok,
    })
}

fn family_params(args: &FamilyArgs) -> Result<FamilyParams, Failure> {
    if let Some(text) = &args.params {
        return serde_json::from_str(text).map_err(|e| Failure::usage(format!("family params JSON: {e}")));
    }
    let Some(which) = &args.which else {
        return Err(Failure::usage("family needs a family name or --params"));
    };
    Ok(match *which {
        FamilyCmd::Fracfib { k, n } => FamilyParams::FracFib { k, n },
        FamilyCmd::Neuwirth { n, s, a, b, alpha, beta, l } => match (s, a, b, alpha, beta, l) {
            (Some(s), Some(a), Some(b), None, None, None) => FamilyParams::Neuwirth { n, s, a, b },
            (None, None, None, Some(alpha), Some(beta), l) => {
                FamilyParams::Periodic { n, alpha, beta, l: l.unwrap_or(1) }
            }
            _ => return Err(Failure::usage("neuwirth needs either --s --a --b or --alpha --beta [--l]")),
        },
        FamilyCmd::Hrns { r, n, s } => FamilyParams::Hrns { r, n, s },
        FamilyCmd::Length3 { n, k, l } => FamilyParams::Length3 { n, k, l },
        FamilyCmd::Crs(c) => FamilyParams::Crs(c.into()),
        FamilyCmd::Cocktail { m } => FamilyParams::Cocktail { m },
    })
}

fn cmd_family(args: &FamilyArgs, verify: bool, budget: u64) -> CmdResult {
    let p = family_params(args)?;
    let (g, source) = match p.closed_form(budget) {
        Ok(g) => (g, "closed-form"),
        Err(Error::HypothesisViolation(_)) if matches!(p, FamilyParams::Crs(_) | FamilyParams::Length3 { .. } | FamilyParams::Hrns { .. }) => {
            (p.general(budget)?, "general")
        }
        Err(e) => return Err(e.into()),
    };
    let mut ok = true;
    if verify {
        ok = p.oracle()? == g;
        if source == "closed-form" {
            ok &= p.general(budget)? == g;
        }
    }
    let m = method(verify, ok);
    let mut out = json!({
        "input": serde_json::to_value(&p).expect("params serialize"),
        "group": group_json(&g),
        "source": source,
        "method": m,
    });
    let mut text = format!("{g}\nsource: {source}\nmethod: {m}");
    if let FamilyParams::Crs(c) = p {
        let b = crs_lower_bound(&c)?;
        out["bound"] = json!(b);
        text.push_str(&format!("\nlower bound on d: {}{}", b.bound, if b.hypothesis_holds { "" } else { " (|k| = 1: not guaranteed)" }));
    }
    Ok(Output { json: out, text, ok })
}

fn cmd_bound(args: CrsArgs, budget: u64) -> CmdResult {
    let p: CrsParams = args.into();
    let b = crs_lower_bound(&p)?;
    let g = FamilyParams::Crs(p).general(budget)?;
    Ok(Output {
        json: json!({
            "input": serde_json::to_value(p).expect("params serialize"),
            "bound": b.bound,
            "hypothesis_holds": b.hypothesis_holds,
            "d_ab": g.d(),
            "group": group_json(&g),
            "method": "fast",
        }),
        text: format!(
            "lower bound: {}{}\nd(G^ab) = {} for {g}",
            b.bound,
            if b.hypothesis_holds { "" } else { " (|k| = 1: hypothesis fails, bound not guaranteed)" },
            g.d()
        ),
        ok: true,
    })
}

fn cmd_verify(suite: &str, seed: u64, cases: usize) -> CmdResult {
    let report = verify_suite(suite, seed, cases).map_err(Failure::usage)?;
    Ok(Output { json: report.to_json(), text: report.to_string(), ok: report.failures.is_empty() })
}

/// Runs the CLI on `argv` (program name first), writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
pub fn run_with<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let start = Instant::now();
    let budget = cli.factor_budget;
    let result = match &cli.command {
        Command::Smith(a) => cmd_smith(a, cli.verify, budget),
        Command::Abelianize { n, word } => cmd_abelianize(*n, word, cli.verify, budget),
        Command::Family(a) => cmd_family(a, cli.verify, budget),
        Command::Verify { suite, seed, cases } => cmd_verify(suite, *seed, *cases),
        Command::Bound(a) => cmd_bound(*a, budget),
    };
    match result {
        Ok(mut o) => {
            let is_report = matches!(cli.command, Command::Verify { .. });
            if cli.json {
                if !is_report {
                    o.json["timing_ms"] = json!(start.elapsed().as_millis() as u64);
                }
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("json"));
            } else {
                let _ = writeln!(out, "{}", o.text);
            }
            if o.ok {
                0
            } else {
                let _ = writeln!(err, "verification failed");
                1
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn run(argv: &[String]) -> i32 {
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
