//! The `qtc` command-line front end. Each subcommand is a function returning
//! an [`Outcome`], which the binary prints before exiting with its code.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::algebra::LaurentPoly;
use crate::chains::{f_chains, f_stat, stat, ChainDecomposition};
use crate::closed_forms::{f1, f2, f2_chain_form, f3_recursive, f3_two_step, h2, h3, slope_sequence, ABCParams};
use crate::error::{QtcError, Result};
use crate::io::{render_csv, render_json, render_latex, render_text};
use crate::tableaux::{combine_h_to_f, f_tableaux, h_tableaux, IntVector, Partition, MAX_TABLEAU_SIZE};
use crate::tesler::{f_tesler, subdiagram_area_gf};

/// Largest grid bound accepted by `verify` and `scan` for each `n`.
pub fn max_bound(n: usize) -> Option<i64> {
    match n {
        1..=3 => Some(12),
        4 => Some(8),
        5 => Some(4),
        _ => None,
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qtc",
    version,
    about = "Exact (q,t)-polynomials from tableaux, Tesler matrices, recursions and chains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute F for one parameter vector.
    Compute(ComputeArgs),
    /// Cross-check every method on a parameter grid.
    Verify(VerifyArgs),
    /// Print the chain decomposition of the subpartitions of (a+b+c, b+c, c).
    Decompose(DecomposeArgs),
    /// Search a grid for vectors whose F has a negative coefficient.
    Scan(ScanArgs),
    /// Print the slope sequence S(m,n) and F of its tail.
    Rational(RationalArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Tableaux,
    Tesler,
    Recursion,
    TwoStep,
    Chains,
    Stat,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
    Csv,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["a", "abc"])))]
pub struct ComputeArgs {
    #[arg(long, value_enum)]
    pub method: Method,
    /// Comma-separated vector (a_2,...,a_n); for `tesler` the full hook vector (a_1,...,a_n).
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<IntVector>,
    /// Three arguments a,b,c.
    #[arg(long, allow_hyphen_values = true)]
    pub abc: Option<IntVector>,
    /// First hook entry used by `tesler` together with `--abc`.
    #[arg(long, default_value_t = 0)]
    pub a1: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Number of hook entries n; all of 1..=4 when omitted.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub max: i64,
    /// Worker threads (defaults to all cores).
    #[arg(long, env = "QTC_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    #[default]
    Text,
    Csv,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub abc: IntVector,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    pub format: TableFormat,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").args(["monotone", "all"])))]
pub struct ScanArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub max: i64,
    /// Only weakly decreasing vectors (the default).
    #[arg(long)]
    pub monotone: bool,
    /// Every vector in the box.
    #[arg(long)]
    pub all: bool,
    #[arg(long, env = "QTC_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug)]
pub struct RationalArgs {
    #[arg(long)]
    pub m: i64,
    #[arg(long)]
    pub n: i64,
}

/// Result of running one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn failure(stdout: String, stderr: String) -> Self {
        Outcome {
            stdout,
            stderr,
            code: 1,
        }
    }

    pub fn from_error(e: &QtcError) -> Self {
        let code = match e {
            QtcError::NotPolynomial(_) => 1,
            QtcError::Domain(_) | QtcError::Parse(_) => 2,
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code,
        }
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(&args).map(Outcome::ok),
        Command::Verify(args) => cmd_verify(&args),
        Command::Decompose(args) => cmd_decompose(&args).map(Outcome::ok),
        Command::Scan(args) => cmd_scan(&args),
        Command::Rational(args) => cmd_rational(&args),
    };
    result.unwrap_or_else(|e| Outcome::from_error(&e))
}

fn abc_of(v: &[i64]) -> Result<ABCParams> {
    match *v {
        [a, b, c] => ABCParams::new(a, b, c),
        _ => Err(QtcError::Domain(format!(
            "expected three arguments a,b,c, got {}",
            v.len()
        ))),
    }
}

/// Evaluate `F` by `method`. For `tesler`, `v` is the full hook vector.
pub fn compute(method: Method, v: &[i64]) -> Result<LaurentPoly> {
    match method {
        Method::Tableaux => f_tableaux(v),
        Method::Tesler => f_tesler(v),
        Method::Recursion => match *v {
            [a] => Ok(f1(a)),
            [a, b] => f2(a, b),
            [_, _, _] => f3_recursive(abc_of(v)?),
            _ => Err(QtcError::Domain("recursion handles one, two or three arguments".into())),
        },
        Method::TwoStep => f3_two_step(abc_of(v)?),
        Method::Chains => Ok(f_chains(&abc_of(v)?)),
        Method::Stat => f_stat(&abc_of(v)?),
    }
}

pub fn render(format: Format, params: &[i64], p: &LaurentPoly) -> String {
    match format {
        Format::Text => format!("{}\n", render_text(p)),
        Format::Json => format!("{}\n", render_json(params, p)),
        Format::Latex => format!("{}\n", render_latex(p)),
        Format::Csv => render_csv(p),
    }
}

pub fn cmd_compute(args: &ComputeArgs) -> Result<String> {
    let (params, input) = match (&args.a, &args.abc) {
        (Some(a), _) => (a.0.clone(), a.0.clone()),
        (None, Some(abc)) => {
            abc_of(&abc.0)?;
            let input = if args.method == Method::Tesler {
                std::iter::once(args.a1).chain(abc.0.iter().copied()).collect()
            } else {
                abc.0.clone()
            };
            (abc.0.clone(), input)
        }
        (None, None) => return Err(QtcError::Parse("one of --a or --abc is required".into())),
    };
    let p = compute(args.method, &input)?;
    Ok(render(args.format, &params, &p))
}

fn with_pool<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match jobs {
        Some(0) => Err(QtcError::Domain("--jobs must be at least 1".into())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| QtcError::Domain(format!("cannot start worker pool: {e}"))),
        None => Ok(f()),
    }
}

/// All vectors of length `len` with entries in `0..=max`, lexicographically.
pub fn box_vectors(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn is_weakly_decreasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// One checked identity on one parameter vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub n: usize,
    pub params: Vec<i64>,
    pub identity: &'static str,
    /// `(method, value)` for every evaluation that entered the comparison.
    pub values: Vec<(String, LaurentPoly)>,
    pub error: Option<String>,
}

impl CaseResult {
    pub fn agrees(&self) -> bool {
        self.error.is_none() && self.values.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

fn fmt_params(v: &[i64]) -> String {
    IntVector(v.to_vec()).to_string()
}

fn collect(n: usize, params: &[i64], identity: &'static str, evals: Vec<(String, Result<LaurentPoly>)>) -> CaseResult {
    let mut values = Vec::with_capacity(evals.len());
    let mut error = None;
    for (name, r) in evals {
        match r {
            Ok(v) => values.push((name, v)),
            Err(e) => {
                error.get_or_insert(format!("{name}: {e}"));
            }
        }
    }
    CaseResult {
        n,
        params: params.to_vec(),
        identity,
        values,
        error,
    }
}

fn with_hook(a1: i64, v: &[i64]) -> Vec<i64> {
    std::iter::once(a1).chain(v.iter().copied()).collect()
}

/// The identities checked by `verify` for the vector `v = (a_2,...,a_n)`.
pub fn verify_cases(n: usize, v: &[i64]) -> Vec<CaseResult> {
    let name = |s: &str| s.to_string();
    let mut cases = Vec::new();
    let base = vec![
        (name("tableaux"), f_tableaux(v)),
        (name("tesler a1=0"), f_tesler(&with_hook(0, v))),
        (name("tesler a1=3"), f_tesler(&with_hook(3, v))),
    ];
    match *v {
        [] => cases.push(collect(n, v, "empty vector gives 1", {
            let mut e = base;
            e.push((name("one"), Ok(LaurentPoly::one())));
            e
        })),
        [a] => {
            let mut e = base;
            e.push((name("bracket"), Ok(f1(a))));
            cases.push(collect(n, v, "single argument is a bracket", e));
            cases.push(collect(
                n,
                v,
                "tableau H matches closed form",
                vec![(name("h_tableaux"), h_tableaux(v)), (name("h2"), Ok(h2(a)))],
            ));
        }
        [a, b] => {
            let mut e = base;
            e.push((name("f2"), f2(a, b)));
            e.push((name("f2 chain form"), f2_chain_form(a, b)));
            e.push((name("h3 combined"), combine_h_to_f(|w| h3(w[0], w[1]), v)));
            cases.push(collect(n, v, "two-argument closed forms", e));
            cases.push(collect(
                n,
                v,
                "tableau H matches closed form",
                vec![(name("h_tableaux"), h_tableaux(v)), (name("h3"), h3(a, b))],
            ));
        }
        [a, b, c] => {
            let mut e = base;
            match ABCParams::new(a, b, c) {
                Ok(p) => {
                    e.push((name("recursion"), f3_recursive(p)));
                    if c >= 1 {
                        e.push((name("two-step"), f3_two_step(p)));
                    }
                    e.push((name("chains"), Ok(f_chains(&p))));
                    e.push((name("stat"), f_stat(&p)));
                }
                Err(err) => e.push((name("region"), Err(err))),
            }
            cases.push(collect(n, v, "all methods agree", e));
        }
        _ => cases.push(collect(n, v, "tableaux and Tesler agree", base)),
    }
    let t_one = f_tesler(&with_hook(0, v))
        .map(|f| f.specialize_t_one())
        .and_then(|s| Ok((s, subdiagram_area_gf(&Partition::staircase(v)?))));
    cases.push(match t_one {
        Ok((lhs, rhs)) => CaseResult {
            n,
            params: v.to_vec(),
            identity: "t=1 gives subdiagram area",
            values: Vec::new(),
            error: (lhs != rhs).then(|| format!("specialization {lhs} differs from area gf {rhs}")),
        },
        Err(e) => collect(n, v, "t=1 gives subdiagram area", vec![(name("tesler"), Err(e))]),
    });
    cases
}

fn verify_grid(n: usize, max: i64) -> Vec<Vec<i64>> {
    let vs = box_vectors(n - 1, max);
    match n {
        3 => vs.into_iter().filter(|v| v[0] >= v[1] - 1).collect(),
        4 => vs
            .into_iter()
            .filter(|v| ABCParams::in_region(v[0], v[1], v[2]))
            .collect(),
        _ => vs,
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let ns: Vec<usize> = match args.n {
        Some(n) => vec![n],
        None => vec![1, 2, 3, 4],
    };
    for &n in &ns {
        let bound = max_bound(n).ok_or_else(|| QtcError::Domain(format!("verify supports 1 <= n <= 5, got {n}")))?;
        if args.max < 0 || args.max > bound {
            return Err(QtcError::Domain(format!("--max for n = {n} must lie in 0..={bound}")));
        }
        if n > MAX_TABLEAU_SIZE {
            return Err(QtcError::Domain(format!("n = {n} exceeds the tableau bound")));
        }
    }
    let start = Instant::now();
    let cases: Vec<CaseResult> = with_pool(args.jobs, || {
        ns.iter()
            .flat_map(|&n| verify_grid(n, args.max).into_iter().map(move |v| (n, v)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .flat_map_iter(|(n, v)| verify_cases(n, &v))
            .collect()
    })?;
    let elapsed = start.elapsed();

    let mut out = String::new();
    let mut err = String::new();
    let mut mismatches = 0;
    for case in &cases {
        let methods: Vec<&str> = case.values.iter().map(|(m, _)| m.as_str()).collect();
        if case.agrees() {
            let _ = write!(out, "ok    n={} {} {}", case.n, fmt_params(&case.params), case.identity);
            if !methods.is_empty() {
                let _ = write!(out, ": {}", methods.join(", "));
            }
            out.push('\n');
        } else {
            mismatches += 1;
            let _ = writeln!(out, "FAIL  n={} {} {}", case.n, fmt_params(&case.params), case.identity);
            let _ = writeln!(
                err,
                "mismatch at n={} {} ({})",
                case.n,
                fmt_params(&case.params),
                case.identity
            );
            if let Some(e) = &case.error {
                let _ = writeln!(err, "  {e}");
            }
            for (m, v) in &case.values {
                let _ = writeln!(err, "  {m}: {v}");
            }
        }
    }
    let _ = writeln!(
        out,
        "cases: {}  mismatches: {}  elapsed: {:.3}s",
        cases.len(),
        mismatches,
        elapsed.as_secs_f64()
    );
    Ok(if mismatches == 0 {
        Outcome::ok(out)
    } else {
        Outcome::failure(out, err)
    })
}

/// One row of the decomposition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionRow {
    pub chain_id: usize,
    pub role: &'static str,
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub area: i64,
    pub stat: i64,
}

/// Rows in table order: chains by tail, members by decreasing area.
pub fn decomposition_rows(d: &ChainDecomposition) -> Result<Vec<DecompositionRow>> {
    let p = d.params();
    let mut rows = Vec::with_capacity(d.num_members());
    for (id, chain) in d.chains().iter().enumerate() {
        for lam in chain.members.iter().rev() {
            rows.push(DecompositionRow {
                chain_id: id,
                role: chain.role_of(lam),
                x: lam.x,
                y: lam.y,
                z: lam.z,
                area: lam.area(&p),
                stat: stat(&p, lam)?,
            });
        }
    }
    Ok(rows)
}

fn monomial(area: i64, stat: i64) -> String {
    LaurentPoly::monomial(area, stat, 1).to_string()
}

pub fn cmd_decompose(args: &DecomposeArgs) -> Result<String> {
    let p = abc_of(&args.abc.0)?;
    let d = ChainDecomposition::new(p)?;
    let rows = decomposition_rows(&d)?;
    let mut out = String::new();
    match args.format {
        TableFormat::Csv => {
            out.push_str("chain_id,role,x,y,z,area,stat\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.chain_id, r.role, r.x, r.y, r.z, r.area, r.stat
                );
            }
        }
        TableFormat::Text => {
            let _ = writeln!(
                out,
                "lambda{} = {}: {} chains, {} subpartitions",
                p,
                lambda_of(&p),
                d.chains().len(),
                rows.len()
            );
            for (id, chain) in d.chains().iter().enumerate() {
                let pr = chain.pseudohead;
                let q = chain.quasihead;
                let head = match chain.head {
                    crate::chains::Head::Negative(h) => format!("P({},{})", h.i, h.j),
                    crate::chains::Head::Positive { k, l, .. } => format!("H({k},{l})"),
                };
                let _ = writeln!(
                    out,
                    "chain {id}: range {}  tail T({},{})  pseudohead P({},{})  head {head}  quasihead Q({},{})",
                    chain.area_range, chain.tail.e, chain.tail.f, pr.i, pr.j, q.s, q.t
                );
                let members: Vec<String> = rows
                    .iter()
                    .filter(|r| r.chain_id == id)
                    .map(|r| format!("({},{},{}) {}", r.x, r.y, r.z, monomial(r.area, r.stat)))
                    .collect();
                let _ = writeln!(out, "  {}", members.join("  "));
            }
        }
    }
    Ok(out)
}

fn lambda_of(p: &ABCParams) -> String {
    format!("({},{},{})", p.a() + p.b() + p.c(), p.b() + p.c(), p.c())
}

/// A vector whose F has at least one negative coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub params: Vec<i64>,
    pub negative_terms: LaurentPoly,
}

/// Search `(a_2,...,a_n)` with entries in `0..=max` using the Tesler sum with `a_1 = 0`.
pub fn scan(n: usize, max: i64, monotone: bool) -> Result<Vec<Finding>> {
    let bound = max_bound(n).ok_or_else(|| QtcError::Domain(format!("scan supports 1 <= n <= 5, got {n}")))?;
    if max < 0 || max > bound {
        return Err(QtcError::Domain(format!("--max for n = {n} must lie in 0..={bound}")));
    }
    let candidates: Vec<Vec<i64>> = box_vectors(n - 1, max)
        .into_iter()
        .filter(|v| !monotone || is_weakly_decreasing(v))
        .collect();
    let results: Result<Vec<Option<Finding>>> = candidates
        .into_par_iter()
        .map(|v| {
            let f = f_tesler(&with_hook(0, &v))?;
            let neg: LaurentPoly = f
                .negative_terms()
                .map(|(e, c)| LaurentPoly::from_term(e, c.clone()))
                .sum();
            Ok((!neg.is_zero()).then_some(Finding {
                params: v,
                negative_terms: neg,
            }))
        })
        .collect();
    Ok(results?.into_iter().flatten().collect())
}

pub fn cmd_scan(args: &ScanArgs) -> Result<Outcome> {
    let monotone = !args.all;
    let findings = with_pool(args.jobs, || scan(args.n, args.max, monotone))??;
    let mut out = String::new();
    for f in &findings {
        let _ = writeln!(out, "{}: negative terms {}", fmt_params(&f.params), f.negative_terms);
    }
    let _ = writeln!(
        out,
        "findings: {} ({} vectors, n = {}, max = {})",
        findings.len(),
        if monotone { "weakly decreasing" } else { "all" },
        args.n,
        args.max
    );
    Ok(if monotone && !findings.is_empty() {
        Outcome::failure(out, "negative coefficients found on weakly decreasing vectors\n".into())
    } else {
        Outcome::ok(out)
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn cmd_rational(args: &RationalArgs) -> Result<Outcome> {
    let s = slope_sequence(args.m, args.n)?;
    let f = f_tableaux(&s[1..])?;
    let out = format!("S = {}\nf = {}\n", fmt_params(&s), f);
    if gcd(args.m, args.n) == 1 && !f.has_nonnegative_coeffs() {
        return Ok(Outcome::failure(
            out,
            format!("negative coefficient for coprime ({},{})\n", args.m, args.n),
        ));
    }
    Ok(Outcome::ok(out))
}
