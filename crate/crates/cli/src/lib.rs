//! Command-line front end for `runstruct`.
//!
//! [`run_command`] parses an argument vector, runs one subcommand and returns
//! the exit code together with everything that would be printed, so the
//! binary and the tests share one code path.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use runstruct::enumerate::{
    atomic_polys, linear_polys_faa, LinearRoute, RunTables,
};
use runstruct::natmerge::natural_merge_sort;
use runstruct::oracle::{
    beta, tally_descent_sets, tally_run_structures, tally_valleys, OracleConfig, PermutationKind,
};
use runstruct::sequences::{
    catalan_numbers, conjecture_report_with, mgf_check, secant_numbers, tangent_numbers,
    y_sequence, Family, ReportConfig, Status,
};
use runstruct::valleys::{check_closed_form, valley_table_with, ClosedFormCheck};
use runstruct::{Error, Partition, RunPolynomial, Strategy};

/// Exit code for a successful run or a consistent report.
pub const EXIT_OK: i32 = 0;
/// Exit code for bad arguments or violated bounds.
pub const EXIT_USAGE: i32 = 1;
/// Exit code for a failed identity or consistency check.
pub const EXIT_CHECK_FAILED: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug, Serialize)]
#[command(
    name = "runstruct",
    version,
    about = "Enumerate permutations by alternating-run structure"
)]
struct Cli {
    /// Wrap the output in a JSON object together with the effective configuration.
    #[arg(long, global = true)]
    manifest: bool,

    /// Worker threads for term-level parallelism (1 runs sequentially).
    #[arg(long, global = true, env = "RUNSTRUCT_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
enum Command {
    /// Atomic polynomials A_n.
    Atoms(PolyArgs),
    /// Circular polynomials C_n (n >= 2).
    Circular(PolyArgs),
    /// Linear polynomials L_n.
    Linear(LinearArgs),
    /// Valley polynomials K_n and the closed-form check.
    Valleys(ValleyArgs),
    /// Brute-force tallies over small permutation sets.
    Tally(TallyArgs),
    /// Compare brute-force tallies with the polynomial machinery.
    Verify(VerifyArgs),
    /// Special integer sequences.
    Sequences(SequenceArgs),
    /// Generating-function consistency reports for the named substitutions.
    Conjecture(ConjectureArgs),
    /// Natural merge sort with run statistics.
    Sort(SortArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Args, Debug, Serialize)]
struct PolyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Emit every polynomial up to n, not only the last.
    #[arg(long)]
    all: bool,
    /// Keep only monomials with this many factors.
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Route {
    /// `L_n = (D + 2 x_1) L_{n-1}`.
    Operator,
    /// Principal-atom convolution over `A_m L_{n-m}`.
    Convolution,
    /// Sum over partitions of products of atomic polynomials.
    Faa,
}

#[derive(Args, Debug, Serialize)]
struct LinearArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..))]
    n: u32,
    #[arg(long)]
    all: bool,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    #[arg(long, value_enum, default_value = "operator")]
    route: Route,
}

#[derive(Args, Debug, Serialize)]
struct ValleyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Print V(n, k) for every row up to n.
    #[arg(long)]
    table: bool,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    #[arg(long, requires_all = ["nu", "kappa"])]
    check_closed_form: bool,
    #[arg(long)]
    nu: Option<f64>,
    #[arg(long)]
    kappa: Option<f64>,
    /// Truncation order of the comparison series.
    #[arg(long, default_value_t = 25)]
    order: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Required distance of the tangent argument from a pole.
    #[arg(long, default_value_t = 1e-3)]
    pole_margin: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum TallyKind {
    Linear,
    Circular,
    AtomicRising,
    AtomicFalling,
    Valleys,
    Descents,
}

#[derive(Args, Debug, Serialize)]
struct CeilingArgs {
    #[arg(long, default_value_t = 8)]
    linear_ceiling: usize,
    #[arg(long, default_value_t = 9)]
    circular_ceiling: usize,
    #[arg(long, default_value_t = 9)]
    atomic_ceiling: usize,
}

#[derive(Args, Debug, Serialize)]
struct TallyArgs {
    #[arg(long, value_enum)]
    kind: TallyKind,
    /// Number of letters.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    #[command(flatten)]
    ceilings: CeilingArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Against {
    Poly,
    Valleys,
    Beta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum VerifyKind {
    Linear,
    Circular,
    Atomic,
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    against: Against,
    /// Polynomial family for `--against poly`.
    #[arg(long, value_enum, default_value = "circular")]
    kind: VerifyKind,
    /// Polynomial index (C_n uses n letters, A_n and L_n use n + 1); for
    /// `valleys` and `beta` the number of letters.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[command(flatten)]
    ceilings: CeilingArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum SequenceName {
    Secant,
    Tangent,
    Y,
    Catalan,
}

#[derive(Args, Debug, Serialize)]
struct SequenceArgs {
    #[arg(long, value_enum)]
    name: SequenceName,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FamilyArg {
    QftY,
    #[value(alias = "catalan-alternating")]
    Catalan,
    X1Only,
    Ones,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::QftY => Family::QftY,
            FamilyArg::Catalan => Family::Catalan,
            FamilyArg::X1Only => Family::X1Only,
            FamilyArg::Ones => Family::Ones,
        }
    }
}

#[derive(Args, Debug, Serialize)]
struct ConjectureArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    /// Largest n accepted.
    #[arg(long, default_value_t = 30)]
    budget: usize,
    /// Also compare the cumulant series with its closed form (qft-y only).
    #[arg(long)]
    mgf: bool,
    #[arg(long, default_value_t = 0.01)]
    lambda: f64,
    #[arg(long, default_value_t = 15)]
    mgf_terms: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args, Debug, Serialize)]
#[group(required = true, multiple = false, id = "source")]
struct SortSource {
    /// File with one integer per line.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Sort this many random keys.
    #[arg(long)]
    random: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
struct SortArgs {
    #[command(flatten)]
    source: SortSource,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the statistics as JSON instead of the sorted keys.
    #[arg(long)]
    stats: bool,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// What a subcommand produced: text for stdout and whether its checks held.
struct Report {
    text: String,
    passed: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, passed: true }
    }
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let threads = cli.threads.map(usize::from);
    let result = with_threads(threads, |strategy| execute(&cli.command, strategy));
    match result {
        Ok(report) => {
            let code = if report.passed { EXIT_OK } else { EXIT_CHECK_FAILED };
            let stdout = if cli.manifest {
                manifest(&cli, threads, &report.text)
            } else {
                report.text
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Check(msg)) => Outcome {
            code: EXIT_CHECK_FAILED,
            stdout: String::new(),
            stderr: format!("check failed: {msg}\n"),
        },
    }
}

#[cfg(feature = "parallel")]
fn with_threads<R: Send>(
    threads: Option<usize>,
    f: impl FnOnce(Strategy) -> R + Send,
) -> R {
    match threads {
        Some(1) => f(Strategy::Sequential),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| f(Strategy::Parallel)),
            Err(_) => f(Strategy::Parallel),
        },
        None => f(Strategy::Parallel),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<R>(_threads: Option<usize>, f: impl FnOnce(Strategy) -> R) -> R {
    f(Strategy::Sequential)
}

fn manifest(cli: &Cli, threads: Option<usize>, output: &str) -> String {
    #[derive(Serialize)]
    struct Manifest<'a> {
        program: &'static str,
        version: &'static str,
        parallel_feature: bool,
        threads: Option<usize>,
        config: &'a Command,
        output: serde_json::Value,
    }
    let output = serde_json::from_str(output)
        .unwrap_or_else(|_| serde_json::Value::String(output.to_owned()));
    let m = Manifest {
        program: "runstruct",
        version: env!("CARGO_PKG_VERSION"),
        parallel_feature: cfg!(feature = "parallel"),
        threads,
        config: &cli.command,
        output,
    };
    serde_json::to_string_pretty(&m).expect("manifest serializes") + "\n"
}

fn execute(command: &Command, strategy: Strategy) -> Result<Report, Failure> {
    match command {
        Command::Atoms(a) => {
            let mut tables = RunTables::new(strategy, LinearRoute::Operator);
            let polys: Vec<(u32, RunPolynomial)> = index_range(a.n, a.all, 1)
                .map(|n| (n, tables.atomic(n as usize).clone()))
                .collect();
            Ok(Report::ok(render_polys("A", &polys, a.degree, a.format)))
        }
        Command::Circular(a) => {
            if a.n < 2 {
                return Err(Failure::Usage("C_n is defined for n >= 2".into()));
            }
            let mut tables = RunTables::new(strategy, LinearRoute::Operator);
            let polys: Vec<(u32, RunPolynomial)> = index_range(a.n, a.all, 2)
                .map(|n| (n, tables.circular(n as usize).clone()))
                .collect();
            Ok(Report::ok(render_polys("C", &polys, a.degree, a.format)))
        }
        Command::Linear(a) => linear(a, strategy),
        Command::Valleys(a) => valleys(a, strategy),
        Command::Tally(a) => tally(a, strategy),
        Command::Verify(a) => verify(a, strategy),
        Command::Sequences(a) => Ok(Report::ok(sequences(a))),
        Command::Conjecture(a) => conjecture(a, strategy),
        Command::Sort(a) => sort(a),
    }
}

fn index_range(n: u32, all: bool, first: u32) -> std::ops::RangeInclusive<u32> {
    if all {
        first..=n
    } else {
        n..=n
    }
}

fn subscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

fn csv_string(rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("utf-8 csv")
}

fn render_polys(
    name: &str,
    polys: &[(u32, RunPolynomial)],
    degree: Option<usize>,
    format: Format,
) -> String {
    let polys: Vec<(u32, RunPolynomial)> = polys
        .iter()
        .map(|(n, p)| (*n, degree.map_or_else(|| p.clone(), |d| p.degree_part(d))))
        .collect();
    match format {
        Format::Pretty => polys
            .iter()
            .map(|(n, p)| format!("{name}{} = {p}\n", subscript(*n)))
            .collect(),
        Format::Json => {
            #[derive(Serialize)]
            struct Entry<'a> {
                name: &'a str,
                n: u32,
                terms: &'a RunPolynomial,
            }
            let entries: Vec<Entry> = polys
                .iter()
                .map(|(n, p)| Entry { name, n: *n, terms: p })
                .collect();
            serde_json::to_string(&entries).expect("polynomials serialize") + "\n"
        }
        Format::Csv => {
            let header = ["name", "n", "partition", "coeff"].map(String::from).to_vec();
            let rows = polys.iter().flat_map(|(n, p)| {
                p.terms().iter().rev().map(move |(k, c)| {
                    vec![name.to_string(), n.to_string(), k.to_string(), c.to_string()]
                })
            });
            csv_string(std::iter::once(header).chain(rows))
        }
    }
}

fn linear(a: &LinearArgs, strategy: Strategy) -> Result<Report, Failure> {
    let indices = index_range(a.n, a.all, 0);
    let polys: Vec<(u32, RunPolynomial)> = match a.route {
        Route::Operator | Route::Convolution => {
            let route = if a.route == Route::Operator {
                LinearRoute::Operator
            } else {
                LinearRoute::Convolution
            };
            let mut tables = RunTables::new(strategy, route);
            indices
                .map(|n| (n, tables.linear(n as usize).clone()))
                .collect()
        }
        Route::Faa => {
            let atoms = atomic_polys(a.n as usize);
            indices
                .map(|n| Ok((n, linear_polys_faa(n as usize, atoms.as_slice())?)))
                .collect::<Result<_, Error>>()?
        }
    };
    Ok(Report::ok(render_polys("L", &polys, a.degree, a.format)))
}

fn valleys(a: &ValleyArgs, strategy: Strategy) -> Result<Report, Failure> {
    if a.check_closed_form {
        if a.tol.is_nan() || a.tol <= 0.0 {
            return Err(Failure::Usage("--tol must be positive".into()));
        }
        let check = ClosedFormCheck {
            order: a.order,
            tolerance: a.tol,
            pole_margin: a.pole_margin,
        };
        let (nu, kappa) = (a.nu.unwrap_or_default(), a.kappa.unwrap_or_default());
        let r = check_closed_form(nu, kappa, &check)?;
        let status = if r.passed { "PASS" } else { "FAIL" };
        let text = match a.format {
            Format::Json => {
                serde_json::json!({
                    "nu": r.nu, "kappa": r.kappa, "order": a.order, "tolerance": a.tol,
                    "closed_form": r.closed_form, "series": r.series,
                    "difference": r.difference, "status": status,
                })
                .to_string()
                    + "\n"
            }
            Format::Csv => csv_string([
                ["nu", "kappa", "order", "closed_form", "series", "difference", "status"]
                    .map(String::from)
                    .to_vec(),
                vec![
                    r.nu.to_string(),
                    r.kappa.to_string(),
                    a.order.to_string(),
                    format!("{:e}", r.closed_form),
                    format!("{:e}", r.series),
                    format!("{:e}", r.difference),
                    status.into(),
                ],
            ]),
            Format::Pretty => format!(
                "{status} closed form at nu = {}, kappa = {}: {:.15} vs series(N = {}) {:.15}, |diff| = {:e} (tol {:e})\n",
                r.nu, r.kappa, r.closed_form, a.order, r.series, r.difference, a.tol
            ),
        };
        return Ok(Report {
            text,
            passed: r.passed,
        });
    }
    let rows = valley_table_with(a.n as usize, strategy)?;
    let first = if a.table { 1 } else { a.n };
    let selected: Vec<(u32, &runstruct::valleys::ValleyPolynomial)> =
        (first..=a.n).map(|n| (n, &rows[n as usize - 1])).collect();
    let text = match a.format {
        Format::Pretty => selected
            .iter()
            .map(|(n, k)| format!("K{} = {k}\n", subscript(*n)))
            .collect(),
        Format::Json => {
            let v: Vec<serde_json::Value> = selected
                .iter()
                .map(|(n, k)| {
                    let coeffs: Vec<String> = k.coeffs().iter().map(|c| c.to_string()).collect();
                    serde_json::json!({ "n": n, "coeffs": coeffs })
                })
                .collect();
            serde_json::Value::Array(v).to_string() + "\n"
        }
        Format::Csv => {
            let header = ["n", "k", "V"].map(String::from).to_vec();
            let body = selected.iter().flat_map(|(n, k)| {
                k.coeffs()
                    .iter()
                    .enumerate()
                    .map(move |(i, c)| vec![n.to_string(), i.to_string(), c.to_string()])
            });
            csv_string(std::iter::once(header).chain(body))
        }
    };
    Ok(Report::ok(text))
}

fn oracle_config(c: &CeilingArgs, strategy: Strategy) -> OracleConfig {
    OracleConfig {
        linear_ceiling: c.linear_ceiling,
        circular_ceiling: c.circular_ceiling,
        atomic_ceiling: c.atomic_ceiling,
        strategy,
    }
}

fn descent_label(s: &BTreeSet<usize>) -> String {
    let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn tally(a: &TallyArgs, strategy: Strategy) -> Result<Report, Failure> {
    let config = oracle_config(&a.ceilings, strategy);
    let n = a.n as usize;
    let (key_name, rows): (&str, Vec<(String, u64)>) = match a.kind {
        TallyKind::Valleys => (
            "valleys",
            tally_valleys(n, &config)?
                .into_iter()
                .enumerate()
                .map(|(k, c)| (k.to_string(), c))
                .collect(),
        ),
        TallyKind::Descents => (
            "descent_set",
            tally_descent_sets(n, &config)?
                .into_iter()
                .map(|(s, c)| (descent_label(&s), c))
                .collect(),
        ),
        kind => {
            let kind = match kind {
                TallyKind::Linear => PermutationKind::Linear,
                TallyKind::Circular => PermutationKind::Circular,
                TallyKind::AtomicRising => PermutationKind::AtomicRising,
                _ => PermutationKind::AtomicFalling,
            };
            (
                "structure",
                tally_run_structures(kind, n, &config)?
                    .into_iter()
                    .rev()
                    .map(|(p, c)| (p.to_string(), c))
                    .collect(),
            )
        }
    };
    let text = match a.format {
        Format::Pretty => rows.iter().map(|(k, c)| format!("{k}\t{c}\n")).collect(),
        Format::Json => {
            let v: Vec<serde_json::Value> = rows
                .iter()
                .map(|(k, c)| serde_json::json!({ key_name: k, "count": c.to_string() }))
                .collect();
            serde_json::Value::Array(v).to_string() + "\n"
        }
        Format::Csv => csv_string(
            std::iter::once(vec![key_name.to_string(), "count".to_string()])
                .chain(rows.iter().map(|(k, c)| vec![k.clone(), c.to_string()])),
        ),
    };
    Ok(Report::ok(text))
}

fn verify(a: &VerifyArgs, strategy: Strategy) -> Result<Report, Failure> {
    let config = oracle_config(&a.ceilings, strategy);
    let n = a.n as usize;
    let mut tables = RunTables::new(strategy, LinearRoute::Operator);
    let (label, mismatches): (String, Vec<String>) = match a.against {
        Against::Poly => {
            let (label, kind, letters, poly) = match a.kind {
                VerifyKind::Circular => {
                    if n < 2 {
                        return Err(Failure::Usage("C_n is defined for n >= 2".into()));
                    }
                    ("C", PermutationKind::Circular, n, tables.circular(n).clone())
                }
                VerifyKind::Atomic => ("A", PermutationKind::AtomicRising, n + 1, tables.atomic(n).clone()),
                VerifyKind::Linear => ("L", PermutationKind::Linear, n + 1, tables.linear(n).clone()),
            };
            let tally = tally_run_structures(kind, letters, &config)?;
            let got: BTreeMap<Partition, String> =
                tally.into_iter().map(|(k, v)| (k, v.to_string())).collect();
            let want: BTreeMap<Partition, String> = poly
                .terms()
                .iter()
                .map(|(k, c)| (k.clone(), c.to_string()))
                .collect();
            (
                format!("oracle tally over {letters} letters equals {label}{} coefficients", subscript(a.n)),
                diff_maps(&got, &want),
            )
        }
        Against::Valleys => {
            let counts = tally_valleys(n, &config)?;
            let table = valley_table_with(n, strategy)?;
            let k = &table[n - 1];
            let got: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
            let want: Vec<String> = k.coeffs().iter().map(|c| c.to_string()).collect();
            let bad = if got == want {
                Vec::new()
            } else {
                vec![format!("tally {got:?} vs K_{n} {want:?}")]
            };
            (format!("valley tally equals K{} = {k}", subscript(a.n)), bad)
        }
        Against::Beta => {
            let counts = tally_descent_sets(n, &config)?;
            let mut bad = Vec::new();
            for mask in 0u64..(1 << (n - 1)) {
                let s: BTreeSet<usize> = (0..n - 1)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| i + 1)
                    .collect();
                let want = counts.get(&s).copied().unwrap_or(0);
                let got = beta(&s, n)?;
                if got != want.into() {
                    bad.push(format!("beta({}, {n}) = {got}, brute force {want}", descent_label(&s)));
                }
            }
            (format!("beta(S, {n}) equals brute force for all {} sets", 1u64 << (n - 1)), bad)
        }
    };
    let mut text = String::new();
    if mismatches.is_empty() {
        writeln!(text, "PASS {label}").unwrap();
    } else {
        writeln!(text, "FAIL {label}").unwrap();
        for m in &mismatches {
            writeln!(text, "  {m}").unwrap();
        }
    }
    Ok(Report {
        text,
        passed: mismatches.is_empty(),
    })
}

fn diff_maps(got: &BTreeMap<Partition, String>, want: &BTreeMap<Partition, String>) -> Vec<String> {
    let keys: BTreeSet<&Partition> = got.keys().chain(want.keys()).collect();
    keys.into_iter()
        .filter_map(|k| {
            let (g, w) = (got.get(k), want.get(k));
            (g != w).then(|| {
                format!(
                    "{k}: tally {}, polynomial {}",
                    g.map_or("0", String::as_str),
                    w.map_or("0", String::as_str)
                )
            })
        })
        .collect()
}

fn sequences(a: &SequenceArgs) -> String {
    let n = a.n as usize;
    let (name, first, values): (&str, usize, Vec<String>) = match a.name {
        SequenceName::Secant => ("S", 0, secant_numbers(n).iter().map(|v| v.to_string()).collect()),
        SequenceName::Tangent => ("T", 1, tangent_numbers(n).iter().map(|v| v.to_string()).collect()),
        SequenceName::Y => ("y", 1, y_sequence(n).iter().map(|v| v.to_string()).collect()),
        SequenceName::Catalan => ("Cat", 0, catalan_numbers(n).iter().map(|v| v.to_string()).collect()),
    };
    match a.format {
        Format::Pretty => values
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{name}{} = {v}\n", subscript((first + i) as u32)))
            .collect(),
        Format::Json => {
            let v: Vec<serde_json::Value> = values
                .iter()
                .enumerate()
                .map(|(i, v)| serde_json::json!({ "n": first + i, "value": v }))
                .collect();
            serde_json::Value::Array(v).to_string() + "\n"
        }
        Format::Csv => csv_string(
            std::iter::once(vec!["n".to_string(), "value".to_string()]).chain(
                values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| vec![(first + i).to_string(), v.clone()]),
            ),
        ),
    }
}

fn conjecture(a: &ConjectureArgs, strategy: Strategy) -> Result<Report, Failure> {
    let family: Family = a.family.into();
    let config = ReportConfig {
        budget: a.budget,
        strategy,
    };
    let rows = conjecture_report_with(family, a.n as usize, &config)?;
    let mgf = if a.mgf {
        if family != Family::QftY {
            return Err(Failure::Usage("--mgf applies to the qft-y family only".into()));
        }
        if a.tol.is_nan() || a.tol <= 0.0 {
            return Err(Failure::Usage("--tol must be positive".into()));
        }
        Some(mgf_check(a.lambda, a.mgf_terms, a.tol)?)
    } else {
        None
    };
    let consistent = rows.iter().all(|r| r.status == Status::Consistent)
        && mgf.is_none_or(|m| m.passed);
    let overall = if consistent {
        Status::Consistent.label()
    } else {
        Status::Mismatch.label()
    };
    let text = match a.format {
        Format::Json => {
            let mut v = serde_json::json!({
                "family": family.name(),
                "n_max": a.n,
                "status": overall,
                "rows": rows,
            });
            if let Some(m) = mgf {
                v["mgf"] = serde_json::to_value(m).expect("mgf serializes");
            }
            v.to_string() + "\n"
        }
        Format::Csv => csv_string(
            std::iter::once(["n", "quantity", "expected", "computed", "status"].map(String::from).to_vec())
                .chain(rows.iter().map(|r| {
                    vec![
                        r.n.to_string(),
                        format!("{:?}", r.quantity),
                        r.expected.to_string(),
                        r.computed.to_string(),
                        r.status.label().to_string(),
                    ]
                })),
        ),
        Format::Pretty => {
            let mut t = String::new();
            for r in &rows {
                writeln!(
                    t,
                    "{:?}{} expected {} computed {} {}",
                    r.quantity,
                    subscript(r.n as u32),
                    r.expected,
                    r.computed,
                    r.status.label()
                )
                .unwrap();
            }
            if let Some(m) = mgf {
                writeln!(
                    t,
                    "cumulant series at lambda = {} (N = {}): {:.15} vs closed form {:.15}, |diff| = {:e}",
                    m.lambda, m.terms, m.partial_sum, m.closed_form, m.difference
                )
                .unwrap();
            }
            writeln!(t, "{}: {overall}", family.name()).unwrap();
            t
        }
    };
    Ok(Report {
        text,
        passed: consistent,
    })
}

fn sort(a: &SortArgs) -> Result<Report, Failure> {
    let keys: Vec<i64> = match (&a.source.input, a.source.random) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            text.lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| {
                    l.trim().parse::<i64>().map_err(|e| {
                        Failure::Usage(format!("{}:{}: {e}", path.display(), i + 1))
                    })
                })
                .collect::<Result<_, _>>()?
        }
        (None, Some(count)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            (0..count).map(|_| i64::from(rng.gen::<u32>())).collect()
        }
        (None, None) => return Err(Failure::Usage("one of --input or --random is required".into())),
    };
    let (sorted, stats) = natural_merge_sort(&keys);
    if !sorted.windows(2).all(|w| w[0] <= w[1]) {
        return Err(Failure::Check("output is not sorted".into()));
    }
    let text = if a.stats {
        serde_json::to_string(&stats).expect("stats serialize") + "\n"
    } else {
        let mut t = String::with_capacity(sorted.len() * 8);
        for k in &sorted {
            writeln!(t, "{k}").unwrap();
        }
        t
    };
    Ok(Report::ok(text))
}
