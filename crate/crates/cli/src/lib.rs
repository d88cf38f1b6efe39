//! The `sl3ext` command line.
//!
//! Every command reads JSON and writes JSON (or CSV where noted). Exit status is 0 when a
//! question was decided, 2 when a search bound ran out, and 1 on bad input.

mod verify;

use std::fmt::Write as _;
use std::io::Read;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sl3ext::classification::{classify_finite_ring, classify_sweep, th2_spot_check, RingClassReport, DEFAULT_CAP};
use sl3ext::enumeration::nu_enumerate;
use sl3ext::extension::{self, diagonal_reduce, extension_from_diagonal, nonfull_factorize, ExtensionOutcome};
use sl3ext::json::{self as sj, elem_from_json, mat2_from_json};
use sl3ext::{Error, Mat2, Ring};

#[derive(Parser, Debug)]
#[command(name = "sl3ext", version, about = "SL3-extensions of unimodular 2x2 matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide extendability and build an extension.
    Extend(MatrixArgs),
    /// Decide simple extendability and build a simple extension.
    SimpleExtend(MatrixArgs),
    /// Diagonal reduction M A N = Diag(1, det A), or reduction modulo an element.
    Reduce(ReduceArgs),
    /// Enumerate simple extensions up to a height bound and their middle coefficients.
    Nu(NuArgs),
    /// Determinant type, simple extendability, extendability and fullness of one matrix.
    ClassifyMatrix(MatrixArgs),
    /// Exhaustive ring-level checks on a finite ring, or on Z/n over a range of n.
    ClassifyRing(RingArgs),
    /// Run the built-in golden suite.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    /// Matrix JSON file, `-` for stdin.
    #[arg(long)]
    pub input: PathBuf,
    /// Ring JSON used when the matrix file has no `ring` field.
    #[arg(long)]
    pub ring: Option<String>,
    /// Height bound for searches.
    #[arg(long, default_value_t = extension::DEFAULT_BOUND, value_parser = clap::value_parser!(u32).range(1..))]
    pub bound: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub matrix: MatrixArgs,
    /// Element JSON; reduce the entries modulo it instead of diagonalising.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Args, Debug)]
pub struct NuArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub ring: Option<String>,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub bound: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct RingArgs {
    /// Ring JSON.
    #[arg(long, conflicts_with_all = ["input", "sweep"])]
    pub ring: Option<String>,
    /// File holding ring JSON.
    #[arg(long, conflicts_with = "sweep")]
    pub input: Option<PathBuf>,
    /// Classify Z/n for n in `a..b` (inclusive).
    #[arg(long, value_parser = parse_sweep)]
    pub sweep: Option<RangeInclusive<u64>>,
    /// Largest ring size accepted.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Also check that extendable and simply extendable agree on every matrix.
    #[arg(long)]
    pub th2: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Seed for the randomised checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Range of n for the Z/n classification sweep.
    #[arg(long, value_parser = parse_sweep, default_value = "2..12")]
    pub sweep: RangeInclusive<u64>,
    /// Table by default.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// `a..b` with `2 <= a <= b`.
pub fn parse_sweep(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: u64 = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a < 2 || a > b {
        return Err(format!("range {a}..{b} must satisfy 2 <= a <= b"));
    }
    Ok(a..=b)
}

/// What a command produced.
#[derive(Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
}

impl Output {
    fn done(stdout: String) -> Output {
        Output { code: 0, stdout }
    }
}

#[derive(Debug)]
pub struct CliError(pub String);

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_input(path: &PathBuf) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
    }
}

fn parse_json(text: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| CliError(format!("malformed JSON: {e}")))
}

fn load_ring(spec: &str) -> CliResult<Ring> {
    Ok(sj::ring_from_json(&parse_json(spec)?)?)
}

/// The matrix in `path`, with its raw JSON for optional extra fields.
fn load_matrix(path: &PathBuf, ring: &Option<String>) -> CliResult<(Mat2, Value)> {
    let v = parse_json(&read_input(path)?)?;
    let default = ring.as_deref().map(load_ring).transpose()?;
    Ok((mat2_from_json(&v, default.as_ref())?, v))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn json_only(format: Format, command: &str) -> CliResult<()> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(CliError(format!("{command} has no CSV output"))),
    }
}

fn outcome_code(o: &ExtensionOutcome) -> i32 {
    if matches!(o, ExtensionOutcome::Undecided { .. }) {
        2
    } else {
        0
    }
}

fn run_extension(args: &MatrixArgs, simple: bool) -> CliResult<Output> {
    json_only(args.format, if simple { "simple-extend" } else { "extend" })?;
    let (a, _) = load_matrix(&args.input, &args.ring)?;
    let out = if simple { extension::simply_extend(&a, args.bound)? } else { extension::extend(&a, args.bound)? };
    let out = extension::validate(&a, out)?;
    Ok(Output { code: outcome_code(&out), stdout: pretty(&sj::outcome_to_json(a.ring(), &out)) })
}

fn run_reduce(args: &ReduceArgs) -> CliResult<Output> {
    json_only(args.matrix.format, "reduce")?;
    let (a, raw) = load_matrix(&args.matrix.input, &args.matrix.ring)?;
    let r = a.ring();
    if let Some(m) = &args.modulus {
        let modulus = elem_from_json(r, &parse_json(m)?)?;
        return Ok(Output::done(pretty(&json!({"reduced": sj::mat2_to_json(&a.reduce_mod(&modulus)?)}))));
    }
    let cert = match raw.get("certificate") {
        Some(c) => sj::certificate_from_json(r, c)?,
        None => match extension::simply_extend(&a, args.matrix.bound)? {
            ExtensionOutcome::Simple { certificate, .. } => certificate,
            other => return Ok(Output { code: outcome_code(&other), stdout: pretty(&sj::outcome_to_json(r, &other)) }),
        },
    };
    let (m, n) = diagonal_reduce(&a, &cert)?;
    let ext = extension_from_diagonal(&m, &n, &a.det())?;
    let ext = match extension::validate(&a, ExtensionOutcome::Simple { extension: ext, certificate: cert.clone() }) {
        Ok(ExtensionOutcome::Simple { extension, .. }) => extension,
        Ok(_) => unreachable!("validate keeps the variant"),
        Err(e) => return Err(e.into()),
    };
    let v = json!({
        "certificate": sj::certificate_to_json(r, &cert),
        "M": sj::mat2_to_json(&m),
        "N": sj::mat2_to_json(&n),
        "diagonal": sj::mat2_to_json(&m.mul(&a).mul(&n)),
        "extension": sj::mat3_to_json(&ext),
    });
    Ok(Output::done(pretty(&v)))
}

fn run_nu(args: &NuArgs) -> CliResult<Output> {
    let (a, _) = load_matrix(&args.input, &args.ring)?;
    let sample = nu_enumerate(&a, args.bound)?;
    let stdout = match args.format {
        Format::Json => pretty(&sj::nu_sample_to_json(&sample)),
        Format::Csv => {
            let r = a.ring();
            let mut s = String::from("e,f,s,t,nu\n");
            for c in &sample.gamma {
                let row = [&c.e, &c.f, &c.s, &c.t].map(|x| r.show(x)).join(",");
                writeln!(s, "{row},{}", r.show(&c.nu(&a))).expect("write to string");
            }
            s
        }
    };
    Ok(Output::done(stdout))
}

fn run_classify_matrix(args: &MatrixArgs) -> CliResult<Output> {
    json_only(args.format, "classify-matrix")?;
    let (a, _) = load_matrix(&args.input, &args.ring)?;
    let r = a.ring();
    let det = a.det();
    let det_kind = if r.is_zero(&det) {
        "zero"
    } else if r.is_unit(&det) {
        "unit"
    } else {
        "other"
    };
    let simple = extension::simply_extend(&a, args.bound)?;
    let ext = extension::extend(&a, args.bound)?;
    let mut v = json!({
        "matrix": sj::mat2_to_json(&a),
        "det": sj::elem_to_json(r, &det),
        "det_kind": det_kind,
        "simple_extend": sj::outcome_to_json(r, &simple),
        "extend": sj::outcome_to_json(r, &ext),
    });
    if r.is_zero(&det) {
        v["fullness"] = sj::witness_to_json(r, &nonfull_factorize(&a)?);
    }
    Ok(Output { code: outcome_code(&simple).max(outcome_code(&ext)), stdout: pretty(&v) })
}

const CSV_HEADER: &str = "n,sr1,fsr15,asr1,pi2,e2,se2";

fn csv_row(label: &str, r: &RingClassReport) -> String {
    let flags = [r.sr1, r.fsr15, r.asr1, r.pi2, r.e2, r.se2].map(|b| b.to_string()).join(",");
    format!("{label},{flags}\n")
}

fn run_classify_ring(args: &RingArgs) -> CliResult<Output> {
    let with_th2 = |ring: &Ring, mut v: Value| -> CliResult<Value> {
        if args.th2 {
            v["th2"] = sj::check_to_json(ring, &th2_spot_check(ring)?);
        }
        Ok(v)
    };
    if let Some(range) = &args.sweep {
        let reports = classify_sweep(range.clone(), args.cap)?;
        let stdout = match args.format {
            Format::Json => {
                let mut items = Vec::new();
                for (n, rep) in range.clone().zip(&reports) {
                    items.push(with_th2(&Ring::zmod(n)?, sj::report_to_json(rep))?);
                }
                pretty(&Value::Array(items))
            }
            Format::Csv => {
                let mut s = format!("{CSV_HEADER}\n");
                for (n, rep) in range.clone().zip(&reports) {
                    s.push_str(&csv_row(&n.to_string(), rep));
                }
                s
            }
        };
        return Ok(Output::done(stdout));
    }
    let spec = match (&args.ring, &args.input) {
        (Some(s), _) => s.clone(),
        (None, Some(p)) => read_input(p)?,
        (None, None) => return Err(CliError("classify-ring needs --ring, --input or --sweep".into())),
    };
    let ring = load_ring(&spec)?;
    let report = classify_finite_ring(&ring, args.cap)?;
    let stdout = match args.format {
        Format::Json => pretty(&with_th2(&ring, sj::report_to_json(&report))?),
        Format::Csv => format!("{CSV_HEADER}\n{}", csv_row(&ring.descriptor().to_string(), &report)),
    };
    Ok(Output::done(stdout))
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Extend(a) => run_extension(a, false),
        Command::SimpleExtend(a) => run_extension(a, true),
        Command::Reduce(a) => run_reduce(a),
        Command::Nu(a) => run_nu(a),
        Command::ClassifyMatrix(a) => run_classify_matrix(a),
        Command::ClassifyRing(a) => run_classify_ring(a),
        Command::Verify(a) => verify::run(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_ranges() {
        assert_eq!(parse_sweep("2..30"), Ok(2..=30));
        assert_eq!(parse_sweep("5..=5"), Ok(5..=5));
        assert!(parse_sweep("9..3").is_err());
        assert!(parse_sweep("1..3").is_err());
        assert!(parse_sweep("2-3").is_err());
    }

    #[test]
    fn clap_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn bound_must_be_positive() {
        assert!(Cli::try_parse_from(["sl3ext", "extend", "--input", "x.json", "--bound", "0"]).is_err());
        assert!(Cli::try_parse_from(["sl3ext", "extend", "--input", "x.json", "--bound", "1"]).is_ok());
    }
}
