//! `ferrers`: evaluate, trace and classify the Ferrers function and its
//! sine series from the command line.

mod output;

use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ferrers_core::ferrers::{
    classify_order, ferrers_p_with, fourier_partial_sum, CutPlanePoint, DegreeOrder, Point,
    ThetaPoint,
};
use ferrers_core::fixture::{acceptance_grid, reference_record, write_record, FixtureError};
use ferrers_core::hyp2f1::DISC_TOLERANCE;
use ferrers_core::lemma::{lemma3_trace, lemma4_trace};
use ferrers_core::oracle::MIN_DIGITS;
use ferrers_core::text::{format_complex, parse_angle, parse_complex, ParseError};
use ferrers_core::Complex64;

use output::{emit, Cell, Format, Table};

#[derive(Parser)]
#[command(
    name = "ferrers",
    version,
    about = "Ferrers function of the first kind and its sine series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Params {
    /// Degree, e.g. `0.3+0.2i`
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    nu: String,
    /// Order
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Args)]
struct Output {
    /// Output file, replaced atomically; stdout if absent
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate P at a point x of the cut plane or an angle theta
    Eval {
        #[command(flatten)]
        params: Params,
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "theta",
            required_unless_present = "theta"
        )]
        x: Option<String>,
        /// Radians, or a multiple of pi such as `0.5pi`
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        #[arg(long, env = "FERRERS_TOLERANCE", default_value_t = DISC_TOLERANCE)]
        tolerance: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Partial sums of the sine series for k = 0..=n-max
    Trace {
        #[command(flatten)]
        params: Params,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        n_max: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Convergence class of the sine series at a real angle
    Classify {
        /// Checked against the order when given; the class depends on the order only
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[command(flatten)]
        out: Output,
    },
    /// Running sums of |sin((a+2k)theta)|/k
    Lemma3 {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        n_max: u64,
        #[command(flatten)]
        out: Output,
    },
    /// |sin(a+bn)| for n in [start, start+window] with the running maximum
    Lemma4 {
        /// Complex, or a multiple of pi such as `pi`
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        start: u64,
        #[arg(long, default_value_t = 10)]
        window: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Extended-precision reference values over the acceptance grid, as JSON lines
    Fixtures {
        #[arg(long, default_value_t = MIN_DIGITS)]
        digits: u32,
        /// Output file, replaced atomically; stdout if absent
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Io(io::Error),
    Value(ferrers_core::Error),
    Parse(ParseError),
    Config(String),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Value(e) => e.code(),
            CliError::Parse(_) => "parse",
            CliError::Config(_) => "config",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Io(e) => e.to_string(),
            CliError::Value(e) => e.to_string(),
            CliError::Parse(e) => e.to_string(),
            CliError::Config(s) => s.clone(),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<ferrers_core::Error> for CliError {
    fn from(e: ferrers_core::Error) -> Self {
        CliError::Value(e)
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<FixtureError> for CliError {
    fn from(e: FixtureError) -> Self {
        match e {
            FixtureError::Io(e) => CliError::Io(e),
            FixtureError::Text(e) => CliError::Parse(e),
            FixtureError::Value(e) => CliError::Value(e),
            other => CliError::Config(other.to_string()),
        }
    }
}

fn degree_order(p: &Params) -> Result<DegreeOrder, CliError> {
    Ok(DegreeOrder::new(
        parse_complex(&p.nu)?,
        parse_complex(&p.mu)?,
    )?)
}

/// A real angle for the sine series and the lemmas.
fn real_angle(text: &str) -> Result<f64, CliError> {
    let t = parse_angle(text)?;
    if t.im != 0.0 {
        return Err(CliError::Config(format!("theta = {t} must be real here")));
    }
    Ok(t.re)
}

fn require_positive(name: &str, n: u64) -> Result<(), CliError> {
    if n == 0 {
        Err(CliError::Config(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn text(z: Complex64) -> Cell {
    Cell::Text(format_complex(z))
}

fn eval(
    params: &Params,
    x: Option<&str>,
    theta: Option<&str>,
    tol: f64,
) -> Result<Table, CliError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Config(format!(
            "tolerance {tol} must be positive"
        )));
    }
    let p = degree_order(params)?;
    let (label, point) = match (x, theta) {
        (Some(x), _) => {
            let z = parse_complex(x)?;
            (
                format!("x:{}", format_complex(z)),
                Point::from(CutPlanePoint::new(z)?),
            )
        }
        (None, Some(t)) => {
            let z = parse_angle(t)?;
            (
                format!("theta:{}", format_complex(z)),
                Point::from(ThetaPoint::new(z)?),
            )
        }
        (None, None) => return Err(CliError::Config("one of --x or --theta is required".into())),
    };
    let v = ferrers_p_with(&p, point, tol)?;
    let mut t = Table::new(&[
        "nu",
        "mu",
        "point",
        "value_re",
        "value_im",
        "error_estimate",
        "method",
        "terms",
    ]);
    t.push(vec![
        text(p.nu()),
        text(p.mu()),
        Cell::Text(label),
        Cell::Real(v.value.re),
        Cell::Real(v.value.im),
        Cell::Real(v.error_estimate),
        Cell::Text(v.method.tag().into()),
        Cell::Int(v.terms_used as u64),
    ]);
    Ok(t)
}

fn trace(params: &Params, theta: &str, n_max: u64) -> Result<Table, CliError> {
    require_positive("n-max", n_max)?;
    let p = degree_order(params)?;
    let (_, tr) = fourier_partial_sum(&p, real_angle(theta)?, n_max)?;
    let mut t = Table::new(&[
        "k", "coeff_re", "coeff_im", "term_re", "term_im", "psum_re", "psum_im", "abs_psum",
    ]);
    for r in &tr.records {
        t.push(vec![
            Cell::Int(r.k),
            Cell::Real(r.coefficient.re),
            Cell::Real(r.coefficient.im),
            Cell::Real(r.term.re),
            Cell::Real(r.term.im),
            Cell::Real(r.partial_sum.re),
            Cell::Real(r.partial_sum.im),
            Cell::Real(r.abs_partial_sum),
        ]);
    }
    Ok(t)
}

fn classify(nu: Option<&str>, mu: &str, theta: &str) -> Result<Table, CliError> {
    let mu = parse_complex(mu)?;
    let nu = match nu {
        Some(s) => Cell::Text(format_complex(
            DegreeOrder::new(parse_complex(s)?, mu)?.nu(),
        )),
        None => Cell::Text(String::new()),
    };
    let th = real_angle(theta)?;
    ThetaPoint::real(th)?;
    let class = classify_order(mu, th);
    let mut t = Table::new(&["nu", "mu", "theta", "class"]);
    t.push(vec![
        nu,
        text(mu),
        Cell::Real(th),
        Cell::Text(class.name().into()),
    ]);
    Ok(t)
}

fn lemma3(a: &str, theta: &str, n_max: u64) -> Result<Table, CliError> {
    require_positive("n-max", n_max)?;
    let tr = lemma3_trace(parse_angle(a)?, real_angle(theta)?, n_max)?;
    let mut t = Table::new(&["n", "term", "running_sum"]);
    for r in tr {
        t.push(vec![
            Cell::Int(r.n),
            Cell::Real(r.value),
            Cell::Real(r.running_sum),
        ]);
    }
    Ok(t)
}

fn lemma4(a: &str, b: &str, start: u64, window: u64) -> Result<Table, CliError> {
    require_positive("window", window)?;
    let tr = lemma4_trace(parse_angle(a)?, parse_angle(b)?, start, window);
    let mut t = Table::new(&["n", "abs_sin", "running_max"]);
    for r in tr {
        t.push(vec![
            Cell::Int(r.n),
            Cell::Real(r.value),
            Cell::Real(r.running_sum),
        ]);
    }
    Ok(t)
}

fn fixtures(digits: u32) -> Result<Vec<u8>, CliError> {
    let mut out = Vec::new();
    for case in acceptance_grid() {
        write_record(&mut out, &reference_record(&case, digits)?)?;
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (table, out) = match cli.command {
        Command::Eval {
            params,
            x,
            theta,
            tolerance,
            out,
        } => (
            eval(&params, x.as_deref(), theta.as_deref(), tolerance)?,
            out,
        ),
        Command::Trace {
            params,
            theta,
            n_max,
            out,
        } => (trace(&params, &theta, n_max)?, out),
        Command::Classify { nu, mu, theta, out } => (classify(nu.as_deref(), &mu, &theta)?, out),
        Command::Lemma3 {
            a,
            theta,
            n_max,
            out,
        } => (lemma3(&a, &theta, n_max)?, out),
        Command::Lemma4 {
            a,
            b,
            start,
            window,
            out,
        } => (lemma4(&a, &b, start, window)?, out),
        Command::Fixtures { digits, output } => {
            return Ok(emit(&fixtures(digits)?, output.as_deref())?);
        }
    };
    emit(&table.render(out.format)?, out.output.as_deref())?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let line = serde_json::json!({ "error": e.code(), "message": e.message() });
            eprintln!("{line}");
            ExitCode::from(e.exit_code())
        }
    }
}
