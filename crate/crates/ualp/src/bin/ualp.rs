//! Command-line front end: evaluate polynomials, tabulate value grids, and
//! run identity-verification sweeps with machine-readable reports.
//!
//! Exit codes: 0 success/all-passed, 1 verification failures present,
//! 2 usage error, 3 I/O error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ualp::{
    default_engine_spec, default_grid, format_f64, ualp_eval, utc_timestamp_now,
    verify_identity_grid, GridPoint, Identity, PolyParams, ReportDocument,
};

#[derive(Debug, Parser)]
#[command(
    name = "ualp",
    version,
    about = "Universal associated Legendre polynomials: evaluation, tabulation, identity verification"
)]
struct Cli {
    /// Absolute tolerance for verification pass/fail decisions.
    #[arg(long, global = true, default_value_t = 1e-7)]
    abs_tol: f64,
    /// Relative tolerance for verification pass/fail decisions.
    #[arg(long, global = true, default_value_t = 1e-7)]
    rel_tol: f64,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to this path instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Omit the report timestamp so identical runs are byte-identical.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Evaluate P_{l'}^{m'} at one or more abscissae; CSV rows to stdout.
    Eval(EvalArgs),
    /// Tabulate P for degree offsets 0..=n-max on a uniform abscissa grid.
    Tabulate(TabulateArgs),
    /// Check one integral identity over a parameter grid and emit a report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// Order m' >= 0 (may be fractional).
    #[arg(long)]
    m_prime: f64,
    /// Degree offset n = l' - m' (non-negative integer).
    #[arg(long)]
    n: u32,
    /// Abscissae in [-1, 1], comma separated or repeated.
    #[arg(
        long,
        value_delimiter = ',',
        num_args = 1..,
        allow_hyphen_values = true,
        conflicts_with = "x_range",
        required_unless_present = "x_range"
    )]
    x: Option<Vec<f64>>,
    /// Uniform abscissa range start:stop:count.
    #[arg(long, allow_hyphen_values = true)]
    x_range: Option<String>,
}

#[derive(Debug, Args)]
struct TabulateArgs {
    /// Order m' >= 0 (may be fractional).
    #[arg(long)]
    m_prime: f64,
    /// Largest degree offset; one column per n in 0..=n-max.
    #[arg(long)]
    n_max: u32,
    /// Number of uniform abscissae covering [-1, 1] (at least 2).
    #[arg(long)]
    x_count: u32,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Identity to check: norm, weighted-norm, orthogonality,
    /// main-integral, bessel-integral, or power-exp.
    #[arg(long)]
    identity: String,
    /// "default" for the compiled-in grid, or a path to a JSON grid file
    /// (an array of objects mapping parameter names to numbers).
    #[arg(long, default_value = "default")]
    grid: String,
}

const EXIT_VERIFICATION_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap reserves exit 2 for usage errors and 0 for help/version.
            e.exit();
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match &cli.cmd {
        Cmd::Eval(args) => cmd_eval(args),
        Cmd::Tabulate(args) => cmd_tabulate(args, cli.output.as_deref()),
        Cmd::Verify(args) => cmd_verify(
            args,
            cli.abs_tol,
            cli.rel_tol,
            cli.format,
            cli.output.as_deref(),
            cli.no_timestamp,
        ),
    }
}

fn parse_x_range(range: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = range.split(':').collect();
    if parts.len() != 3 {
        return Err(usage(format!(
            "--x-range expects start:stop:count, got '{range}'"
        )));
    }
    let start: f64 = parts[0].parse().map_err(usage)?;
    let stop: f64 = parts[1].parse().map_err(usage)?;
    let count: usize = parts[2].parse().map_err(usage)?;
    if count < 2 {
        return Err(usage("--x-range count must be at least 2"));
    }
    Ok((0..count)
        .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
        .collect())
}

fn cmd_eval(args: &EvalArgs) -> Result<u8, CliError> {
    let xs = match (&args.x, &args.x_range) {
        (Some(list), None) => list.clone(),
        (None, Some(range)) => parse_x_range(range)?,
        _ => return Err(usage("exactly one of --x or --x-range is required")),
    };
    let params = PolyParams::new(args.m_prime, args.n).map_err(usage)?;
    let mut rows = String::from("x,value\n");
    for &x in &xs {
        let value = ualp_eval(params, x).map_err(usage)?;
        rows.push_str(&format_f64(x));
        rows.push(',');
        rows.push_str(&format_f64(value));
        rows.push('\n');
    }
    print!("{rows}");
    Ok(0)
}

fn cmd_tabulate(args: &TabulateArgs, output: Option<&std::path::Path>) -> Result<u8, CliError> {
    if args.x_count < 2 {
        return Err(usage("--x-count must be at least 2"));
    }
    let params: Vec<PolyParams> = (0..=args.n_max)
        .map(|n| PolyParams::new(args.m_prime, n))
        .collect::<Result<_, _>>()
        .map_err(usage)?;
    let mut table = String::from("x");
    for n in 0..=args.n_max {
        let _ = std::fmt::Write::write_fmt(&mut table, format_args!(",P{n}"));
    }
    table.push('\n');
    for i in 0..args.x_count {
        let x = -1.0 + 2.0 * i as f64 / (args.x_count - 1) as f64;
        table.push_str(&format_f64(x));
        for p in &params {
            let value = ualp_eval(*p, x).map_err(usage)?;
            table.push(',');
            table.push_str(&format_f64(value));
        }
        table.push('\n');
    }
    write_output(&table, output)?;
    Ok(0)
}

fn load_grid(identity: Identity, source: &str) -> Result<Vec<GridPoint>, CliError> {
    if source == "default" {
        return Ok(default_grid(identity));
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| CliError::Io(format!("cannot read grid file '{source}': {e}")))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| usage(format!("grid file '{source}' is not valid JSON: {e}")))?;
    let entries = value
        .as_array()
        .ok_or_else(|| usage("grid file must hold a JSON array of parameter objects"))?;
    let mut grid = Vec::with_capacity(entries.len());
    for entry in entries {
        let object = entry
            .as_object()
            .ok_or_else(|| usage("each grid entry must be a JSON object"))?;
        let mut p = GridPoint::new();
        for (key, v) in object {
            let number = v
                .as_f64()
                .ok_or_else(|| usage(format!("grid key '{key}' must be a number")))?;
            p.insert(key.clone(), number);
        }
        grid.push(p);
    }
    Ok(grid)
}

fn cmd_verify(
    args: &VerifyArgs,
    abs_tol: f64,
    rel_tol: f64,
    format: Format,
    output: Option<&std::path::Path>,
    no_timestamp: bool,
) -> Result<u8, CliError> {
    let identity: Identity = args.identity.parse().map_err(usage)?;
    let grid = load_grid(identity, &args.grid)?;
    let engine = default_engine_spec(identity);
    let records =
        verify_identity_grid(identity, &grid, &engine, abs_tol, rel_tol).map_err(usage)?;
    let tolerance_config = vec![
        ("abs_tol".to_string(), abs_tol),
        ("rel_tol".to_string(), rel_tol),
        ("engine_abs_tol".to_string(), engine.abs_tol),
        ("engine_rel_tol".to_string(), engine.rel_tol),
    ];
    let timestamp = if no_timestamp {
        None
    } else {
        Some(utc_timestamp_now())
    };
    let doc = ReportDocument::new(identity.name(), tolerance_config, records, timestamp);
    let rendered = match format {
        Format::Json => doc.to_json(),
        Format::Csv => doc.to_csv(),
    };
    write_output(&rendered, output)?;
    Ok(if doc.all_passed() {
        0
    } else {
        EXIT_VERIFICATION_FAILED
    })
}

fn write_output(content: &str, output: Option<&std::path::Path>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Io(format!("cannot write '{}': {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}
