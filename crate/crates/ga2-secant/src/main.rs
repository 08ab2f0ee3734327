use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ga2_secant::cli::{self, render, CliError, Format};
use ga2_secant::ga2::Vector2;

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

/// Secant planes of two-variable functions via plane geometric algebra, and
/// sweeps that exhibit the surface tangent paradox.
///
/// Exit codes: 0 success, 1 identity-suite failure, 2 expression error,
/// 3 degenerate geometry, 64 usage.
#[derive(Parser)]
#[command(name = "ga2-secant", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Seed for the deterministic random streams (ga-check, strong-derivative).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

type Point = (f64, f64);

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a point as X,Y, got '{s}'"))?;
    let x: f64 = x
        .trim()
        .parse()
        .map_err(|e| format!("bad x coordinate in '{s}': {e}"))?;
    let y: f64 = y
        .trim()
        .parse()
        .map_err(|e| format!("bad y coordinate in '{s}': {e}"))?;
    Ok((x, y))
}

#[derive(Subcommand)]
enum Command {
    /// Compute the secant plane of f through three base points, with the
    /// quotient vector q by all three formulas.
    Secant {
        /// The function, e.g. "x^2 + y^2".
        #[arg(long = "fn")]
        function: String,
        /// First base point (the plane's anchor), as X,Y.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        a: Point,
        /// Second base point, as X,Y.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        b: Point,
        /// Third base point, as X,Y.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        c: Point,
    },
    /// Sweep shrinking triangles along the path family eta = delta^k and
    /// watch where the secant plane goes.
    Sweep {
        /// The function, e.g. "x^2 + y^2".
        #[arg(long = "fn")]
        function: String,
        /// Path exponent: the triangle height shrinks as delta^k.
        #[arg(long, allow_hyphen_values = true)]
        k: f64,
        /// Largest delta of the geometric schedule.
        #[arg(long)]
        delta_start: f64,
        /// Smallest delta of the geometric schedule.
        #[arg(long)]
        delta_end: f64,
        /// Number of schedule points (at least 2).
        #[arg(long)]
        steps: usize,
        /// Convergence target, as X,Y.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, default_value = "0,0")]
        x0: Point,
        /// Rotate the triangle family rigidly by this many degrees.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        rotate: f64,
        /// Shear the triangle family: (x, y) -> (x + shear*y, y).
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        shear: f64,
    },
    /// Run the G2 algebra identity suite on seeded random inputs.
    GaCheck {
        /// Random trials per invariant.
        #[arg(long)]
        trials: u64,
    },
    /// Sample one-variable difference quotients over shrinking neighborhoods
    /// of x0 to demonstrate strong-derivative convergence.
    StrongDerivative {
        /// A function of x only, e.g. "x^2".
        #[arg(long = "fn1d")]
        function: String,
        /// Center of the sampling neighborhoods.
        #[arg(long, allow_hyphen_values = true)]
        x0: f64,
        /// Number of levels h = 1e-1, 1e-2, ...
        #[arg(long)]
        h_levels: usize,
        /// Random pairs per level.
        #[arg(long)]
        trials: u64,
    },
}

fn vector(p: Point) -> Result<Vector2, CliError> {
    Vector2::new(p.0, p.1)
        .map_err(|_| CliError::Usage(format!("point ({}, {}) must be finite", p.0, p.1)))
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let format: Format = cli.format.into();
    match cli.command {
        Command::Secant { function, a, b, c } => {
            let report = cli::run_secant(&function, vector(a)?, vector(b)?, vector(c)?)?;
            Ok((render::secant(&report, format), 0))
        }
        Command::Sweep {
            function,
            k,
            delta_start,
            delta_end,
            steps,
            x0,
            rotate,
            shear,
        } => {
            let mut cfg =
                cli::SweepConfig::new(&function, k, delta_start, delta_end, steps, vector(x0)?)?;
            cfg.rotate_deg = rotate;
            cfg.shear = shear;
            let report = cli::run_sweep(&cfg)?;
            Ok((render::sweep(&report, format), 0))
        }
        Command::GaCheck { trials } => {
            let report = cli::run_ga_check(cli.seed, trials)?;
            let code = if report.pass { 0 } else { 1 };
            Ok((render::ga_check(&report, format), code))
        }
        Command::StrongDerivative {
            function,
            x0,
            h_levels,
            trials,
        } => {
            let report = cli::run_strong_derivative(&function, x0, h_levels, trials, cli.seed)?;
            Ok((render::strong_derivative(&report, format), 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(64)
            };
        }
    };
    let out = cli.out.clone();
    match run(cli) {
        Ok((output, code)) => {
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, &output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(74);
                }
            } else {
                print!("{output}");
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
