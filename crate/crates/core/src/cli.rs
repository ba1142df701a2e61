//! Batch front end: `series`, `shoot`, `compare` and `figure`.
//!
//! Exit codes: 0 success, 2 argument error, 3 solver failure, 4 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::exactalg::Rational;
use crate::hpm::{build_series, HpmConfig, HpmSeries};
use crate::report::{self, compare, render_svg, CompareOptions, Grid, ReportError, SvgOptions};
use crate::shooter::{solve_shooting, IntegratorSettings, ShootError, ShootingResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "blasius-hpm",
    version,
    about = "Exact HPM series versus a shooting reference for the flat-plate boundary layer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the exact HPM corrections and partial sums.
    #[command(args_override_self = true)]
    Series(SeriesCmd),
    /// Find f''(0) by shooting on the Blasius equation.
    #[command(args_override_self = true)]
    Shoot(ShootCmd),
    /// Compare HPM and numerical f' and print the deviation metrics.
    #[command(args_override_self = true)]
    Compare(CompareCmd),
    /// Like `compare`, and always writes the SVG figure.
    #[command(args_override_self = true)]
    Figure(CompareCmd),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Flat key=value file of defaults; explicit flags win.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    /// Highest correction order j.
    #[arg(long, default_value_t = 3)]
    order: usize,
    /// Truncated domain length L (integer or p/q).
    #[arg(long = "domain-length", value_name = "L", default_value = "5", value_parser = parse_rational, allow_hyphen_values = true)]
    domain_length: Rational,
    /// Coefficient of theta'' (integer or p/q).
    #[arg(long, value_name = "E", default_value = "1", value_parser = parse_rational, allow_hyphen_values = true)]
    epsilon: Rational,
}

#[derive(Debug, Args)]
struct ShootArgs {
    /// Truncation of infinity for the numerical solution.
    #[arg(long = "eta-max", default_value_t = 10.0)]
    eta_max: f64,
    /// Fixed RK4 step.
    #[arg(long, default_value_t = 1e-3)]
    step: f64,
    /// Tolerance on |f'(eta_max) - 1|.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Initial bracket for f''(0).
    #[arg(long, value_name = "LO,HI", default_value = "0.1,1.0", value_parser = parse_pair, allow_hyphen_values = true)]
    bracket: (f64, f64),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeriesFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Args)]
struct SeriesCmd {
    #[command(flatten)]
    series: SeriesArgs,
    /// Output format.
    #[arg(long, value_enum, default_value_t = SeriesFormat::Pretty)]
    format: SeriesFormat,
    /// Destination file [default: stdout].
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct ShootCmd {
    #[command(flatten)]
    shoot: ShootArgs,
    /// Write the converged trajectory as CSV.
    #[arg(long = "trajectory-out", value_name = "PATH")]
    trajectory_out: Option<PathBuf>,
    /// Prefix CSV output with provenance comment lines.
    #[arg(long)]
    stamp: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct CompareCmd {
    #[command(flatten)]
    series: SeriesArgs,
    #[command(flatten)]
    shoot: ShootArgs,
    /// Sampling grid for the comparison.
    #[arg(long, value_name = "START:STOP:STEP", default_value = "0:12:0.05", value_parser = parse_grid)]
    grid: Grid,
    /// eta at which the far-field deviation is reported.
    #[arg(long, value_name = "ETA", default_value_t = 10.0)]
    probe: f64,
    /// Write the comparison rows as CSV.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Write the figure as SVG [figure default: fprime_comparison.svg].
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Visible f' range of the figure.
    #[arg(long = "y-window", value_name = "LO,HI", default_value = "-0.2,1.4", value_parser = parse_pair, allow_hyphen_values = true)]
    y_window: (f64, f64),
    /// Add theta columns from both methods to the CSV.
    #[arg(long = "with-theta")]
    with_theta: bool,
    /// Prefix CSV output with provenance comment lines.
    #[arg(long)]
    stamp: bool,
    #[command(flatten)]
    common: CommonArgs,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>()
        .map_err(|e| format!("expected an integer or p/q literal ({e})"))
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| "expected LO,HI".to_string())?;
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("`{t}` is not a number"))
    };
    let (a, b) = (num(a)?, num(b)?);
    if !(a < b) {
        return Err(format!("LO must be below HI, got {a},{b}"));
    }
    Ok((a, b))
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    s.parse::<Grid>().map_err(|e| e.to_string())
}

/// Failure carrying its process exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn solver(message: impl ToString) -> Self {
        Failure {
            code: EXIT_SOLVER,
            message: message.to_string(),
        }
    }

    fn io(path: &Path, err: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_IO,
            message: format!("cannot write {}: {err}", path.display()),
        }
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        let code = match e {
            ReportError::Io { .. } => EXIT_IO,
            ReportError::Theta(_) => EXIT_SOLVER,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Splices `--config PATH` contents into the argument list just after the
/// subcommand, so that flags given explicitly later override them.
fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>, Failure> {
    let mut path = None;
    let mut rest = Vec::with_capacity(args.len());
    let mut iter = args.into_iter();
    while let Some(arg) = iter.next() {
        let text = arg.to_string_lossy();
        if text == "--config" {
            let value = iter
                .next()
                .ok_or_else(|| Failure::usage("--config requires a PATH"))?;
            path = Some(PathBuf::from(value));
        } else if let Some(value) = text.strip_prefix("--config=") {
            path = Some(PathBuf::from(value));
        } else {
            rest.push(arg);
        }
    }
    let Some(path) = path else {
        return Ok(rest);
    };
    let text = fs::read_to_string(&path)
        .map_err(|e| Failure::usage(format!("--config: cannot read {}: {e}", path.display())))?;
    let mut injected = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Failure::usage(format!(
                "--config {}:{}: expected key=value",
                path.display(),
                n + 1
            ))
        })?;
        let (key, value) = (key.trim(), value.trim());
        match value {
            "true" => injected.push(OsString::from(format!("--{key}"))),
            "false" => {}
            _ => {
                injected.push(OsString::from(format!("--{key}")));
                injected.push(OsString::from(value));
            }
        }
    }
    // rest[0] is the program name and rest[1] the subcommand, when present.
    let split = rest.len().min(2);
    let mut out: Vec<OsString> = rest[..split].to_vec();
    out.extend(injected);
    out.extend(rest[split..].iter().cloned());
    Ok(out)
}

fn series_config(args: &SeriesArgs) -> Result<HpmConfig, Failure> {
    HpmConfig::new(args.order, args.domain_length.clone(), args.epsilon.clone())
        .map_err(Failure::usage)
}

fn integrator_settings(args: &ShootArgs) -> Result<IntegratorSettings, Failure> {
    IntegratorSettings::new(args.eta_max, args.step, args.tol, args.bracket).map_err(Failure::usage)
}

fn shoot(settings: &IntegratorSettings) -> Result<ShootingResult, Failure> {
    solve_shooting(settings).map_err(|e| match e {
        ShootError::NoSignChange { lo, hi, g_lo, g_hi } => Failure::solver(format!(
            "no sign change of g(s) = f'(eta_max; s) - 1 on [{lo}, {hi}]: sign g({lo}) = {}, sign g({hi}) = {} (g = {g_lo:e}, {g_hi:e})",
            sign(g_lo),
            sign(g_hi)
        )),
        other => Failure::solver(other),
    })
}

fn sign(x: f64) -> char {
    if x > 0.0 {
        '+'
    } else if x < 0.0 {
        '-'
    } else {
        '0'
    }
}

fn stamp_header() -> String {
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let command: Vec<String> = std::env::args().collect();
    format!(
        "# generator: blasius-hpm {}\n# unix_time: {secs}\n# command: {}\n",
        env!("CARGO_PKG_VERSION"),
        command.join(" ")
    )
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn run_series(cmd: &SeriesCmd, stdout: &mut dyn Write) -> Result<(), Failure> {
    let series = build_series(&series_config(&cmd.series)?);
    let text = match cmd.format {
        SeriesFormat::Json => series.to_json() + "\n",
        SeriesFormat::Csv => series.to_csv(),
        SeriesFormat::Pretty => series.to_string(),
    };
    match &cmd.out {
        Some(path) => write_file(path, &text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::io(Path::new("<stdout>"), e)),
    }
}

fn run_shoot(cmd: &ShootCmd, stdout: &mut dyn Write) -> Result<(), Failure> {
    let settings = integrator_settings(&cmd.shoot)?;
    let shot = shoot(&settings)?;
    if let Some(path) = &cmd.trajectory_out {
        let mut text = if cmd.stamp {
            stamp_header()
        } else {
            String::new()
        };
        text.push_str(&shot.trajectory.to_csv());
        write_file(path, &text)?;
    }
    let _ = writeln!(stdout, "s* = {:.7}", shot.s_star);
    let _ = writeln!(stdout, "residual = {:.3e}", shot.residual);
    let _ = writeln!(stdout, "iterations = {}", shot.iterations);
    let _ = writeln!(stdout, "eta_max = {}", shot.eta_max_used);
    Ok(())
}

fn run_compare(cmd: &CompareCmd, figure: bool, stdout: &mut dyn Write) -> Result<(), Failure> {
    let config = series_config(&cmd.series)?;
    let settings = integrator_settings(&cmd.shoot)?;
    let svg_options = SvgOptions {
        y_window: cmd.y_window,
        ..SvgOptions::default()
    };
    let series: HpmSeries = build_series(&config);
    let shot = shoot(&settings)?;
    let options = CompareOptions {
        probe: cmd.probe,
        with_theta: cmd.with_theta,
    };
    let rep = compare(&series, &shot, &cmd.grid, &options)?;

    if let Some(path) = &cmd.csv {
        let mut text = if cmd.stamp {
            stamp_header()
        } else {
            String::new()
        };
        text.push_str(&rep.to_csv());
        write_file(path, &text)?;
    }
    let svg_path = match (&cmd.svg, figure) {
        (Some(p), _) => Some(p.clone()),
        (None, true) => Some(PathBuf::from("fprime_comparison.svg")),
        (None, false) => None,
    };
    if let Some(path) = &svg_path {
        report::emit_svg_figure_with(&rep, path, &svg_options)?;
    } else {
        // Surface window errors even when no figure is requested.
        render_svg(&rep, &svg_options)?;
    }
    let _ = stdout.write_all(rep.summary().as_bytes());
    Ok(())
}

/// Parses `args` (including the program name) and runs the subcommand,
/// returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let result = expand_config(args).and_then(|args| {
        let cli = match Cli::try_parse_from(args) {
            Ok(cli) => cli,
            Err(e) => {
                let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
                let text = e.render().to_string();
                if code == EXIT_OK {
                    let _ = stdout.write_all(text.as_bytes());
                    return Ok(());
                }
                return Err(Failure {
                    code,
                    message: text,
                });
            }
        };
        match &cli.command {
            Command::Series(cmd) => run_series(cmd, stdout),
            Command::Shoot(cmd) => run_shoot(cmd, stdout),
            Command::Compare(cmd) => run_compare(cmd, false, stdout),
            Command::Figure(cmd) => run_compare(cmd, true, stdout),
        }
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let msg = f.message.trim_end();
            if msg.starts_with("error:") {
                let _ = writeln!(stderr, "{msg}");
            } else {
                let _ = writeln!(stderr, "error: {msg}");
            }
            f.code
        }
    }
}
