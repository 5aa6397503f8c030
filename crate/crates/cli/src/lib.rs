//! Command-line front end for the `poisson-pic` engine.
//!
//! [`run`] does all the work and returns the rendered output and exit code,
//! so the binary is a thin wrapper and tests can drive it in-process.

pub mod commands;
pub mod error;
pub mod problem;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use poisson_pic::cohomology::ComplexKind;

use commands::{CohomologyArgs, GaugeMode, Range};
use error::{exit, CliError};
use problem::Problem;
use report::{render_json, render_table, Status};

#[derive(Debug, Parser)]
#[command(name = "poisson-pic", version, about = "Exact Poisson cohomology and Picard Lie algebra computations")]
pub struct Cli {
    /// Output format; the table is rendered from the JSON report.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Worker threads (0 = one per core). Never changes the output.
    #[arg(long, env = "POISSON_PIC_THREADS", default_value_t = 0, global = true)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComplexArg {
    Derham,
    Lichnerowicz,
    Cone,
    Basic,
}

impl ComplexArg {
    fn kind(self) -> ComplexKind {
        match self {
            ComplexArg::Derham => ComplexKind::DeRham,
            ComplexArg::Lichnerowicz => ComplexKind::Lichnerowicz,
            ComplexArg::Cone => ComplexKind::Cone,
            ComplexArg::Basic => ComplexKind::Basic,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check [π,π] = 0 and print the obstruction when it fails.
    Jacobi { file: PathBuf },
    /// Cohomology dimensions over a rectangle of (k, weight) slices.
    Cohomology(CohomologyCmd),
    /// Gauge transforms and the gauge group.
    Gauge(GaugeCmd),
    /// Exactness of H¹_dR → H¹_π → pic → H²_dR → H²_π per weight.
    Les {
        file: PathBuf,
        #[arg(long, value_parser = parse_range, default_value = "0..4")]
        w_range: Range,
    },
    /// Print a problem file in canonical form.
    Fmt { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct CohomologyCmd {
    pub file: PathBuf,
    #[arg(long, value_enum)]
    pub complex: ComplexArg,
    /// Inclusive range `a..b`; defaults to 1 for the cone and 1..2 for basic
    /// forms, otherwise 0..n.
    #[arg(long, value_parser = parse_range)]
    pub k_range: Option<Range>,
    /// Inclusive weight range; defaults to the weights whose lowest-k
    /// coefficients have degree 0..max-degree.
    #[arg(long, value_parser = parse_range)]
    pub w_range: Option<Range>,
    #[arg(long, default_value_t = 3)]
    pub max_degree: u32,
    /// Include a representative cochain for every class.
    #[arg(long)]
    pub witnesses: bool,
    /// Refuse slices with more cochains than this.
    #[arg(long, default_value_t = 5000)]
    pub max_slice_dim: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "mode")]
pub struct GaugeModes {
    /// π_B for the file's gauge.b.
    #[arg(long)]
    pub transform: bool,
    /// Membership of each listed element.
    #[arg(long)]
    pub check_member: bool,
    /// Product of the listed elements, left to right.
    #[arg(long)]
    pub compose: bool,
}

#[derive(Debug, Args)]
pub struct GaugeCmd {
    pub file: PathBuf,
    #[command(flatten)]
    pub modes: GaugeModes,
}

/// `a..b`, `a..=b` (both inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<Range, String> {
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn read_problem(path: &PathBuf) -> Result<Problem, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Problem::from_json(&text)
}

fn range_json(r: Range) -> Value {
    json!([r.0, r.1])
}

/// The command echo: everything that determines the output, and nothing
/// (paths, thread counts) that does not.
fn echo(cmd: &Command) -> Value {
    match cmd {
        Command::Jacobi { .. } => json!({ "name": "jacobi", "options": {} }),
        Command::Cohomology(c) => json!({
            "name": "cohomology",
            "options": {
                "complex": c.complex.kind().name(),
                "k_range": c.k_range.map(range_json),
                "w_range": c.w_range.map(range_json),
                "max_degree": c.max_degree,
                "witnesses": c.witnesses,
                "max_slice_dim": c.max_slice_dim,
            },
        }),
        Command::Gauge(g) => json!({ "name": "gauge", "options": { "mode": mode(&g.modes).name() } }),
        Command::Les { w_range, .. } => json!({ "name": "les", "options": { "w_range": range_json(*w_range) } }),
        Command::Fmt { .. } => json!({ "name": "fmt", "options": {} }),
    }
}

fn mode(m: &GaugeModes) -> GaugeMode {
    if m.transform {
        GaugeMode::Transform
    } else if m.check_member {
        GaugeMode::CheckMember
    } else {
        GaugeMode::Compose
    }
}

fn file_of(cmd: &Command) -> &PathBuf {
    match cmd {
        Command::Jacobi { file } | Command::Les { file, .. } | Command::Fmt { file } => file,
        Command::Cohomology(c) => &c.file,
        Command::Gauge(g) => &g.file,
    }
}

fn execute(cmd: &Command, problem: &Problem) -> Result<commands::Outcome, CliError> {
    match cmd {
        Command::Jacobi { .. } => Ok(commands::jacobi(problem)),
        Command::Cohomology(c) => {
            let complex = c.complex.kind();
            let n = problem.dim() as i64;
            let k_range = c.k_range.unwrap_or(match complex {
                ComplexKind::Cone => (1, 1),
                ComplexKind::Basic => (1, 2),
                _ => (0, n),
            });
            // slices with k outside the complex are empty; keep ranges honest
            let args = CohomologyArgs {
                complex,
                k_range,
                w_range: c.w_range,
                max_degree: c.max_degree,
                witnesses: c.witnesses,
                max_slice_dim: c.max_slice_dim,
            };
            commands::cohomology(problem, &args)
        }
        Command::Gauge(g) => commands::gauge(problem, mode(&g.modes)),
        Command::Les { w_range, .. } => commands::les(problem, *w_range),
        Command::Fmt { .. } => unreachable!("handled before dispatch"),
    }
}

fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => render_json(report),
        Format::Table => render_table(report),
    }
}

/// Runs a parsed command line.
pub fn run_cli(cli: &Cli) -> Output {
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => {
            return Output {
                stdout: String::new(),
                stderr: format!("error: cannot start worker threads: {e}\n"),
                code: exit::INTERNAL,
            }
        }
    };
    pool.install(|| run_in_pool(cli))
}

fn run_in_pool(cli: &Cli) -> Output {
    let command = echo(&cli.command);
    let problem = match read_problem(file_of(&cli.command)) {
        Ok(p) => p,
        Err(e) => return failure(command, e, cli.format),
    };
    if let Command::Fmt { .. } = cli.command {
        return Output {
            stdout: problem.to_canonical_json(),
            stderr: String::new(),
            code: exit::OK,
        };
    }
    let mut command = command;
    command["problem"] = problem.to_value();
    match execute(&cli.command, &problem) {
        Ok(outcome) => {
            for (key, value) in &outcome.resolved {
                command["options"][*key] = value.clone();
            }
            let status = if outcome.code == exit::OK { Status::Ok } else { Status::Failed };
            let report = report::report(command, outcome.results, status);
            Output {
                stdout: render(&report, cli.format),
                stderr: String::new(),
                code: outcome.code,
            }
        }
        Err(e) => failure(command, e, cli.format),
    }
}

fn failure(command: Value, e: CliError, format: Format) -> Output {
    let results = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
    let report = report::report(command, results, Status::Error);
    Output {
        stdout: render(&report, format),
        stderr: format!("error: {e}\n"),
        code: e.exit_code(),
    }
}

/// Parses `args` (including the program name) and runs.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_cli(&cli),
        Err(e) => {
            let code = if e.use_stderr() { exit::PARSE } else { exit::OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            Output { stdout, stderr, code }
        }
    }
}
