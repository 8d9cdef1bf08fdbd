use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hankelcert::algebra::parse_rat;
use hankelcert::functionals::{bound_surrogate, FunctionalId};
use hankelcert::suite::{run, Command, SuiteConfig};
use hankelcert::{Rat, VerificationReport};

/// Directory that also receives a JSON copy of every report.
const REPORT_DIR_ENV: &str = "HANKELCERT_REPORT_DIR";

#[derive(Parser, Debug)]
#[command(name = "hankelcert", version, about = "Certify coefficient bounds for the lemniscate starlike class")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Certify a bound and its sharpness.
    Verify {
        #[arg(value_enum)]
        target: Target,
    },
    /// Certified maxima on the twelve edges of the cuboid.
    Edges,
    /// Certified maxima on the six faces of the cuboid.
    Faces,
    /// Root isolation for the face and edge critical points.
    Roots,
    /// Coefficients of the extremal function z exp(∫ (√(1+t^n) - 1)/t dt).
    Extremal,
    /// Grid membership checks for Θ and the extremal functions.
    Membership,
    /// Kernel, identity and nonvanishing checks for the convolution criterion.
    Convolution,
    /// Seeded random sampling of the functionals.
    Oracle,
    /// Everything above.
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    H31,
    H23,
    Zalcman,
    Identities,
}

#[derive(Args, Debug)]
struct Opts {
    /// Emit the report as JSON.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit the report as an aligned table (default).
    #[arg(long, global = true)]
    text: bool,
    /// Gap tolerance for the headline maxima, e.g. 1e-9 or 1/1000000000.
    #[arg(long, global = true, value_parser = parse_tol)]
    tol: Option<Rat>,
    /// Subdivision budget for branch-and-bound.
    #[arg(long, global = true, default_value_t = hankelcert::boxopt::DEFAULT_MAX_BOXES)]
    max_boxes: usize,
    /// With `all`: skip faces.
    #[arg(long, global = true, conflicts_with = "faces_only")]
    edges_only: bool,
    /// With `all`: skip edges.
    #[arg(long, global = true)]
    faces_only: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Oracle samples per functional.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    samples: usize,
    /// Oracle: put γ, η, ρ on the unit circle half of the time.
    #[arg(long, global = true)]
    boundary: bool,
    /// Oracle: restrict to one functional (h31, h23, zalcman).
    #[arg(long, global = true)]
    functional: Option<FunctionalId>,
    /// With `verify h31|h23`: print the bound polynomial as records and exit.
    #[arg(long, global = true)]
    dump_poly: bool,
    /// Record wall-clock time per claim (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
    /// Extremal: n in √(1+z^n).
    #[arg(long, global = true, default_value_t = 4)]
    n: usize,
    /// Extremal: number of coefficients.
    #[arg(long, global = true, default_value_t = 8)]
    terms: usize,
    /// Membership: check Θ(z) = z/(1 - αz) at this α only.
    #[arg(long, global = true)]
    alpha: Option<f64>,
    /// Membership: n of the extremal function to check.
    #[arg(long, global = true, default_value_t = 3)]
    extremal: usize,
    /// Convolution: number of t values in (0, 2).
    #[arg(long, global = true, default_value_t = 19)]
    t_steps: usize,
    /// Convolution and membership: grid radius.
    #[arg(long, global = true, default_value_t = 0.95)]
    radius: f64,
}

fn parse_tol(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

impl Opts {
    fn config(&self) -> SuiteConfig {
        let d = SuiteConfig::default();
        SuiteConfig {
            tol: self.tol.clone().unwrap_or(d.tol),
            max_boxes: self.max_boxes,
            seed: self.seed,
            samples: self.samples,
            boundary: self.boundary,
            timings: self.timings,
            edges_only: self.edges_only,
            faces_only: self.faces_only,
            n: self.n,
            terms: self.terms,
            alpha: self.alpha,
            extremal: self.extremal,
            t_steps: self.t_steps,
            radius: self.radius,
            functional: self.functional,
            ..d
        }
    }
}

fn command(cmd: &Cmd) -> Command {
    match cmd {
        Cmd::Verify { target } => match target {
            Target::H31 => Command::VerifyH31,
            Target::H23 => Command::VerifyH23,
            Target::Zalcman => Command::VerifyZalcman,
            Target::Identities => Command::VerifyIdentities,
        },
        Cmd::Edges => Command::Edges,
        Cmd::Faces => Command::Faces,
        Cmd::Roots => Command::Roots,
        Cmd::Extremal => Command::Extremal,
        Cmd::Membership => Command::Membership,
        Cmd::Convolution => Command::Convolution,
        Cmd::Oracle => Command::Oracle,
        Cmd::All => Command::All,
    }
}

fn write_copy(report: &VerificationReport) -> std::io::Result<()> {
    let Some(dir) = std::env::var_os(REPORT_DIR_ENV) else {
        return Ok(());
    };
    let dir = PathBuf::from(dir);
    std::fs::create_dir_all(&dir)?;
    let name = format!("{}.json", report.header.command.replace(' ', "-"));
    std::fs::write(dir.join(name), report.to_json())
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cmd = command(&cli.command);
    let opts = &cli.opts;

    if let Some(j) = opts.jobs {
        if j == 0 {
            return usage("--jobs must be at least 1");
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    if (opts.edges_only || opts.faces_only) && cmd != Command::All {
        return usage("--edges-only and --faces-only apply to `all`");
    }
    if opts.dump_poly {
        let id = match cmd {
            Command::VerifyH31 => FunctionalId::H3_1,
            Command::VerifyH23 => FunctionalId::H2_3,
            _ => return usage("--dump-poly applies to `verify h31` and `verify h23`"),
        };
        return match bound_surrogate(id) {
            Ok(s) => {
                match std::io::stdout().lock().write_all(s.surrogate.to_records().as_bytes()) {
                    Err(e) if e.kind() != ErrorKind::BrokenPipe => {
                        eprintln!("error: {e}");
                        ExitCode::FAILURE
                    }
                    _ => ExitCode::SUCCESS,
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        };
    }

    let report = match run(cmd, &opts.config()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let body = if opts.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    if let Err(e) = std::io::stdout().lock().write_all(body.as_bytes()) {
        if e.kind() != ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    if let Err(e) = write_copy(&report) {
        eprintln!("error: cannot write report copy: {e}");
        return ExitCode::FAILURE;
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
