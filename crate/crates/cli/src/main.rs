use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use assocgr::Execution;
use assocgr_cli::error::EXIT_INPUT;
use assocgr_cli::request::{AnalysisRequest, Payload, VerifyParams};
use assocgr_cli::{emit, emit_batch, parse_batch, run_batch, CliError, Format, Options};

#[derive(Parser, Debug)]
#[command(name = "assocgr", version, about = "Hilbert functions and associated graded rings")]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Number of trailing coefficients that must vanish when fitting an h-polynomial.
    #[arg(long, global = true, env = "ASSOCGR_WINDOW", default_value_t = assocgr::DEFAULT_WINDOW)]
    window: usize,

    /// Largest degree sampled while waiting for the h-polynomial to stabilize.
    #[arg(long = "max-n", global = true, env = "ASSOCGR_MAX_N", default_value_t = assocgr::DEFAULT_MAX_N)]
    max_n: usize,

    #[arg(long, global = true, env = "ASSOCGR_FORMAT", value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Include wall-clock time in JSON output (makes it nondeterministic).
    #[arg(long, global = true)]
    timing: bool,

    /// Disable data-parallel execution.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze JSON requests from files, or stdin when none are given.
    Run {
        /// Request files; `-` reads stdin. Each holds one request or an array of them.
        files: Vec<PathBuf>,
    },
    /// Sweep the hypersurface and random-semigroup corpora.
    Verify {
        #[arg(long = "corpus-max-e", default_value_t = 6)]
        max_e: i64,
        #[arg(long = "corpus-max-mu", default_value_t = 4)]
        max_mu: usize,
        #[arg(long, default_value_t = assocgr::verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = assocgr::verify::DEFAULT_SEMIGROUP_COUNT)]
        semigroups: usize,
        #[arg(long = "max-generator", default_value_t = assocgr::verify::DEFAULT_MAX_GENERATOR)]
        max_generator: i64,
    },
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let io_err = |source| CliError::Io { path: path.display().to_string(), source };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let defaults = Options { window: g.window, max_n: g.max_n };
    let exec = if g.sequential { Execution::Sequential } else { Execution::Parallel };

    // `single` is true when exactly one request object was given, so the
    // output is one report rather than an array.
    let (requests, single) = match &cli.command {
        Command::Run { files } => {
            let files = if files.is_empty() { vec![PathBuf::from("-")] } else { files.clone() };
            let mut all = Vec::new();
            let mut any_array = false;
            for f in &files {
                let parsed = read_input(f).and_then(|text| {
                    any_array |= text.trim_start().starts_with('[');
                    parse_batch(&text, defaults)
                });
                match parsed {
                    Ok(batch) => all.extend(batch),
                    Err(e) => all.push(Err(e)),
                }
            }
            let single = all.len() == 1 && !any_array;
            (all, single)
        }
        Command::Verify { max_e, max_mu, seed, semigroups, max_generator } => {
            let req = if *max_e < 1 {
                Err(CliError::Invalid { path: "--corpus-max-e".into(), message: "must be at least 1".into() })
            } else {
                Ok(AnalysisRequest {
                    payload: Payload::Verify(VerifyParams {
                        seed: *seed,
                        semigroups: *semigroups,
                        max_generator: *max_generator,
                        ..VerifyParams::new(*max_e, *max_mu)
                    }),
                    options: defaults,
                })
            };
            (vec![req], true)
        }
    };

    let results = run_batch(requests, exec);
    let code = results
        .iter()
        .map(|r| match r {
            Ok(rep) => rep.exit_code(),
            Err(e) => e.exit_code(),
        })
        .max()
        .unwrap_or(EXIT_INPUT);

    let mut out = io::stdout().lock();
    let written = match (single, results.first()) {
        (true, Some(Ok(rep))) => out.write_all(emit(rep, g.format, g.timing).as_bytes()),
        (true, Some(Err(e))) => {
            eprintln!("error: {e}");
            Ok(())
        }
        _ => out.write_all(emit_batch(&results, g.format, g.timing).as_bytes()),
    };
    if let Err(e) = written.and_then(|_| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    }
    ExitCode::from(code as u8)
}
