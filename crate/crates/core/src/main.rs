use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qgame::cli::{
    cmd_demo_bos, cmd_equilibria, cmd_payoff, cmd_sweep, exit_code, parse_config_with_warnings,
    RunConfig,
};
use qgame::Error;

#[derive(Parser, Debug)]
#[command(
    name = "qgame",
    version,
    about = "Quantized 2x2 games: payoffs, sweeps and equilibria"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Run configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Probability that Alice leaves her part of the state unchanged.
    #[arg(long, global = true)]
    p: Option<f64>,

    /// Probability that Bob leaves his part of the state unchanged.
    #[arg(long, global = true)]
    q: Option<f64>,

    /// Grid points per axis for `sweep`.
    #[arg(long, global = true)]
    resolution: Option<usize>,

    /// Equilibrium tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expected payoffs for one tactics profile.
    Payoff,
    /// Payoff grid as CSV.
    Sweep,
    /// Equilibria and the dilemma verdict.
    Equilibria {
        /// Emit the structured report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Classical vs. entangled Battle of the Sexes walkthrough.
    DemoBos,
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn load_config(cli: &Cli) -> Result<RunConfig, Failure> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| Error::Parameter("--config is required for this command".into()))?;
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    let (mut config, warnings) = parse_config_with_warnings(&text)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    if let Some(n) = cli.resolution {
        config.sweep_resolution = n;
    }
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Parameter(format!("--tol must be positive, got {t}")).into());
        }
        config.tolerance = t;
    }
    Ok(config)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    Ok(match &cli.command {
        Command::Payoff => {
            let config = load_config(cli)?;
            let (p, q) = match (cli.p, cli.q, config.tactics) {
                (Some(p), Some(q), _) => (p, q),
                (p, q, Some((cp, cq))) => (p.unwrap_or(cp), q.unwrap_or(cq)),
                _ => {
                    return Err(Error::Parameter(
                        "payoff needs --p and --q or a `tactics` entry".into(),
                    )
                    .into())
                }
            };
            cmd_payoff(&config, p, q)?
        }
        Command::Sweep => cmd_sweep(&load_config(cli)?)?,
        Command::Equilibria { json } => {
            let out = cmd_equilibria(&load_config(cli)?)?;
            if *json {
                let mut s = serde_json::to_string_pretty(&out.report)
                    .map_err(|e| Failure::Io(e.to_string()))?;
                s.push('\n');
                s
            } else {
                out.text
            }
        }
        Command::DemoBos => cmd_demo_bos()?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| match &cli.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
