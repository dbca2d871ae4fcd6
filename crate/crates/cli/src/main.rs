//! `argsched`: solve instances, check and explain schedules, serve the what-if API.

mod render;

use std::fs;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use argsched_core::{
    compute_metrics, exact_optimal, explain_schedule, lpt_schedule, wire, DEFAULT_EXACT_BUDGET,
};
use argsched_service::{budget_from_env, Config, Solver, WhatIf};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "argsched",
    version,
    about = "Explain makespan schedules with argumentation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a schedule for an instance (LPT unless --exact).
    Solve {
        instance: PathBuf,
        /// Exhaustive search for a minimum-makespan schedule.
        #[arg(long)]
        exact: bool,
    },
    /// Report whether a schedule is feasible, efficient and honours the decisions.
    ///
    /// Exits 0 when every checked dimension holds, 1 otherwise.
    Check(CheckArgs),
    /// Like check, with explanation details and certificates.
    Explain(CheckArgs),
    /// Run the HTTP JSON API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
        /// Directory for session files; sessions live in memory only when omitted.
        #[arg(long)]
        data: Option<PathBuf>,
        /// Default solver for new sessions.
        #[arg(long, default_value = "lpt", value_parser = ["lpt", "exact"])]
        solver: String,
    },
}

#[derive(Args)]
struct CheckArgs {
    instance: PathBuf,
    schedule: PathBuf,
    #[arg(long)]
    decisions: Option<PathBuf>,
    /// Keep only the first explanation of each dimension.
    #[arg(long)]
    first: bool,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

type Failure = Box<dyn std::error::Error>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn with_path<T>(path: &Path, r: argsched_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| format!("{}: {e}", path.display()).into())
}

fn budget() -> Result<u64, Failure> {
    Ok(budget_from_env()?.unwrap_or(DEFAULT_EXACT_BUDGET))
}

fn solve(instance: &Path, exact: bool) -> Result<ExitCode, Failure> {
    let inst = with_path(instance, wire::parse_instance(&read(instance)?))?;
    let (schedule, solver) = if exact {
        (exact_optimal(&inst, budget()?)?.0, "exact")
    } else {
        (lpt_schedule(&inst), "lpt")
    };
    let cmax = compute_metrics(&inst, &schedule)?.cmax;
    println!("{}", serde_json::to_string(&schedule)?);
    eprintln!("cmax {cmax} ({solver})");
    Ok(ExitCode::SUCCESS)
}

fn check(args: &CheckArgs, full: bool) -> Result<ExitCode, Failure> {
    let inst = with_path(&args.instance, wire::parse_instance(&read(&args.instance)?))?;
    let schedule = with_path(
        &args.schedule,
        wire::parse_schedule_for(&inst, &read(&args.schedule)?),
    )?;
    let decisions = match &args.decisions {
        Some(path) => Some(with_path(
            path,
            wire::parse_decisions_for(&inst, &read(path)?),
        )?),
        None => None,
    };
    let mut report = explain_schedule(&inst, &schedule, decisions.as_ref())?;
    let good = report.all_good();
    if args.first {
        report = report.first_per_dimension();
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", render::report(&report, full));
    }
    Ok(if good {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn serve(
    port: u16,
    host: IpAddr,
    data: Option<PathBuf>,
    solver: &str,
) -> Result<ExitCode, Failure> {
    let config = Config {
        solver: solver.parse::<Solver>()?,
        budget: budget()?,
        data_dir: data,
    };
    let app = WhatIf::new(config)?;
    let addr = SocketAddr::new(host, port);
    let runtime = tokio::runtime::Runtime::new()?;
    eprintln!("listening on http://{addr}");
    runtime.block_on(argsched_service::http::serve(app, addr))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Solve { instance, exact } => solve(instance, *exact),
        Command::Check(args) => check(args, false),
        Command::Explain(args) => check(args, true),
        Command::Serve {
            port,
            host,
            data,
            solver,
        } => serve(*port, *host, data.clone(), solver),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("argsched: {e}");
        ExitCode::from(2)
    })
}
