use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::Parser;

use kplex::io::{read_graph, RunReport};
use kplex::search::{solve, Mode, SolverConfig, Status};

#[derive(Parser)]
#[command(name = "kplex", about = "Exact maximum k-plex solver", version)]
struct Args {
    /// Input graph (DIMACS or edge list, auto-detected)
    #[arg(long)]
    graph: PathBuf,

    /// Plex parameter; solutions must have size >= 2k-1
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    k: u64,

    /// Solving strategy
    #[arg(long, value_parser = parse_mode, default_value = "exact-altrb")]
    mode: Mode,

    /// Wall-clock budget in seconds
    #[arg(long, default_value_t = 3600)]
    time_limit: u64,

    /// Write a JSON run report here
    #[arg(long)]
    stats_json: Option<PathBuf>,

    /// Suppress the human-readable summary on stderr
    #[arg(long)]
    quiet: bool,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    match s {
        "exact-altrb" => Ok(Mode::ExactAltRb),
        "exact-seqrb" => Ok(Mode::ExactSeqRb),
        "heuristic" => Ok(Mode::HeuristicOnly),
        "oracle" => Ok(Mode::Oracle),
        _ => Err(format!(
            "unknown mode '{s}' (expected exact-altrb, exact-seqrb, heuristic, or oracle)"
        )),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();

    let g = match read_graph(&args.graph) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {}: {e}", args.graph.display());
            return ExitCode::from(3);
        }
    };

    let mut cfg = SolverConfig::new(args.k as usize, args.mode);
    cfg.time_limit = Duration::from_secs(args.time_limit);

    if args.mode == Mode::Oracle && g.n() > kplex::oracle::ORACLE_VERTEX_LIMIT {
        eprintln!(
            "error: oracle mode is limited to {} vertices (graph has {})",
            kplex::oracle::ORACLE_VERTEX_LIMIT,
            g.n()
        );
        return ExitCode::from(2);
    }

    let sol = solve(&g, &cfg);

    println!("{}", sol.size);
    println!(
        "{}",
        sol.best_labels
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );

    if !args.quiet {
        eprintln!(
            "n={} m={} k={} mode={} status={} size={} branches={} mean_r={:.3} total={:.1}ms",
            g.n(),
            g.m(),
            cfg.k,
            cfg.mode.as_str(),
            sol.status.as_str(),
            sol.size,
            sol.stats.branches,
            sol.stats.mean_altrb_iterations(),
            sol.stats.t_total.as_secs_f64() * 1e3,
        );
    }

    if let Some(path) = &args.stats_json {
        let report = RunReport::new(&g, &cfg, &sol);
        let json = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = std::fs::write(path, json) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(3);
        }
    }

    match sol.status {
        Status::Timeout => ExitCode::from(4),
        _ => ExitCode::SUCCESS,
    }
}
