//! `cga`: run chaotic-generator seeded GA experiments from the shell.
//!
//! Exit codes: 0 success, 1 runtime failure, 2 bad usage or bad config.

use cga_core::benchmarks::{by_name, BENCHMARKS};
use cga_core::chaos::lyapunov::{lyapunov_exponent, LyapunovOptions};
use cga_core::chaos::{default_state, generate_pairs, generate_series, MapId};
use cga_core::harness::{export, run_experiment, ExperimentConfig, Report};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::exit;

#[derive(Parser)]
#[command(name = "cga", version, about = "Chaotic generators seeding a real-coded GA")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full generator-by-benchmark grid and export CSV/JSON artifacts
    Run {
        /// Experiment config, TOML or JSON by extension; defaults apply when omitted
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output directory for performance.csv, density.csv, contour.csv, report.json
        #[arg(long, env = "CGA_OUT_DIR", default_value = "out")]
        out: PathBuf,
        /// Override the master seed
        #[arg(long)]
        seed: Option<u64>,
        /// Override trials per generator-benchmark pair
        #[arg(long)]
        trials: Option<usize>,
        /// Override the generator list
        #[arg(long, value_delimiter = ',', value_parser = parse_map)]
        maps: Option<Vec<MapId>>,
        /// Override the benchmark list
        #[arg(long, value_delimiter = ',')]
        functions: Option<Vec<String>>,
        /// Override worker thread count (0 = default pool)
        #[arg(long)]
        threads: Option<usize>,
        /// Suppress the summary table
        #[arg(long)]
        quiet: bool,
    },
    /// Run one generator against one benchmark once and print a JSON summary
    Single {
        #[arg(long, value_parser = parse_map)]
        map: MapId,
        #[arg(long)]
        function: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Optional base config for GA and generator parameters
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Estimate the largest Lyapunov exponent per generator
    Lyapunov {
        /// One generator; all deterministic ones when omitted
        #[arg(long, value_parser = parse_map)]
        map: Option<MapId>,
        /// Override the iteration count
        #[arg(long)]
        steps: Option<usize>,
    },
    /// List the available generators
    Maps,
    /// List the available benchmark functions
    Benchmarks,
    /// Print raw samples from one generator as CSV
    Series {
        #[arg(long, value_parser = parse_map)]
        map: MapId,
        #[arg(long, default_value_t = 16)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        burn: usize,
    },
}

fn parse_map(s: &str) -> Result<MapId, String> {
    s.parse()
}

fn load_config(path: Option<&Path>) -> Result<ExperimentConfig, String> {
    let Some(path) = path else {
        return Ok(ExperimentConfig::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        serde_json::from_str(&text).map_err(|e| format!("invalid JSON config: {e}"))
    } else {
        toml::from_str(&text).map_err(|e| format!("invalid TOML config: {e}"))
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    eprintln!("error: {msg}");
    exit(2);
}

fn runtime_error(msg: impl std::fmt::Display) -> ! {
    eprintln!("error: {msg}");
    exit(1);
}

#[allow(clippy::too_many_arguments)] // mirrors the flag list one to one
fn cmd_run(
    config: Option<PathBuf>,
    out: PathBuf,
    seed: Option<u64>,
    trials: Option<usize>,
    maps: Option<Vec<MapId>>,
    functions: Option<Vec<String>>,
    threads: Option<usize>,
    quiet: bool,
) {
    let mut cfg = load_config(config.as_deref()).unwrap_or_else(|e| usage_error(e));
    if let Some(s) = seed {
        cfg.master_seed = s;
    }
    if let Some(t) = trials {
        cfg.trials = t;
    }
    if let Some(m) = maps {
        cfg.maps = m;
    }
    if let Some(f) = functions {
        cfg.functions = f;
    }
    if let Some(t) = threads {
        cfg.threads = t;
    }
    if let Err(e) = cfg.validate() {
        usage_error(e);
    }
    let report = run_experiment(&cfg).unwrap_or_else(|e| runtime_error(e));
    export::export_all(&report, &out).unwrap_or_else(|e| runtime_error(e));
    if !quiet {
        print_summary(&report, &out);
    }
}

fn print_summary(report: &Report, out: &Path) {
    print!("{}", export::performance_csv(report));
    println!();
    println!("spearman(mean_entropy, overall) = {:.4}", report.spearman);
    println!("wall time: {} ms", report.wall_ms);
    println!("artifacts written to {}", out.display());
}

fn cmd_single(map: MapId, function: String, seed: u64, config: Option<PathBuf>) {
    let mut cfg = load_config(config.as_deref()).unwrap_or_else(|e| usage_error(e));
    cfg.master_seed = seed;
    cfg.trials = 1;
    cfg.threads = 1;
    cfg.maps = vec![map];
    cfg.functions = vec![function.clone()];
    if let Err(e) = cfg.validate() {
        usage_error(e);
    }
    let report = run_experiment(&cfg).unwrap_or_else(|e| runtime_error(e));
    let r = &report.maps[0].functions[0].records[0];
    let line = serde_json::json!({
        "map": map.name(),
        "function": function,
        "seed": seed,
        "entropy": r.entropy,
        "best_value": r.best_value,
        "best_fitness": r.best_fitness,
        "success": r.success,
    });
    println!("{line}");
}

fn cmd_lyapunov(map: Option<MapId>, steps: Option<usize>) {
    let params = ExperimentConfig::default().generators;
    let targets: Vec<MapId> = match map {
        Some(m) => vec![m],
        None => MapId::ALL.iter().copied().filter(|&m| m != MapId::Random).collect(),
    };
    println!("map,exponent");
    for m in targets {
        let mut opts = LyapunovOptions::for_map(m);
        if let Some(s) = steps {
            opts.steps = s;
        }
        match lyapunov_exponent(m, &params, &default_state(m), &opts) {
            Ok(h) => println!("{m},{h:.6}"),
            Err(e) => runtime_error(format!("{m}: {e}")),
        }
    }
}

fn cmd_maps() {
    println!("{:<12} {:>5}  default start", "name", "dims");
    for &m in MapId::ALL.iter() {
        println!("{:<12} {:>5}  {:?}", m.name(), m.state_len(), default_state(m));
    }
}

fn cmd_benchmarks() {
    println!("{:<14} {:<28} optimum", "name", "box");
    for b in BENCHMARKS.iter() {
        let [(xl, xh), (yl, yh)] = b.bounds;
        let f = by_name(b.name).unwrap();
        println!(
            "{:<14} {:<28} ({}, {}) -> {:.1e}",
            b.name,
            format!("[{xl}, {xh}] x [{yl}, {yh}]"),
            b.optimum[0],
            b.optimum[1],
            (f.eval)(b.optimum[0], b.optimum[1])
        );
    }
}

fn cmd_series(map: MapId, count: usize, burn: usize) {
    let params = ExperimentConfig::default().generators;
    let state = default_state(map);
    if map.state_len() == 1 {
        let xs = generate_series(map, &params, &state, burn, count)
            .unwrap_or_else(|e| runtime_error(e));
        println!("x");
        for x in xs {
            println!("{x}");
        }
    } else {
        let pts =
            generate_pairs(map, &params, &state, burn, count).unwrap_or_else(|e| runtime_error(e));
        println!("x,y");
        for p in pts {
            println!("{},{}", p[0], p[1]);
        }
    }
}

fn main() {
    env_logger::init();
    log::debug!("cga starting");
    let cli = Cli::parse();
    match cli.command {
        Cmd::Run { config, out, seed, trials, maps, functions, threads, quiet } => {
            cmd_run(config, out, seed, trials, maps, functions, threads, quiet)
        }
        Cmd::Single { map, function, seed, config } => cmd_single(map, function, seed, config),
        Cmd::Lyapunov { map, steps } => cmd_lyapunov(map, steps),
        Cmd::Maps => cmd_maps(),
        Cmd::Benchmarks => cmd_benchmarks(),
        Cmd::Series { map, count, burn } => cmd_series(map, count, burn),
    }
}
