//! Experiment harness: run every configured generator against every
//! configured benchmark for a fixed number of trials, record the entropy of
//! each initial population and whether the GA reached the success threshold,
//! then aggregate success rates and the entropy-performance rank
//! correlation.
//!
//! Seeding is hierarchical and schedule independent: each trial's seed is a
//! splitmix64 chain over the master seed, the benchmark name, the generator
//! and the trial index, so any subset of the grid reproduces exactly the
//! same trials regardless of execution order or thread count.

pub mod export;

use crate::benchmarks::{by_name, names, Benchmark};
use crate::chaos::{default_state, generate_pairs, GeneratorParams, MapId};
use crate::entropy::EntropyConfig;
use crate::error::{Error, Result};
use crate::ga::{init_population, run_ga, GaConfig};
use crate::stats;
use crate::Box2;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalingMode {
    /// Rescale trial points with bounds measured once on a long unjittered
    /// reference orbit of the same generator.
    ReferenceBounds,
    /// Rescale each trial by its own min and max. Short flow arcs then get
    /// stretched to fill the box, which inflates their entropy.
    PerTrialMinmax,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentConfig {
    pub master_seed: u64,
    /// Trials per generator-benchmark pair.
    pub trials: usize,
    /// Iterations discarded before sampling an orbit.
    pub burn_in: usize,
    /// Uniform perturbation half-width applied to each initial state
    /// component per trial.
    pub jitter: f64,
    /// How many times a degenerate or divergent orbit may be regenerated
    /// (with a fresh seed) before the trial is abandoned.
    pub retry_budget: usize,
    /// Number of points in the reference orbit used for scaling bounds.
    pub reference_pairs: usize,
    pub scaling: ScalingMode,
    /// Worker threads; 0 means whatever the global pool has.
    pub threads: usize,
    pub maps: Vec<MapId>,
    pub functions: Vec<String>,
    pub entropy: EntropyConfig,
    pub ga: GaConfig,
    pub generators: GeneratorParams,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            master_seed: 42,
            trials: 50,
            burn_in: 500,
            jitter: 1e-3,
            retry_budget: 5,
            reference_pairs: 32_768,
            scaling: ScalingMode::ReferenceBounds,
            threads: 0,
            maps: MapId::ALL.to_vec(),
            functions: names().iter().map(|s| s.to_string()).collect(),
            entropy: EntropyConfig::default(),
            ga: GaConfig::default(),
            generators: GeneratorParams::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidConfig(msg));
        if self.trials == 0 {
            return fail("trials must be at least 1".into());
        }
        if self.ga.population < 2 {
            return fail("population must be at least 2".into());
        }
        if self.ga.generations == 0 {
            return fail("generations must be at least 1".into());
        }
        if self.ga.elitism >= self.ga.population {
            return fail("elitism must leave room for offspring".into());
        }
        for (name, p) in
            [("crossover_prob", self.ga.crossover_prob), ("mutation_prob", self.ga.mutation_prob)]
        {
            if !(0.0..=1.0).contains(&p) {
                return fail(format!("{name} must lie in [0, 1], got {p}"));
            }
        }
        if !(self.ga.alpha > 0.0) {
            return fail("alpha must be positive".into());
        }
        if !(self.ga.mutation_scale > 0.0) || !self.ga.mutation_scale.is_finite() {
            return fail("mutation_scale must be positive and finite".into());
        }
        if !(self.ga.mutation_decay >= 0.0) {
            return fail("mutation_decay must be non-negative".into());
        }
        if !(self.jitter >= 0.0) || !self.jitter.is_finite() {
            return fail("jitter must be non-negative and finite".into());
        }
        if self.entropy.bins_per_axis < 2 {
            return fail("bins_per_axis must be at least 2".into());
        }
        if !(self.entropy.k > 0.0) {
            return fail("entropy k must be positive".into());
        }
        if self.reference_pairs < 16 {
            return fail("reference_pairs must be at least 16".into());
        }
        if self.maps.is_empty() {
            return fail("at least one generator required".into());
        }
        let mut seen = std::collections::HashSet::new();
        for m in &self.maps {
            if !seen.insert(*m) {
                return fail(format!("generator '{m}' listed twice"));
            }
        }
        if self.functions.is_empty() {
            return fail("at least one benchmark required".into());
        }
        let mut seen = std::collections::HashSet::new();
        for f in &self.functions {
            if by_name(f).is_none() {
                return fail(format!("unknown benchmark '{f}'"));
            }
            if !seen.insert(f.clone()) {
                return fail(format!("benchmark '{f}' listed twice"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub retries: usize,
    pub entropy: f64,
    pub best_value: f64,
    pub best_fitness: f64,
    pub success: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairSummary {
    pub function: String,
    pub trials: usize,
    pub successes: usize,
    /// 100 N / Nt, exact in f64.
    pub success_rate: f64,
    pub mean_entropy: f64,
    pub wall_ms: u64,
    #[serde(skip)]
    pub records: Vec<TrialRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapSummary {
    pub map: MapId,
    /// Unweighted mean of the per-benchmark success rates.
    pub overall: f64,
    /// Unweighted mean of the per-benchmark mean entropies.
    pub mean_entropy: f64,
    pub wall_ms: u64,
    pub functions: Vec<PairSummary>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub config: ExperimentConfig,
    /// Spearman rank correlation between per-generator mean entropy and
    /// overall success.
    pub spearman: f64,
    pub wall_ms: u64,
    pub maps: Vec<MapSummary>,
}

/// Deterministic per-trial seed, independent of evaluation schedule.
pub fn trial_seed(master: u64, function: &str, map: MapId, trial: u64, retry: u64) -> u64 {
    let mut h = crate::splitmix64(master);
    for &b in function.as_bytes() {
        h = crate::splitmix64(h ^ u64::from(b));
    }
    h = crate::splitmix64(h ^ map.index() as u64);
    h = crate::splitmix64(h ^ trial);
    crate::splitmix64(h ^ retry)
}

/// Coordinate bounds of a long unjittered orbit, the reference frame for
/// scaling trial populations.
pub fn reference_bounds(
    map: MapId,
    params: &GeneratorParams,
    pairs: usize,
    burn_in: usize,
) -> Result<Box2> {
    let pts = generate_pairs(map, params, &default_state(map), burn_in, pairs)?;
    minmax_bounds(map, &pts)
}

fn minmax_bounds(map: MapId, pts: &[[f64; 2]]) -> Result<Box2> {
    let mut bounds = [(f64::INFINITY, f64::NEG_INFINITY); 2];
    for p in pts {
        for c in 0..2 {
            bounds[c].0 = bounds[c].0.min(p[c]);
            bounds[c].1 = bounds[c].1.max(p[c]);
        }
    }
    for (lo, hi) in bounds {
        if !(hi - lo > 1e-12) {
            return Err(Error::Degenerate {
                map: map.name(),
                detail: format!("scaling bounds collapsed: [{lo}, {hi}]"),
            });
        }
    }
    Ok(bounds)
}

fn run_trial(
    cfg: &ExperimentConfig,
    reference: Option<&Box2>,
    map: MapId,
    bench: &Benchmark,
    seed: u64,
) -> Result<TrialRecord> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut state = default_state(map);
    for v in state.iter_mut() {
        *v += rng.gen_range(-cfg.jitter..=cfg.jitter);
    }
    let pairs = generate_pairs(map, &cfg.generators, &state, cfg.burn_in, cfg.ga.population)?;
    let source = match cfg.scaling {
        ScalingMode::ReferenceBounds => *reference.expect("reference bounds precomputed"),
        ScalingMode::PerTrialMinmax => minmax_bounds(map, &pairs)?,
    };
    let pop0 = init_population(&pairs, &source, &bench.bounds);
    let out = run_ga(bench, pop0, &cfg.ga, &cfg.entropy, &mut rng);
    Ok(TrialRecord {
        trial: 0,
        seed,
        retries: 0,
        entropy: out.initial_entropy,
        best_value: out.best_value,
        best_fitness: out.best_fitness,
        success: out.success,
    })
}

fn run_pair(
    cfg: &ExperimentConfig,
    reference: Option<&Box2>,
    map: MapId,
    bench: &Benchmark,
) -> Result<PairSummary> {
    let t0 = Instant::now();
    let mut records = Vec::with_capacity(cfg.trials);
    for trial in 0..cfg.trials {
        let mut retry: u64 = 0;
        let record = loop {
            let seed = trial_seed(cfg.master_seed, bench.name, map, trial as u64, retry);
            match run_trial(cfg, reference, map, bench, seed) {
                Ok(mut r) => {
                    r.trial = trial;
                    r.retries = retry as usize;
                    break r;
                }
                Err(e @ (Error::Degenerate { .. } | Error::Diverged { .. }))
                    if (retry as usize) < cfg.retry_budget =>
                {
                    log::debug!("{map}/{}: trial {trial} regenerated: {e}", bench.name);
                    retry += 1;
                }
                Err(e) => return Err(e),
            }
        };
        records.push(record);
    }
    let successes = records.iter().filter(|r| r.success).count();
    let success_rate = 100.0 * successes as f64 / cfg.trials as f64;
    let mean_entropy = stats::mean(&records.iter().map(|r| r.entropy).collect::<Vec<f64>>());
    Ok(PairSummary {
        function: bench.name.to_string(),
        trials: cfg.trials,
        successes,
        success_rate,
        mean_entropy,
        wall_ms: t0.elapsed().as_millis() as u64,
        records,
    })
}

/// Run the full generator-by-benchmark grid described by `cfg`.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate()?;
    let t0 = Instant::now();

    let benches: Vec<&'static Benchmark> =
        cfg.functions.iter().map(|f| by_name(f).expect("validated")).collect();

    let mut references: HashMap<MapId, Box2> = HashMap::new();
    if cfg.scaling == ScalingMode::ReferenceBounds {
        for &map in &cfg.maps {
            let b = reference_bounds(map, &cfg.generators, cfg.reference_pairs, cfg.burn_in)?;
            references.insert(map, b);
        }
    }

    let jobs: Vec<(MapId, &'static Benchmark)> = cfg
        .maps
        .iter()
        .flat_map(|&m| benches.iter().map(move |&b| (m, b)))
        .collect();

    let work = || -> Result<Vec<PairSummary>> {
        jobs.par_iter()
            .map(|&(map, bench)| run_pair(cfg, references.get(&map), map, bench))
            .collect()
    };
    let pair_summaries: Vec<PairSummary> = if cfg.threads == 0 {
        work()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
        pool.install(work)?
    };

    let mut maps = Vec::with_capacity(cfg.maps.len());
    for (mi, &map) in cfg.maps.iter().enumerate() {
        let fns: Vec<PairSummary> =
            pair_summaries[mi * benches.len()..(mi + 1) * benches.len()].to_vec();
        let overall = stats::mean(&fns.iter().map(|f| f.success_rate).collect::<Vec<f64>>());
        let mean_entropy = stats::mean(&fns.iter().map(|f| f.mean_entropy).collect::<Vec<f64>>());
        let wall_ms = fns.iter().map(|f| f.wall_ms).sum();
        maps.push(MapSummary { map, overall, mean_entropy, wall_ms, functions: fns });
    }

    let e: Vec<f64> = maps.iter().map(|m| m.mean_entropy).collect();
    let p: Vec<f64> = maps.iter().map(|m| m.overall).collect();
    let spearman = if maps.len() >= 2 { stats::spearman(&e, &p) } else { 0.0 };

    Ok(Report { config: cfg.clone(), spearman, wall_ms: t0.elapsed().as_millis() as u64, maps })
}
