//! Real-coded genetic algorithm over a two-dimensional search box.
//!
//! Fitness is reported as 1/(1+f). Selection is a roulette wheel, but the
//! wheel is fed rank-scaled weights (1/sqrt(rank) with rank 1 for the
//! current best): raw 1/(1+f) weights lose all selective pressure once the
//! population closes in on a zero optimum, and the rank scaling keeps the
//! pressure constant throughout the run. Crossover is an arithmetic blend
//! with a single shared coefficient per couple; mutation perturbs genes with
//! a Gaussian whose scale shrinks polynomially over the generations, which
//! lets early exploration coexist with late fine-tuning at the 1e-3 success
//! threshold. One elite survives unchanged per generation.

use crate::benchmarks::Benchmark;
use crate::entropy::{population_entropy, EntropyConfig};
use crate::Box2;
use rand::Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GaConfig {
    pub population: usize,
    pub generations: usize,
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    /// Success threshold: a run succeeds when best f drops below this.
    pub alpha: f64,
    pub elitism: usize,
    /// Initial mutation scale as a fraction of the axis range.
    pub mutation_scale: f64,
    /// Polynomial decay power of the mutation scale over generations.
    pub mutation_decay: f64,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self {
            population: 100,
            generations: 50,
            crossover_prob: 0.8,
            mutation_prob: 0.03,
            alpha: 1e-3,
            elitism: 1,
            mutation_scale: 1.0,
            mutation_decay: 3.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaOutcome {
    pub best_genes: [f64; 2],
    pub best_value: f64,
    pub best_fitness: f64,
    pub success: bool,
    /// Entropy of the initial population over the search box.
    pub initial_entropy: f64,
    /// Best objective value present in the population, per generation.
    pub best_trace: Vec<f64>,
    pub final_population: Vec<[f64; 2]>,
}

pub fn fitness(value: f64) -> f64 {
    1.0 / (1.0 + value)
}

/// Roulette weights 1/sqrt(rank), rank 1 for the smallest objective value.
/// Ties rank by first occurrence.
pub fn rank_weights(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap_or(std::cmp::Ordering::Equal));
    let mut w = vec![0.0; n];
    for (r, &i) in idx.iter().enumerate() {
        w[i] = 1.0 / ((r + 1) as f64).sqrt();
    }
    w
}

/// Fitness-proportional wheel. All-zero or non-finite totals degrade to a
/// uniform pick.
pub fn roulette_select<R: Rng>(weights: &[f64], rng: &mut R) -> usize {
    let total: f64 = weights.iter().sum();
    if !(total > 0.0) || !total.is_finite() {
        return rng.gen_range(0..weights.len());
    }
    let mut t = rng.gen::<f64>() * total;
    for (i, &w) in weights.iter().enumerate() {
        t -= w;
        if t < 0.0 {
            return i;
        }
    }
    weights.len() - 1
}

/// Affine rescale of raw generator pairs into the search box, endpoint
/// exact, with clamping for anything outside the source bounds.
pub fn init_population(pairs: &[[f64; 2]], source: &Box2, target: &Box2) -> Vec<[f64; 2]> {
    pairs
        .iter()
        .map(|p| {
            let mut g = [0.0; 2];
            for c in 0..2 {
                let (slo, shi) = source[c];
                let (tlo, thi) = target[c];
                let w = shi - slo;
                let t = if w > 0.0 { ((p[c] - slo) / w).clamp(0.0, 1.0) } else { 0.5 };
                g[c] = (tlo * (1.0 - t) + thi * t).clamp(tlo, thi);
            }
            g
        })
        .collect()
}

fn blend(a: [f64; 2], b: [f64; 2], lam: f64) -> [f64; 2] {
    [lam * a[0] + (1.0 - lam) * b[0], lam * a[1] + (1.0 - lam) * b[1]]
}

fn clamp_into(g: &mut [f64; 2], bounds: &Box2) {
    for c in 0..2 {
        g[c] = g[c].clamp(bounds[c].0, bounds[c].1);
    }
}

fn mutate<R: Rng>(g: &mut [f64; 2], bounds: &Box2, sigma_frac: f64, pm: f64, rng: &mut R) {
    for c in 0..2 {
        if rng.gen::<f64>() < pm {
            let range = bounds[c].1 - bounds[c].0;
            g[c] += crate::standard_normal(rng) * sigma_frac * range;
        }
    }
}

/// Evolve `pop0` against one benchmark. The caller provides the population
/// already scaled into the search box.
pub fn run_ga<R: Rng>(
    bench: &Benchmark,
    pop0: Vec<[f64; 2]>,
    cfg: &GaConfig,
    ecfg: &EntropyConfig,
    rng: &mut R,
) -> GaOutcome {
    assert!(!pop0.is_empty(), "population must not be empty");
    let initial_entropy = population_entropy(&pop0, &bench.bounds, ecfg);
    let mut pop = pop0;
    let n = pop.len();
    let mut best_genes = pop[0];
    let mut best_value = f64::INFINITY;
    let mut trace = Vec::with_capacity(cfg.generations + 1);

    for gen in 0..=cfg.generations {
        let values: Vec<f64> = pop.iter().map(|g| (bench.eval)(g[0], g[1])).collect();
        let mut gen_best = f64::INFINITY;
        for (g, &v) in pop.iter().zip(&values) {
            if v < gen_best {
                gen_best = v;
            }
            if v < best_value {
                best_value = v;
                best_genes = *g;
            }
        }
        trace.push(gen_best);
        if gen == cfg.generations {
            break;
        }

        let weights = rank_weights(&values);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            values[a].partial_cmp(&values[b]).unwrap_or(std::cmp::Ordering::Equal)
        });
        let mut next: Vec<[f64; 2]> =
            order.iter().take(cfg.elitism.min(n)).map(|&i| pop[i]).collect();

        let frac = 1.0 - gen as f64 / cfg.generations as f64;
        let sigma = cfg.mutation_scale * frac.powf(cfg.mutation_decay);
        while next.len() < n {
            let pa = pop[roulette_select(&weights, rng)];
            let pb = pop[roulette_select(&weights, rng)];
            let (mut c1, mut c2) = if rng.gen::<f64>() < cfg.crossover_prob {
                let lam = rng.gen::<f64>();
                (blend(pa, pb, lam), blend(pb, pa, lam))
            } else {
                (pa, pb)
            };
            mutate(&mut c1, &bench.bounds, sigma, cfg.mutation_prob, rng);
            mutate(&mut c2, &bench.bounds, sigma, cfg.mutation_prob, rng);
            clamp_into(&mut c1, &bench.bounds);
            clamp_into(&mut c2, &bench.bounds);
            next.push(c1);
            if next.len() < n {
                next.push(c2);
            }
        }
        pop = next;
    }

    GaOutcome {
        best_genes,
        best_value,
        best_fitness: fitness(best_value),
        success: best_value < cfg.alpha,
        initial_entropy,
        best_trace: trace,
        final_population: pop,
    }
}
