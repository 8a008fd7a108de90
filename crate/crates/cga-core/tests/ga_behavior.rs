//! Behavioral contract for the real-coded GA.

use cga_core::benchmarks::by_name;
use cga_core::entropy::EntropyConfig;
use cga_core::ga::{
    fitness, init_population, rank_weights, roulette_select, run_ga, GaConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn fitness_transform_frozen_points() {
    assert_eq!(fitness(0.0), 1.0);
    assert_eq!(fitness(1.0), 0.5);
    assert_eq!(fitness(3.0), 0.25);
    assert!(fitness(1e12) > 0.0);
}

#[test]
fn rank_weights_follow_inverse_sqrt_rank() {
    let w = rank_weights(&[5.0, 1.0, 3.0]);
    let e = [1.0 / 3.0f64.sqrt(), 1.0, 1.0 / 2.0f64.sqrt()];
    for i in 0..3 {
        assert!((w[i] - e[i]).abs() < 1e-15, "i={i}: {} vs {}", w[i], e[i]);
    }
    // ties resolve by first occurrence
    let w = rank_weights(&[2.0, 2.0]);
    assert!(w[0] > w[1]);
}

#[test]
fn roulette_respects_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let i = roulette_select(&[0.0, 0.0, 1.0, 0.0], &mut rng);
        assert_eq!(i, 2);
    }
    // all-zero weights degrade to a uniform pick over the full range
    let mut seen = [false; 4];
    for _ in 0..400 {
        seen[roulette_select(&[0.0; 4], &mut rng)] = true;
    }
    assert!(seen.iter().all(|s| *s));
}

#[test]
fn roulette_sampling_is_proportional() {
    let weights = [1.0, 2.0, 3.0, 4.0];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = 100_000usize;
    let mut counts = [0usize; 4];
    for _ in 0..n {
        counts[roulette_select(&weights, &mut rng)] += 1;
    }
    let total: f64 = weights.iter().sum();
    let mut chi2 = 0.0;
    for i in 0..4 {
        let expect = n as f64 * weights[i] / total;
        let d = counts[i] as f64 - expect;
        chi2 += d * d / expect;
    }
    // chi-square critical value at three degrees of freedom, alpha = 0.001
    assert!(chi2 < 16.266, "chi2 = {chi2}, counts = {counts:?}");
}

#[test]
fn init_population_maps_source_bounds_onto_the_box() {
    let source = [(-2.0, 2.0), (10.0, 30.0)];
    let target = [(0.0, 10.0), (-1.0, 1.0)];
    let pairs = vec![[-2.0, 30.0], [2.0, 10.0], [0.0, 20.0], [9.0, -5.0]];
    let pop = init_population(&pairs, &source, &target);
    assert_eq!(pop[0], [0.0, 1.0]);
    assert_eq!(pop[1], [10.0, -1.0]);
    assert_eq!(pop[2], [5.0, 0.0]);
    // out-of-range source values clamp to the box faces
    assert_eq!(pop[3], [10.0, -1.0]);
}

fn seeded_cloud(n: usize, bounds: &cga_core::Box2, seed: u64) -> Vec<[f64; 2]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            [
                rng.gen_range(bounds[0].0..=bounds[0].1),
                rng.gen_range(bounds[1].0..=bounds[1].1),
            ]
        })
        .collect()
}

#[test]
fn ga_run_is_deterministic_and_closed() {
    let bench = by_name("matyas").unwrap();
    let cfg = GaConfig::default();
    let ecfg = EntropyConfig::default();
    let pop0 = seeded_cloud(cfg.population, &bench.bounds, 99);

    let mut r1 = ChaCha8Rng::seed_from_u64(1234);
    let out1 = run_ga(bench, pop0.clone(), &cfg, &ecfg, &mut r1);
    let mut r2 = ChaCha8Rng::seed_from_u64(1234);
    let out2 = run_ga(bench, pop0.clone(), &cfg, &ecfg, &mut r2);

    assert_eq!(out1.best_value, out2.best_value);
    assert_eq!(out1.best_genes, out2.best_genes);
    assert_eq!(out1.final_population, out2.final_population);
    assert_eq!(out1.best_trace, out2.best_trace);

    assert_eq!(out1.final_population.len(), cfg.population);
    for g in &out1.final_population {
        assert!(g[0] >= bench.bounds[0].0 && g[0] <= bench.bounds[0].1);
        assert!(g[1] >= bench.bounds[1].0 && g[1] <= bench.bounds[1].1);
    }
}

#[test]
fn elitism_keeps_the_generation_best_monotone() {
    let bench = by_name("rastrigin").unwrap();
    let cfg = GaConfig::default();
    let ecfg = EntropyConfig::default();
    let pop0 = seeded_cloud(cfg.population, &bench.bounds, 7);
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let out = run_ga(bench, pop0, &cfg, &ecfg, &mut rng);

    assert_eq!(out.best_trace.len(), cfg.generations + 1);
    for w in out.best_trace.windows(2) {
        assert!(w[1] <= w[0], "generation best regressed: {} -> {}", w[0], w[1]);
    }
    // the elite is never lost, so the final generation holds the best ever seen
    let last = *out.best_trace.last().unwrap();
    assert_eq!(out.best_value, last);
    assert!(out.best_value <= out.best_trace[0]);
}

#[test]
fn ga_improves_over_the_initial_population_and_flags_success() {
    let bench = by_name("matyas").unwrap();
    let cfg = GaConfig::default();
    let ecfg = EntropyConfig::default();
    let pop0 = seeded_cloud(cfg.population, &bench.bounds, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let out = run_ga(bench, pop0, &cfg, &ecfg, &mut rng);
    assert!(out.best_value < out.best_trace[0]);
    assert_eq!(out.success, out.best_value < cfg.alpha);
    assert!(out.best_fitness == fitness(out.best_value));
    assert!(out.initial_entropy >= 0.0 && out.initial_entropy <= 6.0);
}

#[test]
fn ga_defaults_are_frozen() {
    let cfg = GaConfig::default();
    assert_eq!(cfg.population, 100);
    assert_eq!(cfg.generations, 50);
    assert_eq!(cfg.crossover_prob, 0.8);
    assert_eq!(cfg.mutation_prob, 0.03);
    assert_eq!(cfg.alpha, 1e-3);
    assert_eq!(cfg.elitism, 1);
}
