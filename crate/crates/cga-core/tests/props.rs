//! Property tests over randomized inputs.

use cga_core::chaos::{generate_pairs, generate_series, GeneratorParams, MapId};
use cga_core::entropy::{max_entropy, population_entropy, EntropyConfig};
use cga_core::ga::{init_population, roulette_select, run_ga, GaConfig};
use cga_core::stats::spearman;
use cga_core::Box2;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const UNIT: Box2 = [(0.0, 1.0), (0.0, 1.0)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn logistic_series_is_deterministic_and_finite(x0 in 0.05f64..0.95) {
        let p = GeneratorParams::default();
        let a = generate_series(MapId::Logistic, &p, &[x0], 100, 64).unwrap();
        let b = generate_series(MapId::Logistic, &p, &[x0], 100, 64).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.iter().all(|v| v.is_finite() && (0.0..=1.0).contains(v)));
    }

    #[test]
    fn split_half_pairing_is_consistent(x0 in 0.05f64..0.95, count in 4usize..80) {
        let p = GeneratorParams::default();
        let series = generate_series(MapId::Quadratic, &p, &[x0], 50, 2 * count).unwrap();
        let pairs = generate_pairs(MapId::Quadratic, &p, &[x0], 50, count).unwrap();
        for k in 0..count {
            prop_assert_eq!(pairs[k][0], series[k]);
            prop_assert_eq!(pairs[k][1], series[count + k]);
        }
    }

    #[test]
    fn entropy_stays_in_bounds_for_any_cloud(
        pts in prop::collection::vec((0.0f64..1.0, 0.0f64..1.0), 1..300),
        bins in 2usize..24,
    ) {
        let cfg = EntropyConfig { bins_per_axis: bins, k: 1.0 };
        let pop: Vec<[f64; 2]> = pts.iter().map(|(x, y)| [*x, *y]).collect();
        let h = population_entropy(&pop, &UNIT, &cfg);
        prop_assert!(h >= 0.0);
        prop_assert!(h <= max_entropy(&cfg) + 1e-12);
    }

    #[test]
    fn entropy_ignores_point_order(
        pts in prop::collection::vec((0.0f64..1.0, 0.0f64..1.0), 2..120),
        rot in 1usize..100,
    ) {
        let cfg = EntropyConfig::default();
        let pop: Vec<[f64; 2]> = pts.iter().map(|(x, y)| [*x, *y]).collect();
        let mut turned = pop.clone();
        turned.rotate_left(rot % pop.len());
        prop_assert_eq!(
            population_entropy(&pop, &UNIT, &cfg),
            population_entropy(&turned, &UNIT, &cfg)
        );
    }

    #[test]
    fn roulette_never_picks_zero_weight(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let weights = [0.0, 3.0, 0.0, 1.0, 0.0];
        for _ in 0..64 {
            let i = roulette_select(&weights, &mut rng);
            prop_assert!(i == 1 || i == 3);
        }
    }

    #[test]
    fn init_population_always_lands_in_the_box(
        pts in prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 1..80),
    ) {
        let source = [(-1.0, 1.0), (-1.0, 1.0)];
        let target = [(2.0, 6.0), (-10.0, -4.0)];
        let pairs: Vec<[f64; 2]> = pts.iter().map(|(x, y)| [*x, *y]).collect();
        let pop = init_population(&pairs, &source, &target);
        prop_assert_eq!(pop.len(), pairs.len());
        for g in pop {
            prop_assert!(g[0] >= 2.0 && g[0] <= 6.0);
            prop_assert!(g[1] >= -10.0 && g[1] <= -4.0);
        }
    }

    #[test]
    fn ga_preserves_size_and_closure(seed in any::<u64>(), pop_n in 6usize..24, gens in 1usize..6) {
        let bench = cga_core::benchmarks::by_name("camel").unwrap();
        let mut cfg = GaConfig::default();
        cfg.population = pop_n;
        cfg.generations = gens;
        let ecfg = EntropyConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pop0: Vec<[f64; 2]> = (0..pop_n)
            .map(|i| {
                let t = i as f64 / pop_n as f64;
                [
                    bench.bounds[0].0 + t * (bench.bounds[0].1 - bench.bounds[0].0),
                    bench.bounds[1].1 - t * (bench.bounds[1].1 - bench.bounds[1].0),
                ]
            })
            .collect();
        let out = run_ga(bench, pop0, &cfg, &ecfg, &mut rng);
        prop_assert_eq!(out.final_population.len(), pop_n);
        for g in &out.final_population {
            prop_assert!(g[0] >= bench.bounds[0].0 && g[0] <= bench.bounds[0].1);
            prop_assert!(g[1] >= bench.bounds[1].0 && g[1] <= bench.bounds[1].1);
        }
        prop_assert_eq!(out.best_trace.len(), gens + 1);
        for w in out.best_trace.windows(2) {
            prop_assert!(w[1] <= w[0]);
        }
    }

    #[test]
    fn spearman_is_bounded_and_antisymmetric(
        xs in prop::collection::vec(-100.0f64..100.0, 3..40),
    ) {
        let ys: Vec<f64> = xs.iter().map(|v| v * 2.0 + 1.0).collect();
        let neg: Vec<f64> = xs.iter().map(|v| -v).collect();
        let r1 = spearman(&xs, &ys);
        let r2 = spearman(&xs, &neg);
        prop_assert!(r1 >= -1.0 - 1e-12 && r1 <= 1.0 + 1e-12);
        prop_assert!((r1 + r2).abs() < 1e-9 || xs.iter().all(|v| *v == xs[0]));
    }

    #[test]
    fn success_rate_formula_exact_for_any_counts(nt in 1usize..200, n_raw in 0usize..200) {
        let n = n_raw.min(nt);
        let p = 100.0 * n as f64 / nt as f64;
        prop_assert!(p >= 0.0 && p <= 100.0);
        prop_assert_eq!(p, 100.0 * n as f64 / nt as f64);
    }
}
