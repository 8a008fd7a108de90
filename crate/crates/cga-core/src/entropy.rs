//! Shannon entropy of a planar point cloud, estimated with a plug-in
//! histogram over a fixed search box. Values on the upper box face land in
//! the last bin; empty cells contribute nothing (0 log 0 = 0).

use crate::Box2;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EntropyConfig {
    pub bins_per_axis: usize,
    /// Boltzmann-style prefactor applied to the raw bit count.
    pub k: f64,
}

impl Default for EntropyConfig {
    // 8 bins per axis give 64 cells, matched to populations of about a
    // hundred points; finer grids starve the counts
    fn default() -> Self {
        Self { bins_per_axis: 8, k: 1.0 }
    }
}

/// Upper bound `k log2(bins^2)` attained by an exactly uniform histogram.
pub fn max_entropy(cfg: &EntropyConfig) -> f64 {
    cfg.k * ((cfg.bins_per_axis * cfg.bins_per_axis) as f64).log2()
}

fn bin_of(v: f64, (lo, hi): (f64, f64), bins: usize) -> usize {
    let t = (v - lo) / (hi - lo);
    let i = (t * bins as f64).floor();
    if i < 0.0 {
        0
    } else {
        (i as usize).min(bins - 1)
    }
}

/// Entropy in k-weighted bits of the cloud binned over `bounds`.
pub fn population_entropy(points: &[[f64; 2]], bounds: &Box2, cfg: &EntropyConfig) -> f64 {
    if points.is_empty() {
        return 0.0;
    }
    let b = cfg.bins_per_axis;
    let mut counts = vec![0u32; b * b];
    for p in points {
        let i = bin_of(p[0], bounds[0], b);
        let j = bin_of(p[1], bounds[1], b);
        counts[i * b + j] += 1;
    }
    let n = points.len() as f64;
    let mut h = 0.0;
    for &c in &counts {
        if c > 0 {
            let p = c as f64 / n;
            h -= p * p.log2();
        }
    }
    cfg.k * h
}
