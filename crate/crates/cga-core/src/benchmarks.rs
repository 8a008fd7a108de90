//! Benchmark suite: nine two-dimensional minimization problems, all with
//! optimum value zero inside their box.

use crate::Box2;
use std::f64::consts::{E, PI, TAU};

pub struct Benchmark {
    pub name: &'static str,
    pub bounds: Box2,
    pub optimum: [f64; 2],
    pub eval: fn(f64, f64) -> f64,
}

fn ackley(x: f64, y: f64) -> f64 {
    -20.0 * (-0.2 * (0.5 * (x * x + y * y)).sqrt()).exp()
        - (0.5 * ((TAU * x).cos() + (TAU * y).cos())).exp()
        + E
        + 20.0
}

fn beale(x: f64, y: f64) -> f64 {
    let t1 = 1.5 - x + x * y;
    let t2 = 2.25 - x + x * y * y;
    let t3 = 2.625 - x + x * y * y * y;
    t1 * t1 + t2 * t2 + t3 * t3
}

fn bukin6(x: f64, y: f64) -> f64 {
    100.0 * (y - 0.01 * x * x).abs().sqrt() + 0.01 * (x + 10.0).abs()
}

fn camel(x: f64, y: f64) -> f64 {
    2.0 * x * x - 1.05 * x.powi(4) + x.powi(6) / 6.0 + x * y + y * y
}

fn leon(x: f64, y: f64) -> f64 {
    let a = y - x * x * x;
    let b = 1.0 - x;
    100.0 * a * a + b * b
}

fn levi13(x: f64, y: f64) -> f64 {
    let s3x = (3.0 * PI * x).sin();
    let s3y = (3.0 * PI * y).sin();
    let s2y = (2.0 * PI * y).sin();
    s3x * s3x + (x - 1.0) * (x - 1.0) * (1.0 + s3y * s3y)
        + (y - 1.0) * (y - 1.0) * (1.0 + s2y * s2y)
}

fn matyas(x: f64, y: f64) -> f64 {
    0.26 * (x * x + y * y) - 0.48 * x * y
}

fn modschaffer2(x: f64, y: f64) -> f64 {
    let s = (x * x - y * y).sin();
    let d = 1.0 + 0.001 * (x * x + y * y);
    0.5 + (s * s - 0.5) / (d * d)
}

fn rastrigin(x: f64, y: f64) -> f64 {
    20.0 + x * x - 10.0 * (TAU * x).cos() + y * y - 10.0 * (TAU * y).cos()
}

pub static BENCHMARKS: [Benchmark; 9] = [
    Benchmark {
        name: "ackley",
        bounds: [(-5.0, 5.0), (-5.0, 5.0)],
        optimum: [0.0, 0.0],
        eval: ackley,
    },
    Benchmark {
        name: "beale",
        bounds: [(-4.5, 4.5), (-4.5, 4.5)],
        optimum: [3.0, 0.5],
        eval: beale,
    },
    Benchmark {
        name: "bukin6",
        bounds: [(-15.0, -5.0), (-3.0, 3.0)],
        optimum: [-10.0, 1.0],
        eval: bukin6,
    },
    Benchmark {
        name: "camel",
        bounds: [(-5.0, 5.0), (-5.0, 5.0)],
        optimum: [0.0, 0.0],
        eval: camel,
    },
    // the box is chosen to keep the optimum interior
    Benchmark {
        name: "leon",
        bounds: [(0.0, 2.0), (0.0, 2.0)],
        optimum: [1.0, 1.0],
        eval: leon,
    },
    Benchmark {
        name: "levi13",
        bounds: [(-10.0, 10.0), (-10.0, 10.0)],
        optimum: [1.0, 1.0],
        eval: levi13,
    },
    Benchmark {
        name: "matyas",
        bounds: [(-10.0, 10.0), (-10.0, 10.0)],
        optimum: [0.0, 0.0],
        eval: matyas,
    },
    Benchmark {
        name: "modschaffer2",
        bounds: [(-100.0, 100.0), (-100.0, 100.0)],
        optimum: [0.0, 0.0],
        eval: modschaffer2,
    },
    Benchmark {
        name: "rastrigin",
        bounds: [(-5.12, 5.12), (-5.12, 5.12)],
        optimum: [0.0, 0.0],
        eval: rastrigin,
    },
];

pub fn by_name(name: &str) -> Option<&'static Benchmark> {
    BENCHMARKS.iter().find(|b| b.name == name)
}

/// Names in registry order.
pub fn names() -> Vec<&'static str> {
    BENCHMARKS.iter().map(|b| b.name).collect()
}
