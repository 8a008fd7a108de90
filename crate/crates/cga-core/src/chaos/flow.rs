//! Fixed-step classical Runge-Kutta integration for the two flows.

use super::{LorenzParams, RosslerParams};

/// One RK4 step of size `dt`.
pub fn rk4(deriv: impl Fn([f64; 3]) -> [f64; 3], s: [f64; 3], dt: f64) -> [f64; 3] {
    let k1 = deriv(s);
    let k2 = deriv([
        s[0] + dt / 2.0 * k1[0],
        s[1] + dt / 2.0 * k1[1],
        s[2] + dt / 2.0 * k1[2],
    ]);
    let k3 = deriv([
        s[0] + dt / 2.0 * k2[0],
        s[1] + dt / 2.0 * k2[1],
        s[2] + dt / 2.0 * k2[2],
    ]);
    let k4 = deriv([s[0] + dt * k3[0], s[1] + dt * k3[1], s[2] + dt * k3[2]]);
    [
        s[0] + dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
        s[1] + dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        s[2] + dt / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]),
    ]
}

pub fn lorenz_deriv(p: &LorenzParams, s: [f64; 3]) -> [f64; 3] {
    let [x, y, z] = s;
    [p.sigma * (y - x), x * (p.rho - z) - y, x * y - p.beta * z]
}

pub fn rossler_deriv(p: &RosslerParams, s: [f64; 3]) -> [f64; 3] {
    let [x, y, z] = s;
    [-y - z, x + p.a * y, p.b + z * (x - p.c)]
}
