//! Nine signal generators: seven deterministic chaotic systems, one
//! phase-randomized surrogate and one plain noise stream. All of them expose
//! the same two views, a scalar sample series and a planar point sequence
//! used to seed GA populations.
//!
//! Sampling convention: sample `k` is the state after `burn_in + k`
//! iterations of the system, so a burn-in is a pure shift of the series.
//! Maps with an intrinsically planar state (Henon, Ikeda) and the flows
//! (projected to their first two coordinates) pair up naturally; scalar
//! sources pair sample `i` with sample `count + i` of a series twice as
//! long, which avoids placing the points on the graph of the map itself.

pub mod flow;
pub mod lyapunov;
mod mackey_glass;
mod phaseran;

use crate::error::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub(crate) use mackey_glass::DelayStepper;

/// Orbit values beyond this magnitude count as divergence.
const DIVERGENCE_LIMIT: f64 = 1e12;
/// Series whose range is below this are fixed points for our purposes.
const DEGENERACY_WIDTH: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapId {
    Lorenz,
    Rossler,
    Random,
    Phaseran,
    MackeyGlass,
    Ikeda,
    Henon,
    Quadratic,
    Logistic,
}

impl MapId {
    pub const ALL: [MapId; 9] = [
        MapId::Lorenz,
        MapId::Rossler,
        MapId::Random,
        MapId::Phaseran,
        MapId::MackeyGlass,
        MapId::Ikeda,
        MapId::Henon,
        MapId::Quadratic,
        MapId::Logistic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapId::Lorenz => "lorenz",
            MapId::Rossler => "rossler",
            MapId::Random => "random",
            MapId::Phaseran => "phaseran",
            MapId::MackeyGlass => "mackeyglass",
            MapId::Ikeda => "ikeda",
            MapId::Henon => "henon",
            MapId::Quadratic => "quadratic",
            MapId::Logistic => "logistic",
        }
    }

    pub fn from_name(name: &str) -> Option<MapId> {
        MapId::ALL.iter().copied().find(|m| m.name() == name)
    }

    /// Position in the canonical listing.
    pub fn index(self) -> usize {
        MapId::ALL.iter().position(|m| *m == self).unwrap()
    }

    /// Number of components in the initial state vector.
    pub fn state_len(self) -> usize {
        match self {
            MapId::Lorenz | MapId::Rossler => 3,
            MapId::Henon | MapId::Ikeda => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for MapId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MapId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        MapId::from_name(s).ok_or_else(|| format!("unknown generator '{s}'"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LogisticParams {
    pub a: f64,
}

impl Default for LogisticParams {
    fn default() -> Self {
        Self { a: 4.0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadraticParams {
    pub a: f64,
}

impl Default for QuadraticParams {
    // 1.8 sits well inside the chaotic band; values near 1.75 fall on a
    // period-3 window boundary where the exponent vanishes
    fn default() -> Self {
        Self { a: 1.8 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct HenonParams {
    pub a: f64,
    pub b: f64,
}

impl Default for HenonParams {
    fn default() -> Self {
        Self { a: 1.4, b: 0.3 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct IkedaParams {
    pub u: f64,
}

impl Default for IkedaParams {
    fn default() -> Self {
        Self { u: 0.9 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LorenzParams {
    pub sigma: f64,
    pub rho: f64,
    pub beta: f64,
    pub dt: f64,
}

impl Default for LorenzParams {
    fn default() -> Self {
        Self { sigma: 10.0, rho: 28.0, beta: 8.0 / 3.0, dt: 0.01 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RosslerParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub dt: f64,
}

impl Default for RosslerParams {
    fn default() -> Self {
        Self { a: 0.2, b: 0.2, c: 5.7, dt: 0.1 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MackeyGlassParams {
    pub a: f64,
    pub b: f64,
    pub n: f64,
    pub tau: f64,
    pub dt: f64,
}

impl Default for MackeyGlassParams {
    // the classic chaotic operating point of the delay equation
    fn default() -> Self {
        Self { a: 0.2, b: 0.1, n: 10.0, tau: 17.0, dt: 0.1 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PhaseranParams {
    /// Recorded alongside results for provenance; the surrogate construction
    /// itself only needs the base series and a phase seed.
    pub alpha: f64,
}

impl Default for PhaseranParams {
    fn default() -> Self {
        Self { alpha: 1.95 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GeneratorParams {
    pub logistic: LogisticParams,
    pub quadratic: QuadraticParams,
    pub henon: HenonParams,
    pub ikeda: IkedaParams,
    pub lorenz: LorenzParams,
    pub rossler: RosslerParams,
    pub mackey_glass: MackeyGlassParams,
    pub phaseran: PhaseranParams,
}

/// Canonical starting state of each generator before any per-trial jitter.
pub fn default_state(map: MapId) -> Vec<f64> {
    match map {
        MapId::Lorenz => vec![1.0, 1.0, 1.0],
        MapId::Rossler => vec![1.0, 1.0, 1.0],
        MapId::Random => vec![0.5],
        MapId::Phaseran => vec![0.3],
        MapId::MackeyGlass => vec![1.2],
        MapId::Ikeda => vec![0.1, 0.1],
        MapId::Henon => vec![0.0, 0.0],
        MapId::Quadratic => vec![0.5],
        MapId::Logistic => vec![0.3],
    }
}

fn check_state(map: MapId, vals: &[f64]) -> Result<()> {
    for v in vals {
        if !v.is_finite() || v.abs() > DIVERGENCE_LIMIT {
            return Err(Error::Diverged {
                map: map.name(),
                detail: format!("state reached {v:e}"),
            });
        }
    }
    Ok(())
}

fn check_series_range(map: MapId, series: &[f64]) -> Result<()> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in series {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if series.len() > 1 && hi - lo < DEGENERACY_WIDTH {
        return Err(Error::Degenerate {
            map: map.name(),
            detail: format!("series range {:.3e} over {} samples", hi - lo, series.len()),
        });
    }
    Ok(())
}

fn scalar_series(
    map: MapId,
    step: impl Fn(f64) -> f64,
    x0: f64,
    burn_in: usize,
    count: usize,
) -> Result<Vec<f64>> {
    let mut x = x0;
    check_state(map, &[x])?;
    for _ in 0..burn_in {
        x = step(x);
        check_state(map, &[x])?;
    }
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(x);
        x = step(x);
        check_state(map, &[x])?;
    }
    check_series_range(map, &out)?;
    Ok(out)
}

fn planar_orbit(
    map: MapId,
    step: impl Fn(f64, f64) -> (f64, f64),
    s0: (f64, f64),
    burn_in: usize,
    count: usize,
) -> Result<Vec<[f64; 2]>> {
    let (mut x, mut y) = s0;
    check_state(map, &[x, y])?;
    for _ in 0..burn_in {
        let (nx, ny) = step(x, y);
        x = nx;
        y = ny;
        check_state(map, &[x, y])?;
    }
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push([x, y]);
        let (nx, ny) = step(x, y);
        x = nx;
        y = ny;
        check_state(map, &[x, y])?;
    }
    for c in 0..2 {
        let coord: Vec<f64> = out.iter().map(|p| p[c]).collect();
        check_series_range(map, &coord)?;
    }
    Ok(out)
}

fn flow_orbit(
    map: MapId,
    deriv: impl Fn([f64; 3]) -> [f64; 3],
    s0: [f64; 3],
    dt: f64,
    burn_in: usize,
    count: usize,
) -> Result<Vec<[f64; 2]>> {
    let mut s = s0;
    check_state(map, &s)?;
    for _ in 0..burn_in {
        s = flow::rk4(&deriv, s, dt);
        check_state(map, &s)?;
    }
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push([s[0], s[1]]);
        s = flow::rk4(&deriv, s, dt);
        check_state(map, &s)?;
    }
    for c in 0..2 {
        let coord: Vec<f64> = out.iter().map(|p| p[c]).collect();
        check_series_range(map, &coord)?;
    }
    Ok(out)
}

fn delay_series(
    p: &MackeyGlassParams,
    x0: f64,
    burn_in: usize,
    count: usize,
) -> Result<Vec<f64>> {
    let map = MapId::MackeyGlass;
    let mut st = DelayStepper::new(p, x0)?;
    check_state(map, &[x0])?;
    for _ in 0..burn_in {
        st.step();
        check_state(map, &[st.value()])?;
    }
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(st.value());
        st.step();
        check_state(map, &[st.value()])?;
    }
    check_series_range(map, &out)?;
    Ok(out)
}

fn noise_series(x0: f64, burn_in: usize, count: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(crate::splitmix64(x0.to_bits()));
    for _ in 0..burn_in {
        let _ = crate::standard_normal(&mut rng);
    }
    (0..count).map(|_| crate::standard_normal(&mut rng)).collect()
}

const PHASE_SALT: u64 = 0x5048_4153_4552_414E;

fn surrogate_series(
    params: &GeneratorParams,
    x0: f64,
    burn_in: usize,
    count: usize,
) -> Result<Vec<f64>> {
    let a = params.logistic.a;
    let base = scalar_series(MapId::Phaseran, |x| a * x * (1.0 - x), x0, burn_in, count)?;
    let seed = crate::splitmix64(x0.to_bits() ^ PHASE_SALT);
    let out = phaseran::surrogate(&base, seed);
    check_series_range(MapId::Phaseran, &out)?;
    Ok(out)
}

fn require_state_len(map: MapId, init: &[f64]) -> Result<()> {
    if init.len() != map.state_len() {
        return Err(Error::InvalidConfig(format!(
            "{map} expects {} state components, got {}",
            map.state_len(),
            init.len()
        )));
    }
    Ok(())
}

/// Scalar sample series of length `count`. For planar maps and flows this is
/// the first coordinate.
pub fn generate_series(
    map: MapId,
    params: &GeneratorParams,
    init: &[f64],
    burn_in: usize,
    count: usize,
) -> Result<Vec<f64>> {
    require_state_len(map, init)?;
    match map {
        MapId::Logistic => {
            let a = params.logistic.a;
            scalar_series(map, |x| a * x * (1.0 - x), init[0], burn_in, count)
        }
        MapId::Quadratic => {
            let a = params.quadratic.a;
            scalar_series(map, |x| a - x * x, init[0], burn_in, count)
        }
        MapId::Henon | MapId::Ikeda => {
            Ok(planar_pairs(map, params, init, burn_in, count)?.iter().map(|p| p[0]).collect())
        }
        MapId::Lorenz | MapId::Rossler => {
            Ok(flow_pairs(map, params, init, burn_in, count)?.iter().map(|p| p[0]).collect())
        }
        MapId::MackeyGlass => delay_series(&params.mackey_glass, init[0], burn_in, count),
        MapId::Random => Ok(noise_series(init[0], burn_in, count)),
        MapId::Phaseran => surrogate_series(params, init[0], burn_in, count),
    }
}

fn planar_pairs(
    map: MapId,
    params: &GeneratorParams,
    init: &[f64],
    burn_in: usize,
    count: usize,
) -> Result<Vec<[f64; 2]>> {
    match map {
        MapId::Henon => {
            let HenonParams { a, b } = params.henon;
            planar_orbit(
                map,
                move |x, y| (1.0 - a * x * x + y, b * x),
                (init[0], init[1]),
                burn_in,
                count,
            )
        }
        MapId::Ikeda => {
            let u = params.ikeda.u;
            planar_orbit(
                map,
                move |x, y| {
                    let t = 0.4 - 6.0 / (1.0 + x * x + y * y);
                    let (st, ct) = t.sin_cos();
                    (1.0 + u * (x * ct - y * st), u * (x * st + y * ct))
                },
                (init[0], init[1]),
                burn_in,
                count,
            )
        }
        _ => unreachable!("planar_pairs called for {map}"),
    }
}

fn flow_pairs(
    map: MapId,
    params: &GeneratorParams,
    init: &[f64],
    burn_in: usize,
    count: usize,
) -> Result<Vec<[f64; 2]>> {
    let s0 = [init[0], init[1], init[2]];
    match map {
        MapId::Lorenz => {
            let p = params.lorenz;
            flow_orbit(map, move |s| flow::lorenz_deriv(&p, s), s0, p.dt, burn_in, count)
        }
        MapId::Rossler => {
            let p = params.rossler;
            flow_orbit(map, move |s| flow::rossler_deriv(&p, s), s0, p.dt, burn_in, count)
        }
        _ => unreachable!("flow_pairs called for {map}"),
    }
}

/// Planar point sequence of length `count`, the raw material for a GA
/// population. Scalar sources are paired split-half.
pub fn generate_pairs(
    map: MapId,
    params: &GeneratorParams,
    init: &[f64],
    burn_in: usize,
    count: usize,
) -> Result<Vec<[f64; 2]>> {
    require_state_len(map, init)?;
    match map {
        MapId::Henon | MapId::Ikeda => planar_pairs(map, params, init, burn_in, count),
        MapId::Lorenz | MapId::Rossler => flow_pairs(map, params, init, burn_in, count),
        MapId::Logistic | MapId::Quadratic | MapId::MackeyGlass | MapId::Random
        | MapId::Phaseran => {
            let series = generate_series(map, params, init, burn_in, 2 * count)?;
            Ok((0..count).map(|i| [series[i], series[count + i]]).collect())
        }
    }
}
