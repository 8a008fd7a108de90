//! Flat-file views of a finished experiment: a success-rate table sorted by
//! mean entropy, a per-trial scatter, a binned entropy density per
//! generator, and the full report as JSON.

use super::Report;
use crate::chaos::MapId;
use crate::entropy::max_entropy;
use std::fmt::Write as _;
use std::path::Path;

/// Presentation order for the density profiles, from the stochastic
/// reference up to the flows.
const FIG_ORDER: [MapId; 9] = [
    MapId::Random,
    MapId::Quadratic,
    MapId::Henon,
    MapId::Logistic,
    MapId::Ikeda,
    MapId::Phaseran,
    MapId::Rossler,
    MapId::MackeyGlass,
    MapId::Lorenz,
];

fn fig_index(map: MapId) -> usize {
    FIG_ORDER.iter().position(|&m| m == map).expect("every generator has a slot") + 1
}

/// Success-rate table, one row per generator, sorted by ascending mean
/// entropy so the trend reads top to bottom.
pub fn performance_csv(report: &Report) -> String {
    let mut out = String::from("map");
    for f in &report.config.functions {
        let _ = write!(out, ",{f}");
    }
    out.push_str(",overall,mean_entropy\n");

    let mut order: Vec<usize> = (0..report.maps.len()).collect();
    order.sort_by(|&a, &b| {
        let (ma, mb) = (&report.maps[a], &report.maps[b]);
        ma.mean_entropy
            .partial_cmp(&mb.mean_entropy)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(ma.map.index().cmp(&mb.map.index()))
    });
    for i in order {
        let m = &report.maps[i];
        let _ = write!(out, "{}", m.map);
        for f in &m.functions {
            let _ = write!(out, ",{:.2}", f.success_rate);
        }
        let _ = writeln!(out, ",{:.2},{:.5}", m.overall, m.mean_entropy);
    }
    out
}

/// One row per trial: the entropy of the initial population against what
/// the search made of it.
pub fn density_csv(report: &Report) -> String {
    let mut out = String::from("map,function,trial,entropy,fitness,best_value\n");
    for &map in MapId::ALL.iter() {
        let Some(m) = report.maps.iter().find(|m| m.map == map) else { continue };
        for f in &m.functions {
            for r in &f.records {
                let _ = writeln!(
                    out,
                    "{},{},{},{:.5},{:.6},{:.6e}",
                    m.map, f.function, r.trial, r.entropy, r.best_fitness, r.best_value
                );
            }
        }
    }
    out
}

/// Entropy histogram per generator: 32 equal bins spanning zero to the
/// estimator maximum, densities normalised to sum to one per map.
pub fn contour_csv(report: &Report) -> String {
    const BINS: usize = 32;
    let top = max_entropy(&report.config.entropy);
    let width = top / BINS as f64;

    let mut out = String::from("map,map_index,bin,entropy_mid,density\n");
    let mut present: Vec<&super::MapSummary> = report.maps.iter().collect();
    present.sort_by_key(|m| fig_index(m.map));
    for m in present {
        let mut counts = [0usize; BINS];
        let mut total = 0usize;
        for f in &m.functions {
            for r in &f.records {
                let b = ((r.entropy / width).floor() as isize).clamp(0, BINS as isize - 1);
                counts[b as usize] += 1;
                total += 1;
            }
        }
        for (b, &c) in counts.iter().enumerate() {
            let mid = (b as f64 + 0.5) * width;
            let density = if total == 0 { 0.0 } else { c as f64 / total as f64 };
            let _ = writeln!(
                out,
                "{},{},{},{:.5},{:.12}",
                m.map,
                fig_index(m.map),
                b,
                mid,
                density
            );
        }
    }
    out
}

pub fn report_json(report: &Report) -> serde_json::Result<String> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    Ok(text)
}

/// Write all four artifacts into `dir`, creating it if needed.
pub fn export_all(report: &Report, dir: &Path) -> crate::Result<()> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("performance.csv"), performance_csv(report))?;
    std::fs::write(dir.join("density.csv"), density_csv(report))?;
    std::fs::write(dir.join("contour.csv"), contour_csv(report))?;
    let json = report_json(report)
        .map_err(|e| crate::Error::InvalidConfig(format!("report serialization: {e}")))?;
    std::fs::write(dir.join("report.json"), json)?;
    Ok(())
}
