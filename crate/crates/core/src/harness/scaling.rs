use std::fmt;

use rayon::prelude::*;

use crate::cert::Scheme;
use crate::generators;
use crate::graph::Graph;
use crate::provers::{self, ProveError};
use crate::stream::{make_stream, OrderSpec};
use crate::verdict::Verdict;
use crate::verifiers::{self, space_bound};

/// Graph families used for scaling runs; `n` always counts nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    PerfectMatching,
    Star,
    Path,
    Cycle,
}

impl Family {
    pub fn generate(self, n: usize) -> Graph {
        match self {
            Family::PerfectMatching => generators::perfect_matching(n),
            Family::Star => generators::star(n.saturating_sub(1)),
            Family::Path => generators::path(n),
            Family::Cycle => generators::cycle(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::PerfectMatching => "perfect_matching",
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
        }
    }
}

/// The legal family and threshold used to measure each scheme.
pub fn scaling_setup(scheme: Scheme) -> (Family, fn(usize) -> usize) {
    match scheme {
        Scheme::MmAtLeastList | Scheme::MmAtLeastColoring | Scheme::EqMatching => (Family::PerfectMatching, |n| n / 2),
        Scheme::MmAtMost | Scheme::VcAtMost => (Family::Star, |_| 1),
        Scheme::IsAtLeast => (Family::Star, |n| n - 1),
        Scheme::CliqueAtLeast => (Family::Star, |_| 2),
        Scheme::DegAtMost => (Family::Path, |_| 1),
        Scheme::DegAtLeast | Scheme::EqDegeneracy => (Family::Cycle, |_| 2),
        Scheme::DiamAtLeast => (Family::Path, |n| n - 1),
        Scheme::ColoringAtMost => (Family::Cycle, |_| 2),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScalingRow {
    pub n: usize,
    pub k: usize,
    pub peak_state_bits: u64,
    pub certificate_bits: u64,
    pub bound: u64,
    pub verdict: Verdict,
}

impl fmt::Display for ScalingRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} k={} peak_state_bits={} certificate_bits={} bound={} verdict={}",
            self.n, self.k, self.peak_state_bits, self.certificate_bits, self.bound, self.verdict
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingTable {
    pub scheme: Scheme,
    pub family: Family,
    pub rows: Vec<ScalingRow>,
}

/// Least-squares slope of `ln y` against `ln x`.
fn log_log_slope(points: impl Iterator<Item = (f64, f64)>) -> f64 {
    let pts: Vec<(f64, f64)> = points.filter(|&(x, y)| x > 0.0 && y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    let m = pts.len() as f64;
    if pts.len() < 2 {
        return 0.0;
    }
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let num: f64 = pts.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = pts.iter().map(|&(x, _)| (x - mx).powi(2)).sum();
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

impl ScalingTable {
    pub fn peak_slope(&self) -> f64 {
        log_log_slope(self.rows.iter().map(|r| (r.n as f64, r.peak_state_bits as f64)))
    }

    pub fn certificate_slope(&self) -> f64 {
        log_log_slope(self.rows.iter().map(|r| (r.n as f64, r.certificate_bits as f64)))
    }

    pub fn within_bounds(&self) -> bool {
        self.rows.iter().all(|r| r.verdict.is_accept() && r.peak_state_bits <= r.bound)
    }
}

impl fmt::Display for ScalingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scheme={} family={}", self.scheme, self.family.name())?;
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        write!(f, "slope peak_state_bits={:.3} certificate_bits={:.3}", self.peak_slope(), self.certificate_slope())
    }
}

/// Proves and verifies one legal instance per size and records the measured
/// space next to the closed-form bound.
pub fn run_space_scaling(
    scheme: Scheme,
    family: Family,
    threshold: impl Fn(usize) -> usize + Sync,
    sizes: &[usize],
) -> Result<ScalingTable, ProveError> {
    let rows = sizes
        .par_iter()
        .map(|&n| {
            let g = family.generate(n);
            let k = threshold(n);
            let cert = provers::prove(scheme, &g, k)?;
            let (verdict, report) = verifiers::run(scheme, n, cert.as_ref(), &make_stream(&g, k, OrderSpec::Shuffled(n as u64)));
            Ok(ScalingRow {
                n,
                k,
                peak_state_bits: report.peak_state_bits,
                certificate_bits: report.certificate_bits,
                bound: space_bound(scheme, n, k),
                verdict,
            })
        })
        .collect::<Result<Vec<_>, ProveError>>()?;
    Ok(ScalingTable { scheme, family, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_laws() {
        let lin = log_log_slope((1..6).map(|i| (2f64.powi(i), 3.0 * 2f64.powi(i))));
        assert!((lin - 1.0).abs() < 1e-9);
        let flat = log_log_slope((1..6).map(|i| (2f64.powi(i), 7.0)));
        assert!(flat.abs() < 1e-9);
    }

    #[test]
    fn small_sizes_stay_in_bounds() {
        for scheme in Scheme::ALL {
            let (family, k) = scaling_setup(scheme);
            let t = run_space_scaling(scheme, family, k, &[16, 32, 64]).unwrap();
            assert!(t.within_bounds(), "{t}");
        }
    }

    #[test]
    fn diam_is_logarithmic() {
        let t = run_space_scaling(Scheme::DiamAtLeast, Family::Path, |n| n - 1, &[256, 1024, 4096]).unwrap();
        assert!(t.within_bounds());
        assert!(t.peak_slope() < 0.2, "{t}");
        assert!(t.certificate_slope() > 1.0);
    }
}
