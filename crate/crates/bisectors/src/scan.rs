//! Size sweeps over generated families with ratio and exponent reporting.
//!
//! A scan generates one family instance per requested size, computes the
//! full statistics report for each, and emits CSV rows plus fitted log-log
//! slopes of energy against n per fixed-M family. The slope fit is the one
//! place in the crate where floating point is used; every other column is
//! exact.

use thiserror::Error;

use crate::generators::{GenError, GeneratorSpec};
use crate::stats::{stats_report, StatsError, StatsOptions};

#[derive(Debug, Error)]
pub enum ScanError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Stats(#[from] StatsError),
}

/// Which family a scan sweeps, with the parameters that stay fixed across
/// sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanFamily {
    /// Grid sizes are the side length k (n = k²).
    Grid,
    Line,
    RationalCircle,
    /// Fixed M; sizes are the point counts n.
    EllipseTrain { m: u32 },
    /// Fixed seed and coordinate range; sizes are the point counts n.
    Random { range: i64, seed: u64 },
}

impl ScanFamily {
    fn spec(&self, size: u32) -> GeneratorSpec {
        match *self {
            ScanFamily::Grid => GeneratorSpec::Grid { k: size },
            ScanFamily::Line => GeneratorSpec::Line { n: size },
            ScanFamily::RationalCircle => GeneratorSpec::RationalCircle { n: size },
            ScanFamily::EllipseTrain { m } => GeneratorSpec::EllipseTrain { n: size, m },
            ScanFamily::Random { range, seed } => GeneratorSpec::Random {
                n: size,
                range,
                seed,
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub family: ScanFamily,
    pub sizes: Vec<u32>,
    /// Skip the cubic-time cocircularity maximum in every row.
    pub skip_cocircular: bool,
}

/// One row of the scan table. `m` is the ellipse-train parameter when the
/// family has one, and the measured maximum of points on a line or circle
/// otherwise. The two ratio columns divide the energy by M·n² and by
/// M^(2/5)·n^(12/5) respectively.
#[derive(Clone, Debug)]
pub struct ScanRow {
    pub family: String,
    pub n: u64,
    pub m: u64,
    pub energy: u64,
    pub distinct_bisectors: u64,
    pub distinct_distances: u64,
    pub max_collinear: u64,
    pub max_cocircular: Option<u64>,
    pub isoceles_triples: u64,
    pub sum_m_squared: u64,
    pub ratio_lower: f64,
    pub ratio_upper: f64,
}

/// Fitted log-log slope of energy against n for one fixed-M family. Only
/// produced when the family was scanned at four or more sizes.
#[derive(Clone, Debug)]
pub struct FitSummary {
    pub family: String,
    pub m: u64,
    pub slope: f64,
    pub sizes: usize,
}

pub fn run_scan(config: &ScanConfig) -> Result<Vec<ScanRow>, ScanError> {
    let opts = StatsOptions {
        skip_cocircular: config.skip_cocircular,
        rich_line_thresholds: Vec::new(),
    };
    let mut rows = Vec::with_capacity(config.sizes.len());
    for &size in &config.sizes {
        let spec = config.family.spec(size);
        let set = spec.generate()?;
        let stats = stats_report(&set, &opts)?;
        let m = match config.family {
            ScanFamily::EllipseTrain { m } => m as u64,
            _ => stats.max_on_line_or_circle(),
        };
        let n = stats.n;
        let energy = stats.energy;
        debug_assert!(
            (energy as u128) * (stats.distinct_bisectors as u128)
                >= ((n * (n - 1)) as u128).pow(2)
        );
        let nf = n as f64;
        let mf = m as f64;
        let ef = energy as f64;
        rows.push(ScanRow {
            family: spec.family_name().to_string(),
            n,
            m,
            energy,
            distinct_bisectors: stats.distinct_bisectors,
            distinct_distances: stats.distinct_distances,
            max_collinear: stats.max_collinear,
            max_cocircular: stats.max_cocircular,
            isoceles_triples: stats.isoceles_triples,
            sum_m_squared: stats.sum_m_squared,
            ratio_lower: ef / (mf * nf * nf),
            ratio_upper: ef / (mf.powf(0.4) * nf.powf(2.4)),
        });
    }
    rows.sort_by(|a, b| (&a.family, a.m, a.n).cmp(&(&b.family, b.m, b.n)));
    Ok(rows)
}

/// Least-squares slope of ln(energy) against ln(n), per (family, m) group
/// with at least four sizes.
pub fn fit_summaries(rows: &[ScanRow]) -> Vec<FitSummary> {
    let mut fits = Vec::new();
    let mut i = 0;
    while i < rows.len() {
        let mut j = i;
        while j < rows.len() && rows[j].family == rows[i].family && rows[j].m == rows[i].m {
            j += 1;
        }
        let group = &rows[i..j];
        if group.len() >= 4 {
            let xs: Vec<f64> = group.iter().map(|r| (r.n as f64).ln()).collect();
            let ys: Vec<f64> = group.iter().map(|r| (r.energy as f64).ln()).collect();
            fits.push(FitSummary {
                family: group[0].family.clone(),
                m: group[0].m,
                slope: least_squares_slope(&xs, &ys),
                sizes: group.len(),
            });
        }
        i = j;
    }
    fits
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

pub const CSV_HEADER: &str = "family,n,m,energy,distinct_bisectors,distinct_distances,\
max_collinear,max_cocircular,isoceles_triples,sum_m_squared,ratio_lower,ratio_upper";

/// Renders rows as CSV, sorted by (family, m, n); a skipped cocircularity
/// column is left empty.
pub fn rows_to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let cocircular = r
            .max_cocircular
            .map(|v| v.to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.family,
            r.n,
            r.m,
            r.energy,
            r.distinct_bisectors,
            r.distinct_distances,
            r.max_collinear,
            cocircular,
            r.isoceles_triples,
            r.sum_m_squared,
            r.ratio_lower,
            r.ratio_upper,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_rows_match_direct_stats() {
        let config = ScanConfig {
            family: ScanFamily::EllipseTrain { m: 8 },
            sizes: vec![16, 32],
            skip_cocircular: false,
        };
        let rows = run_scan(&config).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].n, 16);
        assert_eq!(rows[0].m, 8);
        let direct = stats_report(
            &crate::generators::gen_ellipse_train(16, 8).unwrap(),
            &StatsOptions::default(),
        )
        .unwrap();
        assert_eq!(rows[0].energy, direct.energy);
        assert_eq!(rows[0].distinct_bisectors, direct.distinct_bisectors);
        assert_eq!(rows[0].max_cocircular, direct.max_cocircular);
    }

    #[test]
    fn slope_of_exact_square_law_is_two() {
        let xs: Vec<f64> = [10.0f64, 20.0, 40.0, 80.0].iter().map(|x| x.ln()).collect();
        let ys: Vec<f64> = [10.0f64, 20.0, 40.0, 80.0]
            .iter()
            .map(|x| (x * x).ln())
            .collect();
        assert!((least_squares_slope(&xs, &ys) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn fits_need_four_sizes() {
        let config = ScanConfig {
            family: ScanFamily::Line,
            sizes: vec![4, 8, 16],
            skip_cocircular: true,
        };
        let rows = run_scan(&config).unwrap();
        assert!(fit_summaries(&rows).is_empty());
    }

    #[test]
    fn csv_has_header_and_rows() {
        let config = ScanConfig {
            family: ScanFamily::Line,
            sizes: vec![4, 5],
            skip_cocircular: true,
        };
        let rows = run_scan(&config).unwrap();
        let csv = rows_to_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("family,n,m,"));
        // Cocircularity was skipped: the column is empty.
        assert!(lines[1].contains(",,"));
    }
}
