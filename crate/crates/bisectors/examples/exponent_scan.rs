//! Size sweep over the ellipse train with log-log slope fitting.
//!
//! At fixed m the energy of the train grows like n², so the fitted slope of
//! log(energy) against log(n) lands near 2, and the ratio energy/(m·n²)
//! stays within a narrow band across sizes. The ratio against
//! m^(2/5)·n^(12/5) decays, consistent with that regime being an upper
//! bound, not the growth law of this family.
//!
//! Run with `cargo run --example exponent_scan` (about half a minute).

use bisectors::scan::{fit_summaries, rows_to_csv, run_scan, ScanConfig, ScanFamily};

fn main() {
    let config = ScanConfig {
        family: ScanFamily::EllipseTrain { m: 16 },
        sizes: vec![64, 128, 256, 512],
        skip_cocircular: true,
    };
    let rows = run_scan(&config).unwrap();
    print!("{}", rows_to_csv(&rows));

    println!();
    for row in &rows {
        println!(
            "n = {:>4}: energy/(m·n²) = {:.4}, energy/(m^0.4·n^2.4) = {:.4}",
            row.n, row.ratio_lower, row.ratio_upper
        );
    }

    println!();
    for fit in fit_summaries(&rows) {
        println!(
            "fit for family={} m={}: slope {:.4} over {} sizes",
            fit.family, fit.m, fit.slope, fit.sizes
        );
    }
}
