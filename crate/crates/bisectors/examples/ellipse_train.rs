//! The ellipse-train construction: a family with prescribed line/circle
//! occupancy and provably large bisector energy.
//!
//! Points sit mirrored on m/8 translated copies of the ellipse 4x² + y² = 1,
//! so no line carries m of them and no circle carries m of them, while every
//! mirror line x = 4j (and every midline between two ellipse copies) is the
//! bisector of many pairs. The energy therefore grows like m·n².
//!
//! Run with `cargo run --example ellipse_train`.

use bisectors::generators::{gen_ellipse_train, vertical_line_multiplicity};
use bisectors::geom::int;
use bisectors::stats::{stats_report, StatsOptions};

fn main() {
    let (n, m) = (64, 16);
    let train = gen_ellipse_train(n, m).unwrap();
    println!("ellipse train with n = {n} points on {} ellipses", m / 8);

    let report = stats_report(&train, &StatsOptions::default()).unwrap();
    println!("{report}");
    println!(
        "line/circle occupancy stays below m = {m}: max_collinear = {}, max_cocircular = {}",
        report.max_collinear,
        report.max_cocircular.unwrap()
    );

    // Multiplicity of the vertical lines x = 0, 2, 4, ...: mirror lines of
    // one ellipse pair up 8n/m points each, midlines between ellipse copies
    // collect one pair per point of each contributing copy.
    println!("\nmultiplicity of the vertical lines:");
    for v in 0..=(m / 8 - 1) * 4 {
        let mu = vertical_line_multiplicity(&train, &int(v as i64));
        if mu > 0 {
            println!("  mu(x = {v}) = {mu}");
        }
    }

    let mu0 = vertical_line_multiplicity(&train, &int(0));
    println!(
        "\nenergy {} ≥ mu(x=0)² = {} (the first mirror line alone)",
        report.energy,
        mu0 * mu0
    );
    println!(
        "energy / (m·n²) = {:.4}",
        report.energy as f64 / (m as f64 * (n * n) as f64)
    );

    // The divisibility preconditions are enforced.
    println!(
        "\ngen_ellipse_train(16, 12): {}",
        gen_ellipse_train(16, 12).unwrap_err()
    );
}
