//! The aggregate statistics report over the generated families, with the
//! collinearity/cocircularity maxima and the isoceles/incidence identity.
//!
//! Run with `cargo run --example full_report`.

use bisectors::generators::{gen_grid, gen_line, gen_random, gen_rational_circle};
use bisectors::report::HarnessReport;
use bisectors::stats::{stats_report, StatsOptions};

fn main() {
    let opts = StatsOptions {
        skip_cocircular: false,
        rich_line_thresholds: vec![3],
    };

    for (name, set) in [
        ("3x3 grid", gen_grid(3)),
        ("8 collinear points", gen_line(8)),
        ("10 rational points on the unit circle", gen_rational_circle(10)),
        ("20 random points, seed 7", gen_random(20, 100, 7).unwrap()),
    ] {
        let report = stats_report(&set, &opts).unwrap();
        println!("== {name}");
        println!("{report}");
        // The incidence count over the spectrum always equals the isoceles
        // triple count; the report carries both routes.
        assert_eq!(report.isoceles_triples, report.incidence_mult);
        println!();
    }

    // The same report serializes to the JSON wire format used by the CLI.
    let grid = gen_grid(3);
    let json = HarnessReport::stats_only(stats_report(&grid, &opts).unwrap()).to_json();
    println!("JSON report of the grid:\n{json}");
}
