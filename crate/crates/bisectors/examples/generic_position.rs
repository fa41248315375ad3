//! Genericity by exact rotation.
//!
//! Several arguments about bisectors assume that no two points share an x-
//! or y-coordinate. `ensure_generic` realizes that assumption exactly: it
//! applies the rational rotation step until the certificate holds. Rotations
//! are isometries, so every statistic survives unchanged.
//!
//! Run with `cargo run --example generic_position`.

use bisectors::generators::{ensure_generic, gen_grid};
use bisectors::stats::{stats_report, StatsOptions};

fn main() {
    let grid = gen_grid(3);
    println!(
        "3x3 grid is generic: {} (rows and columns share coordinates)",
        grid.is_generic()
    );

    let rotated = ensure_generic(&grid);
    println!("after rotation: generic = {}", rotated.is_generic());
    println!("first three rotated points:");
    for p in rotated.iter().take(3) {
        println!("  {p}");
    }

    let opts = StatsOptions::default();
    let before = stats_report(&grid, &opts).unwrap();
    let after = stats_report(&rotated, &opts).unwrap();
    assert_eq!(before, after);
    println!("\nstatistics agree field for field:\n{after}");
}
