//! The bisector multiplicity spectrum and the bisector energy.
//!
//! Every ordered pair of distinct points spans a bisector; μ(ℓ) counts the
//! ordered pairs spanning ℓ and the energy is Σ μ(ℓ)². This example prints
//! the full spectrum of the 4-point square, checks the energy against the
//! naive quadruple-counting oracle, and shows the Cauchy–Schwarz relation
//! between energy and the number of distinct bisectors.
//!
//! Run with `cargo run --example spectrum_and_energy`.

use bisectors::oracles::brute_energy;
use bisectors::pointset::PointSet;
use bisectors::stats::{bisector_spectrum, distance_spectrum};
use bisectors::Point;

fn main() {
    let square = PointSet::new(vec![
        Point::from_ints(1, 0),
        Point::from_ints(0, 1),
        Point::from_ints(-1, 0),
        Point::from_ints(0, -1),
    ])
    .unwrap();

    let spectrum = bisector_spectrum(&square).unwrap();
    println!("bisector spectrum of the square:");
    let mut rows: Vec<_> = spectrum.iter().collect();
    rows.sort_by_key(|(line, _)| (*line).clone());
    for (line, mu) in rows {
        println!("  mu = {mu}   {line}");
    }
    let n = spectrum.n();
    println!("sum of multiplicities: {} = n(n-1)", spectrum.total());
    println!(
        "energy = {}  (brute-force quadruple count: {})",
        spectrum.energy(),
        brute_energy(&square).unwrap()
    );

    // energy · |B| ≥ (n(n−1))², by Cauchy–Schwarz over the spectrum.
    let lhs = spectrum.energy() as u128 * spectrum.distinct_count() as u128;
    let rhs = (n as u128 * (n as u128 - 1)).pow(2);
    println!("Cauchy-Schwarz: {lhs} ≥ {rhs}");

    let distances = distance_spectrum(&square).unwrap();
    println!("\ndistance spectrum (squared distance: ordered pairs):");
    let mut drows: Vec<_> = distances.iter().collect();
    drows.sort_by_key(|(d, _)| (*d).clone());
    for (d2, m) in drows {
        println!("  {d2}: {m}");
    }
    println!(
        "distinct distances D = {}, sum of m² = {}",
        distances.distinct_count(),
        distances.sum_m_squared()
    );
}
