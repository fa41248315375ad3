//! The bisector-surface machinery in R⁴ and its audit passes.
//!
//! A surface anchor (a, c) collects the pairs (b, d) with
//! bi(a, b) = bi(c, d). Membership implies that two explicit polynomials
//! vanish, that |ac| = |bd|, and that two surfaces over the same anchor
//! distance intersect inside two concentric circles or two parallel lines.
//! The audits check all of that exhaustively on small sets.
//!
//! Run with `cargo run --example surface_audits`.

use bisectors::generators::{gen_ellipse_train, gen_random};
use bisectors::pointset::PointSet;
use bisectors::surface::{
    fg_eval, intersection_curves, k2m_audit, lemma32_audit, quadruple_invariant_audit,
    surface_member, CurvePair, PairPoint, SurfaceAnchor, BICLIQUE_AUDIT_CAP, CURVE_AUDIT_CAP,
    QUADRUPLE_AUDIT_CAP,
};
use bisectors::Point;

fn main() {
    // Membership and the defining polynomials.
    let anchor = SurfaceAnchor::new(Point::from_ints(1, 0), Point::from_ints(2, 0)).unwrap();
    let member = PairPoint::new(Point::from_ints(0, 1), Point::from_ints(0, 2));
    println!(
        "(b, d) = ((0,1), (0,2)) on the surface of (a, c) = ((1,0), (2,0)): {}",
        surface_member(&anchor, &member)
    );
    println!("  f, g evaluate to {:?}", fg_eval(&anchor, &member));
    let outsider = PairPoint::new(Point::from_ints(0, 1), Point::from_ints(5, 5));
    println!(
        "(b, d) = ((0,1), (5,5)): member = {}, (f, g) = {:?}",
        surface_member(&anchor, &outsider),
        fg_eval(&anchor, &outsider)
    );

    // Intersection curves in all productive shapes.
    println!("\nintersection-curve classification:");
    for (label, a, c, a2, c2) in [
        ("translation setup", (0, 0), (0, 1), (1, 0), (1, 1)),
        ("rotation setup", (1, 0), (0, 1), (0, -1), (1, 0)),
        ("shared anchor", (0, 0), (1, 0), (0, 0), (0, 1)),
    ] {
        let curves = intersection_curves(
            &Point::from_ints(a.0, a.1),
            &Point::from_ints(c.0, c.1),
            &Point::from_ints(a2.0, a2.1),
            &Point::from_ints(c2.0, c2.1),
        )
        .unwrap();
        match curves {
            CurvePair::ConcentricCircles { center, c1, c2 } => {
                println!("  {label}: concentric circles about {center}: {c1} and {c2}")
            }
            CurvePair::ParallelLines { l1, l2 } => {
                println!("  {label}: parallel lines {l1} and {l2}")
            }
            CurvePair::EmptyIntersection => println!("  {label}: empty intersection"),
            CurvePair::Degenerate => println!("  {label}: degenerate (distance check only)"),
        }
    }

    // Exhaustive audits over a square, a random set, and an ellipse train.
    let square = PointSet::new(vec![
        Point::from_ints(1, 0),
        Point::from_ints(0, 1),
        Point::from_ints(-1, 0),
        Point::from_ints(0, -1),
    ])
    .unwrap();
    let sets = [
        ("square", square),
        ("12 random points", gen_random(12, 50, 5).unwrap()),
        ("ellipse-train(16, 8)", gen_ellipse_train(16, 8).unwrap()),
    ];
    println!("\naudit passes (zero violations expected):");
    for (name, set) in &sets {
        let curves = lemma32_audit(set, CURVE_AUDIT_CAP).unwrap();
        let quads = quadruple_invariant_audit(set, QUADRUPLE_AUDIT_CAP).unwrap();
        let maxima = k2m_audit(set, BICLIQUE_AUDIT_CAP).unwrap();
        println!(
            "  {name}: lemma32 {} (checked {}, degenerate {}), quadruple {} (checked {}), \
             biclique maxima ({}, {})",
            if curves.passed() { "ok" } else { "FAILED" },
            curves.checked,
            curves.skipped_degenerate,
            if quads.passed() { "ok" } else { "FAILED" },
            quads.checked,
            maxima.surface_pair_common_points,
            maxima.point_pair_common_surfaces,
        );
    }
}
