//! Tour of the exact geometric primitives: perpendicular bisectors in
//! canonical form, reflections, rational rotations, circumcircles and
//! inversion — all over arbitrary-precision rationals.
//!
//! Run with `cargo run --example exact_primitives`.

use bisectors::geom::{
    bisector, circumcircle, dist2, invert, rat, Point, RigidMap, SlopeIntercept,
};

fn main() {
    let a = Point::from_ints(0, 0);
    let b = Point::from_ints(2, 2);

    let line = bisector(&a, &b).unwrap();
    println!("bisector of {a} and {b}: {line}");
    match line.slope_intercept() {
        SlopeIntercept::Sloped { slope, intercept } => {
            println!("  slope-intercept view: y = {slope}x + {intercept}")
        }
        SlopeIntercept::Vertical { x } => println!("  vertical: x = {x}"),
    }
    println!(
        "  bisector(a, b) == bisector(b, a): {}",
        line == bisector(&b, &a).unwrap()
    );

    // The reflection across the bisector swaps the two points and is an
    // exact involution.
    let refl = RigidMap::reflection(&a, &b).unwrap();
    let p = Point::new(rat(1, 3), rat(-7, 5));
    println!("reflection sends {a} to {}", refl.apply(&a));
    println!("applying it twice to {p} gives {}", refl.apply(&refl.apply(&p)));
    println!(
        "  orthogonal: {}, det = {}",
        refl.is_orthogonal(),
        refl.det()
    );

    // A rational rotation: the Pythagorean angle with cosine 3/5. Rotating
    // never leaves the rational plane, and squared distances are preserved
    // exactly.
    let rot = RigidMap::rational_rotation(1);
    let q = Point::from_ints(5, 0);
    println!("one rotation step sends {q} to {}", rot.apply(&q));
    println!(
        "  dist² from origin before/after: {} / {}",
        dist2(&q, &a),
        dist2(&rot.apply(&q), &a)
    );

    // Circumcircles come back in canonical integer form.
    let c = circumcircle(
        &Point::from_ints(0, 0),
        &Point::from_ints(2, 0),
        &Point::from_ints(0, 2),
    )
    .unwrap();
    println!("circumcircle of (0,0), (2,0), (0,2): {c}");
    println!("  center {}, radius² = {}", c.center(), c.radius2());

    // Inversion in the unit circle about a center: circles through the
    // center become lines, and the map is an involution.
    let center = Point::from_ints(0, 0);
    let r = Point::from_ints(1, 1);
    let image = invert(&center, &r).unwrap();
    println!("inversion about {center} sends {r} to {image}");
    println!("  and back: {}", invert(&center, &image).unwrap());

    // Degenerate inputs are errors, not silent garbage.
    println!(
        "bisector of equal points: {:?}",
        bisector(&a, &a).unwrap_err()
    );
}
