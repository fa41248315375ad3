//! Exact statistics of perpendicular bisectors of planar point sets.
//!
//! Everything is computed over arbitrary-precision rationals: lines and
//! circles are reduced to unique integer-coefficient canonical forms, so
//! equality, hashing, and therefore all the counting statistics — bisector
//! energy and multiplicity spectrum, distinct bisectors and distances,
//! isoceles triples, incidence counts, collinearity and cocircularity maxima
//! — are exact, with no floating point and no epsilons.
//!
//! The crate also ships:
//!
//! - generators for the benchmark families (grids, collinear sets, rational
//!   cocircular sets, the mirrored ellipse-train construction, seeded random
//!   sets) in [`generators`];
//! - structural audit passes over the bisector surfaces in R⁴ in [`surface`];
//! - deliberately naive brute-force oracles for differential testing in
//!   [`oracles`];
//! - a text file format and JSON/CSV reporting in [`io`], [`report`] and
//!   [`scan`].
//!
//! Start with the crate's `examples/` directory — each file is a runnable
//! tour of one capability. The same functionality is scriptable through the
//! `bisectors` binary (`gen`, `stats`, `audit`, `scan`).

pub mod generators;
pub mod geom;
pub mod io;
pub mod oracles;
pub mod pointset;
pub mod report;
pub mod scan;
pub mod stats;
pub mod surface;

pub use geom::{
    bisector, circumcircle, dist2, invert, CanonicalCircle, CanonicalLine, GeomError, Point,
    Rational, RigidMap, SlopeIntercept,
};
pub use pointset::{PointSet, PointSetError};
pub use stats::{stats_report, StatsError, StatsOptions, StatsReport};
