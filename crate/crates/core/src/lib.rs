//! Exact combinatorics of all higher-order Voronoi diagrams of a planar
//! point set.
//!
//! Given `n` labeled sites in general position (no 3 collinear, no 4
//! cocircular), this crate computes, entirely in exact rational arithmetic:
//!
//! * the order of every site-triple circle and the c-vector ([`circles`]),
//! * nonemptiness of every region `V(A)` by exact halfplane feasibility,
//!   and with it the f-vector ([`regions`]),
//! * the e-vector by cutting each bisector at its circumcenters
//!   ([`bisectors`]),
//! * the census of unbounded regions by linear separability ([`unbounded`]),
//! * the inclusion poset of nonempty regions, its gradedness and lattice
//!   diagnostics, and its reduced Euler characteristic ([`poset`]),
//! * the full battery of exact identities tying all of the above together,
//!   each count cross-checked between two independent computation paths
//!   ([`census`]).
//!
//! The geometric kernel is generic over any exact totally ordered field via
//! [`Scalar`]; the aliases below fix the concrete choice used throughout the
//! tooling: arbitrary-precision rationals.

pub mod bisectors;
pub mod census;
pub mod circles;
pub mod geom;
pub mod instances;
pub mod io;
pub mod labels;
pub mod poset;
pub mod regions;
pub mod report;
pub mod scalar;
pub mod unbounded;

pub use geom::{Circle, Point, Sign, SiteSet};
pub use labels::LabelSet;
pub use scalar::Scalar;

/// The scalar used by the CLI and the generators: exact big rationals.
pub type Rat = num_rational::BigRational;

/// A point with rational coordinates.
pub type RatPoint = Point<Rat>;

/// A site set with rational coordinates.
pub type RatSiteSet = SiteSet<Rat>;

/// A circle with rational center and squared radius.
pub type RatCircle = Circle<Rat>;
