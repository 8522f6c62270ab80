//! Deciding spherical two-distance sets on `d+2` points from graph spectra.
//!
//! A set of points in `R^d` with exactly two pairwise distances is encoded by
//! its associated graph: vertices are points, edges join pairs at the longer
//! distance. For the minimal interesting size, `d+2` points in `R^d`, whether
//! such a set exists on a sphere is decided entirely by the adjacency spectrum
//! and the spectrum of its projection away from the all-ones vector.
//!
//! The crate provides:
//! - [`graph`]: bitset graphs, structural predicates, random sampling;
//!   [`graph6`]: the graph6 wire format; [`canon`]: canonical forms and
//!   isomorph-free enumeration.
//! - [`eigen`]: a deterministic Jacobi eigensolver with tolerance-grouped
//!   spectra.
//! - [`spherical`]: the sphericality test, distance ratio, minimum embedding
//!   dimension, and the condition-system oracle.
//! - [`exact`]: tolerance-free re-decision over the integers (characteristic
//!   polynomials, Sturm sequences) for borderline cases and certification.
//! - [`realize`]: explicit coordinates for spherical graphs, with circumcenter
//!   recovery.
//! - [`census`]: counts of spherical isomorphism classes by minimum dimension.
//! - [`montecarlo`]: seeded estimates of the fraction of random graphs that
//!   are spherical.

pub mod canon;
pub mod census;
pub mod eigen;
pub mod exact;
pub mod graph;
pub mod graph6;
pub mod montecarlo;
pub mod realize;
pub mod spherical;

pub use graph::Graph;
pub use graph6::{parse_graph6, serialize_graph6};
pub use spherical::{test_spherical, SphericalReport};
