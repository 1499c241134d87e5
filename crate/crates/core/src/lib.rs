//! Egocentric interpretation of traffic-sign units for driving-plan assessment.
//!
//! The library has four layers, each usable on its own:
//!
//! - [`geometry`] — fits lane/road boundary lines in image space, splits them
//!   into left/current/right regions around the egocentric vehicle, and
//!   assigns sign boxes to regions by midpoint distance at two-thirds image
//!   height.
//! - [`grammar`] — a frozen template language for structured sign
//!   descriptions (directions, destinations, vehicle-class restrictions,
//!   speed bands, dimension limits, distance keeping), with bit-exact
//!   serialization, a total parser, validation, and canonicalization.
//! - [`arrangement`] + [`metrics`] — permutation-invariant matching over the
//!   clause/keyword re-arrangements of a description, plus the deterministic
//!   BLEU-n / ROUGE-L text metrics used for scoring.
//! - [`plan`], [`datagen`], [`eval`] — the traffic-guidance rule engine that
//!   picks one option per question (road, lane, speed, other), a seeded
//!   generator for labeled samples, and the accuracy/metric report harness.
//!
//! Geometric math is generic over the scalar type through [`scalar::Real`];
//! the aliases below pin `f64` for everything that crosses a file format.

pub mod arrangement;
pub mod datagen;
pub mod eval;
pub mod geometry;
pub mod grammar;
pub mod metrics;
pub mod plan;
pub mod scalar;

/// Version tag written into every file the library emits. Bump when any
/// template string or file schema changes.
pub const GRAMMAR_VERSION: &str = "1.0.0";

/// Concrete scalar used by all file formats and the CLI.
pub type Pixel = f64;

pub type Point = geometry::Point2D<Pixel>;
pub type Line = geometry::BoundaryLine<Pixel>;
pub type Scene = geometry::SceneGeometry<Pixel>;
pub type Layout = geometry::EgoLayout<Pixel>;
