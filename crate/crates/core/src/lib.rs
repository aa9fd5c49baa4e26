//! Constructions of 4-centre ovals and encompassing circles.
//!
//! A 4-centre oval is a smooth, convex, closed curve made of four circular
//! arcs, symmetric about two perpendicular axes; its arc centres form a
//! rhombus, and smoothness at each arc junction is equivalent to the two
//! arc centres and the junction being collinear (Euclid III.11).
//!
//! The crate provides:
//! - a small exact-formula 2D kernel ([`geom`]),
//! - the validated oval data model ([`oval`]),
//! - the classical construction procedures ([`construct`]): ovals B1 and B2,
//!   four encompassing-circle cases, the major-axis/radii oval family, and
//!   the Serlio/Clavius comparison ovals,
//! - deterministic SVG rendering ([`render`]) and JSON serialization ([`json`]).

pub mod construct;
pub mod error;
pub mod geom;
pub mod json;
pub mod oval;
pub mod render;
pub mod trace;

pub use error::Error;
pub use geom::{CircleSpec, LineSpec, Point, Tolerance, Vec2};
pub use oval::{ArcSpec, AxisDirection, FourCentreOval, OvalReport, Violation};
pub use trace::{ConstructionTrace, TraceGeometry, TraceKind, TraceStep};
