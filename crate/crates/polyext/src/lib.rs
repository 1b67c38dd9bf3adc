//! Exact-arithmetic toolkit for polytope extensions.
//!
//! A polytope `Q` is an extension of a polytope `P` when the orthogonal
//! projection of `Q` onto the first `dim(P)` coordinates equals `P`; vertices
//! of `Q` that do not land on vertices of `P` are hidden. This crate builds
//! the small extensions where hidden vertices provably matter — heptagon
//! lift-and-cut extensions, cross-polytope simplex extensions, hexagon
//! prisms, and prism products — and verifies or refutes claimed certificates
//! with no floating point anywhere.
//!
//! Everything is immutable and pure; all operations are safe to call
//! concurrently.

pub mod extensions;
pub mod heptagon;
pub mod kernel;
pub mod polytope;
pub mod products;

pub use kernel::{QPoint, Rational};
pub use polytope::{HPolytope, VPolytope};
