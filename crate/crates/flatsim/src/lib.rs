//! Flat-surface simulator: explicit translation surfaces from polygon
//! gluings, random sampling in a stratum via zippered rectangles,
//! exhaustive saddle-connection and cylinder enumeration up to a length
//! bound, and empirical Siegel-Veech estimates.
//!
//! Geometry is 64-bit floating point with a single configurable tolerance;
//! the exact arithmetic lives in the `strata` crate.

pub mod cylinders;
pub mod error;
pub mod geom;
pub mod report;
pub mod sample;
pub mod search;
pub mod surface;

pub use cylinders::{cylinders_up_to, Cylinder};
pub use error::{Error, Result};
pub use geom::Vec2;
pub use report::{count_on_surface, empirical_constant, CountReport, CountingClass};
pub use sample::{sample_surface, stratum_of_permutation, IrreduciblePermutation};
pub use search::{holonomy_multiplicity_groups, saddle_connections_up_to, SaddleConnectionRecord};
pub use surface::{
    build_from_polygons, four_square_surface, origami, parse_polygon_spec, regular_octagon,
    square_torus, torus_two_marked, PolygonSpec, TranslationSurface,
};
