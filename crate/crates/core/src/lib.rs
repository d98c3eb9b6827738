//! Exact lattice geometry of rational polygons and the toric bounds built on it.
//!
//! * [`geometry`]: rationals, canonical polygons, Minkowski sums, supports.
//! * [`width`]: certified lattice width with an exhaustive oracle.
//! * [`equivalence`]: recognising unimodular images of `t·P₀`.
//! * [`toric`]: normal fans, Delzant check, intersection numbers.
//! * [`bounds`]: Seshadri/Gromov-width reports and the `Q_k` family.
//!
//! All arithmetic is exact; floats only appear in SVG output and in decimal
//! approximations that are explicitly marked.

pub mod bounds;
pub mod cli;
pub mod equivalence;
pub mod error;
pub mod family;
pub mod geometry;
pub mod json;
pub mod svg;
pub mod toric;
pub mod width;

pub use bounds::{bounds_report, qk, ratio_table, volume_gap_check, BoundsReport, QkInstance};
pub use equivalence::{equiv_scaled_p0, random_unimodular, EquivalenceWitness};
pub use error::{Error, Result};
pub use family::{p0, q0};
pub use geometry::{canonicalize, DualVector, Point, Polygon, Rational, UnimodularAffineMap};
pub use toric::{degree, delzant_check, mixed_degree, normal_fan, projection_degree, qk_seshadri_chain};
pub use width::{lattice_width, search_bound, width_oracle, WidthCertificate};
