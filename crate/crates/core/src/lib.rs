//! Exact q-Ehrhart polynomials of order polytopes, their numerators and
//! Newton polygons, with brute-force cross-checks.

pub mod cli;
pub mod error;
pub mod linext;
pub mod newton;
pub mod poly;
pub mod poset;
pub mod qehrhart;

pub use error::{Error, Result};
pub use linext::{linear_extensions, LinExt};
pub use newton::{newton_polygon, shape_polygon, LatticePolygon, ShapeSpec};
pub use poset::{enumerate_posets, random_poset, Poset};
pub use qehrhart::{compute_qehrhart, QEhrhartResult};
