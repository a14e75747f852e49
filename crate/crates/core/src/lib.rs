//! Point-hyperplane geometry of `SL(n+1, K)`, its adjoint embedding, the
//! relatively universal cover `M x A`, first cohomology with values in
//! `A*`, and the cover built from the amalgam of line spans.

pub mod cohomology;
pub mod embeddings;
pub mod error;
pub mod exec;
pub mod field;
pub mod geometry;
pub mod group;
pub mod linalg;
pub mod report;
pub mod ronan;

pub use error::{Error, Result};
pub use field::{Derivation, FieldElem, FieldSpec};
pub use geometry::{act_on_flag, Flag, GeomLine, Geometry, LineFamily};
pub use group::GroupElem;
pub use linalg::{Matrix, Subspace, Vector};
pub use report::{Report, RunConfig};
