//! Exact enumeration of integer tetrahedra by perimeter and diameter.
//!
//! Labelings are six-tuples `⟨A,a,B,b,C,c⟩` of side lengths with opposite
//! pairs `(A,a)`, `(B,b)`, `(C,c)`.  Counts are taken up to congruence, so
//! each orbit of the 24-element symmetry group is counted once.

// Side lengths keep their usual upper/lower case names.
#![allow(non_snake_case)]

pub mod analysis;
pub mod closed_forms;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod oracle;
pub mod symmetry;

pub use error::{Result, Tally, TetraError};
pub use geometry::EdgeLabeling;
