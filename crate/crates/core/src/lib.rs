//! Group-ring constructions of self-dual and dual-containing codes.

pub mod codes;
pub mod constructions;
pub mod field;
pub mod group;
pub mod groupring;
pub mod io;
pub mod linalg;
pub mod report;

pub use codes::{CodeError, LinearCode};
pub use constructions::{CodeFamily, CodeFamilySpec, ConstructionError, FamilyInstance};
pub use field::{FieldElement, FieldError, FieldSpec};
pub use group::{GroupError, GroupSpec};
pub use groupring::{GroupRingElement, GroupRingError};
pub use linalg::{FieldMatrix, LinalgError};
pub use report::{CodeReport, DistanceOptions};
