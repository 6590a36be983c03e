//! Exact-arithmetic toolkit for hom-associative algebras, hom-bialgebras,
//! their representation categories and the braidings built from
//! quasitriangular structures and Yetter-Drinfeld data.

pub mod axioms;
pub mod dehomify;
pub mod error;
pub mod field;
pub mod generators;
pub mod hom_structures;
pub mod linmap;
pub mod qt_braiding;
pub mod rep_theory;
pub mod report;
pub mod yetter_drinfeld;

pub use error::Error;
pub use field::{Field, FieldElem};
pub use linmap::{flatten, flip_map, unflatten, LinMap};
pub use report::{CheckReport, Violation};
