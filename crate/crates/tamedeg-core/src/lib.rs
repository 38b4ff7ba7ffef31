//! Degenerations of representations of tame quivers: exact hom/ext calculus,
//! the degeneration order, tube combinatorics and building-bloc classification.

pub mod dim;
pub mod error;
pub mod linalg;
pub mod quiver;

pub use error::{Error, Result};
pub use quiver::{Numerics, Quiver, QuiverKind};
pub mod catalog;
pub mod hom;
pub mod degen;
pub mod tube;
pub mod bloc;
pub mod io;
pub mod experimental;

pub use catalog::{Catalog, Indec, ModuleSum, Tube, TubeId};
pub use hom::HomTable;
