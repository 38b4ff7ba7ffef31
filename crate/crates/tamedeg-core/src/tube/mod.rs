//! Tube combinatorics: extension posets, generic extensions and periodicity.

mod cat;
mod ext;
mod genext;
mod kset;

pub use cat::TubeCat;
pub use ext::{from_top_coords, top_coords, ExtensionPoset};
pub use genext::{BlocRecord, Provenance};
pub use kset::ExtensionSetK;
