//! Brute-force oracles built from explicit matrix representations. Nothing
//! here shares code with `tamedeg-core`: homomorphism spaces are kernels of
//! intertwiner systems, and middle terms come from enumerating extension
//! classes over GF(2).

pub mod cycle;
pub mod gf2;
pub mod rational;
pub mod rep;
pub mod strings;

pub use rep::Rep;
