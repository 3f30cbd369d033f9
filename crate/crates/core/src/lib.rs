//! Exact invariants of 3-manifolds given by surgery on algebraically split
//! links in rational homology spheres, and the Euler characteristic of their
//! instanton Floer homology computed both from case formulas and from the
//! Floer exact triangle.

pub mod cli;
pub mod corpus;
pub mod document;
pub mod error;
pub mod floer;
pub mod invariants;
pub mod lens;
pub mod par;
pub mod presentation;
pub mod ring;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
pub use presentation::{Component, Sign, SurgeryPresentation};
pub use ring::{HalfLaurent, Rational, RationalMatrix, RingMatrix};
