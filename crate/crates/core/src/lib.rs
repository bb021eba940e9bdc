//! Finite double-category calculus.
//!
//! The crate builds finite truncations of the free globularly generated
//! double category Q_B of a decorated bicategory B, evaluates the canonical
//! projection of Q_B into any finite double category C with H*C = B, and
//! checks the structural statements about these objects (strictness,
//! surjectivity, uniqueness, length bounds, inverses, adjunction triangles)
//! exhaustively on small instances.

pub mod adjunction;
pub mod doublecat;
pub mod freeggd;
pub mod presentations;
pub mod projection;
