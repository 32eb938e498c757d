//! Lie algebra cohomology over F_p and the obstruction calculus for lifting
//! structure-constant algebras through the quotient towers Z/p^k and
//! F_p[x]/(x^k).
//!
//! The pipeline: a Lie algebra over R_k is lifted entrywise to a bracket
//! algebra over R_{k+1}; its Jacobiator, divided by pi^k, is a closed 3-form
//! on the residue algebra; the algebra lifts exactly when that form is a
//! coboundary, and the witness 2-form repairs the bracket. Lifts themselves
//! are classified by H^2 of the residue algebra with adjoint coefficients.
//!
//! See the examples directory for runnable entry points into each stage.

// Index loops over multi-index tensors and explicit remainder tests read
// better here than the iterator/is_multiple_of rewrites clippy suggests.
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod complex;
pub mod document;
pub mod error;
pub mod lifting;
pub mod matrix;
pub mod oracle;
pub mod report;
pub mod ring;
pub mod structure;

pub use error::{Error, Result};
pub use ring::{RingElem, RingFamily, RingSpec};
