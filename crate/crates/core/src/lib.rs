//! Surface diagram calculus on first homology.
//!
//! Circuits of curves on a closed oriented surface are handled through their
//! homology classes. On the torus this is exact; in higher genus every
//! answer is a necessary condition and is flagged as such.

pub mod circuit;
pub mod error;
pub mod form;
pub mod genus1;
pub mod handles;
pub mod homology;
mod int;
pub mod lattice;
pub mod matrix;
pub mod monodromy;
pub mod subst;

pub use circuit::{Circuit, Diagram, Exactness, ValidationReport};
pub use error::{Error, Result};
pub use form::{FormInvariants, Parity};
pub use genus1::{CanonicalForm, Classification, Closure, SumForm};
pub use homology::{HClass, SpMatrix, TwistWord};
pub use matrix::IntMatrix;
pub use subst::{Detection, DetectionKind, Summand};
