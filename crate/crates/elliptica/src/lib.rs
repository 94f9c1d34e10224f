//! Exact-arithmetic toolkit for positively elliptic algebras: weighted-graded
//! Artinian complete intersections over the rationals.
//!
//! The library decides positive ellipticity, computes Hilbert data and
//! derivation spaces, checks the Halperin property (no nontrivial negative
//! derivations), enumerates and filters degree types, and reproduces the
//! exceptional degree-type lists at desk scale. Every computation runs over
//! exact rationals; there is no floating point anywhere.
//!
//! Modules:
//! - [`ring`]: sparse multivariate polynomials with a positive even grading
//! - [`quotient`]: presentations, ellipticity, Hilbert data, pure models
//! - [`derivations`]: degree-d derivation spaces and the Halperin check
//! - [`degreetypes`]: SAC, enumeration, the exclusion pipeline, sampling
//! - [`casebook`]: golden lists, worked examples, randomized sweeps
//! - [`text`]: the polynomial grammar and the presentation file format
//! - [`cli`]: the command-line front end
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability.

pub mod casebook;
pub mod cli;
pub mod degreetypes;
pub mod derivations;
pub mod linalg;
pub mod quotient;
pub mod ring;
pub mod text;

pub use quotient::{DegreeType, Elliptic, Presentation};
pub use ring::{GradedContext, Monomial, Polynomial, Rational};
