//! Exact computation of equivariant invariants of Milnor fibres of
//! reflection arrangements: equivariant Euler characteristics, cohomology
//! decompositions under the reflection group times the cyclic monodromy,
//! spectra, and equivariant Hodge-Deligne / Poincare-Deligne polynomials.

pub mod braid;
pub mod catalog;
pub mod data;
pub mod error;
pub mod hodge;
pub mod rank2;
pub mod report;
pub mod repring;
pub mod validate;

pub use error::{Error, Result};
