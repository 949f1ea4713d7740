//! Vector-valued modular forms of rank at most four: q-expansions of free
//! bases computed from modular linear differential equations.

pub mod classical;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod linalg;
pub mod mlde;
pub mod rep;
pub mod residual;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use scalar::{Big, Scalar};
pub use series::{Nome, PuiseuxSeries, VectorSeries};
