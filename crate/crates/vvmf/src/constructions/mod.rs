//! Minimal-weight forms and bases for the rank-two building blocks and the
//! rank-four representations obtained from them.

pub mod induction;
pub mod rank2;
pub mod sym3;
pub mod tensor;

use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

pub use induction::{
    build_fuchsian_z, build_fuchsian_z_printed, induce_to_gamma, induction_minimal_pair, induction_pipeline,
    InductionJob, InductionResult, MinimalPair,
};
pub use rank2::{rank2_minimal, Rank2MinimalForm, Rank2Source};
pub use sym3::{sym3_pipeline, Sym3Result};
pub use tensor::{tensor_pipeline, TensorResult};

/// How a weight-zero solution in a Hauptmodul becomes a q-expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Solve in `K` (or `Z`), then substitute the Hauptmodul's q-expansion.
    /// Loses roughly three digits per order of `q`; use with extended
    /// precision.
    Compose,
    /// Solve the equivalent modular equation directly in `q` (or `q2`).
    Modular,
}

impl Route {
    pub fn default_for<S: Scalar>() -> Route {
        if S::EXTENDED {
            Route::Compose
        } else {
            Route::Modular
        }
    }
}
