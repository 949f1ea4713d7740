//! Modular linear differential equations: classification, coefficients,
//! operators, Frobenius solvers and basis assembly.

pub mod basis;
pub mod classify;
pub mod coeffs;
pub mod derivative;
pub mod hypergeom;
pub mod operator;
pub mod poly;
pub mod system;

pub use basis::{assemble_basis, assemble_cyclic_basis, assemble_noncyclic_basis, FormBasis};
pub use classify::{classify, dimension, Case, CaseReport};
pub use coeffs::{
    build_cyclic_operator, build_noncyclic_operator, build_noncyclic_system, cyclic_coeffs, noncyclic_coeffs,
    OdeCoefficients,
};
pub use derivative::{modular_derivative, modular_derivative_scalar};
pub use hypergeom::{hypergeom_2f1, hypergeometric_operator};
pub use operator::FuchsianOperator;
pub use poly::ThetaPoly;
pub use system::frobenius_solve_system;
