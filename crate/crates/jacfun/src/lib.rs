//! Jacobi functions of the first and second kind, on and off the cut, their
//! Olver normalizations and classical specializations (Gegenbauer, associated
//! Legendre, Ferrers, Chebyshev), double summation addition theorems in the
//! hyperbolic and trigonometric contexts, and fundamental solutions of the
//! Laplace-Beltrami operator on the rank-one symmetric spaces.
//!
//! Every identity realized here is machine-checkable: the `classical` module
//! exposes residual verifiers for the interrelations, specializations and
//! quadratic transformations, the `addition` module evaluates the truncated
//! double sums against direct evaluation, and the `symmspace` module checks
//! harmonicity and flat-space matching of the Green's functions.
//!
//! Start with the runnable examples (`cargo run --example ...`) or the `jacfun`
//! binary for a command-line interface.

pub mod error;
pub mod numkernel;
pub mod hypergeom;
pub mod jacobi;
pub mod classical;
pub mod addition;
pub mod symmspace;
pub mod cli;

pub use error::{Error, Result};
pub use numkernel::C64;
