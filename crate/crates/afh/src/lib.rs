//! Homogenized integrands for energies constrained by constant-rank
//! differential operators.
//!
//! The library discretizes the cell minimization problems `M`, `M_c`, and
//! `M^eta_c` on periodic boxes, drives their large-cube limits to estimate
//! the homogenized integrand `f_hom`, and runs the stochastic
//! (shift-covariant, subadditive) version by Monte Carlo over seeded
//! random media.
//!
//! Start with [`operator::OperatorSpec`] for the differential constraint,
//! [`integrand::IntegrandSpec`] for the energy density, and
//! [`cellsolver`] for the three cell problems. The `afh` binary exposes
//! the same machinery behind a JSON-configured CLI.

pub mod cellsolver;
pub mod cli;
pub mod error;
pub mod fields;
pub mod homog;
pub mod integrand;
pub mod operator;
pub mod stochastic;

pub use error::{AfhError, Result};

// The guide's code listings double as doc-tests (`cargo test --doc`),
// so the book in `book/` can never drift from the API.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/cell-problems.md")]
    mod cell_problems {}
    #[doc = include_str!("../../../book/src/homogenization.md")]
    mod homogenization {}
    #[doc = include_str!("../../../book/src/quasiconvexity.md")]
    mod quasiconvexity {}
    #[doc = include_str!("../../../book/src/stochastic.md")]
    mod stochastic {}
}
