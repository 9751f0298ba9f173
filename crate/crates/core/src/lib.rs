//! Algebraic curvature operators on Λ²V, their construction from the
//! Lie-algebra data of compact homogeneous spaces, and certification of
//! strongly positive / strongly nonnegative curvature by semidefinite
//! feasibility over a subspace of 4-form modifications.
//!
//! The library is organized around a small pipeline:
//!
//! * [`exterior`] — coordinates for Λ²V and Λ⁴V, the 4-form → operator
//!   embedding, and the Bianchi projection;
//! * [`curvature`] — sectional curvature, heuristic minimization over the
//!   Grassmannian, the Gauss–Bonnet integrand, restriction to subspaces;
//! * [`liealg`] — matrix Lie algebras with bi-invariant metrics, the
//!   built-in homogeneous splittings, bracket tables, invariant forms;
//! * [`construct`] — curvature operators: normal homogeneous, submersion
//!   composition, Cheeger deformation, fiber-rescaled families, fatness;
//! * [`certify`] — feasibility certificates (primal 4-form or dual
//!   separating operator) via alternating projections;
//! * [`report`] / [`io`] — JSON serialization of operators, splits and runs.

pub mod certify;
pub mod commands;
pub mod config;
pub mod construct;
pub mod curvature;
pub mod error;
pub mod exterior;
pub mod io;
pub mod liealg;
pub mod reference;
pub mod report;

pub use config::Config;
pub use error::{Error, Result};
