//! Exact linear algebra over the integers and rationals, and the flats
//! (affine subspaces, subtori) built from it.

mod affine_flat;
pub mod json;
pub mod linsolve;
mod matrix;
mod snf;
mod toric_flat;

pub use affine_flat::{affine_canonicalize, affine_contains, affine_intersect, AffineFlat};
pub use matrix::{dot, subsets, Matrix};
pub use snf::{hnf_rows, integer_kernel, snf, Smith};
pub use toric_flat::{flat_contains, flat_intersect, frac, solve_torus, ToricFlat, TorusSolution};
