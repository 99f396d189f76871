//! Exact computations around the K^x-equivariant affine Grassmannian of
//! GL(2) and its coherent model `(V x V[-1]) / GL(V)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact_math`]: rationals, polynomials in `a` and `c`, exact kernels.
//! - [`rep_gl2`]: irreducible GL(2)-representations `V(lam, mu)` in a weight basis.
//! - [`orbit_combinatorics`]: orbit labels, the embedding of dominant coweights,
//!   fixed-point sets and closure intersections.
//! - [`cohomology_modules`]: graded `C[a,c]`-modules of IC objects and their Hom spaces.
//! - [`loop_convolution`]: convolution stalks, with a finite-field character-sum oracle.
//! - [`equivariant_coherent`]: the coherent side, P-equivariant modules and invariant theory.
//! - [`koszul_exterior`]: the exterior algebra `Λ(V) ⊗ Λ(V*)` and the regrading bookkeeping.

pub mod cohomology_modules;
pub mod equivariant_coherent;
pub mod exact_math;
pub mod koszul_exterior;
pub mod loop_convolution;
pub mod orbit_combinatorics;
pub mod rep_gl2;

mod error;

pub use error::{Error, Result};
