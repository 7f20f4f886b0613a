//! Exact computations with cocommutative Hopf algebras over the rationals.
//!
//! The crate builds group algebras, universal enveloping algebras (via PBW
//! straightening) and smash products, truncated at a filtration degree, and
//! runs exact checks on them: the Hopf axioms, grouplike and primitive
//! extraction, the decomposition `H ≅ U(L_H) ⋊ K[G_H]`, Hopf kernels and
//! cokernels, the regular epi/mono factorization, split short exact
//! sequences, and the torsion theory formed by enveloping algebras and group
//! algebras. All statements are certified on the truncation only.

pub mod catalog;
pub mod cli;
pub mod constructors;
pub mod error;
pub mod exactlin;
pub mod exactness;
pub mod functors;
pub mod hopf;
pub mod morphisms;
pub mod verdict;

pub use error::{Error, Result};
