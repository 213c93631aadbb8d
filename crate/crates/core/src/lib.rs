//! Exact computer algebra for free Lie, Leibniz and Ronco algebras.
//!
//! The crate is organised bottom-up:
//!
//! - [`linalg`]: exact rationals, sparse matrices, rank and kernel.
//! - [`lincomb`]: formal linear combinations, the common value type.
//! - [`free_lie`]: Lyndon basis of the free Lie algebra and tensor expansion.
//! - [`leibniz`]: the free Leibniz algebra on tensor words.
//! - [`ronco`]: the free Ronco algebra `V ⊕ ⊕ Lie_{n-1}(V) ⊗ V`.
//! - [`algebra`]: finite-dimensional algebras by structure constants,
//!   identity checks and the Ronco / μ-algebra conversions.
//! - [`homology`]: `HL₁`, `HL₂`, `HR₀` and `H₁(𝔤, 𝔤ᵃᵈ)`.
//! - [`term`]: the bracket-term grammar.
//! - [`format`]: JSON structure-constant files and text rendering.

pub mod algebra;
pub mod error;
pub mod format;
pub mod free_lie;
pub mod homology;
pub mod leibniz;
pub mod linalg;
pub mod lincomb;
pub mod ronco;
pub mod term;

pub use error::{Error, Result};
pub use linalg::Rational;
pub use lincomb::LinComb;

/// Degree cap applied to bracket computations unless overridden.
pub const DEFAULT_MAX_DEGREE: usize = 8;

/// Environment variable that overrides [`DEFAULT_MAX_DEGREE`].
pub const MAX_DEGREE_ENV: &str = "RONCO_MAX_DEGREE";

/// Reads the degree cap from `RONCO_MAX_DEGREE`, falling back to the default.
pub fn max_degree_from_env() -> Result<usize> {
    match std::env::var(MAX_DEGREE_ENV) {
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(Error::InvalidArgument(format!(
                "{MAX_DEGREE_ENV} must be a positive integer, got {raw:?}"
            ))),
        },
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}
