//! Explicit Verma modules of `ŝl₂` in a PBW basis.
//!
//! Weight spaces are indexed by offsets `[c₀, c₁]` from the highest weight
//! (coefficients of `α₀ = δ−α` and `α₁ = α`). The module is built only on
//! the offsets of a [`Truncation`](crate::charalg::Truncation), which is
//! downward closed, so raising operators never leave it.

mod algebra;
mod module;
mod oracle;

pub use algebra::{AlgebraSpec, Element, Gen};
pub use module::{
    build_pbw_module, build_pbw_module_capped, Lowering, Monomial, PBWModule, Raising, Vector,
    DEFAULT_MAX_DIM,
};
pub use oracle::{
    chain_embedding_check, hom_dim_verma, restricted_quotient_oracle, singular_scan,
    subgeneric_invariant_check, ChainReport, QuotientReport, SingularRow,
};
