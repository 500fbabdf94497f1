//! Truncated formal characters and the multiplicity data attached to
//! critical classes.
//!
//! Characters are stored relative to their highest weight: a
//! [`FormalCharacter`] with base `λ` and term `(μ, c)` stands for `c·e^{λ−μ}`.
//! Each character is complete inside its [`Truncation`] and says nothing
//! about offsets outside it.

mod character;
mod multiplicity;
mod series;

pub use character::{
    partition_character, restricted_verma_character, shift_character, verma_character,
    FormalCharacter, Truncation, DEFAULT_BOX_CAP,
};
pub use multiplicity::{
    antidominant_mult_table, simple_restricted_character, subgeneric_mult_table, ModuleKind,
    Multiplicity, MultiplicityTable, Provenance, TableEntry,
};
pub use series::{p_series, q_character_f, FKind, QSeries};
