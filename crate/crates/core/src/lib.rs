//! Combinatorics of affine Kac–Moody algebras at the critical level.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure,
//! deterministic computations over exact rationals:
//!
//! - [`cartan`]: finite simply-laced root systems and their Weyl groups.
//! - [`affine`]: the affine weight space, its invariant form, real-root
//!   reflections, the dot-action and the order `≤`.
//! - [`linkage`]: Kac–Kazhdan linkage, block windows, critical-level tests,
//!   classification of critical classes, the `α↑`/`α↓` bijections and the
//!   Casimir scalar.
//! - [`charalg`]: truncated formal characters, colored partition numbers,
//!   Verma and restricted Verma characters, multiplicity tables and
//!   q-characters.
//! - [`pbw`]: explicit Verma modules for `ŝl₂` in a PBW basis, used as an
//!   independent oracle for singular-vector dimensions and restricted
//!   quotients.
//!
//! File formats, the CLI and anything touching IO live in the `critlink`
//! companion crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod affine;
pub mod cartan;
pub mod charalg;
mod error;
pub mod linalg;
pub mod linkage;
pub mod pbw;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Q;
