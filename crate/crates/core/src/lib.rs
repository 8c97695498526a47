//! Two function algebras that capture the polynomial-time computable
//! functions on bitstrings, with evaluators, explicit bounding polynomials
//! and verified translations between them.
//!
//! * [`cobham`]: bounded recursion on notation, with an explicit bound `j`.
//! * [`bellantoni`]: safe recursion over normal/safe arguments, no bounds.
//! * [`translate`]: compilers in both directions.
//! * [`stdlib`]: a small library of named definitions with reference
//!   implementations.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bellantoni;
pub mod bitstring;
pub mod cobham;
pub mod mpoly;
pub mod path;
pub mod stdlib;
pub mod translate;

pub use bellantoni::{BArity, BError, BExpr, BInfExpr, InferError, TimedResult};
pub use bitstring::{Bit, Bitstring, MalformedLiteral};
pub use cobham::{CError, CExpr};
pub use mpoly::{MPoly, Monomial, PolyError, UPoly};
pub use path::{Step, TermPath};
