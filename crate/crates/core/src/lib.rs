//! Exact algebra for conormal varieties of partial flag varieties in type A.
//!
//! Laurent polynomials and matrices over exact fields, affine permutations,
//! partitions and tableau bookkeeping, the explicit matrices attached to a
//! nilpotent orbit, and identification of Iwahori and parabolic cells.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod field;
pub mod laurent;
pub mod lattice;
pub mod cells;
pub mod constructions;
pub mod matrix;
pub mod partitions;
pub mod tableau;
pub mod weyl;

pub use error::{Error, Result};
pub use field::{Field, ModP, Rational};
pub use laurent::{LaurentPoly, Order};
pub use matrix::{BorelMembership, LaurentMatrix};
