//! Exact symbolic engine for a create/conserve rewrite system and the
//! finite group algebras its subset alphabets generate.
//!
//! * [`rewrite`]: the create/conserve loop and its transition tables.
//! * [`monomial`], [`group`]: signed monomials over `i₁, j₁, i₂, j₂, …` and
//!   the groups of order `2^(g+1)` they form.
//! * [`algebra`]: rational linear combinations of monomials.
//! * [`pentad`]: five-member anticommuting sets in the order-64 group.
//! * [`nilpotent`]: operators `αE + β·p + δm` whose square is `E² - p² - m²`.
//! * [`matrix`]: an independent exact matrix representation used as an oracle.
//! * [`verify`]: the seeded invariant suite run by the `verify` command.
//!
//! No floating point is used anywhere.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod group;
pub mod matrix;
pub mod monomial;
pub mod nilpotent;
pub mod pentad;
pub mod rewrite;
pub mod sample;
pub mod verify;

pub use algebra::{AlgebraElement, Rational};
pub use error::{Error, Result};
pub use group::{Catalog, GroupLevel};
pub use monomial::{Generator, Kind, Mask, Monomial, Sign};
pub use nilpotent::NilpotentOperator;
pub use pentad::Pentad;
