//! Exact construction and verification of swap tensor polynomials over
//! `d×d` matrix algebras.

pub mod constructions;
pub mod error;
pub mod exact;
pub mod ncpoly;
pub mod symmetric;
pub mod two_by_two;
pub mod verify;

pub use error::{Error, Result};
