//! Characters of simple Lie algebras as polynomials in the fundamental
//! characters, and the second-order operator they diagonalize.

pub mod charlib;
pub mod cli;
pub mod csop;
pub mod error;
pub mod fixture;
pub mod repth;
pub mod rootsys;
pub mod zpoly;

pub use error::{Error, Result};
pub use rootsys::{Algebra, CartanMatrix, Weight};
pub use zpoly::ZPolynomial;
