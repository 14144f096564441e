//! Exact polynomial arithmetic over the rationals.

pub mod diff;
pub mod gcd;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod rational_function;
pub mod ring;
