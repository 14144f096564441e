//! Exact computational commutative algebra: Gröbner bases, free resolutions,
//! Ext modules with purity and Cohen–Macaulay tests, Noetherian operators for
//! primary ideals, and Bezoutian residue pairings.

pub mod algebra;
pub mod error;
pub mod ext;
pub mod groebner;
pub mod noetherian;
pub mod residue;
pub mod resolution;

pub use algebra::diff::{apply_diff, DiffOperator};
pub use algebra::monomial::{Monomial, MonomialOrder};
pub use algebra::polynomial::{poly_arith, rat, ratio, ArithOp, Polynomial, Rational};
pub use algebra::rational_function::RationalFunction;
pub use algebra::ring::{CoefficientField, Ring, RingRef};
pub use error::{Error, Result};
pub use ext::{ExtModule, PurityReport, PurityVerdict};
pub use groebner::{FreeModuleElement, GroebnerBasis, ModuleOrder};
pub use noetherian::{NoetherianSystem, RationalSection, VariableSplit};
pub use residue::{HeferMatrix, QuotientAlgebra, ResidueFunctional};
pub use resolution::{Complex, FreeResolution, PolyMatrix};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
