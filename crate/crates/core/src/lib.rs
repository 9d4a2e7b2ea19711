//! Genus-one family Gromov-Witten invariants of the Kodaira-Thurston
//! manifold, computed in closed form and by enumerating tori.
//!
//! The Lie-theoretic layer is generic over its scalar ring and the geometric
//! layer over its float type; the aliases below fix the concrete choices.

pub mod arith;
pub mod error;
pub mod geometry;
pub mod gwcount;
pub mod homology;
pub mod homs;
pub mod nilalg;
pub mod sl2z;

pub use error::{Error, Result};
pub use gwcount::{GwResult, Method};
pub use homology::{H3Class, HomologyClass};
pub use homs::HomDerivs;
pub use nilalg::{AutGen, AutWord};
pub use sl2z::Sl2z;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;

pub type LieAlgElem = nilalg::LieAlgElem<Rational>;
pub type GroupElem = nilalg::GroupElem<Rational>;

pub type TwistorStructure = geometry::TwistorStructure<f64>;
pub type TorusModulus = geometry::TorusModulus<f64>;
pub type TorusSolution = geometry::TorusSolution<f64>;
pub type ModuliComponent = gwcount::ModuliComponent<f64>;
