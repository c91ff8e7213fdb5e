//! Exact classification of complex-analytic supermanifolds over `CP^1` of
//! odd dimension 2 or 3, from Čech gluing data.
//!
//! The pipeline: a degree-2 gluing cocycle ([`cech::Cocycle`]) is reduced to
//! coordinates in a fixed basis of `H^1(CP^1, T_2)` ([`cech::reduce`]), bundle
//! automorphisms act on it by conjugation ([`aut`]), and the orbit of the
//! class is labelled by a canonical moduli point ([`moduli`]).

pub mod aut;
pub mod cech;
pub mod error;
pub mod io;
pub mod laurent;
pub mod linalg;
pub mod moduli;
pub mod scalar;
pub mod sections;

pub use aut::BundleAut;
pub use cech::{BasisLayout, Cocycle, CohomologyClass};
pub use error::{Error, Result};
pub use io::JobDocument;
pub use laurent::LaurentPoly;
pub use linalg::Matrix;
pub use moduli::{ClassMatrix, ModuliPoint};
pub use scalar::Scalar;
pub use sections::{Chart, Deriv, KTuple, SuperFunction, VectorField, Word};
