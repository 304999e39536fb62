//! Exact computations with finite-dimensional Hopf algebras over prime
//! fields, given by structure constants.

pub mod algebra;
pub mod catalog;
pub mod cobar;
pub mod document;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod report;
pub mod rlie;

pub use algebra::AlgebraData;
pub use catalog::{CatalogId, Family, Fingerprint};
pub use cobar::CochainComplex;
pub use document::PresentationDocument;
pub use error::{Error, Result};
pub use hopf::{FiltrationResult, FirstOrder, HopfPresentation, Interrupt};
pub use linalg::{Gf, Matrix, Subspace, Vector};
pub use report::{Check, Report};
pub use rlie::RestrictedLie;
