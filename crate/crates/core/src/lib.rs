//! Exact computation with finite-dimensional Hopf algebras over cyclotomic
//! fields: Taft algebras, metacyclic group algebras, their bicrossed
//! products, matched-pair search and isomorphism classification.

pub mod classification;
pub mod constructions;
pub mod cyclofield;
pub mod error;
pub mod hopfcore;
pub mod linalg;
pub mod matchedpairsearch;

pub use cyclofield::{make_field, CycScalar, Field, RootOfUnity};
pub use error::{Error, Result};
pub use hopfcore::{FinHopf, HopfElement, HopfMorphismCandidate, Tensor2};
