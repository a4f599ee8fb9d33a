//! Exact computations for G2 structures with skew-symmetric torsion on
//! seven-dimensional Lie algebras.

#![allow(clippy::result_large_err)]

pub mod g2;
pub mod ledger;
pub mod lie;
pub mod linalg;
pub mod multilinear;
pub mod scalar;
pub mod soliton;
pub mod torsion;

pub use g2::{standard_phi, G2Error, G2FormData, SymTraceless};
pub use ledger::{IdentityLedger, LedgerEntry};
pub use lie::{LieAlgebra, LieError, Violation};
pub use multilinear::{einsum, AltForm, FormError, MultiIndex, Tensor, Vector, DIM};
pub use scalar::Scalar;
pub use soliton::{BiG2Pair, BiG2Report, ParallelFieldReport, SolitonData, SolitonError, SolitonReport};
pub use torsion::{Classification, Connection, Curvature, G2Structure, Geometry, StructureError};
