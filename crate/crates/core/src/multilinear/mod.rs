//! Exact multilinear algebra on the oriented orthonormal frame `e1, …, e7`.
//!
//! Two representations live side by side: [`AltForm`] keeps alternating forms
//! sparsely against increasing multi-indices, and [`Tensor`] is a dense array
//! used where many index contractions are chained (connections, curvature).

mod form;
mod index;
mod tensor;

pub use form::{AltForm, FormError, Vector};
pub use index::{MultiIndex, DIM};
pub use tensor::{einsum, Tensor};
