//! The fundamental 3-form, its induced metric and the G2-irreducible
//! decompositions of 2- and 3-forms.

mod identities;
mod projection;

use thiserror::Error;

use crate::multilinear::{einsum, AltForm, Tensor, Vector, DIM};
use crate::scalar::Scalar;

pub use identities::contraction_identities;
pub use projection::{FourFormInjectivity, ProjectorRanks, ThreeFormParts, TwoFormParts};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum G2Error {
    #[error("fundamental form must have degree 3, got {0}")]
    WrongDegree(usize),
    #[error("induced metric is not the identity: g({i},{j}) = {value}")]
    MetricNotIdentity { i: usize, j: usize, value: Scalar },
    #[error("3-form is not positive for the orientation e1..e7 (B({i},{i}) = {value})")]
    Orientation { i: usize, value: Scalar },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is not traceless (trace {0})")]
    NotTraceless(Scalar),
    #[error("3-form is not in the 27-dimensional summand: singlet part {lambda1:?}, vector part {lambda7:?}")]
    NotInLambda27 { lambda1: AltForm, lambda7: AltForm },
}

/// A positive 3-form inducing the identity metric, with its cached dual 4-form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G2FormData {
    phi: AltForm,
    psi: AltForm,
    phi_t: Tensor,
    psi_t: Tensor,
}

/// `φ = e127 + e135 − e146 − e236 − e245 + e347 + e567`.
pub fn standard_phi() -> G2FormData {
    G2FormData::standard()
}

pub(crate) fn standard_phi_form() -> AltForm {
    AltForm::from_int_terms(
        3,
        &[
            (&[1, 2, 7], 1),
            (&[1, 3, 5], 1),
            (&[1, 4, 6], -1),
            (&[2, 3, 6], -1),
            (&[2, 4, 5], -1),
            (&[3, 4, 7], 1),
            (&[5, 6, 7], 1),
        ],
    )
}

/// `φ_t = F∧e7 + cos t·ψ₊ + sin t·ψ₋` built from the SU(3) data
/// `F = e14 + e25 − e36`, `ψ₊ = e123 + e156 − e246 − e345`,
/// `ψ₋ = e456 + e234 − e135 − e126`, for given `(cos t, sin t)`.
pub fn phi_family(cos_t: &Scalar, sin_t: &Scalar) -> AltForm {
    let f = AltForm::from_int_terms(2, &[(&[1, 4], 1), (&[2, 5], 1), (&[3, 6], -1)]);
    let plus = AltForm::from_int_terms(
        3,
        &[(&[1, 2, 3], 1), (&[1, 5, 6], 1), (&[2, 4, 6], -1), (&[3, 4, 5], -1)],
    );
    let minus = AltForm::from_int_terms(
        3,
        &[(&[4, 5, 6], 1), (&[2, 3, 4], 1), (&[1, 3, 5], -1), (&[1, 2, 6], -1)],
    );
    let fe7 = f.wedge(&AltForm::basis(&[7])).expect("degree 3");
    &(&fe7 + &plus.scale(cos_t)) + &minus.scale(sin_t)
}

impl G2FormData {
    pub fn standard() -> Self {
        Self::new(standard_phi_form()).expect("standard form is valid")
    }

    /// Validates that `phi` is positive for the fixed orientation and that
    /// its induced metric is exactly the identity.
    pub fn new(phi: AltForm) -> Result<Self, G2Error> {
        if phi.degree() != 3 {
            return Err(G2Error::WrongDegree(phi.degree()));
        }
        let phi_t = Tensor::from_form(&phi);
        let g = einsum("ikl,jkl->ij", &[&phi_t, &phi_t]).scale_frac(1, 6);
        for i in 0..DIM {
            for j in 0..DIM {
                let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                if *g.get(&[i, j]) != expected {
                    return Err(G2Error::MetricNotIdentity {
                        i: i + 1,
                        j: j + 1,
                        value: g.get(&[i, j]).clone(),
                    });
                }
            }
        }
        // (1/6)(e_i⌟φ)∧(e_i⌟φ)∧φ is +vol exactly when φ is positive for this orientation
        for i in 1..=DIM {
            let a = phi.interior_basis(i).expect("degree 3");
            let b = a.wedge(&a).and_then(|aa| aa.wedge(&phi)).expect("degree 7").top_coeff();
            let b = &b * &Scalar::frac(1, 6);
            if !b.is_one() {
                return Err(G2Error::Orientation { i, value: b });
            }
        }
        let psi = phi.hodge();
        let psi_t = Tensor::from_form(&psi);
        Ok(G2FormData { phi, psi, phi_t, psi_t })
    }

    pub fn phi(&self) -> &AltForm {
        &self.phi
    }

    pub fn psi(&self) -> &AltForm {
        &self.psi
    }

    pub fn phi_tensor(&self) -> &Tensor {
        &self.phi_t
    }

    pub fn psi_tensor(&self) -> &Tensor {
        &self.psi_t
    }

    /// `g_ij = (1/6) φ_ikl φ_jkl`.
    pub fn induced_metric(&self) -> Tensor {
        einsum("ikl,jkl->ij", &[&self.phi_t, &self.phi_t]).scale_frac(1, 6)
    }

    /// `X ⌟ φ`, which spans the 7-dimensional summand of 2-forms.
    pub fn cross(&self, x: &Vector) -> AltForm {
        self.phi.interior(x).expect("degree 3")
    }
}

/// Symmetric traceless 7×7 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTraceless {
    entries: Tensor,
}

impl SymTraceless {
    pub fn new(entries: Tensor) -> Result<Self, G2Error> {
        assert_eq!(entries.rank(), 2, "expected a matrix");
        for i in 0..DIM {
            for j in (i + 1)..DIM {
                if entries.get(&[i, j]) != entries.get(&[j, i]) {
                    return Err(G2Error::NotSymmetric(i + 1, j + 1));
                }
            }
        }
        let tr = entries.trace();
        if !tr.is_zero() {
            return Err(G2Error::NotTraceless(tr));
        }
        Ok(SymTraceless { entries })
    }

    pub fn zero() -> Self {
        SymTraceless {
            entries: Tensor::zeros(2),
        }
    }

    /// Diagonal matrix; the diagonal must sum to zero.
    pub fn diagonal(diag: [Scalar; DIM]) -> Result<Self, G2Error> {
        Self::new(Tensor::from_fn(2, |ix| {
            if ix[0] == ix[1] {
                diag[ix[0]].clone()
            } else {
                Scalar::zero()
            }
        }))
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.entries.get(&[i, j])
    }

    pub fn entries(&self) -> &Tensor {
        &self.entries
    }
}
