//! Left-invariant G2 structures on a Lie algebra: intrinsic torsion data,
//! the characteristic connection and its curvature.

mod battery;
mod connection;

use thiserror::Error;

use crate::g2::G2FormData;
use crate::lie::LieAlgebra;
use crate::multilinear::{AltForm, Tensor, Vector};
use crate::scalar::Scalar;

pub use battery::{ClosedTorsionReport, SymmetryReport};
pub use connection::{Connection, Curvature, Geometry};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("structure is not integrable: d*φ − θ∧*φ = {residual:?}")]
    NotIntegrable { residual: AltForm },
    #[error("internal consistency violation: {0}")]
    Inconsistent(String),
}

/// Which of the standard torsion classes a structure belongs to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Classification {
    /// `dφ = 0` and `dψ = 0`.
    pub parallel: bool,
    /// `dφ = cψ` with `c ≠ 0` and `dψ = 0`.
    pub nearly_parallel: bool,
    /// `dψ = θ∧ψ` and `dφ = ¾θ∧φ`.
    pub locally_conformally_parallel: bool,
    /// `dψ = 0`.
    pub cocalibrated: bool,
    /// Integrable with `θ = 0`.
    pub balanced: bool,
    /// `dψ = θ∧ψ`.
    pub integrable: bool,
    /// Integrable with `dφ∧φ = 0`.
    pub strictly_integrable: bool,
    /// `dφ∧φ = 0` and `dψ = 0`.
    pub pure_w27: bool,
    /// `λ` is constant; automatic for invariant structures.
    pub constant_type: bool,
    /// `dθ = 0`.
    pub closed_lee_form: bool,
}

/// A Lie algebra with a left-invariant G2 form and its derived data,
/// computed once at construction.
#[derive(Clone, Debug)]
pub struct G2Structure {
    algebra: LieAlgebra,
    forms: G2FormData,
    dphi: AltForm,
    dpsi: AltForm,
    theta: AltForm,
    lambda: Scalar,
    integrability_residual: AltForm,
    torsion: Option<AltForm>,
}

impl G2Structure {
    pub fn new(algebra: LieAlgebra, forms: G2FormData) -> Self {
        let dphi = algebra.d(forms.phi());
        let dpsi = algebra.d(forms.psi());
        // θ = −⅓ *(*dφ ∧ φ)
        let theta = dphi
            .hodge()
            .wedge(forms.phi())
            .expect("degree 6")
            .hodge()
            .scale(&Scalar::frac(-1, 3));
        // λ = (1/6)⟨dφ, ψ⟩, with ⟨,⟩ the form inner product
        let lambda = &dphi.full_contract(forms.psi()).expect("degree 4") * &Scalar::frac(1, 144);
        let integrability_residual = &dpsi - &theta.wedge(forms.psi()).expect("degree 5");
        let torsion = integrability_residual.is_zero().then(|| {
            let a = -dphi.hodge();
            let b = theta.wedge(forms.phi()).expect("degree 4").hodge();
            &(&a + &b) + &forms.phi().scale(&lambda)
        });
        G2Structure {
            algebra,
            forms,
            dphi,
            dpsi,
            theta,
            lambda,
            integrability_residual,
            torsion,
        }
    }

    pub fn with_standard_phi(algebra: LieAlgebra) -> Self {
        Self::new(algebra, G2FormData::standard())
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn forms(&self) -> &G2FormData {
        &self.forms
    }

    pub fn phi(&self) -> &AltForm {
        self.forms.phi()
    }

    pub fn psi(&self) -> &AltForm {
        self.forms.psi()
    }

    pub fn dphi(&self) -> &AltForm {
        &self.dphi
    }

    pub fn dpsi(&self) -> &AltForm {
        &self.dpsi
    }

    /// Lee form `θ = −⅓ *(*dφ ∧ φ)`.
    pub fn lee_form(&self) -> &AltForm {
        &self.theta
    }

    pub fn lee_vector(&self) -> Vector {
        Vector::from_form(&self.theta)
    }

    /// `λ = (1/144) dφ_ijkl ψ_ijkl`, equivalently `(1/6) T_ijk φ_ijk`.
    pub fn type_constant(&self) -> &Scalar {
        &self.lambda
    }

    /// The pairing `(dφ, *φ) = 6λ`.
    pub fn dphi_psi_pairing(&self) -> Scalar {
        self.lambda.scale_int(6)
    }

    /// Coefficient of `dφ∧φ` against the volume form.
    pub fn dphi_wedge_phi(&self) -> Scalar {
        self.dphi.wedge(self.phi()).expect("degree 7").top_coeff()
    }

    /// `δφ`.
    pub fn codifferential_phi(&self) -> AltForm {
        self.algebra.codifferential(self.phi()).expect("degree 3")
    }

    /// `δψ`.
    pub fn codifferential_psi(&self) -> AltForm {
        self.algebra.codifferential(self.psi()).expect("degree 4")
    }

    pub fn is_integrable(&self) -> bool {
        self.torsion.is_some()
    }

    /// `dψ − θ∧ψ`.
    pub fn integrability_residual(&self) -> &AltForm {
        &self.integrability_residual
    }

    /// `T = −*dφ + *(θ∧φ) + λφ`, defined for integrable structures.
    pub fn characteristic_torsion(&self) -> Result<&AltForm, StructureError> {
        self.torsion.as_ref().ok_or_else(|| StructureError::NotIntegrable {
            residual: self.integrability_residual.clone(),
        })
    }

    pub fn classify(&self) -> Classification {
        let psi = self.psi();
        let phi = self.phi();
        let dphi_zero = self.dphi.is_zero();
        let dpsi_zero = self.dpsi.is_zero();
        let integrable = self.is_integrable();
        let c = &self.dphi.full_contract(psi).expect("degree 4") * &Scalar::frac(1, 168);
        let nearly_parallel = dpsi_zero && !c.is_zero() && self.dphi == psi.scale(&c);
        let three_quarter = self.theta.wedge(phi).expect("degree 4").scale(&Scalar::frac(3, 4));
        let strict = self.dphi_wedge_phi().is_zero();
        Classification {
            parallel: dphi_zero && dpsi_zero,
            nearly_parallel,
            locally_conformally_parallel: integrable && self.dphi == three_quarter,
            cocalibrated: dpsi_zero,
            balanced: integrable && self.theta.is_zero(),
            integrable,
            strictly_integrable: integrable && strict,
            pure_w27: dpsi_zero && strict,
            constant_type: true,
            closed_lee_form: self.algebra.d(&self.theta).is_zero(),
        }
    }

    /// Levi-Civita connection of the identity metric, from the Koszul formula
    /// `Γ^g_ijk = ½(c^k_ij − c^i_jk + c^j_ki)`.
    pub fn levi_civita(&self) -> Connection {
        Connection::levi_civita(&self.algebra)
    }

    /// `Γ = Γ^g + ½T`, verified to preserve `g`, `φ`, `ψ` and to have torsion `T`.
    pub fn characteristic_connection(&self) -> Result<Connection, StructureError> {
        let t = Tensor::from_form(self.characteristic_torsion()?);
        let conn = Connection::new(&self.levi_civita().coefficients().clone() + &t.scale_frac(1, 2));
        if !conn.is_metric() {
            return Err(StructureError::Inconsistent(
                "characteristic connection is not metric".into(),
            ));
        }
        if !conn.nabla(self.forms.phi_tensor()).is_zero() {
            return Err(StructureError::Inconsistent(
                "∇φ ≠ 0 for an integrable structure".into(),
            ));
        }
        if !conn.nabla(self.forms.psi_tensor()).is_zero() {
            return Err(StructureError::Inconsistent(
                "∇ψ ≠ 0 for an integrable structure".into(),
            ));
        }
        if conn.torsion(&self.algebra) != t {
            return Err(StructureError::Inconsistent("connection torsion differs from T".into()));
        }
        Ok(conn)
    }

    /// Connections, curvature and derived tensors of an integrable structure.
    pub fn geometry(&self) -> Result<Geometry, StructureError> {
        Geometry::new(self)
    }
}
