use super::{G2Structure, StructureError};
use crate::lie::LieAlgebra;
use crate::multilinear::{einsum, AltForm, Tensor, DIM};
use crate::scalar::Scalar;

/// Left-invariant connection with `Γ_ijk = g(∇_{e_i} e_j, e_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    gamma: Tensor,
}

const SLOTS: [char; 6] = ['a', 'b', 'c', 'd', 'e', 'f'];

impl Connection {
    pub fn new(gamma: Tensor) -> Self {
        assert_eq!(gamma.rank(), 3, "connection coefficients form a rank-3 array");
        Connection { gamma }
    }

    pub fn levi_civita(algebra: &LieAlgebra) -> Self {
        let c = algebra.structure_constants();
        let g = (&(c - &einsum("jki->ijk", &[c])) + &einsum("kij->ijk", &[c])).scale_frac(1, 2);
        Connection::new(g)
    }

    pub fn coefficients(&self) -> &Tensor {
        &self.gamma
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.is_zero()
    }

    /// `Γ_ijk = −Γ_ikj`, i.e. `∇g = 0`.
    pub fn is_metric(&self) -> bool {
        (&self.gamma + &einsum("ikj->ijk", &[&self.gamma])).is_zero()
    }

    /// Covariant derivative of an invariant covariant tensor:
    /// `(∇_i A)_{j_1…j_r} = −Σ_m Γ_{i j_m s} A_{j_1…s…j_r}`.
    pub fn nabla(&self, a: &Tensor) -> Tensor {
        let r = a.rank();
        assert!(r < SLOTS.len(), "rank {r} too large");
        let target: String = std::iter::once('i').chain(SLOTS[..r].iter().copied()).collect();
        let mut out = Tensor::zeros(r + 1);
        for (m, slot) in SLOTS[..r].iter().enumerate() {
            let src: String = SLOTS[..r]
                .iter()
                .enumerate()
                .map(|(k, &l)| if k == m { 's' } else { l })
                .collect();
            let spec = format!("i{slot}s,{src}->{target}");
            out = &out - &einsum(&spec, &[&self.gamma, a]);
        }
        out
    }

    /// `T_ijk = Γ_ijk − Γ_jik − c^k_ij`.
    pub fn torsion(&self, algebra: &LieAlgebra) -> Tensor {
        &(&self.gamma - &einsum("jik->ijk", &[&self.gamma])) - algebra.structure_constants()
    }

    /// `R_ijkl = Γ_jks Γ_isl − Γ_iks Γ_jsl − c^s_ij Γ_skl`, so that
    /// `R(X,Y)Z = [∇_X,∇_Y]Z − ∇_[X,Y]Z` and `R_ijkl = g(R(e_i,e_j)e_k, e_l)`.
    pub fn curvature(&self, algebra: &LieAlgebra) -> Tensor {
        let g = &self.gamma;
        let a = einsum("jks,isl->ijkl", &[g, g]);
        let b = einsum("iks,jsl->ijkl", &[g, g]);
        let c = einsum("ijs,skl->ijkl", &[algebra.structure_constants(), g]);
        &(&a - &b) - &c
    }
}

/// Curvature data of the characteristic connection, with the Levi-Civita
/// Ricci tensor alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curvature {
    pub r: Tensor,
    /// `Ric_ij = Σ_a R_aija`.
    pub ric: Tensor,
    pub scal: Scalar,
    pub r_g: Tensor,
    pub ric_g: Tensor,
    pub scal_g: Scalar,
    /// `σ^T = ½ Σ_j (e_j⌟T)∧(e_j⌟T)`.
    pub sigma: AltForm,
    pub dt: AltForm,
    pub delta_t: AltForm,
}

impl Curvature {
    pub fn new(algebra: &LieAlgebra, conn: &Connection, lc: &Connection, torsion: &AltForm) -> Self {
        let r = conn.curvature(algebra);
        let ric = einsum("aija->ij", &[&r]);
        let scal = ric.trace();
        let r_g = lc.curvature(algebra);
        let ric_g = einsum("aija->ij", &[&r_g]);
        let scal_g = ric_g.trace();
        Curvature {
            r,
            ric,
            scal,
            r_g,
            ric_g,
            scal_g,
            sigma: sigma_form(torsion),
            dt: algebra.d(torsion),
            delta_t: algebra.codifferential(torsion).expect("degree 3"),
        }
    }

    pub fn is_flat(&self) -> bool {
        self.r.is_zero()
    }
}

pub(crate) fn sigma_form(torsion: &AltForm) -> AltForm {
    let mut out = AltForm::zero(4);
    for j in 1..=DIM {
        let a = torsion.interior_basis(j).expect("degree 3");
        out = &out + &a.wedge(&a).expect("degree 4");
    }
    out.scale(&Scalar::frac(1, 2))
}

/// Everything the identity battery and soliton checks consume, computed once.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub connection: Connection,
    pub levi_civita: Connection,
    pub torsion: AltForm,
    pub curvature: Curvature,
    /// `(∇_x T)_{yzv}` at `[x, y, z, v]`.
    pub nabla_torsion: Tensor,
    pub lc_nabla_torsion: Tensor,
    /// `(∇_i θ)_j` at `[i, j]`.
    pub nabla_theta: Tensor,
}

impl Geometry {
    pub(super) fn new(s: &G2Structure) -> Result<Self, StructureError> {
        let connection = s.characteristic_connection()?;
        let levi_civita = s.levi_civita();
        let torsion = s.characteristic_torsion()?.clone();
        let t = Tensor::from_form(&torsion);
        let curvature = Curvature::new(s.algebra(), &connection, &levi_civita, &torsion);
        Ok(Geometry {
            nabla_torsion: connection.nabla(&t),
            lc_nabla_torsion: levi_civita.nabla(&t),
            nabla_theta: connection.nabla(&Tensor::from_form(s.lee_form())),
            connection,
            levi_civita,
            torsion,
            curvature,
        })
    }

    pub fn torsion_tensor(&self) -> Tensor {
        Tensor::from_form(&self.torsion)
    }
}
