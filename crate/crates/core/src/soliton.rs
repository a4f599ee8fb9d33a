//! Generalized steady Ricci solitons, the parallel vector field `V = θ − df`,
//! the Schrödinger potential and bi-G₂ pairs.

use thiserror::Error;

use crate::g2::G2FormData;
use crate::ledger::IdentityLedger;
use crate::lie::{vector_tensor, LieAlgebra};
use crate::multilinear::{einsum, AltForm, Tensor, Vector};
use crate::scalar::Scalar;
use crate::torsion::{G2Structure, Geometry, StructureError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolitonError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("torsion is not closed: dT = {dt}")]
    TorsionNotClosed { dt: AltForm },
}

/// Data `(X, B, df)` of a generalized steady Ricci soliton.
#[derive(Clone, Debug, PartialEq)]
pub struct SolitonData {
    pub x: Vector,
    pub b: AltForm,
    /// Gradient of the soliton function; zero for invariant functions.
    pub f_gradient: Vector,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolitonReport {
    pub data: SolitonData,
    pub ledger: IdentityLedger,
}

/// Outcome of the `V = θ − df` analysis.
#[derive(Clone, Debug, PartialEq)]
pub struct ParallelFieldReport {
    pub v: Vector,
    pub nabla_v: Tensor,
    pub parallel: bool,
    pub dtheta_is_v_into_t: bool,
    pub preserves_metric: bool,
    pub preserves_phi: bool,
    /// `∇V = 0` implies the three consequences above.
    pub implication_holds: bool,
    /// `Some(T = 0)` when `V = 0` on a strictly integrable structure with closed
    /// torsion. A nonzero torsion here is expected on non-compact models.
    pub vanishing_field_corollary: Option<bool>,
    pub ledger: IdentityLedger,
}

/// Two integrable structures with the same metric, the second built on the opposite algebra.
#[derive(Clone, Debug)]
pub struct BiG2Pair {
    pub first: G2Structure,
    pub second: G2Structure,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BiG2Report {
    pub torsion: AltForm,
    pub opposite_torsion: AltForm,
    pub same_metric: bool,
    pub opposite_torsions: bool,
    pub closed_torsion: bool,
    pub ledger: IdentityLedger,
}

impl BiG2Report {
    pub fn passes(&self) -> bool {
        self.ledger.all_pass()
    }
}

fn closed_geometry(s: &G2Structure) -> Result<Geometry, SolitonError> {
    let geo = s.geometry()?;
    if !geo.curvature.dt.is_zero() {
        return Err(SolitonError::TorsionNotClosed {
            dt: geo.curvature.dt.clone(),
        });
    }
    Ok(geo)
}

fn t2(torsion: &AltForm) -> Tensor {
    let tt = Tensor::from_form(torsion);
    einsum("ias,jas->ij", &[&tt, &tt])
}

/// The soliton with `X = θ`, `B = dθ − θ⌟T` carried by an integrable structure with closed torsion.
pub fn soliton_from_lee(s: &G2Structure) -> Result<SolitonReport, SolitonError> {
    let geo = closed_geometry(s)?;
    let x = s.lee_vector();
    let theta_t = geo.torsion.interior(&x).expect("degree 3");
    let b = &s.algebra().d(s.lee_form()) - &theta_t;
    let data = SolitonData {
        x,
        b,
        f_gradient: Vector::zero(),
    };
    let ledger = soliton_ledger(s.algebra(), &geo, &data);
    Ok(SolitonReport { data, ledger })
}

/// Residuals of `Ric^g = ¼T² − L_X g`, `δT = B`, `d(B + X⌟T) = 0`.
pub fn check_soliton(s: &G2Structure, data: &SolitonData) -> Result<IdentityLedger, SolitonError> {
    let geo = closed_geometry(s)?;
    Ok(soliton_ledger(s.algebra(), &geo, data))
}

fn soliton_ledger(alg: &LieAlgebra, geo: &Geometry, data: &SolitonData) -> IdentityLedger {
    let mut l = IdentityLedger::new();
    let ricci = &(&geo.curvature.ric_g - &t2(&geo.torsion).scale_frac(1, 4)) + &alg.lie_derivative_metric(&data.x);
    l.push_tensor("soliton_ricci_equation", "Ric^g = ¼T² − L_X g", &ricci);
    l.push_form(
        "soliton_codifferential_equation",
        "δT = B",
        &(&geo.curvature.delta_t - &data.b),
    );
    let x_t = geo.torsion.interior(&data.x).expect("degree 3");
    l.push_form("soliton_closed_two_form", "d(B + X⌟T) = 0", &alg.d(&(&data.b + &x_t)));
    l
}

/// Residuals of the gradient soliton equations written with the characteristic connection:
/// `Ric = −∇df`, `δT_ij = −df_s T_sij`, `dT = 0`.
pub fn check_gradient_soliton(s: &G2Structure, f_gradient: &Vector) -> Result<IdentityLedger, SolitonError> {
    let geo = closed_geometry(s)?;
    let mut l = IdentityLedger::new();
    let hess = geo.connection.nabla(&vector_tensor(f_gradient));
    l.push_tensor("gradient_soliton_ricci", "Ric = −∇df", &(&geo.curvature.ric + &hess));
    let df_t = geo.torsion.interior(f_gradient).expect("degree 3");
    l.push_form(
        "gradient_soliton_codifferential",
        "δT = −df⌟T",
        &(&geo.curvature.delta_t + &df_t),
    );
    l.push_form("gradient_soliton_closed_torsion", "dT = 0", &geo.curvature.dt);
    Ok(l)
}

/// Analysis of `V = θ − df`: parallelism and the infinitesimal automorphism properties.
pub fn parallel_field_check(s: &G2Structure, f_gradient: &Vector) -> Result<ParallelFieldReport, SolitonError> {
    let geo = closed_geometry(s)?;
    let alg = s.algebra();
    let v = Vector::from_form(&(s.lee_form() - &f_gradient.to_form()));
    let nabla_v = geo.connection.nabla(&vector_tensor(&v));
    let dtheta = &alg.d(s.lee_form()) - &geo.torsion.interior(&v).expect("degree 3");
    let lg = alg.lie_derivative_metric(&v);
    let lphi = alg.lie_derivative_form(&v, s.phi());

    let parallel = nabla_v.is_zero();
    let dtheta_is_v_into_t = dtheta.is_zero();
    let preserves_metric = lg.is_zero();
    let preserves_phi = lphi.is_zero();
    let implication_holds = !parallel || (dtheta_is_v_into_t && preserves_metric && preserves_phi);
    let vanishing_field_corollary = (v.is_zero() && s.classify().strictly_integrable).then(|| geo.torsion.is_zero());

    let mut l = IdentityLedger::new();
    l.push_tensor("parallel_field", "∇V = 0", &nabla_v);
    l.push_form("parallel_field_determines_dtheta", "dθ = V⌟T", &dtheta);
    l.push_tensor("parallel_field_is_killing", "L_V g = 0", &lg);
    l.push_form("parallel_field_preserves_phi", "L_V φ = 0", &lphi);
    l.push_condition(
        "parallel_field_consequences",
        "∇V = 0 ⇒ dθ = V⌟T, L_V g = 0, L_V φ = 0",
        implication_holds,
    );
    Ok(ParallelFieldReport {
        v,
        nabla_v,
        parallel,
        dtheta_is_v_into_t,
        preserves_metric,
        preserves_phi,
        implication_holds,
        vanishing_field_corollary,
        ledger: l,
    })
}

/// Both expressions `Scal^g − ‖T‖²/12` and `Scal + ‖T‖²/6` for the potential
/// of the Schrödinger operator `−4Δ + V`.
pub fn schrodinger_potential(s: &G2Structure) -> Result<(Scalar, Scalar), StructureError> {
    let geo = s.geometry()?;
    Ok(potential(&geo))
}

pub(crate) fn potential(geo: &Geometry) -> (Scalar, Scalar) {
    let norm = geo.torsion.norm_sq();
    let riemannian = &geo.curvature.scal_g - &(&norm * &Scalar::frac(1, 12));
    let characteristic = &geo.curvature.scal + &(&norm * &Scalar::frac(1, 6));
    (riemannian, characteristic)
}

impl BiG2Pair {
    pub fn new(first: G2Structure, second: G2Structure) -> Self {
        BiG2Pair { first, second }
    }

    /// The same forms on an algebra and on its opposite, modelling left- and
    /// right-invariant structures on one group.
    pub fn from_opposite(algebra: LieAlgebra, forms: G2FormData) -> Self {
        let second = G2Structure::new(algebra.opposite(), forms.clone());
        BiG2Pair {
            first: G2Structure::new(algebra, forms),
            second,
        }
    }

    /// Checks opposite closed torsions for two structures with the same metric.
    pub fn check(&self) -> Result<BiG2Report, StructureError> {
        let t = self.first.characteristic_torsion()?.clone();
        let t_opp = self.second.characteristic_torsion()?.clone();
        // both form data are validated against the identity metric at construction
        let same_metric = self.first.forms().induced_metric() == self.second.forms().induced_metric();
        let sum = &t + &t_opp;
        let dt = self.first.algebra().d(&t);
        let dt_opp = self.second.algebra().d(&t_opp);
        let mut l = IdentityLedger::new();
        l.push_condition("bi_g2_same_metric", "g = g̃", same_metric);
        l.push_form("bi_g2_opposite_torsion", "T̃ = −T", &sum);
        l.push_form("bi_g2_closed_torsion", "dT = 0", &dt);
        l.push_form("bi_g2_closed_opposite_torsion", "dT̃ = 0", &dt_opp);
        Ok(BiG2Report {
            opposite_torsions: sum.is_zero(),
            closed_torsion: dt.is_zero() && dt_opp.is_zero(),
            torsion: t,
            opposite_torsion: t_opp,
            same_metric,
            ledger: l,
        })
    }
}
