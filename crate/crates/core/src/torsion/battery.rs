use super::{G2Structure, Geometry, StructureError};
use crate::ledger::IdentityLedger;
use crate::multilinear::{einsum, AltForm, Tensor};
use crate::scalar::Scalar;

fn t(f: &AltForm) -> Tensor {
    Tensor::from_form(f)
}

fn frac(n: i64, d: i64) -> Scalar {
    Scalar::frac(n, d)
}

/// Cyclic sum `A_xyzv + A_yzxv + A_zxyv` over the first three slots.
fn cyclic3(a: &Tensor) -> Tensor {
    &(a + &einsum("yzxv->xyzv", &[a])) + &einsum("zxyv->xyzv", &[a])
}

/// Curvature symmetry properties and the equivalences relating them to the torsion.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryReport {
    /// `R_ijkl = R_klij`.
    pub pairs_symmetry: bool,
    /// `R_xyzv + R_yzxv + R_zxyv = 0`.
    pub riemannian_first_bianchi: bool,
    /// `∇T` is totally skew.
    pub nabla_torsion_is_four_form: bool,
    /// `dT = 4∇^g T`.
    pub dt_is_four_lc_nabla_torsion: bool,
    /// `dT = −2∇T = ⅔σ^T`.
    pub torsion_bianchi_chain: bool,
    pub ricci_vanishes: bool,
    pub ledger: IdentityLedger,
}

/// Consequences of `dT = 0` that survive on homogeneous spaces.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedTorsionReport {
    pub closed_torsion: bool,
    /// `Ric = −∇θ`.
    pub ricci_is_minus_nabla_theta: bool,
    pub ricci_vanishes: bool,
    pub nabla_theta_vanishes: bool,
    pub delta_theta_vanishes: bool,
    pub scal_vanishes: bool,
    pub ledger: IdentityLedger,
}

impl G2Structure {
    /// Every curvature and torsion identity for the characteristic connection,
    /// each recorded as an exact residual.
    pub fn identity_battery(&self) -> Result<IdentityLedger, StructureError> {
        let geo = self.geometry()?;
        Ok(battery(self, &geo))
    }

    pub fn symmetry_checks(&self) -> Result<SymmetryReport, StructureError> {
        Ok(symmetry(&self.geometry()?))
    }

    pub fn closed_torsion_checks(&self) -> Result<ClosedTorsionReport, StructureError> {
        let geo = self.geometry()?;
        Ok(closed_torsion(self, &geo))
    }
}

pub(crate) fn battery(s: &G2Structure, geo: &Geometry) -> IdentityLedger {
    let mut l = IdentityLedger::new();
    let alg = s.algebra();
    let phi = s.forms().phi_tensor();
    let psi = s.forms().psi_tensor();
    let lambda = s.type_constant();
    let pairing = s.dphi_psi_pairing();
    let theta_f = s.lee_form();
    let theta = t(theta_f);
    let tf = &geo.torsion;
    let tt = t(tf);
    let cv = &geo.curvature;
    let nt = &geo.nabla_torsion;
    let ntg = &geo.lc_nabla_torsion;
    let r = &cv.r;
    let dt = t(&cv.dt);
    let sigma = t(&cv.sigma);
    let delta_t = t(&cv.delta_t);
    let nth = &geo.nabla_theta;
    let norm_t = tt.norm_sq();
    let norm_theta = theta.norm_sq();
    let delta_theta = alg.codifferential(theta_f).expect("degree 1").constant_value();
    let delta_psi_f = s.codifferential_psi();
    let delta_psi = t(&delta_psi_f);
    let norm_delta_psi = delta_psi.norm_sq();
    let lambda_sq = lambda * lambda;
    let pairing_sq = &pairing * &pairing;

    // torsion data and its alternative expressions
    l.push_form("integrability", "dψ = θ∧ψ", s.integrability_residual());
    l.push_tensor(
        "lee_form_from_torsion",
        "θ_i = (1/6) T_jkl ψ_jkli",
        &(&theta - &einsum("jkl,jkli->i", &[&tt, psi]).scale_frac(1, 6)),
    );
    l.push_scalar(
        "type_constant_from_torsion",
        "λ = (1/6) T_klm φ_klm",
        &(lambda - &(einsum("klm,klm->", &[&tt, phi]).value() * &frac(1, 6))),
    );
    let theta_psi = s.psi().interior(&s.lee_vector()).expect("degree 4");
    let via_codiff = &(&(-&delta_psi_f) - &theta_psi) + &s.phi().scale(lambda);
    l.push_form("torsion_via_codifferential", "T = −δψ − θ⌟ψ + λφ", &(tf - &via_codiff));
    let c27 = &(&delta_psi_f + &theta_psi.scale(&frac(3, 4))) - &s.phi().scale(&(lambda * &frac(6, 7)));
    let p = s.forms().project3(&delta_psi_f);
    l.push_form(
        "codifferential_psi_27_component",
        "(δψ)_27 = δψ + ¾ θ⌟ψ − (6/7) λφ",
        &(&p.twenty_seven - &c27),
    );
    let a = -&p.twenty_seven;
    let b = theta_psi.scale(&frac(-1, 4));
    let c = s.phi().scale(&(lambda * &frac(1, 7)));
    l.push_form(
        "torsion_decomposition",
        "T = −(δψ)_27 − ¼ θ⌟ψ + (1/7) λφ",
        &(tf - &(&(&a + &b) + &c)),
    );
    let mut ortho = Tensor::zeros(1);
    ortho.set(&[0], a.full_contract(&b).expect("degree 3"));
    ortho.set(&[1], a.full_contract(&c).expect("degree 3"));
    ortho.set(&[2], b.full_contract(&c).expect("degree 3"));
    l.push_tensor(
        "torsion_components_orthogonal",
        "(δψ)_27, θ⌟ψ and φ are pairwise orthogonal",
        &ortho,
    );
    l.push_scalar(
        "torsion_norm_by_components",
        "‖T‖² = ‖(δψ)_27‖² + (3/2)‖θ‖² + (1/42)(dφ,ψ)²",
        &(&norm_t - &(&(&p.twenty_seven.norm_sq() + &(&norm_theta * &frac(3, 2))) + &(&pairing_sq * &frac(1, 42)))),
    );
    l.push_scalar(
        "torsion_norm_by_codifferential",
        "‖T‖² = ‖δψ‖² − 12‖θ‖² − (5/6)(dφ,ψ)²",
        &(&norm_t - &(&(&norm_delta_psi - &norm_theta.scale_int(12)) - &(&pairing_sq * &frac(5, 6)))),
    );

    // general identities for a metric connection with skew torsion
    let dh = &(&(&cyclic3(nt) + &sigma.scale_frac(2, 1)) - &einsum("vxyz->xyzv", &[nt])) - &dt;
    l.push_tensor(
        "exterior_derivative_of_torsion",
        "dT_xyzv = ∇_xT_yzv + ∇_yT_zxv + ∇_zT_xyv + 2σ_xyzv − ∇_vT_xyz",
        &dh,
    );
    l.push_tensor(
        "levi_civita_derivative_of_torsion",
        "∇^g T = ∇T + ½σ^T",
        &(&(ntg - nt) - &sigma.scale_frac(1, 2)),
    );
    let cyc = cyclic3(r);
    let nt_last = einsum("vxyz->xyzv", &[nt]);
    l.push_tensor(
        "first_bianchi",
        "R_xyzv + R_yzxv + R_zxyv = dT − σ^T + ∇_vT_xyz",
        &(&cyc - &(&(&dt - &sigma) + &nt_last)),
    );
    let last = &(&einsum("vxyz->xyzv", &[r]) + &einsum("vyzx->xyzv", &[r])) + &einsum("vzxy->xyzv", &[r]);
    l.push_tensor(
        "bianchi_mixed_cycle",
        "cyclic R_xyzv − (R_vxyz + R_vyzx + R_vzxy) = (3/2) dT − σ^T",
        &(&(&cyc - &last) - &(&dt.scale_frac(3, 2) - &sigma)),
    );
    l.push_tensor(
        "bianchi_fixed_first_slot",
        "R_vxyz + R_vyzx + R_vzxy = −½ dT_xyzv + ∇_vT_xyz",
        &(&last - &(&dt.scale_frac(-1, 2) + &nt_last)),
    );
    let t2 = einsum("ias,jas->ij", &[&tt, &tt]);
    l.push_tensor(
        "ricci_levi_civita_relation",
        "Ric^g = Ric + ½δT + ¼ T_ias T_jas",
        &(&cv.ric_g - &(&(&cv.ric + &delta_t.scale_frac(1, 2)) + &t2.scale_frac(1, 4))),
    );
    l.push_scalar(
        "scalar_levi_civita_relation",
        "Scal^g = Scal + ¼‖T‖²",
        &(&cv.scal_g - &(&cv.scal + &(&norm_t * &frac(1, 4)))),
    );
    l.push_tensor(
        "ricci_antisymmetric_part",
        "Ric − Ricᵀ = −δT",
        &(&(&cv.ric - &cv.ric.transpose()) + &delta_t),
    );

    // curvature of a G2 connection
    l.push_tensor(
        "curvature_annihilates_phi",
        "R_ijab φ_abk = 0",
        &einsum("ijab,abk->ijk", &[r, phi]),
    );
    l.push_tensor(
        "curvature_on_psi",
        "R_ijab ψ_abkl = −2 R_ijkl",
        &(&einsum("ijab,abkl->ijkl", &[r, psi]) + &r.scale_frac(2, 1)),
    );
    l.push_tensor(
        "ricci_via_curvature_on_psi",
        "2 Ric_ij = R_iabc ψ_jabc",
        &(&cv.ric.scale_frac(2, 1) - &einsum("iabc,jabc->ij", &[r, psi])),
    );
    l.push_tensor(
        "ricci_via_torsion",
        "Ric_ij = (1/12) dT_iabc ψ_jabc − ∇_iθ_j",
        &(&cv.ric - &(&einsum("iabc,jabc->ij", &[&dt, psi]).scale_frac(1, 12) - nth)),
    );
    let scal_rhs = &(&(&delta_theta.scale_int(3) + &norm_theta.scale_int(2)) - &(&norm_t * &frac(1, 3)))
        + &(&pairing_sq * &frac(1, 18));
    l.push_scalar(
        "scalar_curvature_formula",
        "Scal = 3δθ + 2‖θ‖² − ⅓‖T‖² + (1/18)(dφ,ψ)²",
        &(&cv.scal - &scal_rhs),
    );
    let scal_rhs2 = &(&(&delta_theta.scale_int(3) + &norm_theta.scale_int(6)) - &(&norm_delta_psi * &frac(1, 3)))
        + &(&pairing_sq * &frac(1, 3));
    l.push_scalar(
        "scalar_curvature_via_codifferential",
        "Scal = 3δθ + 6‖θ‖² − ⅓‖δψ‖² + ⅓(dφ,ψ)²",
        &(&cv.scal - &scal_rhs2),
    );
    let scal_g_rhs = &(&(&delta_theta.scale_int(3) + &norm_theta.scale_int(2)) - &(&norm_t * &frac(1, 12)))
        + &(&pairing_sq * &frac(1, 18));
    l.push_scalar(
        "levi_civita_scalar_curvature",
        "Scal^g = 3δθ + 2‖θ‖² − (1/12)‖T‖² + (1/18)(dφ,ψ)²",
        &(&cv.scal_g - &scal_g_rhs),
    );
    l.push_tensor(
        "torsion_derivative_against_phi",
        "dT_iabc φ_abc + 2 ∇_iT_abc φ_abc = 0",
        &(&einsum("iabc,abc->i", &[&dt, phi]) + &einsum("iabc,abc->i", &[nt, phi]).scale_frac(2, 1)),
    );
    let sigma_psi = einsum("jabc,jabc->", &[&sigma, psi]).value().clone();
    l.push_scalar(
        "sigma_against_psi",
        "σ^T_jabc ψ_jabc = −2‖T‖² + 12‖θ‖² + 12λ²",
        &(&sigma_psi - &(&(&norm_t.scale_int(-2) + &norm_theta.scale_int(12)) + &lambda_sq.scale_int(12))),
    );
    let dt_psi = einsum("jabc,jabc->", &[&dt, psi]).value().clone();
    let nt_psi = einsum("jabc,jabc->", &[nt, psi]).value().clone();
    l.push_scalar(
        "torsion_derivative_against_psi",
        "dT_jabc ψ_jabc = 4 ∇_jT_abc ψ_jabc + 2 σ^T_jabc ψ_jabc",
        &(&dt_psi - &(&nt_psi.scale_int(4) + &sigma_psi.scale_int(2))),
    );
    let g22b =
        &(&(&delta_theta.scale_int(24) - &norm_t.scale_int(4)) + &norm_theta.scale_int(24)) + &lambda_sq.scale_int(24);
    l.push_scalar(
        "torsion_derivative_against_psi_closed_form",
        "dT_jabc ψ_jabc = 24δθ − 4‖T‖² + 24‖θ‖² + 24λ²",
        &(&dt_psi - &g22b),
    );
    let g22c = &(&(&delta_theta.scale_int(24) - &norm_delta_psi.scale_int(4)) + &norm_theta.scale_int(72))
        + &pairing_sq.scale_int(4);
    l.push_scalar(
        "torsion_derivative_against_psi_via_codifferential",
        "dT_jabc ψ_jabc = 24δθ − 4‖δψ‖² + 72‖θ‖² + 4(dφ,ψ)²",
        &(&dt_psi - &g22c),
    );
    l.push_tensor(
        "codifferential_of_torsion",
        "δT = ∇θ − (∇θ)ᵀ (since dλ = 0)",
        &(&delta_t - &(nth - &nth.transpose())),
    );

    // second Bianchi identity and its divergence consequence
    let n_ric = geo.connection.nabla(&cv.ric);
    let e1 = &(&einsum("iji->j", &[&n_ric]).scale_frac(-2, 1) + &einsum("ab,abj->j", &[&delta_t, &tt]))
        + &einsum("abc,jabc->j", &[&tt, &dt]).scale_frac(1, 6);
    l.push_tensor(
        "second_bianchi_contracted",
        "−2 ∇_iRic_ji + δT_ab T_abj + (1/6) T_abc dT_jabc = 0",
        &e1,
    );
    let n_delta_t = geo.connection.nabla(&delta_t);
    l.push_tensor(
        "divergence_of_codifferential_torsion",
        "∇_i δT_ij = ½ δT_ia T_iaj",
        &(&einsum("iij->j", &[&n_delta_t]) - &einsum("ia,iaj->j", &[&delta_t, &tt]).scale_frac(1, 2)),
    );
    l.push_form(
        "sigma_definition",
        "σ^T_abcd = T_abs T_cds + T_bcs T_ads + T_cas T_bds",
        &(&cv.sigma
            - &(&(&einsum("abs,cds->abcd", &[&tt, &tt]) + &einsum("bcs,ads->abcd", &[&tt, &tt]))
                + &einsum("cas,bds->abcd", &[&tt, &tt]))
                .to_form_unchecked()),
    );
    l
}

fn symmetry(geo: &Geometry) -> SymmetryReport {
    let cv = &geo.curvature;
    let r = &cv.r;
    let nt = &geo.nabla_torsion;
    let dt = t(&cv.dt);
    let sigma = t(&cv.sigma);
    let pairs_symmetry = (r - &einsum("zvxy->xyzv", &[r])).is_zero();
    let riemannian_first_bianchi = cyclic3(r).is_zero();
    let nabla_torsion_is_four_form = (nt + &einsum("yxzv->xyzv", &[nt])).is_zero();
    let dt_is_four_lc_nabla_torsion = (&dt - &geo.lc_nabla_torsion.scale_frac(4, 1)).is_zero();
    let torsion_bianchi_chain = (&dt + &nt.scale_frac(2, 1)).is_zero() && (&dt - &sigma.scale_frac(2, 3)).is_zero();
    let ricci_vanishes = cv.ric.is_zero();

    let mut ledger = IdentityLedger::new();
    ledger.push_condition(
        "pairs_symmetry_iff_nabla_torsion_four_form",
        "R_ijkl = R_klij ⇔ ∇T is a 4-form",
        pairs_symmetry == nabla_torsion_is_four_form,
    );
    ledger.push_condition(
        "nabla_torsion_four_form_iff_dt_four_lc",
        "∇T is a 4-form ⇔ dT = 4∇^g T",
        nabla_torsion_is_four_form == dt_is_four_lc_nabla_torsion,
    );
    ledger.push_condition(
        "riemannian_bianchi_iff_torsion_chain",
        "cyclic R = 0 ⇔ dT = −2∇T = ⅔σ^T",
        riemannian_first_bianchi == torsion_bianchi_chain,
    );
    ledger.push_condition(
        "riemannian_bianchi_implies_pairs_symmetry",
        "cyclic R = 0 ⇒ R_ijkl = R_klij",
        !riemannian_first_bianchi || pairs_symmetry,
    );
    ledger.push_condition(
        "riemannian_bianchi_implies_ricci_flat",
        "cyclic R = 0 ⇒ Ric = 0",
        !riemannian_first_bianchi || ricci_vanishes,
    );
    SymmetryReport {
        pairs_symmetry,
        riemannian_first_bianchi,
        nabla_torsion_is_four_form,
        dt_is_four_lc_nabla_torsion,
        torsion_bianchi_chain,
        ricci_vanishes,
        ledger,
    }
}

fn closed_torsion(s: &G2Structure, geo: &Geometry) -> ClosedTorsionReport {
    let cv = &geo.curvature;
    let nth = &geo.nabla_theta;
    let closed = cv.dt.is_zero();
    let ricci_is_minus_nabla_theta = (&cv.ric + nth).is_zero();
    let ricci_vanishes = cv.ric.is_zero();
    let nabla_theta_vanishes = nth.is_zero();
    let delta_theta = s
        .algebra()
        .codifferential(s.lee_form())
        .expect("degree 1")
        .constant_value();
    let delta_theta_vanishes = delta_theta.is_zero();
    let scal_vanishes = cv.scal.is_zero();

    let mut ledger = IdentityLedger::new();
    ledger.push_condition(
        "closed_torsion_iff_ricci_minus_nabla_theta",
        "dT = 0 ⇔ Ric = −∇θ",
        closed == ricci_is_minus_nabla_theta,
    );
    if closed {
        ledger.push_tensor("closed_torsion_ricci", "Ric = −∇θ", &(&cv.ric + nth));
        ledger.push_scalar(
            "closed_torsion_scalar_curvature",
            "Scal = δθ",
            &(&cv.scal - &delta_theta),
        );
        ledger.push_condition(
            "closed_torsion_ricci_flat_iff_parallel_lee_form",
            "given dT = 0: Ric = 0 ⇔ ∇θ = 0",
            ricci_vanishes == nabla_theta_vanishes,
        );
        if ricci_vanishes {
            ledger.push_tensor("ricci_flat_parallel_lee_form", "∇θ = 0", nth);
            ledger.push_scalar("ricci_flat_coclosed_lee_form", "δθ = 0", &delta_theta);
            ledger.push_scalar("ricci_flat_scalar_curvature", "Scal = 0", &cv.scal);
        }
    }
    ClosedTorsionReport {
        closed_torsion: closed,
        ricci_is_minus_nabla_theta,
        ricci_vanishes,
        nabla_theta_vanishes,
        delta_theta_vanishes,
        scal_vanishes,
        ledger,
    }
}
