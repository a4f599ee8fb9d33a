//! Analysis reports and their JSON and markdown renderings.

use std::fmt::Write as _;

use g2forge_core::soliton::{check_gradient_soliton, parallel_field_check, schrodinger_potential, soliton_from_lee};
use g2forge_core::{AltForm, BiG2Pair, Classification, IdentityLedger, LedgerEntry, StructureError, Vector, DIM};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::input::{Loaded, Pairing};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Mode {
    Exact,
    /// Residuals are still computed exactly; a ledger entry passes when its
    /// residual norm, rounded to `f64`, is at most the tolerance.
    Float {
        tol: f64,
    },
}

impl Mode {
    fn passes(&self, entry: &LedgerEntry) -> bool {
        match self {
            Mode::Exact => entry.pass,
            Mode::Float { tol } => entry.passes_within(*tol),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("the structure is not integrable; dψ − θ∧ψ = {0}")]
    NotIntegrable(String),
    #[error("internal consistency violation: {0}")]
    Inconsistent(String),
}

impl From<StructureError> for AnalysisError {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::NotIntegrable { residual } => AnalysisError::NotIntegrable(residual.to_string()),
            StructureError::Inconsistent(msg) => AnalysisError::Inconsistent(msg),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub idx: Vec<usize>,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormView {
    pub display: String,
    pub terms: Vec<Term>,
}

impl From<&AltForm> for FormView {
    fn from(f: &AltForm) -> Self {
        FormView {
            display: f.to_string(),
            terms: f
                .terms()
                .map(|(idx, c)| Term {
                    idx: idx.indices(),
                    c: c.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationView {
    pub parallel: bool,
    pub nearly_parallel: bool,
    pub locally_conformally_parallel: bool,
    pub cocalibrated: bool,
    pub balanced: bool,
    pub integrable: bool,
    pub strictly_integrable: bool,
    pub pure_w27: bool,
    pub constant_type: bool,
    pub closed_lee_form: bool,
}

impl From<Classification> for ClassificationView {
    fn from(c: Classification) -> Self {
        ClassificationView {
            parallel: c.parallel,
            nearly_parallel: c.nearly_parallel,
            locally_conformally_parallel: c.locally_conformally_parallel,
            cocalibrated: c.cocalibrated,
            balanced: c.balanced,
            integrable: c.integrable,
            strictly_integrable: c.strictly_integrable,
            pure_w27: c.pure_w27,
            constant_type: c.constant_type,
            closed_lee_form: c.closed_lee_form,
        }
    }
}

impl ClassificationView {
    fn rows(&self) -> [(&'static str, bool); 10] {
        [
            ("parallel", self.parallel),
            ("nearly_parallel", self.nearly_parallel),
            ("locally_conformally_parallel", self.locally_conformally_parallel),
            ("cocalibrated", self.cocalibrated),
            ("balanced", self.balanced),
            ("integrable", self.integrable),
            ("strictly_integrable", self.strictly_integrable),
            ("pure_w27", self.pure_w27),
            ("constant_type", self.constant_type),
            ("closed_lee_form", self.closed_lee_form),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Norms {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion_sq: Option<String>,
    pub theta_sq: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryFlags {
    pub pairs_symmetry: bool,
    pub riemannian_first_bianchi: bool,
    pub nabla_torsion_is_four_form: bool,
    pub dt_is_four_lc_nabla_torsion: bool,
    pub torsion_bianchi_chain: bool,
    pub ricci_is_minus_nabla_theta: bool,
    pub nabla_theta_vanishes: bool,
    pub delta_theta_vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureSummary {
    pub ricci: Vec<Vec<String>>,
    pub scal: String,
    pub scal_levi_civita: String,
    pub flat: bool,
    pub connection_vanishes: bool,
    pub closed_torsion: bool,
    pub coclosed_torsion: bool,
    pub symmetry: SymmetryFlags,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParallelFieldView {
    pub v: String,
    pub parallel: bool,
    pub dtheta_is_v_into_t: bool,
    pub preserves_metric: bool,
    pub preserves_phi: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vanishing_field_corollary: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolitonSection {
    pub x: String,
    pub b: String,
    pub potential_levi_civita: String,
    pub potential_characteristic: String,
    /// The gradient soliton equations hold with constant `f`.
    pub gradient_with_constant_function: bool,
    pub parallel_field: ParallelFieldView,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiG2Section {
    pub torsion: String,
    pub opposite_torsion: String,
    pub same_metric: bool,
    pub opposite_torsions: bool,
    pub closed_torsion: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LedgerRow {
    pub name: String,
    pub statement: String,
    pub residual_sq: String,
    pub residual_norm: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub classification: ClassificationView,
    pub theta: FormView,
    pub lambda: String,
    pub dphi_wedge_phi: String,
    pub codifferential_phi: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion: Option<FormView>,
    pub norms: Norms,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curvature: Option<CurvatureSummary>,
    pub identity_ledger: Vec<LedgerRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub soliton: Option<SolitonSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bi_g2: Option<BiG2Section>,
    pub verdict: String,
}

impl Report {
    pub fn passes(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn ledger_entry(&self, name: &str) -> Option<&LedgerRow> {
        self.identity_ledger.iter().find(|r| r.name == name)
    }
}

pub fn ledger_rows(ledger: &IdentityLedger, mode: Mode) -> Vec<LedgerRow> {
    ledger
        .entries()
        .iter()
        .map(|e| LedgerRow {
            name: e.name.clone(),
            statement: e.statement.clone(),
            residual_sq: e.residual_sq.to_string(),
            residual_norm: e.residual_norm_f64(),
            pass: mode.passes(e),
        })
        .collect()
}

/// The identity battery alone, for an integrable structure.
pub fn battery(loaded: &Loaded, mode: Mode) -> Result<Vec<LedgerRow>, AnalysisError> {
    let ledger = loaded.structure().identity_battery()?;
    Ok(ledger_rows(&ledger, mode))
}

/// Full analysis. Non-integrable structures yield a failing report rather than an error.
pub fn analyze(loaded: &Loaded, mode: Mode) -> Result<Report, AnalysisError> {
    let s = loaded.structure();
    let mut ledger = IdentityLedger::new();
    let mut torsion = None;
    let mut curvature = None;
    let mut soliton = None;
    let mut bi_g2 = None;
    let mut torsion_sq = None;

    if !s.is_integrable() {
        ledger.push_form("integrability", "dψ = θ∧ψ", s.integrability_residual());
    } else {
        let geo = s.geometry()?;
        ledger.extend(s.identity_battery()?);
        let sym = s.symmetry_checks()?;
        let closed = s.closed_torsion_checks()?;
        ledger.extend(sym.ledger.clone());
        ledger.extend(closed.ledger.clone());
        let (pot_g, pot) = schrodinger_potential(&s)?;
        ledger.push_scalar(
            "schrodinger_potentials_agree",
            "Scal^g − ‖T‖²/12 = Scal + ‖T‖²/6",
            &(&pot_g - &pot),
        );

        let cv = &geo.curvature;
        curvature = Some(CurvatureSummary {
            ricci: (0..DIM)
                .map(|i| (0..DIM).map(|j| cv.ric.get(&[i, j]).to_string()).collect())
                .collect(),
            scal: cv.scal.to_string(),
            scal_levi_civita: cv.scal_g.to_string(),
            flat: cv.is_flat(),
            connection_vanishes: geo.connection.is_zero(),
            closed_torsion: cv.dt.is_zero(),
            coclosed_torsion: cv.delta_t.is_zero(),
            symmetry: SymmetryFlags {
                pairs_symmetry: sym.pairs_symmetry,
                riemannian_first_bianchi: sym.riemannian_first_bianchi,
                nabla_torsion_is_four_form: sym.nabla_torsion_is_four_form,
                dt_is_four_lc_nabla_torsion: sym.dt_is_four_lc_nabla_torsion,
                torsion_bianchi_chain: sym.torsion_bianchi_chain,
                ricci_is_minus_nabla_theta: closed.ricci_is_minus_nabla_theta,
                nabla_theta_vanishes: closed.nabla_theta_vanishes,
                delta_theta_vanishes: closed.delta_theta_vanishes,
            },
        });
        torsion_sq = Some(geo.torsion.norm_sq().to_string());
        torsion = Some(FormView::from(&geo.torsion));

        if cv.dt.is_zero() {
            let lee = soliton_from_lee(&s).map_err(|e| AnalysisError::Inconsistent(e.to_string()))?;
            ledger.extend(lee.ledger);
            let gradient =
                check_gradient_soliton(&s, &Vector::zero()).map_err(|e| AnalysisError::Inconsistent(e.to_string()))?;
            let pf =
                parallel_field_check(&s, &Vector::zero()).map_err(|e| AnalysisError::Inconsistent(e.to_string()))?;
            // ∇θ = 0 is not forced, only its consequences
            if let Some(entry) = pf.ledger.get("parallel_field_consequences") {
                let mut one = IdentityLedger::new();
                one.push_condition(&entry.name, &entry.statement, entry.pass);
                ledger.extend(one);
            }
            soliton = Some(SolitonSection {
                x: lee.data.x.to_form().to_string(),
                b: lee.data.b.to_string(),
                potential_levi_civita: pot_g.to_string(),
                potential_characteristic: pot.to_string(),
                gradient_with_constant_function: gradient.all_pass(),
                parallel_field: ParallelFieldView {
                    v: pf.v.to_form().to_string(),
                    parallel: pf.parallel,
                    dtheta_is_v_into_t: pf.dtheta_is_v_into_t,
                    preserves_metric: pf.preserves_metric,
                    preserves_phi: pf.preserves_phi,
                    vanishing_field_corollary: pf.vanishing_field_corollary.map(|flat| {
                        if flat {
                            "torsion vanishes"
                        } else {
                            "not applicable to the group model: torsion is nonzero"
                        }
                        .to_string()
                    }),
                },
            });
        }
    }

    if loaded.spec.pairing == Some(Pairing::Opposite) {
        match BiG2Pair::from_opposite(loaded.algebra.clone(), loaded.forms.clone()).check() {
            Ok(r) => {
                bi_g2 = Some(BiG2Section {
                    torsion: r.torsion.to_string(),
                    opposite_torsion: r.opposite_torsion.to_string(),
                    same_metric: r.same_metric,
                    opposite_torsions: r.opposite_torsions,
                    closed_torsion: r.closed_torsion,
                    pass: r.passes(),
                });
                ledger.extend(r.ledger);
            }
            Err(StructureError::NotIntegrable { .. }) => {
                ledger.push_condition(
                    "bi_g2_members_integrable",
                    "both paired structures are integrable",
                    false,
                );
            }
            Err(e) => return Err(e.into()),
        }
    }

    let identity_ledger = ledger_rows(&ledger, mode);
    let verdict = if identity_ledger.iter().all(|r| r.pass) {
        "pass"
    } else {
        "fail"
    };
    let (mode_name, tolerance) = match mode {
        Mode::Exact => ("exact", None),
        Mode::Float { tol } => ("float", Some(tol)),
    };
    Ok(Report {
        name: loaded.spec.name.clone(),
        mode: mode_name.to_string(),
        tolerance,
        classification: s.classify().into(),
        theta: s.lee_form().into(),
        lambda: s.type_constant().to_string(),
        dphi_wedge_phi: s.dphi_wedge_phi().to_string(),
        codifferential_phi: s.codifferential_phi().to_string(),
        torsion,
        norms: Norms {
            torsion_sq,
            theta_sq: s.lee_form().norm_sq().to_string(),
        },
        curvature,
        identity_ledger,
        soliton,
        bi_g2,
        verdict: verdict.to_string(),
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn ledger_markdown(rows: &[LedgerRow]) -> String {
    let mut out = String::from("| name | statement | residual² | pass |\n|---|---|---|---|\n");
    for r in rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            r.name,
            cell(&r.statement),
            r.residual_sq,
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    out
}

pub fn to_markdown(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}\n", r.name);
    let _ = writeln!(out, "- verdict: **{}**", r.verdict);
    match r.tolerance {
        Some(tol) => {
            let _ = writeln!(out, "- mode: {} (tolerance {tol:e})", r.mode);
        }
        None => {
            let _ = writeln!(out, "- mode: {}", r.mode);
        }
    }

    out.push_str("\n## Invariants\n\n| quantity | value |\n|---|---|\n");
    let mut rows = vec![
        ("θ", r.theta.display.clone()),
        ("λ", r.lambda.clone()),
        ("dφ∧φ / vol", r.dphi_wedge_phi.clone()),
        ("δφ", r.codifferential_phi.clone()),
        ("‖θ‖²", r.norms.theta_sq.clone()),
    ];
    if let Some(t) = &r.torsion {
        rows.push(("T", t.display.clone()));
    }
    if let Some(n) = &r.norms.torsion_sq {
        rows.push(("‖T‖²", n.clone()));
    }
    for (k, v) in rows {
        let _ = writeln!(out, "| {k} | {} |", cell(&v));
    }

    out.push_str("\n## Classification\n\n| class | holds |\n|---|---|\n");
    for (k, v) in r.classification.rows() {
        let _ = writeln!(out, "| {k} | {} |", yes(v));
    }

    if let Some(c) = &r.curvature {
        out.push_str("\n## Curvature\n\n");
        let _ = writeln!(out, "- Scal: {}", c.scal);
        let _ = writeln!(out, "- Scal (Levi-Civita): {}", c.scal_levi_civita);
        let _ = writeln!(out, "- flat: {}", yes(c.flat));
        let _ = writeln!(out, "- connection vanishes: {}", yes(c.connection_vanishes));
        let _ = writeln!(out, "- dT = 0: {}", yes(c.closed_torsion));
        let _ = writeln!(out, "- δT = 0: {}", yes(c.coclosed_torsion));
        let s = &c.symmetry;
        for (k, v) in [
            ("pairs_symmetry", s.pairs_symmetry),
            ("riemannian_first_bianchi", s.riemannian_first_bianchi),
            ("nabla_torsion_is_four_form", s.nabla_torsion_is_four_form),
            ("dt_is_four_lc_nabla_torsion", s.dt_is_four_lc_nabla_torsion),
            ("torsion_bianchi_chain", s.torsion_bianchi_chain),
            ("ricci_is_minus_nabla_theta", s.ricci_is_minus_nabla_theta),
            ("nabla_theta_vanishes", s.nabla_theta_vanishes),
            ("delta_theta_vanishes", s.delta_theta_vanishes),
        ] {
            let _ = writeln!(out, "- {k}: {}", yes(v));
        }
        out.push_str("\nRicci tensor:\n\n|   | 1 | 2 | 3 | 4 | 5 | 6 | 7 |\n|---|---|---|---|---|---|---|---|\n");
        for (i, row) in c.ricci.iter().enumerate() {
            let _ = writeln!(out, "| {} | {} |", i + 1, row.join(" | "));
        }
    }

    out.push_str("\n## Identity ledger\n\n");
    out.push_str(&ledger_markdown(&r.identity_ledger));

    if let Some(sol) = &r.soliton {
        out.push_str("\n## Soliton\n\n");
        let _ = writeln!(out, "- X: {}", sol.x);
        let _ = writeln!(out, "- B: {}", sol.b);
        let _ = writeln!(out, "- potential (Levi-Civita form): {}", sol.potential_levi_civita);
        let _ = writeln!(
            out,
            "- potential (characteristic form): {}",
            sol.potential_characteristic
        );
        let _ = writeln!(
            out,
            "- gradient soliton with constant f: {}",
            yes(sol.gradient_with_constant_function)
        );
        let p = &sol.parallel_field;
        let _ = writeln!(out, "- V = θ − df: {}", p.v);
        let _ = writeln!(out, "- ∇V = 0: {}", yes(p.parallel));
        let _ = writeln!(out, "- dθ = V⌟T: {}", yes(p.dtheta_is_v_into_t));
        let _ = writeln!(out, "- L_V g = 0: {}", yes(p.preserves_metric));
        let _ = writeln!(out, "- L_V φ = 0: {}", yes(p.preserves_phi));
        if let Some(c) = &p.vanishing_field_corollary {
            let _ = writeln!(out, "- V = 0 corollary: {c}");
        }
    }

    if let Some(b) = &r.bi_g2 {
        out.push_str("\n## bi-G2 pair\n\n");
        let _ = writeln!(out, "- T: {}", b.torsion);
        let _ = writeln!(out, "- T̃: {}", b.opposite_torsion);
        let _ = writeln!(out, "- same metric: {}", yes(b.same_metric));
        let _ = writeln!(out, "- T̃ = −T: {}", yes(b.opposite_torsions));
        let _ = writeln!(out, "- dT = dT̃ = 0: {}", yes(b.closed_torsion));
        let _ = writeln!(out, "- pass: {}", yes(b.pass));
    }
    out
}
