use super::G2FormData;
use crate::ledger::IdentityLedger;
use crate::multilinear::{einsum, AltForm, Tensor};
use crate::scalar::Scalar;

fn sum(terms: &[(i64, i64, Tensor)]) -> Tensor {
    let mut it = terms.iter().map(|(n, d, t)| t.scale_frac(*n, *d));
    let first = it.next().expect("at least one term");
    it.fold(first, |acc, t| &acc + &t)
}

impl G2FormData {
    /// The quadratic contraction identities satisfied by `φ` and `ψ`,
    /// each recorded as an exact residual.
    pub fn identity_suite(&self) -> IdentityLedger {
        suite(&self.phi_t, &self.psi_t)
    }
}

/// Evaluates the contraction identities for an arbitrary 3-form and its
/// Hodge dual, without requiring it to define a G2 structure.
pub fn contraction_identities(phi: &AltForm) -> IdentityLedger {
    suite(&Tensor::from_form(phi), &Tensor::from_form(&phi.hodge()))
}

fn suite(p: &Tensor, s: &Tensor) -> IdentityLedger {
    let d = Tensor::identity();
    let e = einsum;
    let mut ledger = IdentityLedger::new();

    ledger.push_tensor(
        "phi_phi_single",
        "φ_ijk φ_ajk = 6 δ_ia",
        &(&e("ijk,ajk->ia", &[p, p]) - &d.scale_frac(6, 1)),
    );
    ledger.push_scalar(
        "phi_norm",
        "φ_ijk φ_ijk = 42",
        &(e("ijk,ijk->", &[p, p]).value() - &Scalar::from_int(42)),
    );
    let rhs = sum(&[
        (1, 1, e("ia,jb->ijab", &[&d, &d])),
        (-1, 1, e("ib,ja->ijab", &[&d, &d])),
        (1, 1, s.clone()),
    ]);
    ledger.push_tensor(
        "phi_phi_double",
        "φ_ijk φ_abk = δ_ia δ_jb − δ_ib δ_ja + ψ_ijab",
        &(&e("ijk,abk->ijab", &[p, p]) - &rhs),
    );
    ledger.push_tensor(
        "phi_psi_double",
        "φ_ijk ψ_abjk = 4 φ_iab",
        &(&e("ijk,abjk->iab", &[p, s]) - &p.scale_frac(4, 1)),
    );
    let rhs = sum(&[
        (1, 1, e("ia,jbc->ijabc", &[&d, p])),
        (1, 1, e("ib,ajc->ijabc", &[&d, p])),
        (1, 1, e("ic,abj->ijabc", &[&d, p])),
        (-1, 1, e("aj,ibc->ijabc", &[&d, p])),
        (-1, 1, e("bj,aic->ijabc", &[&d, p])),
        (-1, 1, e("cj,abi->ijabc", &[&d, p])),
    ]);
    ledger.push_tensor(
        "phi_psi_single",
        "φ_ijk ψ_kabc = δ_ia φ_jbc + δ_ib φ_ajc + δ_ic φ_abj − δ_aj φ_ibc − δ_bj φ_aic − δ_cj φ_abi",
        &(&e("ijk,kabc->ijabc", &[p, s]) - &rhs),
    );
    ledger.push_tensor(
        "psi_psi_triple",
        "ψ_ijkl ψ_ajkl = 24 δ_ia",
        &(&e("ijkl,ajkl->ia", &[s, s]) - &d.scale_frac(24, 1)),
    );
    ledger.push_scalar(
        "psi_norm",
        "ψ_ijkl ψ_ijkl = 168",
        &(e("ijkl,ijkl->", &[s, s]).value() - &Scalar::from_int(168)),
    );
    let rhs = sum(&[
        (4, 1, e("ia,jb->ijab", &[&d, &d])),
        (-4, 1, e("ib,ja->ijab", &[&d, &d])),
        (2, 1, s.clone()),
    ]);
    ledger.push_tensor(
        "psi_psi_double",
        "ψ_ijkl ψ_abkl = 4 δ_ia δ_jb − 4 δ_ib δ_ja + 2 ψ_ijab",
        &(&e("ijkl,abkl->ijab", &[s, s]) - &rhs),
    );
    let rhs = sum(&[
        (1, 1, e("ia,jb,kc->ijkabc", &[&d, &d, &d])),
        (1, 1, e("ib,jc,ka->ijkabc", &[&d, &d, &d])),
        (1, 1, e("ic,ja,kb->ijkabc", &[&d, &d, &d])),
        (-1, 1, e("ia,jc,kb->ijkabc", &[&d, &d, &d])),
        (-1, 1, e("ib,ja,kc->ijkabc", &[&d, &d, &d])),
        (-1, 1, e("ic,jb,ka->ijkabc", &[&d, &d, &d])),
        (-1, 3, e("ajk,ibc->ijkabc", &[p, p])),
        (-1, 3, e("bjk,ica->ijkabc", &[p, p])),
        (-1, 3, e("cjk,iab->ijkabc", &[p, p])),
        (-1, 3, e("iak,jbc->ijkabc", &[p, p])),
        (-1, 3, e("ibk,jca->ijkabc", &[p, p])),
        (-1, 3, e("ick,jab->ijkabc", &[p, p])),
        (-1, 3, e("ija,kbc->ijkabc", &[p, p])),
        (-1, 3, e("ijb,kca->ijkabc", &[p, p])),
        (-1, 3, e("ijc,kab->ijkabc", &[p, p])),
        (1, 3, e("ia,jkbc->ijkabc", &[&d, s])),
        (1, 3, e("ib,jkca->ijkabc", &[&d, s])),
        (1, 3, e("ic,jkab->ijkabc", &[&d, s])),
        (1, 3, e("ja,kibc->ijkabc", &[&d, s])),
        (1, 3, e("jb,kica->ijkabc", &[&d, s])),
        (1, 3, e("jc,kiab->ijkabc", &[&d, s])),
        (1, 3, e("ka,ijbc->ijkabc", &[&d, s])),
        (1, 3, e("kb,ijca->ijkabc", &[&d, s])),
        (1, 3, e("kc,ijab->ijkabc", &[&d, s])),
    ]);
    ledger.push_tensor(
        "psi_psi_single",
        "ψ_ijkl ψ_abcl = Σ±δδδ − ⅓(φφ cyclic, three groups) + ⅓(δψ cyclic, three groups)",
        &(&e("ijkl,abcl->ijkabc", &[s, s]) - &rhs),
    );
    ledger
}
