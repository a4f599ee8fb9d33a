use g2forge_core::g2::phi_family;
use g2forge_core::lie::named::{heisenberg, r3_su2_r, su2_su2_r};
use g2forge_core::soliton::{
    check_gradient_soliton, check_soliton, parallel_field_check, schrodinger_potential, soliton_from_lee,
};
use g2forge_core::{AltForm, BiG2Pair, G2FormData, G2Structure, LieAlgebra, Scalar, SolitonData, SolitonError, Vector};
use proptest::prelude::*;

fn e(idx: &[usize]) -> AltForm {
    AltForm::basis(idx)
}

fn half_sqrt2() -> Scalar {
    Scalar::quadratic(0, 1) * Scalar::frac(1, 2)
}

fn family(cos: Scalar, sin: Scalar) -> G2Structure {
    G2Structure::new(su2_su2_r(), G2FormData::new(phi_family(&cos, &sin)).unwrap())
}

fn closed_catalog() -> Vec<(&'static str, G2Structure)> {
    vec![
        ("abelian", G2Structure::with_standard_phi(LieAlgebra::abelian())),
        ("standard", G2Structure::with_standard_phi(su2_su2_r())),
        ("phi0", family(Scalar::one(), Scalar::zero())),
        ("phi_pi4", family(half_sqrt2(), half_sqrt2())),
        ("phi_3pi4", family(-half_sqrt2(), half_sqrt2())),
        ("r3", G2Structure::with_standard_phi(r3_su2_r())),
    ]
}

#[test]
fn lee_form_soliton_holds_on_closed_torsion_entries() {
    for (name, s) in closed_catalog() {
        let report = soliton_from_lee(&s).unwrap();
        assert!(
            report.ledger.all_pass(),
            "{name}: {:?}",
            report.ledger.failures().collect::<Vec<_>>()
        );
        assert_eq!(report.data.x, s.lee_vector(), "{name}");
        assert!(report.data.f_gradient.is_zero());
    }
}

#[test]
fn lee_form_soliton_data() {
    let s = G2Structure::with_standard_phi(su2_su2_r());
    let report = soliton_from_lee(&s).unwrap();
    assert_eq!(report.data.x, Vector::from_form(&(&e(&[4]) - &e(&[3]))));
    // dθ = e56 − e12 and θ⌟T = −e12 + e56 cancel
    assert!(report.data.b.is_zero());

    let abelian = soliton_from_lee(&G2Structure::with_standard_phi(LieAlgebra::abelian())).unwrap();
    assert!(abelian.data.x.is_zero() && abelian.data.b.is_zero());
}

#[test]
fn wrong_soliton_data_is_detected() {
    let s = G2Structure::with_standard_phi(su2_su2_r());
    let data = SolitonData {
        x: Vector::basis(1),
        b: e(&[1, 2]),
        f_gradient: Vector::zero(),
    };
    let ledger = check_soliton(&s, &data).unwrap();
    // every left-invariant field is Killing for the bi-invariant metric
    assert!(ledger.get("soliton_ricci_equation").unwrap().pass);
    assert!(!ledger.get("soliton_codifferential_equation").unwrap().pass);
}

#[test]
fn non_closed_torsion_is_rejected() {
    let s = G2Structure::with_standard_phi(heisenberg(1, 1, 1));
    match soliton_from_lee(&s) {
        Err(SolitonError::TorsionNotClosed { dt }) => assert!(!dt.is_zero()),
        other => panic!("expected rejection, got {other:?}"),
    }
    assert!(check_gradient_soliton(&s, &Vector::zero()).is_err());
    assert!(parallel_field_check(&s, &Vector::zero()).is_err());
}

#[test]
fn gradient_soliton_on_flat_entries() {
    for (name, s) in closed_catalog() {
        let ledger = check_gradient_soliton(&s, &Vector::zero()).unwrap();
        assert!(ledger.all_pass(), "{name}");
    }
    let s = G2Structure::with_standard_phi(su2_su2_r());
    // e7 is central and orthogonal to T
    assert!(check_gradient_soliton(&s, &Vector::basis(7)).unwrap().all_pass());
    let ledger = check_gradient_soliton(&s, &Vector::basis(1)).unwrap();
    assert!(!ledger.get("gradient_soliton_codifferential").unwrap().pass);
    assert!(ledger.get("gradient_soliton_ricci").unwrap().pass);
}

#[test]
fn parallel_field_of_standard_structure() {
    let s = G2Structure::with_standard_phi(su2_su2_r());
    let report = parallel_field_check(&s, &Vector::zero()).unwrap();
    assert_eq!(report.v, Vector::from_form(&(&e(&[4]) - &e(&[3]))));
    assert!(report.parallel && report.dtheta_is_v_into_t && report.preserves_metric);
    assert!(report.implication_holds);
    assert_eq!(report.vanishing_field_corollary, None);
}

#[test]
fn parallel_field_implication_on_catalog() {
    for (name, s) in closed_catalog() {
        let report = parallel_field_check(&s, &Vector::zero()).unwrap();
        assert!(report.implication_holds, "{name}");
        if report.parallel {
            assert!(
                report.ledger.all_pass(),
                "{name}: {:?}",
                report.ledger.failures().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn vanishing_field_corollary() {
    let abelian = G2Structure::with_standard_phi(LieAlgebra::abelian());
    let report = parallel_field_check(&abelian, &Vector::zero()).unwrap();
    assert!(report.v.is_zero());
    assert_eq!(report.vanishing_field_corollary, Some(true));

    // choosing df = θ makes V vanish while T stays nonzero on the group model
    let s = family(-half_sqrt2(), half_sqrt2());
    let report = parallel_field_check(&s, &s.lee_vector()).unwrap();
    assert!(report.v.is_zero());
    assert_eq!(report.vanishing_field_corollary, Some(false));
}

#[test]
fn schrodinger_potential_values() {
    for (name, s) in closed_catalog() {
        let (a, b) = schrodinger_potential(&s).unwrap();
        assert_eq!(a, b, "{name}");
        let expected = match name {
            "abelian" => Scalar::zero(),
            "r3" => Scalar::one(),
            _ => Scalar::from_int(2),
        };
        assert_eq!(a, expected, "{name}");
    }
}

#[test]
fn bi_g2_pairs() {
    let phi0 = G2FormData::new(phi_family(&Scalar::one(), &Scalar::zero())).unwrap();
    let report = BiG2Pair::from_opposite(su2_su2_r(), phi0.clone()).check().unwrap();
    assert!(report.passes());
    assert_eq!(report.torsion, &e(&[1, 2, 3]) + &e(&[4, 5, 6]));
    assert_eq!(report.opposite_torsion, -report.torsion.clone());

    let abelian = BiG2Pair::from_opposite(LieAlgebra::abelian(), G2FormData::standard())
        .check()
        .unwrap();
    assert!(abelian.passes() && abelian.torsion.is_zero());

    let same = BiG2Pair::new(
        G2Structure::new(su2_su2_r(), phi0.clone()),
        G2Structure::new(su2_su2_r(), phi0),
    );
    let report = same.check().unwrap();
    assert!(!report.opposite_torsions && report.closed_torsion && !report.passes());
}

#[test]
fn bi_g2_rejects_non_integrable_members() {
    let g = LieAlgebra::from_brackets([(1, 2, 3, Scalar::one())]).unwrap();
    assert!(BiG2Pair::from_opposite(g, G2FormData::standard()).check().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn potentials_agree_on_heisenberg_fixtures(a in -3i64..4, b in -3i64..4, c in -3i64..4) {
        let s = G2Structure::with_standard_phi(heisenberg(a, b, c));
        if s.is_integrable() {
            let (x, y) = schrodinger_potential(&s).unwrap();
            prop_assert_eq!(x, y);
        }
    }
}
