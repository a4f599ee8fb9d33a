use g2forge_core::g2::{contraction_identities, standard_phi};
use g2forge_core::{AltForm, G2Error, G2FormData, MultiIndex, Scalar, SymTraceless, Tensor, Vector};
use proptest::prelude::*;

fn e(idx: &[usize]) -> AltForm {
    AltForm::basis(idx)
}

#[test]
fn standard_form_and_dual() {
    let g2 = standard_phi();
    assert_eq!(g2.phi().get(&[1, 2, 7]), Scalar::one());
    assert_eq!(g2.phi().get(&[2, 3, 6]), Scalar::from_int(-1));
    let psi = AltForm::from_int_terms(
        4,
        &[
            (&[1, 2, 3, 4], 1),
            (&[3, 4, 5, 6], 1),
            (&[1, 2, 5, 6], 1),
            (&[2, 4, 6, 7], -1),
            (&[1, 3, 6, 7], 1),
            (&[2, 3, 5, 7], 1),
            (&[1, 4, 5, 7], 1),
        ],
    );
    assert_eq!(g2.psi(), &psi);
    assert_eq!(psi.hodge(), *g2.phi());
    assert_eq!(g2.induced_metric(), Tensor::identity());
    assert_eq!(
        g2.phi().wedge(g2.psi()).unwrap(),
        AltForm::volume().scale(&Scalar::from_int(7))
    );
    assert_eq!(
        g2.phi().interior(&Vector::basis(7)).unwrap(),
        &(&e(&[1, 2]) + &e(&[3, 4])) + &e(&[5, 6])
    );
}

#[test]
fn identity_suite_is_exact() {
    let ledger = standard_phi().identity_suite();
    assert_eq!(ledger.len(), 9);
    for entry in ledger.entries() {
        assert!(entry.pass, "{} failed: {}", entry.name, entry.residual_sq);
    }
}

#[test]
fn rejects_perturbed_or_misoriented_forms() {
    let mut phi = standard_phi().phi().clone();
    phi = &phi + &e(&[1, 2, 7]);
    assert!(matches!(G2FormData::new(phi), Err(G2Error::MetricNotIdentity { .. })));
    let neg = -standard_phi().phi();
    assert!(matches!(G2FormData::new(neg), Err(G2Error::Orientation { .. })));
    assert!(matches!(G2FormData::new(e(&[1, 2])), Err(G2Error::WrongDegree(2))));
}

#[test]
fn perturbed_form_breaks_identity_suite() {
    let phi = &standard_phi().phi().clone() + &e(&[1, 2, 7]);
    let ledger = contraction_identities(&phi);
    assert!(!ledger.all_pass());
    assert!(!ledger.get("phi_phi_single").unwrap().pass);
    assert!(contraction_identities(standard_phi().phi()).all_pass());
}

#[test]
fn two_form_projections() {
    let g2 = standard_phi();
    let beta = &e(&[1, 2]) - &e(&[5, 6]);
    let parts = g2.project2(&beta);
    assert!(parts.seven.is_zero());
    assert_eq!(parts.fourteen, beta);
    let cross = g2.cross(&Vector::basis(7));
    let parts = g2.project2(&cross);
    assert_eq!(parts.seven, cross);
    assert!(parts.fourteen.is_zero());
    assert!(g2.project2(&AltForm::zero(2)).seven.is_zero());
    for i in 1..=7 {
        let x = g2.cross(&Vector::basis(i));
        assert_eq!(g2.two_form_operator(&x), x.scale(&Scalar::from_int(2)));
        assert!(g2.project2(&x).fourteen.is_zero());
    }
}

#[test]
fn three_form_projections() {
    let g2 = standard_phi();
    let p = g2.project3(g2.phi());
    assert_eq!(p.one, *g2.phi());
    assert!(p.seven.is_zero() && p.twenty_seven.is_zero());
    let x = g2.psi().interior(&Vector::basis(1)).unwrap();
    let p = g2.project3(&x);
    assert!(p.one.is_zero() && p.twenty_seven.is_zero());
    assert_eq!(p.seven, x);
}

#[test]
fn ranks_and_injectivity() {
    let g2 = standard_phi();
    let r = g2.projector_ranks();
    assert_eq!(r.two, [7, 14]);
    assert_eq!(r.three, [1, 7, 27]);
    let inj = g2.four_form_injectivity();
    assert_eq!(inj.rank, 35);
    assert!(inj.injective());
    assert!(g2.contraction_defect(g2.psi()).iter().any(|v| !v.is_zero()));
    assert!(g2.contraction_defect(&AltForm::zero(4)).iter().all(Scalar::is_zero));
}

#[test]
fn gamma_examples() {
    let g2 = standard_phi();
    assert!(g2.gamma(&SymTraceless::zero()).is_zero());
    let mut d: [Scalar; 7] = std::array::from_fn(|_| Scalar::zero());
    d[0] = Scalar::one();
    d[1] = Scalar::from_int(-1);
    let h = SymTraceless::diagonal(d).unwrap();
    let b = g2.gamma(&h);
    assert!(!b.is_zero());
    let p = g2.project3(&b);
    assert!(p.one.is_zero() && p.seven.is_zero());
    assert!(b.wedge(g2.phi()).unwrap().is_zero());
    assert!(b.wedge(g2.psi()).unwrap().is_zero());
    assert_eq!(g2.gamma_inv(&b).unwrap(), h);
    assert!(matches!(g2.gamma_inv(g2.phi()), Err(G2Error::NotInLambda27 { .. })));
    assert_eq!(g2.gamma_inv(&AltForm::zero(3)).unwrap(), SymTraceless::zero());
    let mut diag: [Scalar; 7] = std::array::from_fn(|_| Scalar::frac(1, 6));
    diag[6] = Scalar::from_int(-1);
    let b = g2.gamma(&SymTraceless::diagonal(diag).unwrap());
    assert!(b.wedge(g2.phi()).unwrap().is_zero() && b.wedge(g2.psi()).unwrap().is_zero());
}

#[test]
fn sym_traceless_validation() {
    let asym = Tensor::from_fn(2, |ix| Scalar::from_int(if ix == [0, 1] { 1 } else { 0 }));
    assert_eq!(SymTraceless::new(asym), Err(G2Error::NotSymmetric(1, 2)));
    assert!(matches!(
        SymTraceless::new(Tensor::identity()),
        Err(G2Error::NotTraceless(_))
    ));
}

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::frac(n, d))
}

fn form_strategy(degree: usize) -> impl Strategy<Value = AltForm> {
    let basis = MultiIndex::all_of_degree(degree);
    proptest::collection::vec(small_rational(), basis.len()).prop_map(move |cs| {
        let mut f = AltForm::zero(degree);
        for (idx, c) in basis.iter().zip(cs) {
            f = &f + &AltForm::monomial(&idx.indices(), c);
        }
        f
    })
}

fn sym_traceless_strategy() -> impl Strategy<Value = SymTraceless> {
    proptest::collection::vec(small_rational(), 28).prop_map(|cs| {
        let mut it = cs.into_iter();
        let mut t = Tensor::zeros(2);
        for i in 0..7 {
            for j in i..7 {
                let v = it.next().unwrap();
                t.set(&[i, j], v.clone());
                t.set(&[j, i], v);
            }
        }
        let tr = t.trace();
        let last = t.get(&[6, 6]) - &tr;
        t.set(&[6, 6], last);
        SymTraceless::new(t).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn two_form_projectors_are_complementary(beta in form_strategy(2)) {
        let g2 = standard_phi();
        let p = g2.project2(&beta);
        prop_assert_eq!(&p.seven + &p.fourteen, beta.clone());
        let p7 = g2.project2(&p.seven);
        prop_assert_eq!(&p7.seven, &p.seven);
        prop_assert!(p7.fourteen.is_zero());
        let p14 = g2.project2(&p.fourteen);
        prop_assert!(p14.seven.is_zero());
        prop_assert!(p.seven.inner(&p.fourteen).unwrap().is_zero());
    }

    #[test]
    fn three_form_projectors_are_complementary(gamma in form_strategy(3)) {
        let g2 = standard_phi();
        let p = g2.project3(&gamma);
        prop_assert_eq!(&(&p.one + &p.seven) + &p.twenty_seven, gamma.clone());
        for (part, slot) in [(&p.one, 0), (&p.seven, 1), (&p.twenty_seven, 2)] {
            let q = g2.project3(part);
            let got = [&q.one, &q.seven, &q.twenty_seven];
            for (k, g) in got.iter().enumerate() {
                if k == slot {
                    prop_assert_eq!(*g, part);
                } else {
                    prop_assert!(g.is_zero());
                }
            }
        }
        prop_assert!(p.twenty_seven.wedge(g2.phi()).unwrap().is_zero());
        prop_assert!(p.twenty_seven.wedge(g2.psi()).unwrap().is_zero());
    }

    #[test]
    fn gamma_round_trips(h in sym_traceless_strategy()) {
        let g2 = standard_phi();
        let b = g2.gamma(&h);
        let back = g2.gamma_inv(&b).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(g2.gamma(&back), b);
    }
}
