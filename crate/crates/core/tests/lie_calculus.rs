use g2forge_core::lie::named::{heisenberg, r3_su2_r, su2_su2_r};
use g2forge_core::{AltForm, FormError, LieAlgebra, MultiIndex, Scalar, Vector, DIM};
use proptest::prelude::*;

fn e(idx: &[usize]) -> AltForm {
    AltForm::basis(idx)
}

/// `dα(X_0,…,X_k) = Σ_{i<j} (−1)^{i+j} α([X_i,X_j], X_0,…,X̂_i,…,X̂_j,…)`
/// evaluated on basis vectors.
fn d_oracle(g: &LieAlgebra, alpha: &AltForm) -> AltForm {
    let k = alpha.degree();
    let c = g.structure_constants();
    let mut out = AltForm::zero(k + 1);
    for idx in MultiIndex::all_of_degree(k + 1) {
        let a = idx.indices();
        let mut acc = Scalar::zero();
        for i in 0..=k {
            for j in (i + 1)..=k {
                let rest: Vec<usize> = (0..=k).filter(|&m| m != i && m != j).map(|m| a[m] - 1).collect();
                for s in 0..DIM {
                    let cs = c.get(&[a[i] - 1, a[j] - 1, s]);
                    if cs.is_zero() {
                        continue;
                    }
                    let mut pos = vec![s];
                    pos.extend(&rest);
                    let term = cs * &alpha.component(&pos);
                    if (i + j) % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
            }
        }
        out = &out + &AltForm::monomial(&a, acc);
    }
    out
}

fn algebras() -> Vec<LieAlgebra> {
    vec![
        LieAlgebra::abelian(),
        su2_su2_r(),
        su2_su2_r().opposite(),
        r3_su2_r(),
        heisenberg(1, 2, -3),
    ]
}

#[test]
fn validate_accepts_catalog_and_abelian() {
    for g in algebras() {
        assert!(g.validate().is_ok());
        assert!(g.is_unimodular());
    }
    let plus_sign = LieAlgebra::from_brackets([
        (1, 2, 3, Scalar::one()),
        (2, 3, 1, Scalar::one()),
        (3, 1, 2, Scalar::one()),
        (4, 5, 6, Scalar::one()),
        (5, 6, 4, Scalar::one()),
        (6, 4, 5, Scalar::one()),
    ])
    .unwrap();
    assert_eq!(plus_sign, su2_su2_r().opposite());
}

#[test]
fn differential_matches_bracket_formula() {
    for g in algebras() {
        for k in 0..DIM {
            for idx in MultiIndex::all_of_degree(k) {
                let f = e(&idx.indices());
                assert_eq!(g.d(&f), d_oracle(&g, &f), "degree {k} {idx}");
            }
        }
    }
}

#[test]
fn codifferential_examples() {
    let ab = LieAlgebra::abelian();
    assert!(ab.codifferential(&e(&[1])).unwrap().is_zero());
    let g = su2_su2_r();
    let t = &e(&[1, 2, 3]) + &e(&[4, 5, 6]);
    assert!(g.codifferential(&t).unwrap().is_zero());
    // three-step evaluation of *d* on e23
    let star = e(&[2, 3]).hodge();
    let dstar = g.d(&star);
    assert_eq!(g.codifferential(&e(&[2, 3])).unwrap(), dstar.hodge());
    assert_eq!(g.codifferential(&e(&[2, 3])).unwrap(), e(&[1]));
    assert_eq!(
        g.codifferential(&AltForm::constant(Scalar::one())),
        Err(FormError::CodifferentialOfFunction)
    );
}

#[test]
fn lie_derivative_examples() {
    let g = su2_su2_r();
    assert!(g.lie_derivative_metric(&Vector::basis(7)).is_zero());
    for i in 1..=7 {
        assert!(
            g.lie_derivative_metric(&Vector::basis(i)).is_zero(),
            "bi-invariant metric"
        );
        assert!(LieAlgebra::abelian().lie_derivative_metric(&Vector::basis(i)).is_zero());
    }
    let phi = g2forge_core::standard_phi().phi().clone();
    let x = Vector::basis(1);
    // (L_X φ)(a,b,c) = −φ([X,a],b,c) − φ(a,[X,b],c) − φ(a,b,[X,c])
    let lx = g.lie_derivative_form(&x, &phi);
    for idx in MultiIndex::all_of_degree(3) {
        let a: Vec<Vector> = idx.indices().iter().map(|&i| Vector::basis(i)).collect();
        let eval = |u: &Vector, v: &Vector, w: &Vector| -> Scalar {
            let mut acc = Scalar::zero();
            for p in 0..7 {
                for q in 0..7 {
                    for r in 0..7 {
                        let coeff = &(&u[p] * &v[q]) * &w[r];
                        if !coeff.is_zero() {
                            acc += &(&coeff * &phi.component(&[p, q, r]));
                        }
                    }
                }
            }
            acc
        };
        let expected = -(&(&eval(&g.bracket(&x, &a[0]), &a[1], &a[2]) + &eval(&a[0], &g.bracket(&x, &a[1]), &a[2]))
            + &eval(&a[0], &a[1], &g.bracket(&x, &a[2])));
        assert_eq!(lx.coeff(idx), expected);
    }
    assert!(!lx.is_zero());
    let via_tensor = g.lie_derivative(&x, &g2forge_core::Tensor::from_form(&phi));
    assert_eq!(via_tensor.to_form(), Some(lx));
}

#[test]
fn opposite_is_an_involution() {
    for g in algebras() {
        assert_eq!(g.opposite().opposite(), g);
        assert!(g.opposite().validate().is_ok());
    }
    assert_eq!(LieAlgebra::abelian().opposite(), LieAlgebra::abelian());
    assert_eq!(
        su2_su2_r().opposite().structure_constants().get(&[0, 1, 2]),
        &Scalar::one()
    );
}

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| Scalar::frac(n, d))
}

fn form_strategy() -> impl Strategy<Value = AltForm> {
    (0usize..=7).prop_flat_map(|k| {
        let basis = MultiIndex::all_of_degree(k);
        proptest::collection::vec(small_rational(), basis.len()).prop_map(move |cs| {
            let mut f = AltForm::zero(k);
            for (idx, c) in basis.iter().zip(cs) {
                f = &f + &AltForm::monomial(&idx.indices(), c);
            }
            f
        })
    })
}

fn vector_strategy() -> impl Strategy<Value = Vector> {
    proptest::collection::vec(small_rational(), 7).prop_map(|v| Vector(std::array::from_fn(|i| v[i].clone())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn d_squared_and_delta_squared_vanish(alpha in form_strategy(), which in 0usize..5) {
        let g = &algebras()[which];
        prop_assert!(g.d(&g.d(&alpha)).is_zero());
        if alpha.degree() >= 2 {
            let once = g.codifferential(&alpha).unwrap();
            prop_assert!(g.codifferential(&once).unwrap().is_zero());
        }
    }

    #[test]
    fn d_and_delta_are_adjoint_on_unimodular_algebras(
        alpha in form_strategy(),
        beta_seed in form_strategy(),
        which in 0usize..5,
    ) {
        let g = &algebras()[which];
        prop_assume!(alpha.degree() < 7);
        // promote the second sample to degree k+1 by wedging with a fixed 1-form if needed
        let k = alpha.degree();
        let beta = if beta_seed.degree() == k + 1 {
            beta_seed
        } else {
            let mut f = AltForm::zero(k + 1);
            for idx in MultiIndex::all_of_degree(k + 1) {
                let c = beta_seed.terms().map(|(_, v)| v.clone()).next().unwrap_or_else(Scalar::one);
                f = &f + &AltForm::monomial(&idx.indices(), &c + &Scalar::from_int(idx.bits() as i64 % 3));
            }
            f
        };
        let lhs = g.d(&alpha).inner(&beta).unwrap();
        let rhs = alpha.inner(&g.codifferential(&beta).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_derivative_obeys_cartan_formula(alpha in form_strategy(), v in vector_strategy(), which in 0usize..5) {
        let g = &algebras()[which];
        prop_assume!(alpha.degree() >= 1);
        let mut cartan = g.d(&alpha.interior(&v).unwrap());
        if alpha.degree() < DIM {
            cartan = &cartan + &g.d(&alpha).interior(&v).unwrap();
        }
        prop_assert_eq!(g.lie_derivative_form(&v, &alpha), cartan);
    }
}
