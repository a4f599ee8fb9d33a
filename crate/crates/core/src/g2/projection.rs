use super::{G2Error, G2FormData, SymTraceless};
use crate::linalg;
use crate::multilinear::{einsum, AltForm, MultiIndex, Tensor, Vector, DIM};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFormParts {
    pub seven: AltForm,
    pub fourteen: AltForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeFormParts {
    pub one: AltForm,
    pub seven: AltForm,
    pub twenty_seven: AltForm,
}

/// Exact image dimensions of the projectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectorRanks {
    pub two: [usize; 2],
    pub three: [usize; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourFormInjectivity {
    pub rank: usize,
    pub dimension: usize,
}

impl FourFormInjectivity {
    pub fn injective(&self) -> bool {
        self.rank == self.dimension
    }
}

fn coords(form: &AltForm) -> Vec<Scalar> {
    MultiIndex::all_of_degree(form.degree())
        .into_iter()
        .map(|i| form.coeff(i))
        .collect()
}

fn image_rank(degree: usize, map: impl Fn(&AltForm) -> AltForm) -> usize {
    let rows: Vec<Vec<Scalar>> = MultiIndex::all_of_degree(degree)
        .into_iter()
        .map(|i| coords(&map(&AltForm::monomial(&i.indices(), Scalar::one()))))
        .collect();
    linalg::rank(&rows)
}

impl G2FormData {
    /// `Lβ = *(β∧φ)`; eigenvalue 2 on the 7-dimensional and −1 on the
    /// 14-dimensional summand.
    pub fn two_form_operator(&self, beta: &AltForm) -> AltForm {
        beta.wedge(&self.phi).expect("degree 2").hodge()
    }

    pub fn project2(&self, beta: &AltForm) -> TwoFormParts {
        assert_eq!(beta.degree(), 2, "expected a 2-form");
        let l = self.two_form_operator(beta);
        let third = Scalar::frac(1, 3);
        let seven = &third * &(&l + beta);
        let fourteen = &third * &(&beta.scale(&Scalar::from_int(2)) - &l);
        TwoFormParts { seven, fourteen }
    }

    /// Vector `α` with `α_i = (1/24) γ_jkl ψ_ijkl`, so that the
    /// 7-dimensional part of `γ` is `α⌟ψ`.
    pub fn vector_part(&self, gamma: &AltForm) -> Vector {
        let g = Tensor::from_form(gamma);
        let a = einsum("jkl,ijkl->i", &[&g, &self.psi_t]).scale_frac(1, 24);
        Vector(std::array::from_fn(|i| a.get(&[i]).clone()))
    }

    pub fn project3(&self, gamma: &AltForm) -> ThreeFormParts {
        assert_eq!(gamma.degree(), 3, "expected a 3-form");
        let t = gamma.full_contract(&self.phi).expect("degree 3");
        let one = self.phi.scale(&(&t * &Scalar::frac(1, 42)));
        let seven = self.psi.interior(&self.vector_part(gamma)).expect("degree 4");
        let twenty_seven = &(gamma - &one) - &seven;
        ThreeFormParts {
            one,
            seven,
            twenty_seven,
        }
    }

    /// `γ(h)_ijk = h_ip φ_pjk + h_jp φ_pki + h_kp φ_pij`.
    pub fn gamma(&self, h: &SymTraceless) -> AltForm {
        let h = h.entries();
        let p = &self.phi_t;
        let t = &(&einsum("ip,pjk->ijk", &[h, p]) + &einsum("jp,pki->ijk", &[h, p])) + &einsum("kp,pij->ijk", &[h, p]);
        t.to_form().expect("γ(h) is alternating")
    }

    /// `h_im = ¼ B_ijk φ_mjk`, defined on the 27-dimensional summand only.
    pub fn gamma_inv(&self, b: &AltForm) -> Result<SymTraceless, G2Error> {
        assert_eq!(b.degree(), 3, "expected a 3-form");
        let parts = self.project3(b);
        if !parts.one.is_zero() || !parts.seven.is_zero() {
            return Err(G2Error::NotInLambda27 {
                lambda1: parts.one,
                lambda7: parts.seven,
            });
        }
        let h = einsum("ijk,mjk->im", &[&Tensor::from_form(b), &self.phi_t]).scale_frac(1, 4);
        SymTraceless::new(h)
    }

    pub fn projector_ranks(&self) -> ProjectorRanks {
        ProjectorRanks {
            two: [
                image_rank(2, |b| self.project2(b).seven),
                image_rank(2, |b| self.project2(b).fourteen),
            ],
            three: [
                image_rank(3, |g| self.project3(g).one),
                image_rank(3, |g| self.project3(g).seven),
                image_rank(3, |g| self.project3(g).twenty_seven),
            ],
        }
    }

    /// Singlet and vector parts of `e_p⌟A` for `p = 1..7`, flattened.
    pub fn contraction_defect(&self, a: &AltForm) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(DIM * 70);
        for p in 1..=DIM {
            let parts = self.project3(&a.interior_basis(p).expect("degree 4"));
            out.extend(coords(&parts.one));
            out.extend(coords(&parts.seven));
        }
        out
    }

    /// Rank of `A ↦ (π₁(e_p⌟A), π₇(e_p⌟A))_p` on 4-forms. Full rank means a
    /// 4-form all of whose contractions lie in the 27-dimensional summand vanishes.
    pub fn four_form_injectivity(&self) -> FourFormInjectivity {
        let rows: Vec<Vec<Scalar>> = MultiIndex::all_of_degree(4)
            .into_iter()
            .map(|i| self.contraction_defect(&AltForm::monomial(&i.indices(), Scalar::one())))
            .collect();
        FourFormInjectivity {
            rank: linalg::rank(&rows),
            dimension: rows.len(),
        }
    }
}
