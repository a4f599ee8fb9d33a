//! Seven-dimensional real Lie algebras in a fixed orthonormal basis, and the
//! calculus of left-invariant forms and tensors on the corresponding group.

use std::fmt;

use thiserror::Error;

use crate::multilinear::{einsum, AltForm, FormError, Tensor, Vector, DIM};
use crate::scalar::Scalar;

/// A failure of the Lie algebra axioms, with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `c^k_ij + c^k_ji ≠ 0`.
    Antisymmetry { i: usize, j: usize, k: usize, sum: Scalar },
    /// `Σ_cyc [[e_i, e_j], e_k]` has nonzero `e_m` component.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        m: usize,
        value: Scalar,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k, sum } => {
                write!(
                    f,
                    "antisymmetry fails at ({i},{j},{k}): c^{k}_{i}{j} + c^{k}_{j}{i} = {sum}"
                )
            }
            Violation::Jacobi { i, j, k, m, value } => {
                write!(
                    f,
                    "Jacobi identity fails for (e{i},e{j},e{k}) in direction e{m}: {value}"
                )
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("bracket index out of range 1..7: {0:?}")]
    IndexOutOfRange((usize, usize, usize)),
    #[error("[e{i},e{j}] has conflicting coefficients on e{k}")]
    Conflict { i: usize, j: usize, k: usize },
    #[error("invalid structure constants: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

/// Structure constants `c[i][j][k] = c^k_ij`, meaning `[e_i, e_j] = Σ_k c^k_ij e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    c: Tensor,
    de: Vec<AltForm>,
}

impl LieAlgebra {
    pub fn abelian() -> Self {
        Self::from_constants_unchecked(Tensor::zeros(3))
    }

    /// Builds from brackets `[e_i, e_j] ∋ c·e_k` (1-based). Antisymmetry is
    /// completed automatically; the result is validated.
    pub fn from_brackets<I>(brackets: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut c = Tensor::zeros(3);
        let mut seen = std::collections::BTreeMap::new();
        for (i, j, k, v) in brackets {
            if ![i, j, k].iter().all(|x| (1..=DIM).contains(x)) {
                return Err(LieError::IndexOutOfRange((i, j, k)));
            }
            if i == j {
                if v.is_zero() {
                    continue;
                }
                return Err(LieError::Invalid(vec![Violation::Antisymmetry {
                    i,
                    j,
                    k,
                    sum: v.scale_int(2),
                }]));
            }
            let (a, b, v) = if i < j { (i, j, v) } else { (j, i, -v) };
            if let Some(prev) = seen.insert((a, b, k), v.clone()) {
                if prev != v {
                    return Err(LieError::Conflict { i: a, j: b, k });
                }
            }
            c.set(&[a - 1, b - 1, k - 1], v.clone());
            c.set(&[b - 1, a - 1, k - 1], -v);
        }
        Self::new(c)
    }

    pub fn new(c: Tensor) -> Result<Self, LieError> {
        let alg = Self::from_constants_unchecked(c);
        alg.validate().map_err(LieError::Invalid)?;
        Ok(alg)
    }

    /// Accepts raw constants without checking the axioms; see [`validate`](Self::validate).
    pub fn from_constants_unchecked(c: Tensor) -> Self {
        assert_eq!(c.rank(), 3, "structure constants form a rank-3 array");
        // de_k = −Σ_{i<j} c^k_ij e_ij
        let de = (0..DIM)
            .map(|k| {
                let mut f = AltForm::zero(2);
                for i in 0..DIM {
                    for j in (i + 1)..DIM {
                        let v = c.get(&[i, j, k]);
                        if !v.is_zero() {
                            f = &f - &AltForm::monomial(&[i + 1, j + 1], v.clone());
                        }
                    }
                }
                f
            })
            .collect();
        LieAlgebra { c, de }
    }

    /// Every antisymmetry and Jacobi violation, or `Ok` if there are none.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in i..DIM {
                for k in 0..DIM {
                    let sum = self.c.get(&[i, j, k]) + self.c.get(&[j, i, k]);
                    if !sum.is_zero() {
                        out.push(Violation::Antisymmetry {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            sum,
                        });
                    }
                }
            }
        }
        // J_ijkm = c^s_ij c^m_sk + c^s_jk c^m_si + c^s_ki c^m_sj
        let c = &self.c;
        let jac = &(&einsum("ijs,skm->ijkm", &[c, c]) + &einsum("jks,sim->ijkm", &[c, c]))
            + &einsum("kis,sjm->ijkm", &[c, c]);
        for (idx, v) in jac.nonzeros() {
            if idx[0] < idx[1] && idx[1] < idx[2] {
                out.push(Violation::Jacobi {
                    i: idx[0] + 1,
                    j: idx[1] + 1,
                    k: idx[2] + 1,
                    m: idx[3] + 1,
                    value: v.clone(),
                });
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    pub fn structure_constants(&self) -> &Tensor {
        &self.c
    }

    pub fn is_abelian(&self) -> bool {
        self.c.is_zero()
    }

    /// Nonzero brackets `[e_i, e_j] ∋ c·e_k` with `i < j`, 1-based.
    pub fn brackets(&self) -> Vec<(usize, usize, usize, Scalar)> {
        self.c
            .nonzeros()
            .filter(|(ix, _)| ix[0] < ix[1])
            .map(|(ix, v)| (ix[0] + 1, ix[1] + 1, ix[2] + 1, v.clone()))
            .collect()
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let xt = vector_tensor(x);
        let yt = vector_tensor(y);
        tensor_vector(&einsum("i,j,ijk->k", &[&xt, &yt, &self.c]))
    }

    /// Matrix of `ad_V` acting on the basis: `(ad_V)_{s j} = Σ_i V_i c^s_ij`,
    /// so that `[V, e_j] = Σ_s (ad_V)_{s j} e_s`.
    pub fn ad(&self, v: &Vector) -> Tensor {
        einsum("i,ijs->sj", &[&vector_tensor(v), &self.c])
    }

    /// `tr ad_X = 0` for all `X`.
    pub fn is_unimodular(&self) -> bool {
        einsum("ijj->i", &[&self.c]).is_zero()
    }

    /// All constants negated; models right-invariant vector fields.
    pub fn opposite(&self) -> LieAlgebra {
        Self::from_constants_unchecked(-&self.c)
    }

    /// `de_k` for a basis index `k` in `1..=7`.
    pub fn d_basis(&self, k: usize) -> &AltForm {
        &self.de[k - 1]
    }

    /// Chevalley–Eilenberg differential on left-invariant forms, extended
    /// from `de_k = −Σ_{i<j} c^k_ij e_ij` by the Leibniz rule.
    pub fn d(&self, alpha: &AltForm) -> AltForm {
        let k = alpha.degree();
        if k >= DIM {
            return AltForm::zero(DIM);
        }
        let mut out = AltForm::zero(k + 1);
        for (idx, coeff) in alpha.terms() {
            for p in idx.positions() {
                let de = &self.de[p];
                if de.is_zero() {
                    continue;
                }
                let (sign, rest) = idx.remove(p).expect("position is present");
                let rest = AltForm::monomial(&rest.indices(), coeff.scale_int(sign as i64));
                out = &out + &de.wedge(&rest).expect("degree fits");
            }
        }
        out
    }

    /// `δα = (−1)^k * d * α` on k-forms.
    pub fn codifferential(&self, alpha: &AltForm) -> Result<AltForm, FormError> {
        let k = alpha.degree();
        if k == 0 {
            return Err(FormError::CodifferentialOfFunction);
        }
        let v = self.d(&alpha.hodge()).hodge();
        Ok(if k.is_multiple_of(2) { v } else { -v })
    }

    /// Lie derivative of a left-invariant covariant tensor:
    /// `(L_V A)(X_1, …) = −Σ_m A(…, [V, X_m], …)`.
    pub fn lie_derivative(&self, v: &Vector, a: &Tensor) -> Tensor {
        let ad = self.ad(v);
        let r = a.rank();
        let mut out = Tensor::zeros(r);
        let letters: Vec<char> = "abcdefg".chars().take(r).collect();
        let target: String = letters.iter().collect();
        for m in 0..r {
            let mut src = letters.clone();
            src[m] = 's';
            let spec = format!("s{},{}->{}", letters[m], src.iter().collect::<String>(), target);
            out = &out - &einsum(&spec, &[&ad, a]);
        }
        out
    }

    /// Lie derivative of a form, as the derivation extending
    /// `L_V e_k = −Σ_j (ad_V)_{k j} e_j`.
    pub fn lie_derivative_form(&self, v: &Vector, alpha: &AltForm) -> AltForm {
        let ad = self.ad(v);
        let mut out = AltForm::zero(alpha.degree());
        for (idx, coeff) in alpha.terms() {
            for p in idx.positions() {
                let (sign, rest) = idx.remove(p).expect("position is present");
                let rest = AltForm::monomial(&rest.indices(), coeff.scale_int(-sign as i64));
                for j in 0..DIM {
                    let a = ad.get(&[p, j]);
                    if !a.is_zero() {
                        let ej = AltForm::monomial(&[j + 1], a.clone());
                        out = &out + &ej.wedge(&rest).expect("degree fits");
                    }
                }
            }
        }
        out
    }

    /// `L_V g` for the identity metric.
    pub fn lie_derivative_metric(&self, v: &Vector) -> Tensor {
        self.lie_derivative(v, &Tensor::identity())
    }
}

pub(crate) fn vector_tensor(v: &Vector) -> Tensor {
    Tensor::from_fn(1, |ix| v[ix[0]].clone())
}

pub(crate) fn tensor_vector(t: &Tensor) -> Vector {
    Vector(std::array::from_fn(|i| t.get(&[i]).clone()))
}

/// Brackets with sign `s` on a cyclic triple: `[e_b, e_c] = s·e_a` and cyclic.
fn cyclic(a: usize, b: usize, c: usize, s: i64) -> [(usize, usize, usize, Scalar); 3] {
    [
        (b, c, a, Scalar::from_int(s)),
        (c, a, b, Scalar::from_int(s)),
        (a, b, c, Scalar::from_int(s)),
    ]
}

/// Named algebras used throughout the tests and the example catalog.
pub mod named {
    use super::*;

    /// `su(2) ⊕ su(2) ⊕ ℝ` with `de1 = e23, de2 = e31, de3 = e12`,
    /// `de4 = e56, de5 = e64, de6 = e45`, `de7 = 0`.
    pub fn su2_su2_r() -> LieAlgebra {
        let brackets = cyclic(1, 2, 3, -1).into_iter().chain(cyclic(4, 5, 6, -1));
        LieAlgebra::from_brackets(brackets).expect("valid algebra")
    }

    /// `ℝ³ ⊕ su(2) ⊕ ℝ` with the `su(2)` factor on `e4, e5, e6`.
    pub fn r3_su2_r() -> LieAlgebra {
        LieAlgebra::from_brackets(cyclic(4, 5, 6, -1)).expect("valid algebra")
    }

    /// Two-step nilpotent algebra with `de7 = a e12 + b e34 + c e56`.
    pub fn heisenberg(a: i64, b: i64, c: i64) -> LieAlgebra {
        let br = [(1, 2, 7, a), (3, 4, 7, b), (5, 6, 7, c)].map(|(i, j, k, v)| (i, j, k, Scalar::from_int(-v)));
        LieAlgebra::from_brackets(br).expect("valid algebra")
    }
}
