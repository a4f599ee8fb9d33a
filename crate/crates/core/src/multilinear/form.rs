use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use thiserror::Error;

use super::index::{MultiIndex, DIM};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("wedge of degrees {0} and {1} exceeds dimension 7")]
    DegreeOverflow(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("interior product needs a form of degree at least 1")]
    InteriorOfFunction,
    #[error("codifferential needs a form of degree at least 1")]
    CodifferentialOfFunction,
    #[error("invalid multi-index {0:?} for degree {1}")]
    BadIndex(Vec<usize>, usize),
}

/// A vector of the 7-dimensional model space. Vectors and 1-forms are
/// identified through the identity metric.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Vector(pub [Scalar; DIM]);

impl Vector {
    pub fn zero() -> Self {
        Vector::default()
    }

    /// Unit vector `e_i`, 1-based.
    pub fn basis(i: usize) -> Self {
        assert!((1..=DIM).contains(&i), "basis index {i} out of range");
        let mut v = Vector::zero();
        v.0[i - 1] = Scalar::one();
        v
    }

    pub fn from_ints(xs: [i64; DIM]) -> Self {
        Vector(xs.map(Scalar::from_int))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn to_form(&self) -> AltForm {
        let mut f = AltForm::zero(1);
        for (p, c) in self.0.iter().enumerate() {
            f.add_term(MultiIndex::from_bits(1 << p), c);
        }
        f
    }

    /// Reads a 1-form back as a vector. Panics on other degrees.
    pub fn from_form(form: &AltForm) -> Self {
        assert_eq!(form.degree(), 1, "expected a 1-form");
        let mut v = Vector::zero();
        for (idx, c) in form.terms() {
            v.0[idx.positions().next().unwrap()] = c.clone();
        }
        v
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.to_form(), f)
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, p: usize) -> &Scalar {
        &self.0[p]
    }
}

impl<'a> Add<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(std::array::from_fn(|p| &self.0[p] + &rhs.0[p]))
    }
}

impl<'a> Sub<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(std::array::from_fn(|p| &self.0[p] - &rhs.0[p]))
    }
}

/// An alternating k-form on the oriented orthonormal frame `e1..e7`.
///
/// Coefficients are stored sparsely against increasing multi-indices, so the
/// form is `Σ_I coeff_I e_I`. The coefficient of `e_I` coincides with the
/// tensor component `α(e_{i1}, …, e_{ik})`.
#[derive(Clone, PartialEq, Eq)]
pub struct AltForm {
    degree: usize,
    coeffs: BTreeMap<MultiIndex, Scalar>,
}

impl AltForm {
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= DIM, "degree {degree} exceeds 7");
        AltForm {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        let mut f = AltForm::zero(0);
        f.add_term(MultiIndex::EMPTY, &c);
        f
    }

    /// The volume form `e1234567`.
    pub fn volume() -> Self {
        AltForm::basis(&[1, 2, 3, 4, 5, 6, 7])
    }

    /// The monomial `e_{i1…ik}` (1-based, strictly increasing).
    pub fn basis(indices: &[usize]) -> Self {
        AltForm::monomial(indices, Scalar::one())
    }

    pub fn monomial(indices: &[usize], c: Scalar) -> Self {
        let idx = MultiIndex::new(indices).unwrap_or_else(|| panic!("bad multi-index {indices:?}"));
        let mut f = AltForm::zero(indices.len());
        f.add_term(idx, &c);
        f
    }

    /// Builds a form from `(indices, coefficient)` pairs; repeated indices accumulate.
    pub fn from_terms<'a, I>(degree: usize, terms: I) -> Result<Self, FormError>
    where
        I: IntoIterator<Item = (&'a [usize], Scalar)>,
    {
        let mut f = AltForm::zero(degree);
        for (indices, c) in terms {
            let idx = MultiIndex::new(indices)
                .filter(|m| m.degree() == degree)
                .ok_or_else(|| FormError::BadIndex(indices.to_vec(), degree))?;
            f.add_term(idx, &c);
        }
        Ok(f)
    }

    /// Integer-coefficient shorthand used heavily in tests and catalogs.
    pub fn from_int_terms(degree: usize, terms: &[(&[usize], i64)]) -> Self {
        AltForm::from_terms(degree, terms.iter().map(|&(i, c)| (i, Scalar::from_int(c)))).expect("valid integer terms")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, &Scalar)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, idx: MultiIndex) -> Scalar {
        self.coeffs.get(&idx).cloned().unwrap_or_default()
    }

    /// Coefficient of `e_{indices}` (1-based, strictly increasing).
    pub fn get(&self, indices: &[usize]) -> Scalar {
        MultiIndex::new(indices).map(|i| self.coeff(i)).unwrap_or_default()
    }

    /// Tensor component at arbitrary 0-based positions, antisymmetry applied.
    pub fn component(&self, positions: &[usize]) -> Scalar {
        debug_assert_eq!(positions.len(), self.degree);
        match MultiIndex::sort_positions(positions) {
            Some((idx, sign)) => match self.coeffs.get(&idx) {
                Some(c) if sign > 0 => c.clone(),
                Some(c) => -c,
                None => Scalar::zero(),
            },
            None => Scalar::zero(),
        }
    }

    pub(crate) fn add_term(&mut self, idx: MultiIndex, c: &Scalar) {
        debug_assert_eq!(idx.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(idx).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn scale(&self, c: &Scalar) -> AltForm {
        if c.is_zero() {
            return AltForm::zero(self.degree);
        }
        AltForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &AltForm) -> Result<AltForm, FormError> {
        if self.degree != other.degree {
            return Err(FormError::DegreeMismatch(self.degree, other.degree));
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(*k, v);
        }
        Ok(out)
    }

    /// Exterior product `self ∧ other`.
    pub fn wedge(&self, other: &AltForm) -> Result<AltForm, FormError> {
        if self.degree + other.degree > DIM {
            return Err(FormError::DegreeOverflow(self.degree, other.degree));
        }
        let mut out = AltForm::zero(self.degree + other.degree);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                if let Some(sign) = a.wedge_sign(*b) {
                    let prod = ca * cb;
                    let prod = if sign > 0 { prod } else { -prod };
                    out.add_term(MultiIndex::from_bits(a.bits() | b.bits()), &prod);
                }
            }
        }
        Ok(out)
    }

    /// Interior product `X ⌟ self`, i.e. `(X⌟α)(Y, …) = α(X, Y, …)`.
    pub fn interior(&self, x: &Vector) -> Result<AltForm, FormError> {
        if self.degree == 0 {
            return Err(FormError::InteriorOfFunction);
        }
        let mut out = AltForm::zero(self.degree - 1);
        for (p, xp) in x.0.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            for (idx, c) in &self.coeffs {
                if let Some((sign, rest)) = idx.remove(p) {
                    let v = xp * c;
                    out.add_term(rest, &if sign > 0 { v } else { -v });
                }
            }
        }
        Ok(out)
    }

    /// `e_i ⌟ self` for a basis index `i` in `1..=7`.
    pub fn interior_basis(&self, i: usize) -> Result<AltForm, FormError> {
        if self.degree == 0 {
            return Err(FormError::InteriorOfFunction);
        }
        assert!((1..=DIM).contains(&i), "basis index {i} out of range");
        let p = i - 1;
        let mut out = AltForm::zero(self.degree - 1);
        for (idx, c) in &self.coeffs {
            if let Some((sign, rest)) = idx.remove(p) {
                out.add_term(rest, &if sign > 0 { c.clone() } else { -c });
            }
        }
        Ok(out)
    }

    /// Hodge star for the identity metric and orientation `e1…e7`,
    /// normalized so that `α ∧ *β = ⟨α, β⟩ vol`.
    pub fn hodge(&self) -> AltForm {
        let mut out = AltForm::zero(DIM - self.degree);
        for (idx, c) in &self.coeffs {
            let comp = idx.complement();
            let sign = idx.wedge_sign(comp).expect("complement is disjoint");
            out.add_term(comp, &if sign > 0 { c.clone() } else { -c });
        }
        out
    }

    /// Form inner product `⟨α, β⟩ = Σ_I α_I β_I` over increasing multi-indices.
    pub fn inner(&self, other: &AltForm) -> Result<Scalar, FormError> {
        if self.degree != other.degree {
            return Err(FormError::DegreeMismatch(self.degree, other.degree));
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(small
            .coeffs
            .iter()
            .filter_map(|(k, v)| large.coeffs.get(k).map(|w| v * w))
            .sum())
    }

    /// Full index contraction `α_{i1…ik} β_{i1…ik}` over all ordered tuples,
    /// i.e. `k!` times the form inner product. This is the tensor norm pairing.
    pub fn full_contract(&self, other: &AltForm) -> Result<Scalar, FormError> {
        Ok(self.inner(other)?.scale_int(factorial(self.degree)))
    }

    /// `full_contract(self, self)`.
    pub fn norm_sq(&self) -> Scalar {
        self.full_contract(self).expect("same degree")
    }

    /// Top-degree coefficient of a 7-form (multiple of `vol`).
    pub fn top_coeff(&self) -> Scalar {
        assert_eq!(self.degree, DIM);
        self.coeff(MultiIndex::FULL)
    }

    /// Scalar value of a 0-form.
    pub fn constant_value(&self) -> Scalar {
        assert_eq!(self.degree, 0);
        self.coeff(MultiIndex::EMPTY)
    }

    pub fn to_f64_terms(&self) -> Vec<(Vec<usize>, f64)> {
        self.terms().map(|(k, v)| (k.indices(), v.to_f64())).collect()
    }
}

pub(crate) fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

/// Human-readable sum such as `e123 + e456`, `-sqrt2*e7` or `(1-sqrt2)*e12`.
impl fmt::Display for AltForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, v)) in self.coeffs.iter().enumerate() {
            let c = v.to_string();
            let (neg, mag) = match c.strip_prefix('-') {
                Some(rest) if !rest.contains(['-', '+']) => (true, rest.to_string()),
                _ => (false, c),
            };
            let term = match (mag.as_str(), self.degree) {
                (m, 0) => m.to_string(),
                ("1", _) => k.to_string(),
                (m, _) if m.contains(['-', '+']) => format!("({m})*{k}"),
                (m, _) => format!("{m}*{k}"),
            };
            match (n, neg) {
                (0, true) => write!(f, "-{term}")?,
                (0, false) => f.write_str(&term)?,
                (_, true) => write!(f, " - {term}")?,
                (_, false) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AltForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0[{}]", self.degree);
        }
        let mut first = true;
        for (k, v) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if v.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "({v}){k}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a AltForm> for &'a AltForm {
    type Output = AltForm;
    /// Panics on mismatched degrees; see [`AltForm::checked_add`].
    fn add(self, rhs: &AltForm) -> AltForm {
        self.checked_add(rhs).expect("adding forms of different degree")
    }
}

impl<'a> Sub<&'a AltForm> for &'a AltForm {
    type Output = AltForm;
    fn sub(self, rhs: &AltForm) -> AltForm {
        self.checked_add(&-rhs).expect("subtracting forms of different degree")
    }
}

impl Add for AltForm {
    type Output = AltForm;
    fn add(self, rhs: AltForm) -> AltForm {
        &self + &rhs
    }
}

impl Sub for AltForm {
    type Output = AltForm;
    fn sub(self, rhs: AltForm) -> AltForm {
        &self - &rhs
    }
}

impl Neg for &AltForm {
    type Output = AltForm;
    fn neg(self) -> AltForm {
        AltForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Neg for AltForm {
    type Output = AltForm;
    fn neg(self) -> AltForm {
        -&self
    }
}

impl<'a> Mul<&'a AltForm> for &'a Scalar {
    type Output = AltForm;
    fn mul(self, rhs: &AltForm) -> AltForm {
        rhs.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(ix: &[usize]) -> AltForm {
        AltForm::basis(ix)
    }

    #[test]
    fn display_is_readable() {
        assert_eq!((&e(&[4, 5, 6]) + &e(&[1, 2, 3])).to_string(), "e123 + e456");
        assert_eq!((-e(&[3])).to_string(), "-e3");
        assert_eq!((&e(&[4]) - &e(&[3])).to_string(), "-e3 + e4");
        let g = &AltForm::monomial(&[1, 2], Scalar::frac(1, 2)) - &AltForm::monomial(&[3, 4], Scalar::quadratic(1, 1));
        assert_eq!(g.to_string(), "1/2*e12 + (-1-sqrt2)*e34");
        assert_eq!(
            AltForm::monomial(&[7], Scalar::quadratic(0, -1)).to_string(),
            "-sqrt2*e7"
        );
        assert_eq!(AltForm::zero(2).to_string(), "0");
    }

    #[test]
    fn basic_wedges() {
        assert_eq!(e(&[1]).wedge(&e(&[2])).unwrap(), e(&[1, 2]));
        assert!(e(&[1]).wedge(&e(&[1])).unwrap().is_zero());
        assert_eq!(e(&[2]).wedge(&e(&[1])).unwrap(), -e(&[1, 2]));
        assert_eq!(
            e(&[1, 2, 3, 4]).wedge(&e(&[1, 5, 6, 7])).unwrap_err(),
            FormError::DegreeOverflow(4, 4)
        );
    }

    #[test]
    fn interior_examples() {
        assert_eq!(e(&[1, 2]).interior(&Vector::basis(1)).unwrap(), e(&[2]));
        assert_eq!(e(&[1, 2, 3]).interior(&Vector::basis(2)).unwrap(), -e(&[1, 3]));
        assert_eq!(
            AltForm::constant(Scalar::one())
                .interior(&Vector::basis(1))
                .unwrap_err(),
            FormError::InteriorOfFunction
        );
    }

    #[test]
    fn hodge_examples() {
        assert_eq!(AltForm::constant(Scalar::one()).hodge(), AltForm::volume());
        assert_eq!(e(&[1]).hodge(), e(&[2, 3, 4, 5, 6, 7]));
        assert_eq!(e(&[2]).hodge(), -e(&[1, 3, 4, 5, 6, 7]));
    }

    #[test]
    fn contraction_counts_orderings() {
        assert_eq!(e(&[1, 2]).full_contract(&e(&[1, 2])).unwrap(), Scalar::from_int(2));
        assert_eq!(
            e(&[1, 2]).full_contract(&e(&[1, 2, 3])).unwrap_err(),
            FormError::DegreeMismatch(2, 3)
        );
    }

    #[test]
    fn component_applies_signs() {
        let f = e(&[1, 2, 7]);
        assert_eq!(f.component(&[0, 1, 6]), Scalar::one());
        assert_eq!(f.component(&[1, 0, 6]), -Scalar::one());
        assert_eq!(f.component(&[6, 0, 1]), Scalar::one());
        assert_eq!(f.component(&[0, 0, 6]), Scalar::zero());
    }

    #[test]
    fn from_terms_validates() {
        assert!(AltForm::from_terms(2, [(&[2usize, 1][..], Scalar::one())]).is_err());
        assert!(AltForm::from_terms(2, [(&[1usize, 2, 3][..], Scalar::one())]).is_err());
        let f = AltForm::from_int_terms(2, &[(&[1, 2], 1), (&[1, 2], -1)]);
        assert!(f.is_zero());
    }
}
