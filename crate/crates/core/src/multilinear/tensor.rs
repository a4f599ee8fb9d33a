use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use super::form::{factorial, AltForm};
use super::index::{MultiIndex, DIM};
use crate::scalar::Scalar;

/// Dense covariant tensor of rank `r` over the 7-dimensional frame,
/// `7^r` exact entries in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    rank: usize,
    data: Vec<Scalar>,
}

fn offset(idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| {
        debug_assert!(i < DIM);
        acc * DIM + i
    })
}

fn decode(mut off: usize, rank: usize, out: &mut [usize]) {
    for slot in (0..rank).rev() {
        out[slot] = off % DIM;
        off /= DIM;
    }
}

impl Tensor {
    pub fn zeros(rank: usize) -> Self {
        Tensor {
            rank,
            data: vec![Scalar::zero(); DIM.pow(rank as u32)],
        }
    }

    pub fn scalar(c: Scalar) -> Self {
        Tensor { rank: 0, data: vec![c] }
    }

    pub fn identity() -> Self {
        Tensor::from_fn(2, |ix| if ix[0] == ix[1] { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rank: usize, mut f: impl FnMut(&[usize]) -> Scalar) -> Self {
        let mut idx = vec![0; rank];
        let data = (0..DIM.pow(rank as u32))
            .map(|off| {
                decode(off, rank, &mut idx);
                f(&idx)
            })
            .collect();
        Tensor { rank, data }
    }

    /// Fully antisymmetric tensor with components of the form.
    pub fn from_form(form: &AltForm) -> Self {
        let k = form.degree();
        let mut t = Tensor::zeros(k);
        for (idx, c) in form.terms() {
            let pos: Vec<usize> = idx.positions().collect();
            for_each_permutation(&pos, |perm, sign| {
                t.data[offset(perm)] = if sign > 0 { c.clone() } else { -c };
            });
        }
        t
    }

    /// Reads increasing-index entries as a form without checking antisymmetry.
    pub fn to_form_unchecked(&self) -> AltForm {
        let mut f = AltForm::zero(self.rank);
        for idx in MultiIndex::all_of_degree(self.rank) {
            let pos: Vec<usize> = idx.positions().collect();
            f.add_term(idx, &self.data[offset(&pos)]);
        }
        f
    }

    /// `Some(form)` iff the tensor is totally antisymmetric.
    pub fn to_form(&self) -> Option<AltForm> {
        let f = self.to_form_unchecked();
        (Tensor::from_form(&f) == *self).then_some(f)
    }

    /// Antisymmetrization with the determinant convention:
    /// `Alt(t)_{i1..ik} = (1/k!) Σ_σ sgn σ t_{σ(i)}`.
    pub fn antisymmetrize(&self) -> AltForm {
        let mut f = AltForm::zero(self.rank);
        let k = factorial(self.rank);
        for idx in MultiIndex::all_of_degree(self.rank) {
            let pos: Vec<usize> = idx.positions().collect();
            let mut acc = Scalar::zero();
            for_each_permutation(&pos, |perm, sign| {
                let v = &self.data[offset(perm)];
                if sign > 0 {
                    acc += v;
                } else {
                    acc -= v;
                }
            });
            f.add_term(idx, &(&acc / &Scalar::from_int(k)));
        }
        f
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        debug_assert_eq!(idx.len(), self.rank);
        &self.data[offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        self.data[offset(idx)] = v;
    }

    pub fn add_at(&mut self, idx: &[usize], v: &Scalar) {
        self.data[offset(idx)] += v;
    }

    pub fn value(&self) -> &Scalar {
        assert_eq!(self.rank, 0);
        &self.data[0]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Sum of squares of all entries (the full contraction with itself).
    pub fn norm_sq(&self) -> Scalar {
        self.data.iter().filter(|v| !v.is_zero()).map(|v| v * v).sum()
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        Tensor {
            rank: self.rank,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn scale_frac(&self, num: i64, den: i64) -> Tensor {
        self.scale(&Scalar::frac(num, den))
    }

    /// `out(x_0, …) = self(x_{src[0]}, x_{src[1]}, …)`.
    pub fn reindex(&self, src: &[usize]) -> Tensor {
        assert_eq!(src.len(), self.rank);
        let mut from = vec![0; self.rank];
        Tensor::from_fn(self.rank, |ix| {
            for (slot, &s) in src.iter().enumerate() {
                from[slot] = ix[s];
            }
            self.data[offset(&from)].clone()
        })
    }

    pub fn transpose(&self) -> Tensor {
        assert_eq!(self.rank, 2);
        self.reindex(&[1, 0])
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rank, 2);
        (0..DIM).map(|i| &self.data[i * DIM + i]).sum()
    }

    /// Nonzero entries with their indices.
    pub fn nonzeros(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> {
        let rank = self.rank;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(off, v)| {
                let mut idx = vec![0; rank];
                decode(off, rank, &mut idx);
                (idx, v)
            })
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn max_abs_f64(&self) -> f64 {
        self.data.iter().map(|v| v.to_f64().abs()).fold(0.0, f64::max)
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor[rank {}]{{", self.rank)?;
        let mut first = true;
        for (idx, v) in self.nonzeros() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            let one_based: Vec<usize> = idx.iter().map(|i| i + 1).collect();
            write!(f, "{one_based:?}: {v}")?;
        }
        f.write_str("}")
    }
}

impl Index<&[usize]> for Tensor {
    type Output = Scalar;
    fn index(&self, idx: &[usize]) -> &Scalar {
        self.get(idx)
    }
}

impl<'a> Add<&'a Tensor> for &'a Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        Tensor {
            rank: self.rank,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Tensor> for &'a Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        Tensor {
            rank: self.rank,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Add for Tensor {
    type Output = Tensor;
    fn add(self, rhs: Tensor) -> Tensor {
        &self + &rhs
    }
}

impl Sub for Tensor {
    type Output = Tensor;
    fn sub(self, rhs: Tensor) -> Tensor {
        &self - &rhs
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        Tensor {
            rank: self.rank,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}

impl Neg for Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        -&self
    }
}

impl Mul<&Tensor> for &Scalar {
    type Output = Tensor;
    fn mul(self, rhs: &Tensor) -> Tensor {
        rhs.scale(self)
    }
}

/// Heap's algorithm over the given values, passing each arrangement and its sign.
fn for_each_permutation(values: &[usize], mut f: impl FnMut(&[usize], i32)) {
    let mut a = values.to_vec();
    let n = a.len();
    let mut c = vec![0; n];
    let mut sign = 1;
    f(&a, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            f(&a, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

struct Operand<'a> {
    labels: Vec<u8>,
    tensor: &'a Tensor,
    nonzeros: Vec<(Vec<usize>, &'a Scalar)>,
}

/// Sparse-aware Einstein summation over exact tensors, e.g.
/// `einsum("ijab,abk->ijk", &[&r, &phi])`. Labels are single ASCII letters;
/// every label absent from the output is summed over `0..7`.
pub fn einsum(spec: &str, operands: &[&Tensor]) -> Tensor {
    let (lhs, out) = spec.split_once("->").expect("einsum spec needs '->'");
    let inputs: Vec<&str> = lhs.split(',').collect();
    assert_eq!(
        inputs.len(),
        operands.len(),
        "einsum operand count mismatch in {spec:?}"
    );
    let ops: Vec<Operand> = inputs
        .iter()
        .zip(operands)
        .map(|(labels, t)| {
            let labels = labels.trim().as_bytes().to_vec();
            assert_eq!(labels.len(), t.rank(), "einsum rank mismatch in {spec:?}");
            Operand {
                labels,
                tensor: t,
                nonzeros: t.nonzeros().collect(),
            }
        })
        .collect();
    let out_labels = out.trim().as_bytes().to_vec();
    for l in &out_labels {
        assert!(
            ops.iter().any(|op| op.labels.contains(l)),
            "output label {} unbound in {spec:?}",
            *l as char
        );
    }
    let mut result = Tensor::zeros(out_labels.len());
    if ops.iter().any(|op| op.nonzeros.is_empty()) {
        return result;
    }
    let mut binding = [u8::MAX; 128];
    let mut out_idx = vec![0usize; out_labels.len()];
    recurse(
        &ops,
        0,
        &mut binding,
        &Scalar::one(),
        &out_labels,
        &mut out_idx,
        &mut result,
    );
    result
}

fn recurse(
    ops: &[Operand],
    k: usize,
    binding: &mut [u8; 128],
    acc: &Scalar,
    out_labels: &[u8],
    out_idx: &mut [usize],
    result: &mut Tensor,
) {
    if k == ops.len() {
        for (slot, l) in out_labels.iter().enumerate() {
            out_idx[slot] = binding[*l as usize] as usize;
        }
        result.add_at(out_idx, acc);
        return;
    }
    let op = &ops[k];
    let mut unbound: Vec<u8> = op
        .labels
        .iter()
        .copied()
        .filter(|l| binding[*l as usize] == u8::MAX)
        .collect();
    unbound.sort_unstable();
    unbound.dedup();
    let dense_cost = DIM.pow(unbound.len() as u32);
    if op.nonzeros.len() <= dense_cost {
        for (idx, v) in &op.nonzeros {
            // bind consistently with existing labels (and repeated labels)
            let mut newly = Vec::new();
            let mut ok = true;
            for (slot, l) in op.labels.iter().enumerate() {
                let b = &mut binding[*l as usize];
                if *b == u8::MAX {
                    *b = idx[slot] as u8;
                    newly.push(*l);
                } else if *b as usize != idx[slot] {
                    ok = false;
                    break;
                }
            }
            if ok {
                recurse(ops, k + 1, binding, &(acc * *v), out_labels, out_idx, result);
            }
            for l in newly {
                binding[l as usize] = u8::MAX;
            }
        }
    } else {
        let mut idx = vec![0usize; op.labels.len()];
        let mut vals = vec![0usize; unbound.len()];
        for combo in 0..dense_cost {
            decode(combo, unbound.len(), &mut vals);
            for (l, v) in unbound.iter().zip(&vals) {
                binding[*l as usize] = *v as u8;
            }
            for (slot, l) in op.labels.iter().enumerate() {
                idx[slot] = binding[*l as usize] as usize;
            }
            let v = op.tensor.get(&idx);
            if !v.is_zero() {
                recurse(ops, k + 1, binding, &(acc * v), out_labels, out_idx, result);
            }
        }
        for l in &unbound {
            binding[*l as usize] = u8::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_round_trip_and_antisymmetry() {
        let f = AltForm::from_int_terms(3, &[(&[1, 2, 7], 1), (&[2, 3, 6], -2)]);
        let t = Tensor::from_form(&f);
        assert_eq!(t.get(&[6, 1, 0]), &Scalar::from_int(-1));
        assert_eq!(t.get(&[5, 1, 2]), &Scalar::from_int(-2));
        assert_eq!(t.to_form(), Some(f.clone()));
        assert_eq!(t.antisymmetrize(), f);
        assert_eq!(t.norm_sq(), f.norm_sq());
        let mut s = t.clone();
        s.set(&[0, 0, 0], Scalar::one());
        assert_eq!(s.to_form(), None);
    }

    #[test]
    fn einsum_matches_naive_loops() {
        let a = Tensor::from_fn(2, |ix| Scalar::from_int((ix[0] * 3 + ix[1]) as i64 % 5 - 2));
        let b = Tensor::from_fn(3, |ix| Scalar::from_int((ix[0] + 2 * ix[1] + ix[2]) as i64 % 3 - 1));
        let c = einsum("ij,jkl->ikl", &[&a, &b]);
        for i in 0..7 {
            for k in 0..7 {
                for l in 0..7 {
                    let naive: Scalar = (0..7).map(|j| a.get(&[i, j]) * b.get(&[j, k, l])).sum();
                    assert_eq!(c.get(&[i, k, l]), &naive);
                }
            }
        }
        let tr = einsum("ii->", &[&a]);
        assert_eq!(tr.value(), &a.trace());
        let diag = einsum("iji->j", &[&b]);
        for j in 0..7 {
            let naive: Scalar = (0..7).map(|i| b.get(&[i, j, i]).clone()).sum();
            assert_eq!(diag.get(&[j]), &naive);
        }
        let swapped = einsum("jkl->lkj", &[&b]);
        assert_eq!(swapped, b.reindex(&[2, 1, 0]));
    }
}
