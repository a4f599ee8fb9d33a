//! Named residuals with exact pass/fail, the unit of all verification output.

use crate::multilinear::{AltForm, Tensor};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct LedgerEntry {
    /// Stable identifier used by tests and reports.
    pub name: String,
    /// Human-readable statement of the identity, written as `lhs = rhs`.
    pub statement: String,
    /// Exact sum of squares of every residual component.
    pub residual_sq: Scalar,
    /// Largest absolute residual component, for orientation only.
    pub max_abs: f64,
    pub pass: bool,
}

impl LedgerEntry {
    pub fn residual_norm_f64(&self) -> f64 {
        self.residual_sq.to_f64().max(0.0).sqrt()
    }

    /// Tolerance-based verdict on the rounded residual norm.
    pub fn passes_within(&self, tol: f64) -> bool {
        self.residual_norm_f64() <= tol
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct IdentityLedger {
    entries: Vec<LedgerEntry>,
}

impl IdentityLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push_tensor(&mut self, name: &str, statement: &str, residual: &Tensor) {
        self.entries.push(LedgerEntry {
            name: name.to_owned(),
            statement: statement.to_owned(),
            residual_sq: residual.norm_sq(),
            max_abs: residual.max_abs_f64(),
            pass: residual.is_zero(),
        });
    }

    pub fn push_form(&mut self, name: &str, statement: &str, residual: &AltForm) {
        self.push_tensor(name, statement, &Tensor::from_form(residual));
    }

    pub fn push_scalar(&mut self, name: &str, statement: &str, residual: &Scalar) {
        self.entries.push(LedgerEntry {
            name: name.to_owned(),
            statement: statement.to_owned(),
            residual_sq: residual * residual,
            max_abs: residual.to_f64().abs(),
            pass: residual.is_zero(),
        });
    }

    /// Records a logical condition (e.g. a biconditional) as a 0/1 residual.
    pub fn push_condition(&mut self, name: &str, statement: &str, holds: bool) {
        let r = if holds { Scalar::zero() } else { Scalar::one() };
        self.push_scalar(name, statement, &r);
    }

    pub fn extend(&mut self, other: IdentityLedger) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[LedgerEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LedgerEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}
