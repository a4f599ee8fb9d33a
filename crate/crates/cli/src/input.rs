//! Structure description files: a named Lie algebra given by brackets and an
//! optional fundamental 3-form.

use std::fmt;

use g2forge_core::{AltForm, G2FormData, G2Structure, LieAlgebra, LieError, Scalar};
use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

/// One problem in an input document, located by a JSON pointer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Issue {
    pub pointer: String,
    pub message: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.pointer.is_empty() { "/" } else { &self.pointer };
        write!(f, "{at}: {}", self.message)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("invalid structure description:\n  {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n  "))]
    Invalid(Vec<Issue>),
}

impl InputError {
    pub fn issues(&self) -> &[Issue] {
        match self {
            InputError::Json(_) => &[],
            InputError::Invalid(v) => v,
        }
    }

    fn at(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Invalid(vec![Issue {
            pointer: pointer.into(),
            message: message.into(),
        }])
    }
}

/// `[e_i, e_j] ∋ c·e_k`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiTerm {
    pub idx: [usize; 3],
    pub c: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pairing {
    /// Pair with the same form on the opposite algebra.
    Opposite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureSpec {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub brackets: Vec<Bracket>,
    /// Defaults to the standard 3-form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<PhiTerm>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairing: Option<Pairing>,
}

/// Parsed and validated input, ready for analysis.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub spec: StructureSpec,
    pub algebra: LieAlgebra,
    pub forms: G2FormData,
}

impl Loaded {
    pub fn structure(&self) -> G2Structure {
        G2Structure::new(self.algebra.clone(), self.forms.clone())
    }
}

const KEYS: [&str; 5] = ["name", "description", "brackets", "phi", "pairing"];

/// Parses and validates a structure description.
pub fn parse_spec(bytes: &[u8]) -> Result<StructureSpec, InputError> {
    let value: Value = serde_json::from_slice(bytes).map_err(|e| InputError::Json(e.to_string()))?;
    let mut issues = Vec::new();
    let Some(obj) = value.as_object() else {
        return Err(InputError::at("", "expected an object"));
    };
    for key in obj.keys().filter(|k| !KEYS.contains(&k.as_str())) {
        issues.push(issue(&format!("/{key}"), "unknown field"));
    }
    let name = match obj.get("name") {
        Some(Value::String(s)) if !s.is_empty() => s.clone(),
        Some(_) => {
            issues.push(issue("/name", "expected a non-empty string"));
            String::new()
        }
        None => {
            issues.push(issue("/name", "missing"));
            String::new()
        }
    };
    let description = match obj.get("description") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => {
            issues.push(issue("/description", "expected a string"));
            None
        }
    };
    let brackets = match obj.get("brackets") {
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .filter_map(|(n, v)| bracket(v, &format!("/brackets/{n}"), &mut issues))
            .collect(),
        Some(_) => {
            issues.push(issue("/brackets", "expected an array"));
            Vec::new()
        }
        None => {
            issues.push(issue("/brackets", "missing"));
            Vec::new()
        }
    };
    let phi = match obj.get("phi") {
        None | Some(Value::Null) => None,
        Some(Value::Array(items)) => Some(
            items
                .iter()
                .enumerate()
                .filter_map(|(n, v)| phi_term(v, &format!("/phi/{n}"), &mut issues))
                .collect(),
        ),
        Some(_) => {
            issues.push(issue("/phi", "expected an array"));
            None
        }
    };
    let pairing = match obj.get("pairing") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) if s == "opposite" => Some(Pairing::Opposite),
        Some(_) => {
            issues.push(issue("/pairing", "expected \"opposite\""));
            None
        }
    };
    if issues.is_empty() {
        Ok(StructureSpec {
            name,
            description,
            brackets,
            phi,
            pairing,
        })
    } else {
        Err(InputError::Invalid(issues))
    }
}

fn issue(pointer: &str, message: impl Into<String>) -> Issue {
    Issue {
        pointer: pointer.to_string(),
        message: message.into(),
    }
}

fn object<'a>(v: &'a Value, at: &str, issues: &mut Vec<Issue>) -> Option<&'a Map<String, Value>> {
    let obj = v.as_object();
    if obj.is_none() {
        issues.push(issue(at, "expected an object"));
    }
    obj
}

fn index(obj: &Map<String, Value>, key: &str, at: &str, issues: &mut Vec<Issue>) -> Option<usize> {
    let here = format!("{at}/{key}");
    match obj.get(key).map(Value::as_u64) {
        None => issues.push(issue(&here, "missing")),
        Some(Some(n)) if (1..=7).contains(&n) => return Some(n as usize),
        Some(_) => issues.push(issue(&here, "index must be an integer in 1..7")),
    }
    None
}

fn scalar(obj: &Map<String, Value>, at: &str, issues: &mut Vec<Issue>) -> Option<String> {
    let here = format!("{at}/c");
    let text = match obj.get("c") {
        None => {
            issues.push(issue(&here, "missing"));
            return None;
        }
        Some(Value::String(s)) => s.clone(),
        Some(Value::Number(n)) if n.is_i64() => n.to_string(),
        Some(_) => {
            issues.push(issue(&here, "expected a scalar string such as \"-1/2*sqrt2\""));
            return None;
        }
    };
    match text.parse::<Scalar>() {
        Ok(_) => Some(text),
        Err(e) => {
            issues.push(issue(&here, e.to_string()));
            None
        }
    }
}

fn unknown_keys(obj: &Map<String, Value>, allowed: &[&str], at: &str, issues: &mut Vec<Issue>) {
    for key in obj.keys().filter(|k| !allowed.contains(&k.as_str())) {
        issues.push(issue(&format!("{at}/{key}"), "unknown field"));
    }
}

fn bracket(v: &Value, at: &str, issues: &mut Vec<Issue>) -> Option<Bracket> {
    let obj = object(v, at, issues)?;
    unknown_keys(obj, &["i", "j", "k", "c"], at, issues);
    let (i, j, k, c) = (
        index(obj, "i", at, issues),
        index(obj, "j", at, issues),
        index(obj, "k", at, issues),
        scalar(obj, at, issues),
    );
    let (i, j, k, c) = (i?, j?, k?, c?);
    if i == j {
        issues.push(issue(&format!("{at}/j"), "a bracket needs two distinct indices"));
        return None;
    }
    Some(Bracket { i, j, k, c })
}

fn phi_term(v: &Value, at: &str, issues: &mut Vec<Issue>) -> Option<PhiTerm> {
    let obj = object(v, at, issues)?;
    unknown_keys(obj, &["idx", "c"], at, issues);
    let c = scalar(obj, at, issues);
    let here = format!("{at}/idx");
    let idx = match obj.get("idx") {
        Some(Value::Array(a)) if a.len() == 3 => {
            let parsed: Vec<Option<usize>> = a
                .iter()
                .map(|x| x.as_u64().filter(|n| (1..=7).contains(n)).map(|n| n as usize))
                .collect();
            for (n, p) in parsed.iter().enumerate() {
                if p.is_none() {
                    issues.push(issue(&format!("{here}/{n}"), "index must be an integer in 1..7"));
                }
            }
            let idx: Option<Vec<usize>> = parsed.into_iter().collect();
            let idx = idx?;
            if !(idx[0] < idx[1] && idx[1] < idx[2]) {
                issues.push(issue(&here, "indices must be strictly increasing"));
                return None;
            }
            [idx[0], idx[1], idx[2]]
        }
        Some(_) => {
            issues.push(issue(&here, "expected three indices"));
            return None;
        }
        None => {
            issues.push(issue(&here, "missing"));
            return None;
        }
    };
    Some(PhiTerm { idx, c: c? })
}

impl StructureSpec {
    /// Builds the algebra and forms, reporting axiom and metric failures.
    pub fn load(&self) -> Result<Loaded, InputError> {
        let triples = self.brackets.iter().map(|b| (b.i, b.j, b.k, parse(&b.c)));
        let algebra = LieAlgebra::from_brackets(triples).map_err(|e| match e {
            LieError::Conflict { i, j, k } => {
                let n = self
                    .brackets
                    .iter()
                    .rposition(|b| b.k == k && (b.i.min(b.j), b.i.max(b.j)) == (i, j))
                    .unwrap_or(0);
                InputError::at(format!("/brackets/{n}"), e.to_string())
            }
            LieError::Invalid(violations) => {
                InputError::Invalid(violations.iter().map(|v| issue("/brackets", v.to_string())).collect())
            }
            other => InputError::at("/brackets", other.to_string()),
        })?;
        let forms = match &self.phi {
            None => G2FormData::standard(),
            Some(terms) => {
                let mut phi = AltForm::zero(3);
                for (n, t) in terms.iter().enumerate() {
                    let term = AltForm::monomial(&t.idx, parse(&t.c));
                    if !phi.get(&t.idx).is_zero() {
                        return Err(InputError::at(format!("/phi/{n}/idx"), "repeated index triple"));
                    }
                    phi = &phi + &term;
                }
                G2FormData::new(phi).map_err(|e| InputError::at("/phi", e.to_string()))?
            }
        };
        Ok(Loaded {
            spec: self.clone(),
            algebra,
            forms,
        })
    }
}

fn parse(c: &str) -> Scalar {
    c.parse().expect("validated while parsing")
}

/// Parses and loads in one step.
pub fn load_bytes(bytes: &[u8]) -> Result<Loaded, InputError> {
    parse_spec(bytes)?.load()
}
