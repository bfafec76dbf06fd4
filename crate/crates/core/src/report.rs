//! Outcomes of verification checks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::linalg::Rational;

/// Evidence attached to a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A vector that violates the checked identity or containment, together
    /// with the degree it lives in and, when meaningful, the basis column it
    /// was produced from.
    Vector {
        degree: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        column: Option<usize>,
        vector: Vec<Rational>,
    },
    /// Two quantities that were expected to agree.
    Dimensions { left: usize, right: usize },
    /// A symbolic term whose coefficients disagree.
    Term { term: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub dimensions: BTreeMap<String, usize>,
}

impl VerificationReport {
    pub fn passed(name: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            pass: true,
            witness: None,
            dimensions: BTreeMap::new(),
        }
    }

    pub fn failed(name: impl Into<String>, witness: Witness) -> Self {
        VerificationReport {
            name: name.into(),
            pass: false,
            witness: Some(witness),
            dimensions: BTreeMap::new(),
        }
    }

    /// Pass when `witness` is `None`.
    pub fn from_witness(name: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => Self::passed(name),
            Some(w) => Self::failed(name, w),
        }
    }

    pub fn with_dimension(mut self, key: impl Into<String>, value: usize) -> Self {
        self.dimensions.insert(key.into(), value);
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// One-line human-readable description.
    pub fn summary(&self) -> String {
        let mut s = format!("{}: {}", self.name, if self.pass { "pass" } else { "FAIL" });
        if !self.dimensions.is_empty() {
            let dims: Vec<String> = self
                .dimensions
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            s.push_str(&format!(" [{}]", dims.join(", ")));
        }
        match &self.witness {
            Some(Witness::Vector { degree, column, .. }) => {
                s.push_str(&format!(" (witness at degree {degree}"));
                if let Some(c) = column {
                    s.push_str(&format!(", column {c}"));
                }
                s.push(')');
            }
            Some(Witness::Dimensions { left, right }) => {
                s.push_str(&format!(" (dimensions {left} vs {right})"));
            }
            Some(Witness::Term { term }) => s.push_str(&format!(" (term {term})")),
            None => {}
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_reports_carry_witness_in_json() {
        let r = VerificationReport::failed(
            "x",
            Witness::Vector {
                degree: 2,
                column: Some(1),
                vector: vec![Rational::new(1, 2)],
            },
        )
        .with_dimension("frt", 6);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"name":"x","pass":false,"witness":{"kind":"vector","degree":2,"column":1,"vector":["1/2"]},"dimensions":{"frt":6}}"#
        );
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.summary(), "x: FAIL [frt=6] (witness at degree 2, column 1)");
    }
}
