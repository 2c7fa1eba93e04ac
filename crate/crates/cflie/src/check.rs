use serde::{Deserialize, Serialize};

use crate::lie_core::Element;

/// Outcome of a predicate or theorem check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "OK")]
    Ok,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "NOT_HOMOGENEOUS")]
    NotHomogeneous,
}

/// Minimal evidence for a failed check: which condition broke and on what.
///
/// `elements` lists the carrier elements involved in discovery order (for a
/// binary condition: the pair, then derived elements such as the bracket
/// value). Witness selection is deterministic: conditions are tried in their
/// definition order and, within a condition, elements and scalars are scanned
/// in ascending lexicographic order, so the first violation found is the
/// smallest one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub condition: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<Element>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Witness {
    pub fn new(condition: impl Into<String>) -> Self {
        Witness {
            condition: condition.into(),
            elements: Vec::new(),
            scalar: None,
            detail: None,
        }
    }

    pub fn with_elements(mut self, elements: Vec<Element>) -> Self {
        self.elements = elements;
        self
    }

    pub fn with_scalar(mut self, scalar: u32) -> Self {
        self.scalar = Some(scalar);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Verdict plus a witness when the verdict is not `OK`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    pub fn ok() -> Self {
        CheckResult {
            verdict: Verdict::Ok,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        CheckResult {
            verdict: Verdict::Fail,
            witness: Some(witness),
        }
    }

    pub fn not_homogeneous(witness: Witness) -> Self {
        CheckResult {
            verdict: Verdict::NotHomogeneous,
            witness: Some(witness),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.verdict == Verdict::Ok
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Ok => write!(f, "OK"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::NotHomogeneous => write!(f, "NOT_HOMOGENEOUS"),
        }
    }
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.verdict)?;
        if let Some(w) = &self.witness {
            write!(f, " [{}", w.condition)?;
            if !w.elements.is_empty() {
                let parts: Vec<String> = w.elements.iter().map(|e| e.to_string()).collect();
                write!(f, " at {}", parts.join(", "))?;
            }
            if let Some(a) = w.scalar {
                write!(f, " scalar {a}")?;
            }
            if let Some(d) = &w.detail {
                write!(f, "; {d}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
