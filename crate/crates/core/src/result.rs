use std::fmt;

use serde::{Deserialize, Serialize};

use crate::parts::PartSequence;
use crate::verify::ColumnSet;

/// Which engine produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Subsets,
    ColumnDp,
    SequenceDp,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Subsets => "subsets",
            Method::ColumnDp => "column-dp",
            Method::SequenceDp => "sequence-dp",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed `γ_a` value with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    pub value: usize,
    pub method: Method,
    pub witness: Option<ColumnSet>,
    pub sequence: Option<PartSequence>,
    /// Winning candidate family (1..=4) when the closed form picked one.
    pub family: Option<usize>,
    /// Set when threshold dispatch could not decide and min-of-four was used instead.
    pub dispatch_fallback: bool,
}

impl GammaResult {
    pub fn new(value: usize, method: Method) -> Self {
        GammaResult {
            value,
            method,
            witness: None,
            sequence: None,
            family: None,
            dispatch_fallback: false,
        }
    }

    pub fn with_witness(mut self, witness: ColumnSet) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_sequence(mut self, sequence: PartSequence) -> Self {
        self.sequence = Some(sequence);
        self
    }
}
