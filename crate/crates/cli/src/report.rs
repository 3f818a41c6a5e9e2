//! JSON shapes for command output.
//!
//! `eval --json` prints `{"expr": ..., "chi": ..., "derivation": {...}}`
//! where every derivation node is
//! `{"term", "rule", "chi", "children": [{"sign", "multiplicity", "level", "node"}]}`.
//! `level` is `"i"` for a transitional fiber, `"(j-1,j)"` for a running
//! fiber and `null` outside decompositions. An `"oracle"` array is added when
//! the expression names a catalog space that has concrete models.

use fibrous_core::{render, ChiDerivation};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationNode {
    pub term: String,
    pub rule: String,
    pub chi: i64,
    pub children: Vec<DerivationEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationEdge {
    pub sign: i8,
    pub multiplicity: u64,
    pub level: Option<String>,
    pub node: DerivationNode,
}

impl From<&ChiDerivation> for DerivationNode {
    fn from(d: &ChiDerivation) -> Self {
        Self {
            term: render(&d.term),
            rule: d.rule.to_string(),
            chi: d.chi,
            children: d
                .children
                .iter()
                .map(|c| DerivationEdge {
                    sign: c.sign.as_i64() as i8,
                    multiplicity: c.multiplicity,
                    level: c.level.map(|l| l.to_string()),
                    node: (&c.node).into(),
                })
                .collect(),
        }
    }
}

impl DerivationNode {
    /// Recomputes this node's value from its children (leaves keep their own).
    pub fn resum(&self) -> i64 {
        if self.children.is_empty() {
            return self.chi;
        }
        self.children
            .iter()
            .map(|c| i64::from(c.sign) * c.multiplicity as i64 * c.node.resum())
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Faces,
    Betti,
    Cells,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub route: Route,
    pub chi: i64,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationReport {
    pub expr: String,
    pub chi: i64,
    pub derivation: DerivationNode,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub oracle: Vec<OracleCheck>,
}

impl DerivationReport {
    /// True iff every oracle value equals the decomposition value.
    pub fn all_match(&self) -> bool {
        self.oracle.iter().all(|o| o.matches)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub params: Vec<u64>,
    pub chi: i64,
    pub expected: Option<i64>,
    pub alternatives: Vec<i64>,
    pub oracle: Vec<OracleCheck>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cell_counts: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_by_faces: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_by_betti: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_by_cells: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<Vec<Vec<u64>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogListing {
    pub name: String,
    pub notation: String,
    pub description: String,
    pub domain: String,
    pub recursion: Vec<String>,
    pub chi: Option<String>,
    pub realization: bool,
}
