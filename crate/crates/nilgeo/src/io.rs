//! JSON algebra documents.
//!
//! The document format is
//!
//! ```json
//! {
//!   "dimension": 5,
//!   "brackets": [ {"i": 1, "j": 2, "k": 5, "c": 1.0} ],
//!   "gram": [[1.0, ...], ...]
//! }
//! ```
//!
//! with 1-based indices, `i < j` required per entry (the other half of the
//! structure tensor is filled by antisymmetry), duplicate `(i, j, k)`
//! triples rejected, and `gram` optional (identity when omitted).

use crate::algebra::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub dimension: usize,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<f64>>>,
}

impl AlgebraDocument {
    pub fn into_algebra(self) -> Result<MetricLieAlgebra> {
        if self.dimension == 0 {
            return Err(Error::MalformedDocument(
                "dimension must be positive".to_string(),
            ));
        }
        let gram = match self.gram {
            None => None,
            Some(rows) => {
                if rows.len() != self.dimension
                    || rows.iter().any(|r| r.len() != self.dimension)
                {
                    return Err(Error::MalformedDocument(format!(
                        "gram must be a {0}x{0} matrix",
                        self.dimension
                    )));
                }
                Some(Matrix::from_rows(&rows).expect("shape checked above"))
            }
        };
        let entries: Vec<(usize, usize, usize, f64)> = self
            .brackets
            .iter()
            .map(|b| (b.i, b.j, b.k, b.c))
            .collect();
        MetricLieAlgebra::from_bracket_entries(self.dimension, &entries, gram)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

/// Document view of an algebra: `i < j` entries of the structure tensor
/// with nonzero coefficient, in lexicographic order; the gram matrix is
/// omitted when it is the identity.
pub fn to_document(alg: &MetricLieAlgebra) -> AlgebraDocument {
    let n = alg.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in 0..n {
                let c = alg.structure().get(i, j, k);
                if c != 0.0 {
                    brackets.push(BracketEntry {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        c,
                    });
                }
            }
        }
    }
    let gram = if alg.gram_is_identity() {
        None
    } else {
        Some(alg.gram().to_nested())
    };
    AlgebraDocument {
        dimension: n,
        brackets,
        gram,
    }
}

/// Parses a document without validating the algebra axioms.
pub fn parse_algebra(text: &str) -> Result<MetricLieAlgebra> {
    let doc: AlgebraDocument = serde_json::from_str(text)
        .map_err(|e| Error::MalformedDocument(e.to_string()))?;
    doc.into_algebra()
}

/// Parses a document and validates the algebra; an axiom failure aborts
/// with the full report attached.
pub fn parse_algebra_validated(text: &str) -> Result<MetricLieAlgebra> {
    let alg = parse_algebra(text)?;
    let report = alg.validate();
    if !report.overall {
        return Err(Error::ValidationFailed(report));
    }
    Ok(alg)
}

/// Serializes an algebra as a document.
pub fn emit_algebra(alg: &MetricLieAlgebra) -> String {
    to_document(alg).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn parses_center3_structure() {
        let text = r#"{"dimension":5,"brackets":[{"i":1,"j":2,"k":3,"c":1.0}]}"#;
        let alg = parse_algebra_validated(text).unwrap();
        assert_eq!(alg.structure(), families::center3(1.0).unwrap().structure());
    }

    #[test]
    fn parses_abelian_algebra() {
        let alg = parse_algebra_validated(r#"{"dimension":2,"brackets":[]}"#).unwrap();
        assert_eq!(alg.dim(), 2);
        assert_eq!(alg.center().len(), 2);
    }

    #[test]
    fn rejects_diagonal_bracket() {
        let text = r#"{"dimension":3,"brackets":[{"i":2,"j":2,"k":1,"c":1.0}]}"#;
        assert!(matches!(
            parse_algebra(text),
            Err(Error::MalformedDocument(_))
        ));
    }

    #[test]
    fn rejects_duplicate_and_out_of_range() {
        let text = r#"{"dimension":3,"brackets":[{"i":1,"j":2,"k":3,"c":1.0},{"i":1,"j":2,"k":3,"c":2.0}]}"#;
        assert!(matches!(
            parse_algebra(text),
            Err(Error::DuplicateBracket { i: 1, j: 2, k: 3 })
        ));

        let text = r#"{"dimension":3,"brackets":[{"i":1,"j":2,"k":7,"c":1.0}]}"#;
        assert!(matches!(
            parse_algebra(text),
            Err(Error::IndexOutOfRange { index: 7, dim: 3 })
        ));
    }

    #[test]
    fn rejects_bad_json_and_bad_gram_shape() {
        assert!(matches!(
            parse_algebra("not json"),
            Err(Error::MalformedDocument(_))
        ));
        let text = r#"{"dimension":2,"brackets":[],"gram":[[1.0]]}"#;
        assert!(matches!(
            parse_algebra(text),
            Err(Error::MalformedDocument(_))
        ));
        let text = r#"{"dimension":2,"brackets":[],"extra":1}"#;
        assert!(matches!(
            parse_algebra(text),
            Err(Error::MalformedDocument(_))
        ));
    }

    #[test]
    fn validation_failure_carries_report() {
        // antisymmetric structure but Jacobi fails
        let text = r#"{"dimension":3,"brackets":[{"i":1,"j":2,"k":3,"c":1.0},{"i":1,"j":3,"k":1,"c":1.0}]}"#;
        match parse_algebra_validated(text) {
            Err(Error::ValidationFailed(report)) => {
                assert!(!report.check("jacobi_identity").unwrap().passed);
            }
            other => panic!("expected validation failure, got {other:?}"),
        }
    }

    #[test]
    fn emit_parse_round_trip_is_exact() {
        let alg = families::center1(std::f64::consts::PI, 0.25).unwrap();
        let text = emit_algebra(&alg);
        let back = parse_algebra_validated(&text).unwrap();
        assert_eq!(alg.structure(), back.structure());
        assert_eq!(alg.gram(), back.gram());
    }
}
