//! The on-disk algebra format: a JSON document listing the basis and the
//! nonzero structure constants, with every coefficient a rational literal
//! string (\"-3/2\") so that exactness survives serialization.

use leibniz_core::{format_rational, parse_rational, LeibnizAlgebra, StructureTable};
use serde::{Deserialize, Serialize};

/// Serialized form of a Leibniz algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub table: Vec<TableEntry>,
}

/// One product `[left, right] = sum of terms`.  Omitted products are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub left: String,
    pub right: String,
    pub result: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub basis: String,
    pub coeff: String,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    /// Malformed JSON or malformed rational literal.
    #[error("PARSE_ERROR: {0}")]
    Parse(String),
    /// The table violates the Leibniz identity; the offending basis triples
    /// (i, j, k) are listed by label.
    #[error("VALIDATION_ERROR: the Leibniz identity fails on basis triples {0:?}")]
    Validation(Vec<(String, String, String)>),
    /// The same (left, right) product is defined twice.
    #[error("DUPLICATE_ENTRY: the product [{0}, {1}] is defined more than once")]
    Duplicate(String, String),
    /// A label in the table does not name a basis element.
    #[error("UNKNOWN_LABEL: {0:?} does not name a basis element")]
    UnknownLabel(String),
    /// Structural problems: dim/basis mismatch, repeated basis labels.
    #[error("PARSE_ERROR: {0}")]
    Document(String),
}

/// Parse the JSON text into a document.  Errors carry serde's line/column.
pub fn parse_document(text: &str) -> Result<AlgebraDocument, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Parse(e.to_string()))
}

/// Canonical serialization: pretty JSON with a trailing newline.  Documents
/// produced by [`algebra_to_document`] list table entries in (left, right)
/// index order, so serialize ∘ parse is the identity byte-for-byte on them.
pub fn serialize_document(doc: &AlgebraDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

/// Interpret a document as an algebra.  `validate` controls whether the
/// Leibniz identity is enforced.
pub fn document_to_algebra(
    doc: &AlgebraDocument,
    validate: bool,
) -> Result<LeibnizAlgebra, FormatError> {
    if doc.basis.len() != doc.dim {
        return Err(FormatError::Document(format!(
            "dim is {} but {} basis labels are given",
            doc.dim,
            doc.basis.len()
        )));
    }
    for (i, a) in doc.basis.iter().enumerate() {
        if doc.basis[..i].contains(a) {
            return Err(FormatError::Document(format!(
                "basis label {a:?} appears more than once"
            )));
        }
    }
    let index_of = |label: &str| -> Result<usize, FormatError> {
        doc.basis
            .iter()
            .position(|b| b == label)
            .ok_or_else(|| FormatError::UnknownLabel(label.to_string()))
    };
    let mut table: StructureTable = StructureTable::new();
    for entry in &doc.table {
        let i = index_of(&entry.left)?;
        let j = index_of(&entry.right)?;
        if table.contains_key(&(i, j)) {
            return Err(FormatError::Duplicate(
                entry.left.clone(),
                entry.right.clone(),
            ));
        }
        let mut result = Vec::with_capacity(entry.result.len());
        for term in &entry.result {
            let k = index_of(&term.basis)?;
            let coeff = parse_rational(&term.coeff).map_err(|e| {
                FormatError::Parse(format!(
                    "bad coefficient {:?} in the product [{}, {}]: {e}",
                    term.coeff, entry.left, entry.right
                ))
            })?;
            result.push((k, coeff));
        }
        table.insert((i, j), result);
    }
    let build = if validate {
        LeibnizAlgebra::new(doc.dim, doc.basis.clone(), table)
    } else {
        LeibnizAlgebra::new_unvalidated(doc.dim, doc.basis.clone(), table)
    };
    build.map_err(|e| match e {
        leibniz_core::Error::NotLeibniz { failures } => FormatError::Validation(
            failures
                .into_iter()
                .map(|(i, j, k)| {
                    (
                        doc.basis[i].clone(),
                        doc.basis[j].clone(),
                        doc.basis[k].clone(),
                    )
                })
                .collect(),
        ),
        other => FormatError::Document(other.to_string()),
    })
}

/// Parse JSON text straight to an algebra.
pub fn parse_algebra(text: &str, validate: bool) -> Result<LeibnizAlgebra, FormatError> {
    let doc = parse_document(text)?;
    document_to_algebra(&doc, validate)
}

/// Canonical document for an algebra: entries in (left, right) index order,
/// zero products omitted, coefficients as exact rational literals.
pub fn algebra_to_document(name: &str, alg: &LeibnizAlgebra) -> AlgebraDocument {
    let basis = alg.basis_names().to_vec();
    let table = alg
        .structure_table()
        .iter()
        .filter(|(_, result)| !result.is_empty())
        .map(|(&(i, j), result)| TableEntry {
            left: basis[i].clone(),
            right: basis[j].clone(),
            result: result
                .iter()
                .map(|(k, c)| Term {
                    basis: basis[*k].clone(),
                    coeff: format_rational(c),
                })
                .collect(),
        })
        .collect();
    AlgebraDocument {
        name: name.to_string(),
        dim: alg.dim(),
        basis,
        table,
    }
}
