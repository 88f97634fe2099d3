//! Matrix documents.
//!
//! Two accepted forms:
//!
//! * JSON: `{"matrix": [[1, -2], [0, 1]], "name": "optional"}`. Entries must
//!   be JSON integers of any size; no other keys are allowed.
//! * Plain text: one row per line, whitespace-separated integers. Blank
//!   lines and `#` comments are ignored.
//!
//! A document whose first non-blank character is `{` is read as JSON.

use std::str::FromStr;

use matdivseq_core::IntMatrix;
use num_bigint::BigInt;
use serde_json::{Map, Number, Value};
use thiserror::Error;

/// A validated square integer matrix, optionally named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDocument {
    /// The matrix.
    pub matrix: IntMatrix,
    /// Optional label.
    pub name: Option<String>,
}

/// Why a document was rejected.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InputError {
    /// Syntax error in the document.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        /// 1-based line.
        line: usize,
        /// 1-based column.
        column: usize,
        /// What went wrong.
        message: String,
    },
    /// Rows of unequal length, or row count differs from row length.
    #[error("matrix must be square")]
    NotSquare,
    /// An entry is not an integer.
    #[error("integer entries required ({location}: {found})")]
    NonInteger {
        /// Where the entry sits.
        location: String,
        /// The offending text.
        found: String,
    },
    /// No rows at all.
    #[error("matrix must have at least one entry")]
    Empty,
    /// Well-formed JSON with the wrong shape.
    #[error("invalid document: {0}")]
    Schema(String),
}

/// Parses either accepted format.
pub fn parse_matrix(input: &str) -> Result<MatrixDocument, InputError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

fn parse_json(input: &str) -> Result<MatrixDocument, InputError> {
    let value: Value = serde_json::from_str(input).map_err(|e| InputError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let Value::Object(mut obj) = value else {
        return Err(InputError::Schema("top level must be an object".into()));
    };
    let name = match obj.remove("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s),
        Some(_) => return Err(InputError::Schema("\"name\" must be a string".into())),
    };
    let matrix = obj
        .remove("matrix")
        .ok_or_else(|| InputError::Schema("missing \"matrix\"".into()))?;
    if let Some(key) = obj.keys().next() {
        return Err(InputError::Schema(format!("unknown key {key:?}")));
    }
    let Value::Array(rows) = matrix else {
        return Err(InputError::Schema("\"matrix\" must be an array of rows".into()));
    };
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, row) in rows.into_iter().enumerate() {
        let Value::Array(cells) = row else {
            return Err(InputError::Schema(format!("row {} is not an array", i + 1)));
        };
        let mut out = Vec::with_capacity(cells.len());
        for (j, cell) in cells.into_iter().enumerate() {
            let location = format!("row {}, entry {}", i + 1, j + 1);
            let n = match cell {
                Value::Number(n) => n,
                other => return Err(InputError::NonInteger { location, found: other.to_string() }),
            };
            out.push(integer_literal(&n.to_string()).ok_or(InputError::NonInteger {
                location,
                found: n.to_string(),
            })?);
        }
        parsed.push(out);
    }
    Ok(MatrixDocument { matrix: square(parsed)?, name })
}

fn integer_literal(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

fn parse_text(input: &str) -> Result<MatrixDocument, InputError> {
    let mut rows = Vec::new();
    for (ln, line) in input.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        let mut row = Vec::new();
        let mut offset = 0;
        for token in content.split_whitespace() {
            let start = content[offset..].find(token).map_or(offset, |p| p + offset);
            offset = start + token.len();
            let value = integer_literal(token.strip_prefix('+').unwrap_or(token)).ok_or_else(|| {
                InputError::NonInteger {
                    location: format!("line {}, column {}", ln + 1, content[..start].chars().count() + 1),
                    found: token.to_string(),
                }
            })?;
            row.push(value);
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    Ok(MatrixDocument { matrix: square(rows)?, name: None })
}

fn square(rows: Vec<Vec<BigInt>>) -> Result<IntMatrix, InputError> {
    if rows.is_empty() || rows.iter().all(|r| r.is_empty()) {
        return Err(InputError::Empty);
    }
    let dim = rows.len();
    if rows.iter().any(|r| r.len() != dim) {
        return Err(InputError::NotSquare);
    }
    IntMatrix::from_rows(rows).map_err(|_| InputError::NotSquare)
}

impl MatrixDocument {
    /// Wraps a matrix without a name.
    pub fn new(matrix: IntMatrix) -> Self {
        MatrixDocument { matrix, name: None }
    }

    /// JSON form accepted by [`parse_matrix`]; entries stay JSON integers.
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        if let Some(name) = &self.name {
            obj.insert("name".into(), Value::String(name.clone()));
        }
        obj.insert("matrix".into(), matrix_json(&self.matrix));
        Value::Object(obj)
    }
}

/// Rows of JSON integers.
pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.rows()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|e| Value::Number(Number::from_str(&e.to_string()).expect("decimal integer")))
                        .collect(),
                )
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x3() -> IntMatrix {
        IntMatrix::from_rows([[1, -2, -6], [0, 1, 3], [-1, 0, 1]]).unwrap()
    }

    #[test]
    fn json_documents() {
        let doc = parse_matrix(r#"{"matrix": [[1,-2,-6],[0,1,3],[-1,0,1]]}"#).unwrap();
        assert_eq!(doc.matrix, x3());
        assert_eq!(doc.name, None);
        let doc = parse_matrix(r#"{"matrix": [[1]], "name": "one"}"#).unwrap();
        assert_eq!(doc.matrix.dim(), 1);
        assert_eq!(doc.name.as_deref(), Some("one"));
    }

    #[test]
    fn huge_json_integers_survive() {
        let big = "123456789012345678901234567890";
        let doc = parse_matrix(&format!(r#"{{"matrix": [[{big}]]}}"#)).unwrap();
        assert_eq!(doc.matrix.get(0, 0).to_string(), big);
    }

    #[test]
    fn json_errors() {
        assert_eq!(parse_matrix(r#"{"matrix": [[1,2],[3]]}"#), Err(InputError::NotSquare));
        assert_eq!(parse_matrix(r#"{"matrix": [[1,2,3],[4,5,6]]}"#), Err(InputError::NotSquare));
        assert!(matches!(parse_matrix(r#"{"matrix": [[1.5]]}"#), Err(InputError::NonInteger { .. })));
        assert!(matches!(parse_matrix(r#"{"matrix": [[1e3]]}"#), Err(InputError::NonInteger { .. })));
        assert!(matches!(parse_matrix(r#"{"matrix": [["7"]]}"#), Err(InputError::NonInteger { .. })));
        assert_eq!(parse_matrix(r#"{"matrix": []}"#), Err(InputError::Empty));
        assert!(matches!(parse_matrix(r#"{"matrix": [[1]], "extra": 1}"#), Err(InputError::Schema(_))));
        assert!(matches!(parse_matrix(r#"{"name": "x"}"#), Err(InputError::Schema(_))));
        match parse_matrix("{\n  \"matrix\": [[1, 2],\n  [3 4]]}") {
            Err(InputError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn text_documents() {
        let doc = parse_matrix("# example\n1 -2 -6\n0 1 3\n\n-1 0 +1  # last row\n").unwrap();
        assert_eq!(doc.matrix, x3());
        assert_eq!(parse_matrix("1 2\n3\n"), Err(InputError::NotSquare));
        assert_eq!(parse_matrix("\n# nothing\n"), Err(InputError::Empty));
        match parse_matrix("1 2\n3 x4\n") {
            Err(InputError::NonInteger { location, found }) => {
                assert_eq!(location, "line 2, column 3");
                assert_eq!(found, "x4");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_matrix("1.0\n"), Err(InputError::NonInteger { .. })));
    }

    #[test]
    fn json_round_trip() {
        let doc = MatrixDocument { matrix: x3(), name: Some("X3".into()) };
        let text = serde_json::to_string(&doc.to_json()).unwrap();
        assert_eq!(parse_matrix(&text).unwrap(), doc);
    }
}
