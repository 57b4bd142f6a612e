//! Matrix interchange: whitespace text, JSON and MacKay's alist format.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::linalg::{FieldMatrix, LinalgError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("alist stores binary matrices only, not {0}")]
    NotBinary(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse { line, msg: msg.into() }
}

/// Rows of space-separated symbols (`0 1` or `0 1 w W`).
pub fn to_text(m: &FieldMatrix) -> String {
    m.to_text()
}

pub fn from_text(field: Arc<FieldSpec>, text: &str) -> Result<FieldMatrix, IoError> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| {
                field
                    .parse_symbol(t)
                    .ok_or_else(|| parse_err(i + 1, format!("`{t}` is not a symbol of {field}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(FieldMatrix::from_rows(field, &rows)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct MatrixDocument {
    characteristic: u32,
    cols: usize,
    degree: u32,
    entries: Vec<String>,
    rows: usize,
}

pub fn to_json(m: &FieldMatrix) -> String {
    let f = m.field();
    let doc = MatrixDocument {
        characteristic: f.characteristic(),
        cols: m.cols(),
        degree: f.degree(),
        entries: m.to_text().lines().map(str::to_string).collect(),
        rows: m.rows(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data")
}

pub fn from_json(text: &str) -> Result<FieldMatrix, IoError> {
    let doc: MatrixDocument = serde_json::from_str(text)?;
    let field = Arc::new(FieldSpec::new(doc.characteristic, doc.degree)?);
    let m = if doc.rows == 0 {
        FieldMatrix::zeros(field, 0, doc.cols)
    } else {
        from_text(field, &doc.entries.join("\n"))?
    };
    if (m.rows(), m.cols()) != (doc.rows, doc.cols) {
        return Err(parse_err(0, "declared shape does not match the entries"));
    }
    Ok(m)
}

/// MacKay alist: `n m`, the maximum column and row weights, the column
/// weights, the row weights, then 1-based row indices per column and
/// column indices per row, each padded with zeros to the maximum weight.
pub fn to_alist(m: &FieldMatrix) -> Result<String, IoError> {
    if !m.field().is_gf2() {
        return Err(IoError::NotBinary(m.field().to_string()));
    }
    let cols: Vec<Vec<usize>> = {
        let mut cols = vec![Vec::new(); m.cols()];
        for r in 0..m.rows() {
            for c in m.row_support(r) {
                cols[c].push(r);
            }
        }
        cols
    };
    let rows: Vec<Vec<usize>> = (0..m.rows()).map(|r| m.row_support(r)).collect();
    let max_col = cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = rows.iter().map(Vec::len).max().unwrap_or(0);
    let join = |v: &mut dyn Iterator<Item = usize>| v.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let padded = |list: &[usize], width: usize| {
        let mut v: Vec<usize> = list.iter().map(|x| x + 1).collect();
        v.resize(width, 0);
        join(&mut v.into_iter())
    };
    let mut out = format!("{} {}\n{} {}\n", m.cols(), m.rows(), max_col, max_row);
    out += &join(&mut cols.iter().map(Vec::len));
    out.push('\n');
    out += &join(&mut rows.iter().map(Vec::len));
    out.push('\n');
    for c in &cols {
        out += &padded(c, max_col);
        out.push('\n');
    }
    for r in &rows {
        out += &padded(r, max_row);
        out.push('\n');
    }
    Ok(out)
}

pub fn from_alist(text: &str) -> Result<FieldMatrix, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| -> Result<(usize, Vec<usize>), IoError> {
            let nums = l
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| parse_err(i + 1, format!("`{t}` is not an integer"))))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((i + 1, nums))
        });
    let mut next = |want: Option<usize>| -> Result<(usize, Vec<usize>), IoError> {
        // zero-width index lists (all-zero matrices) are written as blank lines
        if want == Some(0) {
            return Ok((0, Vec::new()));
        }
        let (line, nums) = lines.next().ok_or_else(|| parse_err(0, "unexpected end of input"))??;
        if let Some(w) = want {
            if nums.len() != w {
                return Err(parse_err(line, format!("expected {w} numbers, found {}", nums.len())));
            }
        }
        Ok((line, nums))
    };
    let (_, dims) = next(Some(2))?;
    let (n, m) = (dims[0], dims[1]);
    let (_, maxes) = next(Some(2))?;
    let (_, col_weights) = next(Some(n))?;
    let (_, row_weights) = next(Some(m))?;
    let mut matrix = FieldMatrix::zeros(Arc::new(FieldSpec::gf2()), m, n);
    for (c, &w) in col_weights.iter().enumerate() {
        let (line, idx) = next(Some(maxes[0]))?;
        let nonzero: Vec<usize> = idx.iter().copied().filter(|&x| x != 0).collect();
        if nonzero.len() != w || nonzero.iter().any(|&r| r > m) {
            return Err(parse_err(line, format!("column {} does not match its weight", c + 1)));
        }
        for r in nonzero {
            matrix.set(r - 1, c, FieldElement::ONE);
        }
    }
    for (r, &w) in row_weights.iter().enumerate() {
        let (line, idx) = next(Some(maxes[1]))?;
        let mut listed: Vec<usize> = idx.iter().copied().filter(|&x| x != 0).map(|x| x - 1).collect();
        listed.sort_unstable();
        if listed.len() != w || listed != matrix.row_support(r) {
            return Err(parse_err(line, format!("row {} disagrees with the column lists", r + 1)));
        }
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::OMEGA;

    fn sample() -> FieldMatrix {
        let o = FieldElement::ONE;
        let z = FieldElement::ZERO;
        FieldMatrix::from_rows(
            Arc::new(FieldSpec::gf2()),
            &[vec![o, o, z, o], vec![z, o, o, z], vec![o, z, z, z]],
        )
        .unwrap()
    }

    #[test]
    fn alist_layout() {
        let text = to_alist(&sample()).unwrap();
        let expected = "4 3\n2 3\n2 2 1 1\n3 2 1\n1 3\n1 2\n2 0\n1 0\n1 2 4\n2 3 0\n1 0 0\n";
        assert_eq!(text, expected);
        assert_eq!(from_alist(&text).unwrap(), sample());
        let zero = FieldMatrix::zeros(Arc::new(FieldSpec::gf2()), 2, 3);
        assert_eq!(from_alist(&to_alist(&zero).unwrap()).unwrap(), zero);
    }

    #[test]
    fn alist_rejects_gf4_and_garbage() {
        let f = Arc::new(FieldSpec::gf4());
        let m = FieldMatrix::from_rows(f, &[vec![OMEGA]]).unwrap();
        assert!(matches!(to_alist(&m), Err(IoError::NotBinary(_))));
        assert!(matches!(from_alist("2 1\n1 2\n1 1\n2\n1\n1\n1 3\n"), Err(IoError::Parse { .. })));
        assert!(matches!(from_alist("2 x"), Err(IoError::Parse { line: 1, .. })));
    }

    #[test]
    fn text_and_json_round_trip() {
        let f = Arc::new(FieldSpec::gf4());
        let m = FieldMatrix::from_rows(
            f.clone(),
            &[vec![FieldElement::ONE, OMEGA, FieldElement(3)], vec![FieldElement::ZERO; 3]],
        )
        .unwrap();
        assert_eq!(to_text(&m), "1 w W\n0 0 0\n");
        assert_eq!(from_text(f, &to_text(&m)).unwrap(), m);
        assert_eq!(from_json(&to_json(&m)).unwrap(), m);
        assert_eq!(from_json(&to_json(&sample())).unwrap(), sample());
    }
}
