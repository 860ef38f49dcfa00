//! Plain-text matrix files: a header line `p^a n` followed by `n` rows of
//! `n` whitespace-separated entries. Entries are integers or bracketed
//! coefficient lists such as `[0,1,1]`. Several matrices may follow one
//! another; blank lines and lines starting with `#` are skipped.

use crate::ff::{FieldDescriptor, FieldElement, Fq};

use super::{Matrix, MatrixError};

/// Splits a row on whitespace, keeping bracketed lists together even if
/// they contain spaces.
fn tokens(line: &str) -> Result<Vec<String>, MatrixError> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for ch in line.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                if depth == 0 {
                    return Err(MatrixError::Parse(format!("unbalanced ']' in {line:?}")));
                }
                depth -= 1;
                cur.push(ch);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(MatrixError::Parse(format!("unbalanced '[' in {line:?}")));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

pub fn parse_matrices(text: &str) -> Result<Vec<Matrix>, MatrixError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let mut out = Vec::new();
    while let Some(header) = lines.next() {
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(MatrixError::Parse(format!("expected header \"p^a n\", got {header:?}")));
        }
        let field: Fq = parts[0]
            .parse::<FieldDescriptor>()
            .and_then(|d| d.create())
            .map_err(MatrixError::Field)?;
        let n: usize = parts[1]
            .parse()
            .map_err(|_| MatrixError::Parse(format!("bad dimension {:?}", parts[1])))?;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| MatrixError::Parse(format!("missing row {} of {n}", i + 1)))?;
            let toks = tokens(line)?;
            if toks.len() != n {
                return Err(MatrixError::Parse(format!("row {} has {} entries, expected {n}", i + 1, toks.len())));
            }
            for t in toks {
                data.push(FieldElement::parse(&field, &t).map_err(MatrixError::Field)?.raw());
            }
        }
        out.push(Matrix::new(&field, n, n, data)?);
    }
    Ok(out)
}

/// Header plus rows, the inverse of [`parse_matrices`] for square matrices.
pub fn format_matrix(m: &Matrix) -> String {
    let spec = m.field().spec();
    let header = if spec.degree() == 1 { format!("{}^1", spec.p()) } else { spec.to_string() };
    let mut s = format!("{header} {}\n", m.rows());
    s.push_str(&m.to_string());
    s
}
