//! The matrix text format: line 1 is the decimal order `m`, followed by `m`
//! lines of exactly `m` characters from `{+, -}`. Diff-able and bit-exact.

use skewhad::gsmatrix::SignMatrix;

use crate::familyfile::FormatError;

pub fn render(matrix: &SignMatrix) -> String {
    let m = matrix.order();
    let mut out = String::with_capacity(m * (m + 1) + 8);
    out.push_str(&format!("{m}\n"));
    for i in 0..m {
        for &e in matrix.row(i) {
            out.push(if e > 0 { '+' } else { '-' });
        }
        out.push('\n');
    }
    out
}

pub fn parse(text: &str) -> Result<SignMatrix, FormatError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| FormatError("empty file".into()))?;
    let m: usize = header
        .trim()
        .parse()
        .map_err(|_| FormatError(format!("bad order line {header:?}")))?;
    if m == 0 {
        return Err(FormatError("order must be at least 1".into()));
    }
    let mut entries = Vec::with_capacity(m * m);
    for i in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| FormatError(format!("expected {m} rows, file ends after {i}")))?;
        if line.chars().count() != m {
            return Err(FormatError(format!(
                "row {} has {} characters, expected {m}",
                i + 1,
                line.chars().count()
            )));
        }
        for ch in line.chars() {
            match ch {
                '+' => entries.push(1i8),
                '-' => entries.push(-1i8),
                other => {
                    return Err(FormatError(format!(
                        "row {}: invalid character {other:?}",
                        i + 1
                    )))
                }
            }
        }
    }
    if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
        return Err(FormatError(format!("trailing content {extra:?}")));
    }
    Ok(SignMatrix::from_entries(m, entries))
}
