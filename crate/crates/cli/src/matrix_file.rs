//! Plain-text generating matrices.
//!
//! ```text
//! # [6,3] over GF(8)
//! 8 6 3
//! poly 11
//! 1 0 0 7 4 6
//! 0 1 0 2 7 1
//! 0 0 1 0 7 7
//! ```
//!
//! The header is `q n k`, an optional `poly` line overrides the default
//! modulus (packed base p), and then come `k` rows of `n` packed field
//! elements. Everything after `#` on a line is ignored.

use std::path::Path;
use std::sync::Arc;

use mindist::gf::prime_power;
use mindist::{Field, FieldError, MatrixGF};

use crate::CliError;

fn parse_err(line: usize, reason: impl Into<String>) -> CliError {
    CliError::Parse { line, reason: reason.into() }
}

fn numbers(line: usize, toks: &[&str]) -> Result<Vec<u64>, CliError> {
    toks.iter()
        .map(|t| t.parse::<u64>().map_err(|_| parse_err(line, format!("`{t}` is not a non-negative integer"))))
        .collect()
}

pub fn parse_matrix_file(path: &Path) -> Result<MatrixGF, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_matrix_str(&text)
}

pub fn parse_matrix_str(text: &str) -> Result<MatrixGF, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `q n k` header"))?;
    let header = numbers(hline, &header)?;
    let [q, n, k] = header[..] else {
        return Err(parse_err(hline, "header must be `q n k`"));
    };
    if n == 0 || k == 0 || k > n {
        return Err(parse_err(hline, format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    let q32 = u32::try_from(q).map_err(|_| CliError::Field(FieldError::UnknownFieldOrder(u32::MAX)))?;
    let (n, k) = (n as usize, k as usize);

    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(k);
    let mut field: Option<Field> = None;
    let mut first = true;
    for (lno, toks) in lines {
        if first && toks[0] == "poly" {
            first = false;
            let vals = numbers(lno, &toks[1..])?;
            let [m] = vals[..] else {
                return Err(parse_err(lno, "expected `poly <packed modulus>`"));
            };
            let (p, r) = prime_power(q32).ok_or(CliError::Field(FieldError::UnknownFieldOrder(q32)))?;
            let m = u32::try_from(m).map_err(|_| parse_err(lno, "modulus out of range"))?;
            field = Some(Field::new(p, r, Some(m)).map_err(|e| parse_err(lno, e.to_string()))?);
            continue;
        }
        first = false;
        if rows.len() == k {
            return Err(parse_err(lno, format!("more than k = {k} rows")));
        }
        let vals = numbers(lno, &toks)?;
        if vals.len() != n {
            return Err(parse_err(lno, format!("expected {n} entries, got {}", vals.len())));
        }
        if let Some(v) = vals.iter().find(|&&v| v >= q) {
            return Err(parse_err(lno, format!("entry {v} is not an element of GF({q})")));
        }
        rows.push(vals.into_iter().map(|v| v as u32).collect());
    }
    if rows.len() != k {
        let last = text.lines().count().max(1);
        return Err(parse_err(last, format!("expected {k} rows, got {}", rows.len())));
    }
    let field = match field {
        Some(f) => f,
        None => Field::with_order(q32)?,
    };
    Ok(MatrixGF::from_rows(Arc::new(field), &rows)?)
}

/// Inverse of [`parse_matrix_str`]. A `poly` line is written only when the
/// modulus differs from the default for the field order.
pub fn serialize_matrix(m: &MatrixGF) -> String {
    let f = m.field();
    let mut out = format!("{} {} {}\n", f.order(), m.cols(), m.rows());
    let default = Field::with_order(f.order() as u32).map(|d| d.modulus()).ok();
    if default != Some(f.modulus()) {
        out.push_str(&format!("poly {}\n", f.modulus()));
    }
    for row in m.row_iter() {
        let line: Vec<String> = row.iter().map(|e| e.value().to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use mindist::fixtures;

    #[test]
    fn parses_worked_code() {
        let text = "# [6,3] over GF(8)\n8 6 3\n1 0 0 7 4 6\n0 1 0 2 7 1  # row 2\n\n0 0 1 0 7 7\n";
        assert_eq!(parse_matrix_str(text).unwrap(), fixtures::g_3_6());
    }

    #[test]
    fn binary_identity_plus_zeros() {
        let m = parse_matrix_str("2 4 2\n1 0 0 0\n0 1 0 0\n").unwrap();
        assert_eq!((m.field().order(), m.cols(), m.rows()), (2, 4, 2));
    }

    #[test]
    fn entry_out_of_range_names_line() {
        let err = parse_matrix_str("4 3 2\n1 0 2\n0 1 4\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn other_errors() {
        assert!(matches!(parse_matrix_str("6 3 1\n1 0 0\n"), Err(CliError::Field(FieldError::UnknownFieldOrder(6)))));
        assert!(matches!(parse_matrix_str("2 3 2\n1 0 0\n"), Err(CliError::Parse { .. })));
        assert!(matches!(parse_matrix_str("2 3 1\n1 0\n"), Err(CliError::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix_str("2 3 1\n1 0 0\n1 1 1\n"), Err(CliError::Parse { line: 3, .. })));
        assert!(matches!(parse_matrix_str("2 3\n"), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(parse_matrix_str("8 3 1\npoly 9\n1 0 0\n"), Err(CliError::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix_str(""), Err(CliError::Parse { .. })));
    }

    #[test]
    fn modulus_override() {
        // a^3 + a^2 + 1 instead of the default a^3 + a + 1
        let m = parse_matrix_str("8 2 1\npoly 13\n1 2\n").unwrap();
        assert_eq!(m.field().modulus(), 13);
        let text = serialize_matrix(&m);
        assert!(text.contains("poly 13"));
        assert_eq!(parse_matrix_str(&text).unwrap(), m);
    }

    #[test]
    fn round_trip_fixtures() {
        for m in [fixtures::g_3_6(), fixtures::g_4_8(), fixtures::g_4_10()] {
            let text = serialize_matrix(&m);
            assert!(!text.contains("poly"));
            assert_eq!(parse_matrix_str(&text).unwrap(), m);
        }
    }
}
