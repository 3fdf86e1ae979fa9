//! Plain-text matrix files, shared by the CLI and the examples:
//!
//! ```text
//! field Fp 1009
//! 2 3
//! 1 0 1008
//! 0 4 7
//! ```
//!
//! The header names the field (`Q` or `Fp <p>`), the second line gives the
//! shape, then one line per row. Rational entries are written in lowest
//! terms as `a/b`; round trips are bit-exact over both fields.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;

pub fn format_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    writeln!(out, "field {}", m.field().name()).expect("string write");
    writeln!(out, "{} {}", m.rows(), m.cols()).expect("string write");
    for i in 0..m.rows() {
        let line = (0..m.cols())
            .map(|j| m.get(i, j).to_string())
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(out, "{line}").expect("string write");
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let field = parse_field_header(header)?;
    let shape = lines
        .next()
        .ok_or_else(|| Error::Parse("missing shape line".into()))?;
    let dims: Vec<usize> = shape
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|e| Error::Parse(format!("bad shape entry {t:?}: {e}")))
        })
        .collect::<Result<_>>()?;
    let [rows, cols] = dims.as_slice() else {
        return Err(Error::Parse(format!(
            "shape line {shape:?} should hold two numbers"
        )));
    };
    let mut m = Matrix::zeros(field, *rows, *cols);
    for i in 0..*rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {i}")))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != *cols {
            return Err(Error::Parse(format!(
                "row {i} has {} entries, expected {cols}",
                entries.len()
            )));
        }
        for (j, tok) in entries.iter().enumerate() {
            m.set(i, j, field.parse_scalar(tok)?);
        }
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing content {extra:?}")));
    }
    Ok(m)
}

fn parse_field_header(line: &str) -> Result<FieldSpec> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.as_slice() {
        ["field", "Q"] => Ok(FieldSpec::Rational),
        ["field", "Fp", p] => {
            let p: u64 = p
                .parse()
                .map_err(|e| Error::Parse(format!("bad modulus {p:?}: {e}")))?;
            // route through the strict constructor-side validation
            format!("fp:{p}").parse()
        }
        _ => Err(Error::Parse(format!(
            "bad field header {line:?}; expected `field Q` or `field Fp <p>`"
        ))),
    }
}

pub fn read_matrix_file(path: &Path) -> Result<Matrix> {
    let text = fs::read_to_string(path)?;
    parse_matrix(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write_matrix_file(path: &Path, m: &Matrix) -> Result<()> {
    fs::write(path, format_matrix(m))?;
    Ok(())
}

/// Comma-separated index sequence, e.g. `0,2` -> `[0, 2]`.
pub fn parse_sequence(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad sequence entry {t:?}: {e}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_PRIME;

    #[test]
    fn round_trip_is_bit_exact() {
        for field in [FieldSpec::Rational, FieldSpec::Prime(DEFAULT_PRIME)] {
            let m = Matrix::from_i64(field, &[&[1, -2], &[0, 7], &[5, -1]]);
            let text = format_matrix(&m);
            let back = parse_matrix(&text).unwrap();
            assert_eq!(m, back);
            assert_eq!(format_matrix(&back), text);
        }
    }

    #[test]
    fn rational_fractions_survive() {
        let field = FieldSpec::Rational;
        let mut m = Matrix::zeros(field, 1, 2);
        m.set(0, 0, field.parse_scalar("2/3").unwrap());
        m.set(0, 1, field.parse_scalar("-7/11").unwrap());
        let back = parse_matrix(&format_matrix(&m)).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("field Z\n1 1\n0").is_err());
        assert!(parse_matrix("field Q\n1 2\n5").is_err());
        assert!(parse_matrix("field Q\n1 1\n5\n6").is_err());
        // modulus must be prime
        assert!(parse_matrix("field Fp 10\n1 1\n5").is_err());
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# point data\nfield Fp 1009\n\n1 2\n3 4\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.rows(), 1);
        assert_eq!(m.get(0, 1).to_string(), "4");
    }

    #[test]
    fn sequences_parse() {
        assert_eq!(parse_sequence("0,2").unwrap(), vec![0, 2]);
        assert_eq!(parse_sequence(" 1, 3 ,4").unwrap(), vec![1, 3, 4]);
        assert!(parse_sequence("1,,2").is_err());
        assert!(parse_sequence("x").is_err());
    }
}
