//! Matrix Market coordinate format, pattern only.
//!
//! Numeric values are parsed past and discarded. `general` inputs are
//! symmetrized to `pattern(A) | pattern(A^T)`.

use std::io::{BufRead, Write};

use log::warn;

use crate::error::MatrixMarketError;
use crate::sparse::SparsePatternCsc;

type Result<T> = std::result::Result<T, MatrixMarketError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Field {
    Pattern,
    Real,
    Integer,
}

impl Field {
    fn values_per_entry(self) -> usize {
        match self {
            Field::Pattern => 0,
            Field::Real | Field::Integer => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Symmetry {
    General,
    Symmetric,
}

fn parse_header(line: &str, line_no: usize) -> Result<(Field, Symmetry)> {
    let malformed = |reason: &str| MatrixMarketError::MalformedHeader {
        line: line_no,
        reason: reason.to_string(),
    };
    let tokens: Vec<String> = line
        .split_whitespace()
        .map(str::to_ascii_lowercase)
        .collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" {
        return Err(malformed(
            "expected `%%MatrixMarket matrix coordinate <field> <symmetry>`",
        ));
    }
    if tokens[1] != "matrix" {
        return Err(malformed("object must be `matrix`"));
    }
    if tokens[2] != "coordinate" {
        return Err(MatrixMarketError::Unsupported {
            line: line_no,
            what: "format",
            value: tokens[2].clone(),
        });
    }
    let field = match tokens[3].as_str() {
        "pattern" => Field::Pattern,
        "real" => Field::Real,
        "integer" => Field::Integer,
        other => {
            return Err(MatrixMarketError::Unsupported {
                line: line_no,
                what: "field",
                value: other.to_string(),
            })
        }
    };
    let symmetry = match tokens[4].as_str() {
        "general" => Symmetry::General,
        "symmetric" | "skew-symmetric" => Symmetry::Symmetric,
        other => {
            return Err(MatrixMarketError::Unsupported {
                line: line_no,
                what: "symmetry",
                value: other.to_string(),
            })
        }
    };
    Ok((field, symmetry))
}

/// Reads a square Matrix Market coordinate file into a symmetric pattern.
pub fn load_matrix_market<R: BufRead>(reader: R) -> Result<SparsePatternCsc> {
    let mut lines = reader.lines().enumerate().map(|(k, l)| (k + 1, l));

    let (first_no, first) = match lines.next() {
        Some((no, line)) => (no, line?),
        None => {
            return Err(MatrixMarketError::MalformedHeader {
                line: 1,
                reason: "empty input".into(),
            })
        }
    };
    let (field, symmetry) = parse_header(&first, first_no)?;

    let mut size: Option<(usize, usize)> = None;
    let mut columns: Vec<Vec<usize>> = Vec::new();
    let mut found = 0usize;
    let mut last_line = first_no;

    for (line_no, line) in lines {
        let line = line?;
        last_line = line_no;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match size {
            None => {
                let parsed: Option<Vec<usize>> = tokens.by_ref().map(|t| t.parse().ok()).collect();
                let dims = match parsed {
                    Some(v) if v.len() == 3 => v,
                    _ => return Err(MatrixMarketError::MalformedSize { line: line_no }),
                };
                if dims[0] != dims[1] {
                    return Err(MatrixMarketError::NotSquare {
                        line: line_no,
                        rows: dims[0],
                        cols: dims[1],
                    });
                }
                size = Some((dims[0], dims[2]));
                columns = vec![Vec::new(); dims[0]];
            }
            Some((n, _)) => {
                let row: usize = parse_index(tokens.next(), line_no)?;
                let col: usize = parse_index(tokens.next(), line_no)?;
                let values: Vec<&str> = tokens.collect();
                if values.len() != field.values_per_entry() {
                    return Err(MatrixMarketError::MalformedEntry { line: line_no });
                }
                if values.iter().any(|v| v.parse::<f64>().is_err()) {
                    return Err(MatrixMarketError::MalformedEntry { line: line_no });
                }
                if row == 0 || col == 0 || row > n || col > n {
                    return Err(MatrixMarketError::IndexOutOfRange {
                        line: line_no,
                        row,
                        col,
                        n,
                    });
                }
                let (i, j) = (row - 1, col - 1);
                columns[j].push(i);
                if i != j {
                    columns[i].push(j);
                }
                found += 1;
            }
        }
    }

    let (_, expected) = size.ok_or(MatrixMarketError::MissingSize)?;
    if found != expected {
        return Err(MatrixMarketError::EntryCount {
            line: last_line,
            expected,
            found,
        });
    }
    if symmetry == Symmetry::General {
        warn!("general matrix symmetrized as pattern(A) | pattern(A^T)");
    }
    Ok(SparsePatternCsc::from_columns(columns))
}

fn parse_index(token: Option<&str>, line: usize) -> Result<usize> {
    token
        .and_then(|t| t.parse().ok())
        .ok_or(MatrixMarketError::MalformedEntry { line })
}

/// Writes the lower triangle (diagonal included) as a symmetric pattern file.
pub fn write_matrix_market<W: Write>(a: &SparsePatternCsc, mut out: W) -> std::io::Result<()> {
    let lower: Vec<(usize, usize)> = a.entries().filter(|&(i, j)| i >= j).collect();
    writeln!(out, "%%MatrixMarket matrix coordinate pattern symmetric")?;
    writeln!(out, "{} {} {}", a.n(), a.n(), lower.len())?;
    for (i, j) in lower {
        writeln!(out, "{} {}", i + 1, j + 1)?;
    }
    out.flush()
}
