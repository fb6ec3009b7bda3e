//! Fixture files: blank-line separated records of the form
//!
//! ```text
//! # comment
//! chi[0,0,0,0,0,0,0,2] =
//! -1 - z1 - z7 - z8 + z8^2
//!
//! a[8,8] = -4*(31 + 7*z1 + z7 + 16*z8 - z8^2)
//!
//! b[8] = 120*z8
//! ```
//!
//! Indices in `a[j,k]` and `b[j]` are one-based.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rootsys::Weight;
use crate::zpoly::{parse_poly, Monomial, ZPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RecordKey {
    Chi(Weight),
    /// Zero-based `(j, k)` with `j <= k`.
    A(usize, usize),
    /// Zero-based `j`.
    B(usize),
}

impl fmt::Display for RecordKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordKey::Chi(w) => write!(f, "chi[{}]", w.to_csv()),
            RecordKey::A(j, k) => write!(f, "a[{},{}]", j + 1, k + 1),
            RecordKey::B(j) => write!(f, "b[{}]", j + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub key: RecordKey,
    pub poly: ZPolynomial,
    /// One-based line of the header.
    pub line: usize,
}

impl Record {
    /// For `b[j]` records, the scalar `b_j` in `b_j * z_j`.
    pub fn b_scalar(&self) -> Option<BigInt> {
        let RecordKey::B(j) = self.key else { return None };
        let terms: Vec<(&Monomial, &BigInt)> = self.poly.terms().collect();
        match terms.as_slice() {
            [] => Some(BigInt::from(0)),
            [(m, c)] if m.degree() == 1 && m.exponents()[j] == 1 => Some((*c).clone()),
            _ => None,
        }
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.key, self.poly)
    }
}

fn located(text: &str, offset: usize, message: &str) -> Error {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map(|i| i + 1).unwrap_or(0) + 1;
    Error::Fixture(format!("line {line}, column {col}: {message}"))
}

fn parse_indices(s: &str) -> Option<Vec<i64>> {
    s.split(',').map(|x| x.trim().parse::<i64>().ok()).collect()
}

pub fn parse_fixture(text: &str, rank: usize) -> Result<Vec<Record>> {
    // Strip comments but keep byte offsets stable.
    let cleaned: String = text
        .split_inclusive('\n')
        .map(|line| match line.find('#') {
            Some(i) => {
                let (keep, rest) = line.split_at(i);
                let pad: String = rest.chars().map(|c| if c == '\n' { '\n' } else { ' ' }).collect();
                format!("{keep}{pad}")
            }
            None => line.to_string(),
        })
        .collect();

    let mut records = Vec::new();
    for block in split_blocks(&cleaned) {
        let (start, body) = block;
        let trimmed_start = body.len() - body.trim_start().len();
        let body_start = start + trimmed_start;
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        let Some(eq) = body.find('=') else {
            return Err(located(&cleaned, body_start, "record header must end with `=`"));
        };
        let header = body[..eq].trim();
        let poly_text = &body[eq + 1..];
        let poly_offset = body_start + eq + 1;
        let (Some(open), true) = (header.find('['), header.ends_with(']')) else {
            return Err(located(&cleaned, body_start, &format!("bad record header `{header}`")));
        };
        let kind = header[..open].trim();
        let Some(indices) = parse_indices(&header[open + 1..header.len() - 1]) else {
            return Err(located(&cleaned, body_start, &format!("bad indices in `{header}`")));
        };
        let index = |i: i64| -> Result<usize> {
            if i < 1 || i as usize > rank {
                Err(located(&cleaned, body_start, &format!("index {i} out of range for rank {rank}")))
            } else {
                Ok(i as usize - 1)
            }
        };
        let key = match (kind, indices.as_slice()) {
            ("chi", labels) => {
                if labels.len() != rank {
                    return Err(Error::RankMismatch {
                        expected: rank,
                        got: labels.len(),
                    });
                }
                RecordKey::Chi(Weight::new(labels.to_vec()))
            }
            ("a", &[j, k]) => {
                let (j, k) = (index(j)?, index(k)?);
                RecordKey::A(j.min(k), j.max(k))
            }
            ("b", &[j]) => RecordKey::B(index(j)?),
            _ => return Err(located(&cleaned, body_start, &format!("unknown record `{header}`"))),
        };
        let poly = parse_poly(poly_text, rank).map_err(|e| match e {
            Error::Syntax { offset, message } => located(&cleaned, poly_offset + offset, &message),
            other => other,
        })?;
        let line = cleaned[..body_start].matches('\n').count() + 1;
        let record = Record { key, poly, line };
        if matches!(record.key, RecordKey::B(_)) && record.b_scalar().is_none() {
            return Err(located(&cleaned, body_start, "b[j] record must be an integer multiple of zj"));
        }
        records.push(record);
    }
    Ok(records)
}

fn is_header(line: &str) -> bool {
    let t = line.trim_start();
    ["chi[", "a[", "b["].iter().any(|h| t.starts_with(h))
}

/// Splits on blank lines and before header lines, returning each block with
/// its byte offset.
fn split_blocks(text: &str) -> Vec<(usize, &str)> {
    let mut blocks = Vec::new();
    let mut start: Option<usize> = None;
    let mut pos = 0;
    for line in text.split_inclusive('\n') {
        let blank = line.trim().is_empty();
        if let (Some(s), true) = (start, is_header(line)) {
            blocks.push((s, &text[s..pos]));
            start = None;
        }
        match (blank, start) {
            (true, Some(s)) => {
                blocks.push((s, &text[s..pos]));
                start = None;
            }
            (false, None) => start = Some(pos),
            _ => {}
        }
        pos += line.len();
    }
    if let Some(s) = start {
        blocks.push((s, &text[s..]));
    }
    blocks
}

pub fn load_fixture(path: &Path, rank: usize) -> Result<Vec<Record>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_fixture(&text, rank).map_err(|e| match e {
        Error::Fixture(msg) => Error::Fixture(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// One record in fixture syntax, followed by a blank line.
pub fn format_record(key: &RecordKey, poly: &ZPolynomial) -> String {
    format!("{key} =\n{poly}\n\n")
}
