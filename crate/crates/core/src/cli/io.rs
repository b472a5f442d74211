//! Matrix file formats.
//!
//! Plain text: the first non-blank line holds the order `n`, followed by `n`
//! lines of `n` rational literals separated by whitespace.
//!
//! JSON: `{"n": 3, "entries": [["1", "-1", "1/2"], ...]}`; entries are
//! rational strings (bare JSON integers are accepted too).

use serde::{Deserialize, Serialize};

use crate::matcore::{parse_rational, Matrix, Rational};
use crate::{Error, Result};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Parses either format; JSON is detected by a leading `{`.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_plain(text)
    }
}

/// Whitespace-separated tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(idx),
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..idx]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

pub fn parse_plain(text: &str) -> Result<Matrix> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l)).filter(|(_, l)| !l.trim().is_empty());

    let (hdr_line, hdr) = lines.next().ok_or_else(|| parse_error(1, 1, "empty input"))?;
    let hdr_tokens = tokens(hdr);
    let (col, tok) = hdr_tokens[0];
    if hdr_tokens.len() > 1 {
        return Err(parse_error(hdr_line, hdr_tokens[1].0, "the first line must hold only the order n"));
    }
    let n: usize = tok
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| parse_error(hdr_line, col, format!("invalid order `{tok}`")))?;

    let mut rows = Vec::with_capacity(n);
    let mut last_line = hdr_line;
    for (line_no, line) in lines {
        last_line = line_no;
        if rows.len() == n {
            return Err(parse_error(line_no, 1, format!("expected {n} rows, found more")));
        }
        let toks = tokens(line);
        if toks.len() != n {
            let column = toks.get(n).map_or(line.chars().count() + 1, |t| t.0);
            return Err(parse_error(
                line_no,
                column,
                format!("ragged row: expected {n} entries, found {}", toks.len()),
            ));
        }
        let row = toks
            .into_iter()
            .map(|(c, t)| parse_rational(t).map_err(|m| parse_error(line_no, c, m)))
            .collect::<Result<Vec<Rational>>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_error(last_line + 1, 1, format!("expected {n} rows, found {}", rows.len())));
    }
    Matrix::from_rows(rows)
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<serde_json::Value>>,
}

pub fn parse_json(text: &str) -> Result<Matrix> {
    let doc: MatrixJson = serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    let n = doc.n;
    if n == 0 || doc.entries.len() != n {
        return Err(parse_error(1, 1, format!("\"n\" is {n} but \"entries\" has {} rows", doc.entries.len())));
    }
    let mut rows = Vec::with_capacity(n);
    for (i, row) in doc.entries.into_iter().enumerate() {
        if row.len() != n {
            return Err(parse_error(1, 1, format!("ragged row {}: expected {n} entries, found {}", i + 1, row.len())));
        }
        let parsed = row
            .into_iter()
            .enumerate()
            .map(|(j, v)| {
                let lit = match &v {
                    serde_json::Value::String(s) => s.trim().to_string(),
                    serde_json::Value::Number(x) if x.is_i64() || x.is_u64() => x.to_string(),
                    other => {
                        return Err(parse_error(
                            1,
                            1,
                            format!("entries[{}][{}]: expected a rational string, got {other}", i + 1, j + 1),
                        ))
                    }
                };
                parse_rational(&lit).map_err(|m| parse_error(1, 1, format!("entries[{}][{}]: {m}", i + 1, j + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(parsed);
    }
    Matrix::from_rows(rows)
}

/// Exact entries as strings, row by row.
pub fn matrix_strings(a: &Matrix) -> Vec<Vec<String>> {
    a.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

/// Plain-text form; [`parse_plain`] reads it back exactly.
pub fn to_plain(a: &Matrix) -> String {
    let mut out = format!("{}\n", a.order());
    for row in matrix_strings(a) {
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// JSON form; [`parse_json`] reads it back exactly.
pub fn to_json(a: &Matrix) -> String {
    let entries =
        matrix_strings(a).into_iter().map(|r| r.into_iter().map(serde_json::Value::String).collect()).collect();
    serde_json::to_string(&MatrixJson { n: a.order(), entries }).expect("serializable")
}
