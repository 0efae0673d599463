//! Plain-text matrix files.
//!
//! ```text
//! q N L
//! <N lines of L whitespace-separated tokens>
//! ```
//!
//! `.` is a zero entry and an integer `k` in `[0, q)` is `ξ^k`. For `q = 2`
//! the tokens `+` and `-` stand for 0 and 1 and are used on output.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::Context;
use szcz::SparseQaryMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn write_matrix(m: &SparseQaryMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.q(), m.rows(), m.cols());
    for g in 0..m.rows() {
        for (i, e) in m.row(g).iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            match (m.q(), e) {
                (_, None) => out.push('.'),
                (2, Some(0)) => out.push('+'),
                (2, Some(_)) => out.push('-'),
                (_, Some(k)) => write!(out, "{k}").unwrap(),
            }
        }
        out.push('\n');
    }
    out
}

pub fn read_matrix(text: &str) -> Result<SparseQaryMatrix, ParseError> {
    // Blank lines are skipped but still counted.
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header \"q N L\""))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(err(hline, format!("header needs 3 fields \"q N L\", found {}", fields.len())));
    }
    let num = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| err(hline, format!("{what} {s:?} is not a non-negative integer")))
    };
    let q = num(fields[0], "q")?;
    let rows = num(fields[1], "N")?;
    let cols = num(fields[2], "L")?;
    if q < 2 || q % 2 != 0 || q > u32::MAX as usize {
        return Err(err(hline, format!("q = {q} must be an even integer >= 2")));
    }
    if rows == 0 || cols == 0 {
        return Err(err(hline, "N and L must be positive"));
    }
    let q = q as u32;
    let mut entries = Vec::with_capacity(rows * cols);
    for g in 0..rows {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| err(text.lines().count() + 1, format!("expected {rows} rows, found {g}")))?;
        let mut count = 0;
        for tok in line.split_whitespace() {
            count += 1;
            let e = match tok {
                "." => None,
                "+" if q == 2 => Some(0),
                "-" if q == 2 => Some(1),
                _ => {
                    let k: u32 = tok
                        .parse()
                        .map_err(|_| err(lno, format!("bad token {tok:?}")))?;
                    if k >= q {
                        return Err(err(lno, format!("exponent {k} not below q = {q}")));
                    }
                    Some(k)
                }
            };
            entries.push(e);
        }
        if count != cols {
            return Err(err(lno, format!("expected {cols} tokens, found {count}")));
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(err(lno, format!("unexpected content after {rows} rows")));
    }
    SparseQaryMatrix::new(q, rows, cols, entries).map_err(|e| err(hline, e.to_string()))
}

pub fn load(path: &Path) -> anyhow::Result<SparseQaryMatrix> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_matrix(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn save(path: &Path, m: &SparseQaryMatrix) -> anyhow::Result<()> {
    std::fs::write(path, write_matrix(m)).with_context(|| format!("writing {}", path.display()))
}
