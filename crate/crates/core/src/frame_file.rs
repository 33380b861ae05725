//! Plain-text frame files.
//!
//! ```text
//! FRM1 <rows> <cols>
//! # key=value
//! <re>:<im> <re>:<im> ...
//! ```
//!
//! One body line per matrix row. Numbers use the shortest decimal that parses
//! back to the same `f64`, so a write-then-read cycle is bit-exact.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::frame::{FrameMatrix, Metadata};
use crate::{Error, Result};

pub const MAGIC: &str = "FRM1";

/// Serializes a frame, metadata first.
pub fn format_frame(frame: &FrameMatrix) -> String {
    let mut out = String::with_capacity(frame.rows() * frame.cols() * 40 + 64);
    let _ = writeln!(out, "{MAGIC} {} {}", frame.rows(), frame.cols());
    for (k, v) in frame.metadata().iter() {
        let _ = writeln!(out, "# {k}={v}");
    }
    for i in 0..frame.rows() {
        for j in 0..frame.cols() {
            if j > 0 {
                out.push(' ');
            }
            let z = frame.get(i, j);
            let _ = write!(out, "{}:{}", z.re, z.im);
        }
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Parses a frame file. Positions in errors are 1-based.
pub fn parse_frame(text: &str) -> Result<FrameMatrix> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some(MAGIC) {
        return Err(parse_err(1, 1, format!("expected {MAGIC} header")));
    }
    let mut dim = |name: &str| -> Result<usize> {
        let tok = fields.next().ok_or_else(|| parse_err(1, header.len() + 1, format!("missing {name}")))?;
        let col = token_column(header, tok);
        match tok.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(parse_err(1, col, format!("{name} must be a positive integer, got {tok:?}"))),
        }
    };
    let rows = dim("rows")?;
    let cols = dim("cols")?;
    if let Some(extra) = fields.next() {
        return Err(parse_err(1, token_column(header, extra), "unexpected token after dimensions"));
    }

    let mut meta = Metadata::new();
    let mut data = vec![Complex64::new(0.0, 0.0); rows * cols];
    let mut row = 0usize;
    for (lineno, line) in lines {
        if let Some(rest) = line.strip_prefix('#') {
            if row > 0 {
                return Err(parse_err(lineno, 1, "metadata after matrix rows"));
            }
            let rest = rest.trim();
            let (k, v) = rest
                .split_once('=')
                .ok_or_else(|| parse_err(lineno, 1, "metadata line needs key=value"))?;
            meta.set(k.trim(), v.trim());
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        if row >= rows {
            return Err(parse_err(lineno, 1, format!("more than {rows} rows")));
        }
        let mut count = 0usize;
        for tok in line.split_whitespace() {
            let col = token_column(line, tok);
            if count >= cols {
                return Err(parse_err(lineno, col, format!("more than {cols} entries")));
            }
            let (re, im) = tok
                .split_once(':')
                .ok_or_else(|| parse_err(lineno, col, format!("entry {tok:?} is not re:im")))?;
            let re: f64 = re.parse().map_err(|_| parse_err(lineno, col, format!("bad real part {re:?}")))?;
            let im: f64 = im
                .parse()
                .map_err(|_| parse_err(lineno, col + tok.find(':').unwrap_or(0) + 1, format!("bad imaginary part {im:?}")))?;
            data[count * rows + row] = Complex64::new(re, im);
            count += 1;
        }
        if count != cols {
            return Err(parse_err(lineno, line.len() + 1, format!("expected {cols} entries, found {count}")));
        }
        row += 1;
    }
    if row != rows {
        return Err(parse_err(text.lines().count() + 1, 1, format!("expected {rows} rows, found {row}")));
    }
    FrameMatrix::from_columns(rows, cols, data, meta)
}

/// 1-based column of `tok`, which must be a subslice of `line`.
fn token_column(line: &str, tok: &str) -> usize {
    tok.as_ptr() as usize - line.as_ptr() as usize + 1
}
