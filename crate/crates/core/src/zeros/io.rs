//! Plain-text zero lists: one decimal ordinate per line in increasing order,
//! `#` comment lines, and optional `# key = value` header lines.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rug::float::Round;
use rug::Float;
use thiserror::Error;

use super::{CertifiedZero, Provenance, ZeroError, ZeroList};
use crate::enclosure::{decimal_string, Enclosure};

/// Significant digits written per ordinate.
pub const WRITTEN_DIGITS: usize = 20;

#[derive(Debug, Error)]
pub enum ZeroIoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: ordinate {value} does not exceed the previous one")]
    NonMonotone { line: usize, value: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    List(#[from] ZeroError),
}

/// Positional decimal with `digits` significant digits.
pub fn format_decimal(x: &Float, digits: usize) -> String {
    decimal_string(x, digits, Round::Nearest)
}

pub fn write_zero_list<W: Write>(list: &ZeroList, mut w: W) -> std::io::Result<()> {
    writeln!(w, "# zeros of L(s, chi_4) on the critical line")?;
    writeln!(w, "# height = {}", list.height())?;
    writeln!(w, "# count = {}", list.len())?;
    writeln!(w, "# provenance = {}", list.provenance().as_str())?;
    if let Some(d) = list.delta() {
        writeln!(w, "# delta = {d:e}")?;
    }
    for z in list.zeros() {
        writeln!(w, "{}", format_decimal(&z.gamma.mid(), WRITTEN_DIGITS))?;
    }
    w.flush()
}

/// Reads a zero list. Every ordinate becomes an uncertified point enclosure
/// and the list is marked imported. Without a `height` header the height is
/// the last ordinate.
pub fn read_zero_list<R: BufRead>(r: R, prec: u32) -> Result<ZeroList, ZeroIoError> {
    let mut height = None;
    let mut values: Vec<Float> = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        if let Some(comment) = text.strip_prefix('#') {
            if let Some((k, v)) = comment.split_once('=') {
                if k.trim() == "height" {
                    let h: f64 = v.trim().parse().map_err(|_| ZeroIoError::Parse {
                        line: line_no,
                        message: format!("bad height {:?}", v.trim()),
                    })?;
                    height = Some(h);
                }
            }
            continue;
        }
        let token = text.split_whitespace().next().unwrap_or_default();
        let parsed = Float::parse(token).map_err(|e| ZeroIoError::Parse {
            line: line_no,
            message: format!("{token:?}: {e}"),
        })?;
        let v = Float::with_val(prec, parsed);
        if !v.is_finite() || v <= 0 {
            return Err(ZeroIoError::Parse {
                line: line_no,
                message: format!("ordinate {token} must be positive"),
            });
        }
        if values.last().is_some_and(|prev| &v <= prev) {
            return Err(ZeroIoError::NonMonotone {
                line: line_no,
                value: token.to_string(),
            });
        }
        values.push(v);
    }
    let height = match height {
        Some(h) => h,
        None => values.last().map_or(1.0, |v| v.to_f64_round(Round::Up)),
    };
    let zeros = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| CertifiedZero {
            index: i + 1,
            gamma: Enclosure::from_float(prec, &v),
            certified: false,
        })
        .collect();
    Ok(ZeroList::new(zeros, height, Provenance::Imported, None)?)
}

pub fn save(path: impl AsRef<Path>, list: &ZeroList) -> Result<(), ZeroIoError> {
    write_zero_list(list, BufWriter::new(File::create(path)?))?;
    Ok(())
}

pub fn load(path: impl AsRef<Path>, prec: u32) -> Result<ZeroList, ZeroIoError> {
    read_zero_list(BufReader::new(File::open(path)?), prec)
}
