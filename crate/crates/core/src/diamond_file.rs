//! The `hodge-diamond v1` text format.
//!
//! ```text
//! hodge-diamond v1
//! # K3 surface
//! 0 0 1
//! 1 1 20
//! ```
//!
//! The header must be the first non-blank, non-comment line. Entry lines are
//! `p q mult` separated by single spaces; `#` starts a comment; blank lines
//! are ignored. Multiplicities may be negative.

use thiserror::Error;

use crate::diamond::VirtualDiamond;

pub const HEADER: &str = "hodge-diamond v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: duplicate entry ({p},{q})")]
    DuplicateEntry { line: usize, p: u32, q: u32 },

    #[error("missing `{HEADER}` header")]
    MissingHeader,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

pub fn parse_diamond(text: &str) -> Result<VirtualDiamond, ParseError> {
    let mut seen_header = false;
    let mut entries = std::collections::BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim_end();
        if content.trim().is_empty() {
            continue;
        }
        if !seen_header {
            if content != HEADER {
                return Err(syntax(line_no, format!("expected header `{HEADER}`")));
            }
            seen_header = true;
            continue;
        }
        let fields: Vec<&str> = content.split(' ').collect();
        if fields.len() != 3 || fields.iter().any(|f| f.is_empty()) {
            return Err(syntax(line_no, "expected `p q mult` separated by single spaces"));
        }
        let p: u32 = fields[0]
            .parse()
            .map_err(|_| syntax(line_no, format!("bad bidegree `{}`", fields[0])))?;
        let q: u32 = fields[1]
            .parse()
            .map_err(|_| syntax(line_no, format!("bad bidegree `{}`", fields[1])))?;
        let mult: i64 = fields[2]
            .parse()
            .map_err(|_| syntax(line_no, format!("bad multiplicity `{}`", fields[2])))?;
        if entries.insert((p, q), mult).is_some() {
            return Err(ParseError::DuplicateEntry { line: line_no, p, q });
        }
    }
    if !seen_header {
        return Err(ParseError::MissingHeader);
    }
    Ok(VirtualDiamond::from_entries(entries.into_iter().map(|((p, q), m)| (p, q, m)))
        .expect("duplicates already rejected"))
}

/// Header plus one line per entry, sorted by `(p, q)`.
pub fn write_diamond(d: &VirtualDiamond) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    out.push_str(&d.to_string());
    out
}
