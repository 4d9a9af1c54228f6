//! Family persistence.
//!
//! The text format writes one exponent digit per sequence entry (`0-9` then
//! `a-z`, so `q ≤ 36`):
//!
//! ```text
//! zcs-v1 q=6 M=6 N=4 L=6 Z=4
//! set 0
//! 000003
//! 030300
//! ...
//! ```
//!
//! `Z=` is optional. The JSON form carries the same fields plus
//! `sets[p][λ][i]`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error as CoreError;
use crate::family::ZcsFamily;

pub const FORMAT_TAG: &str = "zcs-v1";
pub const MAX_TEXT_MODULUS: u32 = 36;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: {msg}")]
    Header { line: usize, msg: String },
    #[error("unexpected end of input: expected {expected}")]
    UnexpectedEnd { expected: String },
    #[error("line {line}: expected \"set {expected}\"")]
    SetLine { line: usize, expected: usize },
    #[error("line {line}: invalid digit '{ch}'")]
    BadDigit { line: usize, ch: char },
    #[error("line {line}: digit {digit} is not below q={q}")]
    DigitOutOfRange { line: usize, digit: u32, q: u32 },
    #[error("line {line}: expected {expected} digits, found {got}")]
    WrongLength {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: unexpected trailing content")]
    TrailingContent { line: usize },
    #[error("q={0} cannot be written with single digits (max {MAX_TEXT_MODULUS})")]
    ModulusTooLarge(u32),
    #[error("json: {0}")]
    Json(String),
    #[error("json: M={m}, N={n}, L={l} do not match the sets array")]
    JsonShape { m: usize, n: usize, l: usize },
    #[error(transparent)]
    Family(#[from] CoreError),
}

fn digit_char(d: u32) -> char {
    std::char::from_digit(d, 36).expect("digit below 36")
}

pub fn render_v1(family: &ZcsFamily) -> Result<String, FormatError> {
    let q = family.q();
    if q > MAX_TEXT_MODULUS {
        return Err(FormatError::ModulusTooLarge(q));
    }
    let mut out = format!(
        "{FORMAT_TAG} q={} M={} N={} L={}",
        q,
        family.set_size(),
        family.flock_size(),
        family.seq_len()
    );
    if let Some(z) = family.claimed_z() {
        out.push_str(&format!(" Z={z}"));
    }
    out.push('\n');
    for (p, flock) in family.flocks().iter().enumerate() {
        out.push_str(&format!("set {p}\n"));
        for s in flock.sequences() {
            out.extend(s.exponents().iter().map(|&e| digit_char(e)));
            out.push('\n');
        }
    }
    Ok(out)
}

struct Header {
    q: u32,
    m: usize,
    n: usize,
    l: usize,
    z: Option<usize>,
}

fn parse_header(text: &str) -> Result<Header, FormatError> {
    let err = |msg: &str| FormatError::Header {
        line: 1,
        msg: msg.to_string(),
    };
    let mut fields = text.split_whitespace();
    if fields.next() != Some(FORMAT_TAG) {
        return Err(err("missing format tag zcs-v1"));
    }
    let mut values: [Option<usize>; 5] = [None; 5];
    for field in fields {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| err(&format!("malformed field '{field}'")))?;
        let slot = match key {
            "q" => 0,
            "M" => 1,
            "N" => 2,
            "L" => 3,
            "Z" => 4,
            _ => return Err(err(&format!("unknown field '{key}'"))),
        };
        if values[slot].is_some() {
            return Err(err(&format!("duplicate field '{key}'")));
        }
        let v: usize = value
            .parse()
            .map_err(|_| err(&format!("field '{key}' is not a number")))?;
        values[slot] = Some(v);
    }
    let need = |slot: usize, name: &str| values[slot].ok_or_else(|| err(&format!("missing field '{name}'")));
    let q = need(0, "q")?;
    if !(2..=MAX_TEXT_MODULUS as usize).contains(&q) {
        return Err(err(&format!("q must be in 2..={MAX_TEXT_MODULUS}")));
    }
    let (m, n, l) = (need(1, "M")?, need(2, "N")?, need(3, "L")?);
    if m == 0 || n == 0 || l == 0 {
        return Err(err("M, N and L must be positive"));
    }
    Ok(Header {
        q: q as u32,
        m,
        n,
        l,
        z: values[4],
    })
}

pub fn parse_v1(text: &str) -> Result<ZcsFamily, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let (_, head) = lines.next().ok_or(FormatError::Empty)?;
    let header = parse_header(head)?;
    let mut next = |expected: String| {
        lines
            .next()
            .ok_or(FormatError::UnexpectedEnd { expected })
    };

    let mut sets = Vec::with_capacity(header.m);
    for p in 0..header.m {
        let (line, text) = next(format!("set {p}"))?;
        if text.trim() != format!("set {p}") {
            return Err(FormatError::SetLine { line, expected: p });
        }
        let mut rows = Vec::with_capacity(header.n);
        for lambda in 0..header.n {
            let (line, text) = next(format!("sequence {lambda} of set {p}"))?;
            let row = text
                .chars()
                .map(|ch| {
                    let digit = ch.to_digit(36).filter(|_| !ch.is_ascii_uppercase());
                    let digit = digit.ok_or(FormatError::BadDigit { line, ch })?;
                    if digit >= header.q {
                        return Err(FormatError::DigitOutOfRange {
                            line,
                            digit,
                            q: header.q,
                        });
                    }
                    Ok(digit)
                })
                .collect::<Result<Vec<u32>, _>>()?;
            if row.len() != header.l {
                return Err(FormatError::WrongLength {
                    line,
                    expected: header.l,
                    got: row.len(),
                });
            }
            rows.push(row);
        }
        sets.push(rows);
    }
    if let Some((line, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(FormatError::TrailingContent { line });
    }
    Ok(ZcsFamily::from_exponents(header.q, sets, header.z)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct FamilyDoc {
    q: u32,
    #[serde(rename = "M")]
    m: usize,
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "L")]
    l: usize,
    #[serde(rename = "Z")]
    z: Option<usize>,
    sets: Vec<Vec<Vec<u32>>>,
}

pub fn to_json(family: &ZcsFamily) -> String {
    let doc = FamilyDoc {
        q: family.q(),
        m: family.set_size(),
        n: family.flock_size(),
        l: family.seq_len(),
        z: family.claimed_z(),
        sets: family.to_exponents(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<ZcsFamily, FormatError> {
    let doc: FamilyDoc = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let shape_ok = doc.sets.len() == doc.m
        && doc
            .sets
            .iter()
            .all(|f| f.len() == doc.n && f.iter().all(|s| s.len() == doc.l));
    if !shape_ok {
        return Err(FormatError::JsonShape {
            m: doc.m,
            n: doc.n,
            l: doc.l,
        });
    }
    Ok(ZcsFamily::from_exponents(doc.q, doc.sets, doc.z)?)
}
