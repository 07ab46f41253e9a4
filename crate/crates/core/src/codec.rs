//! Text and JSON interchange formats.
//!
//! A curve file holds one `gc:` line listing the traversal as tokens
//! `<label><sign>`, e.g. `gc: 1+ 2- 1+ 2-`. Lines starting with `#` are
//! comments. Both occurrences of a label carry the same sign.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

/// Orientation sign of a double point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn from_i64(v: i64) -> Sign {
        if v > 0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// Double-occurrence word with a sign per label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedGaussCode {
    word: Vec<u32>,
    signs: BTreeMap<u32, Sign>,
}

impl SignedGaussCode {
    /// The embedded circle.
    pub fn empty() -> Self {
        SignedGaussCode {
            word: Vec::new(),
            signs: BTreeMap::new(),
        }
    }

    pub fn new(word: Vec<u32>, signs: BTreeMap<u32, Sign>) -> Result<Self> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for (i, &l) in word.iter().enumerate() {
            if l == 0 {
                return Err(malformed(1, i + 1, "labels must be positive"));
            }
            *counts.entry(l).or_default() += 1;
        }
        for (&l, &c) in &counts {
            if c != 2 {
                return Err(malformed(1, 1, &format!("label {l} occurs {c} time(s)")));
            }
            if !signs.contains_key(&l) {
                return Err(malformed(1, 1, &format!("label {l} has no sign")));
            }
        }
        if let Some(l) = signs.keys().find(|l| !counts.contains_key(l)) {
            return Err(malformed(1, 1, &format!("sign given for absent label {l}")));
        }
        Ok(SignedGaussCode { word, signs })
    }

    /// Builds a code from `(label, sign)` letters; both letters of a label must agree.
    pub fn from_letters(letters: &[(u32, Sign)]) -> Result<Self> {
        let mut signs = BTreeMap::new();
        for (i, &(l, s)) in letters.iter().enumerate() {
            if let Some(&prev) = signs.get(&l) {
                if prev != s {
                    return Err(malformed(1, i + 1, &format!("sign mismatch for label {l}")));
                }
            }
            signs.insert(l, s);
        }
        Self::new(letters.iter().map(|&(l, _)| l).collect(), signs)
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn sign(&self, label: u32) -> Sign {
        self.signs[&label]
    }

    pub fn n_crossings(&self) -> usize {
        self.word.len() / 2
    }

    pub fn letters(&self) -> Vec<(u32, Sign)> {
        self.word.iter().map(|&l| (l, self.signs[&l])).collect()
    }

    /// Relabels crossings 1, 2, ... in order of first occurrence.
    pub fn normalized(&self) -> SignedGaussCode {
        let mut relabel: BTreeMap<u32, u32> = BTreeMap::new();
        let mut letters = Vec::with_capacity(self.word.len());
        for &l in &self.word {
            let next = relabel.len() as u32 + 1;
            let m = *relabel.entry(l).or_insert(next);
            letters.push((m, self.signs[&l]));
        }
        SignedGaussCode::from_letters(&letters).expect("relabeling preserves validity")
    }

    /// Moves the first `k` letters to the end. The base point passes one visit of each
    /// moved label, which swaps the visiting order at that crossing and flips its sign.
    pub fn rotated(&self, k: usize) -> SignedGaussCode {
        if self.word.is_empty() {
            return self.clone();
        }
        let len = self.word.len();
        let k = k % len;
        let mut signs = self.signs.clone();
        for &l in &self.word[..k] {
            let s = signs.get_mut(&l).unwrap();
            *s = s.flip();
        }
        let word = self.word[k..]
            .iter()
            .chain(&self.word[..k])
            .copied()
            .collect();
        SignedGaussCode { word, signs }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("gc:");
        for &l in &self.word {
            s.push(' ');
            s.push_str(&l.to_string());
            s.push(self.signs[&l].symbol());
        }
        s
    }
}

impl fmt::Display for SignedGaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn malformed(line: usize, column: usize, reason: &str) -> Error {
    Error::MalformedCode {
        line,
        column,
        reason: reason.to_string(),
    }
}

/// Parses the `.gc` text format.
pub fn parse_gauss(text: &str) -> Result<SignedGaussCode> {
    let mut found: Option<(usize, Vec<(u32, Sign, usize)>)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let lead = raw.len() - trimmed.len();
        let Some(body) = trimmed.strip_prefix("gc:") else {
            return Err(malformed(line_no, lead + 1, "expected `gc:` line"));
        };
        if found.is_some() {
            return Err(malformed(line_no, lead + 1, "more than one `gc:` line"));
        }
        let mut tokens = Vec::new();
        let base = lead + 3;
        let mut pos = 0;
        for piece in body.split_inclusive(char::is_whitespace) {
            let tok = piece.trim_end();
            let column = base + pos + 1;
            pos += piece.len();
            if tok.is_empty() {
                continue;
            }
            tokens.push(parse_token(tok, line_no, column)?);
        }
        found = Some((line_no, tokens));
    }
    let Some((line_no, tokens)) = found else {
        return Err(malformed(1, 1, "missing `gc:` line"));
    };

    let mut first: BTreeMap<u32, (Sign, usize)> = BTreeMap::new();
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &(label, sign, column) in &tokens {
        let c = counts.entry(label).or_default();
        *c += 1;
        if *c > 2 {
            return Err(malformed(
                line_no,
                column,
                &format!("label {label} occurs more than twice"),
            ));
        }
        match first.get(&label) {
            Some(&(s, _)) if s != sign => {
                return Err(malformed(
                    line_no,
                    column,
                    &format!("sign mismatch for label {label}"),
                ))
            }
            Some(_) => {}
            None => {
                first.insert(label, (sign, column));
            }
        }
    }
    if let Some((&label, _)) = counts.iter().find(|(_, &c)| c != 2) {
        let column = first[&label].1;
        return Err(malformed(
            line_no,
            column,
            &format!("label {label} occurs once"),
        ));
    }
    let letters: Vec<(u32, Sign)> = tokens.iter().map(|&(l, s, _)| (l, s)).collect();
    SignedGaussCode::from_letters(&letters)
}

fn parse_token(tok: &str, line: usize, column: usize) -> Result<(u32, Sign, usize)> {
    let (digits, sign) = match tok.char_indices().last() {
        Some((i, '+')) => (&tok[..i], Sign::Pos),
        Some((i, '-')) => (&tok[..i], Sign::Neg),
        _ => {
            return Err(malformed(
                line,
                column,
                &format!("bad token `{tok}`: missing sign"),
            ))
        }
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed(line, column, &format!("bad token `{tok}`")));
    }
    let label: u32 = digits
        .parse()
        .map_err(|_| malformed(line, column, &format!("label out of range in `{tok}`")))?;
    if label == 0 {
        return Err(malformed(line, column, "labels must be positive"));
    }
    Ok((label, sign, column))
}

/// JSON form of an invariant report. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<String>,
    pub crossings: usize,
    pub class: String,
    #[serde(rename = "X")]
    pub x: Vec<(i64, i64, String)>,
    #[serde(rename = "Y")]
    pub y: Vec<(i64, String)>,
    pub psi: Vec<String>,
    pub eta: Vec<String>,
    #[serde(rename = "Jplus")]
    pub j_plus: String,
    #[serde(rename = "Jminus")]
    pub j_minus: String,
    #[serde(rename = "St")]
    pub st: String,
}

pub fn format_q(q: &Q) -> String {
    q.to_string()
}

pub fn parse_q(s: &str) -> Option<Q> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.parse::<i64>().ok()?, q.parse::<i64>().ok()?),
        None => (s.parse::<i64>().ok()?, 1),
    };
    if q == 0 {
        return None;
    }
    Some(Q::new(p, q))
}

pub fn emit_json(report: &ReportJson) -> String {
    serde_json::to_string(report).expect("report serializes")
}

pub fn parse_json(text: &str) -> serde_json::Result<ReportJson> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_gc_line_is_circle() {
        let c = parse_gauss("gc:").unwrap();
        assert_eq!(c.n_crossings(), 0);
    }

    #[test]
    fn figure_eight_parses() {
        let c = parse_gauss("# figure eight\ngc: 1+ 1+\n").unwrap();
        assert_eq!(c.word(), &[1, 1]);
        assert_eq!(c.sign(1), Sign::Pos);
    }

    #[test]
    fn single_occurrence_is_rejected() {
        match parse_gauss("gc: 1+ 2- 1+") {
            Err(Error::MalformedCode {
                line,
                column,
                reason,
            }) => {
                assert_eq!(line, 1);
                assert_eq!(column, 8);
                assert!(reason.contains("label 2"), "{reason}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sign_mismatch_is_rejected() {
        let err = parse_gauss("gc: 1+ 1-").unwrap_err();
        assert!(
            matches!(err, Error::MalformedCode { column: 8, .. }),
            "{err:?}"
        );
    }

    #[test]
    fn bad_tokens_are_rejected() {
        for text in [
            "gc: 1",
            "gc: a+",
            "gc: +",
            "gc: 0+ 0+",
            "gc: 1+ 1+ 1+",
            "",
            "gc:\ngc:",
            "x",
        ] {
            assert!(
                matches!(parse_gauss(text), Err(Error::MalformedCode { .. })),
                "{text:?}"
            );
        }
    }

    #[test]
    fn rotation_flips_moved_labels() {
        let c = parse_gauss("gc: 1+ 2- 1+ 2-").unwrap();
        assert_eq!(c.rotated(1).to_text(), "gc: 2- 1- 2- 1-");
        assert_eq!(c.rotated(4), c);
    }

    #[test]
    fn rationals_render_in_lowest_terms() {
        assert_eq!(format_q(&Q::new(2, 6)), "1/3");
        assert_eq!(format_q(&Q::new(-4, 2)), "-2");
        assert_eq!(parse_q("-1/3"), Some(Q::new(-1, 3)));
        assert_eq!(parse_q("5"), Some(Q::from_integer(5)));
        assert_eq!(parse_q("1/0"), None);
    }
}
