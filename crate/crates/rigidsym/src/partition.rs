//! Integer partitions with exponent-notation I/O.
//!
//! A [`Partition`] stores its parts weakly decreasing with no zero parts;
//! the empty sequence denotes the empty partition. The canonical text form
//! is exponent notation with descending part values (`3 2^2 1^6`), with `-`
//! for the empty partition. A bracketed part list (`[3,2,2,1,1]`) is
//! accepted on input only.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts, which must be weakly decreasing and
    /// strictly positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::parse(format!(
                    "parts must be weakly decreasing: {} < {}",
                    w[0], w[1]
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::parse("zero part in partition"));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from an arbitrary bag of row lengths: sorts
    /// descending and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds the partition whose conjugate rows are `rows` (sorted
    /// descending, zeros dropped first).
    pub fn from_conj_rows(rows: Vec<u32>) -> Self {
        Partition::from_unsorted(rows).conjugate()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts (the written length `l`).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of parts equal to `k` (the multiplicity `r_k`).
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == k).count() as u32
    }

    /// Number of parts that are at least `k` (the `s_k` of the dimension
    /// formula; equals conjugate row `k`).
    pub fn parts_at_least(&self, k: u32) -> u32 {
        self.parts.iter().filter(|&&p| p >= k).count() as u32
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let m = self.largest();
        let parts = (1..=m).map(|j| self.parts_at_least(j)).collect();
        Partition { parts }
    }

    /// Conjugate rows as a plain vector of lengths, longest first. These
    /// are the "rows" on which the symbol tables and box-shifting maps act.
    pub fn conj_rows(&self) -> Vec<u32> {
        self.conjugate().parts
    }

    /// Part-wise sum; missing parts read as 0.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.parts.len().max(other.parts.len());
        let parts = (0..n)
            .map(|i| {
                self.parts.get(i).copied().unwrap_or(0) + other.parts.get(i).copied().unwrap_or(0)
            })
            .collect();
        Partition { parts }
    }

    /// Parses exponent notation (`3^2 2^3 1^2`), a bracket list
    /// (`[3,3,2,2,2,1,1]`), or `-`/`0` for the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::parse("empty partition text"));
        }
        if text == "-" || text == "0" {
            return Ok(Partition::empty());
        }
        if let Some(inner) = text.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::parse(format!("unterminated bracket list `{text}`")))?;
            let inner = inner.trim();
            if inner.is_empty() {
                return Ok(Partition::empty());
            }
            let mut parts = Vec::new();
            for tok in inner.split(',') {
                let tok = tok.trim();
                let p: u32 = tok
                    .parse()
                    .map_err(|_| Error::parse(format!("malformed part `{tok}`")))?;
                if p == 0 {
                    return Err(Error::parse(format!("zero part `{tok}`")));
                }
                parts.push(p);
            }
            return Partition::new(parts);
        }
        let mut parts = Vec::new();
        let mut prev: Option<u32> = None;
        for tok in text.split_whitespace() {
            let (value, count) = match tok.split_once('^') {
                Some((v, c)) => {
                    let v: u32 = v
                        .parse()
                        .map_err(|_| Error::parse(format!("malformed token `{tok}`")))?;
                    let c: u32 = c
                        .parse()
                        .map_err(|_| Error::parse(format!("malformed token `{tok}`")))?;
                    (v, c)
                }
                None => {
                    let v: u32 = tok
                        .parse()
                        .map_err(|_| Error::parse(format!("malformed token `{tok}`")))?;
                    (v, 1)
                }
            };
            if value == 0 {
                return Err(Error::parse(format!("zero part in token `{tok}`")));
            }
            if count == 0 {
                return Err(Error::parse(format!("zero exponent in token `{tok}`")));
            }
            if let Some(p) = prev {
                if value >= p {
                    return Err(Error::parse(format!(
                        "part values must be strictly descending: `{tok}` after {p}"
                    )));
                }
            }
            prev = Some(value);
            parts.extend(std::iter::repeat(value).take(count as usize));
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == v {
                j += 1;
            }
            let count = j - i;
            if !first {
                write!(f, " ")?;
            }
            if count == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{count}")?;
            }
            first = false;
            i = j;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    #[test]
    fn parse_exponent_notation() {
        assert_eq!(
            p("2^2 1^9").parts(),
            &[2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1][..]
        );
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p("[5,4,4,3,3,3,2,2,2,2,1,1,1]").to_string(), "5 4^2 3^3 2^4 1^3");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Partition::parse("1 2").is_err());
        assert!(Partition::parse("2 0").is_err());
        assert!(Partition::parse("[2,3]").is_err());
        assert!(Partition::parse("2^").is_err());
        assert!(Partition::parse("x").is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("2^4 1^8").conj_rows(), vec![12, 4]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("5 4^2 3^3 2^4 1^3").conj_rows(), vec![13, 10, 6, 3, 1]);
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("2 1^4").add(&p("1^6")), p("3 2^4 1"));
        assert_eq!(p("2 1^4").add(&Partition::empty()), p("2 1^4"));
        assert_eq!(p("1^3").add(&p("1^3")), p("2^3"));
    }

    #[test]
    fn display_roundtrip() {
        for s in ["1^13", "3 2^2 1^6", "5 4^2 3^3 2^4 1^3", "-"] {
            assert_eq!(p(s).to_string(), s);
        }
    }
}
