//! The B/C/D theory tags, partition classification and rigidity, and the
//! pairwise-row structure on conjugate rows.
//!
//! Throughout the crate "rows" means rows of the transposed diagram
//! (conjugate rows): the pairwise-row propositions and the box-shifting
//! maps only come out consistent on that reading.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Classical theory tag. The offset `t` drives the pairwise-row parity
/// rule: B has t = -1, C has t = 0, D has t = +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Theory {
    B,
    C,
    D,
}

impl Theory {
    pub fn offset(self) -> i32 {
        match self {
            Theory::B => -1,
            Theory::C => 0,
            Theory::D => 1,
        }
    }

    /// The Langlands dual theory (B and C swap, D is self-dual).
    pub fn dual(self) -> Theory {
        match self {
            Theory::B => Theory::C,
            Theory::C => Theory::B,
            Theory::D => Theory::D,
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theory::B => write!(f, "B"),
            Theory::C => write!(f, "C"),
            Theory::D => write!(f, "D"),
        }
    }
}

impl FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(Theory::B),
            "C" | "c" => Ok(Theory::C),
            "D" | "d" => Ok(Theory::D),
            other => Err(Error::parse(format!("unknown theory `{other}`"))),
        }
    }
}

/// Multiplicity-parity classification of nilpotent orbits:
/// B and D partitions need every even integer an even number of times,
/// C partitions every odd integer an even number of times. Size parity is
/// part of the contract (B: odd, C/D: even); the empty partition is a
/// valid C/D factor while the rank-0 B factor is the one-box partition.
pub fn is_valid(p: &Partition, th: Theory) -> bool {
    let size = p.size();
    match th {
        Theory::B => {
            if size % 2 == 0 {
                return false;
            }
        }
        Theory::C | Theory::D => {
            if size % 2 == 1 {
                return false;
            }
        }
    }
    let m = p.largest();
    for k in 1..=m {
        let r = p.multiplicity(k);
        let constrained = match th {
            Theory::B | Theory::D => k % 2 == 0,
            Theory::C => k % 2 == 1,
        };
        if constrained && r % 2 == 1 {
            return false;
        }
    }
    true
}

/// Rigidity: no gaps including the virtual trailing zero (so every
/// non-empty rigid partition ends in 1), and no odd (B, D) / even (C)
/// integer with multiplicity exactly 2.
pub fn is_rigid(p: &Partition, th: Theory) -> Result<bool> {
    if !is_valid(p, th) {
        return Err(Error::domain(format!(
            "partition {p} is not a valid {th} partition"
        )));
    }
    if p.is_empty() {
        return Ok(true);
    }
    let m = p.largest();
    for k in 1..=m {
        let r = p.multiplicity(k);
        if r == 0 {
            return Ok(false); // gap
        }
        let constrained = match th {
            Theory::B | Theory::D => k % 2 == 1,
            Theory::C => k % 2 == 0,
        };
        if constrained && r == 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Same as [`is_rigid`] but treats invalidity as non-rigid.
pub fn is_valid_rigid(p: &Partition, th: Theory) -> bool {
    is_rigid(p, th).unwrap_or(false)
}

/// Describes which rigidity clause a partition breaks, if any.
pub fn rigidity_violation(p: &Partition, th: Theory) -> Option<String> {
    if !is_valid(p, th) {
        return Some(format!("not a valid {th} partition"));
    }
    if p.is_empty() {
        return None;
    }
    let m = p.largest();
    for k in 1..=m {
        let r = p.multiplicity(k);
        if r == 0 {
            return Some(format!("gap at part {k} ({th} rigidity)"));
        }
        let constrained = match th {
            Theory::B | Theory::D => k % 2 == 1,
            Theory::C => k % 2 == 0,
        };
        if constrained && r == 2 {
            return Some(format!("part {k} appears exactly twice ({th} rigidity)"));
        }
    }
    None
}

/// Role of a conjugate row inside the pairwise-row pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    UnpairedFirst,
    FirstOfPair,
    SecondOfPair,
}

/// The conjugate rows of a partition with their pairwise-row roles.
/// B and D leave row 1 unpaired and pair (2,3), (4,5), ...; C pairs
/// (1,2), (3,4), ... A row is first-of-pair exactly when `i + t + 1`
/// is even.
#[derive(Debug, Clone)]
pub struct PairStructure {
    pub rows: Vec<u32>,
    pub roles: Vec<Role>,
    /// Completed pairs as 1-based row indices.
    pub pairs: Vec<(usize, usize)>,
}

pub fn pair_structure(p: &Partition, th: Theory) -> Result<PairStructure> {
    if !is_rigid(p, th)? {
        return Err(Error::domain(format!(
            "pair structure requires a rigid {th} partition, got {p}"
        )));
    }
    if p.is_empty() {
        return Err(Error::domain("pair structure of the empty partition"));
    }
    let rows = p.conj_rows();
    let t = th.offset();
    let mut roles = Vec::with_capacity(rows.len());
    let mut pairs = Vec::new();
    for i in 1..=rows.len() {
        let first = (i as i32 + t + 1) % 2 == 0;
        if first {
            roles.push(Role::FirstOfPair);
        } else if matches!(roles.last(), Some(Role::FirstOfPair)) {
            roles.push(Role::SecondOfPair);
            pairs.push((i - 1, i));
        } else {
            roles.push(Role::UnpairedFirst);
        }
    }
    Ok(PairStructure { rows, roles, pairs })
}

/// Splits a partition by the parity of its conjugate rows: odd-length rows
/// form one partition, even-length rows the other; their part-wise sum
/// reconstitutes the input.
pub fn split_by_conj_parity(p: &Partition) -> (Partition, Partition) {
    let rows = p.conj_rows();
    let odd: Vec<u32> = rows.iter().copied().filter(|r| r % 2 == 1).collect();
    let even: Vec<u32> = rows.iter().copied().filter(|r| r % 2 == 0).collect();
    (Partition::from_conj_rows(odd), Partition::from_conj_rows(even))
}

/// True when every conjugate row has the given parity (vacuously true for
/// the empty partition).
pub fn all_rows_have_parity(p: &Partition, odd: bool) -> bool {
    p.conj_rows()
        .iter()
        .all(|r| (r % 2 == 1) == odd)
}
