//! The symbol invariant: direct computation from the defining recipe,
//! per-conjugate-row contributions, right-aligned addition, and the symbol
//! of a surface operator.

use std::fmt;

use crate::error::{Error, Result};
use crate::operator::SurfaceOperator;
use crate::partition::Partition;
use crate::theory::{self, Theory};

/// Two rows of non-negative integers. Equality is padded equality: rows
/// are right-aligned and the shorter one padded with leading zeros before
/// the entry-wise comparison.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Symbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl Symbol {
    pub fn empty() -> Self {
        Symbol {
            top: Vec::new(),
            bottom: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.top.iter().all(|&x| x == 0) && self.bottom.iter().all(|&x| x == 0)
    }

    /// Canonical padded form: leading zeros trimmed from both rows
    /// independently. Two symbols are equal iff their canonical forms are
    /// identical, which makes this the right map key.
    pub fn canonical(&self) -> (Vec<u32>, Vec<u32>) {
        (trim_leading_zeros(&self.top), trim_leading_zeros(&self.bottom))
    }
}

fn trim_leading_zeros(row: &[u32]) -> Vec<u32> {
    let start = row.iter().position(|&x| x != 0).unwrap_or(row.len());
    row[start..].to_vec()
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for Symbol {}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[u32]| {
            if row.is_empty() {
                "-".to_string()
            } else {
                row.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        write!(f, "top: {} / bottom: {}", join(&self.top), join(&self.bottom))
    }
}

/// Right-aligned entry-wise sum of two symbols. Associative, commutative,
/// with the empty symbol as identity.
pub fn add_symbols(a: &Symbol, b: &Symbol) -> Symbol {
    Symbol {
        top: add_rows(&a.top, &b.top),
        bottom: add_rows(&a.bottom, &b.bottom),
    }
}

fn add_rows(a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let pick = |row: &[u32]| {
                let pad = n - row.len();
                if i >= pad {
                    row[i - pad]
                } else {
                    0
                }
            };
            pick(a) + pick(b)
        })
        .collect()
}

/// B-theory core of the definition: add `l - k` to the k-th part, sort the
/// odd members ascending as `2f_i + 1` and the even members as `2g_i`, and
/// emit `alpha_i = f_i - i + 1`, `beta_i = g_i - i + 1`.
fn b_core(parts: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let l = parts.len() as u32;
    let mut odds = Vec::new();
    let mut evens = Vec::new();
    for (k0, &part) in parts.iter().enumerate() {
        let s = part + l - 1 - k0 as u32;
        if s % 2 == 1 {
            odds.push((s - 1) / 2);
        } else {
            evens.push(s / 2);
        }
    }
    odds.sort_unstable();
    evens.sort_unstable();
    let top = odds
        .iter()
        .enumerate()
        .map(|(i, f)| f - i as u32)
        .collect();
    let bottom = evens
        .iter()
        .enumerate()
        .map(|(i, g)| g - i as u32)
        .collect();
    (top, bottom)
}

/// Symbol of a partition in the given theory, following the defining
/// recipe: B computes directly; C appends a 0 on the left of the top row
/// (even length) or appends a trailing zero part and deletes the leading
/// bottom 0 (odd length); D appends a trailing zero part and deletes the
/// two leading bottom 0s. The empty partition has the empty symbol.
pub fn compute(p: &Partition, th: Theory) -> Result<Symbol> {
    if !theory::is_valid(p, th) {
        return Err(Error::domain(format!(
            "{p} is not a valid {th} partition"
        )));
    }
    if p.is_empty() {
        return Ok(Symbol::empty());
    }
    let symbol = match th {
        Theory::B => {
            let (top, bottom) = b_core(p.parts());
            Symbol { top, bottom }
        }
        Theory::C => {
            if p.len() % 2 == 0 {
                let (mut top, bottom) = b_core(p.parts());
                top.insert(0, 0);
                Symbol { top, bottom }
            } else {
                let mut parts = p.parts().to_vec();
                parts.push(0);
                let (top, mut bottom) = b_core(&parts);
                delete_leading_zeros(&mut bottom, 1, p, th)?;
                Symbol { top, bottom }
            }
        }
        Theory::D => {
            let mut parts = p.parts().to_vec();
            parts.push(0);
            let (top, mut bottom) = b_core(&parts);
            delete_leading_zeros(&mut bottom, 2, p, th)?;
            Symbol { top, bottom }
        }
    };
    Ok(symbol)
}

fn delete_leading_zeros(row: &mut Vec<u32>, count: usize, p: &Partition, th: Theory) -> Result<()> {
    if row.len() < count || row[..count].iter().any(|&x| x != 0) {
        // Happens only for valid-but-non-rigid inputs (e.g. 2^2 in D),
        // where the printed deletion rule has nothing to delete.
        return Err(Error::domain(format!(
            "symbol deletion rule inapplicable for {p} in {th}"
        )));
    }
    row.drain(..count);
    Ok(())
}

/// Where a single conjugate row contributes, and how many trailing 1s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowContribution {
    pub top: bool,
    pub count: u32,
}

/// Contribution of the `i`-th conjugate row (1-based): the row lands in
/// the top exactly when the parity of its length differs from the parity
/// of `i + t + 1`, with the trailing-1 count split on the length parity.
pub fn row_contribution(i: usize, p: &Partition, th: Theory) -> Result<RowContribution> {
    if i == 0 || i > p.largest() as usize {
        return Err(Error::domain(format!(
            "row index {i} out of range for {p}"
        )));
    }
    let len = p.parts_at_least(i as u32);
    let t = th.offset();
    let len_odd = len % 2 == 1;
    let pos_odd = (i as i32 + t + 1).rem_euclid(2) == 1;
    let top = len_odd != pos_odd;
    let count = if len_odd {
        if top {
            (len + 1) / 2
        } else {
            (len - 1) / 2
        }
    } else {
        len / 2
    };
    Ok(RowContribution { top, count })
}

impl RowContribution {
    /// The contribution as a one-row symbol (right-aligned trailing 1s).
    pub fn as_symbol(&self) -> Symbol {
        let ones = vec![1; self.count as usize];
        if self.top {
            Symbol {
                top: ones,
                bottom: Vec::new(),
            }
        } else {
            Symbol {
                top: Vec::new(),
                bottom: ones,
            }
        }
    }
}

/// Symbol as the right-aligned sum of per-conjugate-row contributions.
/// Stated for rigid partitions; agrees with [`compute`] under padded
/// equality.
pub fn compute_via_rows(p: &Partition, th: Theory) -> Result<Symbol> {
    if !theory::is_rigid(p, th)? {
        return Err(Error::domain(format!(
            "row contributions require a rigid {th} partition, got {p}"
        )));
    }
    let mut acc = Symbol::empty();
    for i in 1..=p.largest() as usize {
        acc = add_symbols(&acc, &row_contribution(i, p, th)?.as_symbol());
    }
    Ok(acc)
}

/// Symbol of a surface operator: the sum of the factor symbols, computed
/// in the factor theories (B pairs a B and a D factor; C and D pair two
/// factors of their own kind).
pub fn operator_symbol(op: &SurfaceOperator) -> Result<Symbol> {
    let (ta, tb) = match op.theory {
        Theory::B => (Theory::B, Theory::D),
        Theory::C => (Theory::C, Theory::C),
        Theory::D => (Theory::D, Theory::D),
    };
    Ok(add_symbols(
        &compute(&op.first, ta)?,
        &compute(&op.second, tb)?,
    ))
}
