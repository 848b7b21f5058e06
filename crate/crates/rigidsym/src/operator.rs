//! Rigid surface operators: ordered factor pairs with ambient theory and
//! rank.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::theory::{self, Theory};

/// A rigid surface operator labelled by a pair of partitions.
///
/// In the B_n theory the first factor is a rigid B_k partition (odd size)
/// and the second a rigid D_{n-k} partition (even size, possibly empty).
/// C_n and D_n operators are unordered pairs of rigid C / D partitions and
/// are stored canonically: larger size first, ties broken lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurfaceOperator {
    pub theory: Theory,
    pub rank: u32,
    pub first: Partition,
    pub second: Partition,
}

impl SurfaceOperator {
    /// Validates and canonicalizes a factor pair for the given theory. The
    /// rank is inferred from the total box count.
    pub fn new(theory: Theory, first: Partition, second: Partition) -> Result<Self> {
        let (first, second) = match theory {
            Theory::B => (first, second),
            Theory::C | Theory::D => canonical_pair(first, second),
        };
        let total = first.size() + second.size();
        let rank = match theory {
            Theory::B => {
                if total % 2 == 0 {
                    return Err(Error::domain(format!(
                        "B operator needs 2n+1 boxes, got {total}"
                    )));
                }
                (total - 1) / 2
            }
            Theory::C | Theory::D => {
                if total % 2 == 1 || total == 0 {
                    return Err(Error::domain(format!(
                        "{theory} operator needs 2n boxes with n >= 1, got {total}"
                    )));
                }
                total / 2
            }
        };
        let op = SurfaceOperator {
            theory,
            rank,
            first,
            second,
        };
        op.check()?;
        Ok(op)
    }

    /// Same as [`SurfaceOperator::new`] but also checks the expected rank.
    pub fn with_rank(theory: Theory, rank: u32, first: Partition, second: Partition) -> Result<Self> {
        let op = SurfaceOperator::new(theory, first, second)?;
        if op.rank != rank {
            return Err(Error::domain(format!(
                "operator {op} has rank {}, expected {rank}",
                op.rank
            )));
        }
        Ok(op)
    }

    fn check(&self) -> Result<()> {
        match self.theory {
            Theory::B => {
                if self.first.size() % 2 == 0 {
                    return Err(Error::domain(format!(
                        "B factor {} must have odd size",
                        self.first
                    )));
                }
                require_rigid(&self.first, Theory::B)?;
                if !self.second.is_empty() {
                    require_rigid(&self.second, Theory::D)?;
                }
            }
            Theory::C => {
                require_rigid(&self.first, Theory::C)?;
                require_rigid(&self.second, Theory::C)?;
            }
            Theory::D => {
                require_rigid(&self.first, Theory::D)?;
                require_rigid(&self.second, Theory::D)?;
            }
        }
        Ok(())
    }

    /// Parses `"(first;second)"` (or a bare partition, read as the
    /// unipotent operator `(λ;∅)`).
    pub fn parse(text: &str, theory: Theory) -> Result<Self> {
        let text = text.trim();
        let (a, b) = if let Some(inner) = text.strip_prefix('(') {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(format!("unterminated pair `{text}`")))?;
            let (a, b) = inner
                .split_once(';')
                .ok_or_else(|| Error::parse(format!("pair `{text}` needs `;`")))?;
            (Partition::parse(a)?, Partition::parse(b)?)
        } else {
            (Partition::parse(text)?, Partition::empty())
        };
        SurfaceOperator::new(theory, a, b)
    }
}

fn require_rigid(p: &Partition, th: Theory) -> Result<()> {
    match theory::rigidity_violation(p, th) {
        None => Ok(()),
        Some(v) => Err(Error::domain(format!("factor {p}: {v}"))),
    }
}

/// Canonical order for unordered pairs: larger size first, equal sizes
/// lexicographically ascending.
fn canonical_pair(a: Partition, b: Partition) -> (Partition, Partition) {
    if (b.size(), &a) > (a.size(), &b) {
        (b, a)
    } else {
        (a, b)
    }
}

impl fmt::Display for SurfaceOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})_{}{}", self.first, self.second, self.theory, self.rank)
    }
}
