//! Exhaustive enumeration of rigid partitions and operators, symbol-class
//! grouping, duality matching, the B/C mismatch series, and the
//! classification of problematic operators.

use std::collections::{BTreeMap, BTreeSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::operator::SurfaceOperator;
use crate::partition::Partition;
use crate::symbol::{operator_symbol, Symbol};
use crate::theory::{self, Theory};

/// All rigid partitions of `n` boxes for the theory, sorted. A parity
/// mismatch (odd `n` for C/D, even for B) gives an empty list; `n = 0`
/// gives the empty partition for C and D.
pub fn rigid_partitions(th: Theory, n: u32) -> Vec<Partition> {
    match th {
        Theory::B if n % 2 == 0 => return Vec::new(),
        Theory::C | Theory::D if n % 2 == 1 => return Vec::new(),
        _ => {}
    }
    if n == 0 {
        return vec![Partition::empty()];
    }
    // no gaps: every value 1..=m has multiplicity >= 1; pick the
    // multiplicity of each value bottom-up
    let mut out = Vec::new();
    let mut mults: Vec<u32> = Vec::new();
    fn rec(th: Theory, value: u32, remaining: u32, mults: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            let mut parts = Vec::new();
            for (i, &r) in mults.iter().enumerate().rev() {
                parts.extend(std::iter::repeat(i as u32 + 1).take(r as usize));
            }
            out.push(Partition::new(parts).expect("descending by construction"));
            return;
        }
        let even_mult = match th {
            Theory::B | Theory::D => value % 2 == 0,
            Theory::C => value % 2 == 1,
        };
        let no_twice = match th {
            Theory::B | Theory::D => value % 2 == 1,
            Theory::C => value % 2 == 0,
        };
        for r in 1..=remaining / value {
            if even_mult && r % 2 == 1 {
                continue;
            }
            if no_twice && r == 2 {
                continue;
            }
            let rest = remaining - r * value;
            // whatever remains must accommodate at least one part of value+1
            if rest != 0 && rest <= value {
                continue;
            }
            mults.push(r);
            rec(th, value + 1, rest, mults, out);
            mults.pop();
        }
    }
    rec(th, 1, n, &mut mults, &mut out);
    out.sort();
    out
}

fn operators_for_split(th: Theory, first_size: u32, second_size: u32) -> Vec<SurfaceOperator> {
    let (ta, tb) = match th {
        Theory::B => (Theory::B, Theory::D),
        Theory::C => (Theory::C, Theory::C),
        Theory::D => (Theory::D, Theory::D),
    };
    let mut out = Vec::new();
    for a in rigid_partitions(ta, first_size) {
        for b in rigid_partitions(tb, second_size) {
            if let Ok(op) = SurfaceOperator::new(th, a.clone(), b) {
                out.push(op);
            }
        }
    }
    out
}

fn splits(th: Theory, rank: u32) -> Vec<(u32, u32)> {
    let total = match th {
        Theory::B => 2 * rank + 1,
        Theory::C | Theory::D => 2 * rank,
    };
    match th {
        Theory::B => (0..=rank).map(|k| (2 * k + 1, total - 2 * k - 1)).collect(),
        // unordered pairs: only generate the larger-or-equal first size;
        // the operator constructor canonicalizes ties
        Theory::C | Theory::D => (0..=rank / 2).map(|s| (total - 2 * s, 2 * s)).collect(),
    }
}

/// All rigid surface operators of the theory at the given rank, in
/// canonical deterministic order. Semisimple C/D pairs are unordered.
pub fn rigid_operators(th: Theory, rank: u32) -> Vec<SurfaceOperator> {
    #[cfg(feature = "parallel")]
    {
        let set: BTreeSet<SurfaceOperator> = splits(th, rank)
            .into_par_iter()
            .flat_map_iter(|(a, b)| operators_for_split(th, a, b))
            .collect();
        set.into_iter().collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        rigid_operators_seq(th, rank)
    }
}

/// Sequential counterpart of [`rigid_operators`]; always available for
/// comparison benchmarks and as the fallback implementation.
pub fn rigid_operators_seq(th: Theory, rank: u32) -> Vec<SurfaceOperator> {
    let set: BTreeSet<SurfaceOperator> = splits(th, rank)
        .into_iter()
        .flat_map(|(a, b)| operators_for_split(th, a, b))
        .collect();
    set.into_iter().collect()
}

/// The B and C operators of one rank sharing one symbol.
#[derive(Debug, Clone)]
pub struct SymbolClass {
    pub symbol: Symbol,
    pub b_members: Vec<SurfaceOperator>,
    pub c_members: Vec<SurfaceOperator>,
}

/// Buckets the rank-`n` B and C operators by canonical symbol.
pub fn group_by_symbol(rank: u32) -> Vec<SymbolClass> {
    let mut classes: BTreeMap<(Vec<u32>, Vec<u32>), SymbolClass> = BTreeMap::new();
    for (th, ops) in [
        (Theory::B, rigid_operators(Theory::B, rank)),
        (Theory::C, rigid_operators(Theory::C, rank)),
    ] {
        for op in ops {
            let sym = operator_symbol(&op).expect("rigid operator has a symbol");
            let entry = classes.entry(sym.canonical()).or_insert_with(|| SymbolClass {
                symbol: sym,
                b_members: Vec::new(),
                c_members: Vec::new(),
            });
            match th {
                Theory::B => entry.b_members.push(op),
                _ => entry.c_members.push(op),
            }
        }
    }
    classes.into_values().collect()
}

/// All rigid operators of the dual theory (B↔C, D within itself) at the
/// same rank with the same symbol. A D operator alone in its class is its
/// own dual.
pub fn find_duals(op: &SurfaceOperator) -> Vec<SurfaceOperator> {
    let target = op.theory.dual();
    let sym = match operator_symbol(op) {
        Ok(s) => s,
        Err(_) => return Vec::new(),
    };
    rigid_operators(target, op.rank)
        .into_iter()
        .filter(|cand| operator_symbol(cand).map(|s| s == sym).unwrap_or(false))
        .collect()
}

/// One rank of the mismatch series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MismatchEntry {
    pub rank: u32,
    pub n_b: usize,
    pub n_c: usize,
    pub diff: i64,
}

/// Counts of rigid B vs C operators for ranks `1..=max_rank`.
pub fn mismatch_series(max_rank: u32) -> Vec<MismatchEntry> {
    let count = |n: u32| {
        let n_b = rigid_operators(Theory::B, n).len();
        let n_c = rigid_operators(Theory::C, n).len();
        MismatchEntry {
            rank: n,
            n_b,
            n_c,
            diff: n_b as i64 - n_c as i64,
        }
    };
    #[cfg(feature = "parallel")]
    {
        (1..=max_rank).into_par_iter().map(count).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (1..=max_rank).map(count).collect()
    }
}

/// Ground-truth problematic kind from symbol-class counting: type I has
/// an empty opposite side, type II unequal non-zero counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ProblemKind {
    I,
    II,
}

/// Advisory structural tag from the paper's classification table,
/// computed from factor shapes alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum StructuralTag {
    IB,
    IC,
    IIB,
    IIC,
}

impl std::fmt::Display for StructuralTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            StructuralTag::IB => "IB",
            StructuralTag::IC => "IC",
            StructuralTag::IIB => "IIB",
            StructuralTag::IIC => "IIC",
        };
        write!(f, "{s}")
    }
}

/// Structural classification of an operator irrespective of symbol
/// classes: the II shape is one all-odd-row factor against one
/// all-even-row factor; the I shape is written lengths differing by one
/// without the II shape.
pub fn structural_tag(op: &SurfaceOperator) -> Option<StructuralTag> {
    let b_side = op.theory == Theory::B;
    let odd_even = |a: &Partition, b: &Partition| {
        theory::all_rows_have_parity(a, true) && theory::all_rows_have_parity(b, false)
    };
    if odd_even(&op.first, &op.second) || odd_even(&op.second, &op.first) {
        return Some(if b_side { StructuralTag::IIB } else { StructuralTag::IIC });
    }
    let diff = op.first.len().abs_diff(op.second.len());
    if diff == 1 {
        return Some(if b_side { StructuralTag::IB } else { StructuralTag::IC });
    }
    None
}

/// A surplus operator with its ground-truth kind and the advisory
/// structural tag.
#[derive(Debug, Clone)]
pub struct ProblematicOperator {
    pub op: SurfaceOperator,
    pub kind: ProblemKind,
    pub structural: Option<StructuralTag>,
    /// whether the structural tag agrees with the symbol-class kind
    pub agree: bool,
}

/// Full mismatch analysis for one rank.
#[derive(Debug, Clone)]
pub struct MismatchReport {
    pub rank: u32,
    pub n_b: usize,
    pub n_c: usize,
    pub classes: Vec<SymbolClass>,
    pub problematic: Vec<ProblematicOperator>,
}

/// Classifies the surplus operators of unbalanced symbol classes. Every
/// member of a class whose opposite side is empty is type I; every member
/// of the larger side of an unbalanced class with both sides non-empty is
/// type II.
pub fn classify_problematic(rank: u32) -> MismatchReport {
    let classes = group_by_symbol(rank);
    let n_b: usize = classes.iter().map(|c| c.b_members.len()).sum();
    let n_c: usize = classes.iter().map(|c| c.c_members.len()).sum();
    let mut problematic = Vec::new();
    for class in &classes {
        let (nb, nc) = (class.b_members.len(), class.c_members.len());
        if nb == nc {
            continue;
        }
        let (kind, surplus_side): (ProblemKind, &[SurfaceOperator]) = if nb == 0 {
            (ProblemKind::I, &class.c_members)
        } else if nc == 0 {
            (ProblemKind::I, &class.b_members)
        } else if nb > nc {
            (ProblemKind::II, &class.b_members)
        } else {
            (ProblemKind::II, &class.c_members)
        };
        for op in surplus_side {
            let structural = structural_tag(op);
            let agree = matches!(
                (kind, structural),
                (ProblemKind::I, Some(StructuralTag::IB | StructuralTag::IC))
                    | (ProblemKind::II, Some(StructuralTag::IIB | StructuralTag::IIC))
            );
            problematic.push(ProblematicOperator {
                op: op.clone(),
                kind,
                structural,
                agree,
            });
        }
    }
    MismatchReport {
        rank,
        n_b,
        n_c,
        classes,
        problematic,
    }
}
