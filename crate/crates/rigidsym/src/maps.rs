//! Symbol-preserving maps: the box-shifting maps between theories, the
//! composite duality maps, the longest-row transfer algorithms, and
//! within-theory moves.
//!
//! All maps act geometrically on conjugate rows; after an edit the rows
//! are re-sorted descending, zero rows dropped, and conjugated back.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::operator::SurfaceOperator;
use crate::partition::Partition;
use crate::symbol::operator_symbol;
use crate::theory::{self, Theory};

/// Alternating box shift on conjugate rows: the first row gets
/// `first_delta`, and the sign alternates down the rows. With
/// `first_delta = -1` this is the B-style pairing (unpaired first row
/// shrinks, then each pair gains/loses a box); with `first_delta = +1`
/// the pairing starts at row 1 (the C-style pairing). Exposed so the
/// "Y_S is X_S with the pairing shifted by one" relation can be checked
/// structurally.
pub fn apply_pair_rule(rows: &[u32], first_delta: i32) -> Vec<u32> {
    rows.iter()
        .enumerate()
        .map(|(j, &r)| {
            let delta = if j % 2 == 0 { first_delta } else { -first_delta };
            (r as i64 + delta as i64).max(0) as u32
        })
        .collect()
}

fn check_rows(p: &Partition, odd: bool, map: &str) -> Result<Vec<u32>> {
    let rows = p.conj_rows();
    for w in rows.windows(2) {
        if w[0] <= w[1] {
            return Err(Error::domain(format!(
                "{map}: conjugate rows of {p} are not strictly decreasing"
            )));
        }
    }
    if !theory::all_rows_have_parity(p, odd) {
        let want = if odd { "odd" } else { "even" };
        return Err(Error::domain(format!(
            "{map}: {p} must have all {want} conjugate rows"
        )));
    }
    Ok(rows)
}

/// X_S: all-odd conjugate rows in B to all-even rows in C. The unpaired
/// first row loses a box, each following pair shifts a box from its
/// second row to its first. Drops one box overall.
pub fn x_s(p: &Partition) -> Result<Partition> {
    let rows = check_rows(p, true, "x_s")?;
    if rows.len() % 2 == 0 {
        return Err(Error::domain(format!(
            "x_s: {p} must have an odd number of conjugate rows"
        )));
    }
    Ok(Partition::from_conj_rows(apply_pair_rule(&rows, -1)))
}

/// Y_S: all-odd conjugate rows in C to all-even rows in D; pairs start at
/// the first row, so every pair shifts a box from its second row to its
/// first. Size-preserving. Defined as X_S with the pairing shifted.
pub fn y_s(p: &Partition) -> Result<Partition> {
    let rows = check_rows(p, true, "y_s")?;
    if rows.len() % 2 == 1 {
        return Err(Error::domain(format!(
            "y_s: {p} must have an even number of conjugate rows"
        )));
    }
    Ok(Partition::from_conj_rows(apply_pair_rule(&rows, 1)))
}

/// Inverse of [`x_s`]: all-even conjugate rows in C back to all-odd rows
/// in B. The empty partition maps to the one-box partition.
pub fn x_s_inv(p: &Partition) -> Result<Partition> {
    let rows = check_rows(p, false, "x_s_inv")?;
    let mut out = apply_pair_rule(&rows, 1);
    if rows.len() % 2 == 0 {
        // restore the unpaired last row the forward map deleted
        out.push(1);
    }
    Ok(Partition::from_conj_rows(out))
}

/// Inverse of [`y_s`]: all-even conjugate rows in D back to all-odd rows
/// in C. The empty partition is fixed.
pub fn y_s_inv(p: &Partition) -> Result<Partition> {
    let rows = check_rows(p, false, "y_s_inv")?;
    let mut out = apply_pair_rule(&rows, -1);
    if rows.len() % 2 == 1 {
        out.push(1);
    }
    Ok(Partition::from_conj_rows(out))
}

fn require_rigid(p: &Partition, th: Theory, map: &str) -> Result<()> {
    if !theory::is_rigid(p, th)? {
        return Err(Error::domain(format!(
            "{map} requires a rigid {th} partition, got {p}"
        )));
    }
    Ok(())
}

/// WB: the unipotent B operator (λ; ∅) to its C dual. Split by
/// conjugate-row parity and apply X_S to the odd half.
pub fn wb(p: &Partition) -> Result<SurfaceOperator> {
    require_rigid(p, Theory::B, "wb")?;
    let (odd, even) = theory::split_by_conj_parity(p);
    SurfaceOperator::new(Theory::C, x_s(&odd)?, even)
}

/// WC: the unipotent C operator (λ; ∅) to its B dual.
pub fn wc(p: &Partition) -> Result<SurfaceOperator> {
    require_rigid(p, Theory::C, "wc")?;
    if p.is_empty() {
        return Err(Error::domain("wc of the empty partition"));
    }
    let (odd, even) = theory::split_by_conj_parity(p);
    SurfaceOperator::new(Theory::B, x_s_inv(&even)?, y_s(&odd)?)
}

/// WCC: the equal-factor C operator (ρ; ρ) to its B dual:
/// (ρ_even + X_S⁻¹ρ_even ; ρ_odd + Y_S ρ_odd).
pub fn wcc(rho: &Partition) -> Result<SurfaceOperator> {
    require_rigid(rho, Theory::C, "wcc")?;
    let (odd, even) = theory::split_by_conj_parity(rho);
    SurfaceOperator::new(
        Theory::B,
        even.add(&x_s_inv(&even)?),
        odd.add(&y_s(&odd)?),
    )
}

/// CB_eo: a C operator with one all-even-row factor and one all-odd-row
/// factor to its B dual (X_S⁻¹ on the even factor, Y_S on the odd one).
/// Factor identification is by shape, not position.
pub fn cb_eo(op: &SurfaceOperator) -> Result<SurfaceOperator> {
    if op.theory != Theory::C {
        return Err(Error::domain(format!("cb_eo expects a C operator, got {op}")));
    }
    let assignments = [(&op.first, &op.second), (&op.second, &op.first)];
    for (even, odd) in assignments {
        if theory::all_rows_have_parity(even, false) && theory::all_rows_have_parity(odd, true) {
            return SurfaceOperator::new(Theory::B, x_s_inv(even)?, y_s(odd)?);
        }
    }
    Err(Error::domain(format!(
        "cb_eo: {op} has no (all-even; all-odd) factor assignment"
    )))
}

/// EO: exact inverse of [`cb_eo`] — a B operator with an all-odd first
/// factor and all-even second factor back to the C side.
pub fn eo(op: &SurfaceOperator) -> Result<SurfaceOperator> {
    if op.theory != Theory::B {
        return Err(Error::domain(format!("eo expects a B operator, got {op}")));
    }
    SurfaceOperator::new(Theory::C, x_s(&op.first)?, y_s_inv(&op.second)?)
}

/// The paper's six transfer algorithms, collapsed to two operations; the
/// applied case is reported for traceability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum TransferCase {
    EE,
    OO,
    CE,
    CO,
    BO,
    BE,
}

impl std::fmt::Display for TransferCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TransferCase::EE => "EE",
            TransferCase::OO => "OO",
            TransferCase::CE => "CE",
            TransferCase::CO => "CO",
            TransferCase::BO => "BO",
            TransferCase::BE => "BE",
        };
        write!(f, "{s}")
    }
}

/// Result of a longest-row transfer: the produced factor pair (which may
/// break a rigidity clause — the problematic cases), the applied case,
/// and the violation if any.
#[derive(Debug, Clone)]
pub struct MapOutcome {
    pub theory: Theory,
    pub rank: u32,
    pub first: Partition,
    pub second: Partition,
    pub case: TransferCase,
    pub rigidity_ok: bool,
    pub violation: Option<String>,
}

impl MapOutcome {
    /// The outcome as a checked operator; errors when not rigid.
    pub fn operator(&self) -> Result<SurfaceOperator> {
        SurfaceOperator::with_rank(self.theory, self.rank, self.first.clone(), self.second.clone())
    }
}

impl std::fmt::Display for MapOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}; {})_{}{} [case {}]",
            self.first, self.second, self.theory, self.rank, self.case
        )?;
        if let Some(v) = &self.violation {
            write!(f, " (not rigid: {v})")?;
        }
        Ok(())
    }
}

fn factor_violation(p: &Partition, th: Theory) -> Option<String> {
    theory::rigidity_violation(p, th).map(|v| format!("factor {p}: {v}"))
}

/// Moves the overall-longest conjugate row of a C operator into the other
/// factor, lengthened by one box; the odd-size result is the B factor,
/// the even-size one the D factor. Rigid inputs with rigid outcomes are
/// exactly the symbol-preserving EE/OO/CE/CO algorithms.
pub fn transfer_c_to_b(op: &SurfaceOperator) -> Result<MapOutcome> {
    if op.theory != Theory::C {
        return Err(Error::domain(format!(
            "transfer_c_to_b expects a C operator, got {op}"
        )));
    }
    let rows1 = op.first.conj_rows();
    let rows2 = op.second.conj_rows();
    let top1 = rows1.first().copied().unwrap_or(0);
    let top2 = rows2.first().copied().unwrap_or(0);
    if top1 == 0 && top2 == 0 {
        return Err(Error::domain("transfer_c_to_b: both factors empty"));
    }
    let donor_is_first = top1 >= top2;
    let (mut donor, mut recv, moved) = if donor_is_first {
        (rows1.clone(), rows2.clone(), top1)
    } else {
        (rows2.clone(), rows1.clone(), top2)
    };
    donor.remove(0);
    recv.push(moved + 1);
    let donor_p = Partition::from_conj_rows(donor);
    let recv_p = Partition::from_conj_rows(recv);
    let (b_factor, d_factor) = if donor_p.size() % 2 == 1 {
        (donor_p, recv_p)
    } else {
        (recv_p, donor_p)
    };
    let case = match (top1 % 2 == 0, top2 % 2 == 0) {
        (true, true) => TransferCase::EE,
        (false, false) => TransferCase::OO,
        _ => {
            if moved % 2 == 0 {
                TransferCase::CE
            } else {
                TransferCase::CO
            }
        }
    };
    let violation = factor_violation(&b_factor, Theory::B)
        .or_else(|| factor_violation(&d_factor, Theory::D));
    Ok(MapOutcome {
        theory: Theory::B,
        rank: op.rank,
        first: b_factor,
        second: d_factor,
        rigidity_ok: violation.is_none(),
        violation,
        case,
    })
}

/// Moves the overall-longest conjugate row of a B operator into the other
/// factor, shortened by one box; emits the C pair (the BO/BE algorithms).
pub fn transfer_b_to_c(op: &SurfaceOperator) -> Result<MapOutcome> {
    if op.theory != Theory::B {
        return Err(Error::domain(format!(
            "transfer_b_to_c expects a B operator, got {op}"
        )));
    }
    let rows1 = op.first.conj_rows();
    let rows2 = op.second.conj_rows();
    let top1 = rows1.first().copied().unwrap_or(0);
    let top2 = rows2.first().copied().unwrap_or(0);
    let donor_is_first = top1 >= top2;
    let (mut donor, mut recv, moved) = if donor_is_first {
        (rows1.clone(), rows2.clone(), top1)
    } else {
        (rows2.clone(), rows1.clone(), top2)
    };
    if moved < 2 && donor.len() + recv.len() <= 1 {
        return Err(Error::domain(format!(
            "transfer_b_to_c: {op} too small to transfer"
        )));
    }
    donor.remove(0);
    recv.push(moved - 1);
    let a = Partition::from_conj_rows(donor);
    let b = Partition::from_conj_rows(recv);
    // unordered C pair: larger size first, ties lexicographic
    let (first, second) = if (b.size(), a.parts()) > (a.size(), b.parts()) {
        (b, a)
    } else {
        (a, b)
    };
    let case = if moved % 2 == 1 {
        TransferCase::BO
    } else {
        TransferCase::BE
    };
    let violation = factor_violation(&first, Theory::C)
        .or_else(|| factor_violation(&second, Theory::C));
    Ok(MapOutcome {
        theory: Theory::C,
        rank: op.rank,
        first,
        second,
        rigidity_ok: violation.is_none(),
        violation,
        case,
    })
}

/// All rigid same-theory, same-rank operators with the same symbol that
/// are one move away: either a straight exchange of conjugate rows
/// between the factors, or an exchange where the two rows shift a box
/// between them (pair-position parity switch). Candidates breaking
/// validity or the symbol are discarded.
pub fn within_theory_moves(op: &SurfaceOperator) -> Result<BTreeSet<SurfaceOperator>> {
    let base = operator_symbol(op)?;
    let rows1 = op.first.conj_rows();
    let rows2 = op.second.conj_rows();
    let mut out = BTreeSet::new();

    let mut consider = |r1: Vec<u32>, r2: Vec<u32>| {
        let cand = SurfaceOperator::new(
            op.theory,
            Partition::from_conj_rows(r1),
            Partition::from_conj_rows(r2),
        );
        if let Ok(cand) = cand {
            if cand.rank == op.rank && cand != *op {
                if let Ok(sym) = operator_symbol(&cand) {
                    if sym == base {
                        out.insert(cand);
                    }
                }
            }
        }
    };

    // row slots, including a virtual empty slot on each side
    let slots1: Vec<Option<usize>> =
        (0..rows1.len()).map(Some).chain([None]).collect();
    let slots2: Vec<Option<usize>> =
        (0..rows2.len()).map(Some).chain([None]).collect();

    for &s1 in &slots1 {
        for &s2 in &slots2 {
            let a = s1.map(|i| rows1[i]).unwrap_or(0);
            let b = s2.map(|j| rows2[j]).unwrap_or(0);
            if a == 0 && b == 0 {
                continue;
            }
            // exchanged lengths: straight swap, or shifted by one box
            for (to2, to1) in [
                (a as i64, b as i64),
                (a as i64 + 1, b as i64 - 1),
                (a as i64 - 1, b as i64 + 1),
            ] {
                if to1 < 0 || to2 < 0 {
                    continue;
                }
                let mut r1 = rows1.clone();
                let mut r2 = rows2.clone();
                if let Some(i) = s1 {
                    r1[i] = to1 as u32;
                } else if to1 > 0 {
                    r1.push(to1 as u32);
                }
                if let Some(j) = s2 {
                    r2[j] = to2 as u32;
                } else if to2 > 0 {
                    r2.push(to2 as u32);
                }
                consider(r1, r2);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimension::dimension;

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    #[test]
    fn box_shift_examples() {
        assert_eq!(x_s(&p("3 2^2 1^10")).unwrap(), p("2^4 1^8"));
        assert_eq!(x_s(&p("1^3")).unwrap(), p("1^2"));
        assert_eq!(x_s(&p("1")).unwrap(), Partition::empty());
        assert_eq!(y_s(&p("2 1^8")).unwrap(), p("1^10"));
        assert_eq!(y_s(&p("2^3 1^6")).unwrap(), p("2^2 1^8"));
        assert_eq!(y_s(&p("2 1^4")).unwrap(), p("1^6"));
        assert_eq!(x_s_inv(&p("1^2")).unwrap(), p("1^3"));
        assert_eq!(x_s_inv(&Partition::empty()).unwrap(), p("1"));
        assert_eq!(x_s_inv(&p("1^6")).unwrap(), p("1^7"));
        assert_eq!(y_s_inv(&p("1^10")).unwrap(), p("2 1^8"));
        assert_eq!(y_s_inv(&Partition::empty()).unwrap(), Partition::empty());
    }

    #[test]
    fn box_shift_domain_errors() {
        // even rows into x_s, odd rows into x_s_inv
        assert!(x_s(&p("2^4 1^8")).is_err());
        assert!(x_s_inv(&p("1^3")).is_err());
        // tied conjugate rows are outside every box-shift domain
        assert!(x_s_inv(&p("2^4")).is_err());
    }

    #[test]
    fn composite_map_examples() {
        let op = wb(&p("5 4^2 3^3 2^4 1^3")).unwrap();
        assert_eq!(op, SurfaceOperator::parse("(2^4 1^8;2^6 1^4)", Theory::C).unwrap());
        assert_eq!(
            wb(&p("2^2 1^9")).unwrap(),
            SurfaceOperator::parse("(1^10;1^2)", Theory::C).unwrap()
        );
        assert_eq!(
            wb(&p("3 2^2 1^6")).unwrap(),
            SurfaceOperator::parse("(2^4 1^4;-)", Theory::C).unwrap()
        );
        assert_eq!(
            wc(&p("2 1^10")).unwrap(),
            SurfaceOperator::parse("(1;1^12)", Theory::B).unwrap()
        );
        assert_eq!(
            wc(&p("2^3 1^6")).unwrap(),
            SurfaceOperator::parse("(1;2^2 1^8)", Theory::B).unwrap()
        );
        assert_eq!(
            wc(&p("3^2 2 1^4")).unwrap(),
            SurfaceOperator::parse("(1^3;2^2 1^6)", Theory::B).unwrap()
        );
        assert_eq!(
            wcc(&p("2 1^4")).unwrap(),
            SurfaceOperator::parse("(1;3 2^4 1)", Theory::B).unwrap()
        );
        assert_eq!(
            wcc(&Partition::empty()).unwrap(),
            SurfaceOperator::parse("(1;-)", Theory::B).unwrap()
        );
    }

    #[test]
    fn cb_eo_examples() {
        for (c, b) in [
            ("(2 1^8;1^2)", "(1^3;1^10)"),
            ("(2 1^6;1^4)", "(1^5;1^8)"),
            ("(2^3 1^2;1^4)", "(1^5;2^2 1^4)"),
        ] {
            let cop = SurfaceOperator::parse(c, Theory::C).unwrap();
            let bop = SurfaceOperator::parse(b, Theory::B).unwrap();
            assert_eq!(cb_eo(&cop).unwrap(), bop);
            assert_eq!(eo(&bop).unwrap(), cop);
        }
    }

    #[test]
    fn maps_preserve_symbol_and_dimension() {
        let cop = SurfaceOperator::parse("(2 1^8;1^2)", Theory::C).unwrap();
        let bop = cb_eo(&cop).unwrap();
        assert_eq!(operator_symbol(&cop).unwrap(), operator_symbol(&bop).unwrap());
        assert_eq!(dimension(&cop).unwrap(), dimension(&bop).unwrap());
    }

    #[test]
    fn transfer_examples() {
        let op = SurfaceOperator::parse("(2 1^4;2 1^4)", Theory::C).unwrap();
        let out = transfer_c_to_b(&op).unwrap();
        assert!(out.rigidity_ok);
        assert_eq!(out.case, TransferCase::OO);
        assert_eq!(
            out.operator().unwrap(),
            SurfaceOperator::parse("(1;3 2^4 1)", Theory::B).unwrap()
        );
        assert_eq!(
            operator_symbol(&out.operator().unwrap()).unwrap(),
            operator_symbol(&op).unwrap()
        );

        let op = SurfaceOperator::parse("(2^3 1^2;1^4)", Theory::C).unwrap();
        let out = transfer_c_to_b(&op).unwrap();
        assert!(!out.rigidity_ok);
        assert!(out.violation.as_deref().unwrap().contains("twice"));

        let op = SurfaceOperator::parse("(1;1^12)", Theory::B).unwrap();
        let out = transfer_b_to_c(&op).unwrap();
        assert!(out.rigidity_ok);
        assert_eq!(out.case, TransferCase::BE);
        assert_eq!(
            out.operator().unwrap(),
            SurfaceOperator::parse("(2 1^10;-)", Theory::C).unwrap()
        );

        for text in ["(2^4 1;1^4)", "(1^5;3 2^2 1)"] {
            let op = SurfaceOperator::parse(text, Theory::B).unwrap();
            let out = transfer_b_to_c(&op).unwrap();
            assert!(!out.rigidity_ok, "{text}");
        }
    }

    #[test]
    fn within_theory_moves_preserve_symbol() {
        let op = SurfaceOperator::parse("(2 1^6;1^4)", Theory::C).unwrap();
        let moved = within_theory_moves(&op).unwrap();
        let base = operator_symbol(&op).unwrap();
        for m in &moved {
            assert_eq!(operator_symbol(m).unwrap(), base, "{m}");
            assert_eq!(m.rank, op.rank);
        }
    }
}
