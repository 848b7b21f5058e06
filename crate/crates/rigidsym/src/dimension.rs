//! Orbit dimension of a rigid surface operator, in exact integer
//! arithmetic.

use crate::error::{Error, Result};
use crate::operator::SurfaceOperator;
use crate::partition::Partition;
use crate::theory::Theory;

/// Sum of squared conjugate rows plus/minus the odd-part multiplicities,
/// the per-factor piece of the dimension formula, doubled to stay in
/// integers.
fn factor_term_doubled(p: &Partition, plus: bool) -> i64 {
    let conj_sq: i64 = p
        .conj_rows()
        .iter()
        .map(|&s| (s as i64) * (s as i64))
        .sum();
    let odd_mult: i64 = (1..=p.largest())
        .filter(|k| k % 2 == 1)
        .map(|k| p.multiplicity(k) as i64)
        .sum();
    if plus {
        -conj_sq + odd_mult
    } else {
        -conj_sq - odd_mult
    }
}

/// Dimension of the rigid surface operator: the group dimension term
/// `2n^2 + n` (B, C) or `2n^2 - n` (D) minus half the squared conjugate
/// rows of both factors, with the odd-multiplicity correction added for
/// B and D and subtracted for C.
pub fn dimension(op: &SurfaceOperator) -> Result<i64> {
    let n = op.rank as i64;
    let base = match op.theory {
        Theory::B | Theory::C => 2 * n * n + n,
        Theory::D => 2 * n * n - n,
    };
    let plus = op.theory != Theory::C;
    let doubled = 2 * base
        + factor_term_doubled(&op.first, plus)
        + factor_term_doubled(&op.second, plus);
    if doubled % 2 != 0 {
        return Err(Error::domain(format!(
            "dimension of {op} is not an integer (doubled value {doubled})"
        )));
    }
    Ok(doubled / 2)
}
