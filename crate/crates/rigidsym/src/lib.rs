//! Symbol invariants, orbit dimensions, and S-duality maps of rigid
//! surface operators labelled by pairs of partitions in the classical
//! B/C/D theories, with exhaustive per-rank enumeration and duality
//! matching.

pub mod dimension;
pub mod enumerate;
pub mod error;
pub mod fixture;
pub mod maps;
pub mod operator;
pub mod partition;
pub mod symbol;
pub mod theory;

pub use dimension::dimension;
pub use enumerate::{
    classify_problematic, find_duals, group_by_symbol, mismatch_series, rigid_operators,
    rigid_operators_seq, rigid_partitions, MismatchEntry, MismatchReport, ProblemKind,
    StructuralTag, SymbolClass,
};
pub use error::{Error, Result};
pub use maps::{
    cb_eo, eo, transfer_b_to_c, transfer_c_to_b, wb, wc, wcc, within_theory_moves, x_s, x_s_inv,
    y_s, y_s_inv, MapOutcome, TransferCase,
};
pub use operator::SurfaceOperator;
pub use partition::Partition;
pub use symbol::{add_symbols, compute, compute_via_rows, operator_symbol, row_contribution, Symbol};
pub use theory::{is_rigid, is_valid, pair_structure, Theory};
