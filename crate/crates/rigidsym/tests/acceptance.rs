//! Acceptance gate: one pass/fail line per criterion.

use rigidsym::{
    dimension, enumerate, fixture, maps,
    operator::SurfaceOperator,
    partition::Partition,
    symbol::{self, operator_symbol},
    theory::{self, Role, Theory},
};

fn report(name: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("acceptance {name}: pass"),
        Err(e) => {
            println!("acceptance {name}: FAIL ({e})");
            panic!("{name}: {e}");
        }
    }
}

fn p(text: &str) -> Partition {
    Partition::parse(text).unwrap()
}

fn op(text: &str, th: Theory) -> SurfaceOperator {
    SurfaceOperator::parse(text, th).unwrap()
}

#[test]
fn criterion_1_symbol_reproduction() {
    report("1 symbol reproduction", (|| {
        let rows = fixture::load().map_err(|e| e.to_string())?;
        for row in &rows {
            let so_sym = operator_symbol(&row.so).map_err(|e| e.to_string())?;
            if so_sym != row.symbol {
                return Err(format!("row {}: SO symbol [{so_sym}] != table [{}]", row.num, row.symbol));
            }
            if let Some(sp) = &row.sp {
                let sp_sym = operator_symbol(sp).map_err(|e| e.to_string())?;
                if sp_sym != row.symbol {
                    return Err(format!("row {}: Sp symbol differs", row.num));
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_2_dimension_reproduction() {
    report("2 dimension reproduction", (|| {
        let expected: [i64; 24] = [
            0, 12, 20, 30, 30, 32, 36, 36, 36, 40, 40, 42, 44, 44, 44, 48, 48, 50, 50, 52, 54,
            54, 56, 60,
        ];
        let rows = fixture::load().map_err(|e| e.to_string())?;
        for (row, want) in rows.iter().zip(expected) {
            if row.dim != want {
                return Err(format!("fixture row {} lists dim {}, expected {want}", row.num, row.dim));
            }
            let got = dimension(&row.so).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!("row {}: dim {got} != {want}", row.num));
            }
            if let Some(sp) = &row.sp {
                let got = dimension(sp).map_err(|e| e.to_string())?;
                if got != want {
                    return Err(format!("row {} (Sp side): dim {got} != {want}", row.num));
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_3_census() {
    report("3 census", (|| {
        let rows = fixture::load().map_err(|e| e.to_string())?;
        let mut so: Vec<_> = rows.iter().map(|r| r.so.clone()).collect();
        so.sort();
        let mut sp: Vec<_> = rows.iter().filter_map(|r| r.sp.clone()).collect();
        sp.sort();
        let b = enumerate::rigid_operators(Theory::B, 6);
        let c = enumerate::rigid_operators(Theory::C, 6);
        if b.len() != 24 || b != so {
            return Err(format!("B census: {} operators, table listing differs", b.len()));
        }
        if c.len() != 20 || c != sp {
            return Err(format!("C census: {} operators, table listing differs", c.len()));
        }
        Ok(())
    })());
}

#[test]
fn criterion_4_named_map_anchors() {
    report("4 named-map anchors", (|| {
        let rows = fixture::load().map_err(|e| e.to_string())?;
        let row = |n: u32| rows.iter().find(|r| r.num == n).unwrap();
        for n in [1, 2, 4, 10, 13] {
            let r = row(n);
            let got = maps::wc(&r.sp.as_ref().unwrap().first).map_err(|e| e.to_string())?;
            if got != r.so {
                return Err(format!("WC row {n}: got {got}"));
            }
        }
        for n in [3, 6, 7, 9] {
            let r = row(n);
            let got = maps::wb(&r.so.first).map_err(|e| e.to_string())?;
            if got != *r.sp.as_ref().unwrap() {
                return Err(format!("WB row {n}: got {got}"));
            }
        }
        let b16 = maps::wb(&p("5 4^2 3^3 2^4 1^3")).map_err(|e| e.to_string())?;
        if b16 != op("(2^4 1^8;2^6 1^4)", Theory::C) || b16.rank != 16 {
            return Err(format!("WB B_16 example: got {b16}"));
        }
        let r17 = row(17);
        let got = maps::wcc(&r17.sp.as_ref().unwrap().first).map_err(|e| e.to_string())?;
        if got != r17.so {
            return Err(format!("WCC row 17: got {got}"));
        }
        for n in [5, 11, 12, 18] {
            let r = row(n);
            let got = maps::cb_eo(r.sp.as_ref().unwrap()).map_err(|e| e.to_string())?;
            if got != r.so {
                return Err(format!("CB_eo row {n}: got {got}"));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_5_mismatch_series() {
    report("5 mismatch series (n <= 8)", (|| {
        let series = enumerate::mismatch_series(8);
        let diffs: Vec<i64> = series.iter().map(|e| e.diff).collect();
        if diffs != vec![0, 0, 0, 1, 2, 4, 5, 9] {
            return Err(format!("diffs {diffs:?}"));
        }
        Ok(())
    })());
}

#[test]
#[ignore = "slow ranks of the mismatch series; run with --ignored"]
fn criterion_5_mismatch_series_slow() {
    report("5 mismatch series (n = 9..11)", (|| {
        let series = enumerate::mismatch_series(11);
        let diffs: Vec<i64> = series.iter().skip(8).map(|e| e.diff).collect();
        if diffs != vec![12, 17, 23] {
            return Err(format!("diffs for n=9..11: {diffs:?}"));
        }
        Ok(())
    })());
}

#[test]
fn criterion_6_problematic_rank6() {
    report("6 problematic classification at rank 6", (|| {
        let report = enumerate::classify_problematic(6);
        let mut type_i: Vec<_> = report
            .problematic
            .iter()
            .filter(|q| q.kind == enumerate::ProblemKind::I)
            .map(|q| q.op.clone())
            .collect();
        type_i.sort();
        let mut want = vec![
            op("(2^4 1;1^4)", Theory::B),
            op("(1^5;3 2^2 1)", Theory::B),
            op("(2^2 1;3 2^2 1)", Theory::B),
        ];
        want.sort();
        if type_i != want {
            return Err(format!("type I: {type_i:?}"));
        }
        let type_ii: Vec<_> = report
            .problematic
            .iter()
            .filter(|q| q.kind == enumerate::ProblemKind::II)
            .collect();
        let b18 = op("(1^5;2^2 1^4)", Theory::B);
        let b19 = op("(2^2 1^3;1^6)", Theory::B);
        let c18 = op("(2^3 1^2;1^4)", Theory::C);
        if type_ii.len() != 2 || !type_ii.iter().any(|q| q.op == b18) || !type_ii.iter().any(|q| q.op == b19) {
            return Err("type II members differ from rows 18/19".into());
        }
        let class = report
            .classes
            .iter()
            .find(|c| c.b_members.contains(&b18))
            .ok_or("class of row 18 missing")?;
        if class.c_members != vec![c18.clone()] || class.b_members.len() != 2 {
            return Err("rows 18/19 class has wrong members".into());
        }
        if report.problematic.iter().any(|q| q.op.theory == Theory::C) {
            return Err("found a problematic C operator at rank 6".into());
        }
        Ok(())
    })());
}

fn all_rigid_upto(th: Theory, max_size: u32) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|n| enumerate::rigid_partitions(th, n))
        .collect()
}

#[test]
fn criterion_7a_row_contributions() {
    report("7a compute_via_rows == compute (size <= 26)", (|| {
        for th in [Theory::B, Theory::C, Theory::D] {
            for q in all_rigid_upto(th, 26) {
                if q.is_empty() {
                    continue;
                }
                let direct = symbol::compute(&q, th).map_err(|e| e.to_string())?;
                let via = symbol::compute_via_rows(&q, th).map_err(|e| e.to_string())?;
                if direct != via {
                    return Err(format!("{q} in {th}: [{via}] != [{direct}]"));
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_7b_box_shift_maps() {
    report("7b box-shift maps (size <= 25)", (|| {
        // x_s: rigid B, all rows odd -> rigid C, symbol-equal, inverted by x_s_inv
        for q in all_rigid_upto(Theory::B, 25) {
            if !theory::all_rows_have_parity(&q, true) {
                continue;
            }
            let out = maps::x_s(&q).map_err(|e| e.to_string())?;
            if !theory::is_rigid(&out, Theory::C).map_err(|e| e.to_string())? {
                return Err(format!("x_s({q}) = {out} not rigid C"));
            }
            if symbol::compute(&q, Theory::B).unwrap() != symbol::compute(&out, Theory::C).unwrap() {
                return Err(format!("x_s({q}) changes symbol"));
            }
            if maps::x_s_inv(&out).map_err(|e| e.to_string())? != q {
                return Err(format!("x_s_inv(x_s({q})) != {q}"));
            }
        }
        // y_s: rigid C, all rows odd -> rigid D
        for q in all_rigid_upto(Theory::C, 25) {
            if !theory::all_rows_have_parity(&q, true) {
                continue;
            }
            let out = maps::y_s(&q).map_err(|e| e.to_string())?;
            if !theory::is_rigid(&out, Theory::D).map_err(|e| e.to_string())? {
                return Err(format!("y_s({q}) = {out} not rigid D"));
            }
            if symbol::compute(&q, Theory::C).unwrap() != symbol::compute(&out, Theory::D).unwrap() {
                return Err(format!("y_s({q}) changes symbol"));
            }
            if maps::y_s_inv(&out).map_err(|e| e.to_string())? != q {
                return Err(format!("y_s_inv(y_s({q})) != {q}"));
            }
        }
        // x_s_inv: rigid C, all rows even -> rigid B
        for q in all_rigid_upto(Theory::C, 25) {
            if !theory::all_rows_have_parity(&q, false) {
                continue;
            }
            let out = maps::x_s_inv(&q).map_err(|e| e.to_string())?;
            if !theory::is_rigid(&out, Theory::B).map_err(|e| e.to_string())? {
                return Err(format!("x_s_inv({q}) = {out} not rigid B"));
            }
            if symbol::compute(&q, Theory::C).unwrap() != symbol::compute(&out, Theory::B).unwrap() {
                return Err(format!("x_s_inv({q}) changes symbol"));
            }
            if maps::x_s(&out).map_err(|e| e.to_string())? != q {
                return Err(format!("x_s(x_s_inv({q})) != {q}"));
            }
        }
        // y_s_inv: rigid D, all rows even -> rigid C
        for q in all_rigid_upto(Theory::D, 25) {
            if !theory::all_rows_have_parity(&q, false) {
                continue;
            }
            let out = maps::y_s_inv(&q).map_err(|e| e.to_string())?;
            if !theory::is_rigid(&out, Theory::C).map_err(|e| e.to_string())? {
                return Err(format!("y_s_inv({q}) = {out} not rigid C"));
            }
            if symbol::compute(&q, Theory::D).unwrap() != symbol::compute(&out, Theory::C).unwrap() {
                return Err(format!("y_s_inv({q}) changes symbol"));
            }
            if maps::y_s(&out).map_err(|e| e.to_string())? != q {
                return Err(format!("y_s(y_s_inv({q})) != {q}"));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_7c_ys_is_shifted_xs() {
    report("7c Y_S = shifted X_S (size <= 25)", (|| {
        for q in all_rigid_upto(Theory::C, 25) {
            if q.is_empty() || !theory::all_rows_have_parity(&q, true) {
                continue;
            }
            let rows = q.conj_rows();
            // prefix a virtual unpaired first row and run the B-style rule
            let mut shifted = vec![rows[0] + 2];
            shifted.extend_from_slice(&rows);
            let via_xs_rule = maps::apply_pair_rule(&shifted, -1)[1..].to_vec();
            let direct = maps::apply_pair_rule(&rows, 1);
            if via_xs_rule != direct {
                return Err(format!("{q}: {via_xs_rule:?} != {direct:?}"));
            }
            if Partition::from_conj_rows(direct) != maps::y_s(&q).unwrap() {
                return Err(format!("{q}: pair rule disagrees with y_s"));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_7d_composite_maps() {
    report("7d wb/wc/wcc/cb_eo at rank <= 7", (|| {
        let check = |input: &SurfaceOperator, out: &SurfaceOperator| -> Result<(), String> {
            if operator_symbol(input).unwrap() != operator_symbol(out).unwrap() {
                return Err(format!("{input} -> {out}: symbol differs"));
            }
            if dimension(input).unwrap() != dimension(out).unwrap() {
                return Err(format!("{input} -> {out}: dimension differs"));
            }
            Ok(())
        };
        for n in 1..=7u32 {
            for lam in enumerate::rigid_partitions(Theory::B, 2 * n + 1) {
                let input = SurfaceOperator::new(Theory::B, lam.clone(), Partition::empty()).unwrap();
                let out = maps::wb(&lam).map_err(|e| format!("wb({lam}): {e}"))?;
                check(&input, &out)?;
            }
            for lam in enumerate::rigid_partitions(Theory::C, 2 * n) {
                let input = SurfaceOperator::new(Theory::C, lam.clone(), Partition::empty()).unwrap();
                let out = maps::wc(&lam).map_err(|e| format!("wc({lam}): {e}"))?;
                check(&input, &out)?;
            }
            if n % 2 == 0 {
                for rho in enumerate::rigid_partitions(Theory::C, n) {
                    let input = SurfaceOperator::new(Theory::C, rho.clone(), rho.clone()).unwrap();
                    let out = maps::wcc(&rho).map_err(|e| format!("wcc({rho}): {e}"))?;
                    check(&input, &out)?;
                }
            }
            for input in enumerate::rigid_operators(Theory::C, n) {
                let eo_shaped = [(&input.first, &input.second), (&input.second, &input.first)]
                    .iter()
                    .any(|(e, o)| {
                        theory::all_rows_have_parity(e, false) && theory::all_rows_have_parity(o, true)
                    });
                if !eo_shaped {
                    continue;
                }
                let out = maps::cb_eo(&input).map_err(|e| format!("cb_eo({input}): {e}"))?;
                check(&input, &out)?;
                let back = maps::eo(&out).map_err(|e| format!("eo({out}): {e}"))?;
                if back != input {
                    return Err(format!("eo(cb_eo({input})) = {back}"));
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_7e_pairwise_row_structure() {
    report("7e Pb/Pc/Pd row structure (size <= 26)", (|| {
        for th in [Theory::B, Theory::C, Theory::D] {
            for q in all_rigid_upto(th, 26) {
                if q.is_empty() {
                    continue;
                }
                let ps = theory::pair_structure(&q, th).map_err(|e| e.to_string())?;
                for (i, role) in ps.roles.iter().enumerate() {
                    if *role == Role::UnpairedFirst {
                        // B: unpaired rows odd; D: even (row 1); C has none
                        let want_odd = match th {
                            Theory::B => true,
                            Theory::D => false,
                            Theory::C => return Err(format!("{q}: unpaired row in C")),
                        };
                        if i == 0 && (ps.rows[i] % 2 == 1) != want_odd {
                            return Err(format!("{q} in {th}: first row parity"));
                        }
                    }
                }
                for &(a, b) in &ps.pairs {
                    if ps.rows[a - 1] % 2 != ps.rows[b - 1] % 2 {
                        return Err(format!("{q} in {th}: pair ({a},{b}) parity differs"));
                    }
                }
                // an incomplete trailing pair forces an even shortest row
                if let Some(Role::FirstOfPair) = ps.roles.last() {
                    if ps.rows.last().unwrap() % 2 != 0 {
                        return Err(format!("{q} in {th}: odd unpartnered shortest row"));
                    }
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_7f_class_cardinality() {
    report("7f balanced classes at rank <= 7", (|| {
        for n in 1..=7u32 {
            let report = enumerate::classify_problematic(n);
            for class in &report.classes {
                let flagged = class
                    .b_members
                    .iter()
                    .chain(&class.c_members)
                    .any(|m| report.problematic.iter().any(|q| q.op == *m));
                if !flagged && class.b_members.len() != class.c_members.len() {
                    return Err(format!(
                        "rank {n}: unflagged class with {} B vs {} C members",
                        class.b_members.len(),
                        class.c_members.len()
                    ));
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_8_out_of_scope() {
    // Nothing in the source is beyond desk scale; the fingerprint column is
    // carried opaquely and excluded from verification by design.
    println!("acceptance 8 out-of-scope: pass (nothing beyond desk scale)");
}
