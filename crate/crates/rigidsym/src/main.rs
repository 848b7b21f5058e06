use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rigidsym::{
    dimension, enumerate, fixture, maps,
    operator::SurfaceOperator,
    partition::Partition,
    symbol::{self, operator_symbol, Symbol},
    theory::{self, Theory},
    Error,
};

const SCHEMA: &str = "rigidsym/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "rigidsym", version, about = "Symbol invariants and S-duality maps of rigid surface operators")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check validity and rigidity of a partition in a theory
    Validate {
        partition: String,
        #[arg(long)]
        theory: String,
    },
    /// Symbol of a partition or of an operator pair "(first;second)"
    Symbol {
        input: String,
        #[arg(long)]
        theory: String,
        #[arg(long)]
        rank: Option<u32>,
    },
    /// Dimension of a rigid surface operator
    Dim {
        input: String,
        #[arg(long)]
        theory: String,
        #[arg(long)]
        rank: Option<u32>,
    },
    /// Apply a duality map (xs, xs-inv, ys, ys-inv, wb, wc, wcc, cbeo, eo, transfer)
    Map {
        name: String,
        input: String,
        #[arg(long)]
        theory: Option<String>,
        #[arg(long)]
        rank: Option<u32>,
    },
    /// List rigid operators (default) or rigid partitions of a rank
    Enumerate {
        #[arg(long)]
        theory: String,
        #[arg(long)]
        rank: u32,
        /// list operator pairs (the default)
        #[arg(long)]
        pairs: bool,
        /// list the rigid partitions of the rank's box count instead
        #[arg(long, conflicts_with = "pairs")]
        partitions: bool,
    },
    /// Symbol-matched duals of an operator in the dual theory
    Dual {
        input: String,
        #[arg(long)]
        theory: String,
        #[arg(long)]
        rank: Option<u32>,
    },
    /// B/C operator counts and differences per rank
    Mismatch {
        #[arg(long)]
        max_rank: u32,
    },
    /// Symbol classes and problematic operators of one rank
    Classify {
        #[arg(long)]
        rank: u32,
    },
    /// Recompute the SO(13)/Sp(12) reference table and diff it
    VerifyAppendix {
        /// restrict to one table row
        #[arg(long)]
        row: Option<u32>,
    },
}

fn parse_theory(text: &str) -> Result<Theory, Error> {
    text.parse()
}

fn check_rank(op: &SurfaceOperator, rank: Option<u32>) -> Result<(), Error> {
    match rank {
        Some(r) if r != op.rank => Err(Error::domain(format!(
            "operator {op} has rank {}, expected {r}",
            op.rank
        ))),
        _ => Ok(()),
    }
}

fn symbol_json(s: &Symbol) -> serde_json::Value {
    json!({"top": s.top, "bottom": s.bottom})
}

fn emit(format: Format, text_lines: Vec<String>, jsonv: serde_json::Value, csv_lines: Vec<String>) {
    match format {
        Format::Text => {
            for line in text_lines {
                println!("{line}");
            }
        }
        Format::Json => {
            let mut obj = jsonv;
            if let Some(map) = obj.as_object_mut() {
                map.insert("schema".into(), json!(SCHEMA));
            }
            println!("{}", serde_json::to_string_pretty(&obj).expect("serializable"));
        }
        Format::Csv => {
            for line in csv_lines {
                println!("{line}");
            }
        }
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let format = cli.format;
    match cli.cmd {
        Cmd::Validate { partition, theory } => {
            let th = parse_theory(&theory)?;
            let p = Partition::parse(&partition)?;
            let valid = theory::is_valid(&p, th);
            let (rigid, detail) = if valid {
                match theory::rigidity_violation(&p, th) {
                    None => (true, String::new()),
                    Some(v) => (false, v),
                }
            } else {
                (false, format!("not a valid {th} partition"))
            };
            let verdict = if !valid {
                format!("{p}: {detail}")
            } else if rigid {
                format!("{p}: valid {th} partition, rigid")
            } else {
                format!("{p}: valid {th} partition, not rigid ({detail})")
            };
            emit(
                format,
                vec![verdict],
                json!({"command": "validate", "partition": p.to_string(), "theory": th.to_string(),
                       "valid": valid, "rigid": rigid, "violation": if detail.is_empty() { None } else { Some(detail.clone()) }}),
                vec![
                    "partition,theory,valid,rigid,violation".into(),
                    format!("{p},{th},{valid},{rigid},{detail}"),
                ],
            );
            Ok(0)
        }
        Cmd::Symbol { input, theory, rank } => {
            let th = parse_theory(&theory)?;
            let (desc, sym) = if input.trim_start().starts_with('(') {
                let op = SurfaceOperator::parse(&input, th)?;
                check_rank(&op, rank)?;
                (op.to_string(), operator_symbol(&op)?)
            } else {
                let p = Partition::parse(&input)?;
                (format!("{p} ({th})"), symbol::compute(&p, th)?)
            };
            emit(
                format,
                vec![format!("{sym}")],
                json!({"command": "symbol", "input": desc, "symbol": symbol_json(&sym)}),
                vec![
                    "input,symbol_top,symbol_bottom".into(),
                    format!(
                        "\"{desc}\",{},{}",
                        join_row(&sym.top),
                        join_row(&sym.bottom)
                    ),
                ],
            );
            Ok(0)
        }
        Cmd::Dim { input, theory, rank } => {
            let th = parse_theory(&theory)?;
            let op = SurfaceOperator::parse(&input, th)?;
            check_rank(&op, rank)?;
            let d = dimension(&op)?;
            emit(
                format,
                vec![format!("{d}")],
                json!({"command": "dim", "operator": op.to_string(), "dimension": d}),
                vec!["operator,dimension".into(), format!("\"{op}\",{d}")],
            );
            Ok(0)
        }
        Cmd::Map { name, input, theory, rank } => cmd_map(format, &name, &input, theory.as_deref(), rank),
        Cmd::Enumerate { theory, rank, partitions, .. } => {
            let th = parse_theory(&theory)?;
            if partitions {
                let boxes = match th {
                    Theory::B => 2 * rank + 1,
                    _ => 2 * rank,
                };
                let list = enumerate::rigid_partitions(th, boxes);
                let lines: Vec<String> = list.iter().map(|p| p.to_string()).collect();
                emit(
                    format,
                    lines.clone(),
                    json!({"command": "enumerate", "theory": th.to_string(), "rank": rank,
                           "partitions": lines}),
                    std::iter::once("partition".to_string())
                        .chain(lines.iter().map(|l| format!("\"{l}\"")))
                        .collect(),
                );
            } else {
                let ops = enumerate::rigid_operators(th, rank);
                let lines: Vec<String> = ops.iter().map(|o| o.to_string()).collect();
                emit(
                    format,
                    lines.clone(),
                    json!({"command": "enumerate", "theory": th.to_string(), "rank": rank,
                           "operators": ops.iter().map(|o| json!({
                               "first": o.first.to_string(), "second": o.second.to_string()
                           })).collect::<Vec<_>>()}),
                    std::iter::once("first,second".to_string())
                        .chain(ops.iter().map(|o| format!("\"{}\",\"{}\"", o.first, o.second)))
                        .collect(),
                );
            }
            Ok(0)
        }
        Cmd::Dual { input, theory, rank } => {
            let th = parse_theory(&theory)?;
            let op = SurfaceOperator::parse(&input, th)?;
            check_rank(&op, rank)?;
            let duals = enumerate::find_duals(&op);
            let lines: Vec<String> = duals.iter().map(|o| o.to_string()).collect();
            emit(
                format,
                if lines.is_empty() {
                    vec![format!("{op}: no symbol-matched dual")]
                } else {
                    lines.clone()
                },
                json!({"command": "dual", "operator": op.to_string(), "duals": lines}),
                std::iter::once("dual".to_string())
                    .chain(lines.iter().map(|l| format!("\"{l}\"")))
                    .collect(),
            );
            Ok(0)
        }
        Cmd::Mismatch { max_rank } => {
            let series = enumerate::mismatch_series(max_rank);
            let text: Vec<String> = series
                .iter()
                .map(|e| format!("n={} n_b={} n_c={} diff={}", e.rank, e.n_b, e.n_c, e.diff))
                .collect();
            emit(
                format,
                text,
                json!({"command": "mismatch", "series": series.iter().map(|e| json!({
                    "rank": e.rank, "n_b": e.n_b, "n_c": e.n_c, "diff": e.diff
                })).collect::<Vec<_>>()}),
                std::iter::once("rank,n_b,n_c,diff".to_string())
                    .chain(series.iter().map(|e| format!("{},{},{},{}", e.rank, e.n_b, e.n_c, e.diff)))
                    .collect(),
            );
            Ok(0)
        }
        Cmd::Classify { rank } => {
            let report = enumerate::classify_problematic(rank);
            let mut text = vec![format!(
                "rank {}: {} B operators, {} C operators, {} symbol classes",
                report.rank,
                report.n_b,
                report.n_c,
                report.classes.len()
            )];
            for q in &report.problematic {
                let tag = q
                    .structural
                    .map(|t| t.to_string())
                    .unwrap_or_else(|| "-".into());
                text.push(format!(
                    "type {:?}: {} [structural {tag}, {}]",
                    q.kind,
                    q.op,
                    if q.agree { "agrees" } else { "disagrees" }
                ));
            }
            emit(
                format,
                text,
                json!({"command": "classify", "rank": rank, "n_b": report.n_b, "n_c": report.n_c,
                       "classes": report.classes.len(),
                       "problematic": report.problematic.iter().map(|q| json!({
                           "operator": q.op.to_string(),
                           "kind": format!("{:?}", q.kind),
                           "structural": q.structural.map(|t| t.to_string()),
                           "agree": q.agree,
                       })).collect::<Vec<_>>()}),
                std::iter::once("operator,kind,structural,agree".to_string())
                    .chain(report.problematic.iter().map(|q| {
                        format!(
                            "\"{}\",{:?},{},{}",
                            q.op,
                            q.kind,
                            q.structural.map(|t| t.to_string()).unwrap_or_else(|| "-".into()),
                            q.agree
                        )
                    }))
                    .collect(),
            );
            Ok(0)
        }
        Cmd::VerifyAppendix { row } => {
            let rows = fixture::load()?;
            if let Some(n) = row {
                if !rows.iter().any(|r| r.num == n) {
                    return Err(Error::domain(format!("no table row {n}")));
                }
            }
            // census/pairing checks need the whole table, so verification
            // always runs on all rows; --row only narrows the per-row output
            let report = fixture::verify(&rows);
            let mut text = Vec::new();
            for r in rows.iter().filter(|r| row.is_none_or(|n| r.num == n)) {
                let rec = fixture::reconstruct_pairing(r)
                    .map(|(name, ok)| format!(", {name} {}", if ok { "ok" } else { "FAIL" }))
                    .unwrap_or_default();
                let bad = report.diffs.iter().any(|d| d.starts_with(&format!("row {} ", r.num)) || d.starts_with(&format!("row {}:", r.num)));
                text.push(format!(
                    "row {:>2}: {} [{}]{rec}",
                    r.num,
                    if bad { "FAIL" } else { "pass" },
                    r.fingerprint
                ));
            }
            text.push(format!(
                "{}/{} dims, {}/{} symbols, census {}, pairing {} (unmatched rows: {:?})",
                report.dims_ok,
                report.rows,
                report.symbols_ok,
                report.rows,
                if report.census_ok { "ok" } else { "FAIL" },
                if report.pairing_ok { "ok" } else { "FAIL" },
                report.unmatched
            ));
            text.extend(report.diffs.iter().map(|d| format!("diff: {d}")));
            emit(
                format,
                text,
                json!({"command": "verify-appendix", "rows": report.rows,
                       "dims_ok": report.dims_ok, "symbols_ok": report.symbols_ok,
                       "census_ok": report.census_ok, "pairing_ok": report.pairing_ok,
                       "unmatched": report.unmatched, "diffs": report.diffs}),
                std::iter::once("check,result".to_string())
                    .chain([
                        format!("dims,{}/{}", report.dims_ok, report.rows),
                        format!("symbols,{}/{}", report.symbols_ok, report.rows),
                        format!("census,{}", report.census_ok),
                        format!("pairing,{}", report.pairing_ok),
                    ])
                    .collect(),
            );
            Ok(if report.pass() { 0 } else { 1 })
        }
    }
}

fn join_row(row: &[u32]) -> String {
    row.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_map(
    format: Format,
    name: &str,
    input: &str,
    theory: Option<&str>,
    rank: Option<u32>,
) -> Result<i32, Error> {
    let th = theory.map(parse_theory).transpose()?;
    // partition-level box-shifting maps
    if let Some((f, from, to)) = match name {
        "xs" => Some((maps::x_s as fn(&Partition) -> Result<Partition, Error>, Theory::B, Theory::C)),
        "xs-inv" => Some((maps::x_s_inv as fn(&Partition) -> _, Theory::C, Theory::B)),
        "ys" => Some((maps::y_s as fn(&Partition) -> _, Theory::C, Theory::D)),
        "ys-inv" => Some((maps::y_s_inv as fn(&Partition) -> _, Theory::D, Theory::C)),
        _ => None,
    } {
        let p = Partition::parse(input)?;
        let out = f(&p)?;
        let preserved = symbol::compute(&p, from)? == symbol::compute(&out, to)?;
        emit(
            format,
            vec![
                format!("{out}"),
                format!("symbol preserved: {}", if preserved { "yes" } else { "NO" }),
            ],
            json!({"command": "map", "map": name, "input": p.to_string(),
                   "result": out.to_string(), "symbol_preserved": preserved}),
            vec![
                "map,input,result,symbol_preserved".into(),
                format!("{name},\"{p}\",\"{out}\",{preserved}"),
            ],
        );
        return Ok(0);
    }

    // composite maps on unipotent/partition input
    if let Some((f, from)) = match name {
        "wb" => Some((maps::wb as fn(&Partition) -> Result<SurfaceOperator, Error>, Theory::B)),
        "wc" => Some((maps::wc as fn(&Partition) -> _, Theory::C)),
        "wcc" => Some((maps::wcc as fn(&Partition) -> _, Theory::C)),
        _ => None,
    } {
        let p = Partition::parse(input.trim().trim_start_matches('(').split(';').next().unwrap_or(input))?;
        let out = f(&p)?;
        check_rank(&out, rank)?;
        let in_sym = if name == "wcc" {
            let op = SurfaceOperator::new(from, p.clone(), p.clone())?;
            operator_symbol(&op)?
        } else {
            symbol::compute(&p, from)?
        };
        let preserved = in_sym == operator_symbol(&out)?;
        emit(
            format,
            vec![
                format!("{out}"),
                format!("symbol preserved: {}", if preserved { "yes" } else { "NO" }),
            ],
            json!({"command": "map", "map": name, "input": p.to_string(),
                   "result": out.to_string(), "symbol_preserved": preserved}),
            vec![
                "map,input,result,symbol_preserved".into(),
                format!("{name},\"{p}\",\"{out}\",{preserved}"),
            ],
        );
        return Ok(0);
    }

    match name {
        "cbeo" | "eo" => {
            let from = if name == "cbeo" { Theory::C } else { Theory::B };
            let op = SurfaceOperator::parse(input, th.unwrap_or(from))?;
            check_rank(&op, rank)?;
            let out = if name == "cbeo" { maps::cb_eo(&op)? } else { maps::eo(&op)? };
            let preserved = operator_symbol(&op)? == operator_symbol(&out)?;
            emit(
                format,
                vec![
                    format!("{out}"),
                    format!("symbol preserved: {}", if preserved { "yes" } else { "NO" }),
                ],
                json!({"command": "map", "map": name, "input": op.to_string(),
                       "result": out.to_string(), "symbol_preserved": preserved}),
                vec![
                    "map,input,result,symbol_preserved".into(),
                    format!("{name},\"{op}\",\"{out}\",{preserved}"),
                ],
            );
            Ok(0)
        }
        "transfer" => {
            let th = th.ok_or_else(|| Error::parse("map transfer needs --theory B or C"))?;
            let op = SurfaceOperator::parse(input, th)?;
            check_rank(&op, rank)?;
            let out = match th {
                Theory::B => maps::transfer_b_to_c(&op)?,
                Theory::C => maps::transfer_c_to_b(&op)?,
                Theory::D => return Err(Error::domain("transfer applies to B and C operators")),
            };
            let preserved = out
                .operator()
                .ok()
                .and_then(|o| operator_symbol(&o).ok())
                .map(|s| s == operator_symbol(&op).expect("input is rigid"));
            let mut text = vec![format!("{out}"), format!("case: {}", out.case)];
            match preserved {
                Some(p) => text.push(format!("symbol preserved: {}", if p { "yes" } else { "NO" })),
                None => text.push("symbol preserved: n/a (result not rigid)".into()),
            }
            if let Some(v) = &out.violation {
                text.push(format!("rigidity violation: {v}"));
            }
            emit(
                format,
                text,
                json!({"command": "map", "map": "transfer", "input": op.to_string(),
                       "result": format!("({}; {})_{}{}", out.first, out.second, out.theory, out.rank),
                       "case": out.case, "rigidity_ok": out.rigidity_ok,
                       "violation": out.violation, "symbol_preserved": preserved}),
                vec![
                    "map,input,result,case,rigidity_ok,violation".into(),
                    format!(
                        "transfer,\"{op}\",\"({}; {})\",{},{},{}",
                        out.first,
                        out.second,
                        out.case,
                        out.rigidity_ok,
                        out.violation.clone().unwrap_or_default()
                    ),
                ],
            );
            Ok(0)
        }
        other => Err(Error::parse(format!(
            "unknown map `{other}` (expected xs, xs-inv, ys, ys-inv, wb, wc, wcc, cbeo, eo, transfer)"
        ))),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_) => 2,
                Error::Domain(_) => 3,
                Error::Fixture(_) => 1,
            };
            std::process::exit(code);
        }
    }
}
