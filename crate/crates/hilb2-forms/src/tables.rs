//! Row emitters for the genus-1 and genus-2 tables.

use serde_json::{json, Value};

use series_core::rat::rat_to_string;
use series_core::Rat;

use crate::bb::BBSquare;
use crate::invariants::{gv1, gv2};
use crate::Hilb2Error;

/// Rows `(bb, a, b)` for every effective square up to `max`.
pub fn table1(max: &Rat) -> Result<Vec<(BBSquare, Rat, Rat)>, Hilb2Error> {
    BBSquare::effective_range(max)
        .into_iter()
        .map(|bb| {
            let c = gv1(bb)?;
            Ok((bb, c.a, c.b))
        })
        .collect()
}

/// Rows `(bb, n2)` for every effective square up to `max`.
pub fn table2(max: &Rat) -> Result<Vec<(BBSquare, Rat)>, Hilb2Error> {
    BBSquare::effective_range(max)
        .into_iter()
        .map(|bb| Ok((bb, gv2(bb)?)))
        .collect()
}

/// One combined record per class square.
pub fn gv_record_json(bb: BBSquare) -> Result<Value, Hilb2Error> {
    let c = gv1(bb)?;
    let n2 = gv2(bb)?;
    Ok(json!({
        "bb": rat_to_string(&bb.value()),
        "a": rat_to_string(&c.a),
        "b": rat_to_string(&c.b),
        "n2": rat_to_string(&n2),
    }))
}

pub fn table1_csv(rows: &[(BBSquare, Rat, Rat)]) -> String {
    let mut out = String::from("bb,a,b\n");
    for (bb, a, b) in rows {
        out.push_str(&format!("{bb},{},{}\n", rat_to_string(a), rat_to_string(b)));
    }
    out
}

pub fn table1_markdown(rows: &[(BBSquare, Rat, Rat)]) -> String {
    let mut out = String::from("| (b,b) | a | b |\n| --- | --- | --- |\n");
    for (bb, a, b) in rows {
        out.push_str(&format!("| {bb} | {a} | {b} |\n"));
    }
    out
}

pub fn table2_csv(rows: &[(BBSquare, Rat)]) -> String {
    let mut out = String::from("bb,n2\n");
    for (bb, n2) in rows {
        out.push_str(&format!("{bb},{}\n", rat_to_string(n2)));
    }
    out
}

pub fn table2_markdown(rows: &[(BBSquare, Rat)]) -> String {
    let mut out = String::from("| (b,b) | n2 |\n| --- | --- |\n");
    for (bb, n2) in rows {
        out.push_str(&format!("| {bb} | {n2} |\n"));
    }
    out
}
