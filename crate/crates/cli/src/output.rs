//! Rendering of series and tables in the four output formats.

use std::fs;
use std::process::ExitCode;

use serde_json::json;

use enumerative_series::LIndexedTable;
use hilb2_forms::tables::{table1_csv, table1_markdown, table2_csv, table2_markdown};
use hilb2_forms::BBSquare;
use series_core::rat::rat_to_string;
use series_core::{QYSeries, Rat};

use crate::{Format, RunConfig};

/// Write the rendered text to the configured destination; trailing newline
/// guaranteed.
pub fn write_out(body: String, config: &RunConfig) -> ExitCode {
    let body = if body.ends_with('\n') { body } else { body + "\n" };
    match &config.out {
        None => {
            print!("{body}");
            ExitCode::SUCCESS
        }
        Some(path) => match fs::write(path, body) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                ExitCode::from(2)
            }
        },
    }
}

/// Print a rational bare when integral (for human-facing tables).
fn bare(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn emit_qy_series(s: &QYSeries, config: &RunConfig) -> ExitCode {
    let v = match s.to_json() {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let coeffs = v["coeffs"].as_array().unwrap();
    let body = match config.format {
        Format::Json => serde_json::to_string(&v).unwrap(),
        Format::Csv => {
            let mut out = String::from("d,k,v\n");
            for c in coeffs {
                out.push_str(&format!(
                    "{},{},{}\n",
                    c["d"],
                    c["k"],
                    c["v"].as_str().unwrap()
                ));
            }
            out
        }
        Format::Md => {
            let mut out = String::from("| d | k | coefficient |\n| - | - | - |\n");
            for c in coeffs {
                let r = series_core::rat::parse_rat(c["v"].as_str().unwrap()).unwrap();
                out.push_str(&format!("| {} | {} | {} |\n", c["d"], c["k"], bare(&r)));
            }
            out
        }
        Format::Text => {
            let mut out = format!("O(q^{})\n", s.trunc());
            for c in coeffs {
                let r = series_core::rat::parse_rat(c["v"].as_str().unwrap()).unwrap();
                out.push_str(&format!("q^{} y^{}: {}\n", c["d"], c["k"], bare(&r)));
            }
            out
        }
    };
    write_out(body, config)
}

pub fn emit_l_table(t: &LIndexedTable, index: &str, value: &str, config: &RunConfig) -> ExitCode {
    let body = match config.format {
        Format::Json => {
            let rows: Vec<_> = t
                .iter()
                .map(|(l, v)| json!({ index: l, "v": rat_to_string(v) }))
                .collect();
            serde_json::to_string(&rows).unwrap()
        }
        Format::Csv => t.to_csv(index),
        Format::Md => t.to_markdown(index, value),
        Format::Text => {
            let mut out = String::new();
            for (l, v) in t.iter() {
                out.push_str(&format!("{l}: {}\n", bare(v)));
            }
            out
        }
    };
    write_out(body, config)
}

pub fn emit_table1(rows: &[(BBSquare, Rat, Rat)], config: &RunConfig) -> ExitCode {
    let body = match config.format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(bb, a, b)| {
                    json!({
                        "bb": bb.to_string(),
                        "a": rat_to_string(a),
                        "b": rat_to_string(b),
                    })
                })
                .collect();
            serde_json::to_string(&rows).unwrap()
        }
        Format::Csv => table1_csv(rows),
        Format::Md => table1_markdown(rows),
        Format::Text => {
            let mut out = String::new();
            for (bb, a, b) in rows {
                out.push_str(&format!("{bb}: a = {}, b = {}\n", bare(a), bare(b)));
            }
            out
        }
    };
    write_out(body, config)
}

pub fn emit_table2(rows: &[(BBSquare, Rat)], config: &RunConfig) -> ExitCode {
    let body = match config.format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(bb, n2)| json!({ "bb": bb.to_string(), "n2": rat_to_string(n2) }))
                .collect();
            serde_json::to_string(&rows).unwrap()
        }
        Format::Csv => table2_csv(rows),
        Format::Md => table2_markdown(rows),
        Format::Text => {
            let mut out = String::new();
            for (bb, n2) in rows {
                out.push_str(&format!("{bb}: {}\n", bare(n2)));
            }
            out
        }
    };
    write_out(body, config)
}

/// Triangular Fujiki table: row `n` lists the constants of `c_0, c_2, ...,
/// c_{2n}`.
pub fn emit_fujiki(rows: &[Vec<Rat>], config: &RunConfig) -> ExitCode {
    let body = match config.format {
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .enumerate()
                .map(|(n, row)| {
                    json!({
                        "n": n,
                        "entries": row.iter().map(rat_to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            serde_json::to_string(&rows).unwrap()
        }
        Format::Csv => {
            let width = rows.len();
            let mut out = String::from("n");
            for j in 0..width {
                out.push_str(&format!(",c{}", 2 * j));
            }
            out.push('\n');
            for (n, row) in rows.iter().enumerate() {
                out.push_str(&n.to_string());
                for v in row {
                    out.push(',');
                    out.push_str(&rat_to_string(v));
                }
                out.push('\n');
            }
            out
        }
        Format::Md => {
            let width = rows.len();
            let mut out = String::from("| n |");
            for j in 0..width {
                out.push_str(&format!(" c{} |", 2 * j));
            }
            out.push('\n');
            out.push_str(&"| - ".repeat(width + 1));
            out.push_str("|\n");
            for (n, row) in rows.iter().enumerate() {
                out.push_str(&format!("| {n} |"));
                for v in row {
                    out.push_str(&format!(" {} |", bare(v)));
                }
                for _ in row.len()..width {
                    out.push_str("  |");
                }
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (n, row) in rows.iter().enumerate() {
                let vals: Vec<String> = row.iter().map(bare).collect();
                out.push_str(&format!("n={n}: {}\n", vals.join(" ")));
            }
            out
        }
    };
    write_out(body, config)
}
