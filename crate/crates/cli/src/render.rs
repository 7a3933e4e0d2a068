//! Text, JSON and b-file rendering of coefficient tables.

use std::fmt::Write;

use num_bigint::BigInt;
use seb_core::families::{build_little_p_family, build_p_family, build_q_family};
use seb_core::series::build_r;
use seb_core::{EulerianTables, Family};

use crate::{Format, TableFamily};

pub fn family_name(family: TableFamily) -> &'static str {
    match family {
        TableFamily::A => "A",
        TableFamily::B => "B",
        TableFamily::BigB => "bigB",
        TableFamily::LittleB => "littleB",
        TableFamily::BigP => "P",
        TableFamily::Q => "Q",
        TableFamily::R => "R",
        TableFamily::LittleP => "p",
    }
}

fn padded(coeffs: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut row = coeffs.to_vec();
    row.resize(len, BigInt::default());
    row
}

/// Rows of the table at order `n`, exactly as printed.
pub fn table_rows(family: TableFamily, n: usize, tables: &EulerianTables) -> Vec<Vec<BigInt>> {
    let single = |f: Family| -> Vec<Vec<BigInt>> {
        (0..=n).map(|m| tables.table(f, m).as_row().into_iter().map(BigInt::from).collect()).collect()
    };
    let double = |f: Family| -> Vec<Vec<BigInt>> {
        tables.table(f, n).rows().iter().map(|r| r.iter().cloned().map(BigInt::from).collect()).collect()
    };
    match family {
        TableFamily::A => single(Family::A),
        TableFamily::B => single(Family::B),
        TableFamily::BigB => double(Family::BigB),
        TableFamily::LittleB => double(Family::LittleB),
        TableFamily::BigP => build_p_family::<BigInt>(n).iter().map(|p| padded(p.coeffs(), n + 1)).collect(),
        TableFamily::Q => build_q_family::<BigInt>(n).iter().map(|q| padded(q.coeffs(), n + 1)).collect(),
        TableFamily::LittleP => build_little_p_family::<BigInt>(n).iter().map(|p| padded(p.coeffs(), n + 1)).collect(),
        TableFamily::R => {
            let r = build_r::<BigInt>(n);
            (0..=n).map(|k| (0..=n).map(|j| r.coeff(k, j)).collect()).collect()
        }
    }
}

pub fn render_table(family: TableFamily, n: usize, format: Format) -> String {
    let tables = EulerianTables::new(n);
    match format {
        Format::Tsv => {
            let mut out = String::new();
            for row in table_rows(family, n, &tables) {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{}", cells.join("\t")).expect("write to string");
            }
            out
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = table_rows(family, n, &tables)
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect();
            let value = serde_json::json!({ "family": family_name(family), "n": n, "rows": rows });
            format!("{}\n", serde_json::to_string(&value).expect("serializable"))
        }
        Format::OeisBfile => {
            let mut out = String::new();
            let mut index = 0usize;
            // Single-statistic triangles already span orders 0..=n.
            let orders: Vec<usize> = match family {
                TableFamily::A | TableFamily::B => vec![n],
                _ => (0..=n).collect(),
            };
            for m in orders {
                for row in table_rows(family, m, &tables) {
                    for v in row {
                        writeln!(out, "{index} {v}").expect("write to string");
                        index += 1;
                    }
                }
            }
            out
        }
    }
}
