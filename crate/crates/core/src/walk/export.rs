use std::fmt::Write;

use num_bigint::BigInt;
use serde::Serialize;

pub fn decimal_strings(counts: &[BigInt]) -> Vec<String> {
    counts.iter().map(ToString::to_string).collect()
}

/// `vertex,k,count` lines with a header, vertices in index order.
pub fn profile_csv(rows: &[Vec<BigInt>]) -> String {
    let mut out = String::from("vertex,k,count\n");
    for (v, row) in rows.iter().enumerate() {
        for (k, c) in row.iter().enumerate() {
            writeln!(out, "{v},{k},{c}").expect("writing to a string");
        }
    }
    out
}

/// JSON form of one vertex profile; counts are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileJson {
    pub vertex: usize,
    pub counts: Vec<String>,
}

impl ProfileJson {
    pub fn new(vertex: usize, counts: &[BigInt]) -> Self {
        Self {
            vertex,
            counts: decimal_strings(counts),
        }
    }
}
