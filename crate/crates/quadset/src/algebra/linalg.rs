//! Exact rank computation for sparse integer matrices by fraction-free
//! elimination. Rows are kept as ordered column -> coefficient maps and
//! divided by their content after each update.

use num::bigint::BigInt;
use num::{Integer, Signed, Zero};
use std::collections::BTreeMap;

pub type SparseRow = BTreeMap<usize, BigInt>;

fn normalize(row: &mut SparseRow) {
    row.retain(|_, c| !c.is_zero());
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for c in row.values() {
        g = g.gcd(c);
    }
    if g > BigInt::from(1) {
        for c in row.values_mut() {
            *c = &*c / &g;
        }
    }
    if row.values().next().map(|c| c.is_negative()).unwrap_or(false) {
        for c in row.values_mut() {
            *c = -&*c;
        }
    }
}

/// Rank over the rationals of the matrix with the given rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut pivots: Vec<SparseRow> = Vec::new();
    let mut rank = 0usize;
    for mut row in rows {
        normalize(&mut row);
        loop {
            let col = match row.first_key_value() {
                None => break,
                Some((&col, _)) => col,
            };
            let coeff = row[&col].clone();
            let pos = pivots.iter().position(|p| *p.keys().next().unwrap() == col);
            let Some(pos) = pos else {
                pivots.push(row);
                rank += 1;
                break;
            };
            let p = &pivots[pos];
            let pivot_coeff = p.values().next().unwrap().clone();
            // row <- pivot_coeff*row - coeff*pivot
            let mut next: SparseRow = SparseRow::new();
            for (c, v) in &row {
                next.insert(*c, v * &pivot_coeff);
            }
            for (c, v) in p {
                let entry = next.entry(*c).or_insert_with(BigInt::zero);
                *entry -= v * &coeff;
            }
            normalize(&mut next);
            row = next;
        }
    }
    rank
}
