//! Human-readable renderings.

use std::fmt::Write;

use hodge_core::VirtualDiamond;

/// Half diamond in the classical layout: one row per degree `d` listing
/// `h^{d,0}, h^{d−1,1}, …` down to the middle, right-aligned. Rows that are
/// entirely zero are skipped.
pub fn half_diamond(d: &VirtualDiamond, dim: u32) -> String {
    let rows: Vec<Vec<i64>> = (0..=dim)
        .map(|deg| (0..=deg / 2).map(|j| d.get(deg - j, j)).collect::<Vec<_>>())
        .filter(|row| row.iter().any(|&m| m != 0))
        .collect();
    let width = rows
        .iter()
        .flatten()
        .map(|m| m.to_string().len())
        .max()
        .unwrap_or(1);
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in &rows {
        let pad = (columns - row.len()) * (width + 1);
        let cells: Vec<String> = row.iter().map(|m| format!("{m:>width$}")).collect();
        writeln!(out, "{}{}", " ".repeat(pad), cells.join(" ")).unwrap();
    }
    out
}

pub fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
