//! Reference tables bundled with the binary, keyed by type.

use ps_algebra::{parse_q, Q};
use ps_arrangements::Tag;
use ps_types::SplittingType;

const ARRANGEMENT: &str = include_str!("../data/arrangement_numbers.tsv");
const INVERSE: &str = include_str!("../data/inverse_arrangement_numbers.tsv");
const MOBIUS: &str = include_str!("../data/mobius.tsv");
const TOP_COLUMN: &str = include_str!("../data/inverse_top_column.tsv");

/// (degree, row τ, column λ, value).
pub type TableEntry = (u32, SplittingType, SplittingType, Q);

fn lines(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).map(|l| l.split('\t').collect())
}

fn ty(s: &str) -> SplittingType {
    s.parse().unwrap_or_else(|e| panic!("bundled fixture has a bad type {s:?}: {e}"))
}

/// Full tables in degrees 2..=5 for a, a⁻¹ and μ.
pub fn table(tag: Tag) -> Vec<TableEntry> {
    let text = match tag {
        Tag::A => ARRANGEMENT,
        Tag::AInv => INVERSE,
        Tag::Mobius => MOBIUS,
        _ => return Vec::new(),
    };
    lines(text)
        .map(|f| (f[0].parse().unwrap(), ty(f[1]), ty(f[2]), parse_q(f[3]).unwrap()))
        .collect()
}

/// Nonzero a⁻¹_{τ,(d)} for d = 6..=10.
pub fn top_column() -> Vec<(u32, SplittingType, Q)> {
    lines(TOP_COLUMN).map(|f| (f[0].parse().unwrap(), ty(f[1]), parse_q(f[2]).unwrap())).collect()
}
