//! Bundled reference tables for the two-parameter colored partition
//! congruences p_{k,j}(ℓn + δ) ≡ 0 (mod ℓ), ℓ ∈ {5, 7}.
//!
//! The tables are indexed by (k mod ℓ, j mod ℓ) and list the admissible δ
//! values; an empty list means no congruence exists for that cell. They are
//! a transcription of published results, kept as data so an empirical scan
//! (`congruences::scan_pkj_congruences`) can be diffed against them
//! cell-for-cell rather than trusted silently.

/// δ values for p_{k,j}(5n + δ) ≡ 0 (mod 5), indexed `[k mod 5][j mod 5]`.
pub const PKJ_TABLE_5: [[&[u64]; 5]; 5] = [
    [&[], &[3], &[1, 3, 4], &[], &[1, 3]],
    [&[4], &[], &[], &[2, 4], &[]],
    [&[2, 3, 4], &[], &[4], &[], &[]],
    [&[], &[2, 3], &[], &[], &[]],
    [&[3, 4], &[], &[], &[], &[]],
];

/// δ values for p_{k,j}(7n + δ) ≡ 0 (mod 7), indexed `[k mod 7][j mod 7]`.
pub const PKJ_TABLE_7: [[&[u64]; 7]; 7] = [
    [&[], &[3], &[], &[], &[1, 3, 4, 5], &[], &[1, 5, 6]],
    [&[5], &[], &[4], &[], &[], &[2, 4, 5], &[]],
    [&[], &[6], &[2, 3, 4, 6], &[], &[], &[], &[]],
    [&[], &[], &[], &[], &[], &[2], &[]],
    [&[2, 4, 5, 6], &[], &[], &[], &[4], &[], &[]],
    [&[], &[3, 5, 6], &[], &[6], &[], &[5], &[]],
    [&[3, 4, 6], &[], &[], &[], &[], &[], &[]],
];

/// The bundled table for modulus ell, as owned δ sets; `None` if the
/// modulus has no bundled table.
pub fn bundled_pkj_table(ell: u64) -> Option<Vec<Vec<Vec<u64>>>> {
    fn own<const N: usize>(t: &[[&[u64]; N]; N]) -> Vec<Vec<Vec<u64>>> {
        t.iter()
            .map(|row| row.iter().map(|cell| cell.to_vec()).collect())
            .collect()
    }
    match ell {
        5 => Some(own(&PKJ_TABLE_5)),
        7 => Some(own(&PKJ_TABLE_7)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shapes_and_delta_ranges() {
        for (ell, table) in [(5u64, bundled_pkj_table(5).unwrap()), (7, bundled_pkj_table(7).unwrap())] {
            assert_eq!(table.len(), ell as usize);
            for row in &table {
                assert_eq!(row.len(), ell as usize);
                for cell in row {
                    for &d in cell {
                        assert!((1..ell).contains(&d));
                    }
                    assert!(cell.windows(2).all(|w| w[0] < w[1]), "cells sorted");
                }
            }
        }
        assert!(bundled_pkj_table(11).is_none());
    }
}
