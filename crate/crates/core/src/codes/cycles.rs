//! Length-4 cycles in the Tanner graph of a check matrix.

use serde::{Deserialize, Serialize};

use crate::linalg::FieldMatrix;

/// Summary of the 4-cycles of a check matrix: a 4-cycle is a pair of rows
/// and a pair of columns whose four entries are all nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourCycleReport {
    pub rows: usize,
    pub cols: usize,
    pub cycles: u64,
    /// Smallest `|r1 - r2|` over the row pairs of all cycles.
    pub min_row_gap: Option<usize>,
    /// Smallest `|c1 - c2|` over the column pairs of all cycles.
    pub min_col_gap: Option<usize>,
    pub max_row_weight: usize,
    pub max_col_weight: usize,
    pub stretch: usize,
    /// Every cycle spans rows at least `stretch` apart.
    pub separated: bool,
}

pub fn four_cycle_report(h: &FieldMatrix, stretch: usize) -> FourCycleReport {
    let rows = h.rows();
    let cols = h.cols();
    let words = cols.div_ceil(64);
    let support: Vec<Vec<u64>> = (0..rows)
        .map(|r| {
            let mut bits = vec![0u64; words];
            for c in h.row_support(r) {
                bits[c / 64] |= 1 << (c % 64);
            }
            bits
        })
        .collect();
    let mut cycles = 0u64;
    let mut min_row_gap: Option<usize> = None;
    let mut min_col_gap: Option<usize> = None;
    for r1 in 0..rows {
        for r2 in r1 + 1..rows {
            let shared: Vec<u64> = support[r1].iter().zip(&support[r2]).map(|(a, b)| a & b).collect();
            let s: u64 = shared.iter().map(|w| w.count_ones() as u64).sum();
            if s < 2 {
                continue;
            }
            cycles += s * (s - 1) / 2;
            min_row_gap = Some(min_row_gap.map_or(r2 - r1, |g| g.min(r2 - r1)));
            let mut prev: Option<usize> = None;
            for (w, &bits) in shared.iter().enumerate() {
                let mut b = bits;
                while b != 0 {
                    let c = w * 64 + b.trailing_zeros() as usize;
                    b &= b - 1;
                    if let Some(p) = prev {
                        min_col_gap = Some(min_col_gap.map_or(c - p, |g| g.min(c - p)));
                    }
                    prev = Some(c);
                }
            }
        }
    }
    FourCycleReport {
        rows,
        cols,
        cycles,
        min_row_gap,
        min_col_gap,
        max_row_weight: (0..rows).map(|r| h.row_weight(r)).max().unwrap_or(0),
        max_col_weight: (0..cols).map(|c| h.column_weight(c)).max().unwrap_or(0),
        stretch,
        separated: min_row_gap.map_or(true, |g| g >= stretch),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldElement, FieldSpec};
    use std::sync::Arc;

    fn matrix(rows: &[&[u8]]) -> FieldMatrix {
        let rows: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.iter().map(|&b| FieldElement(b as u16)).collect())
            .collect();
        FieldMatrix::from_rows(Arc::new(FieldSpec::gf2()), &rows).unwrap()
    }

    #[test]
    fn identity_has_no_cycles() {
        let h = FieldMatrix::identity(Arc::new(FieldSpec::gf2()), 6);
        let r = four_cycle_report(&h, 1);
        assert_eq!((r.cycles, r.min_row_gap), (0, None));
        assert!(r.separated);
    }

    #[test]
    fn counts_shared_column_pairs() {
        // rows 0 and 2 share three columns: three 4-cycles
        let h = matrix(&[&[1, 1, 1, 0], &[1, 0, 0, 1], &[1, 1, 1, 1]]);
        let r = four_cycle_report(&h, 2);
        // (0,2): 3 shared -> 3; (1,2): 2 shared -> 1; (0,1): 1 shared -> 0
        assert_eq!(r.cycles, 4);
        assert_eq!(r.min_row_gap, Some(1));
        assert_eq!(r.min_col_gap, Some(1));
        assert!(!r.separated);
        assert_eq!((r.max_row_weight, r.max_col_weight), (4, 3));
    }
}
