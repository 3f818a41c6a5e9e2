//! Smith normal form over the integers.
//!
//! Elimination uses unimodular row and column operations, always pivoting on
//! the entry of smallest absolute value in the active block. Arithmetic is
//! checked `i64`; overflow aborts with [`OracleError::Overflow`].

use super::{IntegerMatrix, OracleError};

/// Invariant factors `d_1 | d_2 | ... | d_r` of a matrix together with its
/// rank `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<u64>,
    pub rank: usize,
}

impl SnfResult {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<u64> {
        self.invariant_factors
            .iter()
            .copied()
            .filter(|&d| d > 1)
            .collect()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> Result<SnfResult, OracleError> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut factors = Vec::new();

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_in_block(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);

        loop {
            let pivot = a[(t, t)];
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)] != 0 {
                    let q = a[(i, t)] / pivot;
                    a.add_row_multiple(i, t, -q, t)?;
                    clean &= a[(i, t)] == 0;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)] != 0 {
                    let q = a[(t, j)] / pivot;
                    a.add_col_multiple(j, t, -q, t)?;
                    clean &= a[(t, j)] == 0;
                }
            }

            if !clean {
                // a remainder smaller than the pivot survives in row or column t
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }

            // row and column are clear; enforce d_t | every remaining entry
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| a[(i, j)] % pivot != 0);
            match offender {
                Some((i, _)) => a.add_row_multiple(t, i, 1, t)?,
                None => break,
            }
        }

        factors.push(a[(t, t)].unsigned_abs());
    }

    Ok(SnfResult {
        rank: factors.len(),
        invariant_factors: factors,
    })
}

fn smallest_in_block(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(u64, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a[(i, j)].unsigned_abs();
            if v != 0 && best.is_none_or(|(b, _, _)| v < b) {
                best = Some((v, i, j));
                if v == 1 {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn smallest_in_cross(a: &IntegerMatrix, t: usize) -> (usize, usize) {
    let column = (t..a.rows()).map(|i| (i, t));
    let row = (t + 1..a.cols()).map(|j| (t, j));
    column
        .chain(row)
        .filter(|&(i, j)| a[(i, j)] != 0)
        .min_by_key(|&(i, j)| a[(i, j)].unsigned_abs())
        .expect("pivot is nonzero")
}
