use super::OracleError;

/// Cell counts `α_0, ..., α_n` of a finite CW complex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CwSkeleton {
    cell_counts: Vec<u64>,
}

impl CwSkeleton {
    /// The list must be non-empty and its last (top-dimensional) count
    /// positive.
    pub fn new(cell_counts: Vec<u64>) -> Result<Self, OracleError> {
        match cell_counts.last() {
            None => Err(OracleError::EmptySkeleton),
            Some(0) => Err(OracleError::ZeroTopCells {
                dimension: cell_counts.len() - 1,
            }),
            Some(_) => Ok(Self { cell_counts }),
        }
    }

    pub fn cell_counts(&self) -> &[u64] {
        &self.cell_counts
    }

    pub fn dimension(&self) -> usize {
        self.cell_counts.len() - 1
    }

    /// `Σ (-1)^i α_i`, failing only if the sum leaves `i64`.
    pub fn chi_by_cells(&self) -> Result<i64, OracleError> {
        self.cell_counts
            .iter()
            .enumerate()
            .try_fold(0i64, |acc, (i, &a)| {
                let a = i64::try_from(a).map_err(|_| OracleError::Overflow)?;
                let term = if i % 2 == 0 { a } else { -a };
                acc.checked_add(term).ok_or(OracleError::Overflow)
            })
    }
}
