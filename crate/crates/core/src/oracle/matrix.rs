use std::fmt;

use super::OracleError;

/// Dense row-major matrix of exact integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, OracleError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(OracleError::RaggedMatrix {
                row: bad,
                expected: cols,
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// Exact product, failing on overflow.
    pub fn checked_mul(&self, rhs: &IntegerMatrix) -> Result<IntegerMatrix, OracleError> {
        if self.cols != rhs.rows {
            return Err(OracleError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.checked_mul(rhs[(k, j)]).ok_or(OracleError::Overflow)?;
                    out[(i, j)] = out[(i, j)].checked_add(prod).ok_or(OracleError::Overflow)?;
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += factor * row[src]`, starting at column `from`.
    pub(crate) fn add_row_multiple(
        &mut self,
        dst: usize,
        src: usize,
        factor: i64,
        from: usize,
    ) -> Result<(), OracleError> {
        for j in from..self.cols {
            let s = self[(src, j)];
            if s != 0 {
                let v = factor
                    .checked_mul(s)
                    .and_then(|p| self[(dst, j)].checked_add(p))
                    .ok_or(OracleError::Overflow)?;
                self[(dst, j)] = v;
            }
        }
        Ok(())
    }

    /// `col[dst] += factor * col[src]`, starting at row `from`.
    pub(crate) fn add_col_multiple(
        &mut self,
        dst: usize,
        src: usize,
        factor: i64,
        from: usize,
    ) -> Result<(), OracleError> {
        for i in from..self.rows {
            let s = self[(i, src)];
            if s != 0 {
                let v = factor
                    .checked_mul(s)
                    .and_then(|p| self[(i, dst)].checked_add(p))
                    .ok_or(OracleError::Overflow)?;
                self[(i, dst)] = v;
            }
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerMatrix {}x{} ", self.rows, self.cols)?;
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}
