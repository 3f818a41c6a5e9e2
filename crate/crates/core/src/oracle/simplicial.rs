use std::collections::{BTreeSet, HashMap};

use super::{IntegerMatrix, OracleError};

pub type Vertex = u32;

/// Largest accepted simplex, in vertices. Closure enumerates all `2^n - 1`
/// faces of each generator.
pub const MAX_SIMPLEX_SIZE: usize = 20;

/// A finite abstract simplicial complex, stored with its full face lattice.
///
/// Simplices are sorted vertex lists; `faces[k]` holds the `k`-simplices in
/// lexicographic order, which fixes the row and column order of the boundary
/// matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    maximal: Vec<Vec<Vertex>>,
    faces: Vec<Vec<Vec<Vertex>>>,
}

impl SimplicialComplex {
    /// Closes the given simplices under taking faces.
    ///
    /// Input simplices may repeat or be faces of one another; the stored
    /// maximal set keeps only those that are not proper faces of another.
    pub fn close_and_validate<I, S>(simplices: I) -> Result<Self, OracleError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[Vertex]>,
    {
        let mut generators = BTreeSet::new();
        for (index, s) in simplices.into_iter().enumerate() {
            let s = s.as_ref();
            if s.is_empty() {
                return Err(OracleError::EmptySimplex { index });
            }
            let mut sorted = s.to_vec();
            sorted.sort_unstable();
            if sorted.len() > MAX_SIMPLEX_SIZE {
                return Err(OracleError::SimplexTooLarge {
                    index,
                    size: sorted.len(),
                });
            }
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(OracleError::DuplicateVertex {
                    index,
                    vertex: w[0],
                });
            }
            generators.insert(sorted);
        }
        if generators.is_empty() {
            return Err(OracleError::EmptyComplex);
        }

        let top = generators.iter().map(Vec::len).max().unwrap_or(0);
        let mut levels: Vec<BTreeSet<Vec<Vertex>>> = vec![BTreeSet::new(); top];
        for g in &generators {
            for face in subsets(g) {
                levels[face.len() - 1].insert(face);
            }
        }

        let maximal = generators
            .iter()
            .filter(|g| {
                levels
                    .get(g.len())
                    .is_none_or(|above| !above.iter().any(|s| is_subset(g, s)))
            })
            .cloned()
            .collect();

        Ok(Self {
            maximal,
            faces: levels
                .into_iter()
                .map(|l| l.into_iter().collect())
                .collect(),
        })
    }

    pub fn maximal_simplices(&self) -> &[Vec<Vertex>] {
        &self.maximal
    }

    pub fn dimension(&self) -> usize {
        self.faces.len() - 1
    }

    /// All `k`-simplices in lexicographic order.
    pub fn simplices(&self, k: usize) -> &[Vec<Vertex>] {
        self.faces.get(k).map_or(&[], Vec::as_slice)
    }

    /// Number of `k`-simplices for `k = 0..=dimension`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// `Σ_k (-1)^k f_k`.
    pub fn chi_by_faces(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// The simplicial boundary map from `k`-chains to `(k-1)`-chains.
    ///
    /// Rows are indexed by `(k-1)`-simplices and columns by `k`-simplices.
    /// Omitting the vertex at position `i` of a sorted simplex contributes
    /// `(-1)^i`.
    pub fn boundary_matrix(&self, k: usize) -> Result<IntegerMatrix, OracleError> {
        if k == 0 || k > self.dimension() {
            return Err(OracleError::BoundaryDegree {
                k,
                dimension: self.dimension(),
            });
        }
        let rows = self.simplices(k - 1);
        let cols = self.simplices(k);
        let row_of: HashMap<&[Vertex], usize> = rows
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let mut m = IntegerMatrix::zeros(rows.len(), cols.len());
        let mut face = Vec::with_capacity(k);
        for (j, s) in cols.iter().enumerate() {
            for omit in 0..s.len() {
                face.clear();
                face.extend(
                    s.iter()
                        .enumerate()
                        .filter(|&(p, _)| p != omit)
                        .map(|(_, &v)| v),
                );
                let i = row_of[face.as_slice()];
                m[(i, j)] = if omit % 2 == 0 { 1 } else { -1 };
            }
        }
        Ok(m)
    }

    /// Distinct vertex labels.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.simplices(0).iter().map(|v| v[0])
    }
}

fn subsets(s: &[Vertex]) -> impl Iterator<Item = Vec<Vertex>> + '_ {
    let n = s.len();
    (1u64..(1u64 << n)).map(move |mask| {
        (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| s[i])
            .collect()
    })
}

fn is_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}
