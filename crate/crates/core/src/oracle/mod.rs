//! Independent Euler characteristic computations.
//!
//! Two routes that share nothing with the decomposition evaluator: counting
//! faces or cells, and ranks of integer homology obtained from Smith normal
//! forms of simplicial boundary matrices.

mod cw;
mod homology;
mod matrix;
mod simplicial;
mod snf;

use thiserror::Error;

pub use cw::CwSkeleton;
pub use homology::{betti_numbers, chi_by_betti, homology, Homology};
pub use matrix::IntegerMatrix;
pub use simplicial::{SimplicialComplex, Vertex, MAX_SIMPLEX_SIZE};
pub use snf::{smith_normal_form, SnfResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("complex has no simplices")]
    EmptyComplex,
    #[error("simplex #{index} is empty")]
    EmptySimplex { index: usize },
    #[error("simplex #{index} repeats vertex {vertex}")]
    DuplicateVertex { index: usize, vertex: Vertex },
    #[error("simplex #{index} has {size} vertices; at most {MAX_SIMPLEX_SIZE} are supported")]
    SimplexTooLarge { index: usize, size: usize },
    #[error("boundary degree {k} is outside 1..={dimension}")]
    BoundaryDegree { k: usize, dimension: usize },
    #[error("cell counts are empty")]
    EmptySkeleton,
    #[error("top-dimensional cell count (dimension {dimension}) must be positive")]
    ZeroTopCells { dimension: usize },
    #[error("row {row} does not have {expected} entries")]
    RaggedMatrix { row: usize, expected: usize },
    #[error("cannot multiply {}x{} by {}x{}", left.0, left.1, right.0, right.1)]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}
