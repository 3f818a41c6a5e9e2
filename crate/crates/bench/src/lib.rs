//! Inputs shared by the benchmarks.

use fibrous_core::{SimplicialComplex, SpaceTerm};

/// Expressions of increasing nesting, used for parse, render and evaluation.
pub const EXPRESSIONS: &[&str] = &[
    "p(S^1)rosette(4)",
    "p(S^1)chain(3)(3*S^1)chain(3)(S^1)p",
    "T^2(2*T^2)T^2 + 3*RP^6",
    "N_8(M_4)[S^3 + D^5](2*cw(1,4,6,4,1))M_6",
];

/// Catalog applications whose expansion grows with the parameter.
pub fn catalog_terms(n: u64) -> Vec<(&'static str, SpaceTerm)> {
    vec![
        ("S", SpaceTerm::catalog("S", vec![n])),
        ("M", SpaceTerm::catalog("M", vec![n])),
        ("N", SpaceTerm::catalog("N", vec![n.max(1)])),
        ("RP", SpaceTerm::catalog("RP", vec![n])),
        (
            "cw",
            SpaceTerm::catalog("cw", (0..=n).map(|i| i + 1).collect()),
        ),
    ]
}

/// Boundary of the `dim`-simplex, the largest homology input benchmarked.
pub fn sphere(dim: usize) -> SimplicialComplex {
    fibrous_core::catalog::simplex_boundary(dim)
}
