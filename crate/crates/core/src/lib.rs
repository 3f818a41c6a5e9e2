//! Euler-Poincaré characteristics of spaces described by fibrous
//! decompositions.
//!
//! A space is written as a [`SpaceTerm`]: finite point sets, disjoint sums,
//! catalog spaces, and decompositions `X0(Y1)X1...(Yn)Xn` into transitional
//! fibers `X_i` and running fibers `Y_j`. The characteristic is the
//! alternating sum of the fibers' characteristics, computed recursively by
//! [`chi`] with a full [`ChiDerivation`]. The [`oracle`] module computes the
//! same number independently from triangulations (face counts and integer
//! homology) and from CW cell counts.
//!
//! ```
//! use fibrous_core::{chi, parse, Catalog};
//!
//! let genus_two = parse("p(S^1)chain(3)(3*S^1)chain(3)(S^1)p").unwrap();
//! assert_eq!(chi(&genus_two, Catalog::builtin()).unwrap().chi, -2);
//! ```

pub mod catalog;
pub mod dsl;
pub mod eval;
pub mod oracle;
pub mod term;
pub mod trace;

pub use catalog::{builtin_catalog, Catalog, CatalogEntry, ParamSpec, Realization, ResolveError};
pub use dsl::{parse, parse_with, render, ParseError, ParseErrorKind};
pub use eval::{
    chi, expand, fibrous_rank, ChiDerivation, DerivationStep, EvalError, Evaluator, FibrousRank,
    Rule,
};
pub use oracle::{CwSkeleton, IntegerMatrix, OracleError, SimplicialComplex, SnfResult};
pub use term::{CatalogRef, FiberLevel, FibrousDecomposition, Sign, SpaceTerm, TermError};
