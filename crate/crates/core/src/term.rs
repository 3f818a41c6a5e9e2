//! The space-term algebra.
//!
//! A [`SpaceTerm`] is a finite tree built from finite point sets, disjoint
//! sums, scalar multiples, references into a [`Catalog`](crate::Catalog) and
//! fibrous decompositions `X0(Y1)X1...(Yn)Xn`. Only the fibers are recorded:
//! the Euler characteristic of a decomposition does not depend on the maps
//! that glue the fibers together.

use std::fmt;
use std::num::NonZeroU64;

use thiserror::Error;

/// Structural errors raised when assembling terms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("a disjoint sum needs at least two parts, got {0}")]
    SumTooShort(usize),
    #[error("a multiple needs a positive count")]
    ZeroMultiple,
    #[error(
        "a fibrous decomposition needs one more transitional fiber than running fibers \
         (got {transitional} transitional, {running} running)"
    )]
    Alternation { transitional: usize, running: usize },
}

/// A space described by the term algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpaceTerm {
    /// A discrete space with the given number of points. `Finite(0)` is the
    /// empty space.
    Finite(u64),
    /// Disjoint sum of two or more parts, in order.
    Sum(Vec<SpaceTerm>),
    /// `count` disjoint copies of `base`.
    Multiple(NonZeroU64, Box<SpaceTerm>),
    /// A named catalog space applied to parameters.
    CatalogRef(CatalogRef),
    /// A fibrous decomposition.
    Decomp(FibrousDecomposition),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalogRef {
    pub name: String,
    pub params: Vec<u64>,
}

impl CatalogRef {
    pub fn new(name: impl Into<String>, params: Vec<u64>) -> Self {
        Self {
            name: name.into(),
            params,
        }
    }
}

/// `X0(Y1)X1...(Yn)Xn`: `n + 1` transitional fibers interleaved with `n`
/// running fibers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FibrousDecomposition {
    transitional: Vec<SpaceTerm>,
    running: Vec<SpaceTerm>,
}

impl FibrousDecomposition {
    pub fn new(transitional: Vec<SpaceTerm>, running: Vec<SpaceTerm>) -> Result<Self, TermError> {
        if transitional.len() != running.len() + 1 {
            return Err(TermError::Alternation {
                transitional: transitional.len(),
                running: running.len(),
            });
        }
        Ok(Self {
            transitional,
            running,
        })
    }

    /// The length-0 decomposition consisting of `x0` alone.
    pub fn trivial(x0: SpaceTerm) -> Self {
        Self {
            transitional: vec![x0],
            running: Vec::new(),
        }
    }

    /// Number of running fibers.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.running.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.running.is_empty()
    }

    pub fn transitional(&self) -> &[SpaceTerm] {
        &self.transitional
    }

    pub fn running(&self) -> &[SpaceTerm] {
        &self.running
    }

    /// Fibers in the order `X0, Y1, X1, ..., Yn, Xn` together with their
    /// level under the associated function onto `[0, n]`.
    pub fn fibers(&self) -> impl Iterator<Item = (FiberLevel, &SpaceTerm)> + '_ {
        let mut trans = self.transitional.iter().enumerate();
        let mut run = self.running.iter().enumerate();
        let total = self.transitional.len() + self.running.len();
        (0..total).map(move |k| {
            if k % 2 == 0 {
                let (i, x) = trans.next().expect("alternation invariant");
                (FiberLevel::Transitional(i), x)
            } else {
                let (j, y) = run.next().expect("alternation invariant");
                (FiberLevel::Running(j + 1), y)
            }
        })
    }
}

/// Where a fiber sits under the function associated with its decomposition:
/// transitional fiber `X_i` at the integer `i`, running fiber `Y_j` over the
/// open interval `(j-1, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberLevel {
    Transitional(usize),
    Running(usize),
}

impl FiberLevel {
    pub fn sign(self) -> Sign {
        match self {
            FiberLevel::Transitional(_) => Sign::Plus,
            FiberLevel::Running(_) => Sign::Minus,
        }
    }
}

impl fmt::Display for FiberLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FiberLevel::Transitional(i) => write!(f, "{i}"),
            FiberLevel::Running(j) => write!(f, "({},{})", j - 1, j),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl SpaceTerm {
    /// A single point.
    pub fn point() -> Self {
        SpaceTerm::Finite(1)
    }

    pub fn sum(parts: Vec<SpaceTerm>) -> Result<Self, TermError> {
        if parts.len() < 2 {
            return Err(TermError::SumTooShort(parts.len()));
        }
        Ok(SpaceTerm::Sum(parts))
    }

    pub fn multiple(count: u64, base: SpaceTerm) -> Result<Self, TermError> {
        let count = NonZeroU64::new(count).ok_or(TermError::ZeroMultiple)?;
        Ok(SpaceTerm::Multiple(count, Box::new(base)))
    }

    /// `count` copies of `base`, written without a multiplier when `count` is
    /// one and as the empty space when it is zero.
    pub fn copies(count: u64, base: SpaceTerm) -> Self {
        match count {
            0 => SpaceTerm::Finite(0),
            1 => base,
            k => SpaceTerm::Multiple(NonZeroU64::new(k).unwrap(), Box::new(base)),
        }
    }

    pub fn catalog(name: impl Into<String>, params: Vec<u64>) -> Self {
        SpaceTerm::CatalogRef(CatalogRef::new(name, params))
    }

    pub fn decomp(
        transitional: Vec<SpaceTerm>,
        running: Vec<SpaceTerm>,
    ) -> Result<Self, TermError> {
        FibrousDecomposition::new(transitional, running).map(SpaceTerm::Decomp)
    }

    /// Checks the invariants of every node. Terms assembled through the
    /// constructors above always pass; this catches hand-built enum values.
    pub fn validate(&self) -> Result<(), TermError> {
        match self {
            SpaceTerm::Finite(_) | SpaceTerm::CatalogRef(_) => Ok(()),
            SpaceTerm::Sum(parts) => {
                if parts.len() < 2 {
                    return Err(TermError::SumTooShort(parts.len()));
                }
                parts.iter().try_for_each(SpaceTerm::validate)
            }
            SpaceTerm::Multiple(_, base) => base.validate(),
            SpaceTerm::Decomp(d) => {
                if d.transitional.len() != d.running.len() + 1 {
                    return Err(TermError::Alternation {
                        transitional: d.transitional.len(),
                        running: d.running.len(),
                    });
                }
                d.transitional
                    .iter()
                    .chain(&d.running)
                    .try_for_each(SpaceTerm::validate)
            }
        }
    }

    /// True when no catalog references occur anywhere in the term.
    pub fn is_catalog_free(&self) -> bool {
        match self {
            SpaceTerm::Finite(_) => true,
            SpaceTerm::CatalogRef(_) => false,
            SpaceTerm::Sum(parts) => parts.iter().all(SpaceTerm::is_catalog_free),
            SpaceTerm::Multiple(_, base) => base.is_catalog_free(),
            SpaceTerm::Decomp(d) => d
                .transitional
                .iter()
                .chain(&d.running)
                .all(SpaceTerm::is_catalog_free),
        }
    }
}

impl From<FibrousDecomposition> for SpaceTerm {
    fn from(d: FibrousDecomposition) -> Self {
        SpaceTerm::Decomp(d)
    }
}

impl From<CatalogRef> for SpaceTerm {
    fn from(r: CatalogRef) -> Self {
        SpaceTerm::CatalogRef(r)
    }
}
