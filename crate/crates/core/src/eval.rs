//! Euler characteristic, fibrous rank and catalog expansion of space terms.
//!
//! The characteristic of a fibrous decomposition `X0(Y1)X1...(Yn)Xn` is the
//! alternating sum
//!
//! ```text
//! χ(X) = χ(X0) - χ(Y1) + χ(X1) - ... + χ(X(n-1)) - χ(Yn) + χ(Xn)
//! ```
//!
//! and a finite space of `n` points has characteristic `n`. Disjoint sums
//! add. Evaluation records a [`ChiDerivation`] node for every step so the
//! arithmetic can be replayed and checked.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::catalog::{Catalog, ResolveError};
use crate::term::{CatalogRef, FiberLevel, FibrousDecomposition, Sign, SpaceTerm};

/// Catalog nesting allowed before evaluation gives up.
pub const DEFAULT_MAX_DEPTH: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error("integer overflow while evaluating the characteristic")]
    Overflow,
    #[error("catalog expansion deeper than {limit} levels at `{at}`")]
    DepthExceeded { limit: usize, at: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    FiniteCount,
    SumAdditivity,
    Multiple,
    CatalogExpansion,
    AlternatingSum,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::FiniteCount => "finite-count",
            Rule::SumAdditivity => "sum-additivity",
            Rule::Multiple => "multiple",
            Rule::CatalogExpansion => "catalog-expansion",
            Rule::AlternatingSum => "alternating-sum",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One evaluation step: the term, its characteristic, the rule used and the
/// weighted sub-evaluations it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiDerivation {
    pub term: SpaceTerm,
    pub chi: i64,
    pub rule: Rule,
    pub children: Vec<DerivationStep>,
}

/// A child evaluation contributing `sign * multiplicity * node.chi` to its
/// parent. Multiplicity differs from one only under [`Rule::Multiple`]; the
/// level is set only under [`Rule::AlternatingSum`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationStep {
    pub sign: Sign,
    pub multiplicity: u64,
    pub level: Option<FiberLevel>,
    pub node: ChiDerivation,
}

impl DerivationStep {
    fn plain(node: ChiDerivation) -> Self {
        Self {
            sign: Sign::Plus,
            multiplicity: 1,
            level: None,
            node,
        }
    }

    pub fn contribution(&self) -> Option<i64> {
        let m = i64::try_from(self.multiplicity).ok()?;
        self.sign
            .as_i64()
            .checked_mul(m)?
            .checked_mul(self.node.chi)
    }
}

impl ChiDerivation {
    /// Whether this node's value follows from its own children: leaves hold
    /// their point count, every other node the weighted sum of its children.
    /// Alternating-sum nodes must also list fibers as `X0, Y1, ..., Yn, Xn`
    /// with matching signs.
    pub fn node_is_sound(&self) -> bool {
        match self.rule {
            Rule::FiniteCount => {
                matches!(self.term, SpaceTerm::Finite(n) if i64::try_from(n) == Ok(self.chi))
                    && self.children.is_empty()
            }
            rule => {
                if rule == Rule::AlternatingSum && !self.levels_alternate() {
                    return false;
                }
                let sum = self
                    .children
                    .iter()
                    .try_fold(0i64, |acc, c| acc.checked_add(c.contribution()?));
                !self.children.is_empty() && sum == Some(self.chi)
            }
        }
    }

    fn levels_alternate(&self) -> bool {
        self.children.len() % 2 == 1
            && self.children.iter().enumerate().all(|(k, c)| {
                let want = if k % 2 == 0 {
                    FiberLevel::Transitional(k / 2)
                } else {
                    FiberLevel::Running(k / 2 + 1)
                };
                c.level == Some(want) && c.sign == want.sign() && c.multiplicity == 1
            })
    }

    /// Checks [`node_is_sound`](Self::node_is_sound) over the whole tree.
    pub fn is_sound(&self) -> bool {
        self.nodes().all(ChiDerivation::node_is_sound)
    }

    /// Pre-order traversal of every node.
    pub fn nodes(&self) -> impl Iterator<Item = &ChiDerivation> {
        let mut stack = vec![self];
        std::iter::from_fn(move || {
            let node = stack.pop()?;
            stack.extend(node.children.iter().rev().map(|c| &c.node));
            Some(node)
        })
    }
}

/// The `m` for which a term is `m`-fibrous under the inductive definition:
/// finite spaces are 0-fibrous, and a space with a decomposition whose fibers
/// are at most `(m-1)`-fibrous is `m`-fibrous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FibrousRank(pub u32);

impl fmt::Display for FibrousRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Evaluates terms against a catalog, memoizing catalog applications.
///
/// One evaluator may be reused for many terms over the same catalog.
pub struct Evaluator<'c> {
    catalog: &'c Catalog,
    max_depth: usize,
    chi_memo: HashMap<CatalogRef, ChiDerivation>,
    rank_memo: HashMap<CatalogRef, FibrousRank>,
    expand_memo: HashMap<CatalogRef, SpaceTerm>,
}

impl<'c> Evaluator<'c> {
    pub fn new(catalog: &'c Catalog) -> Self {
        Self {
            catalog,
            max_depth: DEFAULT_MAX_DEPTH,
            chi_memo: HashMap::new(),
            rank_memo: HashMap::new(),
            expand_memo: HashMap::new(),
        }
    }

    pub fn with_max_depth(mut self, max_depth: usize) -> Self {
        self.max_depth = max_depth;
        self
    }

    fn enter(&self, r: &CatalogRef, depth: usize) -> Result<SpaceTerm, EvalError> {
        // resolve first so bad names report as such rather than as depth
        let body = self.catalog.resolve(r)?;
        if depth >= self.max_depth {
            return Err(EvalError::DepthExceeded {
                limit: self.max_depth,
                at: crate::dsl::render(&SpaceTerm::CatalogRef(r.clone())),
            });
        }
        Ok(body)
    }

    pub fn chi(&mut self, term: &SpaceTerm) -> Result<ChiDerivation, EvalError> {
        self.chi_at(term, 0)
    }

    fn chi_at(&mut self, term: &SpaceTerm, depth: usize) -> Result<ChiDerivation, EvalError> {
        let (rule, children) = match term {
            SpaceTerm::Finite(n) => {
                let chi = i64::try_from(*n).map_err(|_| EvalError::Overflow)?;
                return Ok(ChiDerivation {
                    term: term.clone(),
                    chi,
                    rule: Rule::FiniteCount,
                    children: vec![],
                });
            }
            SpaceTerm::Sum(parts) => {
                let children = parts
                    .iter()
                    .map(|t| self.chi_at(t, depth).map(DerivationStep::plain))
                    .collect::<Result<_, _>>()?;
                (Rule::SumAdditivity, children)
            }
            SpaceTerm::Multiple(k, base) => {
                let mut step = DerivationStep::plain(self.chi_at(base, depth)?);
                step.multiplicity = k.get();
                (Rule::Multiple, vec![step])
            }
            SpaceTerm::CatalogRef(r) => {
                if let Some(hit) = self.chi_memo.get(r) {
                    return Ok(hit.clone());
                }
                let body = self.enter(r, depth)?;
                let inner = self.chi_at(&body, depth + 1)?;
                let node = ChiDerivation {
                    term: term.clone(),
                    chi: inner.chi,
                    rule: Rule::CatalogExpansion,
                    children: vec![DerivationStep::plain(inner)],
                };
                self.chi_memo.insert(r.clone(), node.clone());
                return Ok(node);
            }
            SpaceTerm::Decomp(d) => (Rule::AlternatingSum, self.fiber_steps(d, depth)?),
        };
        let chi = children
            .iter()
            .try_fold(0i64, |acc, c: &DerivationStep| {
                acc.checked_add(c.contribution()?)
            })
            .ok_or(EvalError::Overflow)?;
        Ok(ChiDerivation {
            term: term.clone(),
            chi,
            rule,
            children,
        })
    }

    fn fiber_steps(
        &mut self,
        d: &FibrousDecomposition,
        depth: usize,
    ) -> Result<Vec<DerivationStep>, EvalError> {
        d.fibers()
            .map(|(level, fiber)| {
                Ok(DerivationStep {
                    sign: level.sign(),
                    multiplicity: 1,
                    level: Some(level),
                    node: self.chi_at(fiber, depth)?,
                })
            })
            .collect()
    }

    pub fn fibrous_rank(&mut self, term: &SpaceTerm) -> Result<FibrousRank, EvalError> {
        self.rank_at(term, 0)
    }

    fn rank_at(&mut self, term: &SpaceTerm, depth: usize) -> Result<FibrousRank, EvalError> {
        Ok(match term {
            SpaceTerm::Finite(_) => FibrousRank(0),
            SpaceTerm::Sum(parts) => {
                let mut best = FibrousRank(0);
                for t in parts {
                    best = best.max(self.rank_at(t, depth)?);
                }
                best
            }
            SpaceTerm::Multiple(_, base) => self.rank_at(base, depth)?,
            SpaceTerm::CatalogRef(r) => {
                if let Some(&hit) = self.rank_memo.get(r) {
                    return Ok(hit);
                }
                let body = self.enter(r, depth)?;
                let rank = self.rank_at(&body, depth + 1)?;
                self.rank_memo.insert(r.clone(), rank);
                rank
            }
            SpaceTerm::Decomp(d) if d.is_trivial() => self.rank_at(&d.transitional()[0], depth)?,
            SpaceTerm::Decomp(d) => {
                let mut best = FibrousRank(0);
                for (_, fiber) in d.fibers() {
                    best = best.max(self.rank_at(fiber, depth)?);
                }
                FibrousRank(best.0 + 1)
            }
        })
    }

    /// Replaces every catalog reference by its canonical decomposition,
    /// recursively, leaving only finite spaces, sums, multiples and
    /// decompositions.
    pub fn expand(&mut self, term: &SpaceTerm) -> Result<SpaceTerm, EvalError> {
        self.expand_at(term, 0)
    }

    fn expand_at(&mut self, term: &SpaceTerm, depth: usize) -> Result<SpaceTerm, EvalError> {
        Ok(match term {
            SpaceTerm::Finite(_) => term.clone(),
            SpaceTerm::Sum(parts) => SpaceTerm::Sum(
                parts
                    .iter()
                    .map(|t| self.expand_at(t, depth))
                    .collect::<Result<_, _>>()?,
            ),
            SpaceTerm::Multiple(k, base) => {
                SpaceTerm::Multiple(*k, Box::new(self.expand_at(base, depth)?))
            }
            SpaceTerm::CatalogRef(r) => {
                if let Some(hit) = self.expand_memo.get(r) {
                    return Ok(hit.clone());
                }
                let body = self.enter(r, depth)?;
                let out = self.expand_at(&body, depth + 1)?;
                self.expand_memo.insert(r.clone(), out.clone());
                out
            }
            SpaceTerm::Decomp(d) => {
                let trans = d
                    .transitional()
                    .iter()
                    .map(|t| self.expand_at(t, depth))
                    .collect::<Result<_, _>>()?;
                let run = d
                    .running()
                    .iter()
                    .map(|t| self.expand_at(t, depth))
                    .collect::<Result<_, _>>()?;
                SpaceTerm::decomp(trans, run).expect("expansion preserves alternation")
            }
        })
    }

    /// Longest chain of nested catalog applications in the term, counting
    /// only the applications met while unfolding and not the term's own
    /// outermost reference.
    pub fn expansion_depth(&mut self, term: &SpaceTerm) -> Result<usize, EvalError> {
        match term {
            SpaceTerm::CatalogRef(r) => {
                let body = self.enter(r, 0)?;
                self.nesting(&body, 1)
            }
            _ => self.nesting(term, 0),
        }
    }

    fn nesting(&mut self, term: &SpaceTerm, depth: usize) -> Result<usize, EvalError> {
        Ok(match term {
            SpaceTerm::Finite(_) => 0,
            SpaceTerm::Sum(parts) => {
                let mut best = 0;
                for t in parts {
                    best = best.max(self.nesting(t, depth)?);
                }
                best
            }
            SpaceTerm::Multiple(_, base) => self.nesting(base, depth)?,
            SpaceTerm::CatalogRef(r) => {
                let body = self.enter(r, depth)?;
                1 + self.nesting(&body, depth + 1)?
            }
            SpaceTerm::Decomp(d) => {
                let mut best = 0;
                for (_, t) in d.fibers() {
                    best = best.max(self.nesting(t, depth)?);
                }
                best
            }
        })
    }
}

/// Characteristic of `term` with a full derivation.
pub fn chi(term: &SpaceTerm, catalog: &Catalog) -> Result<ChiDerivation, EvalError> {
    Evaluator::new(catalog).chi(term)
}

pub fn fibrous_rank(term: &SpaceTerm, catalog: &Catalog) -> Result<FibrousRank, EvalError> {
    Evaluator::new(catalog).fibrous_rank(term)
}

pub fn expand(term: &SpaceTerm, catalog: &Catalog) -> Result<SpaceTerm, EvalError> {
    Evaluator::new(catalog).expand(term)
}
