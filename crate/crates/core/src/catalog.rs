//! Named spaces with canonical fibrous decompositions.
//!
//! Every builtin entry unfolds by a recursion that reaches a finite space in
//! a bounded number of steps: spheres as `p(S^(n-1))p`, projective spaces
//! and dunce hats as `p(S^(n-1))X^(n-1)`, rosettes and chains of circles by
//! attaching one circle at a time through `X0(2p)p`, surfaces through chains
//! or rosettes of circles, and finite CW complexes by peeling off their top
//! cells. Where a small concrete model exists (a triangulation or a cell
//! count) it is attached as a [`Realization`] for the oracles.

use std::fmt;
use std::sync::LazyLock;

use thiserror::Error;

use crate::oracle::{CwSkeleton, SimplicialComplex, Vertex};
use crate::term::{CatalogRef, SpaceTerm};

pub type Builder = fn(&[u64]) -> SpaceTerm;
pub type Realizer = fn(&[u64]) -> Vec<Realization>;
pub type ChiFormula = fn(&[u64]) -> i64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("unknown space `{0}`")]
    UnknownName(String),
    #[error("`{name}` takes {expected}, got {got}")]
    Arity {
        name: String,
        expected: String,
        got: usize,
    },
    #[error("parameter {value} of `{name}` is outside its domain {domain}")]
    OutOfDomain {
        name: String,
        index: usize,
        value: u64,
        domain: String,
    },
    #[error("a space named `{0}` is already registered")]
    Duplicate(String),
}

/// How parameters are written after the name in the expression language.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamStyle {
    /// `S^3`
    Superscript,
    /// `M_2`
    Subscript,
    /// `rosette(4)`, `cw(1,2,1)`
    Parenthesized,
}

/// Inclusive range of admissible values for one parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamDomain {
    pub var: &'static str,
    pub min: u64,
    pub max: Option<u64>,
}

impl ParamDomain {
    pub const fn at_least(var: &'static str, min: u64) -> Self {
        Self {
            var,
            min,
            max: None,
        }
    }

    pub const fn between(var: &'static str, min: u64, max: u64) -> Self {
        Self {
            var,
            min,
            max: Some(max),
        }
    }

    pub fn contains(&self, v: u64) -> bool {
        v >= self.min && self.max.is_none_or(|m| v <= m)
    }
}

impl fmt::Display for ParamDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max {
            Some(max) => write!(f, "{} <= {} <= {}", self.min, self.var, max),
            None => write!(f, "{} >= {}", self.var, self.min),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamSpec {
    /// One parameter per domain.
    Fixed(Vec<ParamDomain>),
    /// Any number of parameters, at least `min_len`, each in `each`.
    Variadic { min_len: usize, each: ParamDomain },
}

impl ParamSpec {
    fn arity_text(&self) -> String {
        match self {
            ParamSpec::Fixed(d) if d.len() == 1 => "1 parameter".to_string(),
            ParamSpec::Fixed(d) => format!("{} parameters", d.len()),
            ParamSpec::Variadic { min_len, .. } => format!("at least {min_len} parameter(s)"),
        }
    }

    fn check(&self, name: &str, params: &[u64]) -> Result<(), ResolveError> {
        let arity_ok = match self {
            ParamSpec::Fixed(d) => d.len() == params.len(),
            ParamSpec::Variadic { min_len, .. } => params.len() >= *min_len,
        };
        if !arity_ok {
            return Err(ResolveError::Arity {
                name: name.to_string(),
                expected: self.arity_text(),
                got: params.len(),
            });
        }
        for (index, &value) in params.iter().enumerate() {
            let domain = match self {
                ParamSpec::Fixed(d) => d[index],
                ParamSpec::Variadic { each, .. } => *each,
            };
            if !domain.contains(value) {
                return Err(ResolveError::OutOfDomain {
                    name: name.to_string(),
                    index,
                    value,
                    domain: domain.to_string(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamSpec::Fixed(d) => {
                let parts: Vec<String> = d.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join(", "))
            }
            ParamSpec::Variadic { min_len, each } => {
                write!(f, "{min_len} or more parameters, each {each}")
            }
        }
    }
}

/// A concrete model of a catalog space that the oracles can evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    Simplicial(SimplicialComplex),
    Cells(CwSkeleton),
}

#[derive(Debug, Clone)]
pub struct AltBuilder {
    pub label: &'static str,
    pub builder: Builder,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub params: ParamSpec,
    pub style: ParamStyle,
    /// Canonical decomposition.
    pub builder: Builder,
    pub alt_builders: Vec<AltBuilder>,
    pub realize: Option<Realizer>,
    pub expected_chi: Option<ChiFormula>,
    /// Defining equations in expression syntax, for listings.
    pub recursion: Vec<String>,
    /// Closed form of the expected characteristic, for listings.
    pub chi_text: Option<String>,
}

impl CatalogEntry {
    pub fn check_params(&self, params: &[u64]) -> Result<(), ResolveError> {
        self.params.check(&self.name, params)
    }
}

/// A catalog application: the canonical term plus any concrete models.
#[derive(Debug, Clone)]
pub struct Application {
    pub term: SpaceTerm,
    pub realizations: Vec<Realization>,
}

/// Registry of named spaces, kept in registration order.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

static BUILTIN: LazyLock<Catalog> = LazyLock::new(builtin_catalog);

impl Catalog {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Shared instance of [`builtin_catalog`].
    pub fn builtin() -> &'static Catalog {
        &BUILTIN
    }

    pub fn register(&mut self, entry: CatalogEntry) -> Result<(), ResolveError> {
        if self.entry(&entry.name).is_some() {
            return Err(ResolveError::Duplicate(entry.name));
        }
        self.entries.push(entry);
        Ok(())
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn entry(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Finds the entry and checks arity and parameter domains.
    pub fn checked_entry(&self, name: &str, params: &[u64]) -> Result<&CatalogEntry, ResolveError> {
        let entry = self
            .entry(name)
            .ok_or_else(|| ResolveError::UnknownName(name.to_string()))?;
        entry.check_params(params)?;
        Ok(entry)
    }

    /// Canonical decomposition of `name` at `params`.
    pub fn resolve(&self, r: &CatalogRef) -> Result<SpaceTerm, ResolveError> {
        let entry = self.checked_entry(&r.name, &r.params)?;
        Ok((entry.builder)(&r.params))
    }

    pub fn lookup(&self, name: &str, params: &[u64]) -> Result<Application, ResolveError> {
        let entry = self.checked_entry(name, params)?;
        Ok(Application {
            term: (entry.builder)(params),
            realizations: entry.realize.map_or_else(Vec::new, |f| f(params)),
        })
    }
}

/// Size of the largest sphere that gets a simplicial model; the boundary of
/// the `(n+1)`-simplex has `2^(n+2) - 2` faces.
pub const MAX_SIMPLICIAL_SPHERE: u64 = 10;

fn p() -> SpaceTerm {
    SpaceTerm::point()
}

fn decomp(transitional: Vec<SpaceTerm>, running: Vec<SpaceTerm>) -> SpaceTerm {
    SpaceTerm::decomp(transitional, running).expect("builder keeps fibers alternating")
}

fn sphere_ref(n: u64) -> SpaceTerm {
    SpaceTerm::catalog("S", vec![n])
}

fn circle() -> SpaceTerm {
    sphere_ref(1)
}

fn alternating(n: u64, even: i64, odd: i64) -> i64 {
    if n.is_multiple_of(2) {
        even
    } else {
        odd
    }
}

fn signed(v: u64) -> i64 {
    i64::try_from(v).expect("catalog parameter fits in i64")
}

// S^0 = 2p, S^n = p(S^(n-1))p
fn build_sphere(params: &[u64]) -> SpaceTerm {
    match params[0] {
        0 => SpaceTerm::Finite(2),
        n => decomp(vec![p(), p()], vec![sphere_ref(n - 1)]),
    }
}

fn realize_sphere(params: &[u64]) -> Vec<Realization> {
    let n = params[0];
    let mut out = Vec::new();
    if n <= MAX_SIMPLICIAL_SPHERE {
        out.push(Realization::Simplicial(simplex_boundary(n as usize + 1)));
    }
    let cells = if n == 0 {
        vec![2]
    } else {
        let mut c = vec![0; n as usize + 1];
        c[0] = 1;
        c[n as usize] = 1;
        c
    };
    out.push(cells_of(cells));
    out
}

// one more circle glued at a point: X(k) = X(k-1)(2p)p
fn build_one_point_union(name: &'static str) -> impl Fn(&[u64]) -> SpaceTerm {
    move |params| match params[0] {
        0 => p(),
        k => decomp(
            vec![SpaceTerm::catalog(name, vec![k - 1]), p()],
            vec![SpaceTerm::Finite(2)],
        ),
    }
}

fn build_rosette(params: &[u64]) -> SpaceTerm {
    build_one_point_union("rosette")(params)
}

fn build_chain(params: &[u64]) -> SpaceTerm {
    build_one_point_union("chain")(params)
}

fn realize_rosette(params: &[u64]) -> Vec<Realization> {
    let k = params[0] as u32;
    let mut simplices: Vec<Vec<Vertex>> = vec![vec![0]];
    for i in 0..k {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        simplices.extend([vec![0, a], vec![a, b], vec![0, b]]);
    }
    let cells = if k == 0 { vec![1] } else { vec![1, params[0]] };
    vec![simplicial(simplices), cells_of(cells)]
}

fn realize_chain(params: &[u64]) -> Vec<Realization> {
    let k = params[0] as u32;
    let mut simplices: Vec<Vec<Vertex>> = vec![vec![0]];
    for i in 0..k {
        let (left, top, right) = (2 * i, 2 * i + 1, 2 * i + 2);
        simplices.extend([vec![left, top], vec![top, right], vec![left, right]]);
    }
    let cells = if k == 0 {
        vec![1]
    } else {
        vec![params[0] + 1, 2 * params[0]]
    };
    vec![simplicial(simplices), cells_of(cells)]
}

// M_g = p(S^1)chain(g+1)((g+1)*S^1)chain(g+1)(S^1)p
fn build_orientable(params: &[u64]) -> SpaceTerm {
    let g = params[0];
    let chain = SpaceTerm::catalog("chain", vec![g + 1]);
    decomp(
        vec![p(), chain.clone(), chain, p()],
        vec![circle(), SpaceTerm::copies(g + 1, circle()), circle()],
    )
}

// M_g = p(S^1)rosette(2g), from the word a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1
fn build_orientable_rosette(params: &[u64]) -> SpaceTerm {
    decomp(
        vec![p(), SpaceTerm::catalog("rosette", vec![2 * params[0]])],
        vec![circle()],
    )
}

fn realize_orientable(params: &[u64]) -> Vec<Realization> {
    let g = params[0];
    let mut out = Vec::new();
    match g {
        0 => out.push(Realization::Simplicial(simplex_boundary(3))),
        1 => out.push(seven_vertex_torus()),
        _ => {}
    }
    out.push(cells_of(vec![1, 2 * g, 1]));
    out
}

// N_1 = S^1(S^1)p, N_2 = S^1(S^1)S^1,
// N_h = S^1(S^1)chain(h-1)((h-1)*S^1)(h-1)*S^1 for h >= 3
fn build_nonorientable(params: &[u64]) -> SpaceTerm {
    match params[0] {
        1 => decomp(vec![circle(), p()], vec![circle()]),
        2 => decomp(vec![circle(), circle()], vec![circle()]),
        h => decomp(
            vec![
                circle(),
                SpaceTerm::catalog("chain", vec![h - 1]),
                SpaceTerm::copies(h - 1, circle()),
            ],
            vec![circle(), SpaceTerm::copies(h - 1, circle())],
        ),
    }
}

// N_h = p(S^1)rosette(h), from the word a1^2 ... ah^2
fn build_nonorientable_rosette(params: &[u64]) -> SpaceTerm {
    decomp(
        vec![p(), SpaceTerm::catalog("rosette", vec![params[0]])],
        vec![circle()],
    )
}

fn realize_nonorientable(params: &[u64]) -> Vec<Realization> {
    let h = params[0];
    let mut out = Vec::new();
    if h == 1 {
        out.push(six_vertex_projective_plane());
    }
    out.push(cells_of(vec![1, h, 1]));
    out
}

// RP^0 = p, RP^n = p(S^(n-1))RP^(n-1)
fn build_projective(params: &[u64]) -> SpaceTerm {
    match params[0] {
        0 => p(),
        n => decomp(
            vec![p(), SpaceTerm::catalog("RP", vec![n - 1])],
            vec![sphere_ref(n - 1)],
        ),
    }
}

fn realize_projective(params: &[u64]) -> Vec<Realization> {
    let n = params[0];
    let mut out = Vec::new();
    match n {
        0 => out.push(simplicial(vec![vec![0]])),
        1 => out.push(simplicial(vec![vec![0, 1], vec![1, 2], vec![0, 2]])),
        2 => out.push(six_vertex_projective_plane()),
        _ => {}
    }
    out.push(cells_of(vec![1; n as usize + 1]));
    out
}

// D^0 = p, D^n = p(S^(n-1))D^(n-1)
fn build_dunce_hat(params: &[u64]) -> SpaceTerm {
    match params[0] {
        0 => p(),
        n => decomp(
            vec![p(), SpaceTerm::catalog("D", vec![n - 1])],
            vec![sphere_ref(n - 1)],
        ),
    }
}

fn realize_dunce_hat(params: &[u64]) -> Vec<Realization> {
    // D^(n-1) plus one n-cell at every step
    vec![cells_of(vec![1; params[0] as usize + 1])]
}

// T^1 = S^1, T^2 = M_1, T^3 = T^2(2*T^2)T^2
fn build_torus(params: &[u64]) -> SpaceTerm {
    match params[0] {
        1 => build_sphere(&[1]),
        2 => build_orientable(&[1]),
        _ => {
            let t2 = SpaceTerm::catalog("T", vec![2]);
            decomp(vec![t2.clone(), t2.clone()], vec![SpaceTerm::copies(2, t2)])
        }
    }
}

fn realize_torus(params: &[u64]) -> Vec<Realization> {
    match params[0] {
        1 => vec![
            simplicial(vec![vec![0, 1], vec![1, 2], vec![0, 2]]),
            cells_of(vec![1, 1]),
        ],
        2 => vec![seven_vertex_torus(), cells_of(vec![1, 2, 1])],
        _ => vec![cells_of(vec![1, 3, 3, 1])],
    }
}

// cw(a0) = a0 p, cw(a0,...,an) = an p (an*S^(n-1)) cw(a0,...,a(n-1))
fn build_cw(params: &[u64]) -> SpaceTerm {
    let (&top, lower) = params.split_last().expect("arity checked");
    if lower.is_empty() {
        return SpaceTerm::Finite(top);
    }
    let n = lower.len() as u64;
    decomp(
        vec![
            SpaceTerm::Finite(top),
            SpaceTerm::catalog("cw", lower.to_vec()),
        ],
        vec![SpaceTerm::copies(top, sphere_ref(n - 1))],
    )
}

fn realize_cw(params: &[u64]) -> Vec<Realization> {
    let len = params.iter().rposition(|&a| a != 0).map_or(0, |i| i + 1);
    if len == 0 {
        return Vec::new();
    }
    vec![cells_of(params[..len].to_vec())]
}

fn cells_of(counts: Vec<u64>) -> Realization {
    Realization::Cells(CwSkeleton::new(counts).expect("top cell count is positive"))
}

fn simplicial(simplices: Vec<Vec<Vertex>>) -> Realization {
    Realization::Simplicial(
        SimplicialComplex::close_and_validate(simplices).expect("builtin triangulation is valid"),
    )
}

/// Boundary of the simplex on vertices `0..=dim`, a triangulated
/// `(dim-1)`-sphere.
pub fn simplex_boundary(dim: usize) -> SimplicialComplex {
    let vertices: Vec<Vertex> = (0..=dim as Vertex).collect();
    let facets = (0..vertices.len()).map(|skip| {
        vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect::<Vec<_>>()
    });
    SimplicialComplex::close_and_validate(facets).expect("simplex boundary is valid")
}

fn six_vertex_projective_plane() -> Realization {
    simplicial(
        [
            [0, 1, 3],
            [0, 1, 5],
            [0, 2, 4],
            [0, 2, 5],
            [0, 3, 4],
            [1, 2, 3],
            [1, 2, 4],
            [1, 4, 5],
            [2, 3, 5],
            [3, 4, 5],
        ]
        .iter()
        .map(|t| t.to_vec())
        .collect(),
    )
}

fn seven_vertex_torus() -> Realization {
    let mut triangles = Vec::with_capacity(14);
    for i in 0..7u32 {
        triangles.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        triangles.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    simplicial(triangles)
}

fn single(var: &'static str, min: u64) -> ParamSpec {
    ParamSpec::Fixed(vec![ParamDomain::at_least(var, min)])
}

fn lines(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// The builtin spaces: spheres, rosettes and chains of circles, closed
/// surfaces both ways, real projective spaces, dunce hats, tori up to
/// dimension three and finite CW complexes.
pub fn builtin_catalog() -> Catalog {
    let entries = vec![
        CatalogEntry {
            name: "S".into(),
            description: "n-sphere".into(),
            params: single("n", 0),
            style: ParamStyle::Superscript,
            builder: build_sphere,
            alt_builders: Vec::new(),
            realize: Some(realize_sphere),
            expected_chi: Some(|p| alternating(p[0], 2, 0)),
            recursion: lines(&["S^0 = 2p", "S^n = p(S^(n-1))p"]),
            chi_text: Some("2 if n even, 0 if n odd".into()),
        },
        CatalogEntry {
            name: "rosette".into(),
            description: "rosette (one-point union) of k circles".into(),
            params: single("k", 0),
            style: ParamStyle::Parenthesized,
            builder: build_rosette,
            alt_builders: Vec::new(),
            realize: Some(realize_rosette),
            expected_chi: Some(|p| 1 - signed(p[0])),
            recursion: lines(&["rosette(0) = p", "rosette(k) = rosette(k-1)(2p)p"]),
            chi_text: Some("1-k".into()),
        },
        CatalogEntry {
            name: "chain".into(),
            description: "chain of k touching circles".into(),
            params: single("k", 0),
            style: ParamStyle::Parenthesized,
            builder: build_chain,
            alt_builders: Vec::new(),
            realize: Some(realize_chain),
            expected_chi: Some(|p| 1 - signed(p[0])),
            recursion: lines(&["chain(0) = p", "chain(k) = chain(k-1)(2p)p"]),
            chi_text: Some("1-k".into()),
        },
        CatalogEntry {
            name: "M".into(),
            description: "orientable closed surface of genus g".into(),
            params: single("g", 0),
            style: ParamStyle::Subscript,
            builder: build_orientable,
            alt_builders: vec![AltBuilder {
                label: "p(S^1)rosette(2g)",
                builder: build_orientable_rosette,
            }],
            realize: Some(realize_orientable),
            expected_chi: Some(|p| 2 - 2 * signed(p[0])),
            recursion: lines(&[
                "M_g = p(S^1)chain(g+1)((g+1)*S^1)chain(g+1)(S^1)p",
                "M_g = p(S^1)rosette(2g)",
            ]),
            chi_text: Some("2-2g".into()),
        },
        CatalogEntry {
            name: "N".into(),
            description: "non-orientable closed surface with h crosscaps".into(),
            params: single("h", 1),
            style: ParamStyle::Subscript,
            builder: build_nonorientable,
            alt_builders: vec![AltBuilder {
                label: "p(S^1)rosette(h)",
                builder: build_nonorientable_rosette,
            }],
            realize: Some(realize_nonorientable),
            expected_chi: Some(|p| 2 - signed(p[0])),
            recursion: lines(&[
                "N_1 = S^1(S^1)p",
                "N_2 = S^1(S^1)S^1",
                "N_h = S^1(S^1)chain(h-1)((h-1)*S^1)(h-1)*S^1",
                "N_h = p(S^1)rosette(h)",
            ]),
            chi_text: Some("2-h".into()),
        },
        CatalogEntry {
            name: "RP".into(),
            description: "real projective n-space".into(),
            params: single("n", 0),
            style: ParamStyle::Superscript,
            builder: build_projective,
            alt_builders: Vec::new(),
            realize: Some(realize_projective),
            expected_chi: Some(|p| alternating(p[0], 1, 0)),
            recursion: lines(&["RP^0 = p", "RP^n = p(S^(n-1))RP^(n-1)"]),
            chi_text: Some("1 if n even, 0 if n odd".into()),
        },
        CatalogEntry {
            name: "D".into(),
            description: "n-dimensional dunce hat".into(),
            params: single("n", 0),
            style: ParamStyle::Superscript,
            builder: build_dunce_hat,
            alt_builders: Vec::new(),
            realize: Some(realize_dunce_hat),
            expected_chi: Some(|p| alternating(p[0], 1, 0)),
            recursion: lines(&["D^0 = p", "D^n = p(S^(n-1))D^(n-1)"]),
            chi_text: Some("1 if n even, 0 if n odd".into()),
        },
        CatalogEntry {
            name: "T".into(),
            description: "n-dimensional torus".into(),
            params: ParamSpec::Fixed(vec![ParamDomain::between("n", 1, 3)]),
            style: ParamStyle::Superscript,
            builder: build_torus,
            alt_builders: Vec::new(),
            realize: Some(realize_torus),
            expected_chi: Some(|_| 0),
            recursion: lines(&["T^1 = S^1", "T^2 = M_1", "T^3 = T^2(2*T^2)T^2"]),
            chi_text: Some("0".into()),
        },
        CatalogEntry {
            name: "cw".into(),
            description: "finite CW complex with a_i cells of dimension i".into(),
            params: ParamSpec::Variadic {
                min_len: 1,
                each: ParamDomain::at_least("a_i", 0),
            },
            style: ParamStyle::Parenthesized,
            builder: build_cw,
            alt_builders: Vec::new(),
            realize: Some(realize_cw),
            expected_chi: Some(|p| {
                p.iter()
                    .enumerate()
                    .map(|(i, &a)| if i % 2 == 0 { signed(a) } else { -signed(a) })
                    .sum()
            }),
            recursion: lines(&[
                "cw(a0) = a0 p",
                "cw(a0,...,an) = an p (an*S^(n-1)) cw(a0,...,a(n-1))",
            ]),
            chi_text: Some("sum of (-1)^i a_i".into()),
        },
    ];
    Catalog { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::homology;

    #[test]
    fn sphere_base_case() {
        let app = Catalog::builtin().lookup("S", &[0]).unwrap();
        assert_eq!(app.term, SpaceTerm::Finite(2));
    }

    #[test]
    fn torus_out_of_domain() {
        let err = Catalog::builtin().lookup("T", &[4]).unwrap_err();
        assert!(
            matches!(err, ResolveError::OutOfDomain { value: 4, .. }),
            "{err}"
        );
        assert!(err.to_string().contains("1 <= n <= 3"));
        assert!(Catalog::builtin().lookup("N", &[0]).is_err());
    }

    #[test]
    fn torus_two_is_genus_one_surface() {
        let c = Catalog::builtin();
        assert_eq!(
            c.lookup("M", &[1]).unwrap().term,
            c.lookup("T", &[2]).unwrap().term
        );
    }

    #[test]
    fn arity_and_unknown_names() {
        let c = Catalog::builtin();
        assert!(matches!(
            c.lookup("S", &[]),
            Err(ResolveError::Arity { got: 0, .. })
        ));
        assert!(matches!(
            c.lookup("S", &[1, 2]),
            Err(ResolveError::Arity { got: 2, .. })
        ));
        assert!(matches!(
            c.lookup("cw", &[]),
            Err(ResolveError::Arity { .. })
        ));
        assert_eq!(
            c.lookup("K", &[1]).unwrap_err(),
            ResolveError::UnknownName("K".into())
        );
    }

    #[test]
    fn duplicate_registration_rejected() {
        let mut c = builtin_catalog();
        let again = c.entries()[0].clone();
        assert_eq!(c.register(again), Err(ResolveError::Duplicate("S".into())));
    }

    #[test]
    fn cw_top_cells_peel_off() {
        let t = build_cw(&[4, 6, 4]);
        let expect = decomp(
            vec![SpaceTerm::Finite(4), SpaceTerm::catalog("cw", vec![4, 6])],
            vec![SpaceTerm::copies(4, sphere_ref(1))],
        );
        assert_eq!(t, expect);
        assert_eq!(build_cw(&[3]), SpaceTerm::Finite(3));
    }

    #[test]
    fn triangulations_have_expected_homology() {
        let Realization::Simplicial(rp2) = six_vertex_projective_plane() else {
            unreachable!()
        };
        assert_eq!(rp2.f_vector(), vec![6, 15, 10]);
        let h = homology(&rp2).unwrap();
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion[1], vec![2]);

        let Realization::Simplicial(t2) = seven_vertex_torus() else {
            unreachable!()
        };
        assert_eq!(t2.f_vector(), vec![7, 21, 14]);
        assert_eq!(homology(&t2).unwrap().betti, vec![1, 2, 1]);
    }

    #[test]
    fn rosette_and_chain_models() {
        for k in 0..5u64 {
            for r in realize_rosette(&[k]).into_iter().chain(realize_chain(&[k])) {
                match r {
                    Realization::Simplicial(c) => {
                        let h = homology(&c).unwrap();
                        assert_eq!(h.betti, if k == 0 { vec![1] } else { vec![1, k] });
                    }
                    Realization::Cells(s) => assert_eq!(s.chi_by_cells(), Ok(1 - k as i64)),
                }
            }
        }
    }

    #[test]
    fn listing_order_is_registration_order() {
        let names: Vec<_> = Catalog::builtin()
            .entries()
            .iter()
            .map(|e| e.name.as_str())
            .collect();
        assert_eq!(
            names,
            ["S", "rosette", "chain", "M", "N", "RP", "D", "T", "cw"]
        );
    }
}
