//! Generators and independent reference computations shared by the
//! integration tests. Nothing here calls into the code paths it checks.

#![allow(dead_code)]

use fibrous_core::{Catalog, SimplicialComplex, SpaceTerm};
use rand::seq::SliceRandom;
use rand::Rng;

/// Seed for every seeded generator in the suites; change it to explore.
pub const SEED: u64 = 0x0066_6962_726f_7573;

/// Parameter tuples swept for each catalog entry.
pub fn catalog_sweep(rng: &mut impl Rng) -> Vec<(String, Vec<u64>)> {
    let mut out = Vec::new();
    for entry in Catalog::builtin().entries() {
        let name = entry.name.clone();
        match name.as_str() {
            "T" => out.extend((1..=3).map(|n| (name.clone(), vec![n]))),
            "N" => out.extend((1..=8).map(|h| (name.clone(), vec![h]))),
            "cw" => out.extend((0..20).map(|_| (name.clone(), random_cells(rng)))),
            _ => out.extend((0..=8).map(|n| (name.clone(), vec![n]))),
        }
    }
    out
}

/// Cell counts of length 1..=5 with entries in 0..=9 and a positive top.
pub fn random_cells(rng: &mut impl Rng) -> Vec<u64> {
    let len = rng.gen_range(1..=5);
    let mut v: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=9)).collect();
    v[len - 1] = rng.gen_range(1..=9);
    v
}

fn random_catalog_ref(rng: &mut impl Rng) -> SpaceTerm {
    let (name, params): (&str, Vec<u64>) = match rng.gen_range(0..9) {
        0 => ("S", vec![rng.gen_range(0..=4)]),
        1 => ("rosette", vec![rng.gen_range(0..=4)]),
        2 => ("chain", vec![rng.gen_range(0..=4)]),
        3 => ("M", vec![rng.gen_range(0..=3)]),
        4 => ("N", vec![rng.gen_range(1..=4)]),
        5 => ("RP", vec![rng.gen_range(0..=4)]),
        6 => ("D", vec![rng.gen_range(0..=4)]),
        7 => ("T", vec![rng.gen_range(1..=3)]),
        _ => ("cw", random_cells(rng)),
    };
    SpaceTerm::catalog(name, params)
}

/// A random well-formed term over the builtin catalog.
pub fn random_term(rng: &mut impl Rng, depth: u32) -> SpaceTerm {
    let leaf = depth == 0 || rng.gen_bool(0.3);
    if leaf {
        return if rng.gen_bool(0.5) {
            SpaceTerm::Finite(rng.gen_range(0..=5))
        } else {
            random_catalog_ref(rng)
        };
    }
    match rng.gen_range(0..4) {
        0 => {
            let n = rng.gen_range(2..=3);
            SpaceTerm::sum((0..n).map(|_| random_term(rng, depth - 1)).collect()).unwrap()
        }
        1 => SpaceTerm::multiple(rng.gen_range(1..=4), random_term(rng, depth - 1)).unwrap(),
        _ => {
            let n = rng.gen_range(0..=3);
            let trans = (0..=n).map(|_| random_term(rng, depth - 1)).collect();
            let run = (0..n).map(|_| random_term(rng, depth - 1)).collect();
            SpaceTerm::decomp(trans, run).unwrap()
        }
    }
}

/// Downward closure of 1..=6 random simplices of 1..=4 vertices drawn from
/// at most 8 labels.
pub fn random_complex(rng: &mut impl Rng) -> SimplicialComplex {
    let labels: Vec<u32> = (0..rng.gen_range(1..=8)).collect();
    let count = rng.gen_range(1..=6);
    let simplices: Vec<Vec<u32>> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=4.min(labels.len()));
            labels.choose_multiple(rng, size).copied().collect()
        })
        .collect();
    SimplicialComplex::close_and_validate(simplices).unwrap()
}

/// Matrix of size up to 6x6 with entries in -9..=9, biased toward zeros so
/// that rank deficiency and torsion show up.
pub fn random_matrix(rng: &mut impl Rng) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=6);
    let cols = rng.gen_range(1..=6);
    let zero_bias = rng.gen_range(0.0..0.7);
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.gen_bool(zero_bias) {
                        0
                    } else {
                        rng.gen_range(-9..=9)
                    }
                })
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn det_laplace(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        _ => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| [&row[..j], &row[j + 1..]].concat())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det_laplace(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `g[i-1]` = gcd of all `i x i` minors, for `i = 1..=min(rows, cols)`.
pub fn gcd_of_minors(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (1..=rows.min(cols))
        .map(|i| {
            let mut g = 0;
            for rs in combinations(rows, i) {
                for cs in combinations(cols, i) {
                    let sub: Vec<Vec<i128>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                        .collect();
                    g = gcd(g, det_laplace(&sub));
                }
            }
            g
        })
        .collect()
}

/// Rank by fraction-free (Bareiss) elimination over i128.
pub fn bareiss_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Connected components of the 1-skeleton by union-find.
pub fn components(c: &SimplicialComplex) -> usize {
    let verts: Vec<u32> = c.simplices(0).iter().map(|v| v[0]).collect();
    let index = |v: u32| verts.binary_search(&v).unwrap();
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut x = x;
        while parent[x] != r {
            let next = parent[x];
            parent[x] = r;
            x = next;
        }
        r
    }
    for e in c.simplices(1) {
        let (a, b) = (
            find(&mut parent, index(e[0])),
            find(&mut parent, index(e[1])),
        );
        parent[a] = b;
    }
    (0..verts.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count()
}
