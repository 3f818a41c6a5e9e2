//! Acceptance criteria, run in order with one PASS/FAIL line each.
//!
//! Every comparison is exact integer equality. Run with
//! `cargo test -p fibrous-core --test acceptance`.

mod common;

use fibrous_core::oracle::{chi_by_betti, homology, smith_normal_form};
use fibrous_core::{
    chi, expand, parse, render, Catalog, ChiDerivation, CwSkeleton, IntegerMatrix, Realization,
    Rule, SpaceTerm,
};
use std::process::ExitCode;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Every derivation produced by criteria 1-8, for the structural check.
#[derive(Default)]
struct Trees(Vec<ChiDerivation>);

impl Trees {
    fn chi(&mut self, t: &SpaceTerm) -> Result<i64, String> {
        let d = chi(t, Catalog::builtin()).map_err(|e| format!("{}: {e}", render(t)))?;
        let v = d.chi;
        self.0.push(d);
        Ok(v)
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn catalog_chi(trees: &mut Trees, name: &str, n: u64) -> Result<i64, String> {
    trees.chi(&SpaceTerm::catalog(name, vec![n]))
}

fn even_odd(n: u64, even: i64, odd: i64) -> i64 {
    if n.is_multiple_of(2) {
        even
    } else {
        odd
    }
}

fn ac1_finite_spaces(trees: &mut Trees) -> Outcome {
    for n in 0..=20u64 {
        let v = trees.chi(&SpaceTerm::Finite(n))?;
        ensure!(v == n as i64, "χ({n}p) = {v}");
    }
    Ok("χ(n points) = n for n in 0..=20".into())
}

fn ac2_rosettes_and_chains(trees: &mut Trees) -> Outcome {
    let catalog = Catalog::builtin();
    for n in 1..=8u64 {
        for name in ["rosette", "chain"] {
            // the canonical step is literally X0(2p)p with X0 one circle fewer
            let step = catalog
                .resolve(&fibrous_core::CatalogRef::new(name, vec![n]))
                .unwrap();
            let want_step = parse(&format!("{name}({})(2p)p", n - 1)).unwrap();
            ensure!(
                step == want_step,
                "{name}({n}) unfolds to {}",
                render(&step)
            );
            let v = catalog_chi(trees, name, n)?;
            ensure!(v == 1 - n as i64, "χ({name}({n})) = {v}");
        }
    }
    Ok("χ(rosette(n)) = χ(chain(n)) = 1-n for n in 1..=8".into())
}

fn ac3_spheres(trees: &mut Trees) -> Outcome {
    for n in 0..=8u64 {
        let v = catalog_chi(trees, "S", n)?;
        ensure!(v == even_odd(n, 2, 0), "χ(S^{n}) = {v}");
        if n >= 1 {
            let by_hand = trees.chi(&parse(&format!("p(S^{})p", n - 1)).unwrap())?;
            ensure!(by_hand == v, "p(S^{})p gives {by_hand}", n - 1);
        }
        if n <= 4 {
            let c = fibrous_core::catalog::simplex_boundary(n as usize + 1);
            let faces = c.chi_by_faces();
            let betti = chi_by_betti(&c).map_err(|e| e.to_string())?;
            ensure!(
                faces == v && betti == v,
                "S^{n} oracle faces {faces}, betti {betti}, decomposition {v}"
            );
        }
    }
    Ok("χ(S^n) = 2,0,2,... for n in 0..=8; simplicial oracle agrees for n <= 4".into())
}

fn ac4_surfaces(trees: &mut Trees) -> Outcome {
    let catalog = Catalog::builtin();
    let m = catalog.entry("M").unwrap();
    for g in 0..=8u64 {
        let chain_based = trees.chi(&(m.builder)(&[g]))?;
        let rosette_based = trees.chi(&(m.alt_builders[0].builder)(&[g]))?;
        let printed = trees
            .chi(&parse(&format!("p(S^1)chain({0})({0}*S^1)chain({0})(S^1)p", g + 1)).unwrap())?;
        let cells = CwSkeleton::new(vec![1, 2 * g, 1])
            .unwrap()
            .chi_by_cells()
            .unwrap();
        let want = 2 - 2 * g as i64;
        ensure!(
            [chain_based, rosette_based, printed, cells].iter().all(|&v| v == want),
            "M_{g}: chain {chain_based}, rosette {rosette_based}, printed {printed}, cells {cells}, want {want}"
        );
    }
    let n = catalog.entry("N").unwrap();
    for h in 1..=8u64 {
        let chain_based = trees.chi(&(n.builder)(&[h]))?;
        let rosette_based = trees.chi(&(n.alt_builders[0].builder)(&[h]))?;
        let want = 2 - h as i64;
        ensure!(
            chain_based == want && rosette_based == want,
            "N_{h}: {chain_based}, {rosette_based}"
        );
    }
    for (text, want) in [
        ("S^1(S^1)p", 1),
        ("S^1(S^1)S^1", 0),
        ("S^1(S^1)chain(2)(2*S^1)2*S^1", -1),
    ] {
        let v = trees.chi(&parse(text).unwrap())?;
        ensure!(v == want, "{text} gives {v}");
    }
    let app = catalog.lookup("N", &[1]).unwrap();
    let rp2 = app
        .realizations
        .iter()
        .find_map(|r| match r {
            Realization::Simplicial(c) => Some(c),
            _ => None,
        })
        .ok_or("N_1 has no triangulation")?;
    ensure!(
        rp2.f_vector()[0] == 6,
        "projective plane model has {} vertices",
        rp2.f_vector()[0]
    );
    let h = homology(rp2).map_err(|e| e.to_string())?;
    ensure!(
        rp2.chi_by_faces() == 1 && h.euler_characteristic() == 1,
        "χ(RP^2 model) != 1"
    );
    ensure!(
        h.torsion[1] == vec![2],
        "H_1 torsion of RP^2 model is {:?}",
        h.torsion[1]
    );
    Ok("χ(M_g) = 2-2g (g <= 8) and χ(N_h) = 2-h (h <= 8) both ways; 6-vertex RP^2: χ = 1, H_1 = Z/2".into())
}

fn ac5_projective(trees: &mut Trees) -> Outcome {
    for n in 0..=8u64 {
        let v = catalog_chi(trees, "RP", n)?;
        ensure!(v == even_odd(n, 1, 0), "χ(RP^{n}) = {v}");
        if n >= 1 {
            let step = trees.chi(&parse(&format!("p(S^{0})RP^{0}", n - 1)).unwrap())?;
            ensure!(step == v, "p(S^{0})RP^{0} gives {step}", n - 1);
        }
    }
    Ok("χ(RP^n) = 1,0,1,... for n in 0..=8".into())
}

fn ac6_dunce_hats(trees: &mut Trees) -> Outcome {
    for n in 0..=8u64 {
        let v = catalog_chi(trees, "D", n)?;
        ensure!(v == even_odd(n, 1, 0), "χ(D^{n}) = {v}");
        if n >= 1 {
            let step = trees.chi(&parse(&format!("p(S^{0})D^{0}", n - 1)).unwrap())?;
            ensure!(step == v, "p(S^{0})D^{0} gives {step}", n - 1);
        }
    }
    Ok("χ(D^n) = 1,0,1,... for n in 0..=8".into())
}

fn ac7_three_torus(trees: &mut Trees) -> Outcome {
    let v = trees.chi(&parse("T^2(2*T^2)T^2").unwrap())?;
    let named = catalog_chi(trees, "T", 3)?;
    let cells = CwSkeleton::new(vec![1, 3, 3, 1])
        .unwrap()
        .chi_by_cells()
        .unwrap();
    ensure!(
        v == 0 && named == 0 && cells == 0,
        "T^3: decomposition {v}, catalog {named}, cells {cells}"
    );
    Ok("χ(T^3) = 0 via T^2(2*T^2)T^2 and via cells [1,3,3,1]".into())
}

fn ac8_cw_complexes(trees: &mut Trees) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(common::SEED ^ 8);
    for _ in 0..50 {
        let counts = common::random_cells(&mut rng);
        let want: i64 = counts
            .iter()
            .enumerate()
            .map(|(i, &a)| if i % 2 == 0 { a as i64 } else { -(a as i64) })
            .sum();
        let v = trees.chi(&SpaceTerm::catalog("cw", counts.clone()))?;
        ensure!(v == want, "cw{counts:?}: {v} vs {want}");
    }
    Ok("50 random cell vectors: χ(cw(...)) = Σ(-1)^i α_i".into())
}

fn ac9_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(common::SEED ^ 9);
    for i in 0..200 {
        let c = common::random_complex(&mut rng);
        let (faces, betti) = (
            c.chi_by_faces(),
            chi_by_betti(&c).map_err(|e| e.to_string())?,
        );
        ensure!(faces == betti, "complex #{i}: faces {faces}, betti {betti}");
        for k in 2..=c.dimension() {
            let dd = c
                .boundary_matrix(k - 1)
                .and_then(|a| a.checked_mul(&c.boundary_matrix(k)?))
                .map_err(|e| e.to_string())?;
            ensure!(dd.is_zero(), "complex #{i}: ∂∂ != 0 at k = {k}");
        }
    }
    for i in 0..200 {
        let m = common::random_matrix(&mut rng);
        let snf =
            smith_normal_form(&IntegerMatrix::from_rows(&m).unwrap()).map_err(|e| e.to_string())?;
        let minors = common::gcd_of_minors(&m);
        let mut prod = 1i128;
        for (j, g) in minors.iter().enumerate() {
            let want = if j < snf.rank {
                prod *= snf.invariant_factors[j] as i128;
                prod
            } else {
                0
            };
            ensure!(
                want == *g,
                "matrix #{i} {m:?}: d_1..d_{} = {want}, minors gcd {g}",
                j + 1
            );
        }
        ensure!(
            snf.rank == common::bareiss_rank(&m),
            "matrix #{i}: rank mismatch"
        );
    }
    for i in 0..500 {
        let t = common::random_term(&mut rng, 4);
        let text = render(&t);
        let back = parse(&text).map_err(|e| format!("term #{i} `{text}`: {e}"))?;
        ensure!(back == t, "term #{i} `{text}` does not round-trip");
    }
    let catalog = Catalog::builtin();
    for (name, params) in common::catalog_sweep(&mut rng) {
        let t = SpaceTerm::catalog(name.clone(), params.clone());
        let e = expand(&t, catalog).map_err(|e| e.to_string())?;
        let (a, b) = (chi(&t, catalog).unwrap().chi, chi(&e, catalog).unwrap().chi);
        ensure!(
            e.is_catalog_free() && a == b,
            "{name}{params:?}: {a} vs expanded {b}"
        );
    }
    Ok("200 complexes (faces = betti, ∂∂ = 0), 200 SNFs vs minors, 500 round-trips, expansion sweep".into())
}

fn ac10_soundness(trees: &Trees) -> Outcome {
    let mut nodes = 0usize;
    let mut alternating = 0usize;
    for tree in &trees.0 {
        for node in tree.nodes() {
            nodes += 1;
            if node.rule == Rule::AlternatingSum {
                alternating += 1;
                ensure!(
                    node.node_is_sound(),
                    "unsound alternating sum at {}",
                    render(&node.term)
                );
            }
        }
        ensure!(
            tree.is_sound(),
            "unsound derivation for {}",
            render(&tree.term)
        );
    }
    ensure!(alternating > 0, "no alternating-sum nodes were produced");
    Ok(format!(
        "{alternating} alternating-sum nodes re-summed across {} trees ({nodes} nodes)",
        trees.0.len()
    ))
}

fn main() -> ExitCode {
    let mut trees = Trees::default();
    let mut results: Vec<(&str, Outcome)> = vec![
        ("AC1  finite spaces", ac1_finite_spaces(&mut trees)),
        (
            "AC2  rosettes and chains",
            ac2_rosettes_and_chains(&mut trees),
        ),
        ("AC3  spheres", ac3_spheres(&mut trees)),
        ("AC4  closed surfaces", ac4_surfaces(&mut trees)),
        ("AC5  real projective spaces", ac5_projective(&mut trees)),
        ("AC6  dunce hats", ac6_dunce_hats(&mut trees)),
        ("AC7  three-torus", ac7_three_torus(&mut trees)),
        ("AC8  finite CW complexes", ac8_cw_complexes(&mut trees)),
        ("AC9  property suite", ac9_properties()),
    ];
    results.push(("AC10 derivation soundness", ac10_soundness(&trees)));

    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
