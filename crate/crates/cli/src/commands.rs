use std::fmt::Write as _;
use std::path::Path;

use fibrous_core::catalog::ParamStyle;
use fibrous_core::oracle::chi_by_betti;
use fibrous_core::{
    chi, fibrous_rank, parse, render, trace, Catalog, CatalogEntry, CwSkeleton, OracleError,
    ParamSpec, Realization, SimplicialComplex, SpaceTerm,
};
use rayon::prelude::*;
use serde::Deserialize;

use crate::error::CliError;
use crate::report::{
    CatalogListing, ComplexReport, DerivationNode, DerivationReport, OracleCheck, Route, VerifyRow,
};

/// Default upper end of the `verify` sweep.
pub const DEFAULT_VERIFY_MAX: u64 = 8;

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

/// Runs every oracle route available for the given models.
pub fn oracle_checks(
    realizations: &[Realization],
    want: i64,
) -> Result<Vec<OracleCheck>, OracleError> {
    let mut out = Vec::new();
    for r in realizations {
        match r {
            Realization::Simplicial(c) => {
                let faces = c.chi_by_faces();
                out.push(OracleCheck {
                    route: Route::Faces,
                    chi: faces,
                    matches: faces == want,
                });
                let betti = chi_by_betti(c)?;
                out.push(OracleCheck {
                    route: Route::Betti,
                    chi: betti,
                    matches: betti == want,
                });
            }
            Realization::Cells(k) => {
                let cells = k.chi_by_cells()?;
                out.push(OracleCheck {
                    route: Route::Cells,
                    chi: cells,
                    matches: cells == want,
                });
            }
        }
    }
    Ok(out)
}

fn route_name(r: Route) -> &'static str {
    match r {
        Route::Faces => "faces",
        Route::Betti => "betti",
        Route::Cells => "cells",
    }
}

pub fn eval(expr: &str, explain: bool, json: bool) -> Result<String, CliError> {
    let catalog = Catalog::builtin();
    let term = parse(expr).map_err(|error| CliError::Parse {
        text: expr.to_string(),
        error,
    })?;
    let derivation = chi(&term, catalog)?;
    let oracle = match &term {
        SpaceTerm::CatalogRef(r) => {
            let app = catalog
                .lookup(&r.name, &r.params)
                .map_err(fibrous_core::EvalError::from)?;
            oracle_checks(&app.realizations, derivation.chi)?
        }
        _ => Vec::new(),
    };
    let report = DerivationReport {
        expr: expr.to_string(),
        chi: derivation.chi,
        derivation: DerivationNode::from(&derivation),
        oracle,
    };
    let mut out = String::new();
    if json {
        out.push_str(&to_json(&report));
        out.push('\n');
    } else {
        if explain {
            out.push_str(&trace::explain(&derivation));
            if !out.ends_with('\n') {
                out.push('\n');
            }
            let rank = fibrous_rank(&term, catalog)?;
            writeln!(out, "fibrous rank: {rank}").unwrap();
        }
        writeln!(out, "χ({}) = {}", render(&term), report.chi).unwrap();
        for o in &report.oracle {
            let mark = if o.matches { "agrees" } else { "DISAGREES" };
            writeln!(
                out,
                "oracle {}: χ = {} ({mark})",
                route_name(o.route),
                o.chi
            )
            .unwrap();
        }
    }
    if report.derivation.resum() != report.chi {
        return Err(CliError::Verify(format!(
            "derivation tree does not re-sum to χ = {}",
            report.chi
        )));
    }
    if !report.all_match() {
        return Err(CliError::Verify(format!(
            "oracle disagrees with χ = {} for {expr}\n{out}",
            report.chi
        )));
    }
    Ok(out)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Parameter tuples swept by `verify` for one entry.
fn verify_params(
    entry: &CatalogEntry,
    min: Option<u64>,
    max: u64,
) -> Result<Vec<Vec<u64>>, CliError> {
    let params: Vec<Vec<u64>> = match &entry.params {
        ParamSpec::Fixed(domains) if domains.len() == 1 => {
            let d = domains[0];
            let lo = min.unwrap_or(d.min).max(d.min);
            let hi = d.max.map_or(max, |m| m.min(max));
            (lo..=hi).map(|n| vec![n]).collect()
        }
        // cell counts of the boundary of the (n+1)-simplex, one row per n
        ParamSpec::Variadic { .. } => (min.unwrap_or(0)..=max)
            .map(|n| (0..=n).map(|i| binomial(n + 2, i + 1)).collect())
            .collect(),
        ParamSpec::Fixed(_) => {
            return Err(CliError::Usage {
                message: format!("{} takes several parameters; cannot sweep it", entry.name),
            })
        }
    };
    if params.is_empty() {
        return Err(CliError::Usage {
            message: format!(
                "empty parameter range for {} ({})",
                entry.name, entry.params
            ),
        });
    }
    Ok(params)
}

fn verify_row(entry: &CatalogEntry, params: Vec<u64>) -> Result<VerifyRow, CliError> {
    let catalog = Catalog::builtin();
    let app = catalog
        .lookup(&entry.name, &params)
        .map_err(fibrous_core::EvalError::from)?;
    let value = chi(&app.term, catalog)?.chi;
    let expected = entry.expected_chi.map(|f| f(&params));
    let alternatives = entry
        .alt_builders
        .iter()
        .map(|a| chi(&(a.builder)(&params), catalog).map(|d| d.chi))
        .collect::<Result<Vec<_>, _>>()?;
    let oracle = oracle_checks(&app.realizations, value)?;
    let pass = expected.is_none_or(|e| e == value)
        && alternatives.iter().all(|&a| a == value)
        && oracle.iter().all(|o| o.matches);
    Ok(VerifyRow {
        params,
        chi: value,
        expected,
        alternatives,
        oracle,
        pass,
    })
}

pub fn verify(name: &str, min: Option<u64>, max: u64, json: bool) -> Result<String, CliError> {
    let catalog = Catalog::builtin();
    let entry = catalog.entry(name).ok_or_else(|| {
        fibrous_core::EvalError::from(fibrous_core::ResolveError::UnknownName(name.to_string()))
    })?;
    let rows: Vec<VerifyRow> = verify_params(entry, min, max)?
        .into_par_iter()
        .map(|p| verify_row(entry, p))
        .collect::<Result<_, _>>()?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    let mut out = String::new();
    if json {
        out.push_str(&to_json(&rows));
        out.push('\n');
    } else {
        let labels: Vec<String> = rows
            .iter()
            .map(|r| render(&SpaceTerm::catalog(name, r.params.clone())))
            .collect();
        let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        for (row, label) in rows.iter().zip(&labels) {
            write!(out, "{label:<width$}  χ = {:>4}", row.chi).unwrap();
            if let Some(e) = row.expected {
                write!(out, "  expected {e:>4}").unwrap();
            }
            for (alt, v) in entry.alt_builders.iter().zip(&row.alternatives) {
                write!(out, "  {} {v:>4}", alt.label).unwrap();
            }
            for o in &row.oracle {
                write!(out, "  {} {:>4}", route_name(o.route), o.chi).unwrap();
            }
            writeln!(out, "  {}", if row.pass { "PASS" } else { "FAIL" }).unwrap();
        }
        writeln!(
            out,
            "{} rows, {} passed, {failed} failed",
            rows.len(),
            rows.len() - failed
        )
        .unwrap();
    }
    if failed > 0 {
        return Err(CliError::Verify(format!(
            "{failed} of {} rows failed for {name}\n{out}",
            rows.len()
        )));
    }
    Ok(out)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SimplicialInput {
    maximal_simplices: Vec<Vec<u32>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CellInput {
    cell_counts: Vec<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ComplexInput {
    Simplicial(SimplicialInput),
    Cells(CellInput),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ComplexQuery {
    /// Euler characteristic by every available route
    Chi,
    /// Betti numbers and torsion coefficients
    Betti,
}

enum Complex {
    Simplicial(SimplicialComplex),
    Cells(CwSkeleton),
}

fn read_complex(path: &Path) -> Result<Complex, CliError> {
    let text = std::fs::read_to_string(path).map_err(|error| CliError::Io {
        path: path.to_path_buf(),
        error,
    })?;
    let schema = |message: String| CliError::Schema {
        path: path.to_path_buf(),
        message,
    };
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| schema(e.to_string()))?;
    let input: ComplexInput = serde_json::from_value(value).map_err(|_| {
        schema(
            "expected {\"maximal_simplices\": [[vertex, ...], ...]} or {\"cell_counts\": [count, ...]}".to_string(),
        )
    })?;
    Ok(match input {
        ComplexInput::Simplicial(s) => {
            Complex::Simplicial(SimplicialComplex::close_and_validate(s.maximal_simplices)?)
        }
        ComplexInput::Cells(c) => Complex::Cells(CwSkeleton::new(c.cell_counts)?),
    })
}

pub fn complex(query: ComplexQuery, path: &Path, json: bool) -> Result<String, CliError> {
    let input = read_complex(path)?;
    let mut report = ComplexReport {
        f_vector: None,
        cell_counts: None,
        chi_by_faces: None,
        chi_by_betti: None,
        chi_by_cells: None,
        betti: None,
        torsion: None,
    };
    match (&input, query) {
        (Complex::Simplicial(c), ComplexQuery::Chi) => {
            report.f_vector = Some(c.f_vector());
            report.chi_by_faces = Some(c.chi_by_faces());
            report.chi_by_betti = Some(chi_by_betti(c)?);
        }
        (Complex::Simplicial(c), ComplexQuery::Betti) => {
            let h = fibrous_core::oracle::homology(c)?;
            report.f_vector = Some(c.f_vector());
            report.betti = Some(h.betti);
            report.torsion = Some(h.torsion);
        }
        (Complex::Cells(k), ComplexQuery::Chi) => {
            report.cell_counts = Some(k.cell_counts().to_vec());
            report.chi_by_cells = Some(k.chi_by_cells()?);
        }
        (Complex::Cells(_), ComplexQuery::Betti) => {
            return Err(CliError::Schema {
                path: path.to_path_buf(),
                message:
                    "betti numbers need \"maximal_simplices\"; cell counts carry no attaching maps"
                        .to_string(),
            })
        }
    }
    let out = if json {
        to_json(&report) + "\n"
    } else {
        complex_text(&report)
    };
    if let (Some(f), Some(b)) = (report.chi_by_faces, report.chi_by_betti) {
        if f != b {
            return Err(CliError::Verify(format!(
                "faces give χ = {f} but betti numbers give χ = {b}\n{out}"
            )));
        }
    }
    Ok(out)
}

fn list(v: &[impl ToString]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn complex_text(r: &ComplexReport) -> String {
    let mut out = String::new();
    if let Some(f) = &r.f_vector {
        writeln!(out, "f-vector: {}", list(f)).unwrap();
    }
    if let Some(c) = &r.cell_counts {
        writeln!(out, "cell counts: {}", list(c)).unwrap();
    }
    if let Some(v) = r.chi_by_faces {
        writeln!(out, "χ by faces: {v}").unwrap();
    }
    if let Some(v) = r.chi_by_betti {
        writeln!(out, "χ by betti: {v}").unwrap();
    }
    if let Some(v) = r.chi_by_cells {
        writeln!(out, "χ by cells: {v}").unwrap();
    }
    if let (Some(b), Some(t)) = (&r.betti, &r.torsion) {
        for (k, (beta, tors)) in b.iter().zip(t).enumerate() {
            write!(out, "β_{k} = {beta}").unwrap();
            if !tors.is_empty() {
                let parts: Vec<String> = tors.iter().map(|d| format!("Z/{d}")).collect();
                write!(out, "  torsion {}", parts.join(" + ")).unwrap();
            }
            out.push('\n');
        }
    }
    out
}

/// Generic notation such as `S^n`, `M_g` or `cw(a_0,...,a_n)`.
pub fn notation(entry: &CatalogEntry) -> String {
    match &entry.params {
        ParamSpec::Variadic { each, .. } => {
            format!(
                "{0}({1}_0,...,{1}_n)",
                entry.name,
                each.var.trim_end_matches("_i")
            )
        }
        ParamSpec::Fixed(d) => {
            let vars: Vec<&str> = d.iter().map(|p| p.var).collect();
            match (entry.style, vars.as_slice()) {
                (ParamStyle::Superscript, [v]) => format!("{}^{v}", entry.name),
                (ParamStyle::Subscript, [v]) => format!("{}_{v}", entry.name),
                _ => format!("{}({})", entry.name, vars.join(",")),
            }
        }
    }
}

pub fn catalog(json: bool) -> String {
    let listings: Vec<CatalogListing> = Catalog::builtin()
        .entries()
        .iter()
        .map(|e| CatalogListing {
            name: e.name.clone(),
            notation: notation(e),
            description: e.description.clone(),
            domain: e.params.to_string(),
            recursion: e.recursion.clone(),
            chi: e.chi_text.clone(),
            realization: e.realize.is_some(),
        })
        .collect();
    if json {
        return to_json(&listings) + "\n";
    }
    let mut out = String::new();
    for l in &listings {
        writeln!(out, "{}  {}", l.notation, l.description).unwrap();
        writeln!(out, "  domain:      {}", l.domain).unwrap();
        for (i, r) in l.recursion.iter().enumerate() {
            writeln!(out, "  {:<12} {r}", if i == 0 { "recursion:" } else { "" }).unwrap();
        }
        if let Some(c) = &l.chi {
            writeln!(out, "  χ:           {c}").unwrap();
        }
        writeln!(
            out,
            "  realization: {}",
            if l.realization { "yes" } else { "no" }
        )
        .unwrap();
        out.push('\n');
    }
    out
}
