//! Human-readable derivation traces.
//!
//! Each node prints as one line with its arithmetic spelled out, e.g.
//! `χ(p(S^1)rosette(4)) = 1 - 0 + (-3) = -2`. A catalog space that appears
//! more than once is unfolded only the first time.

use std::collections::HashSet;
use std::fmt::Write;

use crate::dsl::render;
use crate::eval::{ChiDerivation, DerivationStep, Rule};
use crate::term::Sign;

/// The right-hand arithmetic of one node, signs explicit and negative
/// values parenthesized: `1 - 0 + (-2) - 0 + (-2) - 0 + 1`.
pub fn arithmetic(d: &ChiDerivation) -> String {
    match d.rule {
        Rule::FiniteCount | Rule::CatalogExpansion => d.chi.to_string(),
        Rule::Multiple => {
            let step = &d.children[0];
            format!("{} * {}", step.multiplicity, paren(step.node.chi))
        }
        Rule::SumAdditivity | Rule::AlternatingSum => signed_terms(&d.children),
    }
}

fn paren(v: i64) -> String {
    if v < 0 {
        format!("({v})")
    } else {
        v.to_string()
    }
}

fn signed_terms(steps: &[DerivationStep]) -> String {
    let mut out = String::new();
    for (i, s) in steps.iter().enumerate() {
        let v = paren(s.node.chi);
        match (i, s.sign) {
            (0, Sign::Plus) => out.push_str(&v),
            (0, Sign::Minus) => {
                let _ = write!(out, "-{v}");
            }
            (_, Sign::Plus) => {
                let _ = write!(out, " + {v}");
            }
            (_, Sign::Minus) => {
                let _ = write!(out, " - {v}");
            }
        }
    }
    out
}

/// Indented multi-line trace of the whole derivation.
pub fn explain(d: &ChiDerivation) -> String {
    let mut out = String::new();
    let mut seen = HashSet::new();
    write_node(&mut out, d, None, 0, &mut seen);
    out
}

fn write_node(
    out: &mut String,
    d: &ChiDerivation,
    step: Option<&DerivationStep>,
    indent: usize,
    seen: &mut HashSet<String>,
) {
    let pad = "  ".repeat(indent);
    let text = render(&d.term);
    let prefix = match step.and_then(|s| s.level) {
        Some(level) => format!("[{level}] "),
        None => String::new(),
    };
    match d.rule {
        Rule::FiniteCount => {
            let _ = writeln!(out, "{pad}{prefix}χ({text}) = {}", d.chi);
        }
        Rule::CatalogExpansion => {
            let body = &d.children[0].node;
            if !seen.insert(text.clone()) {
                let _ = writeln!(out, "{pad}{prefix}χ({text}) = {}  (unfolded above)", d.chi);
                return;
            }
            let _ = writeln!(
                out,
                "{pad}{prefix}χ({text}) = {}  with {text} = {}",
                d.chi,
                render(&body.term)
            );
            write_children(out, d, indent + 1, seen);
        }
        rule => {
            let arith = arithmetic(d);
            let _ = if arith == d.chi.to_string() {
                writeln!(out, "{pad}{prefix}χ({text}) = {arith}  [{rule}]")
            } else {
                writeln!(
                    out,
                    "{pad}{prefix}χ({text}) = {arith} = {}  [{rule}]",
                    d.chi
                )
            };
            write_children(out, d, indent + 1, seen);
        }
    }
}

fn write_children(out: &mut String, d: &ChiDerivation, indent: usize, seen: &mut HashSet<String>) {
    if d.rule == Rule::CatalogExpansion {
        // the body shares the line of its catalog node
        let body = &d.children[0].node;
        match body.rule {
            Rule::FiniteCount => {}
            Rule::CatalogExpansion => write_node(out, body, None, indent, seen),
            _ => {
                let pad = "  ".repeat(indent);
                let _ = writeln!(
                    out,
                    "{pad}= {} = {}  [{}]",
                    arithmetic(body),
                    body.chi,
                    body.rule
                );
                for c in &body.children {
                    write_node(out, &c.node, Some(c), indent + 1, seen);
                }
            }
        }
        return;
    }
    for c in &d.children {
        write_node(out, &c.node, Some(c), indent, seen);
    }
}
