//! Graphviz output. Only cover relations are drawn and nodes are emitted in
//! id order, so output is stable across runs.

use std::fmt::Write;

use crate::bitop::BiTopSpace;
use crate::bits;
use crate::dlattice::DLattice;
use crate::lattice::FinitePoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn hasse_body(out: &mut String, prefix: &str, p: &FinitePoset, indent: &str) {
    for a in 0..p.len() {
        let _ = writeln!(out, "{indent}{} [label={}];", quote(&format!("{prefix}{a}")), quote(p.label(a)));
    }
    for (a, b) in p.covers() {
        let _ = writeln!(out, "{indent}{} -> {};", quote(&format!("{prefix}{a}")), quote(&format!("{prefix}{b}")));
    }
}

/// Hasse diagram, bottom to top.
pub fn poset_dot(p: &FinitePoset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
    hasse_body(&mut out, "n", p, "  ");
    out.push_str("}\n");
    out
}

/// Both coordinate lattices side by side; elements that occur in a pair of
/// `con ∩ tot` are filled.
pub fn dlattice_dot(dl: &DLattice) -> String {
    let mut out = String::from("digraph dlattice {\n  rankdir=BT;\n  node [shape=circle];\n");
    let both: Vec<(usize, usize)> = dl.con().filter(|&x| dl.in_tot(x)).map(|x| dl.coords(x)).collect();
    for (name, lat, prefix, pick) in [
        ("plus", dl.plus(), "p", 0usize),
        ("minus", dl.minus(), "m", 1usize),
    ] {
        let _ = writeln!(out, "  subgraph cluster_{name} {{\n    label={};", quote(name));
        hasse_body(&mut out, prefix, lat.poset(), "    ");
        for a in lat.elements() {
            if both.iter().any(|&(x, y)| [x, y][pick] == a) {
                let _ = writeln!(out, "    {} [style=filled, fillcolor=lightgrey];", quote(&format!("{prefix}{a}")));
            }
        }
        out.push_str("  }\n");
    }
    for (a, b) in both {
        let _ = writeln!(
            out,
            "  {} -> {} [dir=none, style=dashed, constraint=false];",
            quote(&format!("p{a}")),
            quote(&format!("m{b}"))
        );
    }
    out.push_str("}\n");
    out
}

/// Covers of a preorder given by rows of up-sets; equivalent points are
/// joined by an undirected edge.
fn preorder_edges(rows: &[bits::Mask]) -> Vec<(usize, usize, bool)> {
    let n = rows.len();
    let strictly = |a: usize, b: usize| bits::contains(rows[a], b) && !bits::contains(rows[b], a);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a < b && bits::contains(rows[a], b) && bits::contains(rows[b], a) {
                edges.push((a, b, true));
            } else if strictly(a, b) && !(0..n).any(|c| strictly(a, c) && strictly(c, b)) {
                edges.push((a, b, false));
            }
        }
    }
    edges
}

/// Both specialization preorders of the space.
pub fn bitop_dot(x: &BiTopSpace) -> String {
    let s = x.specialization();
    let mut out = String::from("digraph bitop {\n  rankdir=BT;\n  node [shape=circle];\n");
    for (name, rows, prefix) in [("plus", &s.leq_plus, "p"), ("minus", &s.leq_minus, "m")] {
        let _ = writeln!(out, "  subgraph cluster_{name} {{\n    label={};", quote(name));
        for (i, l) in x.labels().iter().enumerate() {
            let _ = writeln!(out, "    {} [label={}];", quote(&format!("{prefix}{i}")), quote(l));
        }
        for (a, b, equiv) in preorder_edges(rows) {
            let style = if equiv { " [dir=none]" } else { "" };
            let _ = writeln!(out, "    {} -> {}{style};", quote(&format!("{prefix}{a}")), quote(&format!("{prefix}{b}")));
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitop::stone_space_from_poset;
    use crate::dlattice::bool4;

    #[test]
    fn chain_covers_only() {
        let d = poset_dot(&FinitePoset::chain(3));
        assert_eq!(d.matches("->").count(), 2);
        assert!(d.contains("\"n0\" -> \"n1\""));
        assert_eq!(d, poset_dot(&FinitePoset::chain(3)));
    }

    #[test]
    fn bool4_links_tt_and_ff() {
        // con ∩ tot of 𝔹 is {tt, ff}
        let d = dlattice_dot(&bool4());
        assert_eq!(d.matches("constraint=false").count(), 2);
    }

    #[test]
    fn bitop_edges() {
        let d = bitop_dot(&stone_space_from_poset(&FinitePoset::chain(2)));
        assert_eq!(d.matches("->").count(), 2);
    }
}
