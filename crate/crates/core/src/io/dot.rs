//! Graphviz export. Vertices read `id (sigma)`; strong edges are solid and
//! the others dashed, each labelled with its membership.

use std::fmt::Write;

use crate::connectivity::StrongProfile;
use crate::graph::FuzzyGraph;
use crate::solvers::{Label, Labeling};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// DOT source for `g`. With a labeling, vertices also show `f = ..` and
/// relays (label 2) are drawn bold.
pub fn to_dot(g: &FuzzyGraph, profile: &StrongProfile, labeling: Option<&Labeling>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let mut label = format!("{} ({})", g.id(v), g.sigma(v));
        let mut extra = String::new();
        if let Some(f) = labeling {
            write!(label, "\\nf = {}", f.label(v)).unwrap();
            if f.label(v) == Label::Two {
                extra.push_str(", style=bold");
            }
        }
        writeln!(out, "  {} [label={}{}];", quote(g.id(v)), quote(&label), extra).unwrap();
    }
    for (u, v, m) in g.edges() {
        let style = if profile.is_strong(u, v) { "" } else { ", style=dashed" };
        writeln!(
            out,
            "  {} -- {} [label={}{}];",
            quote(g.id(u)),
            quote(g.id(v)),
            quote(&m.to_string()),
            style
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::strong_profile;
    use crate::fixtures;
    use crate::solvers::gamma_snr;

    #[test]
    fn c6_edges_are_all_solid() {
        let g = fixtures::c6();
        let dot = to_dot(&g, &strong_profile(&g), None);
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(!dot.contains("dashed"));
        assert!(dot.contains("\"u1\" [label=\"u1 (0.5)\"];"));
        assert!(dot.contains("\"u5\" -- \"u6\" [label=\"0.01\"];"));
    }

    #[test]
    fn weak_edge_is_dashed() {
        let g = fixtures::tri_b();
        let dot = to_dot(&g, &strong_profile(&g), None);
        assert!(dot.contains("\"a\" -- \"c\" [label=\"0.2\", style=dashed];"));
        assert_eq!(dot.matches("dashed").count(), 1);
    }

    #[test]
    fn labeling_marks_relays() {
        let g = fixtures::star();
        let p = strong_profile(&g);
        let res = gamma_snr(&p).unwrap();
        let dot = to_dot(&g, &p, res.labeling());
        assert!(dot.contains("\"c\" [label=\"c (0.2)\\nf = 2\", style=bold];"));
    }
}
