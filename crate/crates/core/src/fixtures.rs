//! Canonical small instances used throughout the tests, examples and docs.
//!
//! The same graphs ship as JSON documents under `crates/core/fixtures/`.

use crate::graph::FuzzyGraph;
use crate::rational::Rational;

fn r(s: &str) -> Rational {
    s.parse().expect("fixture literal")
}

fn build(vertices: &[(&str, &str)], edges: &[(&str, &str, &str)]) -> FuzzyGraph {
    FuzzyGraph::build(
        vertices.iter().map(|&(id, s)| (id, r(s))),
        edges.iter().map(|&(u, v, m)| (u, v, r(m))),
    )
    .expect("fixture is a valid fuzzy graph")
}

/// Three vertices of membership 0.5 and no edges.
pub fn empty3() -> FuzzyGraph {
    build(&[("a", "0.5"), ("b", "0.5"), ("c", "0.5")], &[])
}

/// A single effective edge `u - v` with all memberships 0.3.
pub fn edge() -> FuzzyGraph {
    build(&[("u", "0.3"), ("v", "0.3")], &[("u", "v", "0.3")])
}

/// Triangle with weights ab = 0.5, bc = 0.3, ac = 0.3 (two minimum edges).
pub fn tri_a() -> FuzzyGraph {
    build(
        &[("a", "1"), ("b", "1"), ("c", "1")],
        &[("a", "b", "0.5"), ("b", "c", "0.3"), ("a", "c", "0.3")],
    )
}

/// Triangle with weights ab = 0.5, bc = 0.3, ac = 0.2; `ac` is not strong.
pub fn tri_b() -> FuzzyGraph {
    build(
        &[("a", "1"), ("b", "1"), ("c", "1")],
        &[("a", "b", "0.5"), ("b", "c", "0.3"), ("a", "c", "0.2")],
    )
}

/// Star whose centre `c` (0.2) reaches leaves of membership 0.4, 0.3, 0.4, 0.4
/// through edges of weight 0.2. Attains `p - max(d_SN - sigma)`.
pub fn star() -> FuzzyGraph {
    build(
        &[
            ("c", "0.2"),
            ("l1", "0.4"),
            ("l2", "0.3"),
            ("l3", "0.4"),
            ("l4", "0.4"),
        ],
        &[
            ("c", "l1", "0.2"),
            ("c", "l2", "0.2"),
            ("c", "l3", "0.2"),
            ("c", "l4", "0.2"),
        ],
    )
}

/// Complete bipartite graph with X = {x1: 0.1, x2: 0.3}, Y = three vertices of
/// 0.3, every cross edge effective.
pub fn k23() -> FuzzyGraph {
    let xs = [("x1", "0.1"), ("x2", "0.3")];
    let ys = [("y1", "0.3"), ("y2", "0.3"), ("y3", "0.3")];
    let mut edges = Vec::new();
    for (x, sx) in xs {
        for (y, sy) in ys {
            let m = if r(sx) <= r(sy) { sx } else { sy };
            edges.push((x, y, m));
        }
    }
    let vertices: Vec<_> = xs.iter().chain(ys.iter()).copied().collect();
    build(&vertices, &edges)
}

/// Six-cycle `u1 .. u6` with four edges of 0.3 and the two edges around `u6`
/// of weight 0.01; all vertices 0.5.
pub fn c6() -> FuzzyGraph {
    build(
        &[
            ("u1", "0.5"),
            ("u2", "0.5"),
            ("u3", "0.5"),
            ("u4", "0.5"),
            ("u5", "0.5"),
            ("u6", "0.5"),
        ],
        &[
            ("u1", "u2", "0.3"),
            ("u2", "u3", "0.3"),
            ("u3", "u4", "0.3"),
            ("u4", "u5", "0.3"),
            ("u5", "u6", "0.01"),
            ("u6", "u1", "0.01"),
        ],
    )
}

/// Two disjoint effective edges (0.3 and 0.5) plus an isolated vertex of 0.2.
pub fn matching() -> FuzzyGraph {
    build(
        &[
            ("a1", "0.3"),
            ("a2", "0.3"),
            ("b1", "0.5"),
            ("b2", "0.5"),
            ("z", "0.2"),
        ],
        &[("a1", "a2", "0.3"), ("b1", "b2", "0.5")],
    )
}

/// [`matching`] without the isolated vertex.
pub fn matching_only() -> FuzzyGraph {
    build(
        &[("a1", "0.3"), ("a2", "0.3"), ("b1", "0.5"), ("b2", "0.5")],
        &[("a1", "a2", "0.3"), ("b1", "b2", "0.5")],
    )
}

/// Path `u1 - u2 - u3` with weights 0.4, 0.2.
pub fn p3() -> FuzzyGraph {
    build(
        &[("u1", "1"), ("u2", "1"), ("u3", "1")],
        &[("u1", "u2", "0.4"), ("u2", "u3", "0.2")],
    )
}

/// Path on six vertices of membership 1 with weights 0.3, 0.2, 0.2, 0.2, 0.4.
pub fn p6() -> FuzzyGraph {
    build(
        &[
            ("u1", "1"),
            ("u2", "1"),
            ("u3", "1"),
            ("u4", "1"),
            ("u5", "1"),
            ("u6", "1"),
        ],
        &[
            ("u1", "u2", "0.3"),
            ("u2", "u3", "0.2"),
            ("u3", "u4", "0.2"),
            ("u4", "u5", "0.2"),
            ("u5", "u6", "0.4"),
        ],
    )
}

/// All named fixtures, keyed by their file stem.
pub fn all() -> Vec<(&'static str, FuzzyGraph)> {
    vec![
        ("empty3", empty3()),
        ("edge", edge()),
        ("tri_a", tri_a()),
        ("tri_b", tri_b()),
        ("star", star()),
        ("k23", k23()),
        ("c6", c6()),
        ("matching", matching()),
        ("matching_only", matching_only()),
        ("p3", p3()),
        ("p6", p6()),
    ]
}
