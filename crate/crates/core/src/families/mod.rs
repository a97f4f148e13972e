//! Special families and their closed forms.
//!
//! Constructors build complete, complete bipartite, cycle and path fuzzy
//! graphs in input order. The evaluators compute the exact closed-form value
//! of `gamma_snR` where one is known (universal vertex, complete, complete
//! bipartite) and the upper bounds and extremal characterisations for strong
//! cycles and paths.

mod bipartite;
mod cycle;
mod path;

pub use bipartite::{gamma_snr_bipartite, BipartiteCase, BipartiteForm};
pub use cycle::{
    cycle_extremal_check, cycle_mus_sum_check, cycle_pattern_labeling, cycle_upper_bound,
    pattern_weight_difference, CycleExtremal, CycleProfile,
};
pub use path::{
    path_extremal_necessary, path_mus_sum_check, path_upper_bound, PathBound, PathExtremal,
    PathProfile,
};

use thiserror::Error;

use crate::connectivity::{ConnectivityError, StrongProfile};
use crate::graph::{FuzzyGraph, GraphError};
use crate::rational::Rational;
use crate::solvers::SolveError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("both sides of a bipartite graph must be nonempty")]
    EmptySide,
    #[error("expected {expected} memberships, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{family} needs at least {min} vertices, got {got}")]
    TooShort {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("graph is not a complete fuzzy graph")]
    NotComplete,
    #[error("graph is not a complete bipartite fuzzy graph")]
    NotCompleteBipartite,
    #[error("cycle is not a fuzzy strong cycle")]
    NotStrongCycle,
    #[error("underlying graph is not a path")]
    NotAPath,
    #[error("pattern index {0} is outside 1..=n")]
    BadIndex(usize),
    #[error("cycle length {0} is a multiple of three")]
    WrongResidue(usize),
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}

/// Summary of a `sum mu_s <= bound` comparison together with the
/// structural predicate that should hold exactly at equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumCheck {
    pub sum: Rational,
    pub bound: Rational,
    pub bound_holds: bool,
    pub equality: bool,
    pub shape: bool,
}

fn numbered(prefix: &str, sigmas: &[Rational]) -> Vec<(String, Rational)> {
    sigmas
        .iter()
        .enumerate()
        .map(|(i, s)| (format!("{prefix}{}", i + 1), s.clone()))
        .collect()
}

/// Complete fuzzy graph on `v1 .. vn`: every pair joined with `min(sigma)`.
pub fn make_complete(sigmas: &[Rational]) -> Result<FuzzyGraph, FamilyError> {
    let vertices = numbered("v", sigmas);
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let m = Rational::min_of(&vertices[i].1, &vertices[j].1).clone();
            edges.push((vertices[i].0.clone(), vertices[j].0.clone(), m));
        }
    }
    Ok(FuzzyGraph::build(vertices, edges)?)
}

/// Complete bipartite fuzzy graph with sides `x1 ..` and `y1 ..`.
pub fn make_complete_bipartite(xs: &[Rational], ys: &[Rational]) -> Result<FuzzyGraph, FamilyError> {
    if xs.is_empty() || ys.is_empty() {
        return Err(FamilyError::EmptySide);
    }
    let xv = numbered("x", xs);
    let yv = numbered("y", ys);
    let mut edges = Vec::new();
    for (x, sx) in &xv {
        for (y, sy) in &yv {
            edges.push((x.clone(), y.clone(), Rational::min_of(sx, sy).clone()));
        }
    }
    Ok(FuzzyGraph::build(xv.into_iter().chain(yv), edges)?)
}

/// Cycle `u1 - u2 - .. - un - u1`; `mus[i]` weighs the edge leaving `u(i+1)`.
pub fn make_cycle(sigmas: &[Rational], mus: &[Rational]) -> Result<FuzzyGraph, FamilyError> {
    let n = sigmas.len();
    if n < 3 {
        return Err(FamilyError::TooShort {
            family: "cycle",
            min: 3,
            got: n,
        });
    }
    if mus.len() != n {
        return Err(FamilyError::LengthMismatch {
            expected: n,
            got: mus.len(),
        });
    }
    let vertices = numbered("u", sigmas);
    let edges: Vec<_> = (0..n)
        .map(|i| {
            (
                vertices[i].0.clone(),
                vertices[(i + 1) % n].0.clone(),
                mus[i].clone(),
            )
        })
        .collect();
    Ok(FuzzyGraph::build(vertices, edges)?)
}

/// Path `u1 - .. - un`; `mus[i]` weighs the edge `u(i+1) - u(i+2)`.
pub fn make_path(sigmas: &[Rational], mus: &[Rational]) -> Result<FuzzyGraph, FamilyError> {
    let n = sigmas.len();
    if n < 2 {
        return Err(FamilyError::TooShort {
            family: "path",
            min: 2,
            got: n,
        });
    }
    if mus.len() != n - 1 {
        return Err(FamilyError::LengthMismatch {
            expected: n - 1,
            got: mus.len(),
        });
    }
    let vertices = numbered("u", sigmas);
    let edges: Vec<_> = (0..n - 1)
        .map(|i| (vertices[i].0.clone(), vertices[i + 1].0.clone(), mus[i].clone()))
        .collect();
    Ok(FuzzyGraph::build(vertices, edges)?)
}

/// `2 * min mu_s` over universal vertices, `None` without a universal vertex.
pub fn gamma_snr_universal(profile: &StrongProfile) -> Option<Rational> {
    profile
        .universal()
        .iter()
        .map(|&v| profile.mu_s(v))
        .min()
        .map(|m| m * 2)
}

/// `2 * min mu_s` over all vertices of a complete fuzzy graph.
pub fn gamma_snr_complete(g: &FuzzyGraph, profile: &StrongProfile) -> Result<Rational, FamilyError> {
    if !g.is_complete() {
        return Err(FamilyError::NotComplete);
    }
    Ok(profile
        .mu_s_all()
        .iter()
        .min()
        .map(|m| m * 2)
        .unwrap_or_else(Rational::zero))
}

/// Non-increasing check over a slice.
pub(crate) fn non_increasing(w: &[Rational]) -> bool {
    w.windows(2).all(|p| p[0] >= p[1])
}

pub(crate) fn non_decreasing(w: &[Rational]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::strong_profile;
    use crate::fixtures;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn rs(v: &[&str]) -> Vec<Rational> {
        v.iter().map(|s| r(s)).collect()
    }

    /// Graphs equal up to vertex names.
    fn same_shape(a: &FuzzyGraph, b: &FuzzyGraph) -> bool {
        a.sigmas() == b.sigmas() && a.edges().eq(b.edges())
    }

    #[test]
    fn complete_constructor() {
        let k3 = make_complete(&rs(&["0.5", "0.5", "0.5"])).unwrap();
        assert!(same_shape(&k3, &fixtures::empty3().complement()));
        let k2 = make_complete(&rs(&["0.2", "0.4"])).unwrap();
        assert_eq!(k2.edges().map(|(_, _, m)| m.clone()).collect::<Vec<_>>(), rs(&["0.2"]));
        let k = make_complete(&rs(&["0.1", "0.3", "0.3"])).unwrap();
        assert_eq!(k.mu(0, 1), Some(&r("0.1")));
        assert_eq!(k.mu(0, 2), Some(&r("0.1")));
        assert_eq!(k.mu(1, 2), Some(&r("0.3")));
        assert!(matches!(
            make_complete(&rs(&["0", "0.3"])),
            Err(FamilyError::Graph(GraphError::MembershipOutOfRange { .. }))
        ));
    }

    #[test]
    fn bipartite_constructor() {
        let k = make_complete_bipartite(&rs(&["0.1", "0.3"]), &rs(&["0.3", "0.3", "0.3"])).unwrap();
        assert_eq!(k, fixtures::k23());
        let e = make_complete_bipartite(&rs(&["0.2"]), &rs(&["0.5"])).unwrap();
        assert_eq!(e.mu(0, 1), Some(&r("0.2")));
        let star = make_complete_bipartite(&rs(&["0.5"]), &rs(&["0.5", "0.5"])).unwrap();
        assert_eq!(star.edge_count(), 2);
        assert!(matches!(
            make_complete_bipartite(&[], &rs(&["0.5"])),
            Err(FamilyError::EmptySide)
        ));
    }

    #[test]
    fn cycle_and_path_constructors() {
        let c6 = make_cycle(
            &rs(&["0.5"; 6]),
            &rs(&["0.3", "0.3", "0.3", "0.3", "0.01", "0.01"]),
        )
        .unwrap();
        assert_eq!(c6, fixtures::c6());
        let p3 = make_path(&rs(&["1", "1", "1"]), &rs(&["0.4", "0.2"])).unwrap();
        assert_eq!(p3, fixtures::p3());
        let tri = make_cycle(&rs(&["1", "1", "1"]), &rs(&["0.5", "0.3", "0.2"])).unwrap();
        assert!(same_shape(&tri, &fixtures::tri_b()));
        assert!(matches!(
            make_cycle(&rs(&["1", "1"]), &rs(&["0.5", "0.5"])),
            Err(FamilyError::TooShort { .. })
        ));
        assert!(matches!(
            make_path(&rs(&["1", "1"]), &rs(&["0.5", "0.5"])),
            Err(FamilyError::LengthMismatch { expected: 1, got: 2 })
        ));
        assert!(matches!(
            make_path(&rs(&["0.1", "1"]), &rs(&["0.5"])),
            Err(FamilyError::Graph(GraphError::EdgeExceedsVertexMembership(_)))
        ));
    }

    #[test]
    fn universal_values() {
        let star = strong_profile(&fixtures::star());
        assert_eq!(gamma_snr_universal(&star), Some(r("0.4")));
        let tri = strong_profile(&fixtures::tri_b());
        assert_eq!(gamma_snr_universal(&tri), Some(r("0.6")));
        assert_eq!(gamma_snr_universal(&strong_profile(&fixtures::empty3())), None);
    }

    #[test]
    fn complete_values() {
        for (sig, want) in [
            (vec!["0.1", "0.3", "0.3"], "0.2"),
            (vec!["0.5", "0.5", "0.5"], "1"),
            (vec!["0.2", "0.4"], "0.4"),
        ] {
            let k = make_complete(&rs(&sig)).unwrap();
            let p = strong_profile(&k);
            assert_eq!(gamma_snr_complete(&k, &p).unwrap(), r(want));
        }
        let g = fixtures::tri_b();
        assert!(matches!(
            gamma_snr_complete(&g, &strong_profile(&g)),
            Err(FamilyError::NotComplete)
        ));
    }
}
