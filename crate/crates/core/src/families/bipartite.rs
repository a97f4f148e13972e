use std::fmt;

use crate::connectivity::StrongProfile;
use crate::families::FamilyError;
use crate::graph::FuzzyGraph;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipartiteCase {
    /// `|X| = 1`
    I,
    /// `|X| = |Y| = 2`
    II,
    /// `|X| = 2, |Y| >= 3`
    III,
    /// `|X| >= 3`
    IV,
}

impl fmt::Display for BipartiteCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BipartiteCase::I => "i",
            BipartiteCase::II => "ii",
            BipartiteCase::III => "iii",
            BipartiteCase::IV => "iv",
        })
    }
}

/// The normalised sides and the resulting closed-form value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteForm {
    /// The smaller side, sorted by nondecreasing `mu_s`.
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub case: BipartiteCase,
    pub value: Rational,
}

/// Splits a connected graph into its two colour classes.
fn two_colouring(g: &FuzzyGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    if n < 2 || g.components().len() != 1 {
        return None;
    }
    let mut colour = vec![None; n];
    colour[0] = Some(false);
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        let c = colour[u]?;
        for &v in g.neighbors(u) {
            match colour[v] {
                None => {
                    colour[v] = Some(!c);
                    stack.push(v);
                }
                Some(d) if d == c => return None,
                Some(_) => {}
            }
        }
    }
    let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| colour[v] == Some(false));
    Some((a, b))
}

/// Exact `gamma_snR` of a complete bipartite fuzzy graph.
///
/// Sides are reordered by nondecreasing `mu_s` and `X` is the smaller one
/// (ties: smaller `mu_s(x1)`, then the side holding the lowest index).
pub fn gamma_snr_bipartite(g: &FuzzyGraph, profile: &StrongProfile) -> Result<BipartiteForm, FamilyError> {
    let (a, b) = two_colouring(g).ok_or(FamilyError::NotCompleteBipartite)?;
    for &u in &a {
        for &v in &b {
            if !g.is_effective(u, v) {
                return Err(FamilyError::NotCompleteBipartite);
            }
        }
    }
    let mu_s = |v: usize| profile.mu_s(v);
    let sorted = |mut side: Vec<usize>| {
        side.sort_by(|&u, &v| mu_s(u).cmp(mu_s(v)).then(u.cmp(&v)));
        side
    };
    let (a, b) = (sorted(a), sorted(b));
    let key = |s: &Vec<usize>| (s.len(), mu_s(s[0]).clone(), s.iter().min().copied());
    let (x, y) = if key(&a) <= key(&b) { (a, b) } else { (b, a) };

    let m1 = mu_s(x[0]);
    let (case, value) = match (x.len(), y.len()) {
        (1, _) => (BipartiteCase::I, m1 * 2),
        (2, 2) => {
            let second = Rational::min_of(mu_s(x[1]), mu_s(y[1]));
            (BipartiteCase::II, (m1 * 4).min(m1 * 2 + second))
        }
        (2, _) => (BipartiteCase::III, (m1 * 4).min(m1 * 2 + mu_s(x[1]))),
        _ => (BipartiteCase::IV, m1 * 4),
    };
    Ok(BipartiteForm { x, y, case, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::strong_profile;
    use crate::families::make_complete_bipartite;
    use crate::fixtures;
    use crate::solvers::{gamma_snr_bruteforce, SolverLimits};

    fn rs(v: &[&str]) -> Vec<Rational> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn eval(g: &FuzzyGraph) -> BipartiteForm {
        gamma_snr_bipartite(g, &strong_profile(g)).unwrap()
    }

    fn brute(g: &FuzzyGraph) -> Rational {
        gamma_snr_bruteforce(&strong_profile(g), &SolverLimits::default())
            .unwrap()
            .value
    }

    #[test]
    fn k23_case_iii() {
        let g = fixtures::k23();
        let form = eval(&g);
        assert_eq!(form.case, BipartiteCase::III);
        assert_eq!(form.value, "0.4".parse::<Rational>().unwrap());
        assert_eq!(form.x, vec![0, 1]);
        assert_eq!(form.value, brute(&g));
    }

    #[test]
    fn two_light_vertices_use_the_one_label() {
        let g = make_complete_bipartite(&rs(&["0.1", "0.1"]), &rs(&["0.3", "0.3", "0.3"])).unwrap();
        let form = eval(&g);
        assert_eq!(form.value, "0.3".parse::<Rational>().unwrap());
        assert_eq!(form.value, brute(&g));
    }

    #[test]
    fn cases_i_and_iv() {
        let g = make_complete_bipartite(&rs(&["0.5"]), &rs(&["0.5", "0.5"])).unwrap();
        let form = eval(&g);
        assert_eq!((form.case, form.value.to_string()), (BipartiteCase::I, "1".into()));
        let g = make_complete_bipartite(&rs(&["0.3"; 3]), &rs(&["0.3"; 3])).unwrap();
        let form = eval(&g);
        assert_eq!((form.case, form.value.to_string()), (BipartiteCase::IV, "1.2".into()));
        assert_eq!(form.value, brute(&g));
    }

    #[test]
    fn case_ii_regimes() {
        // 2 mu_s(x1) below, inside and above the pair {mu_s(x2), mu_s(y2)}.
        for (xs, ys) in [
            (["0.1", "0.5"], ["0.1", "0.3"]),
            (["0.2", "0.5"], ["0.2", "0.3"]),
            (["0.3", "0.4"], ["0.3", "0.5"]),
            (["0.2", "0.3"], ["0.5", "0.6"]),
        ] {
            let g = make_complete_bipartite(&rs(&xs), &rs(&ys)).unwrap();
            let form = eval(&g);
            assert_eq!(form.case, BipartiteCase::II);
            assert_eq!(form.value, brute(&g), "{xs:?} {ys:?}");
        }
    }

    #[test]
    fn smaller_side_becomes_x() {
        let g = make_complete_bipartite(&rs(&["0.4", "0.4", "0.4"]), &rs(&["0.2", "0.9"])).unwrap();
        let form = eval(&g);
        assert_eq!(form.x, vec![3, 4]);
        assert_eq!(form.value, brute(&g));
    }

    #[test]
    fn rejects_other_graphs() {
        for g in [fixtures::tri_b(), fixtures::c6(), fixtures::empty3(), fixtures::matching()] {
            assert!(matches!(
                gamma_snr_bipartite(&g, &strong_profile(&g)),
                Err(FamilyError::NotCompleteBipartite)
            ));
        }
        // P3 is K_{1,2} only when both edges are effective.
        let g = fixtures::p3();
        assert!(gamma_snr_bipartite(&g, &strong_profile(&g)).is_err());
    }
}
