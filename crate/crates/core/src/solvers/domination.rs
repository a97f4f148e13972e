use std::collections::BTreeSet;

use crate::connectivity::StrongProfile;
use crate::rational::Rational;
use crate::solvers::{Method, ScaledWeights, SolveError, SolveResult, SolverLimits, Witness};

/// The data strong domination needs: a symmetric strong-neighbour relation
/// and a weight per vertex.
///
/// Usually taken straight from a [`StrongProfile`]; [`restrict`](Self::restrict)
/// yields the structure induced on a vertex subset, keeping the parent's
/// strong relation and weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationInstance {
    ns: Vec<Vec<usize>>,
    weights: Vec<Rational>,
}

impl DominationInstance {
    pub fn from_profile(profile: &StrongProfile) -> Self {
        DominationInstance {
            ns: profile.strong_neighborhoods().to_vec(),
            weights: profile.mu_s_all().to_vec(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.ns.len()
    }

    pub fn neighborhoods(&self) -> &[Vec<usize>] {
        &self.ns
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Structure induced on `keep`. Returns the instance and the original index
    /// of each of its vertices.
    pub fn restrict(&self, keep: &BTreeSet<usize>) -> Result<(Self, Vec<usize>), SolveError> {
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.vertex_count()) {
            return Err(SolveError::IndexOutOfRange(bad));
        }
        let originals: Vec<usize> = keep.iter().copied().collect();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in originals.iter().enumerate() {
            local[v] = i;
        }
        let ns = originals
            .iter()
            .map(|&v| {
                self.ns[v]
                    .iter()
                    .filter(|&&w| local[w] != usize::MAX)
                    .map(|&w| local[w])
                    .collect()
            })
            .collect();
        let weights = originals.iter().map(|&v| self.weights[v].clone()).collect();
        Ok((DominationInstance { ns, weights }, originals))
    }

    fn check_set(&self, set: &BTreeSet<usize>) -> Result<(), SolveError> {
        match set.iter().find(|&&v| v >= self.vertex_count()) {
            Some(&bad) => Err(SolveError::IndexOutOfRange(bad)),
            None => Ok(()),
        }
    }

    pub fn is_dominating(&self, set: &BTreeSet<usize>) -> Result<bool, SolveError> {
        self.check_set(set)?;
        Ok((0..self.vertex_count())
            .all(|u| set.contains(&u) || self.ns[u].iter().any(|v| set.contains(v))))
    }

    pub fn weight_of(&self, set: &BTreeSet<usize>) -> Result<Rational, SolveError> {
        self.check_set(set)?;
        Ok(set.iter().map(|&v| &self.weights[v]).sum())
    }

    /// Minimality through the private-neighbour characterisation: every
    /// member either has no strong neighbour inside the set, or owns an
    /// outside vertex whose only dominator it is.
    pub fn is_minimal_dominating(&self, set: &BTreeSet<usize>) -> Result<bool, SolveError> {
        if !self.is_dominating(set)? {
            return Err(SolveError::NotDominating);
        }
        Ok(set.iter().all(|&u| {
            let isolated_in_set = self.ns[u].iter().all(|w| !set.contains(w));
            let has_private = self.ns[u].iter().any(|&v| {
                !set.contains(&v) && self.ns[v].iter().filter(|w| set.contains(w)).count() == 1
            });
            isolated_in_set || has_private
        }))
    }

    /// Minimum-weight strong dominating set by pruned depth-first search.
    pub fn solve(&self) -> Result<SolveResult, SolveError> {
        let scaled = ScaledWeights::new(&self.weights)?;
        let n = self.vertex_count();
        let total: u128 = scaled.units.iter().sum();
        let mut search = SetSearch {
            ns: &self.ns,
            w: &scaled.units,
            in_set: vec![false; n],
            covered: vec![0; n],
            acc: 0,
            best: total,
            best_set: None,
            nodes: 0,
        };
        search.dfs(0);
        let chosen = search.best_set.expect("the full vertex set dominates");
        let set: BTreeSet<usize> = (0..n).filter(|&v| chosen[v]).collect();
        Ok(SolveResult {
            value: scaled.to_rational(search.best),
            witness: Witness::Set(set),
            nodes_explored: search.nodes,
            method: Method::BranchAndBound,
        })
    }

    /// Exhaustive enumeration of all `2^n` subsets.
    pub fn solve_bruteforce(&self, limits: &SolverLimits) -> Result<SolveResult, SolveError> {
        let n = self.vertex_count();
        limits.check(n)?;
        let scaled = ScaledWeights::new(&self.weights)?;
        let mut best: Option<(u128, u64)> = None;
        let mut nodes = 0u64;
        // Vertex 0 is the most significant bit, so increasing masks visit
        // characteristic vectors in lexicographic order.
        let bit = |v: usize| 1u64 << (n - 1 - v);
        for mask in 0..(1u64 << n) {
            nodes += 1;
            let dominated = (0..n).all(|u| {
                mask & bit(u) != 0 || self.ns[u].iter().any(|&v| mask & bit(v) != 0)
            });
            if !dominated {
                continue;
            }
            let w: u128 = (0..n)
                .filter(|&v| mask & bit(v) != 0)
                .map(|v| scaled.units[v])
                .sum();
            if best.is_none_or(|(b, _)| w < b) {
                best = Some((w, mask));
            }
        }
        let (w, mask) = best.expect("the full vertex set dominates");
        Ok(SolveResult {
            value: scaled.to_rational(w),
            witness: Witness::Set((0..n).filter(|&v| mask & bit(v) != 0).collect()),
            nodes_explored: nodes,
            method: Method::Bruteforce,
        })
    }
}

struct SetSearch<'a> {
    ns: &'a [Vec<usize>],
    w: &'a [u128],
    in_set: Vec<bool>,
    /// Number of decided neighbours that are in the set.
    covered: Vec<u32>,
    acc: u128,
    best: u128,
    best_set: Option<Vec<bool>>,
    nodes: u64,
}

impl SetSearch<'_> {
    fn improves(&self, value: u128) -> bool {
        match self.best_set {
            Some(_) => value < self.best,
            None => value <= self.best,
        }
    }

    /// An excluded vertex `u` that is still uncovered needs a neighbour after `i`.
    fn can_still_cover(&self, u: usize, i: usize) -> bool {
        self.covered[u] > 0 || self.ns[u].last().is_some_and(|&last| last > i)
    }

    fn lower_bound(&self, i: usize) -> u128 {
        let mut need = 0u128;
        for u in 0..=i {
            if !self.in_set[u] && self.covered[u] == 0 {
                let cheapest = self.ns[u]
                    .iter()
                    .filter(|&&v| v > i)
                    .map(|&v| self.w[v])
                    .min()
                    .unwrap_or(0);
                need = need.max(cheapest);
            }
        }
        self.acc + need
    }

    fn dfs(&mut self, i: usize) {
        self.nodes += 1;
        let n = self.ns.len();
        if i == n {
            if self.improves(self.acc) {
                self.best = self.acc;
                self.best_set = Some(self.in_set.clone());
            }
            return;
        }
        // Exclude first: characteristic vectors with 0 before 1.
        if !self.ns[i].is_empty() {
            let feasible = self.can_still_cover(i, i)
                && self.ns[i]
                    .iter()
                    .filter(|&&u| u < i && !self.in_set[u])
                    .all(|&u| self.can_still_cover(u, i));
            if feasible && self.improves(self.lower_bound(i)) {
                self.dfs(i + 1);
            }
        }

        self.in_set[i] = true;
        self.acc += self.w[i];
        for &v in self.ns[i].iter() {
            self.covered[v] += 1;
        }
        if self.improves(self.lower_bound(i)) {
            self.dfs(i + 1);
        }
        for &v in self.ns[i].iter() {
            self.covered[v] -= 1;
        }
        self.acc -= self.w[i];
        self.in_set[i] = false;
    }
}

pub fn is_strong_dominating(profile: &StrongProfile, set: &BTreeSet<usize>) -> Result<bool, SolveError> {
    DominationInstance::from_profile(profile).is_dominating(set)
}

/// `W(D)`: the sum of `mu_s` over `set`.
pub fn dominating_weight(profile: &StrongProfile, set: &BTreeSet<usize>) -> Result<Rational, SolveError> {
    DominationInstance::from_profile(profile).weight_of(set)
}

pub fn is_minimal_strong_dominating(
    profile: &StrongProfile,
    set: &BTreeSet<usize>,
) -> Result<bool, SolveError> {
    DominationInstance::from_profile(profile).is_minimal_dominating(set)
}

/// Strong domination number with a lexicographically smallest optimal set.
pub fn gamma_s(profile: &StrongProfile) -> Result<SolveResult, SolveError> {
    DominationInstance::from_profile(profile).solve()
}

pub fn gamma_s_bruteforce(profile: &StrongProfile, limits: &SolverLimits) -> Result<SolveResult, SolveError> {
    DominationInstance::from_profile(profile).solve_bruteforce(limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::strong_profile;
    use crate::fixtures;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn domination_checks_on_tri_b() {
        let p = strong_profile(&fixtures::tri_b());
        assert!(is_strong_dominating(&p, &set(&[1])).unwrap());
        assert!(!is_strong_dominating(&p, &set(&[0])).unwrap());
        assert_eq!(dominating_weight(&p, &set(&[1])).unwrap(), r("0.3"));
        assert!(is_minimal_strong_dominating(&p, &set(&[1])).unwrap());
        assert!(!is_minimal_strong_dominating(&p, &set(&[0, 1])).unwrap());
        assert!(matches!(
            is_minimal_strong_dominating(&p, &set(&[0])),
            Err(SolveError::NotDominating)
        ));
        assert!(matches!(
            is_strong_dominating(&p, &set(&[7])),
            Err(SolveError::IndexOutOfRange(7))
        ));
    }

    #[test]
    fn edgeless_graph_needs_every_vertex() {
        let p = strong_profile(&fixtures::empty3());
        let all = set(&[0, 1, 2]);
        assert!(is_strong_dominating(&p, &all).unwrap());
        assert!(!is_strong_dominating(&p, &set(&[0, 1])).unwrap());
        assert_eq!(dominating_weight(&p, &all).unwrap(), Rational::zero());
        assert!(is_minimal_strong_dominating(&p, &all).unwrap());
        let res = gamma_s(&p).unwrap();
        assert_eq!(res.value, Rational::zero());
        assert_eq!(res.set(), Some(&all));
    }

    #[test]
    fn gamma_s_fixtures() {
        let p = strong_profile(&fixtures::tri_b());
        let res = gamma_s(&p).unwrap();
        assert_eq!(res.value, r("0.3"));
        assert_eq!(res.set(), Some(&set(&[1])));

        let star = strong_profile(&fixtures::star());
        let res = gamma_s(&star).unwrap();
        assert_eq!(res.value, r("0.2"));
        assert_eq!(res.set(), Some(&set(&[0])));
        assert_eq!(dominating_weight(&star, &set(&[0])).unwrap(), r("0.2"));
    }

    #[test]
    fn bruteforce_agrees_on_fixtures() {
        for (name, g) in fixtures::all() {
            let p = strong_profile(&g);
            let fast = gamma_s(&p).unwrap();
            let slow = gamma_s_bruteforce(&p, &SolverLimits::default()).unwrap();
            assert_eq!(fast.value, slow.value, "{name}");
            assert_eq!(fast.witness, slow.witness, "{name}");
        }
    }

    #[test]
    fn restriction_keeps_parent_relation() {
        let p = strong_profile(&fixtures::tri_b());
        let inst = DominationInstance::from_profile(&p);
        let (sub, originals) = inst.restrict(&set(&[0, 2])).unwrap();
        assert_eq!(originals, vec![0, 2]);
        // `ac` is not strong in the parent, so the restriction has no edge.
        assert!(sub.neighborhoods().iter().all(Vec::is_empty));
        assert_eq!(sub.weights(), &[r("0.5"), r("0.3")]);
    }

    #[test]
    fn bruteforce_respects_limit() {
        let p = strong_profile(&fixtures::c6());
        assert!(matches!(
            gamma_s_bruteforce(&p, &SolverLimits::with_brute_limit(5)),
            Err(SolveError::TooLarge { n: 6, limit: 5 })
        ));
    }
}
