use crate::connectivity::StrongProfile;
use crate::families::{non_decreasing, non_increasing, FamilyError, SumCheck};
use crate::graph::FuzzyGraph;
use crate::rational::Rational;

/// A path `u1 .. un` with edge `e_i = mu(u_i, u_{i+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathProfile {
    pub order: Vec<usize>,
    pub edges: Vec<Rational>,
    pub mu_s: Vec<Rational>,
    pub q: Rational,
    pub mu_min: Rational,
    pub mu_max: Rational,
    /// 1-based index of the first minimum edge.
    pub min_index: usize,
    /// 1-based index of the first maximum edge.
    pub max_index: usize,
}

/// Vertex order of a graph whose underlying graph is a single path, starting
/// from the endpoint with the smaller index.
fn path_order(g: &FuzzyGraph) -> Result<Vec<usize>, FamilyError> {
    let n = g.vertex_count();
    if n < 2 || g.edge_count() != n - 1 || (0..n).any(|v| g.degree_count(v) > 2) {
        return Err(FamilyError::NotAPath);
    }
    let start = (0..n).find(|&v| g.degree_count(v) == 1).ok_or(FamilyError::NotAPath)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return Err(FamilyError::NotAPath);
    }
    Ok(order)
}

impl PathProfile {
    pub fn new(g: &FuzzyGraph, profile: &StrongProfile) -> Result<Self, FamilyError> {
        let order = path_order(g)?;
        let edges: Vec<Rational> = order.windows(2).map(|w| g.mu_or_zero(w[0], w[1])).collect();
        let mu_min = edges.iter().min().expect("n >= 2").clone();
        let mu_max = edges.iter().max().expect("n >= 2").clone();
        Ok(PathProfile {
            mu_s: order.iter().map(|&v| profile.mu_s(v).clone()).collect(),
            q: edges.iter().sum(),
            min_index: edges.iter().position(|e| *e == mu_min).expect("present") + 1,
            max_index: edges.iter().position(|e| *e == mu_max).expect("present") + 1,
            mu_min,
            mu_max,
            order,
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Edge weights fall to a minimum and then rise, with the rising part
    /// running into the far end. Read in either direction this is the
    /// ordering under which `sum mu_s` reaches `q + mu_min`.
    pub fn has_sum_shape(&self) -> bool {
        let e = &self.edges;
        (0..e.len()).any(|l| non_increasing(&e[..=l]) && non_decreasing(&e[l..]))
    }

    /// `mu_s(u1) = mu_s(u2) = mu_s(u_{n-1}) = mu_s(u_n) = mu_max`
    pub fn endpoints_at_max(&self) -> bool {
        let n = self.len();
        [0, 1, n - 2, n - 1]
            .iter()
            .all(|&i| self.mu_s[i] == self.mu_max)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathBound {
    pub value: Rational,
    /// `n >= 6`, where the bound is guaranteed.
    pub in_hypothesis: bool,
}

/// `(2/3)(q + mu_min + mu_max)`
pub fn path_upper_bound(p: &PathProfile) -> PathBound {
    let total = &p.q + &p.mu_min + &p.mu_max;
    PathBound {
        value: total * Rational::new(2, 3),
        in_hypothesis: p.len() >= 6,
    }
}

/// `sum mu_s <= q + mu_min`, with equality exactly on the shape predicate.
pub fn path_mus_sum_check(p: &PathProfile) -> Result<SumCheck, FamilyError> {
    if p.len() < 3 {
        return Err(FamilyError::TooShort {
            family: "path",
            min: 3,
            got: p.len(),
        });
    }
    let sum: Rational = p.mu_s.iter().sum();
    let bound = &p.q + &p.mu_min;
    let check = SumCheck {
        bound_holds: sum <= bound,
        equality: sum == bound,
        shape: p.has_sum_shape(),
        sum,
        bound,
    };
    if !check.bound_holds || check.equality != check.shape {
        return Err(FamilyError::TheoremViolation(format!(
            "path sum of mu_s {} against {} (shape: {})",
            check.sum, check.bound, check.shape
        )));
    }
    Ok(check)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathExtremal {
    /// `gamma` equals the upper bound.
    pub attained: bool,
    pub in_hypothesis: bool,
    /// The sum shape holds and `sum mu_s = q + mu_min`.
    pub sum_shape: bool,
    pub endpoints_at_max: bool,
}

impl PathExtremal {
    pub fn holds(&self) -> bool {
        self.sum_shape && self.endpoints_at_max
    }
}

/// Necessary conditions for `gamma = (2/3)(q + mu_min + mu_max)`. They are
/// always evaluated; a violation is reported only when the bound is attained
/// on a path with at least six vertices.
pub fn path_extremal_necessary(p: &PathProfile, gamma: &Rational) -> Result<PathExtremal, FamilyError> {
    let bound = path_upper_bound(p);
    let sum: Rational = p.mu_s.iter().sum();
    let out = PathExtremal {
        attained: *gamma == bound.value,
        in_hypothesis: bound.in_hypothesis,
        sum_shape: p.has_sum_shape() && sum == &p.q + &p.mu_min,
        endpoints_at_max: p.endpoints_at_max(),
    };
    if out.attained && out.in_hypothesis && !out.holds() {
        return Err(FamilyError::TheoremViolation(format!(
            "path with edges {:?} attains {} without the necessary conditions",
            p.edges, bound.value
        )));
    }
    Ok(out)
}
