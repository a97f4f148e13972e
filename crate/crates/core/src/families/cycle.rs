use crate::connectivity::{cycle_order, StrongProfile};
use crate::families::{non_decreasing, non_increasing, FamilyError, SumCheck};
use crate::graph::FuzzyGraph;
use crate::rational::Rational;
use crate::solvers::{gamma_snr, Label, Labeling};

/// A cycle `u1 .. un` read off a fuzzy graph, with edge `e_i = mu(u_i, u_{i+1})`
/// (indices mod n) and the per-vertex `mu_s` in the same order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleProfile {
    /// Vertex index of `u_i` at position `i - 1`.
    pub order: Vec<usize>,
    pub edges: Vec<Rational>,
    /// `mu_s(u_i)` at position `i - 1`.
    pub mu_s: Vec<Rational>,
    pub k: usize,
    pub residue: usize,
    pub q: Rational,
    pub mu_min: Rational,
    pub mu_max: Rational,
    /// Every edge of the cycle is strong.
    pub strong: bool,
    mu_s_by_vertex: Vec<Rational>,
}

impl CycleProfile {
    pub fn new(g: &FuzzyGraph, profile: &StrongProfile) -> Result<Self, FamilyError> {
        let order = cycle_order(g)?;
        let n = order.len();
        let edges: Vec<Rational> = (0..n)
            .map(|i| g.mu_or_zero(order[i], order[(i + 1) % n]))
            .collect();
        let strong = (0..n).all(|i| profile.is_strong(order[i], order[(i + 1) % n]));
        Ok(CycleProfile {
            mu_s: order.iter().map(|&v| profile.mu_s(v).clone()).collect(),
            k: n / 3,
            residue: n % 3,
            q: edges.iter().sum(),
            mu_min: edges.iter().min().expect("n >= 3").clone(),
            mu_max: edges.iter().max().expect("n >= 3").clone(),
            strong,
            mu_s_by_vertex: profile.mu_s_all().to_vec(),
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

    fn require_strong(&self) -> Result<(), FamilyError> {
        if self.strong {
            Ok(())
        } else {
            Err(FamilyError::NotStrongCycle)
        }
    }

    /// `q - (mu_max - mu_min)`
    pub fn reduced_size(&self) -> Rational {
        &self.q - &(&self.mu_max - &self.mu_min)
    }

    /// Two adjacent minimum edges split the cycle, read from some maximum
    /// edge onwards in either direction, into a non-increasing run followed
    /// by a non-decreasing run.
    pub fn is_valley(&self) -> bool {
        let n = self.len();
        let forward = self.edges.clone();
        let mut backward = self.edges.clone();
        backward.reverse();
        [forward, backward].iter().any(|e| {
            (0..n).filter(|&i| e[i] == self.mu_max).any(|last| {
                // Rotate so that the chosen maximum edge is e_n.
                let rot: Vec<Rational> = (1..=n).map(|s| e[(last + s) % n].clone()).collect();
                (0..n - 2).any(|j| {
                    rot[j] == self.mu_min
                        && rot[j + 1] == self.mu_min
                        && non_increasing(&rot[..=j])
                        && non_decreasing(&rot[j + 1..])
                })
            })
        })
    }
}

/// `(1 - k/n) (q - (mu_max - mu_min))`
pub fn cycle_upper_bound(c: &CycleProfile) -> Result<Rational, FamilyError> {
    c.require_strong()?;
    let n = c.len() as i64;
    let factor = Rational::new(n - c.k as i64, n);
    Ok(factor * c.reduced_size())
}

/// The pattern labeling `f_m` (`m` is 1-based) for the residue class of `n`.
pub fn cycle_pattern_labeling(c: &CycleProfile, m: usize) -> Result<Labeling, FamilyError> {
    c.require_strong()?;
    let n = c.len();
    if m == 0 || m > n {
        return Err(FamilyError::BadIndex(m));
    }
    let start = m - 1;
    let mut by_position = vec![Label::Zero; n];
    match c.residue {
        0 => (0..c.k).for_each(|i| by_position[(start + 3 * i) % n] = Label::Two),
        1 => {
            by_position[start] = Label::One;
            (0..c.k).for_each(|i| by_position[(start + 2 + 3 * i) % n] = Label::Two);
        }
        _ => (0..=c.k).for_each(|i| by_position[(start + 3 * i) % n] = Label::Two),
    }
    let mut labels = vec![Label::Zero; n];
    for (pos, &v) in c.order.iter().enumerate() {
        labels[v] = by_position[pos];
    }
    Ok(Labeling::with_weights(labels, &c.mu_s_by_vertex)?)
}

/// For `n = 3k + 1`: `(w(f_m) - w(f_{m+3}), mu_s(u_m) - 2 mu_s(u_{m+1}) + 2 mu_s(u_{m+2}) - mu_s(u_{m+3}))`.
pub fn pattern_weight_difference(c: &CycleProfile, m: usize) -> Result<(Rational, Rational), FamilyError> {
    if c.residue != 1 {
        return Err(FamilyError::WrongResidue(c.len()));
    }
    let n = c.len();
    let shifted = (m - 1 + 3) % n + 1;
    let direct = cycle_pattern_labeling(c, m)?.weight() - cycle_pattern_labeling(c, shifted)?.weight();
    let at = |off: usize| &c.mu_s[(m - 1 + off) % n];
    let formula = at(0) - &(at(1) * 2) + (at(2) * 2) - at(3);
    Ok((direct, formula))
}

/// `sum mu_s <= q - (mu_max - mu_min)` with equality exactly on valleys.
pub fn cycle_mus_sum_check(c: &CycleProfile) -> Result<SumCheck, FamilyError> {
    c.require_strong()?;
    let sum: Rational = c.mu_s.iter().sum();
    let bound = c.reduced_size();
    let check = SumCheck {
        bound_holds: sum <= bound,
        equality: sum == bound,
        shape: c.is_valley(),
        sum,
        bound,
    };
    if !check.bound_holds || check.equality != check.shape {
        return Err(FamilyError::TheoremViolation(format!(
            "cycle sum of mu_s {} against {} (valley: {})",
            check.sum, check.bound, check.shape
        )));
    }
    Ok(check)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleExtremal {
    /// At least `n - 1` edges weigh `mu_min`.
    pub condition: bool,
    pub gamma: Rational,
    pub bound: Rational,
    pub attained: bool,
}

/// For `n` not a multiple of three: the bound is attained exactly when at
/// least `n - 1` edges carry `mu_min`. Solves the instance exactly and
/// reports a violation when the two sides disagree.
pub fn cycle_extremal_check(c: &CycleProfile, profile: &StrongProfile) -> Result<CycleExtremal, FamilyError> {
    c.require_strong()?;
    if c.residue == 0 {
        return Err(FamilyError::WrongResidue(c.len()));
    }
    let bound = cycle_upper_bound(c)?;
    let gamma = gamma_snr(profile)?.value;
    let condition = c.edges.iter().filter(|e| **e == c.mu_min).count() + 1 >= c.len();
    let out = CycleExtremal {
        condition,
        attained: gamma == bound,
        gamma,
        bound,
    };
    if out.condition != out.attained {
        return Err(FamilyError::TheoremViolation(format!(
            "cycle with edges {:?}: gamma {} vs bound {}, condition {}",
            c.edges, out.gamma, out.bound, out.condition
        )));
    }
    Ok(out)
}
