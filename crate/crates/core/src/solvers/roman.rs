use crate::connectivity::StrongProfile;
use crate::rational::Rational;
use crate::solvers::labeling::is_valid;
use crate::solvers::{
    DominationInstance, Label, Labeling, Method, ScaledWeights, SolveError, SolveResult,
    SolverLimits, Witness,
};

/// Exact `gamma_snR` by enumerating all `3^n` labelings.
pub fn gamma_snr_bruteforce(profile: &StrongProfile, limits: &SolverLimits) -> Result<SolveResult, SolveError> {
    let n = profile.vertex_count();
    limits.check(n)?;
    let ns = profile.strong_neighborhoods();
    let scaled = ScaledWeights::new(profile.mu_s_all())?;

    // Odometer with vertex 0 as the most significant digit: labelings are
    // visited in lexicographic order.
    let mut labels = vec![Label::Zero; n];
    let mut best: Option<(u128, Vec<Label>)> = None;
    let mut nodes = 0u64;
    loop {
        nodes += 1;
        if is_valid(ns, &labels) {
            let w: u128 = labels
                .iter()
                .zip(&scaled.units)
                .map(|(l, &u)| u * u128::from(l.value()))
                .sum();
            if best.as_ref().is_none_or(|(b, _)| w < *b) {
                best = Some((w, labels.clone()));
            }
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                let (_, labels) = best.expect("the all-ones labeling is valid");
                let witness = Labeling::new(labels, profile)?;
                return Ok(SolveResult {
                    value: witness.weight().clone(),
                    witness: Witness::Labeling(witness),
                    nodes_explored: nodes,
                    method: Method::Bruteforce,
                });
            }
            pos -= 1;
            match labels[pos] {
                Label::Zero => {
                    labels[pos] = Label::One;
                    break;
                }
                Label::One => {
                    labels[pos] = Label::Two;
                    break;
                }
                Label::Two => labels[pos] = Label::Zero,
            }
        }
    }
}

/// Exact `gamma_snR` by branch and bound. The witness is the lexicographically
/// smallest optimal labeling and coincides with the brute-force witness.
pub fn gamma_snr(profile: &StrongProfile) -> Result<SolveResult, SolveError> {
    let inst = DominationInstance::from_profile(profile);
    let (value, labels, nodes) = search(&inst)?;
    let witness = Labeling::new(labels, profile)?;
    debug_assert_eq!(witness.weight(), &value);
    Ok(SolveResult {
        value,
        witness: Witness::Labeling(witness),
        nodes_explored: nodes,
        method: Method::BranchAndBound,
    })
}

fn search(inst: &DominationInstance) -> Result<(Rational, Vec<Label>, u64), SolveError> {
    let n = inst.vertex_count();
    let scaled = ScaledWeights::new(inst.weights())?;
    let all_ones: u128 = scaled.units.iter().sum();
    let mut s = RomanSearch {
        ns: inst.neighborhoods(),
        w: &scaled.units,
        labels: vec![Label::One; n],
        twos: vec![0; n],
        acc: 0,
        best: all_ones,
        best_labels: None,
        nodes: 0,
    };
    s.dfs(0);
    let labels = s.best_labels.expect("the all-ones labeling is valid");
    Ok((scaled.to_rational(s.best), labels, s.nodes))
}

struct RomanSearch<'a> {
    ns: &'a [Vec<usize>],
    w: &'a [u128],
    labels: Vec<Label>,
    /// Number of assigned strong neighbours labelled 2.
    twos: Vec<u32>,
    acc: u128,
    best: u128,
    best_labels: Option<Vec<Label>>,
    nodes: u64,
}

impl RomanSearch<'_> {
    fn improves(&self, value: u128) -> bool {
        match self.best_labels {
            Some(_) => value < self.best,
            None => value <= self.best,
        }
    }

    /// A 0-labelled vertex without a 2-neighbour still has an unassigned
    /// neighbour after position `i`.
    fn still_coverable(&self, u: usize, i: usize) -> bool {
        self.twos[u] > 0 || self.ns[u].last().is_some_and(|&last| last > i)
    }

    /// Accumulated weight plus the cheapest 2-label that the most demanding
    /// uncovered 0-vertex still needs.
    fn lower_bound(&self, i: usize) -> u128 {
        let mut need = 0u128;
        for u in 0..=i {
            if self.labels[u] == Label::Zero && self.twos[u] == 0 {
                let cheapest = self.ns[u]
                    .iter()
                    .filter(|&&v| v > i)
                    .map(|&v| 2 * self.w[v])
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
                self.best_labels = Some(self.labels.clone());
            }
            return;
        }
        // Without strong neighbours a vertex cannot take 0, and 1 costs nothing.
        let choices: &[Label] = if self.ns[i].is_empty() {
            &[Label::One]
        } else {
            &Label::ALL
        };
        for &label in choices {
            self.labels[i] = label;
            let cost = self.w[i] * u128::from(label.value());
            self.acc += cost;
            if label == Label::Two {
                for &v in self.ns[i].iter() {
                    self.twos[v] += 1;
                }
            }

            let feasible = (label != Label::Zero || self.still_coverable(i, i))
                && (label == Label::Two
                    || self.ns[i]
                        .iter()
                        .filter(|&&u| u < i && self.labels[u] == Label::Zero)
                        .all(|&u| self.still_coverable(u, i)));
            if feasible && self.improves(self.lower_bound(i)) {
                self.dfs(i + 1);
            }

            if label == Label::Two {
                for &v in self.ns[i].iter() {
                    self.twos[v] -= 1;
                }
            }
            self.acc -= cost;
        }
        self.labels[i] = Label::One;
    }
}
