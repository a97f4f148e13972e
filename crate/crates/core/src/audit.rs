//! Machine-checked bounds and structural properties of optimal labelings.
//!
//! [`audit_bounds`] evaluates every general bound and equality
//! characterisation on one instance, [`audit_optimum_structure`] inspects the
//! canonical optimal labeling, and [`audit_instance`] runs both after solving
//! (and, for small graphs, cross-checks the branch and bound against
//! exhaustive enumeration).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::connectivity::{strong_profile, StrongProfile};
use crate::families::gamma_snr_universal;
use crate::graph::FuzzyGraph;
use crate::rational::Rational;
use crate::solvers::{
    gamma_s, gamma_s_bruteforce, gamma_snr, gamma_snr_bruteforce, swap_partition, validate_snrdf,
    DominationInstance, Label, SolveError, SolveResult, SolverLimits,
};

/// Graphs up to this order are re-solved by brute force in [`audit_instance`].
pub const CROSS_CHECK_MAX_VERTICES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not_applicable",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// The statement being checked, as a formula.
    pub anchor: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub instance: String,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
}

impl AuditReport {
    fn new(instance: &str, checks: Vec<Check>) -> Self {
        let mut report = AuditReport {
            instance: instance.to_string(),
            checks,
            verdict: Verdict::Pass,
        };
        report.refresh_verdict();
        report
    }

    fn refresh_verdict(&mut self) {
        self.verdict = if self.checks.iter().any(|c| c.status == Status::Fail) {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Appends the checks of `other`; ids must not repeat.
    pub fn merge(&mut self, other: AuditReport) {
        for c in other.checks {
            debug_assert!(self.check(&c.id).is_none(), "duplicate check {}", c.id);
            self.checks.push(c);
        }
        self.refresh_verdict();
    }
}

fn check(id: &str, anchor: &str, ok: bool, lhs: impl ToString, rhs: impl ToString) -> Check {
    Check {
        id: id.to_string(),
        anchor: anchor.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn not_applicable(id: &str, anchor: &str, why: &str) -> Check {
    Check {
        id: id.to_string(),
        anchor: anchor.to_string(),
        status: Status::NotApplicable,
        lhs: why.to_string(),
        rhs: String::new(),
    }
}

/// Both sides of an "iff", rendered for the report.
fn iff(id: &str, anchor: &str, left: bool, right: bool) -> Check {
    check(id, anchor, left == right, left, right)
}

/// A perfect matching of effective edges whose endpoints share `sigma`.
fn is_equal_sigma_matching(g: &FuzzyGraph) -> bool {
    let n = g.vertex_count();
    n > 0
        && (0..n).all(|v| {
            let nb = g.neighbors(v);
            nb.len() == 1 && g.neighbors(nb[0]).len() == 1 && g.sigma(v) == g.sigma(nb[0]) && g.is_effective(v, nb[0])
        })
}

/// Every edge strong and every vertex isolated or with one strong neighbour.
fn is_strong_matching_with_isolates(g: &FuzzyGraph, profile: &StrongProfile) -> bool {
    profile.strong_edges().len() == g.edge_count()
        && (0..g.vertex_count()).all(|v| profile.strong_neighbors(v).len() <= 1)
}

/// General bounds and equality characterisations for one instance. `gs` and
/// `gsnr` must be exact results for `g`.
pub fn audit_bounds(
    instance: &str,
    g: &FuzzyGraph,
    profile: &StrongProfile,
    gs: &SolveResult,
    gsnr: &SolveResult,
) -> AuditReport {
    let s = &gs.value;
    let r = &gsnr.value;
    let p = g.order();
    let q = g.size();
    let mut checks = Vec::new();

    checks.push(check("sandwich_lower", "gamma_s <= gamma_snR", s <= r, s, r));
    let twice = s * 2;
    checks.push(check("sandwich_upper", "gamma_snR <= 2 gamma_s", r <= &twice, r, &twice));
    checks.push(iff(
        "equal_iff_edgeless",
        "gamma_s = gamma_snR <=> E = {}",
        s == r,
        g.is_edgeless(),
    ));

    let lower = g
        .min_positive_membership()
        .map(|m| m * 2)
        .unwrap_or_else(Rational::zero);
    checks.push(check(
        "membership_lower",
        "2 min{mu(u,v) > 0} <= gamma_snR",
        lower <= *r,
        &lower,
        r,
    ));

    let slack = (0..g.vertex_count())
        .map(|v| &profile.degrees(v).d_sn - g.sigma(v))
        .max()
        .unwrap_or_else(Rational::zero);
    let upper = &p - &slack;
    checks.push(check(
        "neighborhood_upper",
        "gamma_snR <= p - max_v (d_SN(v) - sigma(v))",
        *r <= upper,
        r,
        &upper,
    ));

    checks.push(check("order_upper", "gamma_snR <= p", *r <= p, r, &p));
    checks.push(iff(
        "order_equality",
        "gamma_snR = p <=> perfect matching of effective edges with equal endpoint sigma",
        *r == p,
        is_equal_sigma_matching(g),
    ));
    let twice_q = &q * 2;
    checks.push(iff(
        "size_equality",
        "gamma_snR = 2q <=> all edges strong and every |N_s(v)| <= 1",
        *r == twice_q,
        is_strong_matching_with_isolates(g, profile),
    ));

    let anchor = "U_s nonempty => gamma_snR = 2 min{mu_s(v) : v in U_s}";
    checks.push(match gamma_snr_universal(profile) {
        Some(v) => check("universal_vertex", anchor, v == *r, &v, r),
        None => not_applicable("universal_vertex", anchor, "no universal vertex"),
    });

    checks.extend(nordhaus_gaddum(g, r, &p));
    AuditReport::new(instance, checks)
}

fn nordhaus_gaddum(g: &FuzzyGraph, r: &Rational, p: &Rational) -> Vec<Check> {
    let lower_anchor = "2 (mu_min + mu'_min) <= gamma_snR(G) + gamma_snR(G')";
    let upper_anchor = "gamma_snR(G) + gamma_snR(G') < 2p";
    let comp = g.complement();
    if g.is_edgeless() || comp.is_edgeless() {
        let why = "G or its complement has no edges";
        return vec![
            not_applicable("nordhaus_gaddum_lower", lower_anchor, why),
            not_applicable("nordhaus_gaddum_upper", upper_anchor, why),
        ];
    }
    let comp_profile = strong_profile(&comp);
    let rc = match gamma_snr(&comp_profile) {
        Ok(res) => res.value,
        Err(e) => {
            let fail = |id: &str, anchor: &str| Check {
                id: id.to_string(),
                anchor: anchor.to_string(),
                status: Status::Fail,
                lhs: format!("complement not solved: {e}"),
                rhs: String::new(),
            };
            return vec![
                fail("nordhaus_gaddum_lower", lower_anchor),
                fail("nordhaus_gaddum_upper", upper_anchor),
            ];
        }
    };
    let total = r + &rc;
    let mins = g.min_positive_membership().expect("has edges")
        + comp.min_positive_membership().expect("has edges");
    let lower = mins * 2;
    let upper = p * 2;
    vec![
        check("nordhaus_gaddum_lower", lower_anchor, lower <= total, &lower, &total),
        check("nordhaus_gaddum_upper", upper_anchor, total < upper, &total, &upper),
    ]
}

/// Structural properties of the canonical optimal labeling in `gsnr`.
pub fn audit_optimum_structure(instance: &str, profile: &StrongProfile, gsnr: &SolveResult) -> AuditReport {
    let mut checks = Vec::new();
    let Some(f) = gsnr.labeling() else {
        checks.push(check("witness_valid", "f is an SNRDF with w(f) = gamma_snR", false, "no labeling", ""));
        return AuditReport::new(instance, checks);
    };
    let valid = validate_snrdf(profile, f).unwrap_or(false);
    checks.push(check(
        "witness_valid",
        "f is an SNRDF with w(f) = gamma_snR",
        valid && f.weight() == &gsnr.value,
        f.weight(),
        &gsnr.value,
    ));

    let part = f.partition();
    let strong_pairs = |a: &[usize], b: &[usize]| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &u in a {
            for &v in b {
                if u != v && profile.is_strong(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    };

    let v1_pairs = strong_pairs(&part.one, &part.one);
    let unequal = v1_pairs
        .iter()
        .filter(|&&(u, v)| profile.mu_s(u) != profile.mu_s(v))
        .count();
    checks.push(check(
        "v1_equal_mu_s",
        "u, v in V1 strong neighbours => mu_s(u) = mu_s(v)",
        unequal == 0,
        format!("{} strong V1 pairs", v1_pairs.len() / 2),
        format!("{unequal} unequal"),
    ));

    let cross = strong_pairs(&part.one, &part.two).len();
    checks.push(check(
        "no_strong_v1_v2_edge",
        "no strong edge joins V1 and V2",
        cross == 0,
        cross,
        0,
    ));

    let lonely = part
        .two
        .iter()
        .filter(|&&u| !profile.strong_neighbors(u).iter().any(|&v| f.label(v) == Label::Zero))
        .count();
    checks.push(check(
        "two_has_zero_neighbor",
        "f(u) = 2 => u has a strong neighbour labelled 0",
        lonely == 0,
        lonely,
        0,
    ));

    checks.push(check(
        "v2_at_most_v0",
        "|V2| <= |V0|",
        part.two.len() <= part.zero.len(),
        part.two.len(),
        part.zero.len(),
    ));
    let anchor = "|V2| = |V0| => each v in V2 has exactly one strong neighbour in V0";
    if part.two.len() == part.zero.len() {
        let bad = part
            .two
            .iter()
            .filter(|&&u| {
                profile
                    .strong_neighbors(u)
                    .iter()
                    .filter(|&&v| f.label(v) == Label::Zero)
                    .count()
                    != 1
            })
            .count();
        checks.push(check("balanced_private_neighbor", anchor, bad == 0, bad, 0));
    } else {
        checks.push(not_applicable("balanced_private_neighbor", anchor, "|V2| < |V0|"));
    }

    checks.push(v2_is_gamma_s_set(profile, &part.zero, &part.two));

    let swapped = swap_partition(f, profile).and_then(|g| validate_snrdf(profile, &g));
    checks.push(check(
        "swap_is_snrdf",
        "exchanging V0 and V2 gives an SNRDF",
        matches!(swapped, Ok(true)),
        matches!(swapped, Ok(true)),
        true,
    ));

    AuditReport::new(instance, checks)
}

/// `V2` is a minimum-weight strong dominating set of the structure induced on
/// `V0 u V2` (strong relation and `mu_s` inherited from the whole graph).
fn v2_is_gamma_s_set(profile: &StrongProfile, zero: &[usize], two: &[usize]) -> Check {
    let id = "v2_gamma_s_set";
    let anchor = "V2 is a gamma_s-set of G[V0 u V2]";
    let keep: BTreeSet<usize> = zero.iter().chain(two).copied().collect();
    let outcome = (|| -> Result<(bool, Rational, Rational), SolveError> {
        let (inst, originals) = DominationInstance::from_profile(profile).restrict(&keep)?;
        let local_two: BTreeSet<usize> = originals
            .iter()
            .enumerate()
            .filter(|(_, v)| two.contains(v))
            .map(|(i, _)| i)
            .collect();
        let dominates = inst.is_dominating(&local_two)?;
        let w = inst.weight_of(&local_two)?;
        let best = inst.solve()?.value;
        Ok((dominates && w == best, w, best))
    })();
    match outcome {
        Ok((ok, w, best)) => check(id, anchor, ok, w, best),
        Err(e) => check(id, anchor, false, format!("error: {e}"), ""),
    }
}

/// Solves `g` exactly and runs both audits. Graphs with at most
/// [`CROSS_CHECK_MAX_VERTICES`] vertices are also solved by brute force and the
/// values and witnesses compared.
pub fn audit_instance(instance: &str, g: &FuzzyGraph) -> Result<AuditReport, SolveError> {
    let profile = strong_profile(g);
    let gs = gamma_s(&profile)?;
    let gsnr = gamma_snr(&profile)?;
    let mut report = audit_bounds(instance, g, &profile, &gs, &gsnr);
    report.merge(audit_optimum_structure(instance, &profile, &gsnr));

    let anchor = "branch and bound = exhaustive enumeration (value and witness)";
    let checks = if g.vertex_count() <= CROSS_CHECK_MAX_VERTICES {
        let limits = SolverLimits::with_brute_limit(CROSS_CHECK_MAX_VERTICES);
        let bs = gamma_s_bruteforce(&profile, &limits)?;
        let br = gamma_snr_bruteforce(&profile, &limits)?;
        vec![
            check(
                "gamma_s_cross_check",
                anchor,
                bs.value == gs.value && bs.witness == gs.witness,
                &gs.value,
                &bs.value,
            ),
            check(
                "gamma_snr_cross_check",
                anchor,
                br.value == gsnr.value && br.witness == gsnr.witness,
                &gsnr.value,
                &br.value,
            ),
        ]
    } else {
        let why = "too many vertices for enumeration";
        vec![
            not_applicable("gamma_s_cross_check", anchor, why),
            not_applicable("gamma_snr_cross_check", anchor, why),
        ]
    };
    report.merge(AuditReport::new(instance, checks));
    Ok(report)
}
