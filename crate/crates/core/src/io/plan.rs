//! Reading an optimal labeling as a sensor deployment: label 2 marks a relay
//! that can serve its strong neighbours, label 1 an independent transmitter
//! and label 0 a dependent sensor attached to a relay.

use std::fmt;

use serde::Serialize;

use crate::connectivity::StrongProfile;
use crate::graph::FuzzyGraph;
use crate::rational::Rational;
use crate::solvers::{gamma_snr, Label, SolveError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RoleKind {
    Relay,
    Independent,
    Dependent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Role {
    pub id: String,
    pub label: u8,
    pub role: RoleKind,
    /// The relay serving a dependent sensor.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relay: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Plan {
    pub roles: Vec<Role>,
    pub cost: Rational,
    /// `2 min{mu(u,v) > 0}`
    pub lower_bound: Rational,
    /// `p - max_v (d_SN(v) - sigma(v))`
    pub upper_bound: Rational,
}

pub fn plan(g: &FuzzyGraph, profile: &StrongProfile) -> Result<Plan, SolveError> {
    let res = gamma_snr(profile)?;
    let f = res.labeling().expect("labeling witness");
    let roles = (0..g.vertex_count())
        .map(|v| {
            let label = f.label(v);
            let (role, relay) = match label {
                Label::Two => (RoleKind::Relay, None),
                Label::One => (RoleKind::Independent, None),
                Label::Zero => {
                    let r = profile
                        .strong_neighbors(v)
                        .iter()
                        .find(|&&u| f.label(u) == Label::Two)
                        .expect("valid labeling");
                    (RoleKind::Dependent, Some(g.id(*r).to_string()))
                }
            };
            Role {
                id: g.id(v).to_string(),
                label: label.value(),
                role,
                relay,
            }
        })
        .collect();
    let lower_bound = g
        .min_positive_membership()
        .map(|m| m * 2)
        .unwrap_or_else(Rational::zero);
    let slack = (0..g.vertex_count())
        .map(|v| &profile.degrees(v).d_sn - g.sigma(v))
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(Plan {
        roles,
        cost: res.value,
        lower_bound,
        upper_bound: g.order() - slack,
    })
}

impl fmt::Display for Plan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.roles {
            match (&r.role, &r.relay) {
                (RoleKind::Relay, _) => writeln!(f, "{}: relay (2)", r.id)?,
                (RoleKind::Independent, _) => writeln!(f, "{}: independent (1)", r.id)?,
                (RoleKind::Dependent, Some(relay)) => writeln!(f, "{}: dependent (0) via {relay}", r.id)?,
                (RoleKind::Dependent, None) => writeln!(f, "{}: dependent (0)", r.id)?,
            }
        }
        writeln!(f, "cost: {}", self.cost)?;
        writeln!(f, "lower bound 2 min mu: {} <= {}", self.lower_bound, self.cost)?;
        write!(f, "upper bound p - max(d_SN - sigma): {} <= {}", self.cost, self.upper_bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::strong_profile;
    use crate::fixtures;

    fn plan_of(g: &FuzzyGraph) -> Plan {
        plan(g, &strong_profile(g)).unwrap()
    }

    #[test]
    fn star_plan() {
        let p = plan_of(&fixtures::star());
        assert_eq!(p.cost.to_string(), "0.4");
        assert_eq!(p.roles[0].role, RoleKind::Relay);
        for r in &p.roles[1..] {
            assert_eq!((r.role, r.relay.as_deref()), (RoleKind::Dependent, Some("c")));
        }
        assert_eq!(p.upper_bound, p.cost);
    }

    #[test]
    fn empty_plan() {
        let p = plan_of(&fixtures::empty3());
        assert!(p.roles.iter().all(|r| r.role == RoleKind::Independent));
        assert_eq!(p.cost, Rational::zero());
    }

    #[test]
    fn c6_plan() {
        let p = plan_of(&fixtures::c6());
        let kinds: Vec<RoleKind> = p.roles.iter().map(|r| r.role).collect();
        use RoleKind::*;
        assert_eq!(kinds, vec![Relay, Dependent, Independent, Dependent, Relay, Dependent]);
        assert_eq!(p.cost.to_string(), "0.34");
        let text = p.to_string();
        assert!(text.contains("u2: dependent (0) via u1"));
        assert!(text.contains("cost: 0.34"));
    }
}
