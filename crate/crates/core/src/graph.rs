//! The fuzzy graph value type.
//!
//! A [`FuzzyGraph`] is an undirected simple graph whose vertices carry a
//! membership `sigma` in `(0, 1]` and whose edges carry a membership `mu` in
//! `(0, 1]` with `mu(u, v) <= min(sigma(u), sigma(v))`. Absent pairs have
//! membership zero. Graphs are validated once in [`FuzzyGraph::build`] and are
//! immutable afterwards.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge ({0}, {1}) listed twice")]
    DuplicateEdge(String, String),
    #[error("edge endpoint `{0}` is not a vertex")]
    UnknownEndpoint(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("membership {value} of {what} is outside (0, 1]")]
    MembershipOutOfRange { what: String, value: Rational },
    #[error("edge ({}, {}) has mu = {} > min(sigma) = {}", .0.u, .0.v, .0.mu, .0.bound)]
    EdgeExceedsVertexMembership(Box<EdgeExcess>),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    IndexOutOfRange(usize),
}

/// An edge whose membership exceeds the smaller endpoint membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeExcess {
    pub u: String,
    pub v: String,
    pub mu: Rational,
    pub bound: Rational,
}

/// Unordered vertex pair, stored with the smaller index first.
pub type Pair = (usize, usize);

pub(crate) fn pair(u: usize, v: usize) -> Pair {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzyGraph {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    sigma: Vec<Rational>,
    mu: BTreeMap<Pair, Rational>,
    adjacency: Vec<Vec<usize>>,
}

impl FuzzyGraph {
    /// Validates and builds a graph. Vertex order is preserved and defines the
    /// index of each vertex.
    pub fn build<I, E, S, T>(vertices: I, edges: E) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (S, Rational)>,
        E: IntoIterator<Item = (T, T, Rational)>,
        S: Into<String>,
        T: AsRef<str>,
    {
        let mut ids = Vec::new();
        let mut sigma = Vec::new();
        let mut index = HashMap::new();
        for (id, s) in vertices {
            let id = id.into();
            if !s.is_membership() {
                return Err(GraphError::MembershipOutOfRange {
                    what: format!("vertex `{id}`"),
                    value: s,
                });
            }
            if index.insert(id.clone(), ids.len()).is_some() {
                return Err(GraphError::DuplicateVertex(id));
            }
            ids.push(id);
            sigma.push(s);
        }

        let mut mu = BTreeMap::new();
        for (u, v, m) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let ui = *index
                .get(u)
                .ok_or_else(|| GraphError::UnknownEndpoint(u.to_string()))?;
            let vi = *index
                .get(v)
                .ok_or_else(|| GraphError::UnknownEndpoint(v.to_string()))?;
            if ui == vi {
                return Err(GraphError::SelfLoop(u.to_string()));
            }
            if !m.is_membership() {
                return Err(GraphError::MembershipOutOfRange {
                    what: format!("edge ({u}, {v})"),
                    value: m,
                });
            }
            let bound = Rational::min_of(&sigma[ui], &sigma[vi]);
            if &m > bound {
                return Err(GraphError::EdgeExceedsVertexMembership(Box::new(EdgeExcess {
                    u: u.to_string(),
                    v: v.to_string(),
                    mu: m,
                    bound: bound.clone(),
                })));
            }
            if mu.insert(pair(ui, vi), m).is_some() {
                return Err(GraphError::DuplicateEdge(u.to_string(), v.to_string()));
            }
        }

        Ok(Self::assemble(ids, index, sigma, mu))
    }

    fn assemble(
        ids: Vec<String>,
        index: HashMap<String, usize>,
        sigma: Vec<Rational>,
        mu: BTreeMap<Pair, Rational>,
    ) -> Self {
        let mut adjacency = vec![Vec::new(); ids.len()];
        for &(u, v) in mu.keys() {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        FuzzyGraph {
            ids,
            index,
            sigma,
            mu,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.mu.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.mu.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn index_of(&self, id: &str) -> Result<usize, GraphError> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(id.to_string()))
    }

    /// Resolves a list of vertex ids to a set of indices.
    pub fn resolve<S: AsRef<str>>(&self, ids: &[S]) -> Result<BTreeSet<usize>, GraphError> {
        ids.iter().map(|id| self.index_of(id.as_ref())).collect()
    }

    pub fn sigma(&self, v: usize) -> &Rational {
        &self.sigma[v]
    }

    pub fn sigmas(&self) -> &[Rational] {
        &self.sigma
    }

    /// Membership of the pair `{u, v}`; `None` when the pair is not an edge.
    pub fn mu(&self, u: usize, v: usize) -> Option<&Rational> {
        self.mu.get(&pair(u, v))
    }

    /// Membership of `{u, v}`, zero for non-adjacent pairs.
    pub fn mu_or_zero(&self, u: usize, v: usize) -> Rational {
        self.mu(u, v).cloned().unwrap_or_else(Rational::zero)
    }

    /// Edges as `(u, v, mu)` with `u < v`, in lexicographic index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.mu.iter().map(|(&(u, v), m)| (u, v, m))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree_count(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Order `p`: the sum of all vertex memberships.
    pub fn order(&self) -> Rational {
        self.sigma.iter().sum()
    }

    /// Size `q`: the sum of all edge memberships.
    pub fn size(&self) -> Rational {
        self.mu.values().sum()
    }

    /// Scalar cardinality of a vertex set given by index.
    pub fn scalar_cardinality(&self, set: &BTreeSet<usize>) -> Result<Rational, GraphError> {
        set.iter()
            .map(|&v| {
                self.sigma
                    .get(v)
                    .ok_or(GraphError::IndexOutOfRange(v))
            })
            .sum::<Result<Rational, _>>()
    }

    /// Scalar cardinality of a vertex set given by id.
    pub fn scalar_cardinality_of<S: AsRef<str>>(&self, ids: &[S]) -> Result<Rational, GraphError> {
        let set = self.resolve(ids)?;
        self.scalar_cardinality(&set)
    }

    /// Smallest positive edge membership, `None` for an edgeless graph.
    pub fn min_positive_membership(&self) -> Option<&Rational> {
        self.mu.values().min()
    }

    /// Sum over all unordered vertex pairs of `min(sigma(u), sigma(v))`.
    pub fn pairwise_sigma_min_total(&self) -> Rational {
        let n = self.vertex_count();
        let mut total = Rational::zero();
        for u in 0..n {
            for v in u + 1..n {
                total += Rational::min_of(&self.sigma[u], &self.sigma[v]);
            }
        }
        total
    }

    /// The complement graph: same vertices, `mu'(u, v) = min(sigma) - mu(u, v)`,
    /// dropping pairs whose complement membership is zero.
    pub fn complement(&self) -> FuzzyGraph {
        let n = self.vertex_count();
        let mut mu = BTreeMap::new();
        for u in 0..n {
            for v in u + 1..n {
                let full = Rational::min_of(&self.sigma[u], &self.sigma[v]);
                let rest = match self.mu(u, v) {
                    Some(m) => full - m,
                    None => full.clone(),
                };
                if rest.is_positive() {
                    mu.insert((u, v), rest);
                }
            }
        }
        Self::assemble(
            self.ids.clone(),
            self.index.clone(),
            self.sigma.clone(),
            mu,
        )
    }

    /// The subgraph induced by `keep`, vertices in ascending index order.
    pub fn induced_subgraph(&self, keep: &BTreeSet<usize>) -> Result<FuzzyGraph, GraphError> {
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.vertex_count()) {
            return Err(GraphError::IndexOutOfRange(bad));
        }
        let remap: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let ids: Vec<String> = keep.iter().map(|&v| self.ids[v].clone()).collect();
        let index = ids.iter().cloned().zip(0..).collect();
        let sigma = keep.iter().map(|&v| self.sigma[v].clone()).collect();
        let mu = self
            .mu
            .iter()
            .filter_map(|(&(u, v), m)| Some(((remap.get(&u).copied()?, remap.get(&v).copied()?), m.clone())))
            .collect();
        Ok(Self::assemble(ids, index, sigma, mu))
    }

    /// True when every pair is adjacent with `mu = min(sigma)`.
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                self.mu(u, v)
                    .is_some_and(|m| m == Rational::min_of(&self.sigma[u], &self.sigma[v]))
            })
        })
    }

    /// True when the edge `{u, v}` exists and is effective (`mu = min(sigma)`).
    pub fn is_effective(&self, u: usize, v: usize) -> bool {
        self.mu(u, v)
            .is_some_and(|m| m == Rational::min_of(&self.sigma[u], &self.sigma[v]))
    }

    /// Vertex indices of each connected component of the underlying graph,
    /// components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn minimal_edge_is_valid() {
        let g = fixtures::edge();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.mu(1, 0), Some(&r("0.3")));
    }

    #[test]
    fn rejects_edge_above_vertex_membership() {
        let err = FuzzyGraph::build(
            [("u", r("0.3")), ("v", r("0.3"))],
            [("u", "v", r("0.4"))],
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::EdgeExceedsVertexMembership(_)));
    }

    #[test]
    fn rejects_each_invalid_shape() {
        let two = || [("u", r("0.5")), ("v", r("0.5"))];
        let none: [(&str, &str, Rational); 0] = [];
        assert!(matches!(
            FuzzyGraph::build([("u", r("0.5")), ("u", r("0.5"))], none.clone()),
            Err(GraphError::DuplicateVertex(_))
        ));
        assert!(matches!(
            FuzzyGraph::build(two(), [("u", "w", r("0.1"))]),
            Err(GraphError::UnknownEndpoint(_))
        ));
        assert!(matches!(
            FuzzyGraph::build(two(), [("u", "u", r("0.1"))]),
            Err(GraphError::SelfLoop(_))
        ));
        assert!(matches!(
            FuzzyGraph::build([("u", r("0"))], none.clone()),
            Err(GraphError::MembershipOutOfRange { .. })
        ));
        assert!(matches!(
            FuzzyGraph::build([("u", r("1.5"))], none),
            Err(GraphError::MembershipOutOfRange { .. })
        ));
        assert!(matches!(
            FuzzyGraph::build(two(), [("u", "v", r("0"))]),
            Err(GraphError::MembershipOutOfRange { .. })
        ));
        assert!(matches!(
            FuzzyGraph::build(two(), [("u", "v", r("0.1")), ("v", "u", r("0.2"))]),
            Err(GraphError::DuplicateEdge(_, _))
        ));
    }

    #[test]
    fn order_and_size() {
        assert_eq!(fixtures::edge().order(), r("0.6"));
        assert_eq!(fixtures::star().order(), r("1.7"));
        assert_eq!(fixtures::empty3().order(), r("1.5"));
        assert_eq!(fixtures::empty3().size(), Rational::zero());
        assert_eq!(fixtures::star().size(), r("0.8"));
        assert_eq!(fixtures::c6().size(), r("1.22"));
    }

    #[test]
    fn scalar_cardinality_examples() {
        let star = fixtures::star();
        assert_eq!(star.scalar_cardinality_of(&["c"]).unwrap(), r("0.2"));
        assert_eq!(
            star.scalar_cardinality_of::<&str>(&[]).unwrap(),
            Rational::zero()
        );
        assert_eq!(
            fixtures::edge().scalar_cardinality_of(&["u", "v"]).unwrap(),
            r("0.6")
        );
        assert!(matches!(
            star.scalar_cardinality_of(&["zz"]),
            Err(GraphError::UnknownVertex(_))
        ));
    }

    #[test]
    fn complement_examples() {
        assert!(fixtures::edge().complement().is_edgeless());
        let k3 = fixtures::empty3().complement();
        assert_eq!(k3.edge_count(), 3);
        assert!(k3.edges().all(|(_, _, m)| m == &r("0.5")));
        assert!(k3.is_complete());
        let star = fixtures::star();
        assert_eq!(star.complement().complement(), star);
    }

    #[test]
    fn induced_subgraph_keeps_memberships() {
        let g = fixtures::tri_b();
        let h = g.induced_subgraph(&[0, 2].into_iter().collect()).unwrap();
        assert_eq!(h.ids(), ["a", "c"]);
        assert_eq!(h.mu(0, 1), Some(&r("0.2")));
    }

    #[test]
    fn components_of_match_fixture() {
        let comps = fixtures::matching().components();
        assert_eq!(comps.len(), 3);
    }
}
