//! Strength of connectedness, strong edges and everything derived from them.
//!
//! `CONN(u, v)` is the largest bottleneck (minimum edge membership) over all
//! `u - v` paths. It is computed for every pair at once with a max-min
//! Floyd-Warshall sweep over the ranks of the distinct edge memberships, so
//! the inner loop compares small integers instead of big rationals.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{pair, FuzzyGraph, GraphError, Pair};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("strength of connectedness needs two distinct vertices, got `{0}` twice")]
    SameVertex(String),
    #[error("not a path: {0}")]
    NotAPath(String),
    #[error("underlying graph is not a single cycle")]
    NotACycle,
}

/// Per-vertex degree statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degrees {
    /// Sum of memberships of all incident edges.
    pub d: Rational,
    /// Sum of memberships of incident strong edges.
    pub d_s: Rational,
    /// Sum of vertex memberships over the strong neighbourhood.
    pub d_sn: Rational,
}

/// Graph-wide extrema. `mu_min`/`mu_max` range over strong edges only and are
/// `None` when the graph has no strong edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extrema {
    pub min_strong_degree: Rational,
    pub max_strong_degree: Rational,
    pub min_strong_neighborhood_degree: Rational,
    pub max_strong_neighborhood_degree: Rational,
    pub mu_min: Option<Rational>,
    pub mu_max: Option<Rational>,
}

/// Cached strong-edge analysis of one graph. Built once by [`strong_profile`]
/// and consumed by the solvers, closed forms and the audit.
#[derive(Clone, Debug)]
pub struct StrongProfile {
    n: usize,
    conn: Vec<Rational>,
    strong_edges: BTreeSet<Pair>,
    ns: Vec<Vec<usize>>,
    mu_s: Vec<Rational>,
    degrees: Vec<Degrees>,
    extrema: Extrema,
    universal: Vec<usize>,
}

impl StrongProfile {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `CONN(u, v)`; zero across components and on the diagonal.
    pub fn conn(&self, u: usize, v: usize) -> &Rational {
        &self.conn[u * self.n + v]
    }

    pub fn strong_edges(&self) -> &BTreeSet<Pair> {
        &self.strong_edges
    }

    pub fn is_strong(&self, u: usize, v: usize) -> bool {
        self.strong_edges.contains(&pair(u, v))
    }

    /// Strong neighbourhood `N_s(v)`, ascending.
    pub fn strong_neighbors(&self, v: usize) -> &[usize] {
        &self.ns[v]
    }

    pub fn strong_neighborhoods(&self) -> &[Vec<usize>] {
        &self.ns
    }

    /// Minimum strong-edge membership at `v`, zero when `N_s(v)` is empty.
    pub fn mu_s(&self, v: usize) -> &Rational {
        &self.mu_s[v]
    }

    pub fn mu_s_all(&self) -> &[Rational] {
        &self.mu_s
    }

    pub fn degrees(&self, v: usize) -> &Degrees {
        &self.degrees[v]
    }

    pub fn extrema(&self) -> &Extrema {
        &self.extrema
    }

    /// Vertices whose closed strong neighbourhood is the whole vertex set.
    pub fn universal(&self) -> &[usize] {
        &self.universal
    }
}

/// Distinct edge memberships in ascending order; rank `r + 1` stands for
/// `levels[r]` and rank 0 for "no path".
fn membership_levels(g: &FuzzyGraph) -> Vec<Rational> {
    let set: BTreeSet<&Rational> = g.edges().map(|(_, _, m)| m).collect();
    set.into_iter().cloned().collect()
}

fn conn_ranks(g: &FuzzyGraph, levels: &[Rational]) -> Vec<u32> {
    let n = g.vertex_count();
    let mut rank = vec![0u32; n * n];
    for (u, v, m) in g.edges() {
        let r = levels.binary_search(m).expect("level of an existing edge") as u32 + 1;
        rank[u * n + v] = r;
        rank[v * n + u] = r;
    }
    for k in 0..n {
        for i in 0..n {
            let ik = rank[i * n + k];
            if ik == 0 || i == k {
                continue;
            }
            for j in 0..n {
                if j == i || j == k {
                    continue;
                }
                let through = ik.min(rank[k * n + j]);
                if through > rank[i * n + j] {
                    rank[i * n + j] = through;
                }
            }
        }
    }
    rank
}

/// All-pairs strength of connectedness as an `n * n` row-major table.
pub fn conn_table(g: &FuzzyGraph) -> Vec<Rational> {
    let levels = membership_levels(g);
    conn_ranks(g, &levels)
        .into_iter()
        .map(|r| match r {
            0 => Rational::zero(),
            r => levels[r as usize - 1].clone(),
        })
        .collect()
}

/// `CONN(u, v)` for two distinct vertices given by id.
pub fn strength_of_connectedness(g: &FuzzyGraph, u: &str, v: &str) -> Result<Rational, ConnectivityError> {
    let ui = g.index_of(u)?;
    let vi = g.index_of(v)?;
    if ui == vi {
        return Err(ConnectivityError::SameVertex(u.to_string()));
    }
    let n = g.vertex_count();
    Ok(conn_table(g).swap_remove(ui * n + vi))
}

/// Strength (weakest membership) of a walk given as a vertex sequence.
pub fn path_strength<S: AsRef<str>>(g: &FuzzyGraph, path: &[S]) -> Result<Rational, ConnectivityError> {
    if path.len() < 2 {
        return Err(ConnectivityError::NotAPath(
            "a path needs at least one edge".into(),
        ));
    }
    let idx: Vec<usize> = path
        .iter()
        .map(|id| g.index_of(id.as_ref()))
        .collect::<Result<_, _>>()?;
    let mut weakest: Option<&Rational> = None;
    for w in idx.windows(2) {
        let m = g.mu(w[0], w[1]).ok_or_else(|| {
            ConnectivityError::NotAPath(format!("{} - {} is not an edge", g.id(w[0]), g.id(w[1])))
        })?;
        weakest = Some(match weakest {
            Some(cur) => Rational::min_of(cur, m),
            None => m,
        });
    }
    Ok(weakest.cloned().expect("at least one edge"))
}

/// Builds the full strong profile of `g`.
pub fn strong_profile(g: &FuzzyGraph) -> StrongProfile {
    let n = g.vertex_count();
    let conn = conn_table(g);

    let strong_edges: BTreeSet<Pair> = g
        .edges()
        .filter(|&(u, v, m)| m == &conn[u * n + v])
        .map(|(u, v, _)| (u, v))
        .collect();

    let mut ns = vec![Vec::new(); n];
    for &(u, v) in &strong_edges {
        ns[u].push(v);
        ns[v].push(u);
    }
    for list in &mut ns {
        list.sort_unstable();
    }

    let mu_s: Vec<Rational> = (0..n)
        .map(|u| {
            ns[u]
                .iter()
                .map(|&v| g.mu(u, v).expect("strong edge exists"))
                .min()
                .cloned()
                .unwrap_or_else(Rational::zero)
        })
        .collect();

    let degrees: Vec<Degrees> = (0..n)
        .map(|u| Degrees {
            d: g.neighbors(u)
                .iter()
                .map(|&v| g.mu(u, v).expect("neighbour edge"))
                .sum(),
            d_s: ns[u]
                .iter()
                .map(|&v| g.mu(u, v).expect("strong edge"))
                .sum(),
            d_sn: ns[u].iter().map(|&v| g.sigma(v)).sum(),
        })
        .collect();

    let strong_weights = strong_edges
        .iter()
        .map(|&(u, v)| g.mu(u, v).expect("strong edge"));
    let extrema = Extrema {
        min_strong_degree: degrees.iter().map(|d| &d.d_s).min().cloned().unwrap_or_default(),
        max_strong_degree: degrees.iter().map(|d| &d.d_s).max().cloned().unwrap_or_default(),
        min_strong_neighborhood_degree: degrees
            .iter()
            .map(|d| &d.d_sn)
            .min()
            .cloned()
            .unwrap_or_default(),
        max_strong_neighborhood_degree: degrees
            .iter()
            .map(|d| &d.d_sn)
            .max()
            .cloned()
            .unwrap_or_default(),
        mu_min: strong_weights.clone().min().cloned(),
        mu_max: strong_weights.max().cloned(),
    };

    let universal = (0..n).filter(|&u| ns[u].len() + 1 == n).collect();

    StrongProfile {
        n,
        conn,
        strong_edges,
        ns,
        mu_s,
        degrees,
        extrema,
        universal,
    }
}

/// Vertex order `u1 .. un` of a graph whose underlying graph is one cycle,
/// starting at index 0 and continuing to its lower-index neighbour.
pub fn cycle_order(g: &FuzzyGraph) -> Result<Vec<usize>, ConnectivityError> {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() != n || (0..n).any(|v| g.degree_count(v) != 2) {
        return Err(ConnectivityError::NotACycle);
    }
    let mut order = vec![0usize];
    let mut prev = 0usize;
    let mut cur = g.neighbors(0)[0];
    while cur != 0 {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("degree two");
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return Err(ConnectivityError::NotACycle);
    }
    Ok(order)
}

/// True iff every edge of the cycle `c` is strong.
pub fn is_strong_fuzzy_cycle(c: &FuzzyGraph) -> Result<bool, ConnectivityError> {
    cycle_order(c)?;
    let profile = strong_profile(c);
    Ok(profile.strong_edges().len() == c.edge_count())
}

/// The counting criterion: at least two edges attain the minimum weight.
pub fn has_two_minimum_edges(c: &FuzzyGraph) -> Result<bool, ConnectivityError> {
    cycle_order(c)?;
    let min = c.min_positive_membership().expect("cycle has edges");
    Ok(c.edges().filter(|(_, _, m)| *m == min).count() >= 2)
}
