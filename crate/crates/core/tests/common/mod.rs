//! Independent brute-force oracles and random instances shared by the
//! integration tests. Nothing here calls the library's connectivity or solver
//! code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use fuzzy_roman::{FuzzyGraph, Rational};
use num_integer::Integer;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Maximum over all simple `u - v` paths of the weakest edge on the path.
pub fn oracle_conn(g: &FuzzyGraph) -> Vec<Vec<Rational>> {
    let n = g.vertex_count();
    let mut best = vec![vec![Rational::zero(); n]; n];
    for s in 0..n {
        let mut on_path = vec![false; n];
        on_path[s] = true;
        walk(g, s, s, None, &mut on_path, &mut best);
    }
    best
}

fn walk(
    g: &FuzzyGraph,
    start: usize,
    at: usize,
    strength: Option<Rational>,
    on_path: &mut [bool],
    best: &mut [Vec<Rational>],
) {
    for &next in g.neighbors(at) {
        if on_path[next] {
            continue;
        }
        let m = g.mu(at, next).unwrap().clone();
        let s = match &strength {
            Some(s) if *s < m => s.clone(),
            _ => m,
        };
        if s > best[start][next] {
            best[start][next] = s.clone();
        }
        on_path[next] = true;
        walk(g, start, next, Some(s), on_path, best);
        on_path[next] = false;
    }
}

pub struct OracleProfile {
    pub strong: BTreeSet<(usize, usize)>,
    pub ns: Vec<Vec<usize>>,
    pub mu_s: Vec<Rational>,
}

pub fn oracle_profile(g: &FuzzyGraph) -> OracleProfile {
    let n = g.vertex_count();
    let conn = oracle_conn(g);
    let mut strong = BTreeSet::new();
    let mut ns = vec![Vec::new(); n];
    for (u, v, m) in g.edges() {
        if *m == conn[u][v] {
            strong.insert((u, v));
            ns[u].push(v);
            ns[v].push(u);
        }
    }
    let mu_s = (0..n)
        .map(|u| {
            ns[u]
                .iter()
                .map(|&v| g.mu(u, v).unwrap().clone())
                .min()
                .unwrap_or_else(Rational::zero)
        })
        .collect();
    for list in &mut ns {
        list.sort_unstable();
    }
    OracleProfile { strong, ns, mu_s }
}

/// Weights as integers over a common denominator.
fn units(ws: &[Rational]) -> (Vec<i64>, i64) {
    let l = ws.iter().fold(1i64, |acc, w| acc.lcm(&w.denom().to_i64().unwrap()));
    let u = ws
        .iter()
        .map(|w| (w * l).numer().to_i64().unwrap())
        .collect();
    (u, l)
}

/// Minimum weight over all `3^n` labelings where every 0 has a strong
/// neighbour labelled 2.
pub fn oracle_gamma_snr(g: &FuzzyGraph) -> Rational {
    let p = oracle_profile(g);
    let n = g.vertex_count();
    let (w, l) = units(&p.mu_s);
    let mut labels = vec![0u8; n];
    let mut best = i64::MAX;
    let total = 3usize.pow(n as u32);
    for mut code in 0..total {
        for x in labels.iter_mut() {
            *x = (code % 3) as u8;
            code /= 3;
        }
        let ok = (0..n).all(|u| labels[u] != 0 || p.ns[u].iter().any(|&v| labels[v] == 2));
        if ok {
            let weight: i64 = (0..n).map(|u| w[u] * i64::from(labels[u])).sum();
            best = best.min(weight);
        }
    }
    Rational::new(best, l)
}

/// Minimum `sum mu_s` over all strong dominating sets.
pub fn oracle_gamma_s(g: &FuzzyGraph) -> Rational {
    let p = oracle_profile(g);
    let n = g.vertex_count();
    let (w, l) = units(&p.mu_s);
    let mut best = i64::MAX;
    for mask in 0u32..(1 << n) {
        let inside = |v: usize| mask >> v & 1 == 1;
        if (0..n).all(|u| inside(u) || p.ns[u].iter().any(|&v| inside(v))) {
            best = best.min((0..n).filter(|&v| inside(v)).map(|v| w[v]).sum());
        }
    }
    Rational::new(best, l)
}

/// `n` vertices on the grid `1/d`, each pair an edge with probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64, d: i64) -> FuzzyGraph {
    let sigma: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=d)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                let k = rng.gen_range(1..=sigma[i].min(sigma[j]));
                edges.push((format!("v{i}"), format!("v{j}"), Rational::new(k, d)));
            }
        }
    }
    FuzzyGraph::build(
        sigma.iter().enumerate().map(|(i, &s)| (format!("v{i}"), Rational::new(s, d))),
        edges,
    )
    .unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Graphs with up to `max_n` vertices on a coarse grid, so that ties between
/// memberships are frequent.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = FuzzyGraph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(1i64..=5, n),
                proptest::collection::vec((any::<bool>(), 1i64..=5), n * (n - 1) / 2),
            )
        })
        .prop_map(|(sigma, pairs)| {
            let n = sigma.len();
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    let (present, m) = pairs[k];
                    k += 1;
                    if present {
                        let m = m.min(sigma[i]).min(sigma[j]);
                        edges.push((format!("v{i}"), format!("v{j}"), Rational::new(m, 5)));
                    }
                }
            }
            FuzzyGraph::build(
                sigma.iter().enumerate().map(|(i, &s)| (format!("v{i}"), Rational::new(s, 5))),
                edges,
            )
            .unwrap()
        })
}

pub fn grid_values(rng: &mut impl Rng, n: usize, d: i64) -> Vec<Rational> {
    (0..n).map(|_| Rational::new(rng.gen_range(1..=d), d)).collect()
}

/// Random complete graph with `1..=max_n` vertices.
pub fn random_complete(rng: &mut impl Rng, max_n: usize, d: i64) -> FuzzyGraph {
    let n = rng.gen_range(1..=max_n);
    fuzzy_roman::families::make_complete(&grid_values(rng, n, d)).unwrap()
}

/// Random complete bipartite graph with sides up to `(3, 5)`, in random
/// order so that either side may end up as `X`.
pub fn random_bipartite(rng: &mut impl Rng, d: i64) -> FuzzyGraph {
    let a = rng.gen_range(1..=3);
    let b = rng.gen_range(1..=5);
    let (xs, ys) = (grid_values(rng, a, d), grid_values(rng, b, d));
    if rng.gen_bool(0.5) {
        fuzzy_roman::families::make_complete_bipartite(&xs, &ys).unwrap()
    } else {
        fuzzy_roman::families::make_complete_bipartite(&ys, &xs).unwrap()
    }
}

/// `2x2` instance where `2 mu_s(x1)` lies strictly between `mu_s(x2)` and
/// `mu_s(y2)`.
pub fn in_gap_regime(form: &fuzzy_roman::families::BipartiteForm, mu_s: &[Rational]) -> bool {
    if form.x.len() != 2 || form.y.len() != 2 {
        return false;
    }
    let twice = &mu_s[form.x[0]] * 2;
    let (a, b) = (&mu_s[form.x[1]], &mu_s[form.y[1]]);
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    *lo < twice && twice < *hi
}
