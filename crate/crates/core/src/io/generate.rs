//! Seeded random instances on a membership grid `{1/D, .., D/D}`.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::FuzzyGraph;
use crate::io::IoError;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    General,
    Cycle,
    Path,
    Complete,
    Bipartite,
}

impl FromStr for Topology {
    type Err = IoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "general" => Topology::General,
            "cycle" => Topology::Cycle,
            "path" => Topology::Path,
            "complete" => Topology::Complete,
            "bipartite" => Topology::Bipartite,
            other => return Err(IoError::BadSpec(format!("unknown topology `{other}`"))),
        })
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Topology::General => "general",
            Topology::Cycle => "cycle",
            Topology::Path => "path",
            Topology::Complete => "complete",
            Topology::Bipartite => "bipartite",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    /// Only used by the general topology.
    pub edge_probability: Rational,
    pub granularity: u32,
    pub seed: u64,
    pub topology: Topology,
}

impl Default for GenSpec {
    fn default() -> Self {
        GenSpec {
            n: 8,
            edge_probability: Rational::new(1, 2),
            granularity: 20,
            seed: 0,
            topology: Topology::General,
        }
    }
}

impl GenSpec {
    pub fn with_seed(&self, seed: u64) -> Self {
        GenSpec { seed, ..self.clone() }
    }
}

/// `n=8,p=0.5,D=20,seed=42,topology=cycle`; keys may also be separated by
/// whitespace and default as in [`GenSpec::default`].
impl FromStr for GenSpec {
    type Err = IoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut spec = GenSpec::default();
        for item in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| IoError::BadSpec(format!("expected key=value, got `{item}`")))?;
            let bad = |_| IoError::BadSpec(format!("bad value for {key}: `{value}`"));
            match key {
                "n" => spec.n = value.parse().map_err(bad)?,
                "p" | "edge_probability" => spec.edge_probability = value.parse()?,
                "D" | "d" | "granularity" => spec.granularity = value.parse().map_err(bad)?,
                "seed" => spec.seed = value.parse().map_err(bad)?,
                "topology" => spec.topology = value.parse()?,
                other => return Err(IoError::BadSpec(format!("unknown key `{other}`"))),
            }
        }
        Ok(spec)
    }
}

fn validate(spec: &GenSpec) -> Result<(), IoError> {
    let min_n = match spec.topology {
        Topology::Cycle => 3,
        Topology::Path | Topology::Bipartite => 2,
        _ => 1,
    };
    if spec.n < min_n {
        return Err(IoError::BadSpec(format!(
            "{} needs n >= {min_n}, got {}",
            spec.topology, spec.n
        )));
    }
    if spec.granularity == 0 {
        return Err(IoError::BadSpec("granularity must be positive".into()));
    }
    let p = &spec.edge_probability;
    if p.is_negative() || *p > 1 {
        return Err(IoError::BadSpec(format!("edge probability {p} is outside [0, 1]")));
    }
    Ok(())
}

/// Deterministic for a fixed spec. Vertex memberships are drawn first; each
/// edge then draws a grid value no larger than `min(sigma(u), sigma(v))`
/// (complete and bipartite topologies use that minimum itself).
pub fn generate(spec: &GenSpec) -> Result<FuzzyGraph, IoError> {
    validate(spec)?;
    let n = spec.n;
    let d = spec.granularity;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let grid = |k: u32| Rational::new(i64::from(k), i64::from(d));
    let sigma: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=d)).collect();

    let p_num = spec.edge_probability.numer().to_u64().expect("p <= 1");
    let p_den = spec.edge_probability.denom().to_u64().ok_or_else(|| {
        IoError::BadSpec("edge probability denominator is too large".into())
    })?;

    let pairs: Vec<(usize, usize, bool)> = match spec.topology {
        Topology::General => {
            let mut out = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_range(0..p_den) < p_num {
                        out.push((i, j, false));
                    }
                }
            }
            out
        }
        Topology::Cycle => (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n), false)).collect(),
        Topology::Path => (0..n - 1).map(|i| (i, i + 1, false)).collect(),
        Topology::Complete => (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j, true)))
            .collect(),
        Topology::Bipartite => {
            let half = n / 2;
            (0..half)
                .flat_map(|i| (half..n).map(move |j| (i, j, true)))
                .collect()
        }
    };

    let ids: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::with_capacity(pairs.len());
    for (i, j, effective) in pairs {
        let cap = sigma[i].min(sigma[j]);
        let k = if effective { cap } else { rng.gen_range(1..=cap) };
        edges.push((ids[i].clone(), ids[j].clone(), grid(k)));
    }
    let vertices = ids.iter().cloned().zip(sigma.into_iter().map(grid));
    Ok(FuzzyGraph::build(vertices, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::cycle_order;
    use crate::io::json::graph_to_json;
    use num_bigint::BigInt;

    #[test]
    fn same_seed_same_bytes() {
        let spec: GenSpec = "n=9,p=0.5,D=20,seed=42".parse().unwrap();
        assert_eq!(graph_to_json(&generate(&spec).unwrap()), graph_to_json(&generate(&spec).unwrap()));
        let other = generate(&spec.with_seed(43)).unwrap();
        assert_ne!(graph_to_json(&generate(&spec).unwrap()), graph_to_json(&other));
    }

    #[test]
    fn cycle_topology() {
        let spec: GenSpec = "n=5 topology=cycle seed=7".parse().unwrap();
        let g = generate(&spec).unwrap();
        assert_eq!(cycle_order(&g).unwrap().len(), 5);
    }

    #[test]
    fn memberships_stay_on_the_grid() {
        for seed in 0..20 {
            let g = generate(&GenSpec { seed, ..GenSpec::default() }).unwrap();
            let twenty = BigInt::from(20);
            for s in g.sigmas() {
                assert_eq!(&twenty % s.denom(), BigInt::from(0));
            }
            for (_, _, m) in g.edges() {
                assert_eq!(&twenty % m.denom(), BigInt::from(0));
            }
        }
    }

    #[test]
    fn complete_and_bipartite_are_effective() {
        let g = generate(&"n=6 topology=complete".parse().unwrap()).unwrap();
        assert!(g.is_complete());
        let g = generate(&"n=5 topology=bipartite".parse().unwrap()).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(g.edges().all(|(u, v, _)| g.is_effective(u, v)));
    }

    #[test]
    fn bad_specs() {
        for text in ["n=2,topology=cycle", "D=0", "p=1.5", "n=x", "q=3", "topology=star", "n"] {
            let spec = text.parse::<GenSpec>().and_then(|s| generate(&s));
            assert!(matches!(spec, Err(IoError::BadSpec(_)) | Err(IoError::Number(_))), "{text}");
        }
    }

    #[test]
    fn edge_probability_extremes() {
        let none = generate(&"n=6,p=0".parse().unwrap()).unwrap();
        assert!(none.is_edgeless());
        let all = generate(&"n=6,p=1".parse().unwrap()).unwrap();
        assert_eq!(all.edge_count(), 15);
    }
}
