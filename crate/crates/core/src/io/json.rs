//! The JSON interchange formats. Every membership and every reported value is
//! a string holding an exact decimal or fraction; plain JSON numbers are also
//! accepted on input and read from their literal text.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize};
use serde_json::{json, Map, Value};

use crate::connectivity::StrongProfile;
use crate::families::{make_complete, make_complete_bipartite, make_cycle, make_path};
use crate::graph::FuzzyGraph;
use crate::io::IoError;
use crate::rational::Rational;
use crate::solvers::{Labeling, SolveResult, Witness};

/// A rational read from either `"0.3"` or `0.3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Scalar(pub Rational);

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(serde_json::Number),
        }
        let text = match Raw::deserialize(deserializer)? {
            Raw::Text(s) => s,
            Raw::Number(n) => n.to_string(),
        };
        text.parse().map(Scalar).map_err(serde::de::Error::custom)
    }
}

fn scalars(v: &[Scalar]) -> Vec<Rational> {
    v.iter().map(|s| s.0.clone()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: String,
    sigma: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    u: String,
    v: String,
    mu: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    #[serde(default)]
    edges: Vec<EdgeDoc>,
}

pub fn graph_to_value(g: &FuzzyGraph) -> Value {
    let doc = GraphDoc {
        vertices: (0..g.vertex_count())
            .map(|v| VertexDoc {
                id: g.id(v).to_string(),
                sigma: Scalar(g.sigma(v).clone()),
            })
            .collect(),
        edges: g
            .edges()
            .map(|(u, v, m)| EdgeDoc {
                u: g.id(u).to_string(),
                v: g.id(v).to_string(),
                mu: Scalar(m.clone()),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("graph documents always serialize")
}

pub fn graph_to_json(g: &FuzzyGraph) -> String {
    let mut text = serde_json::to_string_pretty(&graph_to_value(g)).expect("serializable");
    text.push('\n');
    text
}

pub fn graph_from_value(value: Value) -> Result<FuzzyGraph, IoError> {
    let doc: GraphDoc = serde_json::from_value(value)?;
    Ok(FuzzyGraph::build(
        doc.vertices.into_iter().map(|v| (v.id, v.sigma.0)),
        doc.edges.into_iter().map(|e| (e.u, e.v, e.mu.0)),
    )?)
}

pub fn graph_from_json(text: &str) -> Result<FuzzyGraph, IoError> {
    graph_from_value(serde_json::from_str(text)?)
}

pub(crate) fn read_text(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<FuzzyGraph, IoError> {
    graph_from_json(&read_text(path.as_ref())?)
}

pub fn write_graph(g: &FuzzyGraph, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    fs::write(path, graph_to_json(g)).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

fn ids(g: &FuzzyGraph, vs: impl IntoIterator<Item = usize>) -> Value {
    vs.into_iter().map(|v| Value::from(g.id(v))).collect()
}

/// `{"labels": {id: 0|1|2, ..}, "weight": ".."}`
pub fn labeling_to_value(g: &FuzzyGraph, f: &Labeling) -> Value {
    let labels: Map<String, Value> = f
        .labels()
        .iter()
        .enumerate()
        .map(|(v, l)| (g.id(v).to_string(), Value::from(l.value())))
        .collect();
    json!({ "labels": labels, "weight": f.weight().to_string() })
}

/// Solver output: value, method, explored nodes and the witness (`labels`
/// and `weight` for a labeling, `set` for a dominating set).
pub fn solve_result_to_value(g: &FuzzyGraph, res: &SolveResult) -> Value {
    let mut out = Map::new();
    out.insert("value".into(), res.value.to_string().into());
    out.insert("method".into(), res.method.to_string().into());
    out.insert("nodes".into(), res.nodes_explored.into());
    match &res.witness {
        Witness::Labeling(f) => {
            if let Value::Object(m) = labeling_to_value(g, f) {
                out.extend(m);
            }
        }
        Witness::Set(s) => {
            out.insert("set".into(), ids(g, s.iter().copied()));
        }
    }
    Value::Object(out)
}

/// Strong edges, strong neighbourhoods, `mu_s`, degrees, extrema and the
/// universal vertices of `g`.
pub fn profile_to_value(g: &FuzzyGraph, profile: &StrongProfile) -> Value {
    let per_vertex = |f: &dyn Fn(usize) -> Value| -> Value {
        Value::Object(
            (0..g.vertex_count())
                .map(|v| (g.id(v).to_string(), f(v)))
                .collect(),
        )
    };
    let strong: Vec<Value> = profile
        .strong_edges()
        .iter()
        .map(|&(u, v)| json!([g.id(u), g.id(v)]))
        .collect();
    let x = profile.extrema();
    let opt = |r: &Option<Rational>| r.as_ref().map_or(Value::Null, |r| r.to_string().into());
    json!({
        "strong_edges": strong,
        "strong_neighbors": per_vertex(&|v| ids(g, profile.strong_neighbors(v).iter().copied())),
        "mu_s": per_vertex(&|v| profile.mu_s(v).to_string().into()),
        "degrees": per_vertex(&|v| {
            let d = profile.degrees(v);
            json!({"d": d.d.to_string(), "d_s": d.d_s.to_string(), "d_sn": d.d_sn.to_string()})
        }),
        "extrema": {
            "min_strong_degree": x.min_strong_degree.to_string(),
            "max_strong_degree": x.max_strong_degree.to_string(),
            "min_strong_neighborhood_degree": x.min_strong_neighborhood_degree.to_string(),
            "max_strong_neighborhood_degree": x.max_strong_neighborhood_degree.to_string(),
            "mu_min": opt(&x.mu_min),
            "mu_max": opt(&x.mu_max),
        },
        "universal": ids(g, profile.universal().iter().copied()),
        "order": g.order().to_string(),
        "size": g.size().to_string(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Complete,
    Bipartite,
    Cycle,
    Path,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Sigmas {
    Flat(Vec<Scalar>),
    /// The two sides of a bipartite graph.
    Sides(Vec<Vec<Scalar>>),
}

/// `{"family": "complete"|"bipartite"|"cycle"|"path", "sigmas": [..], "mus": [..]}`;
/// bipartite specs give `"sigmas": [[x ..], [y ..]]` and no `mus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub family: FamilyKind,
    pub sigmas: Sigmas,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mus: Option<Vec<Scalar>>,
}

impl FamilySpec {
    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<FuzzyGraph, IoError> {
        let bad = |m: &str| IoError::BadSpec(format!("{:?}: {m}", self.family).to_lowercase());
        let flat = || match &self.sigmas {
            Sigmas::Flat(s) => Ok(scalars(s)),
            Sigmas::Sides(_) => Err(bad("sigmas must be a flat list")),
        };
        let mus = || {
            self.mus
                .as_deref()
                .map(scalars)
                .ok_or_else(|| bad("mus are required"))
        };
        let no_mus = || match self.mus {
            Some(_) => Err(bad("mus are determined by sigmas")),
            None => Ok(()),
        };
        Ok(match self.family {
            FamilyKind::Complete => {
                no_mus()?;
                make_complete(&flat()?)?
            }
            FamilyKind::Bipartite => {
                no_mus()?;
                match &self.sigmas {
                    Sigmas::Sides(sides) if sides.len() == 2 => {
                        make_complete_bipartite(&scalars(&sides[0]), &scalars(&sides[1]))?
                    }
                    _ => return Err(bad("sigmas must be [[x ..], [y ..]]")),
                }
            }
            FamilyKind::Cycle => make_cycle(&flat()?, &mus()?)?,
            FamilyKind::Path => make_path(&flat()?, &mus()?)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::strong_profile;
    use crate::fixtures;
    use crate::solvers::{gamma_s, gamma_snr};

    #[test]
    fn fixtures_round_trip() {
        for (name, g) in fixtures::all() {
            let back = graph_from_json(&graph_to_json(&g)).unwrap();
            assert_eq!(back, g, "{name}");
        }
    }

    #[test]
    fn numbers_are_read_exactly() {
        let g = graph_from_json(
            r#"{"vertices":[{"id":"a","sigma":0.1},{"id":"b","sigma":"1/3"}],
                "edges":[{"u":"a","v":"b","mu":0.1}]}"#,
        )
        .unwrap();
        assert_eq!(g.sigma(0), &"0.1".parse::<Rational>().unwrap());
        assert_eq!(g.sigma(1), &Rational::new(1, 3));
        assert!(graph_to_json(&g).contains("\"1/3\""));
    }

    #[test]
    fn invalid_documents() {
        assert!(matches!(graph_from_json("{"), Err(IoError::Json(_))));
        assert!(matches!(
            graph_from_json(r#"{"vertices":[{"id":"a","sigma":"0.5"}],"edges":[{"u":"a","v":"b","mu":"0.1"}]}"#),
            Err(IoError::Graph(_))
        ));
        assert!(matches!(
            graph_from_json(r#"{"vertices":[{"id":"a","sigma":"x"}]}"#),
            Err(IoError::Json(_))
        ));
    }

    #[test]
    fn solve_output() {
        let g = fixtures::star();
        let p = strong_profile(&g);
        let v = solve_result_to_value(&g, &gamma_s(&p).unwrap());
        assert_eq!(v["value"], "0.2");
        assert_eq!(v["set"], json!(["c"]));
        let v = solve_result_to_value(&g, &gamma_snr(&p).unwrap());
        assert_eq!(v["value"], "0.4");
        assert_eq!(v["labels"]["c"], 2);
        assert_eq!(v["labels"]["l1"], 0);
    }

    #[test]
    fn profile_output() {
        let g = fixtures::tri_b();
        let v = profile_to_value(&g, &strong_profile(&g));
        assert_eq!(v["strong_edges"], json!([["a", "b"], ["b", "c"]]));
        assert_eq!(v["universal"], json!(["b"]));
        let e = fixtures::empty3();
        let v = profile_to_value(&e, &strong_profile(&e));
        assert_eq!(v["strong_edges"], json!([]));
    }

    #[test]
    fn family_specs() {
        let spec = FamilySpec::from_json(r#"{"family":"bipartite","sigmas":[["0.1","0.3"],["0.3","0.3","0.3"]]}"#).unwrap();
        assert_eq!(spec.build().unwrap(), fixtures::k23());
        let spec = FamilySpec::from_json(
            r#"{"family":"cycle","sigmas":[0.5,0.5,0.5,0.5,0.5,0.5],"mus":[0.3,0.3,0.3,0.3,0.01,0.01]}"#,
        )
        .unwrap();
        assert_eq!(spec.build().unwrap(), fixtures::c6());
        let spec = FamilySpec::from_json(r#"{"family":"path","sigmas":[1,1,1]}"#).unwrap();
        assert!(matches!(spec.build(), Err(IoError::BadSpec(_))));
        assert!(FamilySpec::from_json(r#"{"family":"star","sigmas":[1]}"#).is_err());
    }
}
