//! JSON graph files.
//!
//! ```json
//! {"nu": 2, "dim": 1,
//!  "edges": [{"from": 0, "to": 1, "offset": [0]}, {"from": 0, "to": 0, "offset": [1], "weight": "i"}],
//!  "potential": ["0", "1/2"]}
//! ```
//! Weights and potentials are exact strings; `weight` defaults to 1 and `potential` to zero.

use std::path::Path;

use flatband_exact::{format_rational, parse_rational, BigRational, Gaussian, Ring};
use serde::{Deserialize, Serialize};

use crate::error::FlatBandError;
use crate::graph::{EdgeSpec, PeriodicGraph};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    nu: usize,
    dim: usize,
    edges: Vec<EdgeFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    potential: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    from: usize,
    to: usize,
    offset: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<String>,
}

pub fn graph_from_json(text: &str) -> Result<PeriodicGraph, FlatBandError> {
    let f: GraphFile = serde_json::from_str(text).map_err(|e| FlatBandError::Parse(e.to_string()))?;
    let mut edges = Vec::with_capacity(f.edges.len());
    for (k, e) in f.edges.into_iter().enumerate() {
        let weight = match e.weight {
            None => Gaussian::one(),
            Some(s) => Gaussian::parse(&s).ok_or_else(|| FlatBandError::Parse(format!("edge {}: bad weight {:?}", k, s)))?,
        };
        edges.push(EdgeSpec { from: e.from, to: e.to, offset: e.offset, weight });
    }
    let potential = match f.potential {
        None => vec![BigRational::zero(); f.nu],
        Some(v) => v
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| FlatBandError::Parse(format!("bad potential entry {:?}", s))))
            .collect::<Result<_, _>>()?,
    };
    Ok(PeriodicGraph::from_raw(f.nu, f.dim, edges, potential))
}

pub fn graph_to_json(g: &PeriodicGraph) -> String {
    graph_to_json_named(g, None)
}

pub fn graph_to_json_named(g: &PeriodicGraph, name: Option<&str>) -> String {
    let f = GraphFile {
        name: name.map(String::from),
        nu: g.nu(),
        dim: g.dim(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeFile {
                from: e.from,
                to: e.to,
                offset: e.offset.clone(),
                weight: if e.weight.is_one() { None } else { Some(e.weight.to_string()) },
            })
            .collect(),
        potential: if g.has_zero_potential() { None } else { Some(g.potential().iter().map(format_rational).collect()) },
    };
    let mut s = serde_json::to_string_pretty(&f).expect("graph serializes");
    s.push('\n');
    s
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<PeriodicGraph, FlatBandError> {
    let text = std::fs::read_to_string(path.as_ref()).map_err(|e| FlatBandError::Io(format!("{}: {}", path.as_ref().display(), e)))?;
    graph_from_json(&text)
}

pub fn write_graph(path: impl AsRef<Path>, g: &PeriodicGraph) -> Result<(), FlatBandError> {
    std::fs::write(path.as_ref(), graph_to_json(g)).map_err(|e| FlatBandError::Io(format!("{}: {}", path.as_ref().display(), e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use flatband_exact::ratio;

    #[test]
    fn roundtrip_is_byte_stable() {
        let g = PeriodicGraph::new(
            2,
            1,
            vec![EdgeSpec::weighted(0, 0, vec![1], Gaussian::parse("i").unwrap()), EdgeSpec::new(0, 1, vec![-1])],
        )
        .with_potential(vec![ratio(1, 2), BigRational::zero()]);
        let s = graph_to_json(&g);
        let back = graph_from_json(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(graph_to_json(&back), s);
        assert!(s.contains("\"weight\": \"i\""));
        assert!(s.contains("\"1/2\""));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(graph_from_json(r#"{"nu":1,"dim":1,"edges":[],"potential":["2/4"]}"#).is_err());
        assert!(graph_from_json(r#"{"nu":1,"dim":1,"edges":[{"from":0,"to":0,"offset":[1],"weight":"x"}]}"#).is_err());
        assert!(graph_from_json(r#"{"nu":1,"dim":1,"edges":[],"extra":1}"#).is_err());
    }

    #[test]
    fn omitted_fields_default() {
        let g = graph_from_json(r#"{"nu":2,"dim":1,"edges":[{"from":0,"to":1,"offset":[0]}]}"#).unwrap();
        assert!(g.has_zero_potential());
        assert!(g.edges()[0].weight.is_one());
        assert!(!graph_to_json(&g).contains("potential"));
    }
}
