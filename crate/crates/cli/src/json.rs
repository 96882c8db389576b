//! JSON encodings. Vertices are 1-indexed and colours are renumbered
//! `1, 2, ..` by first occurrence, matching the text format.

use pointpart::{Coloring, Multigraph, VertexSet};
use serde_json::{json, Map, Value};

/// Bumped whenever a field changes meaning or disappears.
pub const FORMAT_VERSION: u64 = 1;

pub fn graph(g: &Multigraph) -> Value {
    let edges: Vec<Value> = g.pairs().map(|(u, v, m)| json!([u + 1, v + 1, m])).collect();
    json!({ "n": g.order(), "edges": edges })
}

pub fn graphs<'a>(gs: impl IntoIterator<Item = &'a Multigraph>) -> Value {
    Value::Array(gs.into_iter().map(graph).collect())
}

pub fn vertex_set(s: VertexSet) -> Value {
    Value::Array(s.iter().map(|v| json!(v + 1)).collect())
}

pub fn coloring(c: &Coloring) -> Value {
    json!(c.normalized().assignment)
}

pub fn pair(u: usize, v: usize) -> Value {
    json!([u + 1, v + 1])
}

/// Adds `format_version` and `kind` to an object body.
pub fn document(kind: &str, body: Value) -> Value {
    let mut map = match body {
        Value::Object(map) => map,
        _ => Map::new(),
    };
    map.insert("format_version".into(), json!(FORMAT_VERSION));
    map.insert("kind".into(), json!(kind));
    Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_indexed() {
        let g = Multigraph::from_edges(3, &[(0, 2, 2), (0, 1, 1)]).unwrap();
        assert_eq!(graph(&g), json!({"n": 3, "edges": [[1, 2, 1], [1, 3, 2]]}));
        assert_eq!(coloring(&Coloring::new(vec![5, 0, 5], 1)), json!([1, 2, 1]));
        let doc = document("graph", json!({"graph": graph(&g)}));
        assert_eq!(doc["kind"], "graph");
        assert_eq!(doc["format_version"], 1);
    }
}
