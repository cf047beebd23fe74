//! DOT and JSON adjacency exports.

use std::fmt::Write;

use serde::Serialize;

use super::CayleyGraph;

/// `{order, degree, edges, labels}`; `degree` is null for irregular graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjacencyDocument {
    pub order: usize,
    pub degree: Option<usize>,
    pub edges: Vec<[usize; 2]>,
    pub labels: Vec<String>,
}

pub fn to_json_document(g: &CayleyGraph) -> AdjacencyDocument {
    AdjacencyDocument {
        order: g.vertex_count(),
        degree: g.is_regular(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        labels: g.labels().to_vec(),
    }
}

/// Undirected DOT graph with vertices labelled by ring-element names.
pub fn to_dot(g: &CayleyGraph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", escape(name));
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(g.label(v)));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_cayley;
    use crate::ring::Atom;

    #[test]
    fn json_document_for_z4() {
        let g = build_cayley(&Atom::Zn(4).build().unwrap());
        let doc = to_json_document(&g);
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"order":4,"degree":2,"edges":[[0,1],[0,3],[1,2],[2,3]],"labels":["0","1","2","3"]}"#
        );
    }

    #[test]
    fn dot_uses_element_names() {
        let g = build_cayley(&Atom::Z2X2.build().unwrap());
        let dot = to_dot(&g, "Z2[x]/(x^2)");
        assert!(dot.starts_with("graph \"Z2[x]/(x^2)\" {"));
        assert!(dot.contains("[label=\"1+x\"]"));
        assert_eq!(dot.matches(" -- ").count(), 4);
    }
}
