//! Text formats for instances and reports.
//!
//! An instance is `{"vertices": n, "edges": [[u, v], ...], "lists": [[...], ...]}`
//! with `lists[i]` belonging to edge `i`. A report is
//! `{"colors": [...], "trace": [...], "conforming": bool}`.

use serde::{Deserialize, Serialize};

use crate::color::{Color, ColorLists};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};
use crate::solve::{Instance, SolveReport};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    vertices: usize,
    edges: Vec<[VertexId; 2]>,
    lists: Vec<Vec<Color>>,
}

fn json_error(what: &str, e: serde_json::Error) -> Error {
    Error::Parse(format!(
        "{what}: line {}, column {}: {e}",
        e.line(),
        e.column()
    ))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(|e| json_error("instance", e))?;
    for (i, &[u, v]) in doc.edges.iter().enumerate() {
        for w in [u, v] {
            if w >= doc.vertices {
                return Err(Error::Parse(format!(
                    "edges[{i}]: vertex {w} out of range (vertices = {})",
                    doc.vertices
                )));
            }
        }
        if u == v {
            return Err(Error::Parse(format!("edges[{i}]: loop at vertex {u}")));
        }
    }
    if doc.lists.len() != doc.edges.len() {
        return Err(Error::Parse(format!(
            "lists: {} lists for {} edges",
            doc.lists.len(),
            doc.edges.len()
        )));
    }
    let graph = Multigraph::new(
        doc.vertices,
        doc.edges.iter().map(|&[u, v]| (u, v)).collect(),
    )?;
    Ok(Instance {
        graph,
        lists: ColorLists::from_vecs(doc.lists),
    })
}

/// One-line canonical form: lists sorted, no duplicates.
pub fn emit_instance(inst: &Instance) -> String {
    let g = &inst.graph;
    let doc = InstanceDoc {
        vertices: g.vertex_count(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        lists: (0..g.edge_count())
            .map(|e| {
                inst.lists
                    .get(e)
                    .map(|l| l.iter().copied().collect())
                    .unwrap_or_default()
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("instance documents always serialize")
}

pub fn parse_report(text: &str) -> Result<SolveReport> {
    serde_json::from_str(text).map_err(|e| json_error("report", e))
}

pub fn emit_report(report: &SolveReport) -> String {
    serde_json::to_string(report).expect("reports always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_round_trip() {
        let text = r#"{"vertices":2,"edges":[[0,1]],"lists":[[1]]}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(emit_instance(&inst), text);
    }

    #[test]
    fn whitespace_is_ignored() {
        let text = "{\n  \"vertices\": 2,\n  \"edges\": [[0, 1]],\n  \"lists\": [[3, 1]]\n}\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(
            emit_instance(&inst),
            r#"{"vertices":2,"edges":[[0,1]],"lists":[[1,3]]}"#
        );
    }

    #[test]
    fn out_of_range_vertex() {
        let err = parse_instance(r#"{"vertices":2,"edges":[[0,2]],"lists":[[1]]}"#).unwrap_err();
        assert!(err.to_string().contains("edges[0]"), "{err}");
    }

    #[test]
    fn duplicate_colors_collapse() {
        let inst = parse_instance(r#"{"vertices":2,"edges":[[0,1]],"lists":[[2,2,1]]}"#).unwrap();
        assert_eq!(inst.lists.size(0), 2);
    }

    #[test]
    fn malformed_documents_report_position() {
        let err = parse_instance("{\n\"vertices\": 2,\n\"edges\": [[0,1]],\n\"lists\": [[1],]\n}")
            .unwrap_err();
        assert!(err.to_string().contains("line 4"), "{err}");
        let err = parse_instance(r#"{"vertices":2,"edges":[],"lists":[],"extra":1}"#).unwrap_err();
        assert!(err.to_string().contains("extra"), "{err}");
        assert!(parse_instance(r#"{"vertices":2,"edges":[[0,1]],"lists":[]}"#).is_err());
        assert!(parse_instance(r#"{"vertices":2,"edges":[[1,1]],"lists":[[1]]}"#).is_err());
    }

    #[test]
    fn report_round_trip() {
        let text = r#"{"colors":[1,2],"trace":[{"block":0,"class":"bipartite","entry":null,"forbidden":0,"depth":2}],"conforming":true}"#;
        let r = parse_report(text).unwrap();
        assert_eq!(emit_report(&r), text);
    }
}
