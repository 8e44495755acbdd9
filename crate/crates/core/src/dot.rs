//! Graphviz `graph` export.

use std::fmt::Write;

use crate::document::{DocumentError, GraphDocument};
use crate::graph::vertex_sums;

/// Renders an undirected description with edge labels and, when the labeling
/// is complete, induced sums as vertex annotations. Output is ordered by
/// vertex id and edge id.
pub fn export_dot(doc: &GraphDocument) -> Result<String, DocumentError> {
    let g = doc.graph()?;
    let f = doc.edge_labeling()?;
    let sums = f.as_ref().and_then(|f| vertex_sums(&g, f).ok());
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match sums.as_ref().map(|s| s[v]) {
            Some(s) => writeln!(out, "  \"{v}\" [label=\"{v}\\n{s}\", xlabel=\"{s}\"];"),
            None => writeln!(out, "  \"{v}\";"),
        }
        .unwrap();
    }
    for e in g.edges() {
        match f.as_ref().and_then(|f| f.get(e.id)) {
            Some(l) => writeln!(
                out,
                "  \"{}\" -- \"{}\" [id=\"{}\", label=\"{l}\"];",
                e.u, e.v, e.id
            ),
            None => writeln!(out, "  \"{}\" -- \"{}\" [id=\"{}\"];", e.u, e.v, e.id),
        }
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
