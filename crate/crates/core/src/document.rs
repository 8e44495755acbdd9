//! Self-describing JSON document: graph, optional labeling, and provenance.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, EdgeId, EdgeLabeling, Graph, GraphError, LabeledGraph, VertexId};
use crate::lau::{expected_spectrum, LauParams};
use crate::transform::{ClassColors, MergeFamily, SwapSpec};

pub const FORMAT_VERSION: &str = "luvgraph-doc/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: u32,
    pub u: VertexId,
    pub v: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumEntry {
    pub color: i64,
    pub multiplicity: u64,
}

/// One step in how a document came to be.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum HistoryEntry {
    Construct {
        t: u32,
        p: u32,
        n: u32,
        steps: Vec<u32>,
        attachments: Vec<Vec<u32>>,
    },
    Gcl {
        p: u32,
        n: u32,
        s: Vec<u32>,
    },
    Swap(SwapSpec),
    Merge {
        family: MergeFamily,
        groups: Vec<Vec<VertexId>>,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    /// Induced colors of the even, odd and attachment classes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassColors>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<SpectrumEntry>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub history: Vec<HistoryEntry>,
}

impl Metadata {
    pub fn params(&self) -> Option<LauParams> {
        Some(LauParams {
            t: self.t?,
            p: self.p?,
            n: self.n?,
        })
    }

    /// Metadata for a freshly built, canonically labeled LAU graph.
    pub fn for_lau(params: LauParams, family: &str) -> Self {
        let spec = expected_spectrum(params.t, params.p, params.n);
        Self {
            t: Some(params.t),
            p: Some(params.p),
            n: Some(params.n),
            family: Some(family.to_string()),
            classes: Some(ClassColors::from(spec)),
            spectrum: Some(
                spec.classes()
                    .iter()
                    .map(|c| SpectrumEntry {
                        color: c.color,
                        multiplicity: c.multiplicity,
                    })
                    .collect(),
            ),
            history: Vec::new(),
        }
    }

    pub fn set_spectrum(&mut self, spectrum: &BTreeMap<i64, usize>) {
        self.spectrum = Some(
            spectrum
                .iter()
                .map(|(&color, &m)| SpectrumEntry {
                    color,
                    multiplicity: m as u64,
                })
                .collect(),
        );
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub version: String,
    #[serde(default)]
    pub allows_parallel: bool,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labeling: Option<BTreeMap<u32, i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported document version `{found}` (expected `{expected}`)")]
    Version {
        found: String,
        expected: &'static str,
    },
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Deserialize)]
struct VersionProbe {
    version: Option<String>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph, f: Option<&EdgeLabeling>, metadata: Option<Metadata>) -> Self {
        Self {
            version: FORMAT_VERSION.to_string(),
            allows_parallel: g.allows_parallel(),
            vertices: g.vertices().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.0,
                    u: e.u,
                    v: e.v,
                })
                .collect(),
            labeling: f.map(|f| f.iter().map(|(id, l)| (id.0, l)).collect()),
            metadata,
        }
    }

    pub fn from_labeled(lg: &LabeledGraph, metadata: Option<Metadata>) -> Self {
        Self::from_graph(&lg.graph, Some(&lg.labeling), metadata)
    }

    pub fn graph(&self) -> Result<Graph, DocumentError> {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                id: EdgeId(e.id),
                u: e.u,
                v: e.v,
            })
            .collect();
        Ok(Graph::new(
            self.vertices.clone(),
            edges,
            self.allows_parallel,
        )?)
    }

    pub fn edge_labeling(&self) -> Result<Option<EdgeLabeling>, DocumentError> {
        self.labeling
            .as_ref()
            .map(|m| EdgeLabeling::from_pairs(m.iter().map(|(&id, &l)| (EdgeId(id), l))))
            .transpose()
            .map_err(Into::into)
    }

    pub fn labeled(&self) -> Result<LabeledGraph, DocumentError> {
        let f = self
            .edge_labeling()?
            .ok_or_else(|| DocumentError::Invalid("document has no labeling".into()))?;
        Ok(LabeledGraph::new(self.graph()?, f))
    }

    /// Structural checks beyond what the JSON shape enforces.
    pub fn validate(&self) -> Result<(), DocumentError> {
        if self.version != FORMAT_VERSION {
            return Err(DocumentError::Version {
                found: self.version.clone(),
                expected: FORMAT_VERSION,
            });
        }
        if let Some(v) = self
            .vertices
            .iter()
            .find(|v| v.component == 0 || v.index == 0)
        {
            return Err(DocumentError::Invalid(format!(
                "vertex {v}: component and index start at 1"
            )));
        }
        self.graph()?;
        if let Some(labels) = &self.labeling {
            let ids: BTreeSet<u32> = self.edges.iter().map(|e| e.id).collect();
            for (&id, &label) in labels {
                if !ids.contains(&id) {
                    return Err(DocumentError::Invalid(format!(
                        "labeling references unknown edge id {id}"
                    )));
                }
                if label < 1 {
                    return Err(DocumentError::Invalid(format!(
                        "edge {id} has label {label}; labels start at 1"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Serializes to pretty JSON with a trailing newline.
pub fn save(doc: &GraphDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn load(text: &str) -> Result<GraphDocument, DocumentError> {
    let probe: VersionProbe = serde_json::from_str(text)?;
    match probe.version.as_deref() {
        Some(FORMAT_VERSION) => {}
        Some(other) => {
            return Err(DocumentError::Version {
                found: other.to_string(),
                expected: FORMAT_VERSION,
            })
        }
        None => {
            return Err(DocumentError::Parse {
                line: 1,
                column: 1,
                message: "missing field `version`".into(),
            })
        }
    }
    let doc: GraphDocument = serde_json::from_str(text)?;
    doc.validate()?;
    Ok(doc)
}

pub fn save_file(doc: &GraphDocument, path: &Path) -> Result<(), DocumentError> {
    std::fs::write(path, save(doc)).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_file(path: &Path) -> Result<GraphDocument, DocumentError> {
    let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lau::{build_lau, canonical_labeling, LauSpec};

    fn p9_doc() -> GraphDocument {
        let spec = LauSpec::from_steps(1, 9, &[1, 3], &[vec![1, 3]]).unwrap();
        let pg = build_lau(&spec).unwrap();
        let f = canonical_labeling(&pg).unwrap();
        let mut meta = Metadata::for_lau(spec.homogeneous().unwrap(), "lau");
        meta.history.push(HistoryEntry::Construct {
            t: 1,
            p: 9,
            n: 2,
            steps: vec![1, 3],
            attachments: vec![vec![1, 3]],
        });
        GraphDocument::from_graph(&pg.graph, Some(&f), Some(meta))
    }

    #[test]
    fn round_trip_is_identity() {
        let doc = p9_doc();
        let text = save(&doc);
        assert_eq!(load(&text).unwrap(), doc);
        assert_eq!(save(&load(&text).unwrap()), text);
    }

    #[test]
    fn missing_edge_id_is_parse_error() {
        let text = save(&p9_doc()).replacen("\"id\": 1,", "", 1);
        let err = load(&text).unwrap_err();
        let DocumentError::Parse { line, message, .. } = err else {
            panic!("{err}")
        };
        assert!(line > 1);
        assert!(message.contains("missing field `id`"), "{message}");
    }

    #[test]
    fn zero_label_is_rejected() {
        let mut doc = p9_doc();
        doc.labeling.as_mut().unwrap().insert(1, 0);
        let err = load(&save(&doc)).unwrap_err();
        assert!(
            matches!(err, DocumentError::Invalid(ref m) if m.contains("labels start at 1")),
            "{err}"
        );
    }

    #[test]
    fn version_mismatch() {
        let text = save(&p9_doc()).replace(FORMAT_VERSION, "luvgraph-doc/99");
        assert!(matches!(load(&text), Err(DocumentError::Version { .. })));
    }

    #[test]
    fn unknown_label_id_rejected() {
        let mut doc = p9_doc();
        doc.labeling.as_mut().unwrap().insert(999, 5);
        assert!(matches!(load(&save(&doc)), Err(DocumentError::Invalid(_))));
    }

    #[test]
    fn graph_errors_surface() {
        let mut doc = p9_doc();
        doc.edges[1].v = doc.edges[1].u;
        assert!(matches!(
            load(&save(&doc)),
            Err(DocumentError::Graph(GraphError::Loop { .. }))
        ));
    }
}
