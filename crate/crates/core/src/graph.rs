//! Graph and edge-labeling data model.
//!
//! Vertices are `(component, index)` pairs with 1-based indices. Edges are
//! identity-bearing list entries so that parallel edges can be represented and
//! edge labels stay attached to the same edge id while transformations rewire
//! endpoints.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A vertex `u_{m,i}`: component `m` and position `i`, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId {
    pub component: u32,
    pub index: u32,
}

impl VertexId {
    pub const fn new(component: u32, index: u32) -> Self {
        Self { component, index }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.component, self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid vertex `{0}`: expected `m:i` with positive integers")]
pub struct ParseVertexError(pub String);

impl FromStr for VertexId {
    type Err = ParseVertexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseVertexError(s.to_string());
        let (m, i) = s.trim().split_once(':').ok_or_else(err)?;
        let component: u32 = m.trim().parse().map_err(|_| err())?;
        let index: u32 = i.trim().parse().map_err(|_| err())?;
        if component == 0 || index == 0 {
            return Err(err());
        }
        Ok(Self { component, index })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn is_incident_to(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint opposite to `w`. Assumes `w` is an endpoint.
    pub fn other(&self, w: VertexId) -> VertexId {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    fn key(&self) -> (VertexId, VertexId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop: edge {edge} joins vertex {vertex} to itself")]
    Loop { edge: EdgeId, vertex: VertexId },
    #[error("parallel edge: {edge} duplicates an existing edge between {u} and {v}")]
    ParallelEdge {
        edge: EdgeId,
        u: VertexId,
        v: VertexId,
    },
    #[error("edge {edge} references undeclared vertex {vertex}")]
    UnknownVertex { edge: EdgeId, vertex: VertexId },
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate edge id {0}")]
    DuplicateEdgeId(EdgeId),
    #[error("edge {0} is not labeled")]
    UnlabeledEdge(EdgeId),
    #[error("labeling references edge {0} which is not in the graph")]
    UnknownEdge(EdgeId),
    #[error("label {label} on edge {edge} is not a positive integer")]
    NonPositiveLabel { edge: EdgeId, label: i64 },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(VertexId),
    #[error("induced sum at vertex {0} overflows 64-bit integers")]
    Overflow(VertexId),
}

/// An undirected graph with identified edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    allows_parallel: bool,
}

impl Graph {
    /// Validates and assembles a graph. Vertices and edges are stored sorted.
    pub fn new(
        mut vertices: Vec<VertexId>,
        mut edges: Vec<Edge>,
        allows_parallel: bool,
    ) -> Result<Self, GraphError> {
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0]));
        }
        edges.sort_by_key(|e| e.id);
        if let Some(w) = edges.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(GraphError::DuplicateEdgeId(w[0].id));
        }
        let mut seen = BTreeSet::new();
        for e in &edges {
            for w in [e.u, e.v] {
                if vertices.binary_search(&w).is_err() {
                    return Err(GraphError::UnknownVertex {
                        edge: e.id,
                        vertex: w,
                    });
                }
            }
            if e.u == e.v {
                return Err(GraphError::Loop {
                    edge: e.id,
                    vertex: e.u,
                });
            }
            if !allows_parallel && !seen.insert(e.key()) {
                return Err(GraphError::ParallelEdge {
                    edge: e.id,
                    u: e.u,
                    v: e.v,
                });
            }
        }
        Ok(Self {
            vertices,
            edges,
            allows_parallel,
        })
    }

    /// Single-component convenience constructor over vertices `1:1..=1:n`.
    pub fn from_pairs(n: u32, pairs: &[(u32, u32)]) -> Result<Self, GraphError> {
        let pairs: Vec<_> = pairs
            .iter()
            .map(|&(a, b)| (VertexId::new(1, a), VertexId::new(1, b)))
            .collect();
        graph_from_edges(&[n], &pairs, false)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn allows_parallel(&self) -> bool {
        self.allows_parallel
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().filter(move |e| e.is_incident_to(v))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident_edges(v).count()
    }

    pub fn degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut deg: BTreeMap<_, _> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for e in &self.edges {
            *deg.get_mut(&e.u).unwrap() += 1;
            *deg.get_mut(&e.v).unwrap() += 1;
        }
        deg
    }

    pub fn are_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.edges
            .iter()
            .any(|e| (e.u == a && e.v == b) || (e.u == b && e.v == a))
    }

    /// Distinct neighbors of `v`, sorted.
    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.incident_edges(v).map(|e| e.other(v)).collect()
    }

    /// Deduplicated adjacency over vertex indices.
    pub fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vertices.len()];
        for e in &self.edges {
            let a = self.vertex_index(e.u).unwrap();
            let b = self.vertex_index(e.v).unwrap();
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj.into_iter().map(|s| s.into_iter().collect()).collect()
    }
}

/// Builds a graph from per-component vertex counts and endpoint pairs. Edge ids
/// are assigned `1, 2, ...` in input order.
pub fn graph_from_edges(
    vertex_count_per_component: &[u32],
    edge_pairs: &[(VertexId, VertexId)],
    allows_parallel: bool,
) -> Result<Graph, GraphError> {
    let vertices = vertex_count_per_component
        .iter()
        .enumerate()
        .flat_map(|(m, &count)| (1..=count).map(move |i| VertexId::new(m as u32 + 1, i)))
        .collect();
    let edges = edge_pairs
        .iter()
        .enumerate()
        .map(|(k, &(u, v))| Edge {
            id: EdgeId(k as u32 + 1),
            u,
            v,
        })
        .collect();
    Graph::new(vertices, edges, allows_parallel)
}

/// Edge id → positive integer label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeLabeling {
    assignment: BTreeMap<EdgeId, i64>,
}

impl EdgeLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I>(pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (EdgeId, i64)>,
    {
        let mut f = Self::new();
        for (id, label) in pairs {
            f.insert(id, label)?;
        }
        Ok(f)
    }

    /// Labels edges `e1, e2, ...` with the given values in order.
    pub fn from_sequence(labels: &[i64]) -> Result<Self, GraphError> {
        Self::from_pairs(
            labels
                .iter()
                .enumerate()
                .map(|(k, &l)| (EdgeId(k as u32 + 1), l)),
        )
    }

    pub fn insert(&mut self, id: EdgeId, label: i64) -> Result<Option<i64>, GraphError> {
        if label <= 0 {
            return Err(GraphError::NonPositiveLabel { edge: id, label });
        }
        Ok(self.assignment.insert(id, label))
    }

    pub fn get(&self, id: EdgeId) -> Option<i64> {
        self.assignment.get(&id).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, i64)> + '_ {
        self.assignment.iter().map(|(&k, &v)| (k, v))
    }

    /// True iff the labels are exactly `{1, ..., q}` on the `q` edges of `g`.
    pub fn is_bijection_for(&self, g: &Graph) -> bool {
        if self.len() != g.edge_count() || g.edges().iter().any(|e| self.get(e.id).is_none()) {
            return false;
        }
        let q = g.edge_count() as i64;
        let labels: BTreeSet<i64> = self.assignment.values().copied().collect();
        labels.len() == self.len() && labels.iter().all(|&l| (1..=q).contains(&l))
    }
}

/// A graph together with a labeling of its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labeling: EdgeLabeling,
}

impl LabeledGraph {
    pub fn new(graph: Graph, labeling: EdgeLabeling) -> Self {
        Self { graph, labeling }
    }

    pub fn sums(&self) -> Result<BTreeMap<VertexId, i64>, GraphError> {
        vertex_sums(&self.graph, &self.labeling)
    }

    pub fn verify(&self) -> Result<VerificationReport, GraphError> {
        verify_local_antimagic(&self.graph, &self.labeling)
    }
}

/// Induced vertex sums `f^+(v)`; parallel edges contribute once per edge.
pub fn vertex_sums(g: &Graph, f: &EdgeLabeling) -> Result<BTreeMap<VertexId, i64>, GraphError> {
    if let Some((id, _)) = f.iter().find(|(id, _)| g.edge(*id).is_none()) {
        return Err(GraphError::UnknownEdge(id));
    }
    let mut sums: BTreeMap<VertexId, i64> = g.vertices().iter().map(|&v| (v, 0)).collect();
    for e in g.edges() {
        let label = f.get(e.id).ok_or(GraphError::UnlabeledEdge(e.id))?;
        for w in [e.u, e.v] {
            let s = sums.get_mut(&w).unwrap();
            *s = s.checked_add(label).ok_or(GraphError::Overflow(w))?;
        }
    }
    Ok(sums)
}

/// Result of checking a labeling for the local antimagic property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub is_bijection: bool,
    /// Edges whose endpoints share an induced sum.
    pub conflicts: Vec<EdgeId>,
    /// Induced sum → number of vertices carrying it.
    pub spectrum: BTreeMap<i64, usize>,
    pub color_count: usize,
    pub sums: BTreeMap<VertexId, i64>,
}

impl VerificationReport {
    pub fn is_local_antimagic(&self) -> bool {
        self.is_bijection && self.conflicts.is_empty()
    }
}

pub fn verify_local_antimagic(
    g: &Graph,
    f: &EdgeLabeling,
) -> Result<VerificationReport, GraphError> {
    let degrees = g.degrees();
    if let Some((&v, _)) = degrees.iter().find(|(_, &d)| d == 0) {
        return Err(GraphError::IsolatedVertex(v));
    }
    let sums = vertex_sums(g, f)?;
    let conflicts = g
        .edges()
        .iter()
        .filter(|e| sums[&e.u] == sums[&e.v])
        .map(|e| e.id)
        .collect();
    let mut spectrum = BTreeMap::new();
    for &s in sums.values() {
        *spectrum.entry(s).or_insert(0) += 1;
    }
    Ok(VerificationReport {
        is_bijection: f.is_bijection_for(g),
        conflicts,
        color_count: spectrum.len(),
        spectrum,
        sums,
    })
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<VertexId>> {
    let adj = g.simple_adjacency();
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for start in 0..g.vertex_count() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(a) = stack.pop() {
            comp.push(g.vertices()[a]);
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChromaticError {
    #[error("chromatic number exceeds bound {max_k}")]
    ExceedsBound { max_k: usize },
}

/// Exact chromatic number by backtracking, one component at a time.
///
/// Parallel edges are ignored. Returns `ExceedsBound` if no proper coloring
/// with at most `max_k` colors exists.
pub fn chromatic_number_exact(g: &Graph, max_k: usize) -> Result<usize, ChromaticError> {
    let adj = g.simple_adjacency();
    let mut best = 0;
    for comp in connected_components(g) {
        let local: Vec<usize> = comp.iter().map(|&v| g.vertex_index(v).unwrap()).collect();
        let pos: BTreeMap<usize, usize> = local.iter().enumerate().map(|(k, &a)| (a, k)).collect();
        let sub: Vec<Vec<usize>> = local
            .iter()
            .map(|a| adj[*a].iter().map(|b| pos[b]).collect())
            .collect();
        let lower = if sub.iter().any(|n| !n.is_empty()) {
            2
        } else {
            1
        };
        let mut k = lower.max(best);
        loop {
            if k > max_k {
                return Err(ChromaticError::ExceedsBound { max_k });
            }
            if is_colorable(&sub, k) {
                break;
            }
            k += 1;
        }
        best = best.max(k);
    }
    Ok(best)
}

/// Whether the graph given by `adj` admits a proper `k`-coloring. Uses
/// saturation-ordered backtracking with the usual new-color symmetry cut.
pub fn is_colorable(adj: &[Vec<usize>], k: usize) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut color = vec![usize::MAX; n];
    // blocked[v][c]: number of colored neighbors of v using color c
    let mut blocked = vec![vec![0u32; k]; n];
    color_rec(adj, k, &mut color, &mut blocked, 0, 0)
}

fn color_rec(
    adj: &[Vec<usize>],
    k: usize,
    color: &mut [usize],
    blocked: &mut [Vec<u32>],
    colored: usize,
    used: usize,
) -> bool {
    if colored == adj.len() {
        return true;
    }
    let v = (0..adj.len())
        .filter(|&v| color[v] == usize::MAX)
        .max_by_key(|&v| {
            let sat = blocked[v].iter().filter(|&&c| c > 0).count();
            (sat, adj[v].len(), std::cmp::Reverse(v))
        })
        .unwrap();
    for c in 0..k.min(used + 1) {
        if blocked[v][c] > 0 {
            continue;
        }
        color[v] = c;
        for &w in &adj[v] {
            blocked[w][c] += 1;
        }
        if color_rec(adj, k, color, blocked, colored + 1, used.max(c + 1)) {
            return true;
        }
        for &w in &adj[v] {
            blocked[w][c] -= 1;
        }
        color[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId::new(1, i)
    }

    fn triangle() -> Graph {
        Graph::from_pairs(3, &[(1, 2), (2, 3), (1, 3)]).unwrap()
    }

    fn cycle(n: u32) -> Graph {
        let pairs: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Graph::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn triangle_has_three_sequential_edge_ids() {
        let g = triangle();
        assert_eq!(g.vertex_count(), 3);
        let ids: Vec<_> = g.edges().iter().map(|e| e.id.0).collect();
        assert_eq!(ids, vec![1, 2, 3]);
    }

    #[test]
    fn parallel_pair_allowed_only_when_flagged() {
        let pairs = [(v(1), v(2)), (v(1), v(2))];
        let g = graph_from_edges(&[2], &pairs, true).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(v(1)), 2);
        let err = graph_from_edges(&[2], &pairs, false).unwrap_err();
        assert!(matches!(
            err,
            GraphError::ParallelEdge {
                edge: EdgeId(2),
                ..
            }
        ));
    }

    #[test]
    fn loop_is_rejected() {
        let err = graph_from_edges(&[1], &[(v(1), v(1))], false).unwrap_err();
        assert_eq!(
            err,
            GraphError::Loop {
                edge: EdgeId(1),
                vertex: v(1)
            }
        );
        assert!(err.to_string().starts_with("loop"));
    }

    #[test]
    fn undeclared_endpoint_is_rejected() {
        let err = Graph::from_pairs(2, &[(1, 3)]).unwrap_err();
        assert!(matches!(err, GraphError::UnknownVertex { .. }));
    }

    #[test]
    fn triangle_sums() {
        let g = triangle();
        let f = EdgeLabeling::from_sequence(&[1, 2, 3]).unwrap();
        let s = vertex_sums(&g, &f).unwrap();
        assert_eq!((s[&v(1)], s[&v(2)], s[&v(3)]), (4, 3, 5));
    }

    #[test]
    fn path_sums() {
        let g = Graph::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        let f = EdgeLabeling::from_sequence(&[1, 2]).unwrap();
        let s = vertex_sums(&g, &f).unwrap();
        assert_eq!(s.values().copied().collect::<Vec<_>>(), vec![1, 3, 2]);
    }

    #[test]
    fn unlabeled_edge_is_reported() {
        let f = EdgeLabeling::from_sequence(&[1, 2]).unwrap();
        assert_eq!(
            vertex_sums(&triangle(), &f),
            Err(GraphError::UnlabeledEdge(EdgeId(3)))
        );
    }

    #[test]
    fn zero_label_rejected() {
        assert!(matches!(
            EdgeLabeling::from_sequence(&[0]),
            Err(GraphError::NonPositiveLabel { .. })
        ));
    }

    #[test]
    fn triangle_verifies_with_three_colors() {
        let f = EdgeLabeling::from_sequence(&[1, 2, 3]).unwrap();
        let r = verify_local_antimagic(&triangle(), &f).unwrap();
        assert!(r.is_local_antimagic());
        assert_eq!(r.color_count, 3);
    }

    #[test]
    fn paw_conflict_on_ca() {
        // a=1, b=2, c=3, d=4; edges ab, bc, ca, ad
        let g = Graph::from_pairs(4, &[(1, 2), (2, 3), (3, 1), (1, 4)]).unwrap();
        let f = EdgeLabeling::from_sequence(&[1, 4, 2, 3]).unwrap();
        let r = verify_local_antimagic(&g, &f).unwrap();
        assert!(r.is_bijection);
        assert_eq!(r.conflicts, vec![EdgeId(3)]);
        assert_eq!(r.sums[&v(1)], 6);
        assert_eq!(r.sums[&v(3)], 6);
        assert!(!r.is_local_antimagic());
    }

    #[test]
    fn c4_non_adjacent_repeat_is_fine() {
        let f = EdgeLabeling::from_sequence(&[1, 2, 3, 4]).unwrap();
        let r = verify_local_antimagic(&cycle(4), &f).unwrap();
        assert_eq!(
            r.sums.values().copied().collect::<Vec<_>>(),
            vec![5, 3, 5, 7]
        );
        assert!(r.is_local_antimagic());
        assert_eq!(r.color_count, 3);
    }

    #[test]
    fn non_bijective_labels_flagged() {
        let f = EdgeLabeling::from_sequence(&[1, 2, 5]).unwrap();
        let r = verify_local_antimagic(&triangle(), &f).unwrap();
        assert!(!r.is_bijection);
        assert!(!r.is_local_antimagic());
    }

    #[test]
    fn isolated_vertex_is_precondition_failure() {
        let g = Graph::from_pairs(3, &[(1, 2)]).unwrap();
        let f = EdgeLabeling::from_sequence(&[1]).unwrap();
        assert_eq!(
            verify_local_antimagic(&g, &f),
            Err(GraphError::IsolatedVertex(v(3)))
        );
    }

    #[test]
    fn overflow_is_reported() {
        let g = Graph::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        let f = EdgeLabeling::from_sequence(&[i64::MAX, 1]).unwrap();
        assert_eq!(vertex_sums(&g, &f), Err(GraphError::Overflow(v(2))));
    }

    #[test]
    fn chromatic_small_cycles() {
        assert_eq!(chromatic_number_exact(&triangle(), 8), Ok(3));
        assert_eq!(chromatic_number_exact(&cycle(4), 8), Ok(2));
        assert_eq!(chromatic_number_exact(&cycle(7), 8), Ok(3));
        assert_eq!(
            chromatic_number_exact(&triangle(), 2),
            Err(ChromaticError::ExceedsBound { max_k: 2 })
        );
    }

    #[test]
    fn chromatic_complete_graph() {
        let mut pairs = Vec::new();
        for a in 1..=5 {
            for b in a + 1..=5 {
                pairs.push((a, b));
            }
        }
        let k5 = Graph::from_pairs(5, &pairs).unwrap();
        assert_eq!(chromatic_number_exact(&k5, 10), Ok(5));
    }

    #[test]
    fn components_of_triangle_plus_edge() {
        let g = Graph::from_pairs(5, &[(1, 2), (2, 3), (1, 3), (4, 5)]).unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1], vec![v(4), v(5)]);
    }

    #[test]
    fn vertex_id_parse() {
        assert_eq!("2:7".parse::<VertexId>(), Ok(VertexId::new(2, 7)));
        assert!("2-7".parse::<VertexId>().is_err());
        assert!("0:1".parse::<VertexId>().is_err());
        assert_eq!(VertexId::new(3, 4).to_string(), "3:4");
    }
}
