//! Label-preserving transformations: edge swaps between equal-sum vertices,
//! generalized circulant composition, and the six vertex-merge families.
//!
//! Every transformation keeps edge ids and labels; only endpoints move.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{connected_components, Edge, EdgeId, Graph, GraphError, LabeledGraph, VertexId};
use crate::lau::{build_lau, canonical_labeling, ExpectedSpectrum, LauError, LauParams, LauSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Lau(#[from] LauError),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("vertex {0} appears in more than one merge group")]
    OverlappingGroups(VertexId),
    #[error("loop: edge {edge} would join merged vertex {vertex} to itself")]
    MergeLoop { edge: EdgeId, vertex: VertexId },
    #[error("parallel edge: merged vertex {merged} would have two edges to {neighbor}")]
    SharedNeighbor {
        merged: VertexId,
        neighbor: VertexId,
    },
    #[error("induced sums differ: f+({x}) = {sx}, f+({y}) = {sy}")]
    UnequalVertexSums {
        x: VertexId,
        y: VertexId,
        sx: i64,
        sy: i64,
    },
    #[error("{x} and {y} belong to the same component")]
    SameComponent { x: VertexId, y: VertexId },
    #[error("swap sets have sizes {x_size} and {y_size}; both must be equal and non-empty")]
    SwapSize { x_size: usize, y_size: usize },
    #[error("edge {edge} is not incident to {vertex} (or listed twice)")]
    NotIncident { edge: EdgeId, vertex: VertexId },
    #[error("swap set label sums differ: {sx} vs {sy}")]
    SwapSumMismatch { sx: i64, sy: i64 },
    #[error("swap would not leave the graph joined: {before} components before, {after} after")]
    SwapSplits { before: usize, after: usize },
    #[error("no admissible edge swap joins component {a} and component {b}")]
    NoSwapFound { a: u32, b: u32 },
    #[error("group sizes must all be at least 1 and include some s_i >= 2")]
    NoGroupToCompose,
    #[error("{t} components cannot be split into groups of {s}")]
    NotDivisible { t: usize, s: usize },
    #[error(
        "merge groups must each hold s >= 2 components and cover all {t} components exactly once"
    )]
    BadComponentGroups { t: usize },
    #[error("component {component} has {found} vertices of color {color}, expected {expected}")]
    ClassSizeMismatch {
        component: usize,
        color: i64,
        found: usize,
        expected: usize,
    },
    #[error("pairing ({a}, {b}) is invalid: {reason}")]
    Pairing {
        a: VertexId,
        b: VertexId,
        reason: PairingObstruction,
    },
    #[error("attachment vertex {0} is not paired exactly once")]
    Unpaired(VertexId),
    #[error("no valid pairing exists for the component containing {0}")]
    NoPairing(VertexId),
    #[error(
        "result is not a local antimagic 3-coloring ({color_count} colors, {conflicts} conflicts)"
    )]
    LostProperty {
        color_count: usize,
        conflicts: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairingObstruction {
    Adjacent,
    CommonNeighbor(VertexId),
    WrongColor { expected: i64, found: i64 },
    DifferentComponent,
    PartnerReused,
}

impl fmt::Display for PairingObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Adjacent => write!(f, "the vertices are adjacent"),
            Self::CommonNeighbor(w) => write!(f, "the vertices share neighbor {w}"),
            Self::WrongColor { expected, found } => {
                write!(f, "expected induced color {expected}, found {found}")
            }
            Self::DifferentComponent => write!(f, "the vertices lie in different components"),
            Self::PartnerReused => write!(f, "the partner is used by another pair"),
        }
    }
}

/// Induced colors of the three vertex classes of a three-colored LAU-type
/// labeling. Merges locate class members by these values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassColors {
    pub even: i64,
    pub odd: i64,
    pub attachment: i64,
}

impl From<ExpectedSpectrum> for ClassColors {
    fn from(s: ExpectedSpectrum) -> Self {
        Self {
            even: s.even.color,
            odd: s.odd.color,
            attachment: s.attachment.color,
        }
    }
}

/// Collapses each group to its smallest vertex. Incident edges keep their ids
/// and labels.
pub fn merge_vertices(
    lg: &LabeledGraph,
    groups: &[Vec<VertexId>],
    allow_parallel: bool,
) -> Result<LabeledGraph, TransformError> {
    let g = &lg.graph;
    let mut rep: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for group in groups {
        let Some(&head) = group.iter().min() else {
            continue;
        };
        for &v in group {
            if !g.contains_vertex(v) {
                return Err(TransformError::UnknownVertex(v));
            }
            if rep.insert(v, head).is_some() {
                return Err(TransformError::OverlappingGroups(v));
            }
        }
    }
    let map = |v: VertexId| rep.get(&v).copied().unwrap_or(v);
    let parallel_ok = allow_parallel || g.allows_parallel();
    let mut seen = BTreeSet::new();
    let mut edges = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let (u, v) = (map(e.u), map(e.v));
        if u == v {
            return Err(TransformError::MergeLoop {
                edge: e.id,
                vertex: u,
            });
        }
        if !parallel_ok && !seen.insert((u.min(v), u.max(v))) {
            let (merged, neighbor) = if u != e.u { (u, v) } else { (v, u) };
            return Err(TransformError::SharedNeighbor { merged, neighbor });
        }
        edges.push(Edge { id: e.id, u, v });
    }
    let vertices = g
        .vertices()
        .iter()
        .copied()
        .filter(|v| rep.get(v).is_none_or(|r| r == v))
        .collect();
    let graph = Graph::new(vertices, edges, parallel_ok)?;
    Ok(LabeledGraph::new(graph, lg.labeling.clone()))
}

/// An exchange of equal-sum incident edge sets between `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapSpec {
    pub x: VertexId,
    pub y: VertexId,
    /// Edges at `x` that move to `y`, sorted by id.
    pub from_x: Vec<EdgeId>,
    /// Edges at `y` that move to `x`, sorted by id.
    pub from_y: Vec<EdgeId>,
}

fn label_sum(lg: &LabeledGraph, ids: &[EdgeId]) -> Result<i64, GraphError> {
    ids.iter()
        .map(|&id| lg.labeling.get(id).ok_or(GraphError::UnlabeledEdge(id)))
        .sum()
}

fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= items.len() {
        rec(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Subset sums that the canonical labeling produces for `size` incident edges.
fn preferred_sums(params: LauParams, size: usize) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    if size == 0 || size % 2 == 1 {
        return out;
    }
    let half = (size / 2) as i64;
    let low = params.pair_sum_even_first();
    let high = params.pair_sum_odd_first();
    let ends = params.endpoint_pair_sum();
    out.insert(half * low);
    out.insert(half * high);
    out.insert((half - 1) * high + ends);
    out
}

/// Neighbor list of `w` after moving `leaving` away and `arriving` in, or
/// `None` if the result would have a loop or a repeated neighbor.
fn swapped_neighbors_ok(
    g: &Graph,
    w: VertexId,
    leaving: &[EdgeId],
    arriving: &[EdgeId],
    from: VertexId,
) -> bool {
    let mut nbrs: Vec<VertexId> = g
        .incident_edges(w)
        .filter(|e| !leaving.contains(&e.id))
        .map(|e| e.other(w))
        .collect();
    for id in arriving {
        let e = g.edge(*id).unwrap();
        nbrs.push(e.other(from));
    }
    if nbrs.contains(&w) {
        return false;
    }
    if g.allows_parallel() {
        return true;
    }
    let n = nbrs.len();
    nbrs.sort_unstable();
    nbrs.dedup();
    nbrs.len() == n
}

fn check_swap_endpoints(lg: &LabeledGraph, x: VertexId, y: VertexId) -> Result<(), TransformError> {
    for v in [x, y] {
        if !lg.graph.contains_vertex(v) {
            return Err(TransformError::UnknownVertex(v));
        }
    }
    if x.component == y.component {
        return Err(TransformError::SameComponent { x, y });
    }
    let sums = lg.sums()?;
    if sums[&x] != sums[&y] {
        return Err(TransformError::UnequalVertexSums {
            x,
            y,
            sx: sums[&x],
            sy: sums[&y],
        });
    }
    Ok(())
}

/// All equal-sum pairs `(S_x, S_y)` of `size` edges each whose exchange keeps
/// the graph loop-free (and simple, unless it already allows parallel edges).
///
/// `x` and `y` must carry equal induced sums and originate from different
/// components (their `component` labels differ). With `params`, candidates
/// whose sum matches a canonical-labeling pattern come first; ties are broken
/// lexicographically by edge ids.
pub fn find_swap_sets(
    lg: &LabeledGraph,
    x: VertexId,
    y: VertexId,
    size: usize,
    params: Option<LauParams>,
) -> Result<Vec<SwapSpec>, TransformError> {
    check_swap_endpoints(lg, x, y)?;
    let g = &lg.graph;
    let at = |v: VertexId| -> Vec<EdgeId> { g.incident_edges(v).map(|e| e.id).collect() };
    let (ex, ey) = (at(x), at(y));
    if size == 0 || size > ex.len() || size > ey.len() {
        return Ok(Vec::new());
    }
    let mut by_sum: BTreeMap<i64, Vec<Vec<EdgeId>>> = BTreeMap::new();
    for s in combinations(&ey, size) {
        by_sum.entry(label_sum(lg, &s)?).or_default().push(s);
    }
    let preferred = params.map(|p| preferred_sums(p, size)).unwrap_or_default();
    let mut out = Vec::new();
    for sx in combinations(&ex, size) {
        let sum = label_sum(lg, &sx)?;
        let Some(matches) = by_sum.get(&sum) else {
            continue;
        };
        for sy in matches {
            if swapped_neighbors_ok(g, x, &sx, sy, y) && swapped_neighbors_ok(g, y, sy, &sx, x) {
                let rank = !preferred.contains(&sum);
                out.push((
                    rank,
                    SwapSpec {
                        x,
                        y,
                        from_x: sx.clone(),
                        from_y: sy.clone(),
                    },
                ));
            }
        }
    }
    out.sort_by(|a, b| (a.0, &a.1.from_x, &a.1.from_y).cmp(&(b.0, &b.1.from_x, &b.1.from_y)));
    Ok(out.into_iter().map(|(_, s)| s).collect())
}

/// Moves `from_x` to `y` and `from_y` to `x`. Every induced sum is unchanged.
pub fn edge_swap(lg: &LabeledGraph, spec: &SwapSpec) -> Result<LabeledGraph, TransformError> {
    let (x, y) = (spec.x, spec.y);
    check_swap_endpoints(lg, x, y)?;
    if spec.from_x.is_empty() || spec.from_x.len() != spec.from_y.len() {
        return Err(TransformError::SwapSize {
            x_size: spec.from_x.len(),
            y_size: spec.from_y.len(),
        });
    }
    let g = &lg.graph;
    for (set, v) in [(&spec.from_x, x), (&spec.from_y, y)] {
        let distinct: BTreeSet<_> = set.iter().collect();
        for &id in set {
            let ok = distinct.len() == set.len() && g.edge(id).is_some_and(|e| e.is_incident_to(v));
            if !ok {
                return Err(TransformError::NotIncident {
                    edge: id,
                    vertex: v,
                });
            }
        }
    }
    let (sx, sy) = (label_sum(lg, &spec.from_x)?, label_sum(lg, &spec.from_y)?);
    if sx != sy {
        return Err(TransformError::SwapSumMismatch { sx, sy });
    }
    let comps = connected_components(g);
    let comp_of = |v: VertexId| comps.iter().position(|c| c.binary_search(&v).is_ok());
    let joined = comp_of(x) != comp_of(y);

    let edges = g
        .edges()
        .iter()
        .map(|e| {
            let (from, to) = if spec.from_x.contains(&e.id) {
                (x, y)
            } else if spec.from_y.contains(&e.id) {
                (y, x)
            } else {
                return *e;
            };
            let other = e.other(from);
            Edge {
                id: e.id,
                u: to,
                v: other,
            }
        })
        .collect();
    let graph = Graph::new(g.vertices().to_vec(), edges, g.allows_parallel())?;
    let before = comps.len();
    let after = connected_components(&graph).len();
    let expected = if joined { before - 1 } else { before };
    if after != expected {
        return Err(TransformError::SwapSplits { before, after });
    }
    Ok(LabeledGraph::new(graph, lg.labeling.clone()))
}

/// Searches for a size-2 swap joining the current components containing
/// vertices of original components `a` and `b`, trying even indices in order.
pub fn join_components(
    lg: &LabeledGraph,
    a: u32,
    b: u32,
    params: LauParams,
) -> Result<(LabeledGraph, SwapSpec), TransformError> {
    for i in (2..params.p).step_by(2) {
        let (x, y) = (VertexId::new(a, i), VertexId::new(b, i));
        if !lg.graph.contains_vertex(x) || !lg.graph.contains_vertex(y) {
            continue;
        }
        let candidates = match find_swap_sets(lg, x, y, 2, Some(params)) {
            Ok(c) => c,
            Err(TransformError::UnequalVertexSums { .. }) => continue,
            Err(e) => return Err(e),
        };
        for spec in candidates {
            if let Ok(next) = edge_swap(lg, &spec) {
                return Ok((next, spec));
            }
        }
    }
    Err(TransformError::NoSwapFound { a, b })
}

/// A generalized circulant LAU graph and how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GclGraph {
    pub labeled: LabeledGraph,
    /// Parameters of the underlying LAU graph (`t = Σ s_i`).
    pub params: LauParams,
    pub groups: Vec<Vec<u32>>,
    pub swaps: Vec<SwapSpec>,
}

/// Builds the canonically labeled LAU graph with `Σ s_i` components and joins
/// each run of `s_i` consecutive components by edge swaps. Explicit
/// `swap_plans` are applied in order instead of the automatic search.
pub fn build_gcl(
    p: u32,
    n: u32,
    s_list: &[u32],
    swap_plans: Option<&[SwapSpec]>,
) -> Result<GclGraph, TransformError> {
    if s_list.is_empty() || s_list.contains(&0) || !s_list.iter().any(|&s| s >= 2) {
        return Err(TransformError::NoGroupToCompose);
    }
    let total: u32 = s_list.iter().sum();
    let spec = LauSpec::default_for(total, p, n)?;
    let params = spec.homogeneous().unwrap();
    let pg = build_lau(&spec)?;
    let mut lg = LabeledGraph::new(pg.graph.clone(), canonical_labeling(&pg)?);
    let mut groups = Vec::new();
    let mut next = 1;
    for &s in s_list {
        groups.push((next..next + s).collect::<Vec<_>>());
        next += s;
    }
    let mut swaps = Vec::new();
    match swap_plans {
        Some(plans) => {
            for plan in plans {
                lg = edge_swap(&lg, plan)?;
                swaps.push(plan.clone());
            }
        }
        None => {
            for group in &groups {
                for w in group.windows(2) {
                    let (joined, spec) = join_components(&lg, w[0], w[1], params)?;
                    lg = joined;
                    swaps.push(spec);
                }
            }
        }
    }
    Ok(GclGraph {
        labeled: lg,
        params,
        groups,
        swaps,
    })
}

/// The six merge families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MergeFamily {
    Gl1,
    Gl2,
    Gl3,
    Gl4,
    Gl5,
    Gl6,
}

impl MergeFamily {
    pub fn is_across(self) -> bool {
        matches!(self, Self::Gl1 | Self::Gl2 | Self::Gl3)
    }
}

impl fmt::Display for MergeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = *self as u8 + 1;
        write!(f, "gl{k}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown merge family `{0}` (expected gl1..gl6)")]
pub struct ParseFamilyError(pub String);

impl FromStr for MergeFamily {
    type Err = ParseFamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "gl1" => Self::Gl1,
            "gl2" => Self::Gl2,
            "gl3" => Self::Gl3,
            "gl4" => Self::Gl4,
            "gl5" => Self::Gl5,
            "gl6" => Self::Gl6,
            _ => return Err(ParseFamilyError(s.to_string())),
        })
    }
}

/// Result of a merge together with the vertex groups that were collapsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeOutcome {
    pub result: LabeledGraph,
    pub groups: Vec<Vec<VertexId>>,
}

/// Groups `[1..=s], [s+1..=2s], ...` of component numbers.
pub fn contiguous_groups(t: usize, s: usize) -> Result<Vec<Vec<usize>>, TransformError> {
    if s < 2 || !t.is_multiple_of(s) {
        return Err(TransformError::NotDivisible { t, s });
    }
    Ok((0..t / s)
        .map(|r| (r * s + 1..=(r + 1) * s).collect())
        .collect())
}

fn require_three_colors(lg: &LabeledGraph) -> Result<(), TransformError> {
    let report = lg.verify()?;
    if !report.is_local_antimagic() || report.color_count != 3 {
        return Err(TransformError::LostProperty {
            color_count: report.color_count,
            conflicts: report.conflicts.len(),
        });
    }
    Ok(())
}

fn class_members(
    component: &[VertexId],
    sums: &BTreeMap<VertexId, i64>,
    color: i64,
) -> Vec<VertexId> {
    component
        .iter()
        .copied()
        .filter(|v| sums[v] == color)
        .collect()
}

/// GL1–GL3: within each group of `s` components, merge the `k`-th vertex of
/// the chosen color class of every member component. Components are the
/// current connected components in order of their smallest vertex; class
/// members are ordered by vertex id.
pub fn merge_across(
    lg: &LabeledGraph,
    classes: ClassColors,
    family: MergeFamily,
    groups: &[Vec<usize>],
) -> Result<MergeOutcome, TransformError> {
    let color = match family {
        MergeFamily::Gl1 => classes.attachment,
        MergeFamily::Gl2 => classes.odd,
        MergeFamily::Gl3 => classes.even,
        _ => return Err(TransformError::BadComponentGroups { t: 0 }),
    };
    let comps = connected_components(&lg.graph);
    let t = comps.len();
    let mut covered = BTreeSet::new();
    let s = groups.first().map_or(0, Vec::len);
    for group in groups {
        if group.len() != s || s < 2 {
            return Err(TransformError::BadComponentGroups { t });
        }
        for &c in group {
            if c == 0 || c > t || !covered.insert(c) {
                return Err(TransformError::BadComponentGroups { t });
            }
        }
    }
    if covered.len() != t {
        return Err(TransformError::NotDivisible { t, s });
    }
    let sums = lg.sums()?;
    let mut merged = Vec::new();
    for group in groups {
        let members: Vec<Vec<VertexId>> = group
            .iter()
            .map(|&c| class_members(&comps[c - 1], &sums, color))
            .collect();
        let expected = members[0].len();
        for (&c, m) in group.iter().zip(&members) {
            if m.len() != expected || expected == 0 {
                return Err(TransformError::ClassSizeMismatch {
                    component: c,
                    color,
                    found: m.len(),
                    expected,
                });
            }
        }
        for k in 0..expected {
            merged.push(members.iter().map(|m| m[k]).collect());
        }
    }
    let result = merge_vertices(lg, &merged, false)?;
    require_three_colors(&result)?;
    Ok(MergeOutcome {
        result,
        groups: merged,
    })
}

/// Color that GL4 / GL5 pair attachment vertices with.
fn partner_color(classes: ClassColors, family: MergeFamily) -> Option<i64> {
    match family {
        MergeFamily::Gl4 => Some(classes.odd),
        MergeFamily::Gl5 => Some(classes.even),
        _ => None,
    }
}

fn check_pair(
    g: &Graph,
    sums: &BTreeMap<VertexId, i64>,
    comp_of: &BTreeMap<VertexId, usize>,
    a: VertexId,
    b: VertexId,
    partner: i64,
) -> Result<(), TransformError> {
    let fail = |reason| Err(TransformError::Pairing { a, b, reason });
    for v in [a, b] {
        if !g.contains_vertex(v) {
            return Err(TransformError::UnknownVertex(v));
        }
    }
    if sums[&b] != partner {
        return fail(PairingObstruction::WrongColor {
            expected: partner,
            found: sums[&b],
        });
    }
    if comp_of[&a] != comp_of[&b] {
        return fail(PairingObstruction::DifferentComponent);
    }
    if g.are_adjacent(a, b) {
        return fail(PairingObstruction::Adjacent);
    }
    let na = g.neighbors(a);
    if let Some(&w) = g.neighbors(b).intersection(&na).next() {
        return fail(PairingObstruction::CommonNeighbor(w));
    }
    Ok(())
}

fn component_index(lg: &LabeledGraph) -> BTreeMap<VertexId, usize> {
    connected_components(&lg.graph)
        .into_iter()
        .enumerate()
        .flat_map(|(k, c)| c.into_iter().map(move |v| (v, k)))
        .collect()
}

/// GL4–GL6 within each component. GL4/GL5 merge every attachment-color vertex
/// with a distinct partner of the odd (GL4) or even (GL5) class; `pairing`
/// lists `(attachment, partner)` pairs, or is found by search when `None`.
/// GL6 collapses all attachment-color vertices of a component into one and
/// yields a multigraph.
pub fn merge_within(
    lg: &LabeledGraph,
    classes: ClassColors,
    family: MergeFamily,
    pairing: Option<&[(VertexId, VertexId)]>,
) -> Result<MergeOutcome, TransformError> {
    let sums = lg.sums()?;
    if family == MergeFamily::Gl6 {
        let groups: Vec<Vec<VertexId>> = connected_components(&lg.graph)
            .iter()
            .map(|c| class_members(c, &sums, classes.attachment))
            .filter(|m| m.len() >= 2)
            .collect();
        let result = merge_vertices(lg, &groups, true)?;
        require_three_colors(&result)?;
        return Ok(MergeOutcome { result, groups });
    }
    let Some(partner) = partner_color(classes, family) else {
        return Err(TransformError::BadComponentGroups { t: 0 });
    };
    let pairs = match pairing {
        Some(p) => p.to_vec(),
        None => find_within_pairing(lg, classes, family)?,
    };
    let comp_of = component_index(lg);
    let mut used = BTreeSet::new();
    let mut paired = BTreeSet::new();
    for &(a, b) in &pairs {
        check_pair(&lg.graph, &sums, &comp_of, a, b, partner)?;
        if sums[&a] != classes.attachment || !paired.insert(a) {
            return Err(TransformError::Unpaired(a));
        }
        if !used.insert(b) {
            return Err(TransformError::Pairing {
                a,
                b,
                reason: PairingObstruction::PartnerReused,
            });
        }
    }
    if let Some(&v) = sums
        .iter()
        .find(|(v, &s)| s == classes.attachment && !paired.contains(v))
        .map(|(v, _)| v)
    {
        return Err(TransformError::Unpaired(v));
    }
    let groups: Vec<Vec<VertexId>> = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
    let result = merge_vertices(lg, &groups, false)?;
    require_three_colors(&result)?;
    Ok(MergeOutcome { result, groups })
}

/// Smallest valid GL4/GL5 pairing in lexicographic order (attachments in
/// ascending order, each trying partners in ascending order), component by
/// component. A pairing is accepted when merging it keeps the graph simple
/// and gives no merged vertex the same sum as a neighbor.
pub fn find_within_pairing(
    lg: &LabeledGraph,
    classes: ClassColors,
    family: MergeFamily,
) -> Result<Vec<(VertexId, VertexId)>, TransformError> {
    let partner =
        partner_color(classes, family).ok_or(TransformError::BadComponentGroups { t: 0 })?;
    let sums = lg.sums()?;
    let comp_of = component_index(lg);
    let mut out = Vec::new();
    for comp in connected_components(&lg.graph) {
        let hubs = class_members(&comp, &sums, classes.attachment);
        let options: Vec<Vec<VertexId>> = hubs
            .iter()
            .map(|&a| {
                class_members(&comp, &sums, partner)
                    .into_iter()
                    .filter(|&b| check_pair(&lg.graph, &sums, &comp_of, a, b, partner).is_ok())
                    .collect()
            })
            .collect();
        let mut chosen = Vec::new();
        if !search_pairing(lg, &hubs, &options, &mut chosen) {
            return Err(TransformError::NoPairing(comp[0]));
        }
        out.extend(hubs.iter().copied().zip(chosen));
    }
    Ok(out)
}

fn search_pairing(
    lg: &LabeledGraph,
    hubs: &[VertexId],
    options: &[Vec<VertexId>],
    chosen: &mut Vec<VertexId>,
) -> bool {
    let k = chosen.len();
    if k == hubs.len() {
        return pairing_keeps_coloring(lg, hubs, chosen);
    }
    for &b in &options[k] {
        if chosen.contains(&b) {
            continue;
        }
        chosen.push(b);
        if search_pairing(lg, hubs, options, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn pairing_keeps_coloring(lg: &LabeledGraph, hubs: &[VertexId], partners: &[VertexId]) -> bool {
    let groups: Vec<Vec<VertexId>> = hubs
        .iter()
        .zip(partners)
        .map(|(&a, &b)| vec![a, b])
        .collect();
    let Ok(merged) = merge_vertices(lg, &groups, false) else {
        return false;
    };
    let Ok(new_sums) = merged.sums() else {
        return false;
    };
    merged
        .graph
        .edges()
        .iter()
        .all(|e| new_sums[&e.u] != new_sums[&e.v])
}
