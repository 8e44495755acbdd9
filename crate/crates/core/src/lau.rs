//! LAU graph construction and the canonical three-color labeling.
//!
//! A component of order `p` (odd, at least 9) is the union of `n` edge-disjoint
//! spanning paths from `u_1` to `u_p`. Path 1 is `u_1 u_2 ... u_p`; every
//! further path follows a parity-alternating index sequence with odd gaps of at
//! least 3. Both ends of path `φ` are additionally joined to the attachment
//! vertex `u_{2a+1}`, where the attachments `a` are distinct values in
//! `[1, (p-3)/2]`.
//!
//! Edges carry positions `1..=n(p+1)` inside their component. For path `φ` the
//! positions `(φ-1)(p+1) + 1 ..= φ(p+1)` run along the closed walk
//! `u_{2a+1}, u_{j_1}, ..., u_{j_p}, u_{2a+1}`, which is what the canonical
//! labeling is defined against.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{Edge, EdgeId, EdgeLabeling, Graph, GraphError, VertexId};

pub const MIN_ORDER: u32 = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("order p={0} must be odd and at least 9")]
    InvalidOrder(u32),
    #[error("step k={0} must be odd")]
    EvenStep(u32),
    #[error("step k={k} is not coprime to p-1={modulus}")]
    NotCoprime { k: u32, modulus: u32 },
    #[error("step k={k} is outside [3, (p-3)/2 = {max}]")]
    StepOutOfRange { k: u32, max: u32 },
    #[error("sequence has length {len}, expected {p}")]
    WrongLength { len: usize, p: u32 },
    #[error("sequence must start at 1 (found {0})")]
    BadStart(u32),
    #[error("sequence must end at p={p} (found {found})")]
    BadEnd { p: u32, found: u32 },
    #[error("entry {value} at position {position} is outside [1, p]")]
    OutOfRange { position: usize, value: u32 },
    #[error("entry {value} at position {position} repeats an earlier entry")]
    Repeated { position: usize, value: u32 },
    #[error("consecutive entries at positions {position} and {} share parity", position + 1)]
    SameParity { position: usize },
    #[error("gap between positions {position} and {} is 1; only the identity sequence may use unit gaps", position + 1)]
    UnitGap { position: usize },
}

/// A parity-alternating permutation `j_1 = 1, ..., j_p = p` of `[1, p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JSequence {
    p: u32,
    order: Vec<u32>,
}

impl JSequence {
    pub fn identity(p: u32) -> Result<Self, SequenceError> {
        check_order(p)?;
        Ok(Self {
            p,
            order: (1..=p).collect(),
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order.iter().zip(1..).all(|(&j, i)| j == i)
    }

    /// Unordered index pairs of the path edges.
    pub fn edge_pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.order
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }
}

fn check_order(p: u32) -> Result<(), SequenceError> {
    if p < MIN_ORDER || p.is_multiple_of(2) {
        return Err(SequenceError::InvalidOrder(p));
    }
    Ok(())
}

/// Largest admissible attachment value (and step) for order `p`.
pub fn max_attachment(p: u32) -> u32 {
    (p - 3) / 2
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Whether `k` is usable as a step for order `p` (excluding the identity step 1).
pub fn is_valid_step(p: u32, k: u32) -> bool {
    p >= MIN_ORDER
        && p % 2 == 1
        && k % 2 == 1
        && k >= 3
        && k <= max_attachment(p)
        && gcd(k, p - 1) == 1
}

/// All valid steps `k ≥ 3` for order `p`, ascending.
pub fn valid_steps(p: u32) -> Vec<u32> {
    (3..=max_attachment(p))
        .filter(|&k| is_valid_step(p, k))
        .collect()
}

/// Sequence obtained by stepping `+k` around the residues `1..=p-1` starting at
/// 1, then appending `p`. `k = 1` gives the identity.
pub fn k_step_sequence(p: u32, k: u32) -> Result<JSequence, SequenceError> {
    check_order(p)?;
    if k.is_multiple_of(2) {
        return Err(SequenceError::EvenStep(k));
    }
    if k == 1 {
        return JSequence::identity(p);
    }
    let modulus = p - 1;
    if gcd(k, modulus) != 1 {
        return Err(SequenceError::NotCoprime { k, modulus });
    }
    let max = max_attachment(p);
    if k < 3 || k > max {
        return Err(SequenceError::StepOutOfRange { k, max });
    }
    let mut order = Vec::with_capacity(p as usize);
    let mut j = 1;
    for _ in 0..modulus {
        order.push(j);
        j = (j + k - 1) % modulus + 1;
    }
    order.push(p);
    validate_j_sequence(p, &order)
}

/// Checks every sequence invariant, reporting the first violation with its
/// 1-based position.
pub fn validate_j_sequence(p: u32, seq: &[u32]) -> Result<JSequence, SequenceError> {
    check_order(p)?;
    if seq.len() != p as usize {
        return Err(SequenceError::WrongLength { len: seq.len(), p });
    }
    if seq[0] != 1 {
        return Err(SequenceError::BadStart(seq[0]));
    }
    let identity = seq.iter().zip(1..).all(|(&j, i)| j == i);
    let mut seen = vec![false; p as usize + 1];
    for (i, &j) in seq.iter().enumerate() {
        if j == 0 || j > p {
            return Err(SequenceError::OutOfRange {
                position: i + 1,
                value: j,
            });
        }
        if std::mem::replace(&mut seen[j as usize], true) {
            return Err(SequenceError::Repeated {
                position: i + 1,
                value: j,
            });
        }
        if i > 0 {
            let prev = seq[i - 1];
            if prev % 2 == j % 2 {
                return Err(SequenceError::SameParity { position: i });
            }
            if prev.abs_diff(j) == 1 && !identity {
                return Err(SequenceError::UnitGap { position: i });
            }
        }
    }
    if seq[seq.len() - 1] != p {
        return Err(SequenceError::BadEnd {
            p,
            found: seq[seq.len() - 1],
        });
    }
    Ok(JSequence {
        p,
        order: seq.to_vec(),
    })
}

/// `(t, p, n)` for a homogeneous LAU graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct LauParams {
    pub t: u32,
    pub p: u32,
    pub n: u32,
}

impl LauParams {
    /// Edges per component, `n(p+1)`.
    pub fn component_size(&self) -> u64 {
        self.n as u64 * (self.p as u64 + 1)
    }

    /// Total size `tn(p+1)`.
    pub fn size(&self) -> u64 {
        self.t as u64 * self.component_size()
    }

    /// Sum of the two labels on consecutive positions `(2i-1, 2i)`.
    pub fn pair_sum_odd_first(&self) -> i64 {
        self.size() as i64 + 1
    }

    /// Sum of the two labels on consecutive positions `(2i, 2i+1)`.
    pub fn pair_sum_even_first(&self) -> i64 {
        self.size() as i64
    }

    /// Sum of the two attachment-edge labels of one path: `(2tn+1)(p+1)/2`.
    pub fn endpoint_pair_sum(&self) -> i64 {
        let (t, p, n) = (self.t as i64, self.p as i64, self.n as i64);
        (2 * t * n + 1) * (p + 1) / 2
    }
}

impl fmt::Display for LauParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t={} p={} n={}", self.t, self.p, self.n)
    }
}

/// One induced color and how many vertices carry it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorClass {
    pub color: i64,
    pub multiplicity: u64,
    pub degree: u64,
}

/// Predicted spectrum of the canonical labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedSpectrum {
    /// Even-index vertices.
    pub even: ColorClass,
    /// Odd-index vertices other than the attachment vertices.
    pub odd: ColorClass,
    pub attachment: ColorClass,
}

impl ExpectedSpectrum {
    pub fn classes(&self) -> [ColorClass; 3] {
        [self.even, self.odd, self.attachment]
    }

    pub fn as_map(&self) -> BTreeMap<i64, usize> {
        self.classes()
            .iter()
            .map(|c| (c.color, c.multiplicity as usize))
            .collect()
    }
}

pub fn expected_spectrum(t: u32, p: u32, n: u32) -> ExpectedSpectrum {
    let (t64, p64, n64) = (t as i64, p as i64, n as i64);
    let even = t64 * n64 * n64 * (p64 + 1);
    let odd = even + n64;
    let attachment = (2 * t64 * n64 * n64 + 2 * t64 * n64 + 1) * (p64 + 1) / 2 + n64;
    let (tu, pu, nu) = (t as u64, p as u64, n as u64);
    ExpectedSpectrum {
        even: ColorClass {
            color: even,
            multiplicity: tu * (pu - 1) / 2,
            degree: 2 * nu,
        },
        odd: ColorClass {
            color: odd,
            multiplicity: tu * (pu + 1 - 2 * nu) / 2,
            degree: 2 * nu,
        },
        attachment: ColorClass {
            color: attachment,
            multiplicity: tu * nu,
            degree: 2 * nu + 2,
        },
    }
}

/// Generative description of one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSpec {
    pub p: u32,
    /// Path sequences; the first must be the identity.
    pub sequences: Vec<JSequence>,
    /// Attachment value `a^φ` for each path `φ`; path `φ` ends at `u_{2a^φ+1}`.
    pub attachments: Vec<u32>,
}

impl ComponentSpec {
    pub fn n(&self) -> u32 {
        self.sequences.len() as u32
    }

    pub fn size(&self) -> u32 {
        self.n() * (self.p + 1)
    }

    pub fn attachment_indices(&self) -> Vec<u32> {
        self.attachments.iter().map(|a| 2 * a + 1).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LauError {
    #[error("an LAU graph needs at least one component")]
    NoComponents,
    #[error("component {component}: {source}")]
    Sequence {
        component: u32,
        #[source]
        source: SequenceError,
    },
    #[error("component {component}: need n >= 2 paths, got {n}")]
    TooFewPaths { component: u32, n: u32 },
    #[error("p={p} has only {available} valid steps k >= 3, so n <= {max_n}; got n={n}")]
    NotEnoughSteps {
        p: u32,
        n: u32,
        available: u32,
        max_n: u32,
    },
    #[error("component {component}: path 1 must be the identity sequence")]
    FirstNotIdentity { component: u32 },
    #[error("component {component}: path {path} is built for p={found}, expected p={p}")]
    OrderMismatch {
        component: u32,
        path: u32,
        found: u32,
        p: u32,
    },
    #[error("component {component}: {found} attachments given for n={n} paths")]
    AttachmentCount {
        component: u32,
        n: u32,
        found: usize,
    },
    #[error("component {component}: attachment {value} is outside [1, (p-3)/2 = {max}]")]
    AttachmentOutOfRange {
        component: u32,
        value: u32,
        max: u32,
    },
    #[error("component {component}: attachments not distinct ({value} repeats)")]
    DuplicateAttachment { component: u32, value: u32 },
    #[error("{count} attachment lists given for t={t} components")]
    AttachmentListCount { t: u32, count: usize },
    #[error("component {component}: edge u_{a}u_{b} of {second} collides with {first}")]
    EdgeCollision {
        component: u32,
        a: u32,
        b: u32,
        first: EdgeOrigin,
        second: EdgeOrigin,
    },
    #[error("component {0} does not exist")]
    NoSuchComponent(u32),
    #[error("canonical labeling requires equal p and n across components")]
    Heterogeneous,
    #[error("position map is missing component {component} position {position}")]
    MissingPosition { component: u32, position: u32 },
    #[error("position map does not cover edge {0}")]
    UncoveredEdge(EdgeId),
    #[error("tripartite certificate failed: {0}")]
    Certificate(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which edge set an edge was generated from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrigin {
    Path(u32),
    Attachment(u32),
}

impl fmt::Display for EdgeOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeOrigin::Path(1) => write!(f, "the identity path"),
            EdgeOrigin::Path(phi) => write!(f, "path {phi}"),
            EdgeOrigin::Attachment(phi) => write!(f, "the attachment edges of path {phi}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LauSpec {
    components: Vec<ComponentSpec>,
}

impl LauSpec {
    pub fn new(components: Vec<ComponentSpec>) -> Result<Self, LauError> {
        if components.is_empty() {
            return Err(LauError::NoComponents);
        }
        for (m, c) in components.iter().enumerate() {
            validate_component(m as u32 + 1, c)?;
        }
        Ok(Self { components })
    }

    /// Components built from step values (first must be 1). `attachments` may
    /// be empty (defaults to `1..=n`), a single list used for every component,
    /// or one list per component.
    pub fn from_steps(
        t: u32,
        p: u32,
        steps: &[u32],
        attachments: &[Vec<u32>],
    ) -> Result<Self, LauError> {
        if t == 0 {
            return Err(LauError::NoComponents);
        }
        let sequences = steps
            .iter()
            .map(|&k| k_step_sequence(p, k))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|source| LauError::Sequence {
                component: 1,
                source,
            })?;
        let n = steps.len() as u32;
        let lists: Vec<Vec<u32>> = match attachments.len() {
            0 => vec![(1..=n).collect(); t as usize],
            1 => vec![attachments[0].clone(); t as usize],
            c if c == t as usize => attachments.to_vec(),
            c => return Err(LauError::AttachmentListCount { t, count: c }),
        };
        Self::new(
            lists
                .into_iter()
                .map(|attachments| ComponentSpec {
                    p,
                    sequences: sequences.clone(),
                    attachments,
                })
                .collect(),
        )
    }

    /// `t` components using steps `1, k_1, ..., k_{n-1}` (the smallest valid
    /// steps) and attachments `1..=n`.
    pub fn default_for(t: u32, p: u32, n: u32) -> Result<Self, LauError> {
        check_order(p).map_err(|source| LauError::Sequence {
            component: 1,
            source,
        })?;
        let mut steps = vec![1];
        steps.extend(
            valid_steps(p)
                .into_iter()
                .take(n.saturating_sub(1) as usize),
        );
        if steps.len() < n as usize {
            let available = steps.len() as u32 - 1;
            return Err(LauError::NotEnoughSteps {
                p,
                n,
                available,
                max_n: available + 1,
            });
        }
        Self::from_steps(t, p, &steps, &[])
    }

    pub fn components(&self) -> &[ComponentSpec] {
        &self.components
    }

    pub fn t(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn homogeneous(&self) -> Option<LauParams> {
        let first = &self.components[0];
        self.components
            .iter()
            .all(|c| c.p == first.p && c.n() == first.n())
            .then_some(LauParams {
                t: self.t(),
                p: first.p,
                n: first.n(),
            })
    }
}

fn validate_component(m: u32, c: &ComponentSpec) -> Result<(), LauError> {
    check_order(c.p).map_err(|source| LauError::Sequence {
        component: m,
        source,
    })?;
    let n = c.n();
    if n < 2 {
        return Err(LauError::TooFewPaths { component: m, n });
    }
    if !c.sequences[0].is_identity() {
        return Err(LauError::FirstNotIdentity { component: m });
    }
    for (phi, s) in c.sequences.iter().enumerate() {
        if s.p() != c.p {
            return Err(LauError::OrderMismatch {
                component: m,
                path: phi as u32 + 1,
                found: s.p(),
                p: c.p,
            });
        }
    }
    if c.attachments.len() != n as usize {
        return Err(LauError::AttachmentCount {
            component: m,
            n,
            found: c.attachments.len(),
        });
    }
    let max = max_attachment(c.p);
    let mut seen = BTreeSet::new();
    for &a in &c.attachments {
        if a == 0 || a > max {
            return Err(LauError::AttachmentOutOfRange {
                component: m,
                value: a,
                max,
            });
        }
        if !seen.insert(a) {
            return Err(LauError::DuplicateAttachment {
                component: m,
                value: a,
            });
        }
    }
    Ok(())
}

/// An LAU graph with the position of every edge inside its component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionedGraph {
    pub graph: Graph,
    pub spec: LauSpec,
    positions: BTreeMap<(u32, u32), EdgeId>,
}

impl PositionedGraph {
    /// Edge at `(component, position)`.
    pub fn edge_at(&self, component: u32, position: u32) -> Option<EdgeId> {
        self.positions.get(&(component, position)).copied()
    }

    pub fn positions(&self) -> impl Iterator<Item = ((u32, u32), EdgeId)> + '_ {
        self.positions.iter().map(|(&k, &v)| (k, v))
    }
}

/// Edges of component `m` in position order, as `(u, v)` index pairs, with
/// their origin. Errors on any collision between edge sets.
fn component_edges(m: u32, c: &ComponentSpec) -> Result<Vec<(u32, u32)>, LauError> {
    let p = c.p;
    let mut out = Vec::with_capacity(c.size() as usize);
    let mut owner: BTreeMap<(u32, u32), EdgeOrigin> = BTreeMap::new();
    let mut claim = |a: u32, b: u32, origin: EdgeOrigin| -> Result<(), LauError> {
        let key = (a.min(b), a.max(b));
        if let Some(&first) = owner.get(&key) {
            return Err(LauError::EdgeCollision {
                component: m,
                a: key.0,
                b: key.1,
                first,
                second: origin,
            });
        }
        owner.insert(key, origin);
        Ok(())
    };
    for (phi, (seq, &a)) in c.sequences.iter().zip(&c.attachments).enumerate() {
        let phi = phi as u32 + 1;
        let hub = 2 * a + 1;
        claim(hub, 1, EdgeOrigin::Attachment(phi))?;
        out.push((hub, 1));
        for w in seq.order().windows(2) {
            claim(w[0], w[1], EdgeOrigin::Path(phi))?;
            out.push((w[0], w[1]));
        }
        claim(p, hub, EdgeOrigin::Attachment(phi))?;
        out.push((p, hub));
    }
    Ok(out)
}

/// Builds component `m` (1-based) on its own, with edge ids `1..=n(p+1)`
/// matching positions.
pub fn build_component(spec: &LauSpec, m: u32) -> Result<PositionedGraph, LauError> {
    let c = spec
        .components
        .get((m as usize).wrapping_sub(1))
        .ok_or(LauError::NoSuchComponent(m))?;
    let single = LauSpec {
        components: vec![c.clone()],
    };
    assemble(&single, &[(m, c)])
}

/// Disjoint union of all components. Edge ids run consecutively, component
/// by component, in position order.
pub fn build_lau(spec: &LauSpec) -> Result<PositionedGraph, LauError> {
    let parts: Vec<_> = spec
        .components
        .iter()
        .enumerate()
        .map(|(k, c)| (k as u32 + 1, c))
        .collect();
    assemble(spec, &parts)
}

fn assemble(spec: &LauSpec, parts: &[(u32, &ComponentSpec)]) -> Result<PositionedGraph, LauError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut positions = BTreeMap::new();
    for (slot, &(m, c)) in parts.iter().enumerate() {
        let slot = slot as u32 + 1;
        vertices.extend((1..=c.p).map(|i| VertexId::new(m, i)));
        for (k, (a, b)) in component_edges(m, c)?.into_iter().enumerate() {
            let id = EdgeId(edges.len() as u32 + 1);
            edges.push(Edge {
                id,
                u: VertexId::new(m, a),
                v: VertexId::new(m, b),
            });
            positions.insert((slot, k as u32 + 1), id);
        }
    }
    let graph = Graph::new(vertices, edges, false)?;
    Ok(PositionedGraph {
        graph,
        spec: spec.clone(),
        positions,
    })
}

/// Label at position `pos` of component `m` under the canonical labeling.
pub fn canonical_label(params: LauParams, m: u32, pos: u32) -> i64 {
    let half = (params.component_size() / 2) as i64;
    let (t, m, pos) = (params.t as i64, m as i64, pos as i64);
    if pos % 2 == 0 {
        (m - 1) * half + pos / 2
    } else {
        (2 * t - m + 1) * half + 1 - (pos + 1) / 2
    }
}

/// The canonical labeling: even positions count up from the bottom of each
/// component's lower block, odd positions count down from the top of its
/// upper block.
pub fn canonical_labeling(pg: &PositionedGraph) -> Result<EdgeLabeling, LauError> {
    let params = pg.spec.homogeneous().ok_or(LauError::Heterogeneous)?;
    let per = params.component_size() as u32;
    let mut f = EdgeLabeling::new();
    for m in 1..=params.t {
        for pos in 1..=per {
            let id = pg.edge_at(m, pos).ok_or(LauError::MissingPosition {
                component: m,
                position: pos,
            })?;
            f.insert(id, canonical_label(params, m, pos))?;
        }
    }
    if let Some(e) = pg.graph.edges().iter().find(|e| f.get(e.id).is_none()) {
        return Err(LauError::UncoveredEdge(e.id));
    }
    Ok(f)
}

/// Three-part proper coloring plus an odd cycle proving `χ = 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripartiteCertificate {
    pub even: Vec<VertexId>,
    pub odd: Vec<VertexId>,
    pub attachment: Vec<VertexId>,
    /// Closed walk `u_1, u_2, ..., u_{2a+1}` (back to `u_1` by an attachment edge).
    pub odd_cycle: Vec<VertexId>,
}

impl TripartiteCertificate {
    pub fn part_sizes(&self) -> [usize; 3] {
        [self.even.len(), self.odd.len(), self.attachment.len()]
    }
}

pub fn tripartite_certificate(pg: &PositionedGraph) -> Result<TripartiteCertificate, LauError> {
    let mut cert = TripartiteCertificate {
        even: Vec::new(),
        odd: Vec::new(),
        attachment: Vec::new(),
        odd_cycle: Vec::new(),
    };
    let mut part: BTreeMap<VertexId, u8> = BTreeMap::new();
    for (m, c) in pg.spec.components.iter().enumerate() {
        let m = m as u32 + 1;
        let hubs = c.attachment_indices();
        for i in 1..=c.p {
            let v = VertexId::new(m, i);
            let k = if i % 2 == 0 {
                cert.even.push(v);
                0
            } else if hubs.contains(&i) {
                cert.attachment.push(v);
                2
            } else {
                cert.odd.push(v);
                1
            };
            part.insert(v, k);
        }
    }
    for e in pg.graph.edges() {
        if part[&e.u] == part[&e.v] {
            return Err(LauError::Certificate(format!(
                "edge {} joins {} and {} in the same part",
                e.id, e.u, e.v
            )));
        }
    }
    let first = &pg.spec.components[0];
    let a = *first.attachments.iter().min().unwrap();
    cert.odd_cycle = (1..=2 * a + 1).map(|i| VertexId::new(1, i)).collect();
    let closing = [(cert.odd_cycle[cert.odd_cycle.len() - 1], cert.odd_cycle[0])];
    for (x, y) in cert
        .odd_cycle
        .windows(2)
        .map(|w| (w[0], w[1]))
        .chain(closing)
    {
        if !pg.graph.are_adjacent(x, y) {
            return Err(LauError::Certificate(format!(
                "odd cycle step {x}-{y} is not an edge"
            )));
        }
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify_local_antimagic, vertex_sums};

    fn seq(v: &[u32]) -> Vec<u32> {
        v.to_vec()
    }

    #[test]
    fn k_step_23_3() {
        let s = k_step_sequence(23, 3).unwrap();
        assert_eq!(
            s.order(),
            seq(&[
                1, 4, 7, 10, 13, 16, 19, 22, 3, 6, 9, 12, 15, 18, 21, 2, 5, 8, 11, 14, 17, 20, 23
            ])
        );
    }

    #[test]
    fn k_step_23_9() {
        let s = k_step_sequence(23, 9).unwrap();
        assert_eq!(
            s.order(),
            seq(&[
                1, 10, 19, 6, 15, 2, 11, 20, 7, 16, 3, 12, 21, 8, 17, 4, 13, 22, 9, 18, 5, 14, 23
            ])
        );
    }

    #[test]
    fn k_one_is_identity() {
        let s = k_step_sequence(11, 1).unwrap();
        assert!(s.is_identity());
        assert_eq!(s.order(), (1..=11).collect::<Vec<_>>());
    }

    #[test]
    fn k_step_rejections() {
        assert_eq!(k_step_sequence(23, 4), Err(SequenceError::EvenStep(4)));
        assert_eq!(
            k_step_sequence(23, 11),
            Err(SequenceError::NotCoprime { k: 11, modulus: 22 })
        );
        assert_eq!(
            k_step_sequence(13, 3),
            Err(SequenceError::NotCoprime { k: 3, modulus: 12 })
        );
        assert_eq!(
            k_step_sequence(11, 7),
            Err(SequenceError::StepOutOfRange { k: 7, max: 4 })
        );
        assert_eq!(k_step_sequence(8, 3), Err(SequenceError::InvalidOrder(8)));
    }

    #[test]
    fn example_thirteen_sequence_validates() {
        let s = validate_j_sequence(13, &[1, 4, 7, 2, 5, 12, 9, 6, 11, 8, 3, 10, 13]).unwrap();
        assert!(!s.is_identity());
    }

    #[test]
    fn sequence_rejections_name_position() {
        assert_eq!(
            validate_j_sequence(9, &[1, 3, 5, 7, 9, 2, 4, 6, 8]).unwrap_err(),
            SequenceError::SameParity { position: 1 }
        );
        assert_eq!(
            validate_j_sequence(9, &[1, 4, 7, 2, 9, 6, 3, 8, 5]).unwrap_err(),
            SequenceError::BadEnd { p: 9, found: 5 }
        );
        assert_eq!(
            validate_j_sequence(9, &[1, 3, 5, 7, 2, 4, 6, 8, 9]).unwrap_err(),
            SequenceError::SameParity { position: 1 }
        );
        assert_eq!(
            validate_j_sequence(9, &[1, 2, 5, 8, 3, 6, 7, 4, 9]).unwrap_err(),
            SequenceError::UnitGap { position: 1 }
        );
        assert_eq!(
            validate_j_sequence(9, &[1, 4, 1, 4, 1, 4, 1, 4, 9]).unwrap_err(),
            SequenceError::Repeated {
                position: 3,
                value: 1
            }
        );
        assert_eq!(
            validate_j_sequence(9, &[2, 1, 4, 3, 6, 5, 8, 7, 9]).unwrap_err(),
            SequenceError::BadStart(2)
        );
        assert!(matches!(
            validate_j_sequence(9, &[1, 9]),
            Err(SequenceError::WrongLength { .. })
        ));
    }

    fn spec_9() -> LauSpec {
        LauSpec::from_steps(1, 9, &[1, 3], &[vec![1, 3]]).unwrap()
    }

    #[test]
    fn component_p9_degrees() {
        let pg = build_component(&spec_9(), 1).unwrap();
        assert_eq!(pg.graph.vertex_count(), 9);
        assert_eq!(pg.graph.edge_count(), 20);
        let deg = pg.graph.degrees();
        let six: Vec<_> = deg
            .iter()
            .filter(|(_, &d)| d == 6)
            .map(|(v, _)| v.index)
            .collect();
        assert_eq!(six, vec![3, 7]);
        assert_eq!(deg.values().filter(|&&d| d == 4).count(), 7);
    }

    #[test]
    fn component_p13_example() {
        let s = validate_j_sequence(13, &[1, 4, 7, 2, 5, 12, 9, 6, 11, 8, 3, 10, 13]).unwrap();
        let spec = LauSpec::new(vec![ComponentSpec {
            p: 13,
            sequences: vec![JSequence::identity(13).unwrap(), s],
            attachments: vec![2, 4],
        }])
        .unwrap();
        let pg = build_component(&spec, 1).unwrap();
        assert_eq!((pg.graph.vertex_count(), pg.graph.edge_count()), (13, 28));
        assert!(pg
            .graph
            .are_adjacent(VertexId::new(1, 1), VertexId::new(1, 5)));
        assert!(pg
            .graph
            .are_adjacent(VertexId::new(1, 13), VertexId::new(1, 9)));
    }

    #[test]
    fn duplicate_attachments_rejected() {
        let err = LauSpec::from_steps(1, 9, &[1, 3], &[vec![1, 1]]).unwrap_err();
        assert_eq!(
            err,
            LauError::DuplicateAttachment {
                component: 1,
                value: 1
            }
        );
        assert!(err.to_string().contains("not distinct"));
    }

    #[test]
    fn attachment_out_of_range_rejected() {
        let err = LauSpec::from_steps(1, 9, &[1, 3], &[vec![1, 4]]).unwrap_err();
        assert_eq!(
            err,
            LauError::AttachmentOutOfRange {
                component: 1,
                value: 4,
                max: 3
            }
        );
    }

    #[test]
    fn colliding_paths_rejected() {
        let k3 = k_step_sequence(15, 3).unwrap();
        let spec = LauSpec::new(vec![ComponentSpec {
            p: 15,
            sequences: vec![JSequence::identity(15).unwrap(), k3.clone(), k3],
            attachments: vec![1, 2, 3],
        }])
        .unwrap();
        let err = build_component(&spec, 1).unwrap_err();
        assert!(matches!(
            err,
            LauError::EdgeCollision {
                first: EdgeOrigin::Path(2),
                second: EdgeOrigin::Path(3),
                ..
            }
        ));
    }

    #[test]
    fn build_lau_two_components_p11() {
        let spec = LauSpec::from_steps(2, 11, &[1, 3], &[vec![1, 4], vec![1, 3]]).unwrap();
        let pg = build_lau(&spec).unwrap();
        assert_eq!((pg.graph.vertex_count(), pg.graph.edge_count()), (22, 48));
        assert_eq!(crate::graph::connected_components(&pg.graph).len(), 2);
    }

    #[test]
    fn build_lau_single_component_matches_build_component() {
        let spec = spec_9();
        assert_eq!(
            build_lau(&spec).unwrap(),
            build_component(&spec, 1).unwrap()
        );
    }

    #[test]
    fn build_lau_p15_n3() {
        let spec = LauSpec::from_steps(2, 15, &[1, 3, 5], &[vec![2, 4, 6]]).unwrap();
        let pg = build_lau(&spec).unwrap();
        assert_eq!((pg.graph.vertex_count(), pg.graph.edge_count()), (30, 96));
    }

    #[test]
    fn canonical_first_positions_p9() {
        let pg = build_lau(&spec_9()).unwrap();
        let f = canonical_labeling(&pg).unwrap();
        let first: Vec<_> = (1..=6)
            .map(|pos| f.get(pg.edge_at(1, pos).unwrap()).unwrap())
            .collect();
        assert_eq!(first, vec![20, 1, 19, 2, 18, 3]);
    }

    #[test]
    fn canonical_second_component_start() {
        let params = LauParams { t: 2, p: 11, n: 2 };
        assert_eq!(canonical_label(params, 2, 2), 13);
    }

    #[test]
    fn canonical_p9_sums() {
        let pg = build_lau(&spec_9()).unwrap();
        let f = canonical_labeling(&pg).unwrap();
        let sums = vertex_sums(&pg.graph, &f).unwrap();
        let mut counts = BTreeMap::new();
        for s in sums.values() {
            *counts.entry(*s).or_insert(0) += 1;
        }
        assert_eq!(counts, BTreeMap::from([(40, 4), (42, 3), (67, 2)]));
        let r = verify_local_antimagic(&pg.graph, &f).unwrap();
        assert!(r.is_local_antimagic());
    }

    #[test]
    fn heterogeneous_labeling_rejected() {
        let a = LauSpec::from_steps(1, 9, &[1, 3], &[]).unwrap();
        let b = LauSpec::from_steps(1, 11, &[1, 3], &[]).unwrap();
        let spec = LauSpec::new(vec![a.components[0].clone(), b.components[0].clone()]).unwrap();
        let pg = build_lau(&spec).unwrap();
        assert_eq!(pg.graph.edge_count(), 20 + 24);
        assert_eq!(canonical_labeling(&pg), Err(LauError::Heterogeneous));
    }

    #[test]
    fn spectrum_values() {
        let s = expected_spectrum(2, 15, 3);
        assert_eq!(
            (s.even.color, s.odd.color, s.attachment.color),
            (288, 291, 395)
        );
        assert_eq!(
            expected_spectrum(1, 9, 2).as_map(),
            BTreeMap::from([(40, 4), (42, 3), (67, 2)])
        );
        assert_eq!(
            expected_spectrum(2, 11, 2).as_map(),
            BTreeMap::from([(96, 10), (98, 8), (152, 4)])
        );
        // 96*10 + 98*8 + 152*4 = 48*49
        assert_eq!(960 + 784 + 608, 48 * 49);
    }

    #[test]
    fn certificate_p9() {
        let pg = build_lau(&spec_9()).unwrap();
        let c = tripartite_certificate(&pg).unwrap();
        assert_eq!(c.part_sizes(), [4, 3, 2]);
        assert_eq!(c.odd_cycle.len(), 3);
    }

    #[test]
    fn certificate_p13() {
        let spec = LauSpec::from_steps(1, 13, &[1, 5], &[vec![2, 4]]).unwrap();
        let c = tripartite_certificate(&build_lau(&spec).unwrap()).unwrap();
        assert_eq!(c.part_sizes(), [6, 5, 2]);
        assert_eq!(c.odd_cycle.len(), 5);
    }

    #[test]
    fn default_spec_uses_smallest_steps() {
        let spec = LauSpec::default_for(1, 15, 3).unwrap();
        let c = &spec.components()[0];
        assert_eq!(c.attachments, vec![1, 2, 3]);
        assert_eq!(c.sequences[2], k_step_sequence(15, 5).unwrap());
        assert!(LauSpec::default_for(1, 11, 3).is_err());
    }
}
