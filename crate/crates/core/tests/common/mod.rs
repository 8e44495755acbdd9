//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use proptest::prelude::*;
use proptest::sample::subsequence;

use luvgraph::lau::{max_attachment, valid_steps};
use luvgraph::solver::search_order;
use luvgraph::{
    build_lau, canonical_labeling, EdgeLabeling, Graph, LauParams, LauSpec, PositionedGraph,
};

#[derive(Debug, Clone)]
pub struct Instance {
    pub t: u32,
    pub p: u32,
    pub steps: Vec<u32>,
    pub attachments: Vec<Vec<u32>>,
}

impl Instance {
    pub fn params(&self) -> LauParams {
        LauParams {
            t: self.t,
            p: self.p,
            n: self.steps.len() as u32,
        }
    }

    pub fn build(&self) -> (PositionedGraph, EdgeLabeling) {
        let spec = LauSpec::from_steps(self.t, self.p, &self.steps, &self.attachments).unwrap();
        let pg = build_lau(&spec).unwrap();
        let f = canonical_labeling(&pg).unwrap();
        (pg, f)
    }
}

pub fn instance(t: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = Instance> {
    (t, (4u32..=15).prop_map(|h| 2 * h + 1)).prop_flat_map(|(t, p)| {
        let steps = valid_steps(p);
        let attach_pool: Vec<u32> = (1..=max_attachment(p)).collect();
        let n_max = (steps.len() + 1).min(attach_pool.len()).min(4);
        (2..=n_max).prop_flat_map(move |n| {
            (
                subsequence(steps.clone(), n - 1).prop_shuffle(),
                proptest::collection::vec(
                    subsequence(attach_pool.clone(), n).prop_shuffle(),
                    t as usize,
                ),
            )
                .prop_map(move |(rest, attachments)| {
                    let mut steps = vec![1];
                    steps.extend(rest);
                    Instance {
                        t,
                        p,
                        steps,
                        attachments,
                    }
                })
        })
    })
}

pub struct Fixture {
    pub name: &'static str,
    pub n: u32,
    pub edges: Vec<(u32, u32)>,
}

pub fn fx(name: &'static str, n: u32, edges: &[(u32, u32)]) -> Fixture {
    Fixture {
        name,
        n,
        edges: edges.to_vec(),
    }
}

pub fn path_edges(n: u32) -> Vec<(u32, u32)> {
    (1..n).map(|i| (i, i + 1)).collect()
}

pub fn cycle_edges(n: u32) -> Vec<(u32, u32)> {
    (1..=n).map(|i| (i, i % n + 1)).collect()
}

pub fn star_edges(leaves: u32) -> Vec<(u32, u32)> {
    (2..=leaves + 1).map(|i| (1, i)).collect()
}

pub fn fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push(Fixture {
            name: "path",
            n,
            edges: path_edges(n),
        });
    }
    for n in 3..=7 {
        out.push(Fixture {
            name: "cycle",
            n,
            edges: cycle_edges(n),
        });
    }
    for l in 3..=6 {
        out.push(Fixture {
            name: "star",
            n: l + 1,
            edges: star_edges(l),
        });
    }
    out.extend([
        fx("paw", 4, &[(1, 2), (2, 3), (3, 1), (3, 4)]),
        fx("diamond", 4, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]),
        fx("K4", 4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
        fx("bull", 5, &[(1, 2), (2, 3), (3, 1), (2, 4), (3, 5)]),
        fx(
            "house",
            5,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (2, 5)],
        ),
        fx(
            "gem",
            5,
            &[(1, 2), (2, 3), (3, 4), (5, 1), (5, 2), (5, 3), (5, 4)],
        ),
        fx("K2,3", 5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
        fx(
            "spider",
            7,
            &[(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)],
        ),
        fx(
            "tadpole",
            6,
            &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6)],
        ),
        fx(
            "book",
            6,
            &[(1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 6), (5, 6)],
        ),
        fx("2P3", 6, &[(1, 2), (2, 3), (4, 5), (5, 6)]),
        fx("C3+P3", 6, &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6)]),
        fx("banner", 5, &[(1, 2), (2, 3), (3, 4), (4, 1), (4, 5)]),
        fx("K1,3+e", 5, &[(1, 2), (1, 3), (1, 4), (2, 5), (3, 5)]),
    ]);
    out
}

pub fn graph(f: &Fixture) -> Graph {
    Graph::from_pairs(f.n, &f.edges).unwrap()
}

/// Minimum color count over all bijections, plus the least optimal labeling
/// when labels are read in `order`.
pub fn brute_force(g: &Graph, order: &[usize]) -> (usize, Vec<i64>) {
    let q = g.edge_count();
    let ends: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (g.vertex_index(e.u).unwrap(), g.vertex_index(e.v).unwrap()))
        .collect();
    let mut best: Option<(usize, Vec<i64>)> = None;
    for perm in (1..=q as i64).permutations(q) {
        let mut sums = vec![0i64; g.vertex_count()];
        for (k, &(a, b)) in ends.iter().enumerate() {
            sums[a] += perm[k];
            sums[b] += perm[k];
        }
        if ends.iter().any(|&(a, b)| sums[a] == sums[b]) {
            continue;
        }
        let colors = sums.iter().collect::<BTreeSet<_>>().len();
        let key: Vec<i64> = order.iter().map(|&k| perm[k]).collect();
        let better = match &best {
            None => true,
            Some((c, l)) => colors < *c || (colors == *c && key < *l),
        };
        if better {
            best = Some((colors, key));
        }
    }
    let (c, key) = best.expect("fixture admits a local antimagic labeling");
    let mut labels = vec![0; q];
    for (&k, &l) in order.iter().zip(&key) {
        labels[k] = l;
    }
    (c, labels)
}

/// Position of each edge of `g` in search order.
pub fn edge_positions(g: &Graph) -> Vec<usize> {
    let pos: BTreeMap<_, _> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(k, e)| (e.id, k))
        .collect();
    search_order(g).iter().map(|id| pos[id]).collect()
}
