//! Brute-force helpers shared by the oracle and acceptance targets. They use
//! only the graph container, never the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use nucleus_lab::graph::{subsets, EdgeSet, Multigraph, VertexSet};

pub fn g(pairs: &[(u32, u32)]) -> Multigraph {
    Multigraph::from_pairs(pairs).unwrap()
}

/// Components of the subgraph on `vertices` using only `edges`, by label
/// propagation.
pub fn components(g: &Multigraph, vertices: VertexSet, edges: EdgeSet) -> usize {
    let mut label: Vec<u32> = (0..64).collect();
    loop {
        let mut changed = false;
        for e in g.edges().iter().filter(|e| edges.contains(e.id)) {
            if vertices.contains(e.u) && vertices.contains(e.v) {
                let m = label[e.u as usize].min(label[e.v as usize]);
                for x in [e.u, e.v] {
                    if label[x as usize] != m {
                        label[x as usize] = m;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    vertices.iter().map(|v| label[v as usize]).collect::<BTreeSet<_>>().len()
}

pub fn joined(g: &Multigraph, vertices: VertexSet, edges: EdgeSet, a: u32, b: u32) -> bool {
    let mut reached = VertexSet::singleton(a);
    loop {
        let mut grown = reached;
        for e in g.edges().iter().filter(|e| edges.contains(e.id)) {
            if vertices.contains(e.u) && vertices.contains(e.v) && (reached.contains(e.u) || reached.contains(e.v)) {
                grown = grown.union(e.ends());
            }
        }
        if grown == reached {
            return reached.contains(b);
        }
        reached = grown;
    }
}

/// Every `(edges, vertices)` pair forming a connected subgraph whose vertex set
/// meets every edge, found by trying all vertex and edge subsets.
pub fn nuclei_oracle(g: &Multigraph) -> BTreeSet<(u64, u64)> {
    let mut out = BTreeSet::new();
    for s in subsets(g.vertex_set().bits()).map(VertexSet).filter(|s| !s.is_empty()) {
        if !g.edges().iter().all(|e| s.contains(e.u) || s.contains(e.v)) {
            continue;
        }
        let inside: EdgeSet = g.edges().iter().filter(|e| s.contains(e.u) && s.contains(e.v)).map(|e| e.id).collect();
        for a in subsets(inside.bits()).map(EdgeSet) {
            if components(g, s, a) == 1 {
                out.insert((a.bits(), s.bits()));
            }
        }
    }
    out
}

/// Blocks as classes of edges not separated by any single vertex, and the
/// number of blocks holding exactly one cut-vertex.
pub fn blocks_oracle(g: &Multigraph) -> (usize, VertexSet, usize) {
    let all = g.edge_set();
    let base = components(g, g.vertex_set(), all);
    let cuts: VertexSet = g
        .vertices()
        .filter(|&x| components(g, g.vertex_set().without(x), all) > base)
        .collect();
    let together = |e: u32, f: u32| {
        let (e, f) = (g.edge(e).unwrap(), g.edge(f).unwrap());
        g.vertices().all(|x| {
            let rest = g.vertex_set().without(x);
            let a = e.ends().without(x);
            let b = f.ends().without(x);
            a.iter().any(|p| b.iter().any(|q| joined(g, rest, all, p, q)))
        })
    };
    let mut classes: Vec<EdgeSet> = Vec::new();
    for e in g.edges() {
        match classes.iter_mut().find(|c| together(c.first().unwrap(), e.id)) {
            Some(c) => *c = c.with(e.id),
            None => classes.push(EdgeSet::singleton(e.id)),
        }
    }
    let leaves = classes.iter().filter(|c| g.endpoints(**c).intersection(cuts).len() == 1).count();
    (classes.len(), cuts, leaves)
}

pub fn labeled_connected(n: u32) -> Vec<Multigraph> {
    let pairs: Vec<(u32, u32)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect::<Vec<_>>())
        .filter(|chosen| {
            let vs: BTreeSet<u32> = chosen.iter().flat_map(|&(a, b)| [a, b]).collect();
            vs.len() == n as usize
        })
        .map(|chosen| g(&chosen))
        .filter(|h| h.is_connected())
        .collect()
}

pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n as u32 - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism classes as sets of relabeled edge lists, smallest image kept.
pub fn class_count(n: u32) -> usize {
    if n == 1 {
        return 1;
    }
    let perms = permutations(n as usize);
    let mut seen = BTreeSet::new();
    for h in labeled_connected(n) {
        let canon = perms
            .iter()
            .map(|p| {
                let mut edges: Vec<(u32, u32)> = h
                    .edges()
                    .iter()
                    .map(|e| {
                        let (a, b) = (p[e.u as usize], p[e.v as usize]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                edges.sort();
                edges
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.len()
}

/// `els_k` straight from the definition over [`nuclei_oracle`].
pub fn elser_oracle(g: &Multigraph, k: u32) -> BigInt {
    let total: BigInt = nuclei_oracle(g)
        .into_iter()
        .map(|(edges, vertices)| {
            let term = BigInt::from(vertices.count_ones()).pow(k);
            if edges.count_ones() % 2 == 0 { term } else { -term }
        })
        .sum();
    if g.vertex_count() % 2 == 1 { total } else { -total }
}

/// Faces of the cographic complex: edge sets whose removal leaves a
/// connected spanning subgraph.
pub fn cographic_oracle(g: &Multigraph) -> Vec<EdgeSet> {
    let all = g.edge_set();
    let mut faces: Vec<EdgeSet> = subsets(all.bits())
        .map(EdgeSet)
        .filter(|a| components(g, g.vertex_set(), all.difference(*a)) == 1)
        .collect();
    faces.sort_by_key(|f| (f.len(), f.bits()));
    faces
}

/// 2-connected in the sense used for sign predictions: `K_2`, or at least
/// three vertices and no vertex whose removal disconnects.
pub fn two_connected_oracle(g: &Multigraph) -> bool {
    let all = g.edge_set();
    match g.vertex_count() {
        0 | 1 => false,
        2 => g.is_connected(),
        _ => g.is_connected() && g.vertices().all(|x| components(g, g.vertex_set().without(x), all) == 1),
    }
}
