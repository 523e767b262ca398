//! Ear decompositions through a spanning tree, tree-minor realization, and
//! sign predictions from the block structure.

use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{block_cutpoint, cut_analysis, EdgeId, EdgeSet, Multigraph, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ear {
    /// Vertex sequence; the first ear is closed (first vertex repeated last).
    pub vertices: Vec<VertexId>,
    /// Edges in traversal order.
    pub edges: Vec<EdgeId>,
}

impl Ear {
    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EarDecomposition {
    pub tree: EdgeSet,
    pub ears: Vec<Ear>,
}

fn require_two_connected(g: &Multigraph) -> Result<()> {
    g.require_connected()?;
    if g.has_loop() {
        return Err(Error::HasLoop);
    }
    if !cut_analysis(g).two_connected || g.edge_count() < g.vertex_count() {
        return Err(Error::NotTwoConnected);
    }
    Ok(())
}

fn require_spanning_tree(g: &Multigraph, t: EdgeSet) -> Result<()> {
    if let Some(e) = t.difference(g.edge_set()).first() {
        return Err(Error::NotSpanningTree(format!("edge {e} is not in the graph")));
    }
    if t.len() + 1 != g.vertex_count() {
        return Err(Error::NotSpanningTree(format!(
            "{} edges for {} vertices",
            t.len(),
            g.vertex_count()
        )));
    }
    if g.component_count_of(g.vertex_set(), t) != 1 {
        return Err(Error::NotSpanningTree("edges do not connect every vertex".into()));
    }
    Ok(())
}

/// Adjacency restricted to a tree.
struct TreeWalk<'a> {
    g: &'a Multigraph,
    tree: EdgeSet,
}

impl TreeWalk<'_> {
    fn steps(&self, x: VertexId) -> impl Iterator<Item = (EdgeId, VertexId)> + '_ {
        self.g
            .edges()
            .iter()
            .filter(move |e| self.tree.contains(e.id) && (e.u == x || e.v == x))
            .map(move |e| (e.id, e.other(x)))
    }

    /// Vertices and edges of the unique tree path from `a` to `b`.
    fn path(&self, a: VertexId, b: VertexId) -> (Vec<VertexId>, Vec<EdgeId>) {
        let mut parent: [Option<(EdgeId, VertexId)>; 64] = [None; 64];
        let mut seen = VertexSet::singleton(a);
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for (e, y) in self.steps(x) {
                if !seen.contains(y) {
                    seen.insert(y);
                    parent[y as usize] = Some((e, x));
                    queue.push_back(y);
                }
            }
        }
        let (mut vertices, mut edges) = (vec![b], Vec::new());
        let mut at = b;
        while at != a {
            let (e, p) = parent[at as usize].expect("tree is spanning");
            edges.push(e);
            vertices.push(p);
            at = p;
        }
        vertices.reverse();
        edges.reverse();
        (vertices, edges)
    }

    /// Vertices reachable from `start` without passing through `block`.
    fn branch(&self, start: VertexId, block: VertexId) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for (_, y) in self.steps(x) {
                if y != block && !seen.contains(y) {
                    seen.insert(y);
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

/// Ear decomposition of a 2-connected graph in which every ear has exactly
/// one edge outside the spanning tree `t`.
///
/// Free choices go to the lowest id: the first ear closes the lowest non-tree
/// edge; a non-tree edge spanning the current graph is taken when one exists;
/// otherwise `x` is the lowest vertex with a tree edge leaving the current
/// graph and the crossing edge is the lowest-id one.
pub fn ear_decomposition(g: &Multigraph, t: EdgeSet) -> Result<EarDecomposition> {
    require_two_connected(g)?;
    require_spanning_tree(g, t)?;
    let first = g.edge_set().difference(t).first().expect("2-connected graphs have a cycle");
    Ok(ears_from(g, t, first))
}

fn ears_from(g: &Multigraph, t: EdgeSet, first: EdgeId) -> EarDecomposition {
    let walk = TreeWalk { g, tree: t };
    let all = g.edge_set();
    let nontree = all.difference(t);

    let closing = *g.edge(first).expect("edge exists");
    let (mut vertices, mut edges) = walk.path(closing.v, closing.u);
    vertices.insert(0, closing.u);
    edges.insert(0, first);
    let mut used: EdgeSet = edges.iter().copied().collect();
    let mut inside: VertexSet = vertices.iter().copied().collect();
    let mut ears = vec![Ear { vertices, edges }];

    while used != all {
        let spanning = nontree
            .difference(used)
            .iter()
            .find(|&e| g.edge(e).unwrap().ends().is_subset(inside));
        let ear = match spanning {
            Some(e) => {
                let edge = g.edge(e).unwrap();
                Ear { vertices: vec![edge.u, edge.v], edges: vec![e] }
            }
            None => {
                let x = inside
                    .iter()
                    .find(|&x| walk.steps(x).any(|(_, y)| !inside.contains(y)))
                    .expect("a spanning tree leaves every proper subgraph");
                let (mut near, mut far) = (VertexSet::EMPTY, VertexSet::EMPTY);
                for (_, w) in walk.steps(x) {
                    let side = walk.branch(w, x);
                    if inside.contains(w) {
                        near = near.union(side);
                    } else {
                        far = far.union(side);
                    }
                }
                let crossing = g
                    .edges()
                    .iter()
                    .find(|e| {
                        (near.contains(e.u) && far.contains(e.v)) || (near.contains(e.v) && far.contains(e.u))
                    })
                    .expect("otherwise x is a cut-vertex");
                let (y, z) = if near.contains(crossing.u) {
                    (crossing.u, crossing.v)
                } else {
                    (crossing.v, crossing.u)
                };
                // y back toward x, stopping at the first vertex already placed
                let (to_x, to_x_edges) = walk.path(y, x);
                let stop = to_x.iter().position(|v| inside.contains(*v)).unwrap();
                let mut vertices: Vec<VertexId> = to_x[..=stop].iter().rev().copied().collect();
                let mut edges: Vec<EdgeId> = to_x_edges[..stop].iter().rev().copied().collect();
                edges.push(crossing.id);
                let (from_z, from_z_edges) = walk.path(z, x);
                vertices.extend(from_z);
                edges.extend(from_z_edges);
                Ear { vertices, edges }
            }
        };
        used = used.union(ear.edge_set());
        inside = inside.union(ear.vertices.iter().copied().collect());
        ears.push(ear);
    }
    EarDecomposition { tree: t, ears }
}

/// Checks the four ear-decomposition invariants; `Err` names the first violation.
pub fn check_ear_decomposition(g: &Multigraph, d: &EarDecomposition) -> std::result::Result<(), String> {
    let expected = g.edge_count() + 1 - g.vertex_count();
    if d.ears.len() != expected {
        return Err(format!("{} ears, expected {expected}", d.ears.len()));
    }
    let mut used = EdgeSet::EMPTY;
    let mut placed = VertexSet::EMPTY;
    for (i, ear) in d.ears.iter().enumerate() {
        let set = ear.edge_set();
        if set.len() != ear.edges.len() || !set.is_disjoint(used) {
            return Err(format!("ear {i} reuses an edge"));
        }
        if set.difference(d.tree).len() != 1 {
            return Err(format!("ear {i} has {} non-tree edges", set.difference(d.tree).len()));
        }
        if ear.vertices.len() != ear.edges.len() + 1 {
            return Err(format!("ear {i} has mismatched vertex and edge lists"));
        }
        // consecutive vertices must be joined by the listed edge
        for (j, &e) in ear.edges.iter().enumerate() {
            let edge = g.edge(e).ok_or(format!("ear {i} names unknown edge {e}"))?;
            if edge.ends() != VertexSet::singleton(ear.vertices[j]).with(ear.vertices[j + 1]) {
                return Err(format!("ear {i}: edge {e} does not join its neighbors"));
            }
        }
        let (first, last) = (ear.vertices[0], *ear.vertices.last().unwrap());
        let interior = &ear.vertices[1..ear.vertices.len() - 1];
        let interior_set: VertexSet = interior.iter().copied().collect();
        if interior_set.len() != interior.len() {
            return Err(format!("ear {i} repeats a vertex"));
        }
        if i == 0 {
            if first != last || interior.contains(&first) || ear.edges.len() < 2 {
                return Err("first ear is not a cycle".into());
            }
        } else {
            if first == last || interior_set.contains(first) || interior_set.contains(last) {
                return Err(format!("ear {i} is not a path"));
            }
            if !placed.contains(first) || !placed.contains(last) || !interior_set.is_disjoint(placed) {
                return Err(format!("ear {i} does not meet earlier ears exactly at its ends"));
            }
        }
        used = used.union(set);
        placed = placed.union(ear.vertices.iter().copied().collect());
    }
    if used != g.edge_set() {
        return Err("ears do not cover every edge".into());
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "move", content = "edge")]
pub enum MinorMove {
    Contract(EdgeId),
    Delete(EdgeId),
}

/// Applies moves in order, refusing to touch a loop or a cut-edge.
pub fn replay_moves(g: &Multigraph, moves: &[MinorMove]) -> Result<Multigraph> {
    let mut cur = g.clone();
    for (i, &mv) in moves.iter().enumerate() {
        let e = match mv {
            MinorMove::Contract(e) | MinorMove::Delete(e) => e,
        };
        let edge = cur.edge(e).ok_or(Error::UnknownEdge(e))?;
        if edge.is_loop() {
            return Err(Error::InvalidMinor(format!("step {i}: edge {e} is a loop")));
        }
        if cut_analysis(&cur).cut_edges.contains(e) {
            return Err(Error::InvalidMinor(format!("step {i}: edge {e} is a cut-edge")));
        }
        cur = match mv {
            MinorMove::Contract(e) => cur.contract_edge(e, VertexSet::EMPTY)?.0,
            MinorMove::Delete(e) => cur.delete_edge(e)?,
        };
    }
    Ok(cur)
}

/// `G / C \ D` computed directly, without legality checks.
pub fn minor(g: &Multigraph, c: EdgeSet, d: EdgeSet) -> Result<Multigraph> {
    let mut cur = g.clone();
    for e in c.iter() {
        cur = cur.contract_edge(e, VertexSet::EMPTY)?.0;
    }
    for e in d.iter() {
        cur = cur.delete_edge(e)?;
    }
    Ok(cur)
}

/// An order of the contractions `C` and deletions `D` reaching the tree
/// `G / C \ D` that never contracts or deletes a loop or a cut-edge.
///
/// Works through an ear decomposition for the spanning tree `E \ D` from the
/// last ear back: contract the ear's edges in `C`, then delete its edge in `D`.
/// The first ear is chosen to contain an edge that survives into the tree,
/// which keeps its last deletion off a loop.
pub fn realize_tree_minor(g: &Multigraph, c: EdgeSet, d: EdgeSet) -> Result<Vec<MinorMove>> {
    require_two_connected(g)?;
    if !c.is_disjoint(d) {
        return Err(Error::InvalidMinor("C and D overlap".into()));
    }
    if let Some(e) = c.union(d).difference(g.edge_set()).first() {
        return Err(Error::UnknownEdge(e));
    }
    let t = g.edge_set().difference(d);
    require_spanning_tree(g, t).map_err(|e| Error::InvalidMinor(format!("G / C \\ D is not a tree: {e}")))?;
    let kept = t.difference(c);
    if kept.is_empty() {
        return Err(Error::InvalidMinor("G / C \\ D is a single vertex".into()));
    }
    let walk = TreeWalk { g, tree: t };
    let first = d
        .iter()
        .find(|&e| {
            let edge = g.edge(e).unwrap();
            let (_, path) = walk.path(edge.u, edge.v);
            path.iter().any(|p| kept.contains(*p))
        })
        .expect("every kept tree edge lies on some fundamental cycle");
    let ears = ears_from(g, t, first);
    let mut moves = Vec::with_capacity(c.len() + d.len());
    for ear in ears.ears.iter().rev() {
        let set = ear.edge_set();
        moves.extend(set.intersection(c).iter().map(MinorMove::Contract));
        moves.extend(set.intersection(d).iter().map(MinorMove::Delete));
    }
    let reached = replay_moves(g, &moves)?;
    debug_assert_eq!(reached, minor(g, c, d)?);
    Ok(moves)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Els0Sign {
    Negative,
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignProfile {
    pub two_connected: bool,
    /// Leaf blocks of the block-cutpoint tree; 0 when 2-connected.
    pub leaf_blocks: usize,
    pub els0: Els0Sign,
    /// Smallest `k >= 2` with `els_k != 0`.
    pub threshold: u32,
}

impl SignProfile {
    /// Predicted sign of `els_k`.
    pub fn sign(&self, k: u32) -> Ordering {
        match k {
            0 if self.els0 == Els0Sign::Negative => Ordering::Less,
            0 | 1 => Ordering::Equal,
            _ if k >= self.threshold => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }
}

pub fn predict_sign_profile(g: &Multigraph) -> Result<SignProfile> {
    g.require_connected()?;
    if g.vertex_count() < 2 {
        return Err(Error::SingleVertex);
    }
    if g.has_loop() {
        return Err(Error::HasLoop);
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if cut_analysis(g).two_connected {
        return Ok(SignProfile { two_connected: true, leaf_blocks: 0, els0: Els0Sign::Negative, threshold: 2 });
    }
    let leaves = block_cutpoint(g)?.leaf_count;
    Ok(SignProfile {
        two_connected: false,
        leaf_blocks: leaves,
        els0: Els0Sign::Zero,
        threshold: leaves as u32,
    })
}

/// Predicts whether `chi(Delta^G_U)` vanishes: it does exactly when some block
/// meets `U` together with the cut-vertices in a single vertex.
pub fn euler_vanishes(g: &Multigraph, u: VertexSet) -> Result<bool> {
    if let Some(x) = u.difference(g.vertex_set()).first() {
        return Err(Error::UnknownVertex(x));
    }
    if g.has_loop() {
        return Ok(true);
    }
    let blocks = block_cutpoint(g)?;
    let marked = u.union(blocks.cut_vertices);
    Ok((0..blocks.blocks.len()).any(|i| blocks.block_vertices(g, i).intersection(marked).len() == 1))
}

/// Splits `G` at the cut-vertex `v` into `G_1` (the cut-component holding the
/// lowest vertex other than `v`) and `G_2` (the rest), both containing `v`.
pub fn split_at_cut_vertex(g: &Multigraph, v: VertexId) -> Result<(Multigraph, Multigraph)> {
    let rest = g.remove_vertex(v)?;
    let comps = rest.components();
    if comps.len() < 2 || !g.is_connected() {
        return Err(Error::Domain(format!("vertex {v} is not a cut-vertex")));
    }
    let side1 = comps[0].with(v);
    let side2 = g.vertex_set().difference(comps[0]);
    let edges1: EdgeSet = g
        .edges()
        .iter()
        .filter(|e| e.ends().is_subset(side1))
        .map(|e| e.id)
        .collect();
    let edges2 = g.edge_set().difference(edges1);
    Ok((g.restrict(side1, edges1), g.restrict(side2, edges2)))
}
