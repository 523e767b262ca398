//! Labeled multigraphs with permanent edge identities.
//!
//! Loops and parallel edges are allowed. Deletion and contraction keep the ids
//! of every surviving edge, so subsets of `E(G)` stay meaningful across minors.
//! Vertex and edge ids are small integers below 64.

mod bits;
mod cuts;
mod enumerate;
mod io;

pub use bits::{subsets, EdgeSet, VertexSet};
pub use cuts::{block_cutpoint, cut_analysis, spanning_tree, BcNode, BlockDecomposition, CutAnalysis};
pub use enumerate::{
    canonical_mask, connected_class_masks, connected_graphs, graph_from_mask, mask_of, pair_count, permute_mask,
    LabeledConnectedGraphs, MAX_ENUMERATION_ORDER,
};
pub use io::{parse_graph, parse_json, to_json, to_text, GraphJson};

use crate::error::{Error, Result};

pub type VertexId = u32;
pub type EdgeId = u32;

/// Largest id (exclusive) a vertex or edge may carry.
pub const ID_LIMIT: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub id: EdgeId,
    /// Smaller endpoint.
    pub u: VertexId,
    /// Larger endpoint; equal to `u` for a loop.
    pub v: VertexId,
}

impl Edge {
    pub fn new(id: EdgeId, a: VertexId, b: VertexId) -> Self {
        Edge { id, u: a.min(b), v: a.max(b) }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn ends(&self) -> VertexSet {
        VertexSet::singleton(self.u).with(self.v)
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// An undirected multigraph.
///
/// Immutable once built; every operation returns a fresh graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertices: VertexSet,
    /// Sorted by id.
    edges: Vec<Edge>,
}

impl Multigraph {
    /// Builds a graph from explicit vertex and edge lists.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (EdgeId, VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut vset = VertexSet::EMPTY;
        for v in vertices {
            if v >= ID_LIMIT {
                return Err(Error::VertexOutOfRange(v as u64));
            }
            vset.insert(v);
        }
        let mut list = Vec::new();
        let mut seen = EdgeSet::EMPTY;
        for (id, a, b) in edges {
            if id >= ID_LIMIT {
                return Err(Error::EdgeOutOfRange(id as u64));
            }
            if seen.contains(id) {
                return Err(Error::DuplicateEdge(id));
            }
            for x in [a, b] {
                if x >= ID_LIMIT {
                    return Err(Error::VertexOutOfRange(x as u64));
                }
                if !vset.contains(x) {
                    return Err(Error::UnknownVertex(x));
                }
            }
            seen.insert(id);
            list.push(Edge::new(id, a, b));
        }
        list.sort();
        Ok(Multigraph { vertices: vset, edges: list })
    }

    /// Builds a graph whose edges are `pairs` with ids `0, 1, ...` and whose
    /// vertices are exactly the endpoints.
    pub fn from_pairs(pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= ID_LIMIT || b >= ID_LIMIT) {
            return Err(Error::VertexOutOfRange(a.max(b) as u64));
        }
        let vertices: VertexSet = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        Self::new(
            vertices.iter(),
            pairs.iter().enumerate().map(|(i, &(a, b))| (i as EdgeId, a, b)),
        )
    }

    pub fn single_vertex(v: VertexId) -> Self {
        Multigraph { vertices: VertexSet::singleton(v), edges: Vec::new() }
    }

    /// Complete graph on vertices `0..n`.
    pub fn complete(n: u32) -> Self {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        if n == 1 {
            return Self::single_vertex(0);
        }
        Self::from_pairs(&pairs).expect("complete graph fits the id range")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: u32) -> Self {
        if n == 1 {
            return Self::single_vertex(0);
        }
        let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Self::from_pairs(&pairs).expect("path fits the id range")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: u32) -> Self {
        let mut pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        pairs.push((0, n - 1));
        Self::from_pairs(&pairs).expect("cycle fits the id range")
    }

    /// Star with center `0` and leaves `1..=leaves`.
    pub fn star(leaves: u32) -> Self {
        let pairs: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_pairs(&pairs).expect("star fits the id range")
    }

    /// `c` parallel edges between vertices 0 and 1.
    pub fn parallel_k2(c: u32) -> Self {
        let pairs = vec![(0, 1); c as usize];
        Self::from_pairs(&pairs).expect("bundle fits the id range")
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().map(|e| e.id).collect()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.binary_search_by_key(&id, |e| e.id).ok().map(|i| &self.edges[i])
    }

    fn require_edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edge(id).ok_or(Error::UnknownEdge(id))
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// Degree counting a loop twice.
    pub fn degree(&self, x: VertexId) -> usize {
        self.edges
            .iter()
            .map(|e| (e.u == x) as usize + (e.v == x) as usize)
            .sum()
    }

    pub fn neighbors(&self, x: VertexId) -> VertexSet {
        self.edges
            .iter()
            .filter(|e| e.u == x || e.v == x)
            .map(|e| e.other(x))
            .collect()
    }

    /// Union of the endpoints of the given edges.
    pub fn endpoints(&self, edges: EdgeSet) -> VertexSet {
        self.edges
            .iter()
            .filter(|e| edges.contains(e.id))
            .fold(VertexSet::EMPTY, |acc, e| acc.union(e.ends()))
    }

    pub fn is_vertex_cover(&self, cover: VertexSet) -> bool {
        self.edges.iter().all(|e| !e.ends().is_disjoint(cover))
    }

    /// Number of connected components of the subgraph with the given vertices
    /// and those edges of `edges` whose endpoints both lie in `vertices`.
    pub fn component_count_of(&self, vertices: VertexSet, edges: EdgeSet) -> usize {
        let mut parent: [u8; 64] = std::array::from_fn(|i| i as u8);
        fn find(parent: &mut [u8; 64], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut count = vertices.len();
        for e in &self.edges {
            if !edges.contains(e.id) || !e.ends().is_subset(vertices) {
                continue;
            }
            let a = find(&mut parent, e.u as usize);
            let b = find(&mut parent, e.v as usize);
            if a != b {
                parent[a] = b as u8;
                count -= 1;
            }
        }
        count
    }

    pub fn component_count(&self) -> usize {
        self.component_count_of(self.vertices, self.edge_set())
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut reached = VertexSet::singleton(start);
            loop {
                let grown = self
                    .edges
                    .iter()
                    .filter(|e| !e.ends().is_disjoint(reached))
                    .fold(reached, |acc, e| acc.union(e.ends()));
                if grown == reached {
                    break;
                }
                reached = grown;
            }
            left = left.difference(reached);
            out.push(reached);
        }
        out
    }

    /// `G \ e`.
    pub fn delete_edge(&self, e: EdgeId) -> Result<Multigraph> {
        self.require_edge(e)?;
        Ok(Multigraph {
            vertices: self.vertices,
            edges: self.edges.iter().copied().filter(|x| x.id != e).collect(),
        })
    }

    /// `G / e` together with `U / e`.
    ///
    /// The merged vertex keeps the smaller of the two endpoint ids; other edges
    /// parallel to `e` become loops there.
    pub fn contract_edge(&self, e: EdgeId, subset: VertexSet) -> Result<(Multigraph, VertexSet)> {
        let edge = *self.require_edge(e)?;
        if edge.is_loop() {
            return Err(Error::LoopEdge(e));
        }
        if !subset.is_subset(self.vertices) {
            return Err(Error::UnknownVertex(subset.difference(self.vertices).first().unwrap()));
        }
        let (keep, gone) = (edge.u, edge.v);
        let rename = |x: VertexId| if x == gone { keep } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|x| x.id != e)
            .map(|x| Edge::new(x.id, rename(x.u), rename(x.v)))
            .collect();
        let mapped = if subset.contains(keep) || subset.contains(gone) {
            subset.without(gone).with(keep)
        } else {
            subset
        };
        Ok((Multigraph { vertices: self.vertices.without(gone), edges }, mapped))
    }

    /// `G - x`: removes the vertex and every incident edge.
    pub fn remove_vertex(&self, x: VertexId) -> Result<Multigraph> {
        if !self.vertices.contains(x) {
            return Err(Error::UnknownVertex(x));
        }
        Ok(Multigraph {
            vertices: self.vertices.without(x),
            edges: self.edges.iter().copied().filter(|e| e.u != x && e.v != x).collect(),
        })
    }

    /// Subgraph formed by the given edges and their endpoints.
    pub fn edge_subgraph(&self, edges: EdgeSet) -> Multigraph {
        let kept: Vec<Edge> = self.edges.iter().copied().filter(|e| edges.contains(e.id)).collect();
        let vertices = kept.iter().fold(VertexSet::EMPTY, |acc, e| acc.union(e.ends()));
        Multigraph { vertices, edges: kept }
    }

    /// Subgraph on `vertices` keeping the given edges (which must lie inside it).
    pub fn restrict(&self, vertices: VertexSet, edges: EdgeSet) -> Multigraph {
        Multigraph {
            vertices: vertices.intersection(self.vertices),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| edges.contains(e.id) && e.ends().is_subset(vertices))
                .collect(),
        }
    }

    /// `Dep(G)`: keeps the lowest-id edge of every parallel class.
    pub fn deparallelize(&self) -> (Multigraph, usize) {
        let mut seen = std::collections::HashSet::new();
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|e| seen.insert((e.u, e.v)))
            .collect();
        let removed = self.edges.len() - edges.len();
        (Multigraph { vertices: self.vertices, edges }, removed)
    }

    /// Edges sharing both endpoints with `e`, including `e` itself.
    pub fn parallel_class(&self, e: EdgeId) -> Result<EdgeSet> {
        let edge = *self.require_edge(e)?;
        Ok(self
            .edges
            .iter()
            .filter(|x| x.u == edge.u && x.v == edge.v)
            .map(|x| x.id)
            .collect())
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loop() && self.deparallelize().1 == 0
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertices.len() && self.is_connected()
    }

    /// Connected 2-regular simple graph with at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3
            && self.edges.len() == self.vertices.len()
            && self.is_simple()
            && self.is_connected()
            && self.vertices().all(|x| self.degree(x) == 2)
    }

    /// `Some(c)` when the graph is `cK_2`: two vertices joined by `c >= 1`
    /// parallel edges and nothing else.
    pub fn parallel_k2_multiplicity(&self) -> Option<usize> {
        (self.vertices.len() == 2 && !self.edges.is_empty() && !self.has_loop())
            .then_some(self.edges.len())
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> VertexSet {
        self.vertices().filter(|&x| self.degree(x) == 1).collect()
    }

    /// Renumbers vertices and edges to `0..n` and `0..m` preserving order.
    pub fn compacted(&self) -> Multigraph {
        let index: Vec<VertexId> = {
            let mut idx = vec![0; 64];
            for (i, v) in self.vertices().enumerate() {
                idx[v as usize] = i as VertexId;
            }
            idx
        };
        Multigraph {
            vertices: VertexSet::range(self.vertices.len() as u32),
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, e)| Edge::new(i as EdgeId, index[e.u as usize], index[e.v as usize]))
                .collect(),
        }
    }

    /// Sorted endpoint pairs with multiplicity; identifies the labeled graph
    /// up to edge ids.
    pub fn shape_key(&self) -> (u64, Vec<(VertexId, VertexId)>) {
        let mut pairs: Vec<_> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        pairs.sort_unstable();
        (self.vertices.bits(), pairs)
    }
}
