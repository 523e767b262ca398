//! Cut-edges, cut-vertices, blocks and spanning trees.

use std::collections::VecDeque;

use serde::Serialize;

use super::{EdgeId, EdgeSet, Multigraph, VertexId, VertexSet};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutAnalysis {
    pub connected: bool,
    pub cut_edges: EdgeSet,
    pub cut_vertices: VertexSet,
    pub two_connected: bool,
}

/// Cut structure by direct component counting.
///
/// `e` is a cut-edge when `G \ e` has more components than `G`, and `x` is a
/// cut-vertex when `G - x` does. `two_connected` means connected, at least two
/// vertices, no cut-vertex, and at least one non-loop edge; so `K_2` and `cK_2`
/// count as 2-connected.
pub fn cut_analysis(g: &Multigraph) -> CutAnalysis {
    let base = g.component_count();
    let all = g.edge_set();
    let cut_edges: EdgeSet = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop() && g.component_count_of(g.vertex_set(), all.without(e.id)) > base)
        .map(|e| e.id)
        .collect();
    let cut_vertices: VertexSet = g
        .vertices()
        .filter(|&x| g.component_count_of(g.vertex_set().without(x), all) > base)
        .collect();
    let connected = base == 1;
    let two_connected = connected
        && g.vertex_count() >= 2
        && cut_vertices.is_empty()
        && g.edges().iter().any(|e| !e.is_loop());
    CutAnalysis { connected, cut_edges, cut_vertices, two_connected }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BcNode {
    Block(usize),
    Cut(VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Edge sets of the blocks, ordered by smallest edge id.
    pub blocks: Vec<EdgeSet>,
    pub cut_vertices: VertexSet,
    pub bc_nodes: Vec<BcNode>,
    /// Edges of the block-cutpoint tree as index pairs into `bc_nodes`.
    pub bc_edges: Vec<(usize, usize)>,
    /// Number of blocks containing exactly one cut-vertex.
    pub leaf_count: usize,
}

impl BlockDecomposition {
    pub fn block_vertices(&self, g: &Multigraph, i: usize) -> VertexSet {
        g.endpoints(self.blocks[i])
    }
}

/// Blocks and block-cutpoint tree of a connected graph.
///
/// A loop is placed in the first block containing its vertex, or forms a
/// block of its own when the vertex has no other edges.
pub fn block_cutpoint(g: &Multigraph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let mut state = Dfs {
        g,
        disc: [u32::MAX; 64],
        low: [u32::MAX; 64],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    if let Some(root) = g.vertex_set().first() {
        state.visit(root, None);
    }
    let mut blocks = state.blocks;
    for e in g.edges().iter().filter(|e| e.is_loop()) {
        match blocks.iter_mut().find(|b| g.endpoints(**b).contains(e.u)) {
            Some(block) => block.insert(e.id),
            None => blocks.push(EdgeSet::singleton(e.id)),
        }
    }
    blocks.sort_by_key(|b| b.first());

    let block_vertices: Vec<VertexSet> = blocks.iter().map(|&b| g.endpoints(b)).collect();
    let cut_vertices: VertexSet = g
        .vertices()
        .filter(|&x| block_vertices.iter().filter(|vs| vs.contains(x)).count() >= 2)
        .collect();

    let mut bc_nodes: Vec<BcNode> = (0..blocks.len()).map(BcNode::Block).collect();
    let mut bc_edges = Vec::new();
    for x in cut_vertices.iter() {
        let node = bc_nodes.len();
        bc_nodes.push(BcNode::Cut(x));
        for (i, vs) in block_vertices.iter().enumerate() {
            if vs.contains(x) {
                bc_edges.push((i, node));
            }
        }
    }
    let leaf_count = if cut_vertices.is_empty() {
        0
    } else {
        block_vertices
            .iter()
            .filter(|vs| vs.intersection(cut_vertices).len() == 1)
            .count()
    };
    Ok(BlockDecomposition { blocks, cut_vertices, bc_nodes, bc_edges, leaf_count })
}

struct Dfs<'a> {
    g: &'a Multigraph,
    disc: [u32; 64],
    low: [u32; 64],
    time: u32,
    stack: Vec<EdgeId>,
    blocks: Vec<EdgeSet>,
}

impl Dfs<'_> {
    fn visit(&mut self, v: VertexId, via: Option<EdgeId>) {
        let vi = v as usize;
        self.disc[vi] = self.time;
        self.low[vi] = self.time;
        self.time += 1;
        let g = self.g;
        for e in g.edges().iter().filter(|e| !e.is_loop() && (e.u == v || e.v == v)) {
            if Some(e.id) == via {
                continue;
            }
            let w = e.other(v) as usize;
            if self.disc[w] == u32::MAX {
                self.stack.push(e.id);
                self.visit(w as VertexId, Some(e.id));
                self.low[vi] = self.low[vi].min(self.low[w]);
                if self.low[w] >= self.disc[vi] {
                    let mut block = EdgeSet::EMPTY;
                    while let Some(top) = self.stack.pop() {
                        block.insert(top);
                        if top == e.id {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if self.disc[w] < self.disc[vi] {
                self.stack.push(e.id);
                self.low[vi] = self.low[vi].min(self.disc[w]);
            }
        }
    }
}

/// Breadth-first spanning tree from the lowest vertex, scanning incident edges
/// in increasing id order.
pub fn spanning_tree(g: &Multigraph) -> Result<EdgeSet> {
    g.require_connected()?;
    let mut tree = EdgeSet::EMPTY;
    let Some(root) = g.vertex_set().first() else {
        return Ok(tree);
    };
    let mut seen = VertexSet::singleton(root);
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for e in g.edges().iter().filter(|e| !e.is_loop() && (e.u == x || e.v == x)) {
            let y = e.other(x);
            if !seen.contains(y) {
                seen.insert(y);
                tree.insert(e.id);
                queue.push_back(y);
            }
        }
    }
    Ok(tree)
}
