//! Deletion-contraction for nucleus complexes.
//!
//! `chi(G, U) = chi(G/e, U/e) - chi(G \ e, U)` for any edge `e` that is
//! neither a loop nor a cut-edge. Recursing until every minor is a tree or
//! has a loop gives both a fast Euler characteristic and the restricted
//! deletion/contraction tree (RDCT).

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cut_analysis, subsets, EdgeId, EdgeSet, Multigraph, VertexId, VertexSet};

/// Memoized surjection counts `Sur(a, b)`.
#[derive(Clone, Debug, Default)]
pub struct SurTable {
    rows: Vec<Vec<BigInt>>,
}

impl SurTable {
    pub fn new() -> Self {
        SurTable { rows: vec![vec![BigInt::one()]] }
    }

    /// Number of surjections from an `a`-set onto a `b`-set.
    pub fn get(&mut self, a: u32, b: u32) -> BigInt {
        if b > a {
            return BigInt::zero();
        }
        if self.rows.is_empty() {
            self.rows.push(vec![BigInt::one()]);
        }
        while self.rows.len() <= a as usize {
            let prev = self.rows.last().unwrap();
            let n = self.rows.len();
            let row: Vec<BigInt> = (0..=n)
                .map(|j| {
                    if j == 0 {
                        return BigInt::zero();
                    }
                    let left = &prev[j - 1];
                    let stay = prev.get(j).cloned().unwrap_or_default();
                    BigInt::from(j) * (left + stay)
                })
                .collect();
            self.rows.push(row);
        }
        self.rows[a as usize][b as usize].clone()
    }
}

pub fn surjection_count(a: u32, b: u32) -> BigInt {
    SurTable::new().get(a, b)
}

/// Edges that are neither loops nor cut-edges.
pub fn eligible_edges(g: &Multigraph) -> EdgeSet {
    let cuts = cut_analysis(g).cut_edges;
    g.edges()
        .iter()
        .filter(|e| !e.is_loop() && !cuts.contains(e.id))
        .map(|e| e.id)
        .collect()
}

fn require_eligible(g: &Multigraph, e: EdgeId) -> Result<()> {
    let edge = g.edge(e).ok_or(Error::UnknownEdge(e))?;
    if edge.is_loop() {
        return Err(Error::LoopEdge(e));
    }
    if cut_analysis(g).cut_edges.contains(e) {
        return Err(Error::CutEdge(e));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Deletion,
    Contraction,
}

/// An edge set tagged with the minor it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tagged {
    pub side: Side,
    pub set: EdgeSet,
}

/// Splits `2^{E(G)}` into `2^{E(G \ e)}` and `2^{E(G / e)}`: sets containing
/// `e` lose it and go to the deletion side, the rest go to the contraction side.
pub fn psi(a: EdgeSet, e: EdgeId, g: &Multigraph) -> Result<Tagged> {
    require_eligible(g, e)?;
    if let Some(x) = a.difference(g.edge_set()).first() {
        return Err(Error::UnknownEdge(x));
    }
    Ok(if a.contains(e) {
        Tagged { side: Side::Deletion, set: a.without(e) }
    } else {
        Tagged { side: Side::Contraction, set: a }
    })
}

pub fn psi_inv(b: Tagged, e: EdgeId, g: &Multigraph) -> Result<EdgeSet> {
    require_eligible(g, e)?;
    if let Some(x) = b.set.difference(g.edge_set().without(e)).first() {
        return Err(Error::UnknownEdge(x));
    }
    Ok(match b.side {
        Side::Deletion => b.set.with(e),
        Side::Contraction => b.set,
    })
}

fn sign(exponent: usize) -> i64 {
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `chi(Delta^{cK_2}_U)` by `|U|`.
fn bundle_chi(c: usize, u_len: usize) -> i64 {
    match u_len {
        0 => sign(c - 1),
        1 => 0,
        _ => sign(c),
    }
}

/// `chi(Delta^T_U)` for a tree `T` with at least two vertices.
fn tree_chi(t: &Multigraph, u: VertexSet) -> i64 {
    if t.vertex_count() == 2 {
        return bundle_chi(1, u.len());
    }
    if t.leaves().is_subset(u) {
        -1
    } else {
        0
    }
}

type MemoKey = (u64, Vec<(VertexId, VertexId)>, u64);

/// Deletion-contraction evaluator with a memo over labeled minors.
#[derive(Debug, Default)]
pub struct EulerDc {
    memo: HashMap<MemoKey, i64>,
}

impl EulerDc {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi(Delta^G_U)`.
    pub fn chi(&mut self, g: &Multigraph, u: VertexSet) -> Result<i64> {
        g.require_connected()?;
        if g.vertex_count() < 2 {
            return Err(Error::SingleVertex);
        }
        if let Some(x) = u.difference(g.vertex_set()).first() {
            return Err(Error::UnknownVertex(x));
        }
        Ok(self.eval(g, u))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn eval(&mut self, g: &Multigraph, u: VertexSet) -> i64 {
        if g.has_loop() {
            return 0;
        }
        if let Some(c) = g.parallel_k2_multiplicity() {
            return bundle_chi(c, u.len());
        }
        if g.is_tree() {
            return tree_chi(g, u);
        }
        // a leaf outside U makes the complex a cone on its edge
        if g.leaves().difference(u).first().is_some() {
            return 0;
        }
        let (vertices, pairs) = g.shape_key();
        let key = (vertices, pairs, u.bits());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let e = eligible_edges(g).first().expect("a loopless non-tree has a non-cut edge");
        let (contracted, mapped) = g.contract_edge(e, u).expect("edge exists");
        let deleted = g.delete_edge(e).expect("edge exists");
        let value = self.eval(&contracted, mapped) - self.eval(&deleted, u);
        self.memo.insert(key, value);
        value
    }
}

/// `chi(Delta^G_U)` by deletion-contraction.
pub fn euler_dc(g: &Multigraph, u: VertexSet) -> Result<i64> {
    EulerDc::new().chi(g, u)
}

/// `els_k(G) = (-1)^{|E|+|V|} sum_U Sur(k, |U|) chi(Delta^G_U)`.
pub fn elser_via_euler(g: &Multigraph, k: u32) -> Result<BigInt> {
    let mut dc = EulerDc::new();
    let mut sur = SurTable::new();
    elser_via_euler_with(g, k, &mut dc, &mut sur)
}

pub fn elser_via_euler_with(g: &Multigraph, k: u32, dc: &mut EulerDc, sur: &mut SurTable) -> Result<BigInt> {
    g.require_connected()?;
    if g.vertex_count() < 2 {
        return Err(Error::SingleVertex);
    }
    let mut total = BigInt::zero();
    for u in subsets(g.vertex_set().bits()).map(VertexSet) {
        let s = sur.get(k, u.len() as u32);
        if s.is_zero() {
            continue;
        }
        total += s * dc.chi(g, u)?;
    }
    Ok(sign(g.edge_count() + g.vertex_count()) * total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "move", content = "edge")]
pub enum Move {
    Root,
    Deleted(EdgeId),
    Contracted(EdgeId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeafKind {
    Tree,
    Loopy,
}

/// Minor as `{vertices, edges: [[id, u, v], ...]}` for serialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorJson {
    pub vertices: VertexSet,
    pub edges: Vec<[u32; 3]>,
}

impl From<&Multigraph> for MinorJson {
    fn from(g: &Multigraph) -> Self {
        MinorJson {
            vertices: g.vertex_set(),
            edges: g.edges().iter().map(|e| [e.id, e.u, e.v]).collect(),
        }
    }
}

impl TryFrom<&MinorJson> for Multigraph {
    type Error = Error;

    fn try_from(m: &MinorJson) -> Result<Multigraph> {
        Multigraph::new(m.vertices.iter(), m.edges.iter().map(|&[id, u, v]| (id, u, v)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RdctNode {
    pub minor: Multigraph,
    pub mapped_u: VertexSet,
    pub step: Move,
    /// Deletions on the path from the root.
    pub deletions: usize,
    /// Empty for leaves, else `[deletion child, contraction child]`.
    pub children: Vec<RdctNode>,
    pub leaf_kind: Option<LeafKind>,
}

impl Serialize for RdctNode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("step", &self.step)?;
        map.serialize_entry("minor", &MinorJson::from(&self.minor))?;
        map.serialize_entry("U", &self.mapped_u)?;
        map.serialize_entry("deletions", &self.deletions)?;
        match self.leaf_kind {
            Some(kind) => map.serialize_entry("leaf", &kind)?,
            None => map.serialize_entry("children", &self.children)?,
        }
        map.end()
    }
}

/// A leaf of an RDCT with its path data.
#[derive(Clone, Debug)]
pub struct RdctLeaf<'a> {
    pub minor: &'a Multigraph,
    pub mapped_u: VertexSet,
    pub deletions: usize,
    pub kind: LeafKind,
}

impl RdctNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn leaves(&self) -> Vec<RdctLeaf<'_>> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<RdctLeaf<'a>>) {
        match self.leaf_kind {
            Some(kind) => out.push(RdctLeaf {
                minor: &self.minor,
                mapped_u: self.mapped_u,
                deletions: self.deletions,
                kind,
            }),
            None => self.children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn tree_leaves(&self) -> Vec<RdctLeaf<'_>> {
        self.leaves().into_iter().filter(|l| l.kind == LeafKind::Tree).collect()
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(RdctNode::node_count).sum::<usize>()
    }

    /// `chi(Delta^G_U)` as the signed sum over tree leaves.
    pub fn euler_from_leaves(&self) -> i64 {
        self.tree_leaves()
            .iter()
            .map(|l| sign(l.deletions) * tree_chi(l.minor, l.mapped_u))
            .sum()
    }

    /// Indented outline, one node per line.
    pub fn outline(&self) -> String {
        let mut out = String::new();
        self.write_outline(0, &mut out);
        out
    }

    fn write_outline(&self, depth: usize, out: &mut String) {
        let step = match self.step {
            Move::Root => "root".to_string(),
            Move::Deleted(e) => format!("delete {e}"),
            Move::Contracted(e) => format!("contract {e}"),
        };
        let edges: Vec<String> = self.minor.edges().iter().map(|e| format!("{}:{}-{}", e.id, e.u, e.v)).collect();
        let _ = write!(out, "{}{step} [{}] U={}", "  ".repeat(depth), edges.join(" "), self.mapped_u);
        match self.leaf_kind {
            Some(LeafKind::Tree) => {
                let _ = write!(out, " tree d={}", self.deletions);
            }
            Some(LeafKind::Loopy) => out.push_str(" loopy"),
            None => {}
        }
        out.push('\n');
        for c in &self.children {
            c.write_outline(depth + 1, out);
        }
    }
}

/// Full RDCT splitting on the lowest-id eligible edge at every node.
///
/// In a loopless minor whose edges are all cut-edges there is nothing to
/// reduce: such a minor is already a tree.
pub fn build_rdct(g: &Multigraph, u: VertexSet) -> Result<RdctNode> {
    g.require_connected()?;
    if g.vertex_count() < 2 {
        return Err(Error::SingleVertex);
    }
    if g.has_loop() {
        return Err(Error::HasLoop);
    }
    if let Some(x) = u.difference(g.vertex_set()).first() {
        return Err(Error::UnknownVertex(x));
    }
    Ok(grow(g.clone(), u, Move::Root, 0))
}

fn grow(minor: Multigraph, u: VertexSet, step: Move, deletions: usize) -> RdctNode {
    let leaf = |minor, kind| RdctNode {
        minor,
        mapped_u: u,
        step,
        deletions,
        children: Vec::new(),
        leaf_kind: Some(kind),
    };
    if minor.has_loop() {
        return leaf(minor, LeafKind::Loopy);
    }
    let Some(e) = eligible_edges(&minor).first() else {
        debug_assert!(minor.is_tree());
        return leaf(minor, LeafKind::Tree);
    };
    let deleted = minor.delete_edge(e).expect("edge exists");
    let (contracted, mapped) = minor.contract_edge(e, u).expect("edge exists");
    let children = vec![
        grow(deleted, u, Move::Deleted(e), deletions + 1),
        grow(contracted, mapped, Move::Contracted(e), deletions),
    ];
    RdctNode { minor, mapped_u: u, step, deletions, children, leaf_kind: None }
}

/// `els_0(G) = -(number of K_2 leaves)`.
pub fn els0_from_rdct(tree: &RdctNode) -> BigInt {
    let k2 = tree
        .tree_leaves()
        .iter()
        .filter(|l| l.minor.vertex_count() == 2)
        .count();
    -BigInt::from(k2)
}
