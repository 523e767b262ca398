//! Nuclei and Elser numbers by direct summation.
//!
//! A nucleus of `G` is a connected subgraph whose vertex set covers every
//! edge. It is identified by the pair (edge set, vertex set): in `cK_2` the two
//! one-vertex nuclei share the empty edge set.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, VertexSet};
use crate::recurrence::SurTable;

/// Exhaustive pipelines refuse graphs with more edges than this; every
/// simple graph on seven vertices fits.
pub const MAX_NUCLEUS_EDGES: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Nucleus {
    pub edges: EdgeSet,
    pub vertices: VertexSet,
}

/// Precomputed endpoint masks for fast subset tests on one graph.
pub(crate) struct SubsetOracle {
    ends: [u64; 64],
    ids: Vec<u32>,
}

impl SubsetOracle {
    pub(crate) fn new(g: &Multigraph) -> Self {
        let mut ends = [0u64; 64];
        for e in g.edges() {
            ends[e.id as usize] = e.ends().bits();
        }
        SubsetOracle { ends, ids: g.edges().iter().map(|e| e.id).collect() }
    }

    /// Translates a mask over edge positions into an edge-id set.
    #[inline]
    pub(crate) fn edge_set(&self, positional: u64) -> EdgeSet {
        let mut out = 0u64;
        let mut rest = positional;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << self.ids[i];
        }
        EdgeSet(out)
    }

    #[inline]
    pub(crate) fn endpoints(&self, edges: EdgeSet) -> u64 {
        edges.iter().fold(0, |acc, id| acc | self.ends[id as usize])
    }

    #[inline]
    pub(crate) fn covers(&self, vertices: u64) -> bool {
        self.ids.iter().all(|&id| self.ends[id as usize] & vertices != 0)
    }

    /// Whether the edges form a connected subgraph on exactly `vertices`.
    #[inline]
    pub(crate) fn connected(&self, edges: EdgeSet, vertices: u64) -> bool {
        let mut reached = vertices & vertices.wrapping_neg();
        loop {
            let mut grown = reached;
            for id in edges.iter() {
                let ends = self.ends[id as usize];
                if ends & reached != 0 {
                    grown |= ends;
                }
            }
            if grown == reached {
                return reached == vertices;
            }
            reached = grown;
        }
    }
}

fn check_size(g: &Multigraph) -> Result<()> {
    if g.edge_count() > MAX_NUCLEUS_EDGES {
        return Err(Error::TooLarge(format!(
            "{} edges; exhaustive nucleus enumeration is capped at {MAX_NUCLEUS_EDGES}",
            g.edge_count()
        )));
    }
    Ok(())
}

/// Every nucleus of a connected graph, ordered by edge-id mask then vertex mask.
pub fn enumerate_nuclei(g: &Multigraph) -> Result<Vec<Nucleus>> {
    g.require_connected()?;
    check_size(g)?;
    let oracle = SubsetOracle::new(g);
    let mut out = Vec::new();
    for v in g.vertices() {
        let single = VertexSet::singleton(v);
        if oracle.covers(single.bits()) {
            out.push(Nucleus { edges: EdgeSet::EMPTY, vertices: single });
        }
    }
    for positional in 1u64..1 << g.edge_count() {
        let edges = oracle.edge_set(positional);
        let vertices = oracle.endpoints(edges);
        if oracle.covers(vertices) && oracle.connected(edges, vertices) {
            out.push(Nucleus { edges, vertices: VertexSet(vertices) });
        }
    }
    Ok(out)
}

/// Signed nucleus counts by vertex count: entry `m` is
/// `sum over nuclei with |V(N)| = m of (-1)^{|E(N)|}`.
fn signed_census(g: &Multigraph, nuclei: &[Nucleus]) -> Vec<i64> {
    let mut census = vec![0i64; g.vertex_count() + 1];
    for n in nuclei {
        census[n.vertices.len()] += if n.edges.len() % 2 == 0 { 1 } else { -1 };
    }
    census
}

fn sign(exponent: usize) -> BigInt {
    if exponent % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn require_elser_domain(g: &Multigraph) -> Result<()> {
    g.require_connected()?;
    if g.vertex_count() < 2 {
        return Err(Error::SingleVertex);
    }
    Ok(())
}

/// `els_k(G) = (-1)^{|V|+1} sum_N (-1)^{|E(N)|} |V(N)|^k`.
pub fn elser_brute(g: &Multigraph, k: u32) -> Result<BigInt> {
    require_elser_domain(g)?;
    elser_sum(g, k)
}

/// The defining sum without the two-vertex requirement. On a single vertex with
/// loops it is 0, matching the vanishing of Elser numbers of loopy graphs;
/// on a bare single vertex it is 1.
pub fn elser_sum(g: &Multigraph, k: u32) -> Result<BigInt> {
    let nuclei = enumerate_nuclei(g)?;
    Ok(elser_from_nuclei(g, &nuclei, k))
}

/// The defining sum over a nucleus list already computed for `g`.
pub fn elser_from_nuclei(g: &Multigraph, nuclei: &[Nucleus], k: u32) -> BigInt {
    let total: BigInt = signed_census(g, nuclei)
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(m, &c)| BigInt::from(c) * Pow::pow(&BigInt::from(m), k))
        .sum();
    sign(g.vertex_count() + 1) * total
}

/// `els_k(G)` for `k` in `ks`.
pub fn elser_vector(g: &Multigraph, ks: impl IntoIterator<Item = u32>) -> Result<ElserVector> {
    require_elser_domain(g)?;
    let census = signed_census(g, &enumerate_nuclei(g)?);
    let outer = sign(g.vertex_count() + 1);
    let values = ks
        .into_iter()
        .map(|k| {
            let total: BigInt = census
                .iter()
                .enumerate()
                .map(|(m, &c)| BigInt::from(c) * Pow::pow(&BigInt::from(m), k))
                .sum();
            (k, &outer * total)
        })
        .collect();
    Ok(ElserVector { values })
}

/// Elser numbers of one graph keyed by `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElserVector {
    pub values: BTreeMap<u32, BigInt>,
}

impl Serialize for ElserVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut outer = serializer.serialize_map(Some(1))?;
        outer.serialize_entry("els", &DecimalMap(&self.values))?;
        outer.end()
    }
}

/// Serializes integer-keyed big integers as `{"k": "decimal"}`.
pub(crate) struct DecimalMap<'a>(pub &'a BTreeMap<u32, BigInt>);

impl Serialize for DecimalMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(&k.to_string(), &v.to_string())?;
        }
        map.end()
    }
}

/// `W(G, y) = sum_N (-1)^{|E(G)| - |E(N)|} y^{|V(N)|}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPolynomial {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Nonzero coefficients keyed by exponent.
    pub coefficients: BTreeMap<u32, BigInt>,
}

impl WPolynomial {
    pub fn evaluate(&self, y: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .map(|(&m, c)| c * Pow::pow(y, m))
            .sum()
    }
}

impl Serialize for WPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut outer = serializer.serialize_map(Some(1))?;
        outer.serialize_entry("w", &DecimalMap(&self.coefficients))?;
        outer.end()
    }
}

impl std::fmt::Display for WPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        for (i, (&m, c)) in self.coefficients.iter().rev().enumerate() {
            let negative = c < &BigInt::zero();
            let magnitude = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !magnitude.is_one() || m == 0 {
                write!(f, "{magnitude}")?;
            }
            match m {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{m}")?,
            }
        }
        Ok(())
    }
}

pub fn w_polynomial(g: &Multigraph) -> Result<WPolynomial> {
    let census = signed_census(g, &enumerate_nuclei(g)?);
    let flip = g.edge_count() % 2 == 1;
    let coefficients = census
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(m, &c)| (m as u32, BigInt::from(if flip { -c } else { c })))
        .collect();
    Ok(WPolynomial { vertex_count: g.vertex_count(), edge_count: g.edge_count(), coefficients })
}

/// Applies `(y d/dy)^k` to `W` at `y = 1` and normalizes by
/// `(-1)^{|V|+1+|E|}`, which recovers `els_k(G)` exactly.
pub fn elser_from_w(w: &WPolynomial, k: u32) -> BigInt {
    let raw: BigInt = w
        .coefficients
        .iter()
        .map(|(&m, c)| c * Pow::pow(&BigInt::from(m), k))
        .sum();
    sign(w.vertex_count + 1 + w.edge_count) * raw
}

/// `(-1)^{|V|+1} sum_N (-1)^{|E(N)|} f(|V(N)|)`.
pub fn generalized_elser(g: &Multigraph, f: impl Fn(u32) -> BigInt) -> Result<BigInt> {
    require_elser_domain(g)?;
    let census = signed_census(g, &enumerate_nuclei(g)?);
    let total: BigInt = census
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(m, &c)| BigInt::from(c) * f(m as u32))
        .sum();
    Ok(sign(g.vertex_count() + 1) * total)
}

fn binomial(n: u64, r: u64) -> BigInt {
    (0..r).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Elser number of a tree with `n` vertices and `leaves` leaves:
/// `sum_{i=0}^{n-leaves} C(n-leaves, i) Sur(k, leaves+i)`.
pub fn elser_tree_closed(n: u32, leaves: u32, k: u32) -> Result<BigInt> {
    if n < 2 || leaves < 2 || leaves > n || k < 1 {
        return Err(Error::Domain(format!(
            "tree closed form needs n >= 2, 2 <= leaves <= n, k >= 1 (got n={n}, leaves={leaves}, k={k})"
        )));
    }
    let mut sur = SurTable::new();
    let inner = (n - leaves) as u64;
    Ok((0..=inner)
        .map(|i| binomial(inner, i) * sur.get(k, leaves + i as u32))
        .sum())
}

/// `els_k(C_n) = n(n-1)(n^{k-1} - (n-1)^{k-1})`, evaluated as
/// `n * n^{k-1} * (n-1) - n * (n-1)^k`. `k = 0` falls back to direct summation.
pub fn elser_cycle_closed(n: u32, k: u32) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::Domain(format!("cycle closed form needs n >= 3 (got {n})")));
    }
    if n > MAX_NUCLEUS_EDGES as u32 && k == 0 {
        return Err(Error::TooLarge(format!("C_{n} at k = 0 needs direct summation")));
    }
    if k == 0 {
        return elser_brute(&Multigraph::cycle(n), 0);
    }
    let big_n = BigInt::from(n);
    let prev = BigInt::from(n - 1);
    Ok(&big_n * Pow::pow(&big_n, k - 1) * &prev - &big_n * Pow::pow(&prev, k))
}

/// `els_k(P_n) = n^k - 2(n-1)^k + (n-2)^k` for `n >= 3`.
pub fn elser_path_closed(n: u32, k: u32) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::Domain(format!("path closed form needs n >= 3 (got {n})")));
    }
    let p = |x: u32| Pow::pow(&BigInt::from(x), k);
    Ok(p(n) - BigInt::from(2) * p(n - 1) + p(n - 2))
}
