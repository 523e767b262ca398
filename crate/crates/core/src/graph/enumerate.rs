//! Exhaustive enumeration of small connected simple graphs.
//!
//! A simple graph on vertices `0..n` is encoded as an adjacency mask whose bit
//! `k` is the `k`-th vertex pair in colexicographic order
//! `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`.
//!
//! The canonical form of a graph is the lexicographically least bit string
//! `b_0 b_1 ... b_{M-1}` obtainable by relabeling vertices, where `b_k` is the
//! bit of pair `k`. It is computed by branch and bound over vertex
//! permutations: fixing the images of positions `0..=t` determines exactly the
//! first `t(t+1)/2` bits, so any branch whose prefix exceeds the best known
//! string is abandoned.

use std::collections::BTreeSet;

use super::{Multigraph, VertexId};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: u32 = 8;

pub fn pair_count(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

#[inline]
fn pair_index(i: u32, j: u32) -> u32 {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn adjacency_rows(n: u32, mask: u64) -> [u64; 8] {
    let mut rows = [0u64; 8];
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_index(i, j) & 1 == 1 {
                rows[i as usize] |= 1 << j;
                rows[j as usize] |= 1 << i;
            }
        }
    }
    rows
}

fn mask_connected(n: u32, mask: u64) -> bool {
    if n <= 1 {
        return true;
    }
    let rows = adjacency_rows(n, mask);
    let mut reached = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached == (1u64 << n) - 1
}

/// Simple graph on `0..n` with the given adjacency mask; edge ids follow pair order.
pub fn graph_from_mask(n: u32, mask: u64) -> Multigraph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_index(i, j) & 1 == 1 {
                edges.push((edges.len() as u32, i, j));
            }
        }
    }
    Multigraph::new(0..n, edges).expect("mask graph fits the id range")
}

/// Adjacency mask of a simple graph whose vertices are `0..n`.
pub fn mask_of(g: &Multigraph) -> Result<u64> {
    let n = g.vertex_count() as u32;
    if g.vertex_set() != super::VertexSet::range(n) || n > MAX_ENUMERATION_ORDER {
        return Err(Error::Domain("mask encoding needs vertices 0..n with n <= 8".into()));
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    Ok(g.edges().iter().fold(0u64, |m, e| m | 1 << pair_index(e.u, e.v)))
}

/// Canonical adjacency mask of the graph with adjacency mask `mask` on `0..n`.
pub fn canonical_mask(n: u32, mask: u64) -> u64 {
    let m = pair_count(n);
    if m == 0 {
        return mask;
    }
    let rows = adjacency_rows(n, mask);
    let mut search = Canon {
        n,
        m,
        rows,
        perm: [0; 8],
        best: None,
    };
    search.extend(0, 0, 0);
    let best = search.best.expect("at least one permutation");
    // bit string -> mask: string position k is pair k
    (0..m).fold(0u64, |acc, k| acc | ((best >> (m - 1 - k)) & 1) << k)
}

struct Canon {
    n: u32,
    m: u32,
    rows: [u64; 8],
    perm: [u8; 8],
    best: Option<u64>,
}

impl Canon {
    fn extend(&mut self, t: u32, used: u64, prefix: u64) {
        if t == self.n {
            if self.best.map_or(true, |b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let len = pair_count(t + 1);
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut s = prefix;
            for i in 0..t {
                let bit = self.rows[self.perm[i as usize] as usize] >> v & 1;
                s = s << 1 | bit;
            }
            if let Some(best) = self.best {
                if s > best >> (self.m - len) {
                    continue;
                }
            }
            self.perm[t as usize] = v as u8;
            self.extend(t + 1, used | 1 << v, s);
        }
    }
}

/// Labeled connected simple graphs on `0..n`, by adjacency mask ascending.
#[derive(Clone, Debug)]
pub struct LabeledConnectedGraphs {
    n: u32,
    next: u64,
    end: u64,
}

impl LabeledConnectedGraphs {
    pub fn new(n: u32) -> Result<Self> {
        check_order(n)?;
        Ok(LabeledConnectedGraphs { n, next: 0, end: 1u64 << pair_count(n) })
    }

    /// Resumes the stream at the first connected graph with mask `>= start`.
    pub fn starting_at(n: u32, start: u64) -> Result<Self> {
        let mut it = Self::new(n)?;
        it.next = start.min(it.end);
        Ok(it)
    }

    /// Mask the next call to `next` will examine first.
    pub fn position(&self) -> u64 {
        self.next
    }
}

impl Iterator for LabeledConnectedGraphs {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if mask_connected(self.n, mask) {
                return Some(graph_from_mask(self.n, mask));
            }
        }
        None
    }
}

fn check_order(n: u32) -> Result<()> {
    if (1..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::Domain(format!("graph order {n} outside 1..=8")))
    }
}

/// Canonical masks of all connected simple graphs on `n` vertices, ascending.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// the classes on `n` vertices are obtained by attaching a new vertex to the
/// classes on `n - 1` vertices in every nonempty way.
pub fn connected_class_masks(n: u32) -> Result<Vec<u64>> {
    check_order(n)?;
    let mut classes: Vec<u64> = vec![0];
    for order in 2..=n {
        let base = order - 1;
        let mut next = BTreeSet::new();
        for &mask in &classes {
            for nbrs in 1u64..(1 << base) {
                let mut extended = mask;
                for i in 0..base {
                    if nbrs >> i & 1 == 1 {
                        extended |= 1 << pair_index(i, base);
                    }
                }
                next.insert(canonical_mask(order, extended));
            }
        }
        classes = next.into_iter().collect();
    }
    Ok(classes)
}

/// All connected simple graphs on exactly `n` vertices: every labeled graph
/// when `dedup` is false, else one canonical representative per isomorphism
/// class. Both streams are ordered by adjacency mask.
pub fn connected_graphs(n: u32, dedup: bool) -> Result<Box<dyn Iterator<Item = Multigraph> + Send>> {
    if dedup {
        let masks = connected_class_masks(n)?;
        Ok(Box::new(masks.into_iter().map(move |m| graph_from_mask(n, m))))
    } else {
        Ok(Box::new(LabeledConnectedGraphs::new(n)?))
    }
}

/// Relabels a simple graph on `0..n` by the given vertex permutation.
pub fn permute_mask(n: u32, mask: u64, perm: &[VertexId]) -> u64 {
    let mut out = 0u64;
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_index(i, j) & 1 == 1 {
                let (a, b) = (perm[i as usize], perm[j as usize]);
                out |= 1 << pair_index(a.min(b), a.max(b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools_free::permutations;

    // Small permutation generator kept local to the tests so the oracle does
    // not share code with the branch-and-bound search.
    mod itertools_free {
        pub fn permutations(n: u32) -> Vec<Vec<u32>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
    }

    fn bit_string(n: u32, mask: u64) -> Vec<u64> {
        (0..pair_count(n)).map(|k| mask >> k & 1).collect()
    }

    fn brute_canonical(n: u32, mask: u64) -> u64 {
        permutations(n)
            .iter()
            .map(|p| permute_mask(n, mask, p))
            .min_by(|a, b| bit_string(n, *a).cmp(&bit_string(n, *b)))
            .unwrap()
    }

    fn brute_classes(n: u32) -> usize {
        let mut canon = BTreeSet::new();
        for mask in 0..1u64 << pair_count(n) {
            if mask_connected(n, mask) {
                canon.insert(brute_canonical(n, mask));
            }
        }
        canon.len()
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(connected_graphs(2, false).unwrap().count(), 1);
        // of the 8 labeled graphs on 3 vertices, the 3 paths and the triangle
        let three: Vec<_> = connected_graphs(3, false).unwrap().collect();
        assert_eq!(three.len(), 4);
        assert_eq!(connected_graphs(4, false).unwrap().count(), 38);
        assert_eq!(connected_graphs(1, false).unwrap().count(), 1);
    }

    #[test]
    fn class_counts_match_brute_force() {
        for n in 1..=5 {
            let fast = connected_graphs(n, true).unwrap().count();
            assert_eq!(fast, brute_classes(n), "n = {n}");
        }
        assert_eq!(connected_graphs(4, true).unwrap().count(), 6);
        assert_eq!(connected_graphs(5, true).unwrap().count(), 21);
        assert_eq!(connected_graphs(6, true).unwrap().count(), 112);
    }

    #[test]
    fn canonical_form_matches_exhaustive_minimum() {
        for n in 2..=5 {
            for mask in (0..1u64 << pair_count(n)).step_by(7) {
                assert_eq!(canonical_mask(n, mask), brute_canonical(n, mask), "n={n} mask={mask}");
            }
        }
    }

    #[test]
    fn canonical_form_is_invariant_under_relabeling() {
        let n = 6;
        let mask = 0b101_1011_0110_1101u64;
        let c = canonical_mask(n, mask);
        for p in permutations(n).iter().step_by(37) {
            assert_eq!(canonical_mask(n, permute_mask(n, mask, p)), c);
        }
    }

    #[test]
    fn stream_restarts_from_position() {
        let all: Vec<_> = LabeledConnectedGraphs::new(4).unwrap().collect();
        let mut it = LabeledConnectedGraphs::new(4).unwrap();
        for _ in 0..10 {
            it.next();
        }
        let resumed: Vec<_> = LabeledConnectedGraphs::starting_at(4, it.position()).unwrap().collect();
        assert_eq!(resumed, all[10..].to_vec());
    }

    #[test]
    fn order_out_of_range() {
        assert!(connected_graphs(0, false).is_err());
        assert!(connected_graphs(9, true).is_err());
    }

    #[test]
    fn mask_round_trip() {
        for g in connected_graphs(4, false).unwrap() {
            assert_eq!(graph_from_mask(4, mask_of(&g).unwrap()), g);
        }
    }
}
