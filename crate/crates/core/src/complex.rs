//! U-nucleus complexes, reduced Euler characteristics and homology ranks.
//!
//! Faces are edge-id sets. The complex of `cK_2` at `U = {}` is not simplicial:
//! its two top cells share a vertex set. It is kept as a closed-form special
//! case ([`ComplexKind::SpherePair`]).

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{subsets, EdgeSet, Multigraph, VertexSet};
use crate::nucleus::{enumerate_nuclei, Nucleus, MAX_NUCLEUS_EDGES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    /// Downward-closed face family, sorted by size then mask.
    Simplicial(Vec<EdgeSet>),
    /// All proper subsets of a `c`-set once, plus two distinct top cells.
    SpherePair(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NucleusComplex {
    pub ground: EdgeSet,
    pub kind: ComplexKind,
}

fn face_order(a: &EdgeSet, b: &EdgeSet) -> std::cmp::Ordering {
    (a.len(), a.bits()).cmp(&(b.len(), b.bits()))
}

impl NucleusComplex {
    /// Simplicial complex from an arbitrary face list; sorts and deduplicates
    /// but does not close downward.
    pub fn simplicial(ground: EdgeSet, faces: impl IntoIterator<Item = EdgeSet>) -> Self {
        let mut faces: Vec<EdgeSet> = faces.into_iter().collect();
        faces.sort_by(face_order);
        faces.dedup();
        NucleusComplex { ground, kind: ComplexKind::Simplicial(faces) }
    }

    /// Faces of a simplicial complex; `None` for a sphere pair.
    pub fn faces(&self) -> Option<&[EdgeSet]> {
        match &self.kind {
            ComplexKind::Simplicial(f) => Some(f),
            ComplexKind::SpherePair(_) => None,
        }
    }

    pub fn face_count(&self) -> usize {
        match &self.kind {
            ComplexKind::Simplicial(f) => f.len(),
            ComplexKind::SpherePair(c) => (1usize << c) + 1,
        }
    }

    pub fn contains(&self, face: EdgeSet) -> bool {
        match &self.kind {
            ComplexKind::Simplicial(f) => f.binary_search_by(|x| face_order(x, &face)).is_ok(),
            ComplexKind::SpherePair(_) => face.is_subset(self.ground),
        }
    }

    /// Whether every face of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &NucleusComplex) -> bool {
        match self.faces() {
            Some(f) => f.iter().all(|&x| other.contains(x)),
            None => self == other,
        }
    }

    /// Whether the family is closed under taking subsets and contains `{}`.
    pub fn is_downward_closed(&self) -> bool {
        match self.faces() {
            None => true,
            Some(f) => {
                self.contains(EdgeSet::EMPTY)
                    && f.iter().all(|&x| {
                        x.is_subset(self.ground) && x.iter().all(|e| self.contains(x.without(e)))
                    })
            }
        }
    }

    /// Whether `apex` is a cone point: adding it to any face gives a face.
    pub fn is_cone_over(&self, apex: u32) -> bool {
        match self.faces() {
            Some(f) => f.iter().all(|&x| self.contains(x.with(apex))),
            None => false,
        }
    }

    pub fn maximal_faces(&self) -> Vec<EdgeSet> {
        match self.faces() {
            Some(f) => f
                .iter()
                .copied()
                .filter(|&x| self.ground.difference(x).iter().all(|e| !self.contains(x.with(e))))
                .collect(),
            None => Vec::new(),
        }
    }

    /// Top dimension; `-1` for the complex `{{}}`.
    pub fn dimension(&self) -> i32 {
        match &self.kind {
            ComplexKind::Simplicial(f) => f.last().map_or(-1, |x| x.len() as i32 - 1),
            ComplexKind::SpherePair(c) => *c as i32 - 1,
        }
    }
}

impl Serialize for NucleusComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("ground", &self.ground)?;
        match &self.kind {
            ComplexKind::Simplicial(faces) => {
                map.serialize_entry("kind", "simplicial")?;
                map.serialize_entry("faces", faces)?;
            }
            ComplexKind::SpherePair(c) => {
                map.serialize_entry("kind", "sphere_pair")?;
                map.serialize_entry("c", c)?;
            }
        }
        map.end()
    }
}

fn check_subset(g: &Multigraph, u: VertexSet) -> Result<()> {
    match u.difference(g.vertex_set()).first() {
        Some(x) => Err(Error::UnknownVertex(x)),
        None => Ok(()),
    }
}

/// `Delta^G_U`: complements of the nuclei whose vertex set contains `U`.
pub fn build_complex(g: &Multigraph, u: VertexSet) -> Result<NucleusComplex> {
    g.require_connected()?;
    check_subset(g, u)?;
    let nuclei = enumerate_nuclei(g)?;
    Ok(complex_from_nuclei(g, &nuclei, u))
}

/// Like [`build_complex`], reusing a nucleus list computed for `g`.
pub fn complex_from_nuclei(g: &Multigraph, nuclei: &[Nucleus], u: VertexSet) -> NucleusComplex {
    let ground = g.edge_set();
    if u.is_empty() {
        if let Some(c) = g.parallel_k2_multiplicity() {
            return NucleusComplex { ground, kind: ComplexKind::SpherePair(c as u32) };
        }
    }
    NucleusComplex::simplicial(
        ground,
        nuclei
            .iter()
            .filter(|n| u.is_subset(n.vertices))
            .map(|n| ground.difference(n.edges)),
    )
}

/// `chi(Delta^G_U)` straight from a nucleus list, without building faces.
pub fn euler_from_nuclei(g: &Multigraph, nuclei: &[Nucleus], u: VertexSet) -> i64 {
    if u.is_empty() {
        if let Some(c) = g.parallel_k2_multiplicity() {
            return if c % 2 == 1 { 1 } else { -1 };
        }
    }
    let m = g.edge_count();
    nuclei
        .iter()
        .filter(|n| u.is_subset(n.vertices))
        .map(|n| if (m - n.edges.len()) % 2 == 0 { -1 } else { 1 })
        .sum()
}

/// `sum over faces of (-1)^dim`, with the empty face in dimension -1.
pub fn euler_char(complex: &NucleusComplex) -> i64 {
    match &complex.kind {
        ComplexKind::Simplicial(faces) => faces
            .iter()
            .map(|f| if f.len() % 2 == 0 { -1 } else { 1 })
            .sum(),
        ComplexKind::SpherePair(c) => {
            if c % 2 == 1 {
                1
            } else {
                -1
            }
        }
    }
}

/// Ranks of reduced rational homology, nonzero entries only.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub ranks: BTreeMap<i32, u64>,
}

impl HomologyProfile {
    pub fn rank(&self, dim: i32) -> u64 {
        self.ranks.get(&dim).copied().unwrap_or(0)
    }

    /// `sum_k (-1)^k rank_k`.
    pub fn euler_poincare(&self) -> i64 {
        self.ranks
            .iter()
            .map(|(&d, &r)| if d.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// The single dimension carrying homology, if exactly one does.
    pub fn concentrated_in(&self) -> Option<i32> {
        match self.ranks.len() {
            1 => self.ranks.keys().next().copied(),
            _ => None,
        }
    }
}

/// How boundary ranks are computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RankMethod {
    /// Ranks mod a large prime. The result is exact over the rationals when
    /// it is concentrated in one dimension (mod-p ranks bound rational ranks
    /// from below, Betti numbers from above, and the Euler characteristic is
    /// the same); otherwise falls back to [`RankMethod::Exact`].
    #[default]
    Certified,
    /// Fraction-free elimination over the integers.
    Exact,
}

/// Face-count cap for homology computations.
pub const MAX_HOMOLOGY_FACES: usize = 1 << 20;

pub fn homology_ranks(complex: &NucleusComplex) -> Result<HomologyProfile> {
    homology_ranks_with(complex, RankMethod::Certified)
}

pub fn homology_ranks_with(complex: &NucleusComplex, method: RankMethod) -> Result<HomologyProfile> {
    let faces = match &complex.kind {
        ComplexKind::SpherePair(c) => {
            return Ok(HomologyProfile { ranks: BTreeMap::from([(*c as i32 - 1, 1)]) });
        }
        ComplexKind::Simplicial(f) => f,
    };
    if faces.len() > MAX_HOMOLOGY_FACES {
        return Err(Error::TooLarge(format!(
            "{} faces; homology is capped at {MAX_HOMOLOGY_FACES}",
            faces.len()
        )));
    }
    let chain = ChainComplex::new(faces);
    match method {
        RankMethod::Exact => Ok(chain.betti(|d| chain.rank_exact(d))),
        RankMethod::Certified => {
            let modular = chain.betti(|d| chain.rank_mod_p(d));
            if modular.ranks.len() <= 1 {
                Ok(modular)
            } else {
                Ok(chain.betti(|d| chain.rank_exact(d)))
            }
        }
    }
}

/// Faces grouped by size; `levels[s]` holds the faces with `s` elements.
struct ChainComplex {
    levels: Vec<Vec<EdgeSet>>,
    index: Vec<HashMap<EdgeSet, u32>>,
}

impl ChainComplex {
    fn new(faces: &[EdgeSet]) -> Self {
        let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut levels = vec![Vec::new(); top + 1];
        for &f in faces {
            levels[f.len()].push(f);
        }
        let index = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, &f)| (f, i as u32)).collect())
            .collect();
        ChainComplex { levels, index }
    }

    /// Column of the boundary map from faces of size `s` to size `s - 1`.
    fn boundary(&self, s: usize, face: EdgeSet) -> Vec<(u32, bool)> {
        let mut col: Vec<(u32, bool)> = face
            .iter()
            .enumerate()
            .map(|(pos, e)| (self.index[s - 1][&face.without(e)], pos % 2 == 1))
            .collect();
        col.sort_unstable_by_key(|&(r, _)| r);
        col
    }

    /// Reduced Betti numbers from `rank(s)`, the rank of the boundary map out
    /// of faces of size `s` (for `s >= 1`).
    fn betti(&self, rank: impl Fn(usize) -> usize) -> HomologyProfile {
        let n = self.levels.len();
        let ranks: Vec<usize> = (0..=n).map(|s| if s == 0 || s >= n { 0 } else { rank(s) }).collect();
        let mut out = BTreeMap::new();
        for s in 0..n {
            let b = self.levels[s].len() - ranks[s] - ranks[s + 1];
            if b > 0 {
                out.insert(s as i32 - 1, b as u64);
            }
        }
        HomologyProfile { ranks: out }
    }

    fn rank_mod_p(&self, s: usize) -> usize {
        const P: u64 = (1 << 31) - 1;
        let inv = |a: u64| pow_mod(a, P - 2, P);
        let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
        for &face in &self.levels[s] {
            let mut col: Vec<(u32, u64)> = self
                .boundary(s, face)
                .into_iter()
                .map(|(r, neg)| (r, if neg { P - 1 } else { 1 }))
                .collect();
            while let Some(&(low, val)) = col.last() {
                match pivots.get(&low) {
                    Some(other) => {
                        let other_low = other.last().unwrap().1;
                        let factor = val * inv(other_low) % P;
                        col = axpy_mod(&col, other, P - factor, P);
                    }
                    None => {
                        pivots.insert(low, col);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    fn rank_exact(&self, s: usize) -> usize {
        let mut pivots: HashMap<u32, Vec<(u32, BigInt)>> = HashMap::new();
        for &face in &self.levels[s] {
            let mut col: Vec<(u32, BigInt)> = self
                .boundary(s, face)
                .into_iter()
                .map(|(r, neg)| (r, BigInt::from(if neg { -1 } else { 1 })))
                .collect();
            while let Some((low, val)) = col.last().cloned() {
                match pivots.get(&low) {
                    Some(other) => {
                        let other_low = &other.last().unwrap().1;
                        // other_low * col - val * other cancels the entry at `low`
                        let g = val.gcd(other_low);
                        col = combine_exact(&col, &(other_low / &g), other, &(-(val / &g)));
                    }
                    None => {
                        pivots.insert(low, col);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// `a + factor * b` over sorted sparse vectors mod `p`.
fn axpy_mod(a: &[(u32, u64)], b: &[(u32, u64)], factor: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, factor * b[j].1 % p));
            j += 1;
        } else {
            let v = (a[i].1 + factor * b[j].1) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `x * a + y * b`, divided by the gcd of its entries.
fn combine_exact(a: &[(u32, BigInt)], x: &BigInt, b: &[(u32, BigInt)], y: &BigInt) -> Vec<(u32, BigInt)> {
    let mut out: Vec<(u32, BigInt)> = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, x * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, y * &b[j].1));
            j += 1;
        } else {
            let v = x * &a[i].1 + y * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    let content = out.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if !content.is_zero() && content.abs() != BigInt::from(1) {
        for (_, v) in &mut out {
            *v /= &content;
        }
    }
    out
}

/// Join of two simplicial complexes on disjoint ground sets.
pub fn join_complex(a: &NucleusComplex, b: &NucleusComplex) -> Result<NucleusComplex> {
    let (Some(fa), Some(fb)) = (a.faces(), b.faces()) else {
        return Err(Error::Incompatible("joins need simplicial operands".into()));
    };
    if !a.ground.is_disjoint(b.ground) {
        return Err(Error::Incompatible(format!(
            "ground sets {} and {} overlap",
            a.ground, b.ground
        )));
    }
    Ok(NucleusComplex::simplicial(
        a.ground.union(b.ground),
        fa.iter().flat_map(|&x| fb.iter().map(move |&y| x.union(y))),
    ))
}

/// Complex of edge sets whose removal leaves `G` connected and spanning.
pub fn cographic_complex(g: &Multigraph) -> Result<NucleusComplex> {
    g.require_connected()?;
    if g.edge_count() > MAX_NUCLEUS_EDGES {
        return Err(Error::TooLarge(format!("{} edges", g.edge_count())));
    }
    let ground = g.edge_set();
    let vertices = g.vertex_set();
    Ok(NucleusComplex::simplicial(
        ground,
        subsets(ground.bits())
            .map(EdgeSet)
            .filter(|&a| g.component_count_of(vertices, ground.difference(a)) == 1),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connected_graphs, parse_graph};

    fn k3() -> Multigraph {
        parse_graph("0 1\n1 2\n0 2").unwrap()
    }

    fn vs(ids: &[u32]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn triangle_complexes() {
        let empty = build_complex(&k3(), VertexSet::EMPTY).unwrap();
        assert_eq!(empty.face_count(), 7);
        assert_eq!(empty.dimension(), 1);
        let chis: Vec<i64> = [vs(&[]), vs(&[1]), vs(&[1, 2]), vs(&[0, 1, 2])]
            .iter()
            .map(|&u| euler_char(&build_complex(&k3(), u).unwrap()))
            .collect();
        assert_eq!(chis, vec![-1, 0, 1, 2]);
        assert_eq!(homology_ranks(&empty).unwrap().ranks, BTreeMap::from([(1, 1)]));
        let full = build_complex(&k3(), vs(&[0, 1, 2])).unwrap();
        assert_eq!(full, cographic_complex(&k3()).unwrap());
    }

    #[test]
    fn bundle_complexes() {
        for c in 1..=5u32 {
            let g = Multigraph::parallel_k2(c);
            let sign = |e: u32| if e % 2 == 0 { 1 } else { -1 };
            let none = build_complex(&g, VertexSet::EMPTY).unwrap();
            assert_eq!(none.kind, ComplexKind::SpherePair(c));
            assert_eq!(none.face_count(), (1 << c) + 1);
            assert_eq!(euler_char(&none), sign(c - 1));
            let one = build_complex(&g, vs(&[0])).unwrap();
            assert_eq!(one.maximal_faces(), vec![g.edge_set()]);
            assert_eq!(euler_char(&one), 0);
            assert_eq!(euler_char(&build_complex(&g, vs(&[1])).unwrap()), 0);
            let both = build_complex(&g, vs(&[0, 1])).unwrap();
            assert_eq!(euler_char(&both), sign(c));
        }
        let sphere = build_complex(&Multigraph::parallel_k2(3), VertexSet::EMPTY).unwrap();
        assert_eq!(homology_ranks(&sphere).unwrap().ranks, BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn loops_give_cones() {
        let g = parse_graph("0 1\n1 2\n2 0\n1 1").unwrap();
        for u in subsets(g.vertex_set().bits()).map(VertexSet) {
            let c = build_complex(&g, u).unwrap();
            assert!(c.is_cone_over(3));
            assert!(c.maximal_faces().iter().all(|f| f.contains(3)));
            assert_eq!(euler_char(&c), 0);
            assert!(homology_ranks(&c).unwrap().ranks.is_empty());
        }
    }

    #[test]
    fn rejects_foreign_vertices() {
        assert_eq!(build_complex(&k3(), vs(&[5])), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn empty_complex_homology() {
        let c = build_complex(&Multigraph::path(3), vs(&[0, 2])).unwrap();
        assert_eq!(c.faces().unwrap(), &[EdgeSet::EMPTY]);
        assert_eq!(homology_ranks(&c).unwrap().ranks, BTreeMap::from([(-1, 1)]));
        assert_eq!(euler_char(&c), -1);
    }

    #[test]
    fn euler_shortcut_matches_faces() {
        for g in connected_graphs(4, false).unwrap().chain([Multigraph::parallel_k2(3)]) {
            let nuclei = enumerate_nuclei(&g).unwrap();
            for u in subsets(g.vertex_set().bits()).map(VertexSet) {
                let c = complex_from_nuclei(&g, &nuclei, u);
                assert_eq!(euler_from_nuclei(&g, &nuclei, u), euler_char(&c));
            }
        }
    }

    #[test]
    fn joins() {
        let point = |e: u32| NucleusComplex::simplicial(EdgeSet::singleton(e), [EdgeSet::EMPTY, EdgeSet::singleton(e)]);
        let edge = join_complex(&point(0), &point(1)).unwrap();
        assert_eq!(edge.face_count(), 4);
        assert_eq!(euler_char(&edge), 0);
        let nothing = NucleusComplex::simplicial(EdgeSet::EMPTY, [EdgeSet::EMPTY]);
        let tri = build_complex(&k3(), VertexSet::EMPTY).unwrap();
        assert_eq!(join_complex(&nothing, &tri).unwrap(), tri);
        assert!(join_complex(&tri, &tri).is_err());
        let bundle = build_complex(&Multigraph::parallel_k2(2), VertexSet::EMPTY).unwrap();
        assert!(join_complex(&bundle, &nothing).is_err());
    }

    #[test]
    fn cographic_examples() {
        assert_eq!(cographic_complex(&Multigraph::path(4)).unwrap().face_count(), 1);
        assert_eq!(cographic_complex(&Multigraph::cycle(4)).unwrap().face_count(), 5);
    }

    #[test]
    fn json_shape() {
        let c = build_complex(&Multigraph::path(2), vs(&[0, 1])).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"ground":[0],"kind":"simplicial","faces":[[]]}"#);
        let s = build_complex(&Multigraph::parallel_k2(2), VertexSet::EMPTY).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"ground":[0,1],"kind":"sphere_pair","c":2}"#);
    }

    #[test]
    fn certified_ranks_match_exact_ranks() {
        for n in 3..=5 {
            for g in connected_graphs(n, true).unwrap() {
                for u in subsets(g.vertex_set().bits()).map(VertexSet) {
                    let c = build_complex(&g, u).unwrap();
                    let fast = homology_ranks(&c).unwrap();
                    let exact = homology_ranks_with(&c, RankMethod::Exact).unwrap();
                    assert_eq!(fast, exact);
                    assert_eq!(exact.euler_poincare(), euler_char(&c));
                }
            }
        }
    }

    #[test]
    fn exact_ranks_see_torsion_free_rank() {
        // Two disjoint points give reduced H_0 of rank 1; the three-point
        // complex two.
        let three = NucleusComplex::simplicial(EdgeSet(0b111), [EdgeSet(0), EdgeSet(1), EdgeSet(2), EdgeSet(4)]);
        let h = homology_ranks_with(&three, RankMethod::Exact).unwrap();
        assert_eq!(h.ranks, BTreeMap::from([(0, 2)]));
        assert_eq!(homology_ranks(&three).unwrap(), h);
    }

    #[test]
    fn mixed_homology_falls_back_to_exact() {
        // a circle plus an isolated point: H_0 and H_1 both rank 1
        let faces = [0u64, 1, 2, 4, 8, 3, 6, 5].map(EdgeSet);
        let c = NucleusComplex::simplicial(EdgeSet(0b1111), faces);
        let h = homology_ranks(&c).unwrap();
        assert_eq!(h.ranks, BTreeMap::from([(0, 1), (1, 1)]));
        assert_eq!(h.euler_poincare(), euler_char(&c));
    }
}
