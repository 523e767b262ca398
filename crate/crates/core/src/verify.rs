//! Per-graph verification reports, exhaustive sweeps over graph families and
//! seeded random instances.
//!
//! Every check is a family of instances (a `k`, a vertex subset, an edge, a
//! cut-vertex, ...). A failing instance is reported as a [`Witness`] that
//! [`replay`] re-evaluates from scratch.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{
    cographic_complex, complex_from_nuclei, euler_char, euler_from_nuclei, homology_ranks,
    join_complex,
};
use crate::error::{Error, Result};
use crate::graph::{
    connected_graphs, cut_analysis, spanning_tree, subsets, EdgeId, EdgeSet, Multigraph, VertexId,
    VertexSet,
};
use crate::nucleus::{
    elser_brute, elser_cycle_closed, elser_from_nuclei, elser_from_w, elser_path_closed, elser_sum,
    elser_tree_closed, enumerate_nuclei, w_polynomial, Nucleus,
};
use crate::recurrence::{build_rdct, eligible_edges, els0_from_rdct, elser_via_euler_with, EulerDc, MinorJson, SurTable};
use crate::structure::{
    check_ear_decomposition, ear_decomposition, euler_vanishes, minor, predict_sign_profile, realize_tree_minor,
    replay_moves, split_at_cut_vertex,
};

/// Largest `k` a verification run accepts.
pub const MAX_VERIFY_K: u32 = 8;

/// Graphs with more edges than this get a lighter recurrence spot-check (one
/// edge) and skip the face-level comparisons.
const FULL_CHECK_EDGES: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    PipelineAgreement,
    ClosedForm,
    SignTrichotomy,
    Threshold,
    Monotonicity,
    Recurrence,
    CutVertexContainment,
    JoinFactorization,
    VanishingCriterion,
    Cographic,
    RdctLeaves,
    EarDecomposition,
    TreeMinor,
    ParallelInvariance,
    LoopVanishing,
    CycleBound,
    FixturePin,
    SwitchInvariance,
    EulerPoincare,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::PipelineAgreement => "pipeline_agreement",
            CheckKind::ClosedForm => "closed_form",
            CheckKind::SignTrichotomy => "sign_trichotomy",
            CheckKind::Threshold => "threshold",
            CheckKind::Monotonicity => "monotonicity",
            CheckKind::Recurrence => "recurrence",
            CheckKind::CutVertexContainment => "cut_vertex_containment",
            CheckKind::JoinFactorization => "join_factorization",
            CheckKind::VanishingCriterion => "vanishing_criterion",
            CheckKind::Cographic => "cographic",
            CheckKind::RdctLeaves => "rdct_leaves",
            CheckKind::EarDecomposition => "ear_decomposition",
            CheckKind::TreeMinor => "tree_minor",
            CheckKind::ParallelInvariance => "parallel_invariance",
            CheckKind::LoopVanishing => "loop_vanishing",
            CheckKind::CycleBound => "cycle_bound",
            CheckKind::FixturePin => "fixture_pin",
            CheckKind::SwitchInvariance => "switch_invariance",
            CheckKind::EulerPoincare => "euler_poincare",
        }
    }

    /// The property being checked, in one line.
    pub fn statement(self) -> &'static str {
        match self {
            CheckKind::PipelineAgreement => {
                "els_k from nucleus enumeration, from the Euler-characteristic expansion and from W(G,y) agree"
            }
            CheckKind::ClosedForm => "els_k of a tree or cycle matches its closed form",
            CheckKind::SignTrichotomy => "els_0 <= 0, els_1 = 0 and els_k >= 0 for k >= 2",
            CheckKind::Threshold => {
                "els_0 < 0 iff 2-connected; for k >= 2, els_k != 0 iff k >= 2 (2-connected) or k >= leaf blocks"
            }
            CheckKind::Monotonicity => {
                "els_k(G) >= els_k(G/e) + els_k(G\\e) for non-loop non-cut e, with equality at k = 0"
            }
            CheckKind::Recurrence => "chi(Delta^G_U) = chi(Delta^{G/e}_{U/e}) - chi(Delta^{G\\e}_U)",
            CheckKind::CutVertexContainment => "every nucleus contains every cut-vertex",
            CheckKind::JoinFactorization => {
                "at a cut-vertex v in U, Delta^G_U is the join of the two sides and chi factors with a minus sign"
            }
            CheckKind::VanishingCriterion => {
                "chi(Delta^G_U) = 0 iff some block meets U together with the cut-vertices in exactly one vertex"
            }
            CheckKind::Cographic => "Delta^G_{V(G)} is the cographic matroid complex",
            CheckKind::RdctLeaves => {
                "every tree leaf of the RDCT has |E|-|V|+1 deletions and els_0 = -(number of K_2 leaves)"
            }
            CheckKind::EarDecomposition => "the constructed ear decomposition satisfies all four ear invariants",
            CheckKind::TreeMinor => "every tree minor G/C\\D is reachable without touching loops or cut-edges",
            CheckKind::ParallelInvariance => "els_k(G) = els_k(Dep(G))",
            CheckKind::LoopVanishing => "els_k vanishes on graphs with a loop",
            CheckKind::CycleBound => "els_k(C_n) >= sum of els_k(P_i) over paths with 2..n vertices",
            CheckKind::FixturePin => "els_2(G1) = 42 and els_2(G2) = 44",
            CheckKind::SwitchInvariance => "els_k(G3) = els_k(G4) for k >= 2",
            CheckKind::EulerPoincare => "alternating sum of homology ranks equals the reduced Euler characteristic",
        }
    }
}

/// Parameters of one check instance; unused fields stay `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, rename = "U", skip_serializing_if = "Option::is_none")]
    pub u: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<EdgeId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<VertexId>,
    /// Fixture name, for the fixture checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl Instance {
    fn k(k: u32) -> Self {
        Instance { k: Some(k), ..Default::default() }
    }

    fn u(u: VertexSet) -> Self {
        Instance { u: Some(u), ..Default::default() }
    }
}

/// Everything needed to re-run a failed check instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: CheckKind,
    pub graph: MinorJson,
    #[serde(flatten)]
    pub instance: Instance,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: CheckKind,
    pub statement: &'static str,
    pub passed: bool,
    /// Instances evaluated; a failing check stops at its first failure.
    pub instances: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub graph: MinorJson,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn instances(&self) -> u64 {
        self.checks.iter().map(|c| c.instances).sum()
    }

    pub fn check(&self, kind: CheckKind) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check == kind)
    }

    /// Plain-text table, one row per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status}  {:<24} {:>7}  {}", c.check.name(), c.instances, c.statement);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "      witness: {}", serde_json::to_string(w).unwrap_or_default());
            }
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} instances, {} failed", self.checks.len(), self.instances(), failed);
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed {ms} ms");
        }
        out
    }
}

/// Nuclei of the two minors at an edge.
struct Minors {
    contracted: Multigraph,
    contracted_nuclei: Vec<Nucleus>,
    deleted: Multigraph,
    deleted_nuclei: Vec<Nucleus>,
}

/// Lazily computed data shared by the instances of one graph.
struct Context<'a> {
    g: &'a Multigraph,
    nuclei: Option<Vec<Nucleus>>,
    els: BTreeMap<u32, BigInt>,
    dc: EulerDc,
    sur: SurTable,
    minors: HashMap<EdgeId, Minors>,
    splits: HashMap<VertexId, (Multigraph, Vec<Nucleus>, Multigraph, Vec<Nucleus>)>,
}

type Outcome = Result<Option<String>>;

fn fail(detail: String) -> Outcome {
    Ok(Some(detail))
}

fn ok() -> Outcome {
    Ok(None)
}

impl<'a> Context<'a> {
    fn new(g: &'a Multigraph) -> Self {
        Context {
            g,
            nuclei: None,
            els: BTreeMap::new(),
            dc: EulerDc::new(),
            sur: SurTable::new(),
            minors: HashMap::new(),
            splits: HashMap::new(),
        }
    }

    fn nuclei(&mut self) -> Result<&[Nucleus]> {
        if self.nuclei.is_none() {
            self.nuclei = Some(enumerate_nuclei(self.g)?);
        }
        Ok(self.nuclei.as_deref().unwrap())
    }

    /// `els_k(G)` by nucleus enumeration.
    fn els(&mut self, k: u32) -> Result<BigInt> {
        if let Some(v) = self.els.get(&k) {
            return Ok(v.clone());
        }
        let g = self.g;
        let v = elser_from_nuclei(g, self.nuclei()?, k);
        self.els.insert(k, v.clone());
        Ok(v)
    }

    fn minors(&mut self, e: EdgeId) -> Result<&Minors> {
        if !self.minors.contains_key(&e) {
            let (contracted, _) = self.g.contract_edge(e, VertexSet::EMPTY)?;
            let deleted = self.g.delete_edge(e)?;
            let m = Minors {
                contracted_nuclei: enumerate_nuclei(&contracted)?,
                deleted_nuclei: enumerate_nuclei(&deleted)?,
                contracted,
                deleted,
            };
            self.minors.insert(e, m);
        }
        Ok(&self.minors[&e])
    }

    fn split(&mut self, v: VertexId) -> Result<&(Multigraph, Vec<Nucleus>, Multigraph, Vec<Nucleus>)> {
        if !self.splits.contains_key(&v) {
            let (g1, g2) = split_at_cut_vertex(self.g, v)?;
            let n1 = enumerate_nuclei(&g1)?;
            let n2 = enumerate_nuclei(&g2)?;
            self.splits.insert(v, (g1, n1, g2, n2));
        }
        Ok(&self.splits[&v])
    }
}

fn vertex_subsets(g: &Multigraph) -> impl Iterator<Item = VertexSet> {
    subsets(g.vertex_set().bits()).map(VertexSet)
}

fn sign_of(x: &BigInt) -> std::cmp::Ordering {
    x.cmp(&BigInt::zero())
}

/// Instances of `kind` that apply to `g`, in evaluation order.
fn instances(kind: CheckKind, g: &Multigraph, kmax: u32) -> Result<Vec<Instance>> {
    let ks = || (0..=kmax).map(Instance::k).collect::<Vec<_>>();
    let loopy = g.has_loop();
    let simple = g.is_simple();
    let small = g.edge_count() <= FULL_CHECK_EDGES;
    Ok(match kind {
        CheckKind::PipelineAgreement => ks(),
        CheckKind::ClosedForm if simple && g.is_cycle() => ks(),
        CheckKind::ClosedForm if simple && g.is_tree() => (1..=kmax).map(Instance::k).collect(),
        CheckKind::SignTrichotomy | CheckKind::Threshold if !loopy => ks(),
        CheckKind::Monotonicity => {
            let edges = eligible_edges(g);
            edges
                .iter()
                .flat_map(|e| (0..=kmax).map(move |k| Instance { k: Some(k), edge: Some(e), ..Default::default() }))
                .collect()
        }
        CheckKind::Recurrence => {
            let edges = eligible_edges(g);
            let chosen: Vec<EdgeId> = if small { edges.iter().collect() } else { edges.first().into_iter().collect() };
            chosen
                .into_iter()
                .flat_map(|e| vertex_subsets(g).map(move |u| Instance { u: Some(u), edge: Some(e), ..Default::default() }))
                .collect()
        }
        CheckKind::CutVertexContainment => vec![Instance::default()],
        CheckKind::JoinFactorization => {
            let cuts = cut_analysis(g).cut_vertices;
            cuts.iter()
                .flat_map(|v| {
                    vertex_subsets(g)
                        .filter(move |u| u.contains(v))
                        .map(move |u| Instance { u: Some(u), vertex: Some(v), ..Default::default() })
                })
                .collect()
        }
        CheckKind::VanishingCriterion => vertex_subsets(g).map(Instance::u).collect(),
        CheckKind::Cographic if small => vec![Instance::default()],
        CheckKind::RdctLeaves if !loopy && small => vec![Instance::default()],
        CheckKind::EarDecomposition if !loopy && cut_analysis(g).two_connected && g.edge_count() >= g.vertex_count() => {
            vec![Instance::default()]
        }
        CheckKind::TreeMinor if !loopy && cut_analysis(g).two_connected && g.edge_count() >= g.vertex_count() => {
            spanning_tree(g)?
                .iter()
                .map(|e| Instance { edge: Some(e), ..Default::default() })
                .collect()
        }
        CheckKind::ParallelInvariance if !simple => ks(),
        CheckKind::LoopVanishing if loopy => ks(),
        _ => Vec::new(),
    })
}

/// Checks evaluated by [`verify_graph`], in report order.
pub const GRAPH_CHECKS: [CheckKind; 15] = [
    CheckKind::PipelineAgreement,
    CheckKind::ClosedForm,
    CheckKind::SignTrichotomy,
    CheckKind::Threshold,
    CheckKind::Monotonicity,
    CheckKind::Recurrence,
    CheckKind::CutVertexContainment,
    CheckKind::JoinFactorization,
    CheckKind::VanishingCriterion,
    CheckKind::Cographic,
    CheckKind::RdctLeaves,
    CheckKind::EarDecomposition,
    CheckKind::TreeMinor,
    CheckKind::ParallelInvariance,
    CheckKind::LoopVanishing,
];

fn evaluate(kind: CheckKind, cx: &mut Context<'_>, inst: &Instance) -> Outcome {
    let g = cx.g;
    let need_k = || inst.k.ok_or_else(|| Error::Domain("instance needs k".into()));
    let need_u = || inst.u.ok_or_else(|| Error::Domain("instance needs U".into()));
    let need_edge = || inst.edge.ok_or_else(|| Error::Domain("instance needs an edge".into()));
    match kind {
        CheckKind::PipelineAgreement => {
            let k = need_k()?;
            let brute = cx.els(k)?;
            let via_euler = elser_via_euler_with(g, k, &mut cx.dc, &mut cx.sur)?;
            let from_w = elser_from_w(&w_polynomial(g)?, k);
            if brute != via_euler || brute != from_w {
                return fail(format!("brute {brute}, via Euler {via_euler}, from W {from_w}"));
            }
            ok()
        }
        CheckKind::ClosedForm => {
            let k = need_k()?;
            let n = g.vertex_count() as u32;
            let closed = if g.is_cycle() {
                elser_cycle_closed(n, k)?
            } else if g.is_tree() {
                elser_tree_closed(n, g.leaves().len() as u32, k)?
            } else {
                return Err(Error::Domain("closed forms cover trees and cycles".into()));
            };
            let brute = cx.els(k)?;
            if brute != closed {
                return fail(format!("brute {brute}, closed form {closed}"));
            }
            ok()
        }
        CheckKind::SignTrichotomy => {
            let k = need_k()?;
            let v = cx.els(k)?;
            let good = match k {
                0 => !v.is_positive(),
                1 => v.is_zero(),
                _ => !v.is_negative(),
            };
            if !good {
                return fail(format!("els_{k} = {v}"));
            }
            ok()
        }
        CheckKind::Threshold => {
            let k = need_k()?;
            let (dep, _) = g.deparallelize();
            let profile = predict_sign_profile(&dep)?;
            let v = cx.els(k)?;
            let predicted = profile.sign(k);
            if sign_of(&v) != predicted {
                return fail(format!(
                    "els_{k} = {v}, predicted sign {predicted:?} (2-connected {}, threshold {})",
                    profile.two_connected, profile.threshold
                ));
            }
            ok()
        }
        CheckKind::Monotonicity => {
            let k = need_k()?;
            let e = need_edge()?;
            let whole = cx.els(k)?;
            let m = cx.minors(e)?;
            let contracted = elser_from_nuclei(&m.contracted, &m.contracted_nuclei, k);
            let deleted = elser_from_nuclei(&m.deleted, &m.deleted_nuclei, k);
            let gap = &whole - &contracted - &deleted;
            if gap.is_negative() || (k == 0 && !gap.is_zero()) {
                return fail(format!("els_{k}: G {whole}, G/e {contracted}, G\\e {deleted}"));
            }
            ok()
        }
        CheckKind::Recurrence => {
            let u = need_u()?;
            let e = need_edge()?;
            let (_, mapped) = g.contract_edge(e, u)?;
            let whole = {
                let nuclei = cx.nuclei()?.to_vec();
                euler_from_nuclei(g, &nuclei, u)
            };
            let m = cx.minors(e)?;
            let contracted = euler_from_nuclei(&m.contracted, &m.contracted_nuclei, mapped);
            let deleted = euler_from_nuclei(&m.deleted, &m.deleted_nuclei, u);
            if whole != contracted - deleted {
                return fail(format!("chi(G) {whole}, chi(G/e) {contracted}, chi(G\\e) {deleted}"));
            }
            ok()
        }
        CheckKind::CutVertexContainment => {
            let cuts = cut_analysis(g).cut_vertices;
            match cx.nuclei()?.iter().find(|n| !cuts.is_subset(n.vertices)) {
                Some(n) => fail(format!("nucleus {} on {} misses a cut-vertex of {cuts}", n.edges, n.vertices)),
                None => ok(),
            }
        }
        CheckKind::JoinFactorization => {
            let u = need_u()?;
            let v = inst.vertex.ok_or_else(|| Error::Domain("instance needs a vertex".into()))?;
            if !u.contains(v) {
                return Err(Error::Domain(format!("U must contain the cut-vertex {v}")));
            }
            let nuclei = cx.nuclei()?.to_vec();
            let small = g.edge_count() <= FULL_CHECK_EDGES;
            let (g1, n1, g2, n2) = cx.split(v)?;
            let u1 = u.intersection(g1.vertex_set());
            let u2 = u.intersection(g2.vertex_set());
            let whole = euler_from_nuclei(g, &nuclei, u);
            let product = -euler_from_nuclei(g1, n1, u1) * euler_from_nuclei(g2, n2, u2);
            if whole != product {
                return fail(format!("chi(G) {whole}, -chi(G1) chi(G2) {product}"));
            }
            if small {
                let joined = join_complex(&complex_from_nuclei(g1, n1, u1), &complex_from_nuclei(g2, n2, u2))?;
                if joined != complex_from_nuclei(g, &nuclei, u) {
                    return fail("Delta^G_U differs from the join of the two sides".into());
                }
            }
            ok()
        }
        CheckKind::VanishingCriterion => {
            let u = need_u()?;
            let predicted = euler_vanishes(g, u)?;
            let chi = {
                let nuclei = cx.nuclei()?;
                euler_from_nuclei(g, nuclei, u)
            };
            if predicted != (chi == 0) {
                return fail(format!("chi = {chi}, predicted vanishing {predicted}"));
            }
            ok()
        }
        CheckKind::Cographic => {
            let full = {
                let nuclei = cx.nuclei()?;
                complex_from_nuclei(g, nuclei, g.vertex_set())
            };
            let cographic = cographic_complex(g)?;
            if full != cographic {
                return fail(format!(
                    "{} faces in Delta^G_V, {} in the cographic complex",
                    full.face_count(),
                    cographic.face_count()
                ));
            }
            ok()
        }
        CheckKind::RdctLeaves => {
            let tree = build_rdct(g, VertexSet::EMPTY)?;
            let expected = g.edge_count() + 1 - g.vertex_count();
            if let Some(l) = tree.tree_leaves().iter().find(|l| l.deletions != expected) {
                return fail(format!("tree leaf with {} deletions, expected {expected}", l.deletions));
            }
            let from_leaves = els0_from_rdct(&tree);
            let els0 = cx.els(0)?;
            if from_leaves != els0 {
                return fail(format!("-(K_2 leaves) = {from_leaves}, els_0 = {els0}"));
            }
            ok()
        }
        CheckKind::EarDecomposition => {
            let t = spanning_tree(g)?;
            let d = ear_decomposition(g, t)?;
            match check_ear_decomposition(g, &d) {
                Ok(()) => ok(),
                Err(why) => fail(why),
            }
        }
        CheckKind::TreeMinor => {
            let f = need_edge()?;
            let t = spanning_tree(g)?;
            if !t.contains(f) {
                return Err(Error::Domain(format!("edge {f} is not in the spanning tree")));
            }
            tree_minor_outcome(g, t.without(f), g.edge_set().difference(t))
        }
        CheckKind::ParallelInvariance => {
            let k = need_k()?;
            let (dep, _) = g.deparallelize();
            let whole = elser_sum(g, k)?;
            let reduced = elser_sum(&dep, k)?;
            if whole != reduced {
                return fail(format!("els_{k}: G {whole}, Dep(G) {reduced}"));
            }
            ok()
        }
        CheckKind::LoopVanishing => {
            let k = need_k()?;
            let v = elser_sum(g, k)?;
            if !v.is_zero() {
                return fail(format!("els_{k} = {v}"));
            }
            ok()
        }
        CheckKind::CycleBound => {
            let k = need_k()?;
            if !g.is_cycle() {
                return Err(Error::Domain("the cycle bound needs a cycle".into()));
            }
            cycle_bound_outcome(g.vertex_count() as u32, k)
        }
        CheckKind::FixturePin => {
            let k = need_k()?;
            let label = inst.label.as_deref().unwrap_or_default();
            let expected = match (label, k) {
                ("G1", 2) => 42,
                ("G2", 2) => 44,
                _ => return Err(Error::Domain(format!("no pinned value for {label} at k = {k}"))),
            };
            let v = cx.els(k)?;
            if v != BigInt::from(expected) {
                return fail(format!("els_{k}({label}) = {v}, pinned {expected}"));
            }
            ok()
        }
        CheckKind::SwitchInvariance => {
            let k = need_k()?;
            let partner = fixture("G4").expect("fixture exists");
            let a = cx.els(k)?;
            let b = elser_brute(&partner, k)?;
            if a != b {
                return fail(format!("els_{k}: G3 {a}, G4 {b}"));
            }
            ok()
        }
        CheckKind::EulerPoincare => {
            let u = need_u()?;
            let complex = {
                let nuclei = cx.nuclei()?;
                complex_from_nuclei(g, nuclei, u)
            };
            let h = homology_ranks(&complex)?;
            let chi = euler_char(&complex);
            if h.euler_poincare() != chi {
                return fail(format!("homology {:?}, chi {chi}", h.ranks));
            }
            ok()
        }
    }
}

fn tree_minor_outcome(g: &Multigraph, c: EdgeSet, d: EdgeSet) -> Outcome {
    let moves = match realize_tree_minor(g, c, d) {
        Ok(m) => m,
        Err(e) => return fail(format!("no legal order for C={c} D={d}: {e}")),
    };
    let reached = match replay_moves(g, &moves) {
        Ok(r) => r,
        Err(e) => return fail(format!("illegal move sequence: {e}")),
    };
    let target = minor(g, c, d)?;
    if reached != target || !reached.is_tree() {
        return fail(format!("moves reach a different minor for C={c} D={d}"));
    }
    ok()
}

fn path_elser(n: u32, k: u32) -> Result<BigInt> {
    if n == 2 {
        elser_brute(&Multigraph::path(2), k)
    } else {
        elser_path_closed(n, k)
    }
}

fn cycle_bound_outcome(n: u32, k: u32) -> Outcome {
    let cycle = elser_cycle_closed(n, k)?;
    let mut paths = BigInt::zero();
    for i in 2..=n {
        paths += path_elser(i, k)?;
    }
    if cycle < paths {
        return fail(format!("els_{k}(C_{n}) = {cycle} < {paths}"));
    }
    ok()
}

fn run_check(kind: CheckKind, cx: &mut Context<'_>, list: Vec<Instance>) -> Result<CheckRecord> {
    let mut count = 0;
    for inst in list {
        count += 1;
        if let Some(detail) = evaluate(kind, cx, &inst)? {
            return Ok(CheckRecord {
                check: kind,
                statement: kind.statement(),
                passed: false,
                instances: count,
                witness: Some(Witness { check: kind, graph: MinorJson::from(cx.g), instance: inst, detail }),
            });
        }
    }
    Ok(CheckRecord { check: kind, statement: kind.statement(), passed: true, instances: count, witness: None })
}

fn require_verifiable(g: &Multigraph, kmax: u32) -> Result<()> {
    g.require_connected()?;
    if g.vertex_count() < 2 {
        return Err(Error::SingleVertex);
    }
    if kmax > MAX_VERIFY_K {
        return Err(Error::Domain(format!("kmax {kmax} exceeds {MAX_VERIFY_K}")));
    }
    Ok(())
}

/// Runs every check that applies to `g` for `k = 0..=kmax`. Checks without
/// applicable instances are left out of the report.
pub fn verify_graph(g: &Multigraph, kmax: u32) -> Result<VerificationReport> {
    require_verifiable(g, kmax)?;
    let mut cx = Context::new(g);
    let mut checks = Vec::new();
    for kind in GRAPH_CHECKS {
        let list = instances(kind, g, kmax)?;
        if !list.is_empty() {
            checks.push(run_check(kind, &mut cx, list)?);
        }
    }
    Ok(VerificationReport { graph: MinorJson::from(g), checks, elapsed_ms: None })
}

/// [`verify_graph`] with wall-clock time recorded.
pub fn verify_graph_timed(g: &Multigraph, kmax: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = verify_graph(g, kmax)?;
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Re-evaluates a witness; `Some(detail)` means the failure reproduces.
pub fn replay(w: &Witness) -> Result<Option<String>> {
    let g = Multigraph::try_from(&w.graph)?;
    let mut cx = Context::new(&g);
    evaluate(w.check, &mut cx, &w.instance)
}

/// `els_k(C_n)` against the sum over paths with `2..=n` vertices, for
/// `3 <= n <= nmax` and `k <= kmax`.
pub fn cycle_bound(nmax: u32, kmax: u32) -> Result<CheckRecord> {
    if !(3..=MAX_NUCLEUS_CYCLE).contains(&nmax) {
        return Err(Error::Domain(format!("cycle bound needs 3 <= n <= {MAX_NUCLEUS_CYCLE}")));
    }
    let mut count = 0;
    for n in 3..=nmax {
        let g = Multigraph::cycle(n);
        for k in 0..=kmax {
            count += 1;
            if let Some(detail) = cycle_bound_outcome(n, k)? {
                let kind = CheckKind::CycleBound;
                return Ok(CheckRecord {
                    check: kind,
                    statement: kind.statement(),
                    passed: false,
                    instances: count,
                    witness: Some(Witness { check: kind, graph: MinorJson::from(&g), instance: Instance::k(k), detail }),
                });
            }
        }
    }
    let kind = CheckKind::CycleBound;
    Ok(CheckRecord { check: kind, statement: kind.statement(), passed: true, instances: count, witness: None })
}

const MAX_NUCLEUS_CYCLE: u32 = 20;

/// Named graphs from the matroid-invariance discussion: `G1` and `G2` have
/// isomorphic graphic matroids but different `els_2` (named so that
/// `els_2(G1) = 42`, the drawing labels them the other way round); `G4` is `G3` with the
/// edge cut `{wy, xz}` swapped for `{wz, xy}`.
pub fn fixture(name: &str) -> Option<Multigraph> {
    let pairs: &[(u32, u32)] = match name {
        // square 0-1-2-3 with triangles on the adjacent sides 01 and 12
        "G1" => &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 1), (1, 5), (5, 2)],
        // square 0-1-2-3 with triangles on the opposite sides 01 and 32
        "G2" => &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 1), (3, 5), (5, 2)],
        // bottom row 0..3, top row 4..7; w = 5, x = 1, y = 6, z = 2
        "G3" => &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 7),
            (7, 6),
            (6, 5),
            (5, 4),
            (4, 0),
            (1, 5),
            (2, 6),
            (0, 5),
            (2, 7),
        ],
        "G4" => &[
            (0, 1),
            (1, 5),
            (5, 4),
            (4, 0),
            (2, 3),
            (3, 7),
            (7, 6),
            (6, 2),
            (1, 6),
            (5, 2),
            (0, 5),
            (2, 7),
        ],
        _ => return None,
    };
    Multigraph::from_pairs(pairs).ok()
}

/// Fixture pins and the `G3`/`G4` switch invariance for `2 <= k <= kmax`.
pub fn fixture_checks(kmax: u32) -> Result<Vec<CheckRecord>> {
    if kmax > MAX_VERIFY_K {
        return Err(Error::Domain(format!("kmax {kmax} exceeds {MAX_VERIFY_K}")));
    }
    let mut out = Vec::new();
    let mut pins = Vec::new();
    for name in ["G1", "G2"] {
        let g = fixture(name).expect("fixture exists");
        let inst = Instance { k: Some(2), label: Some(name.into()), ..Default::default() };
        pins.push((g, inst));
    }
    out.push(run_pairs(CheckKind::FixturePin, pins)?);
    let g3 = fixture("G3").expect("fixture exists");
    let switch = (2..=kmax.max(2))
        .map(|k| (g3.clone(), Instance { k: Some(k), label: Some("G3".into()), ..Default::default() }))
        .collect();
    out.push(run_pairs(CheckKind::SwitchInvariance, switch)?);
    Ok(out)
}

fn run_pairs(kind: CheckKind, list: Vec<(Multigraph, Instance)>) -> Result<CheckRecord> {
    let mut count = 0;
    for (g, inst) in list {
        count += 1;
        let mut cx = Context::new(&g);
        if let Some(detail) = evaluate(kind, &mut cx, &inst)? {
            return Ok(CheckRecord {
                check: kind,
                statement: kind.statement(),
                passed: false,
                instances: count,
                witness: Some(Witness { check: kind, graph: MinorJson::from(&g), instance: inst, detail }),
            });
        }
    }
    Ok(CheckRecord { check: kind, statement: kind.statement(), passed: true, instances: count, witness: None })
}

// ---------------------------------------------------------------------------
// random instances

/// Connected multigraph on 2..=5 vertices with at most 10 edges, parallel
/// classes of size at most 3 and each extra edge a loop with probability 0.1.
pub fn random_multigraph(rng: &mut impl Rng) -> Multigraph {
    let n = rng.gen_range(2..=5u32);
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for v in 1..n {
        pairs.push((rng.gen_range(0..v), v));
    }
    let target = rng.gen_range(n as usize - 1..=10);
    let mut attempts = 0;
    while pairs.len() < target && attempts < 100 {
        attempts += 1;
        let a = rng.gen_range(0..n);
        let b = if rng.gen_bool(0.1) {
            a
        } else {
            (a + rng.gen_range(1..n)) % n
        };
        let key = (a.min(b), a.max(b));
        if pairs.iter().filter(|&&p| p == key).count() < 3 {
            pairs.push(key);
        }
    }
    Multigraph::from_pairs(&pairs).expect("ids are small")
}

/// `count` multigraph samples from a fixed seed.
pub fn multigraph_samples(seed: u64, count: usize) -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_multigraph(&mut rng)).collect()
}

/// A 2-connected simple graph on `n >= 3` vertices: each pair is an edge with
/// probability one half, redrawn until 2-connected.
pub fn random_two_connected(n: u32, rng: &mut impl Rng) -> Result<Multigraph> {
    if !(3..=11).contains(&n) {
        return Err(Error::Domain(format!("random 2-connected graphs need 3 <= n <= 11 (got {n})")));
    }
    loop {
        let mut pairs = Vec::new();
        for b in 1..n {
            for a in 0..b {
                if rng.gen_bool(0.5) {
                    pairs.push((a, b));
                }
            }
        }
        let Ok(g) = Multigraph::from_pairs(&pairs) else { continue };
        if g.vertex_count() == n as usize && cut_analysis(&g).two_connected {
            return Ok(g);
        }
    }
}

/// Uniformly shuffled Kruskal spanning tree.
pub fn random_spanning_tree(g: &Multigraph, rng: &mut impl Rng) -> Result<EdgeSet> {
    g.require_connected()?;
    let mut edges: Vec<_> = g.edges().iter().filter(|e| !e.is_loop()).copied().collect();
    edges.shuffle(rng);
    let mut parent: Vec<u32> = (0..64).collect();
    fn find(parent: &mut [u32], x: u32) -> u32 {
        let mut r = x;
        while parent[r as usize] != r {
            r = parent[r as usize];
        }
        let mut y = x;
        while parent[y as usize] != r {
            let next = parent[y as usize];
            parent[y as usize] = r;
            y = next;
        }
        r
    }
    let mut tree = EdgeSet::EMPTY;
    for e in edges {
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a as usize] = b;
            tree.insert(e.id);
        }
    }
    Ok(tree)
}

/// A contraction/deletion pair whose minor is a tree with at least one edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeMinorInstance {
    pub graph: MinorJson,
    pub c: EdgeSet,
    pub d: EdgeSet,
}

/// Random 2-connected graph on 3..=7 vertices, random spanning tree `T`,
/// `D = E \ T` and `C` a random proper subset of `T`.
pub fn random_tree_minor_instance(rng: &mut impl Rng) -> TreeMinorInstance {
    let n = rng.gen_range(3..=7);
    let g = random_two_connected(n, rng).expect("order in range");
    let t = random_spanning_tree(&g, rng).expect("connected");
    let kept = t.iter().nth(rng.gen_range(0..t.len())).expect("nonempty tree");
    let c: EdgeSet = t.iter().filter(|&e| e != kept && rng.gen_bool(0.5)).collect();
    TreeMinorInstance { graph: MinorJson::from(&g), c, d: g.edge_set().difference(t) }
}

/// Checks one random instance: legal moves that reach `G / C \ D`.
pub fn check_tree_minor_instance(inst: &TreeMinorInstance) -> Result<Option<String>> {
    let g = Multigraph::try_from(&inst.graph)?;
    tree_minor_outcome(&g, inst.c, inst.d)
}

// ---------------------------------------------------------------------------
// sweeps

/// Labeled connected simple graphs on `n` vertices, `n = 1..=7`.
const LABELED_CONNECTED: [u64; 8] = [0, 1, 1, 4, 38, 728, 26704, 1866256];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepOptions {
    pub nmax: u32,
    pub kmax: u32,
    pub dedup: bool,
    pub multigraph_samples: usize,
    pub seed: u64,
    pub homology: bool,
    /// Worker threads; `None` uses the global pool.
    #[serde(skip)]
    pub threads: Option<usize>,
    /// Refuse families with more graphs than this.
    pub max_graphs: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            nmax: 5,
            kmax: 4,
            dedup: true,
            multigraph_samples: 0,
            seed: 0x5eed,
            homology: false,
            threads: None,
            max_graphs: 100_000,
        }
    }
}

/// Where `U` sits for a histogram entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum USide {
    Empty,
    Single,
    Many,
}

/// Homology concentration of `Delta^G_U` over 2-connected graphs. Keys are
/// the concentration dimension minus `|E| - |V|`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConcentrationHistogram {
    pub complexes: u64,
    pub empty_u: BTreeMap<i32, u64>,
    pub single_u: BTreeMap<i32, u64>,
    pub multi_u: BTreeMap<i32, u64>,
    /// Complexes with no homology at all.
    pub acyclic: u64,
    /// Complexes with homology in more than one dimension.
    pub spread: u64,
}

impl ConcentrationHistogram {
    fn record(&mut self, side: USide, offset: Option<i32>, nonzero: bool) {
        self.complexes += 1;
        match (offset, nonzero) {
            (_, false) => self.acyclic += 1,
            (None, true) => self.spread += 1,
            (Some(d), true) => {
                let map = match side {
                    USide::Empty => &mut self.empty_u,
                    USide::Single => &mut self.single_u,
                    USide::Many => &mut self.multi_u,
                };
                *map.entry(d).or_default() += 1;
            }
        }
    }

    fn merge(&mut self, other: &ConcentrationHistogram) {
        self.complexes += other.complexes;
        self.acyclic += other.acyclic;
        self.spread += other.spread;
        for (mine, theirs) in [
            (&mut self.empty_u, &other.empty_u),
            (&mut self.single_u, &other.single_u),
            (&mut self.multi_u, &other.multi_u),
        ] {
            for (&d, &c) in theirs {
                *mine.entry(d).or_default() += c;
            }
        }
    }

    /// Whether every `|U| >= 2` complex is acyclic or concentrated in
    /// dimension `|E| - |V|`, and no complex is spread.
    pub fn multi_u_at_cyclomatic_minus_one(&self) -> bool {
        self.spread == 0 && self.multi_u.keys().all(|&d| d == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub graph_index: u64,
    pub check: CheckRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub family: String,
    pub graphs: u64,
    /// Enumerated simple graphs by vertex count; samples are counted apart.
    pub graphs_by_order: BTreeMap<u32, u64>,
    pub multigraph_samples: u64,
    pub checks: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<SweepFailure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub histogram: Option<ConcentrationHistogram>,
}

impl SweepSummary {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "family: {}", self.family);
        for (n, c) in &self.graphs_by_order {
            let _ = writeln!(out, "  n={n}: {c} graphs");
        }
        if self.multigraph_samples > 0 {
            let _ = writeln!(out, "  multigraph samples: {}", self.multigraph_samples);
        }
        let _ = writeln!(out, "graphs {}, check instances {}, failures {}", self.graphs, self.checks, self.failures);
        if let Some(f) = &self.failure {
            let _ = writeln!(out, "first failure (graph #{}): {}", f.graph_index, f.check.check.name());
            if let Some(w) = &f.check.witness {
                let _ = writeln!(out, "  witness: {}", serde_json::to_string(w).unwrap_or_default());
            }
        }
        if let Some(h) = &self.histogram {
            let _ = writeln!(out, "homology over {} complexes (offset from |E|-|V|):", h.complexes);
            for (label, map) in [("U empty", &h.empty_u), ("|U| = 1", &h.single_u), ("|U| >= 2", &h.multi_u)] {
                let cells: Vec<String> = map.iter().map(|(d, c)| format!("{d:+}: {c}")).collect();
                let _ = writeln!(out, "  {label}: {}", cells.join(", "));
            }
            let _ = writeln!(out, "  acyclic: {}, spread: {}", h.acyclic, h.spread);
        }
        out
    }
}

struct GraphOutcome {
    checks: u64,
    failure: Option<CheckRecord>,
    histogram: ConcentrationHistogram,
}

fn homology_pass(g: &Multigraph, hist: &mut ConcentrationHistogram) -> Result<(u64, Option<CheckRecord>)> {
    let mut cx = Context::new(g);
    let base = g.edge_count() as i32 - g.vertex_count() as i32;
    let mut count = 0;
    for u in vertex_subsets(g) {
        count += 1;
        let complex = {
            let nuclei = cx.nuclei()?;
            complex_from_nuclei(g, nuclei, u)
        };
        let h = homology_ranks(&complex)?;
        let chi = euler_char(&complex);
        if h.euler_poincare() != chi {
            let kind = CheckKind::EulerPoincare;
            return Ok((
                count,
                Some(CheckRecord {
                    check: kind,
                    statement: kind.statement(),
                    passed: false,
                    instances: count,
                    witness: Some(Witness {
                        check: kind,
                        graph: MinorJson::from(g),
                        instance: Instance::u(u),
                        detail: format!("homology {:?}, chi {chi}", h.ranks),
                    }),
                }),
            ));
        }
        let side = match u.len() {
            0 => USide::Empty,
            1 => USide::Single,
            _ => USide::Many,
        };
        hist.record(side, h.concentrated_in().map(|d| d - base), !h.ranks.is_empty());
    }
    Ok((count, None))
}

fn sweep_one(g: &Multigraph, opts: &SweepOptions, simple: bool) -> Result<GraphOutcome> {
    let report = verify_graph(g, opts.kmax)?;
    let mut checks = report.instances();
    let mut histogram = ConcentrationHistogram::default();
    if let Some(f) = report.checks.into_iter().find(|c| !c.passed) {
        return Ok(GraphOutcome { checks, failure: Some(f), histogram });
    }
    if opts.homology && simple && cut_analysis(g).two_connected {
        let (count, failure) = homology_pass(g, &mut histogram)?;
        checks += count;
        if failure.is_some() {
            return Ok(GraphOutcome { checks, failure, histogram });
        }
    }
    Ok(GraphOutcome { checks, failure: None, histogram })
}

fn check_sweep_options(opts: &SweepOptions) -> Result<()> {
    let cap = if opts.homology { 6 } else { 7 };
    if !(2..=cap).contains(&opts.nmax) {
        return Err(Error::Domain(format!(
            "sweep order must be in 2..={cap}{}",
            if opts.homology { " with homology" } else { "" }
        )));
    }
    if opts.kmax > MAX_VERIFY_K {
        return Err(Error::Domain(format!("kmax {} exceeds {MAX_VERIFY_K}", opts.kmax)));
    }
    if opts.multigraph_samples > 100_000 {
        return Err(Error::TooLarge(format!("{} multigraph samples", opts.multigraph_samples)));
    }
    if !opts.dedup {
        let labeled: u64 = LABELED_CONNECTED[2..=opts.nmax as usize].iter().sum();
        if labeled > opts.max_graphs {
            return Err(Error::TooLarge(format!(
                "{labeled} labeled graphs exceed the cap of {}; use dedup",
                opts.max_graphs
            )));
        }
    }
    Ok(())
}

/// Verifies every connected simple graph on `2..=nmax` vertices, then the
/// seeded multigraph samples. Stops at the first failing graph; the result
/// does not depend on the thread count.
pub fn sweep(opts: &SweepOptions) -> Result<SweepSummary> {
    check_sweep_options(opts)?;
    let mut graphs: Vec<(Multigraph, bool)> = Vec::new();
    let mut by_order = BTreeMap::new();
    for n in 2..=opts.nmax {
        let before = graphs.len();
        graphs.extend(connected_graphs(n, opts.dedup)?.map(|g| (g, true)));
        by_order.insert(n, (graphs.len() - before) as u64);
    }
    if graphs.len() as u64 > opts.max_graphs {
        return Err(Error::TooLarge(format!("{} graphs exceed the cap of {}", graphs.len(), opts.max_graphs)));
    }
    let samples = multigraph_samples(opts.seed, opts.multigraph_samples);
    graphs.extend(samples.into_iter().map(|g| (g, false)));

    let first_failure = AtomicUsize::new(usize::MAX);
    let work = || -> Vec<Option<Result<GraphOutcome>>> {
        graphs
            .par_iter()
            .enumerate()
            .with_min_len(4)
            .map(|(i, (g, simple))| {
                if i > first_failure.load(AtomicOrdering::Relaxed) {
                    return None;
                }
                let out = sweep_one(g, opts, *simple);
                if matches!(&out, Ok(o) if o.failure.is_some()) || out.is_err() {
                    first_failure.fetch_min(i, AtomicOrdering::Relaxed);
                }
                Some(out)
            })
            .collect()
    };
    let outcomes = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };

    let mut summary = SweepSummary {
        family: format!(
            "connected simple graphs on 2..={} vertices{}{}",
            opts.nmax,
            if opts.dedup { " up to isomorphism" } else { ", labeled" },
            if opts.multigraph_samples > 0 {
                format!(" plus {} multigraphs (seed {})", opts.multigraph_samples, opts.seed)
            } else {
                String::new()
            }
        ),
        graphs: 0,
        graphs_by_order: by_order,
        multigraph_samples: opts.multigraph_samples as u64,
        checks: 0,
        failures: 0,
        failure: None,
        histogram: opts.homology.then(ConcentrationHistogram::default),
    };
    for (i, out) in outcomes.into_iter().enumerate() {
        let Some(out) = out else { break };
        let out = out?;
        summary.graphs += 1;
        summary.checks += out.checks;
        if let Some(h) = summary.histogram.as_mut() {
            h.merge(&out.histogram);
        }
        if let Some(f) = out.failure {
            summary.failures = 1;
            summary.failure = Some(SweepFailure { graph_index: i as u64, check: f });
            break;
        }
    }
    Ok(summary)
}
