//! Acceptance suite: one PASS/FAIL line per criterion, each under its time
//! limit. Runs without the libtest harness so the lines print in order.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::{blocks_oracle, cographic_oracle, components, elser_oracle, labeled_connected, two_connected_oracle};
use nucleus_lab::complex::{build_complex, complex_from_nuclei, euler_char, homology_ranks, NucleusComplex};
use nucleus_lab::graph::{connected_graphs, spanning_tree, subsets, EdgeSet, Multigraph, VertexSet};
use nucleus_lab::nucleus::{
    elser_brute, elser_cycle_closed, elser_from_nuclei, elser_from_w, elser_sum, elser_tree_closed, enumerate_nuclei,
    w_polynomial,
};
use nucleus_lab::recurrence::{build_rdct, els0_from_rdct, eligible_edges, elser_via_euler};
use nucleus_lab::structure::{ear_decomposition, minor, realize_tree_minor, EarDecomposition, MinorMove};
use nucleus_lab::verify::{
    fixture, multigraph_samples, random_spanning_tree, random_tree_minor_instance, random_two_connected,
};

const SEED: u64 = 0x5eed;

/// Failures found by one criterion, plus lines worth reporting either way.
#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }

    fn absorb(&mut self, other: Outcome) {
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }
}

fn pow(base: u32, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

fn sign(exp: usize) -> i64 {
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

fn classes(nmax: u32) -> Vec<Multigraph> {
    (2..=nmax).flat_map(|n| connected_graphs(n, true).unwrap()).collect()
}

fn labeled(nmax: u32) -> Vec<Multigraph> {
    (2..=nmax).flat_map(labeled_connected).collect()
}

fn vertex_subsets(g: &Multigraph) -> impl Iterator<Item = VertexSet> {
    subsets(g.vertex_set().bits()).map(VertexSet)
}

fn closed_form_pins() -> Outcome {
    let mut out = Outcome::default();
    let k2 = Multigraph::path(2);
    for k in 0..=6 {
        let expected = pow(2, k) - 2;
        out.check(elser_brute(&k2, k).unwrap() == expected, || format!("els_{k}(K2) != {expected}"));
    }
    for n in 3..=7u32 {
        for k in 1..=5u32 {
            let expected = BigInt::from(n * (n - 1)) * (pow(n, k - 1) - pow(n - 1, k - 1));
            let brute = elser_brute(&Multigraph::cycle(n), k).unwrap();
            out.check(brute == expected, || format!("els_{k}(C{n}) = {brute}, formula {expected}"));
            out.check(elser_cycle_closed(n, k).unwrap() == expected, || format!("cycle closed form C{n} k={k}"));
        }
    }
    for n in 3..=8u32 {
        for k in 0..=5u32 {
            let expected = pow(n, k) - 2 * pow(n - 1, k) + pow(n - 2, k);
            let brute = elser_brute(&Multigraph::path(n), k).unwrap();
            out.check(brute == expected, || format!("els_{k}(P{n}) = {brute}, formula {expected}"));
        }
    }
    out
}

fn small_complex_pins() -> Outcome {
    let mut out = Outcome::default();
    let k3 = Multigraph::cycle(3);
    for u in vertex_subsets(&k3) {
        let expected = [-1, 0, 1, 2][u.len()];
        let chi = euler_char(&build_complex(&k3, u).unwrap());
        out.check(chi == expected, || format!("chi(K3, U={u}) = {chi}, expected {expected}"));
    }
    for c in 1..=5u32 {
        let g = Multigraph::parallel_k2(c);
        let c = c as usize;
        let expected = [sign(c - 1), 0, 0, sign(c)];
        for (bits, want) in [0b00u64, 0b01, 0b10, 0b11].into_iter().zip(expected) {
            let cx = build_complex(&g, VertexSet(bits)).unwrap();
            let chi = euler_char(&cx);
            out.check(chi == want, || format!("chi({c}K2, U={}) = {chi}, expected {want}", VertexSet(bits)));
        }
        let sphere = homology_ranks(&build_complex(&g, VertexSet::EMPTY).unwrap()).unwrap();
        out.check(sphere.concentrated_in() == Some(c as i32 - 1) && sphere.rank(c as i32 - 1) == 1, || {
            format!("{c}K2 at U={{}} is not a {}-sphere: {:?}", c - 1, sphere.ranks)
        });
    }
    out
}

fn pipeline_agreement() -> Outcome {
    let graphs = labeled(5);
    let mut out = graphs
        .par_iter()
        .map(|g| {
            let mut out = Outcome::default();
            let w = w_polynomial(g).unwrap();
            for k in 0..=4u32 {
                let brute = elser_brute(g, k).unwrap();
                let via = elser_via_euler(g, k).unwrap();
                let from_w = elser_from_w(&w, k);
                let oracle = elser_oracle(g, k);
                out.check(brute == via && via == from_w && from_w == oracle, || {
                    format!("{g:?} k={k}: brute {brute}, euler {via}, W {from_w}, oracle {oracle}")
                });
                let closed = if k == 0 {
                    None
                } else if g.is_tree() {
                    Some(elser_tree_closed(g.vertex_count() as u32, g.leaves().len() as u32, k).unwrap())
                } else if g.is_cycle() {
                    Some(elser_cycle_closed(g.vertex_count() as u32, k).unwrap())
                } else {
                    None
                };
                if let Some(c) = closed {
                    out.check(c == brute, || format!("{g:?} k={k}: closed form {c}, brute {brute}"));
                }
            }
            out
        })
        .reduce(Outcome::default, |mut a, b| {
            a.absorb(b);
            a
        });
    out.notes.push(format!("{} labeled graphs, k = 0..4, four pipelines plus the definition", graphs.len()));
    out
}

fn faces(cx: &NucleusComplex) -> &[EdgeSet] {
    cx.faces().expect("simplicial complex")
}

fn recurrence_one(g: &Multigraph) -> (Outcome, u64, u64) {
    let mut out = Outcome::default();
    let (mut identities, mut defects) = (0, 0);
    let nuclei = enumerate_nuclei(g).unwrap();
    for e in eligible_edges(g).iter() {
        let deleted = g.delete_edge(e).unwrap();
        let del_nuclei = enumerate_nuclei(&deleted).unwrap();
        let (contracted, _) = g.contract_edge(e, VertexSet::EMPTY).unwrap();
        let con_nuclei = enumerate_nuclei(&contracted).unwrap();
        for u in vertex_subsets(g) {
            let (_, ue) = g.contract_edge(e, u).unwrap();
            let dg = complex_from_nuclei(g, &nuclei, u);
            let dd = complex_from_nuclei(&deleted, &del_nuclei, u);
            let dc = complex_from_nuclei(&contracted, &con_nuclei, ue);
            let (x, y, z) = (euler_char(&dg), euler_char(&dc), euler_char(&dd));
            identities += 1;
            out.check(x == y - z, || format!("{g:?} e={e} U={u}: chi {x} != {y} - {z}"));

            let n = g.vertex_count();
            if !(n >= 4 || (n == 3 && !u.is_empty())) {
                continue;
            }
            defects += 1;
            for &a in faces(&dg) {
                let ok = if a.contains(e) { dd.contains(a.without(e)) } else { dc.contains(a) };
                out.check(ok, || format!("{g:?} e={e} U={u}: psi({a}) leaves the target complexes"));
            }
            let d1: Vec<EdgeSet> = faces(&dd).iter().copied().filter(|&b| !dg.contains(b.with(e))).collect();
            let d2: Vec<EdgeSet> = faces(&dc).iter().copied().filter(|&b| !dg.contains(b)).collect();
            out.check(d1 == d2, || format!("{g:?} e={e} U={u}: defect sets {d1:?} vs {d2:?}"));
        }
    }
    (out, identities, defects)
}

fn recurrence_from_complexes() -> Outcome {
    let graphs = labeled(5);
    let (mut out, identities, defects) = graphs.par_iter().map(recurrence_one).reduce(
        || (Outcome::default(), 0, 0),
        |(mut a, i, d), (b, j, f)| {
            a.absorb(b);
            (a, i + j, d + f)
        },
    );
    out.notes.push(format!(
        "{} labeled graphs: {identities} (G, U, e) identities, {defects} defect-set equalities",
        graphs.len()
    ));
    out
}

/// Signs for one graph: predicted from the independent block oracle,
/// compared with els_k for k = 0..=6.
fn signs_one(g: &Multigraph) -> Outcome {
    let mut out = Outcome::default();
    let nuclei = enumerate_nuclei(g).unwrap();
    let two = two_connected_oracle(g);
    let threshold = if two { 2 } else { blocks_oracle(g).2 as u32 };
    let zero = BigInt::from(0);
    for k in 0..=6u32 {
        let v = elser_from_nuclei(g, &nuclei, k);
        let ok = match k {
            0 => (v < zero) == two && v <= zero,
            1 => v == zero,
            _ => v >= zero && (v != zero) == (k >= threshold),
        };
        out.check(ok, || format!("{g:?}: els_{k} = {v} (2-connected {two}, threshold {threshold})"));
    }
    out
}

fn sign_theorems() -> Outcome {
    let graphs = classes(6);
    let mut out = graphs.par_iter().map(signs_one).reduce(Outcome::default, |mut a, b| {
        a.absorb(b);
        a
    });
    out.notes.push(format!("{} isomorphism classes on 2..=6 vertices, k = 0..6", graphs.len()));
    out
}

fn rdct_checks() -> Outcome {
    let graphs = classes(6);
    let mut out = Outcome::default();
    let mut leaves = 0;
    for g in &graphs {
        let tree = build_rdct(g, VertexSet::EMPTY).unwrap();
        let expected = g.edge_count() + 1 - g.vertex_count();
        for leaf in tree.tree_leaves() {
            leaves += 1;
            out.check(leaf.deletions == expected, || format!("{g:?}: tree leaf with {} deletions", leaf.deletions));
        }
        let els0 = els0_from_rdct(&tree);
        let brute = elser_brute(g, 0).unwrap();
        out.check(els0 == brute, || format!("{g:?}: -(K2 leaves) = {els0}, els_0 = {brute}"));
    }
    out.notes.push(format!("{} graphs, {leaves} tree leaves", graphs.len()));
    out
}

fn monotone_one(g: &Multigraph) -> Outcome {
    let mut out = Outcome::default();
    for e in eligible_edges(g).iter() {
        let deleted = g.delete_edge(e).unwrap();
        let (contracted, _) = g.contract_edge(e, VertexSet::EMPTY).unwrap();
        for k in 0..=5u32 {
            let whole = elser_sum(g, k).unwrap();
            let parts = elser_sum(&contracted, k).unwrap() + elser_sum(&deleted, k).unwrap();
            let ok = if k == 0 { whole == parts } else { whole >= parts };
            out.check(ok, || format!("{g:?} e={e} k={k}: {whole} vs {parts}"));
        }
    }
    out
}

fn monotonicity() -> Outcome {
    let mut graphs = classes(6);
    let family = graphs.len();
    graphs.extend(multigraph_samples(SEED, 200));
    let mut out = graphs.par_iter().map(monotone_one).reduce(Outcome::default, |mut a, b| {
        a.absorb(b);
        a
    });
    out.notes.push(format!("{family} classes plus 200 seeded multigraphs, k = 0..5"));
    out
}

/// The ear invariants, checked from the vertex and edge sequences alone.
fn ear_invariants(g: &Multigraph, tree: EdgeSet, d: &EarDecomposition) -> Result<(), String> {
    if d.ears.len() != g.edge_count() + 1 - g.vertex_count() {
        return Err(format!("{} ears", d.ears.len()));
    }
    let mut used = EdgeSet::EMPTY;
    let mut seen = VertexSet::EMPTY;
    for (i, ear) in d.ears.iter().enumerate() {
        let vs = &ear.vertices;
        if vs.len() != ear.edges.len() + 1 || ear.edges.is_empty() {
            return Err(format!("ear {i}: {} vertices for {} edges", vs.len(), ear.edges.len()));
        }
        for (j, &id) in ear.edges.iter().enumerate() {
            let edge = g.edge(id).ok_or(format!("ear {i}: unknown edge {id}"))?;
            if edge.ends() != [vs[j], vs[j + 1]].into_iter().collect() || edge.is_loop() {
                return Err(format!("ear {i}: edge {id} does not join {} and {}", vs[j], vs[j + 1]));
            }
            if used.contains(id) {
                return Err(format!("ear {i}: edge {id} reused"));
            }
            used = used.with(id);
        }
        let inner = &vs[1..vs.len() - 1];
        let distinct: VertexSet = inner.iter().copied().collect();
        if distinct.len() != inner.len() {
            return Err(format!("ear {i} repeats an inner vertex"));
        }
        let (first, last) = (vs[0], vs[vs.len() - 1]);
        if i == 0 {
            if first != last || distinct.contains(first) {
                return Err("first ear is not a cycle".into());
            }
        } else if first == last
            || !seen.contains(first)
            || !seen.contains(last)
            || !distinct.is_disjoint(seen)
        {
            return Err(format!("ear {i} does not meet earlier ears exactly at its ends"));
        }
        seen = seen.union(vs.iter().copied().collect());
        let outside = ear.edges.iter().filter(|&&id| !tree.contains(id)).count();
        if outside != 1 {
            return Err(format!("ear {i} has {outside} non-tree edges"));
        }
    }
    if used != g.edge_set() {
        return Err("ears miss some edges".into());
    }
    Ok(())
}

fn ears_and_minors() -> Outcome {
    let mut out = Outcome::default();
    let mut deterministic = 0;
    for g in classes(6).iter().filter(|g| two_connected_oracle(g) && g.vertex_count() >= 3) {
        deterministic += 1;
        let t = spanning_tree(g).unwrap();
        match ear_decomposition(g, t) {
            Ok(d) => {
                if let Err(m) = ear_invariants(g, t, &d) {
                    out.fail(format!("{g:?}: {m}"));
                }
            }
            Err(err) => out.fail(format!("{g:?}: {err}")),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut random = 0;
    for n in 3..=8 {
        for _ in 0..50 {
            random += 1;
            let g = random_two_connected(n, &mut rng).unwrap();
            let t = random_spanning_tree(&g, &mut rng).unwrap();
            match ear_decomposition(&g, t) {
                Ok(d) => {
                    if let Err(m) = ear_invariants(&g, t, &d) {
                        out.fail(format!("{g:?} T={t}: {m}"));
                    }
                }
                Err(err) => out.fail(format!("{g:?} T={t}: {err}")),
            }
        }
    }
    let mut steps = 0;
    for _ in 0..100 {
        let inst = random_tree_minor_instance(&mut rng);
        let g = Multigraph::try_from(&inst.graph).unwrap();
        let moves = match realize_tree_minor(&g, inst.c, inst.d) {
            Ok(m) => m,
            Err(err) => {
                out.fail(format!("{inst:?}: {err}"));
                continue;
            }
        };
        let mut cur = g.clone();
        let mut done = EdgeSet::EMPTY;
        for mv in &moves {
            steps += 1;
            let (MinorMove::Contract(e) | MinorMove::Delete(e)) = *mv;
            let Some(edge) = cur.edge(e).copied() else {
                out.fail(format!("{inst:?}: {mv:?} on a missing edge"));
                break;
            };
            let bridge = components(&cur, cur.vertex_set(), cur.edge_set().without(e)) > 1;
            if edge.is_loop() || bridge {
                out.fail(format!("{inst:?}: {mv:?} touches a loop or cut-edge"));
                break;
            }
            done = done.with(e);
            cur = match mv {
                MinorMove::Contract(e) => cur.contract_edge(*e, VertexSet::EMPTY).unwrap().0,
                MinorMove::Delete(e) => cur.delete_edge(*e).unwrap(),
            };
        }
        let is_tree = cur.is_connected() && !cur.has_loop() && cur.edge_count() + 1 == cur.vertex_count();
        out.check(done == inst.c.union(inst.d) && moves.len() == done.len(), || format!("{inst:?}: moves {moves:?}"));
        out.check(is_tree && cur == minor(&g, inst.c, inst.d).unwrap(), || format!("{inst:?}: ended at {cur:?}"));
    }
    out.notes.push(format!(
        "{deterministic} 2-connected classes, {random} random (graph, tree) pairs on 3..=8 vertices, 100 minors in {steps} moves"
    ));
    out
}

fn fixtures_and_cographic() -> Outcome {
    let mut out = Outcome::default();
    let els = |name: &str, k| elser_brute(&fixture(name).unwrap(), k).unwrap();
    let (g1, g2) = (els("G1", 2), els("G2", 2));
    out.check(g1 == BigInt::from(42), || format!("els_2(G1) = {g1}"));
    out.check(g2 == BigInt::from(44), || format!("els_2(G2) = {g2}"));
    out.notes.push(format!(
        "els_2 = {g1} on the square with triangles on adjacent sides (G1), {g2} with triangles on opposite sides (G2)"
    ));
    let mut row = Vec::new();
    for k in 2..=5 {
        let (a, b) = (els("G3", k), els("G4", k));
        out.check(a == b, || format!("els_{k}: G3 {a}, G4 {b}"));
        row.push(a.to_string());
    }
    out.notes.push(format!("els_2..5(G3) = els_2..5(G4) = {}", row.join(", ")));

    let mut graphs = labeled(5);
    graphs.extend(connected_graphs(6, true).unwrap());
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let full = build_complex(g, g.vertex_set()).unwrap();
            let expected = cographic_oracle(g);
            (full.faces() != Some(&expected[..])).then(|| format!("{g:?}: Delta_V is not cographic"))
        })
        .collect();
    out.failures.extend(bad);
    out.notes.push(format!("{} graphs (labeled up to 5 vertices, classes on 6) against the cographic complex", graphs.len()));
    out
}

#[derive(Default)]
struct Concentration {
    out: Outcome,
    complexes: u64,
    empty_u: std::collections::BTreeMap<i64, u64>,
}

fn homology_one(g: &Multigraph) -> Concentration {
    let mut c = Concentration::default();
    let cyclomatic_minus_one = g.edge_count() as i64 - g.vertex_count() as i64;
    let nuclei = enumerate_nuclei(g).unwrap();
    for u in vertex_subsets(g) {
        let cx = complex_from_nuclei(g, &nuclei, u);
        let h = homology_ranks(&cx).unwrap();
        c.complexes += 1;
        let chi = euler_char(&cx);
        c.out.check(h.euler_poincare() == chi, || format!("{g:?} U={u}: ranks {:?} vs chi {chi}", h.ranks));
        c.out.check(h.ranks.len() <= 1, || format!("{g:?} U={u}: homology in several dimensions {:?}", h.ranks));
        match u.len() {
            0 => {
                let key = h.concentrated_in().map_or(i64::MIN, |d| d as i64 - cyclomatic_minus_one);
                *c.empty_u.entry(key).or_default() += 1;
            }
            1 => {}
            _ => c.out.check(h.concentrated_in() == Some(cyclomatic_minus_one as i32), || {
                format!("{g:?} U={u}: ranks {:?}, expected dimension {cyclomatic_minus_one}", h.ranks)
            }),
        }
    }
    c
}

fn homology_concentration() -> Outcome {
    let graphs: Vec<Multigraph> = classes(6).into_iter().filter(two_connected_oracle).collect();
    let total = graphs.par_iter().map(homology_one).reduce(Concentration::default, |mut a, b| {
        a.out.absorb(b.out);
        a.complexes += b.complexes;
        for (d, n) in b.empty_u {
            *a.empty_u.entry(d).or_default() += n;
        }
        a
    });
    let mut out = total.out;
    let histogram: Vec<String> = total
        .empty_u
        .iter()
        .map(|(&d, n)| if d == i64::MIN { format!("acyclic: {n}") } else { format!("{d:+}: {n}") })
        .collect();
    out.notes.push(format!("{} 2-connected classes, {} complexes", graphs.len(), total.complexes));
    out.notes.push(format!("U = {{}} concentration, dimension - (|E| - |V|): {}", histogram.join(", ")));
    out
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        (1, "closed forms for K2, cycles and paths", Duration::from_secs(1), closed_form_pins),
        (2, "Euler characteristics of K3 and cK2 complexes", Duration::from_secs(1), small_complex_pins),
        (3, "four-way agreement of Elser pipelines", Duration::from_secs(120), pipeline_agreement),
        (4, "deletion-contraction from explicit complexes", Duration::from_secs(300), recurrence_from_complexes),
        (5, "sign and nonvanishing theorems", Duration::from_secs(900), sign_theorems),
        (6, "RDCT deletion counts and els_0", Duration::from_secs(900), rdct_checks),
        (7, "monotonicity under deletion-contraction", Duration::from_secs(900), monotonicity),
        (8, "ear decompositions and tree-minor orders", Duration::from_secs(900), ears_and_minors),
        (9, "fixture values and cographic complexes", Duration::from_secs(900), fixtures_and_cographic),
        (10, "homology concentration", Duration::from_secs(1800), homology_concentration),
    ];
    let mut failed = 0;
    for (id, title, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let late = elapsed > limit;
        let ok = outcome.failures.is_empty() && !late;
        println!(
            "{} criterion {id:>2}: {title} ({:.2} s, limit {} s)",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        for note in &outcome.notes {
            println!("      {note}");
        }
        if late {
            println!("      over the time limit");
        }
        for f in outcome.failures.iter().take(5) {
            println!("      {f}");
        }
        if outcome.failures.len() > 5 {
            println!("      ... {} failures in total", outcome.failures.len());
        }
        failed += usize::from(!ok);
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
