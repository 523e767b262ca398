// Nucleus complexes: faces, reduced Euler characteristics, the cographic
// case and joins at a cut-vertex.

use nucleus_lab::complex::{build_complex, cographic_complex, euler_char, join_complex};
use nucleus_lab::graph::{Multigraph, VertexSet};
use nucleus_lab::structure::split_at_cut_vertex;

pub fn run_example() -> nucleus_lab::Result<()> {
    let k3 = Multigraph::cycle(3);
    for bits in [0b000, 0b001, 0b011, 0b111] {
        let u = VertexSet(bits);
        let cx = build_complex(&k3, u)?;
        println!("U = {u}: {} faces, chi = {}", cx.face_count(), euler_char(&cx));
    }
    assert_eq!(cographic_complex(&k3)?, build_complex(&k3, k3.vertex_set())?);

    // two parallel edges with U empty: a circle made of two 1-cells
    let bundle = Multigraph::parallel_k2(2);
    println!("2K2, U = {{}}: chi = {}", euler_char(&build_complex(&bundle, VertexSet::EMPTY)?));

    // a bowtie splits at its middle vertex; with that vertex in U the complex
    // is the join of the two halves
    let bowtie = Multigraph::from_pairs(&[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])?;
    let u: VertexSet = [0, 2, 4].into_iter().collect();
    let (left, right) = split_at_cut_vertex(&bowtie, 2)?;
    let joined = join_complex(
        &build_complex(&left, u.intersection(left.vertex_set()))?,
        &build_complex(&right, u.intersection(right.vertex_set()))?,
    )?;
    let whole = build_complex(&bowtie, u)?;
    assert_eq!(joined, whole);
    println!("bowtie, U = {u}: join of the halves has {} faces, chi = {}", whole.face_count(), euler_char(&whole));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("nucleus complexes");
}
