// The deletion-contraction recurrence for reduced Euler characteristics and
// the Elser numbers it produces.

use nucleus_lab::complex::{build_complex, euler_char};
use nucleus_lab::graph::{subsets, VertexSet};
use nucleus_lab::graph::Multigraph;
use nucleus_lab::nucleus::elser_brute;
use nucleus_lab::recurrence::{eligible_edges, elser_via_euler, euler_dc, EulerDc};

pub fn run_example() -> nucleus_lab::Result<()> {
    let k4 = Multigraph::complete(4);
    println!("edges eligible for the recurrence: {}", eligible_edges(&k4));

    let mut dc = EulerDc::new();
    for u in subsets(k4.vertex_set().bits()).map(VertexSet).filter(|u| u.len() <= 2) {
        let chi = dc.chi(&k4, u)?;
        assert_eq!(chi, euler_char(&build_complex(&k4, u)?));
        println!("chi(K4, U = {u}) = {chi}");
    }
    println!("{} minors memoized", dc.memo_len());

    // the recurrence reaches graphs far beyond exhaustive nucleus enumeration
    let k8 = Multigraph::complete(8);
    println!("chi(K8, U = {{}}) = {}", euler_dc(&k8, VertexSet::EMPTY)?);
    println!("els_2(K8) = {}", elser_via_euler(&k8, 2)?);
    assert_eq!(elser_via_euler(&k4, 3)?, elser_brute(&k4, 3)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("euler recursion");
}
