// Elser numbers three ways: from the nucleus list, from the W polynomial and
// through closed forms for trees and cycles.

use nucleus_lab::graph::Multigraph;
use nucleus_lab::nucleus::{
    elser_brute, elser_cycle_closed, elser_from_w, elser_tree_closed, elser_vector, enumerate_nuclei, w_polynomial,
};

pub fn run_example() -> nucleus_lab::Result<()> {
    let c3 = Multigraph::cycle(3);
    let nuclei = enumerate_nuclei(&c3)?;
    println!("C3 has {} nuclei", nuclei.len());
    for n in &nuclei {
        println!("  edges {} on vertices {}", n.edges, n.vertices);
    }

    let w = w_polynomial(&c3)?;
    println!("W(C3, y) = {w}");
    for k in 0..=4 {
        let direct = elser_brute(&c3, k)?;
        assert_eq!(direct, elser_from_w(&w, k));
        if k >= 1 {
            assert_eq!(direct, elser_cycle_closed(3, k)?);
        }
        println!("els_{k}(C3) = {direct}");
    }

    // a path has two leaves; a star with three leaves vanishes below k = 3
    let star = Multigraph::star(3);
    for (k, v) in elser_vector(&star, 0..=5)?.values {
        println!("els_{k}(K_1,3) = {v}");
    }
    assert_eq!(elser_brute(&star, 4)?, elser_tree_closed(4, 3, 4)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("elser numbers");
}
