// Reduced rational homology of nucleus complexes.

use nucleus_lab::complex::{build_complex, euler_char, homology_ranks, homology_ranks_with, RankMethod};
use nucleus_lab::graph::{Multigraph, VertexSet};

pub fn run_example() -> nucleus_lab::Result<()> {
    let k4 = Multigraph::complete(4);
    for bits in [0b0000, 0b0001, 0b0011, 0b1111] {
        let u = VertexSet(bits);
        let cx = build_complex(&k4, u)?;
        let h = homology_ranks(&cx)?;
        let exact = homology_ranks_with(&cx, RankMethod::Exact)?;
        assert_eq!(h, exact);
        assert_eq!(h.euler_poincare(), euler_char(&cx));
        match h.concentrated_in() {
            Some(d) => println!("K4, U = {u}: rank {} in dimension {d}", h.rank(d)),
            None if h.ranks.is_empty() => println!("K4, U = {u}: acyclic"),
            None => println!("K4, U = {u}: ranks {:?}", h.ranks),
        }
    }

    let sphere = build_complex(&Multigraph::parallel_k2(3), VertexSet::EMPTY)?;
    println!("3K2, U = {{}}: {:?}", homology_ranks(&sphere)?.ranks);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("homology");
}
