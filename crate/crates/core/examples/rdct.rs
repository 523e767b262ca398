// Restricted deletion/contraction trees: every leaf is a tree minor or has a
// loop, and the tree leaves alone determine the Euler characteristic.

use nucleus_lab::graph::{parse_graph, VertexSet};
use nucleus_lab::nucleus::elser_brute;
use nucleus_lab::recurrence::{build_rdct, els0_from_rdct, euler_dc, LeafKind};

pub fn run_example() -> nucleus_lab::Result<()> {
    // a square with one diagonal
    let g = parse_graph("0 1\n1 2\n2 3\n0 3\n0 2")?;
    let u: VertexSet = [1, 2].into_iter().collect();
    let tree = build_rdct(&g, u)?;
    print!("{}", tree.outline());

    let leaves = tree.leaves();
    let loopy = leaves.iter().filter(|l| l.kind == LeafKind::Loopy).count();
    println!("{} leaves, {loopy} with loops", leaves.len());
    assert_eq!(tree.euler_from_leaves(), euler_dc(&g, u)?);
    println!("chi from tree leaves = {}", tree.euler_from_leaves());

    let at_empty = build_rdct(&g, VertexSet::EMPTY)?;
    assert_eq!(els0_from_rdct(&at_empty), elser_brute(&g, 0)?);
    println!("els_0 = -(K2 leaves) = {}", els0_from_rdct(&at_empty));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("rdct");
}
