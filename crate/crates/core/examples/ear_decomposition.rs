// Ear decompositions along a prescribed spanning tree, and legal orders for
// reaching any tree minor of a 2-connected graph.

use nucleus_lab::graph::{spanning_tree, EdgeSet, Multigraph};
use nucleus_lab::structure::{check_ear_decomposition, ear_decomposition, minor, realize_tree_minor, replay_moves};

pub fn run_example() -> nucleus_lab::Result<()> {
    let k4 = Multigraph::complete(4);
    let star: EdgeSet = k4.edges().iter().filter(|e| e.u == 0).map(|e| e.id).collect();
    let d = ear_decomposition(&k4, star)?;
    for (i, ear) in d.ears.iter().enumerate() {
        println!("R{}: vertices {:?}, edges {:?}", i + 1, ear.vertices, ear.edges);
    }
    check_ear_decomposition(&k4, &d).expect("valid decomposition");

    // contract two star edges and delete the triangle opposite vertex 0
    let t = spanning_tree(&k4)?;
    let c = EdgeSet(0b000011);
    let deleted = k4.edge_set().difference(t);
    let moves = realize_tree_minor(&k4, c, deleted)?;
    println!("moves: {moves:?}");
    let reached = replay_moves(&k4, &moves)?;
    assert_eq!(reached, minor(&k4, c, deleted)?);
    println!("reached a tree on {} vertices", reached.vertex_count());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ear decomposition");
}
