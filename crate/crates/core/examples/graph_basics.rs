// Parsing multigraphs, taking minors and reading off cut structure.

use nucleus_lab::graph::{block_cutpoint, cut_analysis, parse_graph, to_text, VertexSet};

pub fn run_example() -> nucleus_lab::Result<()> {
    // a triangle with a pendant edge (the paw)
    let paw = parse_graph("0 1\n1 2\n0 2\n2 3")?;
    let cuts = cut_analysis(&paw);
    println!("cut vertices {}, cut edges {}", cuts.cut_vertices, cuts.cut_edges);
    assert_eq!(cuts.cut_vertices, VertexSet::singleton(2));

    let blocks = block_cutpoint(&paw)?;
    println!("{} blocks, {} leaf blocks", blocks.blocks.len(), blocks.leaf_count);

    // contracting edge 0 merges vertices 0 and 1 into 0 and carries U along
    let u: VertexSet = [1, 3].into_iter().collect();
    let (contracted, mapped) = paw.contract_edge(0, u)?;
    println!("paw / e0 with U = {u} -> U = {mapped}");
    for e in contracted.edges() {
        println!("  edge {}: {} - {}", e.id, e.u, e.v);
    }
    assert!(!contracted.is_simple());

    // ids are kept through minors; compact them before writing text
    println!("{}", to_text(&contracted.compacted())?.trim_end().replace('\n', "; "));

    let deleted = paw.delete_edge(1)?;
    println!("paw \\ e1 is a tree: {}", deleted.is_tree());

    let (dep, removed) = contracted.deparallelize();
    println!("Dep drops {removed} parallel edge(s), leaving {} edges", dep.edge_count());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("graph basics");
}
