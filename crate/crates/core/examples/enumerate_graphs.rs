// Exhaustive enumeration of small connected graphs, labeled and up to
// isomorphism.

use nucleus_lab::graph::{connected_graphs, to_text};

pub fn run_example() -> nucleus_lab::Result<()> {
    for n in 1..=6 {
        let labeled = connected_graphs(n, false)?.count();
        let classes = connected_graphs(n, true)?.count();
        println!("n={n}: {labeled:>6} labeled, {classes:>4} classes");
    }
    println!("the two connected graphs on three vertices, canonically labeled:");
    for g in connected_graphs(3, true)? {
        println!("{}", to_text(&g)?.trim_end().replace('\n', "; "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("enumeration");
}
