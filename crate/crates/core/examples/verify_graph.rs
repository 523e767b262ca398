// Running every applicable consistency check on one graph, and replaying a
// witness.

use nucleus_lab::graph::Multigraph;
use nucleus_lab::recurrence::MinorJson;
use nucleus_lab::verify::{replay, verify_graph, CheckKind, Instance, Witness};

pub fn run_example() -> nucleus_lab::Result<()> {
    let g = Multigraph::from_pairs(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3), (1, 3)])?;
    let report = verify_graph(&g, 4)?;
    print!("{}", report.to_text());
    assert!(report.passed());

    // witnesses serialize to JSON and can be re-run later
    let w = Witness {
        check: CheckKind::PipelineAgreement,
        graph: MinorJson::from(&g),
        instance: Instance { k: Some(3), ..Default::default() },
        detail: String::new(),
    };
    let json = serde_json::to_string(&w).expect("witness serializes");
    let back: Witness = serde_json::from_str(&json).expect("witness parses");
    println!("replaying {json}: {:?}", replay(&back)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verify");
}
