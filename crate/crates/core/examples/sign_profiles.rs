// Predicting where Elser numbers vanish from the block structure alone, then
// confirming by direct summation.

use nucleus_lab::graph::Multigraph;
use nucleus_lab::nucleus::elser_brute;
use nucleus_lab::structure::predict_sign_profile;

pub fn run_example() -> nucleus_lab::Result<()> {
    let graphs = [
        ("K4", Multigraph::complete(4)),
        ("P4", Multigraph::path(4)),
        ("K_1,4", Multigraph::star(4)),
        ("paw", Multigraph::from_pairs(&[(0, 1), (1, 2), (0, 2), (2, 3)])?),
    ];
    for (name, g) in &graphs {
        let p = predict_sign_profile(g)?;
        let values: Vec<String> = (0..=5).map(|k| elser_brute(g, k).map(|v| v.to_string())).collect::<Result<_, _>>()?;
        println!(
            "{name:>6}: 2-connected {}, leaf blocks {}, nonzero from k = {}; els = [{}]",
            p.two_connected,
            p.leaf_blocks,
            p.threshold,
            values.join(", ")
        );
        for k in 0..=5 {
            assert_eq!(elser_brute(g, k)?.sign(), sign_of(p.sign(k)));
        }
    }
    Ok(())
}

fn sign_of(o: std::cmp::Ordering) -> num_bigint::Sign {
    match o {
        std::cmp::Ordering::Less => num_bigint::Sign::Minus,
        std::cmp::Ordering::Equal => num_bigint::Sign::NoSign,
        std::cmp::Ordering::Greater => num_bigint::Sign::Plus,
    }
}

#[allow(dead_code)]
fn main() {
    run_example().expect("sign profiles");
}
