// A small exhaustive sweep with the homology concentration histogram.

use nucleus_lab::verify::{sweep, SweepOptions};

pub fn run_example() -> nucleus_lab::Result<()> {
    let opts = SweepOptions { nmax: 5, kmax: 4, dedup: true, multigraph_samples: 20, homology: true, ..Default::default() };
    let summary = sweep(&opts)?;
    print!("{}", summary.to_text());
    assert_eq!(summary.failures, 0);
    let h = summary.histogram.expect("homology was requested");
    assert!(h.multi_u_at_cyclomatic_minus_one());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("sweep");
}
