// Driving the command-line front end in-process.

use nucleus_lab::cli;

pub fn run_example() -> nucleus_lab::Result<()> {
    let commands: [&[&str]; 4] = [
        &["nucleus-lab", "els", "--graph", "K4", "--k", "0..4"],
        &["nucleus-lab", "complex", "--graph", "C3", "--U", "0,1", "--euler"],
        &["nucleus-lab", "predict", "--graph", "P5"],
        &["nucleus-lab", "els", "--graph", "C4", "--k", "2", "--json"],
    ];
    for args in commands {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(args.iter().copied(), &mut out, &mut err);
        println!("$ {}  (exit {code})", args[1..].join(" "));
        print!("{}", String::from_utf8_lossy(&out));
        assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli");
}
