//! The command-line interface driven in-process.

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/graphs");
    let runs: [&[&str]; 4] = [
        &["flatband", "detect", &format!("{dir}/fig1-left.json")],
        &["flatband", "screen2", &format!("{dir}/honeycomb.json")],
        &["flatband", "perturb", &format!("{dir}/sawtooth-fig10.json"), "--locus"],
        &["flatband", "enumerate", "--nu", "3"],
    ];
    for args in runs {
        println!("$ {}", args.join(" "));
        let code = flatband::cli::run_with(args.iter().copied(), &mut std::io::stdout(), &mut std::io::stderr());
        println!("exit {code}\n");
    }
}
