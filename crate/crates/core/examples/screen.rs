//! The two-vertex combinatorial screen against the exact detector.

use flatband::catalog;
use flatband::detect_flat_bands;
use flatband::screen::screen_nu2;

fn main() {
    for name in ["honeycomb", "ladder", "double-chain-rungs", "double-chain-diagonals", "five-cell-chain", "sheared-chains"] {
        let g = catalog::by_name(name).unwrap();
        let exact: Vec<String> = detect_flat_bands(&g).unwrap().values().iter().map(|v| v.to_string()).collect();
        match screen_nu2(&g) {
            Ok(r) => println!("{name:<24} {:<60} exact {:?}", r.to_json().to_string(), exact),
            Err(e) => println!("{name:<24} refused: {e}"),
        }
    }
}
