//! Single-cell flat-band values for small cells, with the graphs that realize them.

use flatband::singlecell::{eigen_table, enumerate_single_cell};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for nu in 1..=max {
        let set = enumerate_single_cell(nu).unwrap();
        let values: Vec<String> = set.sorted_values().iter().map(|v| v.to_string()).collect();
        println!("nu = {nu}: {{{}}}", values.join(", "));
    }
    println!("\n{}", eigen_table(4));
    let set = enumerate_single_cell(3).unwrap();
    for v in &set.values {
        let w = &v.witness;
        println!("{} first at nu={}: from {} with eigenvector {:?}", v.value, v.introduced_at, w.source, w.eigenvector.cells());
    }
}
