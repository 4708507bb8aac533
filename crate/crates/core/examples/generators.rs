//! Building periodic graphs with and without flat bands from finite graphs.

use flatband::catalog;
use flatband::detect_flat_bands;
use flatband::finite::FiniteGraph;
use flatband::generators::{cartesian_flatband, cone_periodize, no_flatband_product, ProductKind};
use flatband::PeriodicGraph;

fn show(label: &str, g: &PeriodicGraph, claimed: &[String]) {
    let found: Vec<String> = detect_flat_bands(g).unwrap().values().iter().map(|v| v.to_string()).collect();
    println!("{label:<28} nu={:<2} claimed {:?} detected {:?}", g.nu(), claimed, found);
}

fn main() {
    let diag = catalog::double_chain_diagonals();
    for spec in ["P2", "P3", "C4"] {
        let gen = cartesian_flatband(&diag, &FiniteGraph::parse(spec).unwrap()).unwrap();
        let claimed: Vec<String> = gen.values().iter().map(|v| v.to_string()).collect();
        show(&format!("diagonals x {spec}"), &gen.graph, &claimed);
    }
    for spec in ["P2", "C5", "K4"] {
        let gen = cone_periodize(&FiniteGraph::parse(spec).unwrap()).unwrap();
        let claimed: Vec<String> = gen.values().iter().map(|v| v.to_string()).collect();
        show(&format!("cone {spec}"), &gen.graph, &claimed);
    }
    let line = PeriodicGraph::new(1, 1, vec![flatband::EdgeSpec::new(0, 0, vec![1])]);
    let c4 = FiniteGraph::parse("C4").unwrap();
    show("Z cartesian C4", &no_flatband_product(&line, &c4, ProductKind::Cartesian).unwrap(), &[]);
    show("Z tensor K3", &no_flatband_product(&line, &FiniteGraph::parse("K3").unwrap(), ProductKind::Tensor).unwrap(), &[]);
}
