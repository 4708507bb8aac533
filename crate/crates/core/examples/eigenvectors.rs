//! Compactly supported eigenvectors for each flat band, checked exactly against the operator.

use flatband::catalog;
use flatband::detect_flat_bands;
use flatband::eigvec::{support_bound, support_extent, synthesize_eigenvector, unfold, verify_eigenvector};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "five-cell-chain".into());
    let g = catalog::by_name(&name).unwrap_or_else(|| panic!("unknown catalog graph {name}"));
    println!("{name}: support bound per axis {:?}", support_bound(&g));
    for band in detect_flat_bands(&g).expect("connected graph").flat_bands {
        let v = unfold(&synthesize_eigenvector(&g, &band.value).expect("flat value"));
        println!("\nλ = {}  cells {:?}  extent {:?}  verified: {}", band.value, v.cells(), support_extent(&v), verify_eigenvector(&g, &v));
        for ((vertex, cell), x) in &v.values {
            println!("  v{vertex} @ {:?}: {}", cell, x.fmt_var("λ"));
        }
    }
}
