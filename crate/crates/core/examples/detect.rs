//! Exact flat bands of every bundled graph, or of the files given on the command line.
//!
//!     cargo run --example detect -- examples/graphs/creutz.json

use flatband::catalog::BUNDLED_FILES;
use flatband::io::read_graph;
use flatband::{char_poly, detect_flat_bands, floquet::coefficient_gcd};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let paths: Vec<String> = if args.is_empty() {
        BUNDLED_FILES.iter().map(|(f, _)| format!("{}/examples/graphs/{}.json", env!("CARGO_MANIFEST_DIR"), f)).collect()
    } else {
        args
    };
    for path in paths {
        let g = read_graph(&path)?;
        let name = std::path::Path::new(&path).file_stem().unwrap().to_string_lossy().into_owned();
        match detect_flat_bands(&g) {
            Ok(report) => {
                let bands: Vec<String> = report.flat_bands.iter().map(|b| format!("{} (x{})", b.value, b.multiplicity)).collect();
                println!("{:<22} nu={} d={}  gcd = {:<16} flat: [{}]", name, g.nu(), g.dim(), coefficient_gcd(&char_poly(&g)).fmt_var("λ"), bands.join(", "));
            }
            Err(e) => println!("{:<22} {}", name, e),
        }
    }
    Ok(())
}
