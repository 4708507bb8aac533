//! Numeric band structure on a grid, written as CSV, next to the exact answer.

use flatband::bands::{sample_bands, torus_spectrum};
use flatband::{catalog, detect_flat_bands};

fn main() -> std::io::Result<()> {
    let g = catalog::creutz_ladder();
    let sample = sample_bands(&g, 64);
    for b in &sample.bands {
        println!("band {}: [{:+.6}, {:+.6}] flat={}", b.index + 1, b.min, b.max, b.flat);
    }
    println!("exact flat values: {:?}", detect_flat_bands(&g).unwrap().values().iter().map(|v| v.to_string()).collect::<Vec<_>>());
    let torus = torus_spectrum(&g, 4);
    println!("torus N=4 spectrum: {:?}", torus.iter().map(|x| format!("{:.3}", x)).collect::<Vec<_>>());
    let out = std::env::temp_dir().join("creutz-bands.csv");
    std::fs::write(&out, sample.to_csv())?;
    println!("wrote {}", out.display());
    Ok(())
}
