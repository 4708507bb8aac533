//! Local symmetries of the pyrochlore strip and the flat bands they force.

use flatband::catalog;
use flatband::eigvec::verify_eigenvector;
use flatband::symmetry::{find_local_symmetries, symmetry_flat_bands, SymmetryMode};

fn main() {
    for (name, g) in [("pyrochlore-strip", catalog::pyrochlore_strip()), ("ladder", catalog::ladder())] {
        for mode in [SymmetryMode::Strict, SymmetryMode::Equitable] {
            let syms = find_local_symmetries(&g, mode).unwrap();
            println!("{name} {:?}: {} symmetries", mode, syms.len());
            for s in syms {
                println!("  {s}  orbits={}", s.orbit_count());
                for band in symmetry_flat_bands(&g, &s).unwrap() {
                    let ok = band.eigenvectors.iter().all(|v| verify_eigenvector(&g, v));
                    println!("    λ = {}  vectors={}  verified={}", band.value, band.eigenvectors.len(), ok);
                }
            }
        }
    }
}
