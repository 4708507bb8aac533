//! How the on-site potential switches flat bands on and off.

use flatband::catalog;
use flatband::perturbation::{coefficient_system, detect_with_potential, empty_locus_certificate, format_potential, nu2_locus};
use flatband_exact::BigRational;

fn main() {
    let honeycomb = catalog::honeycomb();
    let cs = coefficient_system(&honeycomb);
    println!("honeycomb variables {:?}", cs.var_names());
    println!("honeycomb: no potential gives a flat band, certificate offset {:?}", empty_locus_certificate(&cs));

    let saw = catalog::sawtooth();
    let locus = nu2_locus(&saw).unwrap();
    println!("\nsawtooth locus: {locus}");
    for line in locus.lines() {
        for q0 in [-1, 0, 3] {
            let q0 = BigRational::from_integer(q0.into());
            let q = line.potential_at(&q0).unwrap();
            let report = detect_with_potential(&saw, &q).unwrap();
            println!("  Q = ({})  predicted {}  detected {:?}", format_potential(&q), line.flat_value_at(&q0), report.values().iter().map(|v| v.to_string()).collect::<Vec<_>>());
        }
    }

    let three = catalog::three_chain();
    let q: Vec<BigRational> = ["1/2", "7/3", "17/12"].iter().map(|s| s.parse().unwrap()).collect();
    let report = detect_with_potential(&three, &q).unwrap();
    println!("\nthree-chain at Q = ({}): {:?}", format_potential(&q), report.values().iter().map(|v| v.to_string()).collect::<Vec<_>>());
}
