//! One line per acceptance criterion. Exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::*;
use flatband::bands::{sample_bands, torus_count, torus_spectrum};
use flatband::catalog;
use flatband::eigvec::{cayley_hamilton_column, support_bound, support_extent, synthesize_eigenvector, unfold, verify_eigenvector};
use flatband::finite::FiniteGraph;
use flatband::generators::{cartesian_flatband, cone_periodize, no_flatband_product, ProductKind};
use flatband::perturbation::{coefficient_system, detect_with_potential, empty_locus_certificate, nu2_locus};
use flatband::screen::{othervap, screen_nu2, vap_candidates, IndexSets, ScreenResult};
use flatband::singlecell::enumerate_single_cell;
use flatband::symmetry::{find_local_symmetries, symmetry_flat_bands, LocalSymmetry, SymmetryMode};
use flatband::{detect_flat_bands, EdgeSpec, FlatBandError, PeriodicGraph};
use flatband_exact::{real_roots, BigRational, RealAlgebraic};
use rand::Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg.into()) }
}

fn flat(g: &PeriodicGraph) -> Vec<(RealAlgebraic, usize)> {
    detect_flat_bands(g).unwrap().flat_bands.into_iter().map(|b| (b.value, b.multiplicity)).collect()
}

fn names(g: &PeriodicGraph) -> Vec<String> {
    flat(g).iter().map(|(v, _)| v.to_string()).collect()
}

fn minpolys(vals: &[RealAlgebraic]) -> BTreeSet<(Vec<String>, String)> {
    vals.iter().map(|v| (v.minpoly().coeffs().iter().map(|c| c.to_string()).collect(), v.to_string())).collect()
}

fn in_window(g: &PeriodicGraph, cells: &[Vec<i64>]) -> bool {
    let b = support_bound(g);
    cells.iter().all(|c| c.iter().zip(&b).all(|(x, h)| x.abs() <= *h))
}

fn enumeration() -> Outcome {
    let golden = |s: &[&str]| -> Vec<RealAlgebraic> {
        s.iter()
            .map(|x| match *x {
                "phi+" | "phi-" => {
                    let roots = real_roots(&flatband_exact::UniPoly::new(vec![-BigRational::from_integer(1.into()), BigRational::from_integer(1.into()), BigRational::from_integer(1.into())]));
                    roots[if *x == "phi-" { 0 } else { 1 }].0.clone()
                }
                n => RealAlgebraic::from_int(n.parse().unwrap()),
            })
            .collect()
    };
    let small = golden(&["0", "-1"]);
    let f45 = golden(&["0", "1", "-1", "-2", "phi+", "phi-"]);
    let start = Instant::now();
    for (nu, want) in [(2, &small), (3, &small), (4, &f45), (5, &f45)] {
        let got = enumerate_single_cell(nu).map_err(|e| e.to_string())?.sorted_values();
        check(minpolys(&got) == minpolys(want), format!("nu={nu}: got {:?}", got.iter().map(|v| v.to_string()).collect::<Vec<_>>()))?;
    }
    let t = start.elapsed().as_secs_f64();
    check(t < 60.0, format!("enumeration took {t:.1}s"))?;
    Ok(format!("F2=F3={{0,-1}}, F4=F5 six values, {t:.2}s"))
}

fn catalogue() -> Outcome {
    let expect: [(&str, PeriodicGraph, &[&str]); 6] = [
        ("rungs", catalog::double_chain_rungs(), &["-1"]),
        ("diagonals", catalog::double_chain_diagonals(), &["0"]),
        ("creutz", catalog::creutz_ladder(), &["-2", "2"]),
        ("pyrochlore", catalog::pyrochlore_strip(), &["-2", "0"]),
        ("sheared", catalog::sheared_chains(), &["0"]),
        ("five-cell", catalog::five_cell_chain(), &["-2"]),
    ];
    for (name, g, want) in &expect {
        check(names(g) == *want, format!("{name}: {:?}", names(g)))?;
    }
    let creutz = sample_bands(&catalog::creutz_ladder(), 32);
    check(creutz.bands.iter().all(|b| b.max - b.min < 1e-9), "creutz bands not numerically flat")?;
    let sheared = catalog::sheared_chains();
    let v = unfold(&synthesize_eigenvector(&sheared, &RealAlgebraic::from_int(0)).unwrap());
    check(verify_eigenvector(&sheared, &v) && support_extent(&v) == [2], "sheared eigenvector is not a verified 2-cell vector")?;
    let five = catalog::five_cell_chain();
    let raw = unfold(&cayley_hamilton_column(&five, &RealAlgebraic::from_int(-2)).unwrap());
    check(verify_eigenvector(&five, &raw) && support_extent(&raw) == [5] && in_window(&five, &raw.cells()), "five-cell eigenvector")?;
    let saw = catalog::sawtooth();
    check(names(&saw).is_empty(), "sawtooth flat at Q=0")?;
    let r = detect_with_potential(&saw, &catalog::sawtooth_flat_potential()).unwrap();
    check(r.values() == [RealAlgebraic::from_int(-2)], "sawtooth at (-1,0)")?;
    Ok("rungs, diagonals, creutz, pyrochlore, sheared, five-cell, sawtooth".into())
}

fn eigenvectors() -> Outcome {
    let mut graphs: Vec<PeriodicGraph> = corpus().into_iter().map(|(_, g)| g).collect();
    let corpus_len = graphs.len();
    graphs.extend(generator_instances(100, 3));
    let mut bands = 0;
    for g in &graphs {
        for (v, _) in flat(g) {
            let e = unfold(&synthesize_eigenvector(g, &v).map_err(|e| e.to_string())?);
            check(verify_eigenvector(g, &e), format!("unverified eigenvector for {v}"))?;
            check(in_window(g, &e.cells()), format!("support of {v} outside window"))?;
            bands += 1;
        }
    }
    Ok(format!("{bands} bands over {corpus_len} corpus graphs and 100 generated instances"))
}

fn oracle() -> Outcome {
    let mut r = rng(4);
    let mut with_flat = 0;
    for k in 0..200 {
        let (nu, dim) = (r.gen_range(1..=3), r.gen_range(1..=2));
        let g = random_weighted_graph(&mut r, nu, dim, 2);
        let exact = flat(&g);
        let torus = torus_spectrum(&g, 4);
        let cells = 4usize.pow(dim as u32);
        let grid = sample_bands(&g, 32).flat_values(1e-7);
        for (v, m) in &exact {
            let x = v.to_f64();
            check(torus_count(&torus, x, 1e-7) >= m * cells, format!("graph {k}: torus misses {v}"))?;
            check(grid.iter().any(|(y, c)| (x - y).abs() < 1e-7 && c >= m), format!("graph {k}: grid misses {v}"))?;
        }
        for (y, _) in &grid {
            check(exact.iter().any(|(v, _)| (v.to_f64() - y).abs() < 1e-7), format!("graph {k}: grid flat at {y} but exact report empty there"))?;
        }
        with_flat += usize::from(!exact.is_empty());
    }
    Ok(format!("200 graphs, {with_flat} with flat bands, 0 disagreements"))
}

fn nu2_theory() -> Outcome {
    let mut r = rng(5);
    let (mut with_flat, mut certified) = (0, 0);
    let mut graphs: Vec<PeriodicGraph> = (0..20000).map(|k| random_unit_graph(&mut r, 2, 1 + k % 2, 2)).collect();
    graphs.extend([catalog::double_chain_rungs(), catalog::double_chain_diagonals(), catalog::sheared_chains(), catalog::five_cell_chain(), catalog::ladder(), catalog::honeycomb()]);
    for g in &graphs {
        let exact = flat(g);
        let s = IndexSets::of(g);
        for (v, _) in &exact {
            let l: i64 = v.as_rational().filter(|q| q.is_integer()).ok_or(format!("{v} is not an integer"))?.to_integer().try_into().unwrap();
            check(vap_candidates(&s).is_ok_and(|c| c.contains(&l)), format!("{l} violates the square-root formula"))?;
            check(othervap(&s) == Some(l), format!("{l} violates the closed form"))?;
            check((0..g.dim()).all(|t| s.degree_identity(t)), "degree identity fails")?;
        }
        match screen_nu2(g).map_err(|e| e.to_string())? {
            ScreenResult::NoFlatBand(c) => {
                check(exact.is_empty(), format!("certificate {c} but exact report nonempty"))?;
                certified += 1;
            }
            ScreenResult::Candidate(l) => check(exact.iter().all(|(v, _)| *v == RealAlgebraic::from_int(l)), "candidate contradicts detector")?,
        }
        with_flat += usize::from(!exact.is_empty());
    }
    check(with_flat >= 10, format!("only {with_flat} flat instances"))?;
    Ok(format!("{} graphs, {with_flat} with flat bands, {certified} certified empty", graphs.len()))
}

fn generators() -> Outcome {
    let gen = cartesian_flatband(&catalog::double_chain_diagonals(), &FiniteGraph::path(3)).map_err(|e| e.to_string())?;
    let want = ["-√2", "0", "√2"];
    check(gen.graph.nu() == 6 && names(&gen.graph) == want, format!("diagonals x P3: {:?}", names(&gen.graph)))?;
    check(gen.values().iter().map(|v| v.to_string()).collect::<Vec<_>>() == want, "claimed values differ")?;
    let cone = cone_periodize(&FiniteGraph::path(2)).map_err(|e| e.to_string())?;
    check(names(&cone.graph) == ["-1"], "cone(P2)")?;
    let line = PeriodicGraph::new(1, 1, vec![EdgeSpec::new(0, 0, vec![1])]);
    let ladder = no_flatband_product(&line, &FiniteGraph::path(2), ProductKind::Cartesian).map_err(|e| e.to_string())?;
    let zc4 = no_flatband_product(&line, &FiniteGraph::cycle(4), ProductKind::Cartesian).map_err(|e| e.to_string())?;
    check(ladder == catalog::ladder(), "ladder product differs from the ladder")?;
    check(flat(&ladder).is_empty() && flat(&zc4).is_empty(), "product has a flat band")?;
    Ok("diagonals x P3 = {-√2,0,√2} at nu=6; cone(P2) = {-1}; ladder and Z x C4 empty".into())
}

fn symmetry() -> Outcome {
    let g = catalog::pyrochlore_strip();
    let syms = find_local_symmetries(&g, SymmetryMode::Strict).map_err(|e| e.to_string())?;
    let sym = syms.iter().find(|s| s.to_string() == "(0 1)(2 3)").ok_or("(0 1)(2 3) not found")?;
    let bands = symmetry_flat_bands(&g, sym).map_err(|e| e.to_string())?;
    let vals: Vec<String> = bands.iter().map(|b| b.value.to_string()).collect();
    check(vals == ["-2", "0"], format!("bands {vals:?}"))?;
    check(bands.len() >= g.nu() - sym.orbit_count(), "fewer than nu - r bands")?;
    for b in &bands {
        check(b.eigenvectors.iter().all(|v| verify_eigenvector(&g, v) && v.cells().len() == 1), "eigenvector not single-cell and verified")?;
    }
    let ladder = catalog::ladder();
    let swap = LocalSymmetry::new(vec![1, 0], SymmetryMode::Equitable);
    check(!flatband::symmetry::is_local_symmetry(&ladder, &swap), "ladder swap accepted")?;
    check(find_local_symmetries(&ladder, SymmetryMode::Equitable).unwrap().is_empty(), "ladder has a symmetry")?;
    Ok("pyrochlore (0 1)(2 3) gives {-2, 0}; ladder swap rejected".into())
}

fn positive_weights(g: &PeriodicGraph) -> bool {
    g.edges().iter().all(|e| e.weight.is_real() && e.weight.re > BigRational::from_integer(0.into()))
}

fn perturbation() -> Outcome {
    let cert = empty_locus_certificate(&coefficient_system(&catalog::honeycomb()));
    check(cert.is_some(), "no honeycomb certificate")?;
    let saw = catalog::sawtooth();
    let locus = nu2_locus(&saw).map_err(|e| e.to_string())?;
    let q0 = BigRational::from_integer((-1).into());
    let hit = locus.lines().iter().any(|l| {
        l.gap() == RealAlgebraic::from_int(1) && l.potential_at(&q0) == Some(catalog::sawtooth_flat_potential()) && l.flat_value_at(&q0) == RealAlgebraic::from_int(-2)
    });
    check(hit, format!("sawtooth locus: {locus}"))?;
    let mut r = rng(8);
    for _ in 0..20 {
        let (a, b) = (random_rational(&mut r), random_rational(&mut r));
        let c = (&a + &b) / BigRational::from_integer(2.into());
        check(!detect_with_potential(&catalog::three_chain(), &[a, b, c]).unwrap().flat_bands.is_empty(), "three-chain triple without a flat band")?;
    }
    let mut graphs: Vec<PeriodicGraph> = corpus().into_iter().map(|(_, g)| g).filter(positive_weights).collect();
    graphs.extend(generator_instances(40, 9));
    graphs.extend((0..60).map(|k| random_unit_graph(&mut r, 1 + k % 4, 1 + k % 2, 2)));
    for g in &graphs {
        if let Some((v, _)) = flat(g).last() {
            let top = sample_bands(g, 16).bands.last().unwrap().max;
            check(v.to_f64() < top - 1e-6, format!("top band flat at {v}"))?;
        }
    }
    Ok(format!("honeycomb certificate z^{:?}; sawtooth line Q1 = Q0 + 1; 20 triples; top band never flat on {} graphs", cert.unwrap(), graphs.len()))
}

fn properties() -> Outcome {
    let sets: Vec<_> = (1..=6).map(|nu| enumerate_single_cell(nu).unwrap()).collect();
    for w in sets.windows(2) {
        check(w[0].sorted_values().iter().all(|v| w[1].contains(v)), format!("F_{} not inside F_{}", w[0].nu, w[1].nu))?;
    }
    for v in sets.iter().flat_map(|s| s.sorted_values()) {
        let mp = v.minpoly();
        let real: usize = real_roots(&mp.to_rational()).iter().map(|(_, m)| m).sum();
        check(mp.lc() == 1.into() && Some(real) == mp.degree(), format!("{v} is not a totally real algebraic integer"))?;
    }
    let mut r = rng(10);
    let mut graphs: Vec<PeriodicGraph> = corpus().into_iter().map(|(_, g)| g).collect();
    graphs.extend((0..40).map(|k| random_weighted_graph(&mut r, 1 + k % 3, 1 + k % 2, 2)));
    for g in &graphs {
        let base = flat(g);
        check(flat(&g.relabel(&random_perm(&mut r, g.nu()))) == base, "relabel changed the flat set")?;
        let by: Vec<i64> = (0..g.dim()).map(|_| r.gen_range(-2..=2)).collect();
        check(flat(&g.shift_cell(r.gen_range(0..g.nu()), &by)) == base, "shift changed the flat set")?;
    }
    let even = catalog::even_sublattice();
    check(!even.is_connected() && matches!(detect_flat_bands(&even), Err(FlatBandError::Disconnected)), "sublattice graph not classified disconnected")?;
    Ok(format!("F1..F6 monotone ({} values in F6), totally real integers, invariance on {} graphs, sublattice disconnected", sets[5].values.len(), graphs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("single-cell enumeration", enumeration),
        ("catalogue reproductions", catalogue),
        ("eigenvector soundness", eigenvectors),
        ("oracle equivalence", oracle),
        ("two-vertex theory", nu2_theory),
        ("generators", generators),
        ("local symmetry", symmetry),
        ("perturbation", perturbation),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.1}s)", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
