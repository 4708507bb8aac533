mod common;

use common::*;
use flatband::bands::{sample_bands, torus_count, torus_spectrum};
use flatband::catalog;
use flatband::eigvec::{synthesize_eigenvector, unfold, verify_eigenvector};
use flatband::finite::{enumerate_connected_graphs, exact_spectrum, FiniteGraph};
use flatband::generators::cartesian_product;
use flatband::perturbation::{coefficient_system, detect_with_potential, nu2_locus, verify_line, Nu2Locus};
use flatband::screen::{screen_nu2, IndexSets, ScreenResult};
use flatband::singlecell::enumerate_single_cell;
use flatband::symmetry::{find_local_symmetries, symmetry_flat_bands, SymmetryMode};
use flatband::{detect_flat_bands, PeriodicGraph};
use flatband_exact::{real_roots, BigRational, RealAlgebraic};
use proptest::prelude::*;
use rand::Rng;

fn values(g: &PeriodicGraph) -> Vec<(RealAlgebraic, usize)> {
    detect_flat_bands(g).unwrap().flat_bands.into_iter().map(|b| (b.value, b.multiplicity)).collect()
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn flat_set_survives_relabel_and_shift(seed in any::<u64>(), nu in 1usize..=3, dim in 1usize..=2) {
        let mut r = rng(seed);
        let g = random_weighted_graph(&mut r, nu, dim, 2);
        let base = values(&g);
        let perm = random_perm(&mut r, nu);
        prop_assert_eq!(&values(&g.relabel(&perm)), &base);
        let v = r.gen_range(0..nu);
        let by: Vec<i64> = (0..dim).map(|_| r.gen_range(-2..=2)).collect();
        let shifted = g.shift_cell(v, &by);
        prop_assert_eq!(shifted.is_connected(), g.is_connected());
        prop_assert_eq!(&values(&shifted), &base);
    }

    #[test]
    fn top_band_is_never_flat(seed in any::<u64>(), nu in 1usize..=4) {
        let mut r = rng(seed);
        let g = random_unit_graph(&mut r, nu, 1, 2);
        let top = sample_bands(&g, 32).bands.last().unwrap().max;
        if let Some((v, _)) = values(&g).last() {
            prop_assert!(v.to_f64() < top - 1e-6);
        }
    }

    #[test]
    fn flat_bands_agree_with_the_torus(seed in any::<u64>(), nu in 1usize..=3, dim in 1usize..=2) {
        let mut r = rng(seed);
        let g = random_weighted_graph(&mut r, nu, dim, 2);
        let torus = torus_spectrum(&g, 4);
        for (v, m) in values(&g) {
            prop_assert!(torus_count(&torus, v.to_f64(), 1e-7) >= m * 4usize.pow(dim as u32));
        }
    }

    #[test]
    fn screen_never_contradicts_detect(seed in any::<u64>(), dim in 1usize..=2) {
        let mut r = rng(seed);
        let g = random_unit_graph(&mut r, 2, dim, 2);
        let exact = values(&g);
        match screen_nu2(&g).unwrap() {
            ScreenResult::NoFlatBand(_) => prop_assert!(exact.is_empty()),
            ScreenResult::Candidate(l) => {
                prop_assert!(exact.iter().all(|(v, _)| *v == RealAlgebraic::from_int(l)));
            }
        }
    }

    #[test]
    fn two_vertex_flat_bands_obey_the_closed_forms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_unit_graph(&mut r, 2, 1, 3);
        for (v, _) in values(&g) {
            prop_assert!(v.is_integer());
            let s = IndexSets::of(&g);
            prop_assert!(s.degree_identity(0));
            let l = v.as_rational().unwrap().to_integer();
            prop_assert_eq!(&l * &l, (s.i01.len() as i64 - s.common() as i64).into());
            prop_assert_eq!(Some(l.try_into().unwrap()), flatband::screen::othervap(&s));
        }
    }

    #[test]
    fn locus_lines_hold_and_nothing_else_does(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_unit_graph(&mut r, 2, 1, 2);
        let locus = nu2_locus(&g).unwrap();
        let cs = coefficient_system(&g);
        let q0 = random_rational(&mut r);
        let gaps: Vec<RealAlgebraic> = locus.lines().iter().map(|l| l.gap()).collect();
        for line in locus.lines() {
            prop_assert!(verify_line(&cs, line));
            if let Some(q) = line.potential_at(&q0) {
                let found = detect_with_potential(&g, &q).unwrap().values();
                prop_assert!(found.contains(&line.flat_value_at(&q0)));
            }
        }
        if !matches!(locus, Nu2Locus::Degenerate(_)) {
            let far = gaps.iter().map(|x| x.to_f64().abs().ceil() as i64).max().unwrap_or(0) + 1 + r.gen_range(0..3);
            for off in [far, -far] {
                let q = vec![q0.clone(), &q0 + BigRational::from_integer(off.into())];
                prop_assert!(detect_with_potential(&g, &q).unwrap().flat_bands.is_empty());
            }
        }
    }

    #[test]
    fn symmetry_bands_are_detected(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = generator_instances(1, seed)[0].clone();
        let g = g.relabel(&random_perm(&mut r, g.nu()));
        let exact = values(&g);
        let mode = if r.gen_bool(0.5) { SymmetryMode::Strict } else { SymmetryMode::Equitable };
        for sym in find_local_symmetries(&g, mode).unwrap() {
            for band in symmetry_flat_bands(&g, &sym).unwrap() {
                let m = exact.iter().find(|(v, _)| *v == band.value).map(|(_, m)| *m);
                prop_assert!(m.is_some_and(|m| m >= band.eigenvectors.len()));
                prop_assert!(band.eigenvectors.iter().all(|v| verify_eigenvector(&g, v)));
            }
        }
    }

    #[test]
    fn cartesian_torus_spectrum_is_additive(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let nu = r.gen_range(1..=2);
        let base = random_weighted_graph(&mut r, nu, 1, 1);
        let gf = random_connected_finite(&mut r, n);
        let product = cartesian_product(&base, &gf);
        let mut sums: Vec<f64> = Vec::new();
        let mu: Vec<f64> = exact_spectrum(&gf).iter().flat_map(|p| std::iter::repeat(p.value.to_f64()).take(p.multiplicity)).collect();
        for x in torus_spectrum(&base, 4) {
            sums.extend(mu.iter().map(|m| x + m));
        }
        sums.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let got = torus_spectrum(&product, 4);
        prop_assert_eq!(got.len(), sums.len());
        prop_assert!(got.iter().zip(&sums).all(|(a, b)| (a - b).abs() < 1e-7));
    }

    #[test]
    fn equal_neighbourhood_potentials_keep_a_band(t in -30i64..30, s in -30i64..30, dt in 1i64..6, ds in 1i64..6) {
        let g = catalog::twin_pendants();
        let t = rational(t, dt);
        let q = vec![t.clone(), t.clone(), rational(s, ds)];
        prop_assert!(detect_with_potential(&g, &q).unwrap().values().contains(&RealAlgebraic::Rational(t)));
    }

    #[test]
    fn averaged_potential_keeps_the_three_chain_flat(a in -30i64..30, b in -30i64..30, d in 1i64..6) {
        let (q1, q2) = (rational(a, d), rational(b, d));
        let q3 = (&q1 + &q2) / BigRational::from_integer(2.into());
        prop_assert!(!detect_with_potential(&catalog::three_chain(), &[q1, q2, q3]).unwrap().flat_bands.is_empty());
    }
}

proptest! {
    #![proptest_config(config(16))]

    #[test]
    fn generated_eigenvectors_verify(seed in any::<u64>()) {
        for g in generator_instances(3, seed) {
            prop_assert!(g.validate().is_ok() && g.is_connected());
            for (v, _) in values(&g) {
                prop_assert!(verify_eigenvector(&g, &unfold(&synthesize_eigenvector(&g, &v).unwrap())));
            }
        }
    }
}

#[test]
fn locus_is_closed_along_a_sequence() {
    let g = catalog::sawtooth();
    let line = nu2_locus(&g).unwrap().lines()[0].clone();
    let limit = BigRational::from_integer((-1).into());
    for n in 1..=12i64 {
        let q0 = &limit + rational(1, n);
        assert!(!detect_with_potential(&g, &line.potential_at(&q0).unwrap()).unwrap().flat_bands.is_empty());
    }
    let at_limit = detect_with_potential(&g, &line.potential_at(&limit).unwrap()).unwrap();
    assert_eq!(at_limit.values(), vec![RealAlgebraic::from_int(-2)]);
}

#[test]
fn single_cell_sets_grow_and_are_totally_real_integers() {
    let sets: Vec<_> = (1..=6).map(|nu| enumerate_single_cell(nu).unwrap()).collect();
    for w in sets.windows(2) {
        assert!(w[0].sorted_values().iter().all(|v| w[1].contains(v)), "F_{} not inside F_{}", w[0].nu, w[1].nu);
    }
    for set in &sets {
        for v in &set.values {
            let mp = v.value.minpoly();
            assert_eq!(mp.lc(), 1.into(), "{} is not an algebraic integer", v.value);
            let q = mp.to_rational();
            let real: usize = real_roots(&q).iter().map(|(_, m)| m).sum();
            assert_eq!(Some(real), mp.degree(), "{} has a non-real conjugate", v.value);
            let w = &v.witness;
            assert!(values(&w.graph).iter().any(|(x, _)| *x == v.value));
            assert!(verify_eigenvector(&w.graph, &w.eigenvector));
            assert_eq!(w.eigenvector.cells().len(), 1);
        }
    }
}

#[test]
fn top_eigenvalue_is_never_admitted() {
    for n in 2..=5 {
        for fg in enumerate_connected_graphs(n) {
            let top = exact_spectrum(&fg).last().unwrap().value.clone();
            let pairs = flatband::singlecell::admissible_values(&fg);
            assert!(pairs.iter().all(|(p, _)| p.value != top), "{fg}");
        }
    }
}

#[test]
fn path_cycle_and_complete_graphs_parse() {
    assert_eq!(FiniteGraph::parse("K3").unwrap(), FiniteGraph::parse("C3").unwrap());
}
