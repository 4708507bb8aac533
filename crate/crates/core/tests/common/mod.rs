#![allow(dead_code)]

use flatband::catalog;
use flatband::finite::{enumerate_connected_graphs, FiniteGraph};
use flatband::generators::{cartesian_flatband, cone_periodize};
use flatband::{EdgeSpec, PeriodicGraph};
use flatband_exact::{BigRational, Gaussian};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn offsets(dim: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out.into_iter().flat_map(|p| (-max..=max).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

/// Every canonical edge slot with offsets in `[-max, max]^dim`.
pub fn edge_slots(nu: usize, dim: usize, max: i64) -> Vec<EdgeSpec> {
    let mut slots = Vec::new();
    for i in 0..nu {
        for j in i..nu {
            for k in offsets(dim, max) {
                let e = EdgeSpec::new(i, j, k.clone());
                if (i != j || k.iter().any(|&x| x != 0)) && e.is_canonical() {
                    slots.push(e);
                }
            }
        }
    }
    slots
}

/// Random connected graph with unit weights and zero potential.
pub fn random_unit_graph(rng: &mut StdRng, nu: usize, dim: usize, max: i64) -> PeriodicGraph {
    let slots = edge_slots(nu, dim, max);
    loop {
        let count = rng.gen_range(nu + dim - 1..=(nu + dim + 3).min(slots.len()));
        let edges: Vec<EdgeSpec> = slots.choose_multiple(rng, count).cloned().collect();
        let g = PeriodicGraph::new(nu, dim, edges);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random connected graph, sometimes with non-unit real or Gaussian weights and small potentials.
pub fn random_weighted_graph(rng: &mut StdRng, nu: usize, dim: usize, max: i64) -> PeriodicGraph {
    let g = random_unit_graph(rng, nu, dim, max);
    if rng.gen_bool(0.5) {
        return g;
    }
    let weights = [(1, 0), (2, 0), (-1, 0), (0, 1), (1, 1), (1, -2)];
    let edges = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = *weights.choose(rng).unwrap();
            EdgeSpec::weighted(e.from, e.to, e.offset.clone(), Gaussian::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into())))
        })
        .collect();
    let potential = (0..nu).map(|_| BigRational::from_integer(rng.gen_range(-1..=1).into())).collect();
    PeriodicGraph::new(nu, dim, edges).with_potential(potential)
}

pub fn random_perm(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_connected_finite(rng: &mut StdRng, n: usize) -> FiniteGraph {
    enumerate_connected_graphs(n).choose(rng).unwrap().clone()
}

/// Flat-band instances produced by the generators from random finite graphs.
pub fn generator_instances(count: usize, seed: u64) -> Vec<PeriodicGraph> {
    let mut rng = rng(seed);
    let bases: Vec<PeriodicGraph> = vec![
        catalog::double_chain_rungs(),
        catalog::double_chain_diagonals(),
        catalog::sheared_chains(),
        catalog::five_cell_chain(),
        catalog::lieb_like_chain(),
        catalog::twin_pendants(),
    ];
    let regular: Vec<FiniteGraph> = (2..=6).flat_map(enumerate_connected_graphs).filter(|g| g.is_regular()).collect();
    let mut out = Vec::new();
    while out.len() < count {
        if rng.gen_bool(0.35) {
            out.push(cone_periodize(regular.choose(&mut rng).unwrap()).unwrap().graph);
        } else {
            let base = bases.choose(&mut rng).unwrap();
            let n = rng.gen_range(1..=3);
            if let Ok(gen) = cartesian_flatband(base, &random_connected_finite(&mut rng, n)) {
                out.push(gen.graph);
            }
        }
    }
    out
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn random_rational(rng: &mut StdRng) -> BigRational {
    rational(rng.gen_range(-20..=20), rng.gen_range(1..=7))
}

/// Bundled corpus: every catalog graph except the one whose quotient does not generate the lattice.
pub fn corpus() -> Vec<(&'static str, PeriodicGraph)> {
    catalog::all().into_iter().filter(|(_, g)| g.is_connected()).collect()
}
