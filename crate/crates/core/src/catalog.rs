//! Named example graphs. The same graphs ship as JSON under `examples/graphs/`.

use flatband_exact::{BigRational, Gaussian, Ring};

use crate::graph::{EdgeSpec, PeriodicGraph};

fn e1(a: usize, b: usize, k: i64) -> EdgeSpec {
    EdgeSpec::new(a, b, vec![k])
}

fn e2(a: usize, b: usize, k: [i64; 2]) -> EdgeSpec {
    EdgeSpec::new(a, b, k.to_vec())
}

/// Two chains joined by three rungs per cell pair; flat band -1 with eigenvector `(1, -1)` on one cell.
pub fn double_chain_rungs() -> PeriodicGraph {
    PeriodicGraph::new(2, 1, vec![e1(0, 0, 1), e1(1, 1, 1), e1(0, 1, 0), e1(0, 1, 1), e1(0, 1, -1)])
}

/// Two chains with diagonal couplings only; flat band 0.
pub fn double_chain_diagonals() -> PeriodicGraph {
    PeriodicGraph::new(2, 1, vec![e1(0, 0, 1), e1(1, 1, 1), e1(0, 1, 1), e1(0, 1, -1)])
}

/// Chains coupled at offsets 0 and 2; flat band 0 with eigenvector `(1, -z^-1)`.
pub fn sheared_chains() -> PeriodicGraph {
    PeriodicGraph::new(2, 1, vec![e1(0, 0, 1), e1(1, 1, 1), e1(0, 1, 0), e1(0, 1, 2)])
}

/// Creutz ladder with imaginary chain hoppings; both bands flat at -2 and 2.
pub fn creutz_ladder() -> PeriodicGraph {
    let i = Gaussian::i();
    PeriodicGraph::new(
        2,
        1,
        vec![EdgeSpec::weighted(0, 0, vec![1], i.clone()), EdgeSpec::weighted(1, 1, vec![1], i.neg()), e1(0, 1, 1), e1(0, 1, -1)],
    )
}

/// One-dimensional pyrochlore strip; flat bands -2 and 0.
pub fn pyrochlore_strip() -> PeriodicGraph {
    PeriodicGraph::new(
        4,
        1,
        vec![
            e1(0, 1, 0),
            e1(2, 3, 0),
            e1(0, 2, -1),
            e1(1, 3, -1),
            e1(0, 3, 0),
            e1(0, 3, -1),
            e1(1, 2, 0),
            e1(1, 2, -1),
        ],
    )
}

/// Ladder; no flat bands.
pub fn ladder() -> PeriodicGraph {
    PeriodicGraph::new(2, 1, vec![e1(0, 0, 1), e1(1, 1, 1), e1(0, 1, 0)])
}

/// Cartesian product of the integer line with the 4-cycle.
pub fn line_times_c4() -> PeriodicGraph {
    let mut edges: Vec<EdgeSpec> = (0..4).map(|v| e1(v, v, 1)).collect();
    edges.extend([e1(0, 1, 0), e1(1, 2, 0), e1(2, 3, 0), e1(0, 3, 0)]);
    PeriodicGraph::new(4, 1, edges)
}

/// Honeycomb lattice; no flat bands.
pub fn honeycomb() -> PeriodicGraph {
    PeriodicGraph::new(2, 2, vec![e2(0, 1, [0, 0]), e2(0, 1, [-1, 0]), e2(0, 1, [0, -1])])
}

/// Sawtooth chain with zero potential; a flat band appears for the potential `(-1, 0)`.
pub fn sawtooth() -> PeriodicGraph {
    PeriodicGraph::new(2, 1, vec![e1(0, 1, 0), e1(0, 1, -1), e1(1, 1, 1)])
}

/// Chains with range-3 and range-1 self couplings; flat band -2 whose raw eigenvector spans five cells.
pub fn five_cell_chain() -> PeriodicGraph {
    PeriodicGraph::new(2, 1, vec![e1(0, 0, 3), e1(1, 1, 1), e1(0, 1, 1), e1(0, 1, -1), e1(0, 1, 2), e1(0, 1, -2)])
}

/// Three-vertex chain where the middle vertex hangs off one site; flat band 0.
pub fn lieb_like_chain() -> PeriodicGraph {
    PeriodicGraph::new(3, 1, vec![e1(0, 1, 0), e1(0, 1, 1), e1(0, 1, -1), e1(1, 2, 0)])
}

/// Two pendant vertices on a chain site; flat band 0 supported on one cell.
pub fn twin_pendants() -> PeriodicGraph {
    PeriodicGraph::new(3, 1, vec![e1(0, 2, 0), e1(1, 2, 0), e1(2, 2, 1)])
}

/// Two vertices attached to consecutive chain sites; flat band 0.
pub fn twin_bridges() -> PeriodicGraph {
    PeriodicGraph::new(3, 1, vec![e1(0, 2, 0), e1(0, 2, -1), e1(1, 2, 0), e1(1, 2, -1), e1(2, 2, 1)])
}

/// Three coupled chains; the potential `(Q1, Q2, (Q1 + Q2) / 2)` produces a flat band.
pub fn three_chain() -> PeriodicGraph {
    PeriodicGraph::new(
        3,
        1,
        vec![e1(0, 0, 1), e1(1, 1, 1), e1(0, 1, 1), e1(0, 1, -1), e1(0, 2, 1), e1(0, 2, -1), e1(1, 2, 1), e1(1, 2, -1)],
    )
}

/// Connected quotient whose cycle labels only generate `2Z`.
pub fn even_sublattice() -> PeriodicGraph {
    PeriodicGraph::new(2, 1, vec![e1(0, 0, 2), e1(1, 1, 4), e1(0, 1, 1), e1(0, 1, -1), e1(0, 1, 3), e1(0, 1, -3)])
}

pub fn all() -> Vec<(&'static str, PeriodicGraph)> {
    vec![
        ("double-chain-rungs", double_chain_rungs()),
        ("double-chain-diagonals", double_chain_diagonals()),
        ("sheared-chains", sheared_chains()),
        ("creutz-ladder", creutz_ladder()),
        ("pyrochlore-strip", pyrochlore_strip()),
        ("ladder", ladder()),
        ("line-times-c4", line_times_c4()),
        ("honeycomb", honeycomb()),
        ("sawtooth", sawtooth()),
        ("five-cell-chain", five_cell_chain()),
        ("lieb-like-chain", lieb_like_chain()),
        ("twin-pendants", twin_pendants()),
        ("twin-bridges", twin_bridges()),
        ("three-chain", three_chain()),
        ("even-sublattice", even_sublattice()),
    ]
}

/// File stems under `examples/graphs/` and the catalog entry each one holds.
pub const BUNDLED_FILES: &[(&str, &str)] = &[
    ("fig1-left", "double-chain-rungs"),
    ("fig1-right", "double-chain-diagonals"),
    ("creutz", "creutz-ladder"),
    ("pyrochlore-1d", "pyrochlore-strip"),
    ("ladder", "ladder"),
    ("honeycomb", "honeycomb"),
    ("sawtooth-fig10", "sawtooth"),
    ("sheared-fig7", "sheared-chains"),
    ("fivecell-fig8", "five-cell-chain"),
    ("lieb-like-fig9-right", "lieb-like-chain"),
    ("korsa-counterexample", "three-chain"),
    ("twin-pendants", "twin-pendants"),
    ("twin-bridges", "twin-bridges"),
    ("even-sublattice", "even-sublattice"),
    ("line-times-c4", "line-times-c4"),
];

pub fn by_name(name: &str) -> Option<PeriodicGraph> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}

/// The potential that makes the sawtooth chain flat.
pub fn sawtooth_flat_potential() -> Vec<BigRational> {
    vec![BigRational::from_int(-1), BigRational::zero()]
}
