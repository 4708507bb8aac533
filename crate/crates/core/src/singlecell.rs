//! Flat bands carried by a single fundamental cell.
//!
//! `F_nu` is the set of values that occur as single-cell flat bands of some
//! connected periodic graph with `nu` vertices per cell. A value `l` of a finite
//! graph qualifies when some eigenvector `psi` and some nonzero 0/1 vector `delta`
//! satisfy `sum delta_i psi_i = 0`; the witness graph then couples the `delta`
//! vertices to their translates.

use std::fmt::Write as _;

use flatband_exact::{field_of, NumberFieldElement, RealAlgebraic, Ring};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::eigvec::{verify_eigenvector, CompactEigenvector};
use crate::error::FlatBandError;
use crate::finite::{enumerate_connected_graphs, exact_spectrum, ExactEigenpair, FiniteGraph};
use crate::generators::cartesian_flatband;
use crate::graph::{EdgeSpec, PeriodicGraph};
use crate::catalog;

pub const MAX_ENUMERATION_NU: usize = 6;

/// Whether vertices `i` and `j` have the same neighbourhoods apart from each other.
pub fn neighborhood_condition(g: &PeriodicGraph, i: usize, j: usize) -> Result<bool, FlatBandError> {
    let n = g.nu();
    for v in [i, j] {
        if v >= n {
            return Err(FlatBandError::OutOfRange { index: v, len: n });
        }
    }
    if i == j {
        return Err(FlatBandError::Precondition("vertices must differ".into()));
    }
    let h = g.hopping();
    let zero = vec![0; g.dim()];
    let mut hij = h[i][j].clone();
    hij.remove(&zero);
    let mut hji = h[j][i].clone();
    hji.remove(&zero);
    let others = (0..n).filter(|&r| r != i && r != j).all(|r| h[i][r] == h[j][r]);
    Ok(h[i][i] == h[j][j] && h[i][i] == hij && h[j][j] == hji && others)
}

/// The flat band forced by [`neighborhood_condition`], with eigenvector `e_i - e_j` on one cell.
///
/// `Q_i - w` when the two vertices share a cell edge of real weight `w`, and `Q_i` otherwise.
pub fn neighborhood_flat_band(g: &PeriodicGraph, i: usize, j: usize) -> Result<Option<CompactEigenvector>, FlatBandError> {
    if !neighborhood_condition(g, i, j)? || g.potential()[i] != g.potential()[j] {
        return Ok(None);
    }
    let w = g.hopping()[i][j].get(&vec![0; g.dim()]).cloned().unwrap_or_else(flatband_exact::Gaussian::zero);
    if !w.im.is_zero() {
        return Ok(None);
    }
    let value = RealAlgebraic::Rational(&g.potential()[i] - &w.re);
    let (modulus, _) = field_of(&value);
    let cell = vec![0; g.dim()];
    let values = [(i, NumberFieldElement::one()), (j, NumberFieldElement::one().neg())]
        .into_iter()
        .map(|(v, x)| ((v, cell.clone()), x.with_modulus(&modulus)))
        .collect();
    Ok(Some(CompactEigenvector { lambda: value, modulus, dim: g.dim(), values }))
}

/// An eigenvector with a vanishing subset sum.
#[derive(Clone, Debug)]
pub struct SubsetWitness {
    pub psi: Vec<NumberFieldElement>,
    pub delta: Vec<bool>,
}

fn subset_sum(psi: &[NumberFieldElement], delta: &[bool]) -> NumberFieldElement {
    psi.iter().zip(delta).filter(|(_, d)| **d).fold(NumberFieldElement::zero(), |acc, (x, _)| acc.add(x))
}

/// Searches the eigenspace for `psi != 0` and `delta != 0` in `{0,1}^n` with `sum delta_i psi_i = 0`.
///
/// In a space of dimension at least two the all-ones `delta` always works.
pub fn subset_zero_criterion(pair: &ExactEigenpair) -> Option<SubsetWitness> {
    let basis = &pair.basis;
    let n = basis.first()?.len();
    if basis.len() >= 2 {
        let delta = vec![true; n];
        let (s1, s2) = (subset_sum(&basis[0], &delta), subset_sum(&basis[1], &delta));
        let psi = if s1.is_zero() {
            basis[0].clone()
        } else {
            basis[0].iter().zip(&basis[1]).map(|(a, b)| a.mul(&s2).sub(&b.mul(&s1))).collect()
        };
        return Some(SubsetWitness { psi, delta });
    }
    let psi = &basis[0];
    (1u64..(1 << n)).find_map(|mask| {
        let delta: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
        subset_sum(psi, &delta).is_zero().then(|| SubsetWitness { psi: psi.clone(), delta })
    })
}

/// The periodic graph with symbol `A + (z + 1/z) delta delta^T` and `psi` as a single-cell eigenvector.
pub fn witness_graph(fg: &FiniteGraph, lambda: &RealAlgebraic, w: &SubsetWitness) -> Result<(PeriodicGraph, CompactEigenvector), FlatBandError> {
    let n = fg.n();
    if w.psi.len() != n || w.delta.len() != n {
        return Err(FlatBandError::Precondition("vector lengths differ from the graph size".into()));
    }
    if !w.delta.iter().any(|&d| d) {
        return Err(FlatBandError::Precondition("delta is zero".into()));
    }
    if !fg.is_connected() {
        return Err(FlatBandError::Precondition("finite graph is not connected".into()));
    }
    if !subset_sum(&w.psi, &w.delta).is_zero() {
        return Err(FlatBandError::Precondition("subset sum of psi does not vanish".into()));
    }
    let mut edges: Vec<EdgeSpec> = fg.edges().into_iter().map(|(a, b)| EdgeSpec::new(a, b, vec![0])).collect();
    let support: Vec<usize> = (0..n).filter(|&i| w.delta[i]).collect();
    for (t, &a) in support.iter().enumerate() {
        edges.push(EdgeSpec::new(a, a, vec![1]));
        for &b in &support[t + 1..] {
            edges.push(EdgeSpec::new(a, b, vec![1]));
            edges.push(EdgeSpec::new(a, b, vec![-1]));
        }
    }
    let graph = PeriodicGraph::new(n, 1, edges);
    let (modulus, _) = field_of(lambda);
    let values = w
        .psi
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| ((i, vec![0]), x.clone().with_modulus(&modulus)))
        .collect();
    let ev = CompactEigenvector { lambda: lambda.clone(), modulus, dim: 1, values };
    if !verify_eigenvector(&graph, &ev) {
        return Err(FlatBandError::Precondition(format!("psi is not an eigenvector for {}", lambda)));
    }
    Ok((graph, ev))
}

#[derive(Clone, Debug)]
pub enum WitnessKind {
    /// Coupling of the `delta` vertices of a connected graph on `nu` vertices.
    Subset { delta: Vec<bool> },
    /// Product of the two-chain graph with flat band 0 and a connected graph on `nu / 2` vertices.
    Product,
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub source: FiniteGraph,
    pub kind: WitnessKind,
    pub graph: PeriodicGraph,
    pub eigenvector: CompactEigenvector,
}

#[derive(Clone, Debug)]
pub struct SingleCellValue {
    pub value: RealAlgebraic,
    /// Smallest `nu` at which the value appears.
    pub introduced_at: usize,
    pub witness: Witness,
}

#[derive(Clone, Debug)]
pub struct SingleCellSet {
    pub nu: usize,
    pub values: Vec<SingleCellValue>,
}

impl SingleCellSet {
    pub fn contains(&self, x: &RealAlgebraic) -> bool {
        self.values.iter().any(|v| &v.value == x)
    }

    /// Values sorted ascending.
    pub fn sorted_values(&self) -> Vec<RealAlgebraic> {
        let mut v: Vec<RealAlgebraic> = self.values.iter().map(|v| v.value.clone()).collect();
        v.sort();
        v
    }

    pub fn to_json(&self, witnesses: bool) -> Value {
        let items: Vec<Value> = self
            .values
            .iter()
            .map(|v| {
                let mut o = json!({
                    "value": v.value.to_string(),
                    "approx": v.value.to_f64(),
                    "minpoly": v.value.minpoly().coeffs().iter().map(crate::floquet::bigint_json).collect::<Vec<_>>(),
                    "introduced_at": v.introduced_at,
                });
                if witnesses {
                    let w = &v.witness;
                    o["witness"] = json!({
                        "source": w.source.to_string(),
                        "kind": match &w.kind {
                            WitnessKind::Subset { delta } => json!({"subset": delta.iter().map(|&d| d as u8).collect::<Vec<_>>()}),
                            WitnessKind::Product => json!("product"),
                        },
                        "graph": serde_json::from_str::<Value>(&crate::io::graph_to_json(&w.graph)).unwrap_or(Value::Null),
                        "eigenvector": w.eigenvector.to_json(),
                    });
                }
                o
            })
            .collect();
        json!({"nu": self.nu, "values": items})
    }
}

fn sort_key(x: &RealAlgebraic) -> (usize, Vec<flatband_exact::BigInt>) {
    let m = x.minpoly();
    (m.coeffs().len(), m.coeffs().to_vec())
}

fn merge(values: &mut Vec<SingleCellValue>, incoming: Vec<SingleCellValue>) {
    for v in incoming {
        if !values.iter().any(|w| w.value == v.value) {
            values.push(v);
        }
    }
    values.sort_by(|a, b| sort_key(&a.value).cmp(&sort_key(&b.value)).then(a.value.cmp(&b.value)));
}

/// Admissible eigenpairs of a connected graph: not the top eigenvalue, with a vanishing subset sum.
pub fn admissible_values(fg: &FiniteGraph) -> Vec<(ExactEigenpair, SubsetWitness)> {
    let mut spec = exact_spectrum(fg);
    spec.pop();
    spec.into_iter().filter_map(|p| subset_zero_criterion(&p).map(|w| (p, w))).collect()
}

fn subset_contributions(nu: usize) -> Result<Vec<SingleCellValue>, FlatBandError> {
    let graphs = enumerate_connected_graphs(nu);
    let per_graph: Vec<Result<Vec<SingleCellValue>, FlatBandError>> = graphs
        .par_iter()
        .map(|fg| {
            admissible_values(fg)
                .into_iter()
                .map(|(pair, w)| {
                    let (graph, eigenvector) = witness_graph(fg, &pair.value, &w)?;
                    Ok(SingleCellValue {
                        value: pair.value,
                        introduced_at: nu,
                        witness: Witness { source: fg.clone(), kind: WitnessKind::Subset { delta: w.delta }, graph, eigenvector },
                    })
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for r in per_graph {
        out.extend(r?);
    }
    Ok(out)
}

fn product_contributions(nu: usize) -> Result<Vec<SingleCellValue>, FlatBandError> {
    let base = catalog::double_chain_diagonals();
    let mut out = Vec::new();
    for fg in enumerate_connected_graphs(nu / 2) {
        let generated = cartesian_flatband(&base, &fg)?;
        for band in generated.bands {
            let eigenvector = band.eigenvectors.into_iter().next().expect("generator returns an eigenvector per band");
            out.push(SingleCellValue {
                value: band.value,
                introduced_at: nu,
                witness: Witness { source: fg.clone(), kind: WitnessKind::Product, graph: generated.graph.clone(), eigenvector },
            });
        }
    }
    Ok(out)
}

/// `F_nu` built up from `F_1 = {}`.
pub fn enumerate_single_cell(nu: usize) -> Result<SingleCellSet, FlatBandError> {
    if nu == 0 || nu > MAX_ENUMERATION_NU {
        return Err(FlatBandError::Precondition(format!("enumeration supports 1 <= nu <= {}", MAX_ENUMERATION_NU)));
    }
    let mut values: Vec<SingleCellValue> = Vec::new();
    for m in 2..=nu {
        let mut new = subset_contributions(m)?;
        if m % 2 == 0 {
            new.extend(product_contributions(m)?);
        }
        merge(&mut values, new);
    }
    Ok(SingleCellSet { nu, values })
}

/// Eigenvalues of every connected graph on `n` vertices, marking the admissible ones with `*`.
pub fn eigen_table(n: usize) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "connected graphs on {} vertices", n);
    for (k, fg) in enumerate_connected_graphs(n).iter().enumerate() {
        let spec = exact_spectrum(fg);
        let admissible: Vec<RealAlgebraic> = admissible_values(fg).into_iter().map(|(p, _)| p.value).collect();
        let cells: Vec<String> = spec
            .iter()
            .rev()
            .flat_map(|p| {
                let mark = if admissible.contains(&p.value) { "*" } else { "" };
                let label = format!("{}{}", p.value.closed_form().unwrap_or_else(|| format!("{:.6}", p.value.to_f64())), mark);
                std::iter::repeat(label).take(p.multiplicity)
            })
            .collect();
        let _ = writeln!(s, "G{:<3} {:<32} {}", k + 1, fg.to_string(), cells.join(", "));
    }
    s
}
