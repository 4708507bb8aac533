//! Periodic graphs built from a finite graph: products with prescribed flat bands,
//! cone periodization of regular graphs, and products certified flat-band free.

use std::collections::BTreeMap;
use std::sync::Arc;

use flatband_exact::{field_of, BigRational, Conj, NumberFieldElement, RealAlgebraic, Ring, UniPoly};

use crate::eigvec::{synthesize_eigenvector, unfold, verify_eigenvector, CompactEigenvector};
use crate::error::FlatBandError;
use crate::finite::{exact_spectrum, FiniteGraph};
use crate::floquet::detect_flat_bands;
use crate::graph::{EdgeSpec, PeriodicGraph};

/// A flat band claimed by a generator, with verified single-cell or compact eigenvectors.
#[derive(Clone, Debug)]
pub struct GeneratedBand {
    pub value: RealAlgebraic,
    pub eigenvectors: Vec<CompactEigenvector>,
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: PeriodicGraph,
    pub bands: Vec<GeneratedBand>,
}

impl Generated {
    pub fn values(&self) -> Vec<RealAlgebraic> {
        self.bands.iter().map(|b| b.value.clone()).collect()
    }
}

/// `base □ gf`: vertex `(b, q)` gets index `b * |gf| + q`.
pub fn cartesian_product(base: &PeriodicGraph, gf: &FiniteGraph) -> PeriodicGraph {
    let n = gf.n();
    let mut edges = Vec::new();
    for e in base.edges() {
        for q in 0..n {
            edges.push(EdgeSpec::weighted(e.from * n + q, e.to * n + q, e.offset.clone(), e.weight.clone()));
        }
    }
    for b in 0..base.nu() {
        for (q1, q2) in gf.edges() {
            edges.push(EdgeSpec::new(b * n + q1, b * n + q2, vec![0; base.dim()]));
        }
    }
    let potential = (0..base.nu() * n).map(|v| base.potential()[v / n].clone()).collect();
    PeriodicGraph::new(base.nu() * n, base.dim(), edges).with_potential(potential)
}

/// Re-expresses `x` in the field generated by `s = t + c`, or as a constant when `c` is absent.
fn lift(x: &NumberFieldElement, c: &Option<BigRational>, target: &Arc<UniPoly<BigRational>>) -> NumberFieldElement {
    match c {
        Some(c) => {
            let back = -c;
            NumberFieldElement::from_parts(target, x.re().taylor_shift(&back), x.im().taylor_shift(&back))
        }
        None => NumberFieldElement::from_parts(target, UniPoly::constant(x.re().coeff(0)), UniPoly::constant(x.im().coeff(0))),
    }
}

/// Flat bands `lambda_b + mu` of `base □ gf` for every flat band `lambda_b` of `base` and `mu` in the spectrum of `gf`.
///
/// Eigenvectors are `f ⊗ phi`. Sums of two irrational values are not supported.
pub fn cartesian_flatband(base: &PeriodicGraph, gf: &FiniteGraph) -> Result<Generated, FlatBandError> {
    if gf.n() == 0 {
        return Err(FlatBandError::Precondition("finite graph is empty".into()));
    }
    let report = detect_flat_bands(base)?;
    if report.flat_bands.is_empty() {
        return Err(FlatBandError::Precondition("base graph has no flat band".into()));
    }
    let graph = cartesian_product(base, gf);
    let n = gf.n();
    let spectrum = exact_spectrum(gf);
    let mut bands: BTreeMap<RealAlgebraic, Vec<CompactEigenvector>> = BTreeMap::new();
    for fb in &report.flat_bands {
        let f = unfold(&synthesize_eigenvector(base, &fb.value)?);
        for pair in &spectrum {
            let lambda_b = &fb.value;
            let mu = &pair.value;
            // the rational summand is shifted away from the other factor's generator
            let (value, f_shift, phi_shift) = match (lambda_b.as_rational(), mu.as_rational()) {
                (Some(lb), _) => (mu.add_rational(lb), None, Some(lb.clone())),
                (None, Some(mq)) => (lambda_b.add_rational(mq), Some(mq.clone()), None),
                (None, None) => {
                    return Err(FlatBandError::Unsupported(format!("sum of irrational values {} and {}", lambda_b, mu)));
                }
            };
            let (modulus, _) = field_of(&value);
            for phi in &pair.basis {
                let mut values = BTreeMap::new();
                for ((b, cell), x) in &f.values {
                    let fx = lift(x, &f_shift, &modulus);
                    for (q, y) in phi.iter().enumerate() {
                        let v = fx.mul(&lift(y, &phi_shift, &modulus));
                        if !v.is_zero() {
                            values.insert((b * n + q, cell.clone()), v);
                        }
                    }
                }
                let ev = CompactEigenvector { lambda: value.clone(), modulus: modulus.clone(), dim: base.dim(), values };
                if !verify_eigenvector(&graph, &ev) {
                    return Err(FlatBandError::NotFlat(format!("product eigenvector for {} failed verification", value)));
                }
                bands.entry(value.clone()).or_default().push(ev);
            }
        }
    }
    Ok(Generated { graph, bands: bands.into_iter().map(|(value, eigenvectors)| GeneratedBand { value, eigenvectors }).collect() })
}

/// Adds a vertex `o` with a self-edge at offset 1, joined to every vertex of a regular connected `gf`.
///
/// Vertex 0 is `o`; vertex `q + 1` is vertex `q` of `gf`. Every eigenvalue of `gf` except the
/// degree is flat, with eigenvector `(0, f)` on one cell.
pub fn cone_periodize(gf: &FiniteGraph) -> Result<Generated, FlatBandError> {
    if !gf.is_connected() {
        return Err(FlatBandError::Precondition("finite graph is not connected".into()));
    }
    if !gf.is_regular() {
        return Err(FlatBandError::Precondition("finite graph is not regular".into()));
    }
    let n = gf.n();
    let mut edges = vec![EdgeSpec::new(0, 0, vec![1])];
    edges.extend((0..n).map(|q| EdgeSpec::new(0, q + 1, vec![0])));
    edges.extend(gf.edges().into_iter().map(|(a, b)| EdgeSpec::new(a + 1, b + 1, vec![0])));
    let graph = PeriodicGraph::new(n + 1, 1, edges);
    let top = RealAlgebraic::from_int(gf.degree(0) as i64);
    let mut bands = Vec::new();
    for pair in exact_spectrum(gf) {
        if pair.value == top {
            continue;
        }
        let (modulus, _) = field_of(&pair.value);
        let mut eigenvectors = Vec::new();
        for f in &pair.basis {
            let values = f
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(q, x)| ((q + 1, vec![0]), x.clone().with_modulus(&modulus)))
                .collect();
            let ev = CompactEigenvector { lambda: pair.value.clone(), modulus: modulus.clone(), dim: 1, values };
            if !verify_eigenvector(&graph, &ev) {
                return Err(FlatBandError::NotFlat(format!("cone eigenvector for {} failed verification", pair.value)));
            }
            eigenvectors.push(ev);
        }
        bands.push(GeneratedBand { value: pair.value, eigenvectors });
    }
    Ok(Generated { graph, bands })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Cartesian,
    Tensor,
}

/// A product of a one-vertex lattice with `gf` that has no flat band.
pub fn no_flatband_product(lattice: &PeriodicGraph, gf: &FiniteGraph, kind: ProductKind) -> Result<PeriodicGraph, FlatBandError> {
    if lattice.nu() != 1 {
        return Err(FlatBandError::Precondition(format!("lattice must have one vertex per cell, found {}", lattice.nu())));
    }
    if !lattice.is_connected() {
        return Err(FlatBandError::Precondition("lattice is not connected".into()));
    }
    if !gf.is_connected() {
        return Err(FlatBandError::Precondition("finite graph is not connected".into()));
    }
    match kind {
        ProductKind::Cartesian => Ok(cartesian_product(lattice, gf)),
        ProductKind::Tensor => {
            if gf.is_bipartite() {
                return Err(FlatBandError::Precondition("tensor product needs a non-bipartite finite graph".into()));
            }
            if exact_spectrum(gf).iter().any(|p| p.value == RealAlgebraic::from_int(0)) {
                return Err(FlatBandError::Precondition("tensor product needs 0 outside the spectrum of the finite graph".into()));
            }
            if !lattice.has_zero_potential() {
                return Err(FlatBandError::Precondition("tensor product is defined for a lattice without potential".into()));
            }
            let mut edges = Vec::new();
            for e in lattice.edges() {
                let back: Vec<i64> = e.offset.iter().map(|x| -x).collect();
                for (q1, q2) in gf.edges() {
                    edges.push(EdgeSpec::weighted(q1, q2, e.offset.clone(), e.weight.clone()));
                    edges.push(EdgeSpec::weighted(q1, q2, back.clone(), e.weight.conj()));
                }
            }
            Ok(PeriodicGraph::new(gf.n(), lattice.dim(), edges))
        }
    }
}
