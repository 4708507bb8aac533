//! Floquet symbol, characteristic polynomial and exact flat-band detection.

use std::collections::BTreeMap;

use flatband_exact::algebraic::real_roots;
use flatband_exact::matrix::det;
use flatband_exact::{BigRational, Gaussian, LaurentPoly, RealAlgebraic, Ring, UniPoly};
use serde_json::{json, Value};

use crate::error::FlatBandError;
use crate::graph::{Offset, PeriodicGraph};

/// `H(z)` with entries `h_ij(z) = Q_i [i = j] + sum_k w_ij(k) z^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct FloquetSymbol {
    pub dim: usize,
    pub entries: Vec<Vec<LaurentPoly<Gaussian>>>,
}

impl FloquetSymbol {
    pub fn nu(&self) -> usize {
        self.entries.len()
    }

    /// Entry-wise check of `h_ji = involute(h_ij)`.
    pub fn is_hermitian(&self) -> bool {
        let n = self.nu();
        (0..n).all(|i| (0..n).all(|j| self.entries[j][i] == self.entries[i][j].involute()))
    }
}

pub fn floquet_symbol(g: &PeriodicGraph) -> FloquetSymbol {
    let n = g.nu();
    let h = g.hopping();
    let mut entries = vec![vec![LaurentPoly::zero_in(g.dim()); n]; n];
    for i in 0..n {
        for j in 0..n {
            entries[i][j] = LaurentPoly::from_terms(g.dim(), h[i][j].iter().map(|(k, w)| (k.clone(), w.clone())));
        }
        entries[i][i].add_term(vec![0; g.dim()], Gaussian::real(g.potential()[i].clone()));
    }
    FloquetSymbol { dim: g.dim(), entries }
}

/// `p(z; lambda) = det(H(z) - lambda I) = sum_k c_k(lambda) z^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    pub dim: usize,
    pub nu: usize,
    pub poly: LaurentPoly<UniPoly<Gaussian>>,
}

impl CharPoly {
    /// Nonzero coefficients `c_k(lambda)` indexed by the exponent set.
    pub fn coefficients(&self) -> &BTreeMap<Offset, UniPoly<Gaussian>> {
        self.poly.terms()
    }

    pub fn coefficient(&self, k: &[i64]) -> UniPoly<Gaussian> {
        self.poly.coeff(k)
    }

    /// `c_0` is the only coefficient of full degree in lambda.
    pub fn constant_coefficient(&self) -> UniPoly<Gaussian> {
        self.poly.constant_term()
    }
}

pub fn char_poly(g: &PeriodicGraph) -> CharPoly {
    char_poly_of_symbol(&floquet_symbol(g))
}

pub fn char_poly_of_symbol(s: &FloquetSymbol) -> CharPoly {
    let n = s.nu();
    let lambda = UniPoly::<Gaussian>::x();
    let m: Vec<Vec<LaurentPoly<UniPoly<Gaussian>>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = s.entries[i][j].map(|c| UniPoly::constant(c.clone()));
                    if i == j {
                        e.add_term(vec![0; s.dim], lambda.neg());
                    }
                    e
                })
                .collect()
        })
        .collect();
    let mut poly = det(&m);
    if poly.dim() == 0 {
        poly = poly.promote(s.dim).unwrap();
    }
    CharPoly { dim: s.dim, nu: n, poly }
}

/// Real and imaginary parts of a Gaussian polynomial.
pub fn split_parts(p: &UniPoly<Gaussian>) -> (UniPoly<BigRational>, UniPoly<BigRational>) {
    (p.map(|c| c.re.clone()), p.map(|c| c.im.clone()))
}

/// Monic gcd over Q of the real and imaginary parts of every coefficient.
pub fn coefficient_gcd(cp: &CharPoly) -> UniPoly<BigRational> {
    let mut g = UniPoly::<BigRational>::zero();
    for c in cp.coefficients().values() {
        let (re, im) = split_parts(c);
        g = g.gcd(&re).gcd(&im);
    }
    g
}

#[derive(Clone, Debug, PartialEq)]
pub struct FlatBand {
    pub value: RealAlgebraic,
    pub multiplicity: usize,
}

impl FlatBand {
    pub fn to_json(&self) -> Value {
        let (lo, hi) = self.value.interval();
        let mut v = json!({
            "value": self.value.closed_form().unwrap_or_else(|| format!("{:.15}", self.value.to_f64())),
            "approx": self.value.to_f64(),
            "minpoly": self.value.minpoly().coeffs().iter().map(bigint_json).collect::<Vec<_>>(),
            "multiplicity": self.multiplicity,
        });
        if !self.value.is_rational() {
            v["interval"] = json!([flatband_exact::format_rational(&lo), flatband_exact::format_rational(&hi)]);
        }
        v
    }
}

pub(crate) fn bigint_json(b: &flatband_exact::BigInt) -> Value {
    match i64::try_from(b) {
        Ok(x) => json!(x),
        Err(_) => json!(b.to_string()),
    }
}

#[derive(Clone, Debug)]
pub struct FlatBandReport {
    pub flat_bands: Vec<FlatBand>,
    pub gcd: UniPoly<BigRational>,
    /// False when detection was forced on a disconnected graph; values then describe the quotient symbol only.
    pub connected: bool,
}

impl FlatBandReport {
    pub fn values(&self) -> Vec<RealAlgebraic> {
        self.flat_bands.iter().map(|b| b.value.clone()).collect()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.flat_bands.iter().map(|b| b.multiplicity).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "flat_bands": self.flat_bands.iter().map(FlatBand::to_json).collect::<Vec<_>>(),
            "gcd": self.gcd.fmt_var("λ"),
            "connected": self.connected,
        })
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DetectOptions {
    pub force_disconnected: bool,
}

pub fn detect_flat_bands(g: &PeriodicGraph) -> Result<FlatBandReport, FlatBandError> {
    detect_flat_bands_with(g, DetectOptions::default())
}

pub fn detect_flat_bands_with(g: &PeriodicGraph, opts: DetectOptions) -> Result<FlatBandReport, FlatBandError> {
    let report = g.validate();
    if !report.is_ok() {
        return Err(FlatBandError::Invalid(report));
    }
    let connected = g.is_connected();
    if !connected && !opts.force_disconnected {
        return Err(FlatBandError::Disconnected);
    }
    let cp = char_poly(g);
    let gcd = coefficient_gcd(&cp);
    let flat_bands = real_roots(&gcd).into_iter().map(|(value, multiplicity)| FlatBand { value, multiplicity }).collect();
    Ok(FlatBandReport { flat_bands, gcd, connected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeSpec;
    use flatband_exact::unipoly::rat_poly;

    fn e(a: usize, b: usize, k: i64) -> EdgeSpec {
        EdgeSpec::new(a, b, vec![k])
    }

    #[test]
    fn ladder_char_poly() {
        // H = [[c, 1], [1, c]], c = z + 1/z: p = (c - l)^2 - 1
        let g = PeriodicGraph::new(2, 1, vec![e(0, 0, 1), e(1, 1, 1), e(0, 1, 0)]);
        let cp = char_poly(&g);
        let to_rat = |p: UniPoly<Gaussian>| p.map(|c| c.re.clone());
        assert_eq!(to_rat(cp.coefficient(&[2])), rat_poly(&[1]));
        assert_eq!(to_rat(cp.coefficient(&[1])), rat_poly(&[0, -2]));
        assert_eq!(to_rat(cp.coefficient(&[0])), rat_poly(&[1, 0, 1]));
        assert!(detect_flat_bands(&g).unwrap().flat_bands.is_empty());
    }

    #[test]
    fn symbol_hermitian() {
        let g = PeriodicGraph::new(2, 1, vec![EdgeSpec::weighted(0, 0, vec![1], Gaussian::i()), e(0, 1, 1), e(0, 1, -1)]);
        assert!(floquet_symbol(&g).is_hermitian());
    }

    #[test]
    fn disconnected_is_refused_unless_forced() {
        let g = PeriodicGraph::new(2, 1, vec![e(0, 0, 2), e(1, 1, 4), e(0, 1, 1), e(0, 1, -1), e(0, 1, 3), e(0, 1, -3)]);
        assert!(matches!(detect_flat_bands(&g), Err(FlatBandError::Disconnected)));
        let r = detect_flat_bands_with(&g, DetectOptions { force_disconnected: true }).unwrap();
        assert!(!r.connected);
    }
}
