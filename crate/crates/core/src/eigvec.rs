//! Compactly supported eigenvectors of flat bands.
//!
//! For a flat band `l0` of multiplicity `m`, write `p(z; l0 + mu) = mu^m q(z; mu)`
//! and `B = H(z) - l0`. Then `B q(B) = 0` up to a power of `B`: the smallest
//! `n` with `B^(n+1) q(B) = 0` gives columns of `B^n q(B)` in the kernel of `B`.
//! Their Laurent coefficients unfold to finitely supported eigenvectors.

use std::collections::BTreeMap;
use std::sync::Arc;

use flatband_exact::matrix::{is_zero_matrix, mat_mul};
use flatband_exact::{field_of, BigInt, BigRational, Gaussian, LaurentPoly, NumberFieldElement, RationalAlgebra, RealAlgebraic, Ring, UniPoly};
use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::FlatBandError;
use crate::floquet::{char_poly, coefficient_gcd, detect_flat_bands, floquet_symbol};
use crate::graph::{Offset, PeriodicGraph};

type Entry = LaurentPoly<NumberFieldElement>;

/// Kernel vector of `H(z) - lambda` with entries in `K(i)[z^{+-1}]`, `K = Q(lambda)`.
#[derive(Clone, Debug)]
pub struct SymbolVector {
    pub lambda: RealAlgebraic,
    pub modulus: Arc<UniPoly<BigRational>>,
    pub dim: usize,
    pub entries: Vec<Entry>,
}

/// Finitely supported eigenvector: `values[(vertex, cell)]`.
#[derive(Clone, Debug)]
pub struct CompactEigenvector {
    pub lambda: RealAlgebraic,
    pub modulus: Arc<UniPoly<BigRational>>,
    pub dim: usize,
    pub values: BTreeMap<(usize, Offset), NumberFieldElement>,
}

impl CompactEigenvector {
    /// Distinct cells in the support.
    pub fn cells(&self) -> Vec<Offset> {
        let mut c: Vec<Offset> = self.values.keys().map(|(_, r)| r.clone()).collect();
        c.sort();
        c.dedup();
        c
    }

    pub fn get(&self, vertex: usize, cell: &[i64]) -> NumberFieldElement {
        self.values.get(&(vertex, cell.to_vec())).cloned().unwrap_or_else(NumberFieldElement::zero)
    }

    pub fn approx(&self, vertex: usize, cell: &[i64]) -> num_complex::Complex64 {
        self.get(vertex, cell).approx(&self.lambda)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.to_string(),
            "field": self.modulus.fmt_var("λ"),
            "support_cells": self.cells(),
            "entries": self.values.iter().map(|((v, r), x)| json!({
                "vertex": v,
                "cell": r,
                "value": x.fmt_var("λ"),
                "approx": [x.approx(&self.lambda).re, x.approx(&self.lambda).im],
            })).collect::<Vec<_>>(),
        })
    }
}

fn to_nfe(g: &Gaussian, m: &Arc<UniPoly<BigRational>>) -> NumberFieldElement {
    NumberFieldElement::gaussian(g).with_modulus(m)
}

/// Multiplicity of `lambda` as a root of every coefficient of the characteristic polynomial.
fn flat_multiplicity(g: &PeriodicGraph, lambda: &RealAlgebraic) -> usize {
    let gcd = coefficient_gcd(&char_poly(g));
    if gcd.is_zero() {
        return usize::MAX;
    }
    gcd.multiplicity_of(&lambda.minpoly().to_rational())
}

/// The first nonzero column of `B^n q(B)`, without normalization.
pub fn cayley_hamilton_column(g: &PeriodicGraph, lambda: &RealAlgebraic) -> Result<SymbolVector, FlatBandError> {
    let m = flat_multiplicity(g, lambda);
    if m == 0 {
        return Err(FlatBandError::NotFlat(lambda.to_string()));
    }
    let nu = g.nu();
    let d = g.dim();
    let (modulus, theta) = field_of(lambda);
    let cp = char_poly(g);
    // coefficients of q_j(z) for j = 0..=nu-m
    let mut q: Vec<Entry> = vec![LaurentPoly::zero_in(d); nu - m + 1];
    for (k, c) in cp.coefficients() {
        let shifted = c.map(|x| to_nfe(x, &modulus)).taylor_shift(&theta);
        for j in 0..m {
            if !shifted.coeff(j).is_zero() {
                return Err(FlatBandError::NotFlat(lambda.to_string()));
            }
        }
        for (j, qj) in q.iter_mut().enumerate() {
            qj.add_term(k.clone(), shifted.coeff(j + m));
        }
    }
    let sym = floquet_symbol(g);
    let b: Vec<Vec<Entry>> = (0..nu)
        .map(|i| {
            (0..nu)
                .map(|j| {
                    let mut e = sym.entries[i][j].map(|w| to_nfe(w, &modulus));
                    if i == j {
                        e.add_term(vec![0; d], theta.neg());
                    }
                    e
                })
                .collect()
        })
        .collect();
    let scalar = |s: &Entry| -> Vec<Vec<Entry>> {
        (0..nu).map(|i| (0..nu).map(|j| if i == j { s.clone() } else { LaurentPoly::zero_in(d) }).collect()).collect()
    };
    let mut qb = scalar(&q[nu - m]);
    for j in (0..nu - m).rev() {
        qb = mat_mul(&qb, &b);
        for i in 0..nu {
            qb[i][i] = qb[i][i].add(&q[j]);
        }
    }
    let mut cur = qb;
    for _ in 0..=m {
        if is_zero_matrix(&cur) {
            break;
        }
        let next = mat_mul(&b, &cur);
        if is_zero_matrix(&next) {
            let col = (0..nu).find(|&c| (0..nu).any(|r| !cur[r][c].is_zero())).unwrap();
            let entries = (0..nu).map(|r| cur[r][col].promote(d).unwrap()).collect();
            return Ok(SymbolVector { lambda: lambda.clone(), modulus, dim: d, entries });
        }
        cur = next;
    }
    Err(FlatBandError::Unsupported(format!("no kernel column found for {}", lambda)))
}

/// Kernel vector normalized: common polynomial factor removed when `d = 1`, positive rational content 1,
/// support centred and a fixed sign.
pub fn synthesize_eigenvector(g: &PeriodicGraph, lambda: &RealAlgebraic) -> Result<SymbolVector, FlatBandError> {
    let mut v = cayley_hamilton_column(g, lambda)?;
    if v.dim == 1 {
        remove_common_factor(&mut v);
    }
    remove_content(&mut v);
    centre(&mut v);
    fix_sign(&mut v);
    Ok(v)
}

fn to_dense(p: &Entry, low: i64) -> UniPoly<NumberFieldElement> {
    let hi = p.exponent_box().map(|(_, h)| h[0]).unwrap_or(low);
    UniPoly::new((low..=hi).map(|e| p.coeff(&[e])).collect())
}

fn remove_common_factor(v: &mut SymbolVector) {
    let lows: Vec<i64> = v.entries.iter().filter_map(|e| e.exponent_box().map(|(l, _)| l[0])).collect();
    let Some(&low) = lows.iter().min() else { return };
    let dense: Vec<UniPoly<NumberFieldElement>> = v.entries.iter().map(|e| to_dense(e, low)).collect();
    let mut gcd = UniPoly::zero();
    for p in &dense {
        gcd = gcd.gcd(p);
    }
    if gcd.degree().unwrap_or(0) == 0 {
        return;
    }
    for (e, p) in v.entries.iter_mut().zip(&dense) {
        let q = p.exact_div(&gcd).expect("gcd divides");
        let mut out = LaurentPoly::zero_in(1);
        for (i, c) in q.coeffs().iter().enumerate() {
            out.add_term(vec![low + i as i64], c.clone().with_modulus(&v.modulus));
        }
        *e = out;
    }
}

fn remove_content(v: &mut SymbolVector) {
    let mut num = BigInt::from(0);
    let mut den = BigInt::from(1);
    for e in &v.entries {
        for c in e.terms().values() {
            for q in c.rational_coefficients() {
                num = num.gcd(q.numer());
                den = den.lcm(q.denom());
            }
        }
    }
    if num == BigInt::from(0) {
        return;
    }
    let s = BigRational::new(den, num);
    for e in v.entries.iter_mut() {
        *e = e.map(|c| c.scale(&s));
    }
}

/// Box of cells `-exponent` over all entries.
fn cell_box(entries: &[Entry], d: usize) -> Option<(Vec<i64>, Vec<i64>)> {
    let mut lo = vec![i64::MAX; d];
    let mut hi = vec![i64::MIN; d];
    let mut any = false;
    for e in entries {
        if let Some((l, h)) = e.exponent_box() {
            any = true;
            for k in 0..d {
                lo[k] = lo[k].min(-h[k]);
                hi[k] = hi[k].max(-l[k]);
            }
        }
    }
    any.then_some((lo, hi))
}

fn centre(v: &mut SymbolVector) {
    let Some((lo, hi)) = cell_box(&v.entries, v.dim) else { return };
    let c: Vec<i64> = lo.iter().zip(&hi).map(|(a, b)| Integer::div_floor(&(a + b), &2)).collect();
    if c.iter().all(|&x| x == 0) {
        return;
    }
    for e in v.entries.iter_mut() {
        *e = e.shift(&c);
    }
}

fn leading_rational(x: &NumberFieldElement) -> Option<BigRational> {
    if !x.re().is_zero() {
        Some(x.re().lc())
    } else if !x.im().is_zero() {
        Some(x.im().lc())
    } else {
        None
    }
}

fn fix_sign(v: &mut SymbolVector) {
    // first nonzero value in (vertex, cell) order
    for e in &v.entries {
        if let Some((_, c)) = e.terms().iter().next_back() {
            if leading_rational(c).is_some_and(|q| q < BigRational::zero()) {
                for e in v.entries.iter_mut() {
                    *e = e.neg();
                }
            }
            return;
        }
    }
}

/// Reads off `psi_i(r)` as the coefficient of `z^-r` in entry `i`, then recentres the support.
pub fn unfold(v: &SymbolVector) -> CompactEigenvector {
    let mut values = BTreeMap::new();
    let c = cell_box(&v.entries, v.dim).map(|(lo, hi)| lo.iter().zip(&hi).map(|(a, b)| Integer::div_floor(&(a + b), &2)).collect::<Vec<i64>>());
    for (i, e) in v.entries.iter().enumerate() {
        for (k, x) in e.terms() {
            let cell: Offset = k.iter().enumerate().map(|(t, a)| -a - c.as_ref().map_or(0, |c| c[t])).collect();
            values.insert((i, cell), x.clone().with_modulus(&v.modulus));
        }
    }
    CompactEigenvector { lambda: v.lambda.clone(), modulus: v.modulus.clone(), dim: v.dim, values }
}

/// Exact check that `psi` is nonzero and `(H psi)(i, r) = lambda psi(i, r)` at every vertex.
pub fn verify_eigenvector(g: &PeriodicGraph, v: &CompactEigenvector) -> bool {
    if v.values.values().all(|x| x.is_zero()) {
        return false;
    }
    let (_, theta) = field_of(&v.lambda);
    let h = g.hopping();
    let mut residual: BTreeMap<(usize, Offset), NumberFieldElement> = BTreeMap::new();
    let mut add = |key: (usize, Offset), x: NumberFieldElement| {
        let slot = residual.entry(key).or_insert_with(NumberFieldElement::zero);
        *slot = slot.add(&x);
    };
    for ((j, s), x) in &v.values {
        let diag = NumberFieldElement::rational(g.potential()[*j].clone()).sub(&theta);
        add((*j, s.clone()), diag.mul(x));
        for (i, row) in h.iter().enumerate() {
            for (k, w) in &row[*j] {
                let r: Offset = s.iter().zip(k).map(|(a, b)| a - b).collect();
                add((i, r), NumberFieldElement::gaussian(w).mul(x));
            }
        }
    }
    residual.values().all(|x| x.is_zero())
}

/// Exact check of `(H(z) - lambda) f = 0`.
pub fn verify_symbol_vector(g: &PeriodicGraph, v: &SymbolVector) -> bool {
    if v.entries.iter().all(|e| e.is_zero()) {
        return false;
    }
    let sym = floquet_symbol(g);
    let (_, theta) = field_of(&v.lambda);
    (0..g.nu()).all(|i| {
        let mut acc: Entry = LaurentPoly::zero_in(v.dim);
        for j in 0..g.nu() {
            let hij = sym.entries[i][j].map(|w| to_nfe(w, &v.modulus));
            acc = acc.add(&hij.mul(&v.entries[j]));
        }
        acc = acc.sub(&v.entries[i].scale(&theta));
        acc.is_zero()
    })
}

/// One normalized compact eigenvector for every flat band of a connected graph.
pub fn eigenvectors_for(g: &PeriodicGraph) -> Result<Vec<CompactEigenvector>, FlatBandError> {
    let report = detect_flat_bands(g)?;
    report.flat_bands.iter().map(|b| synthesize_eigenvector(g, &b.value).map(|v| unfold(&v))).collect()
}

/// Per-axis width of the cell support, `max - min + 1`.
pub fn support_extent(v: &CompactEigenvector) -> Vec<i64> {
    let cells = v.cells();
    (0..v.dim)
        .map(|t| {
            let lo = cells.iter().map(|c| c[t]).min().unwrap_or(0);
            let hi = cells.iter().map(|c| c[t]).max().unwrap_or(-1);
            hi - lo + 1
        })
        .collect()
}

/// `(nu - 1) * h_t` for each axis, `h_t` the largest offset component along `t`.
pub fn support_bound(g: &PeriodicGraph) -> Vec<i64> {
    (0..g.dim())
        .map(|t| {
            let h = g.edges().iter().map(|e| e.offset[t].abs()).max().unwrap_or(0);
            (g.nu() as i64 - 1) * h
        })
        .collect()
}
