//! Potentials that create or destroy flat bands.
//!
//! With a symbolic potential `Q` the characteristic polynomial becomes
//! `p(z; Q, l) = sum_r p_r(Q, l) z^r`, and `l` is flat for `Q` exactly when every
//! `p_r` vanishes at `(Q, l)`.

use std::collections::BTreeMap;
use std::fmt;

use flatband_exact::algebraic::real_roots;
use flatband_exact::matrix::{det, rref};
use flatband_exact::{
    field_of, format_rational, parse_rational, BigRational, Gaussian, LaurentPoly, MPoly, NumberFieldElement, RealAlgebraic, Ring, UniPoly,
};
use serde_json::{json, Value};

use crate::error::FlatBandError;
use crate::floquet::{detect_flat_bands, floquet_symbol, FlatBandReport};
use crate::graph::{Offset, PeriodicGraph};

/// `p_r` in the variables `(Q_0, ..., Q_{nu-1}, l)` for every exponent `r`.
#[derive(Clone, Debug)]
pub struct CoefficientSystem {
    pub nu: usize,
    pub dim: usize,
    pub coeffs: BTreeMap<Offset, MPoly<Gaussian>>,
}

impl CoefficientSystem {
    pub fn var_names(&self) -> Vec<String> {
        (0..self.nu).map(|i| format!("Q{}", i)).chain(std::iter::once("λ".to_string())).collect()
    }

    pub fn coefficient(&self, r: &[i64]) -> MPoly<Gaussian> {
        self.coeffs.get(r).cloned().unwrap_or_else(|| MPoly::zero_in(self.nu + 1))
    }

    pub fn to_json(&self) -> Value {
        let names = self.var_names();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        json!({
            "nu": self.nu,
            "dim": self.dim,
            "variables": names,
            "coefficients": self.coeffs.iter().map(|(r, p)| json!({
                "exponent": r,
                "text": p.fmt_with(&refs),
                "terms": p.terms_grlex_desc().iter().map(|(e, c)| json!({"monomial": e, "coeff": c.to_string()})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Symbolic `det(A(z) + diag(Q) - l I)`. The potential stored in `g` is ignored.
pub fn coefficient_system(g: &PeriodicGraph) -> CoefficientSystem {
    let n = g.nu();
    let nv = n + 1;
    let symbol = floquet_symbol(&g.clone().with_potential(vec![BigRational::zero(); n]));
    let lambda = MPoly::<Gaussian>::var(nv, n);
    let m: Vec<Vec<LaurentPoly<MPoly<Gaussian>>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = LaurentPoly::from_terms(
                        g.dim(),
                        symbol.entries[i][j].terms().iter().map(|(k, w)| (k.clone(), MPoly::constant_in(nv, w.clone()))),
                    );
                    if i == j {
                        e.add_term(vec![0; g.dim()], MPoly::var(nv, i).sub(&lambda));
                    }
                    e
                })
                .collect()
        })
        .collect();
    let p = det(&m);
    let coeffs = p.terms().iter().map(|(k, c)| (k.clone(), c.clone())).collect();
    CoefficientSystem { nu: n, dim: g.dim(), coeffs }
}

/// The exponent `r != 0` of a nonzero constant coefficient, which rules out every potential.
///
/// Candidates are ranked by the sum of their components, then lexicographically, largest first.
pub fn empty_locus_certificate(cs: &CoefficientSystem) -> Option<Offset> {
    cs.coeffs
        .iter()
        .filter(|(r, p)| r.iter().any(|&x| x != 0) && p.is_constant() && !p.is_zero())
        .map(|(r, _)| r.clone())
        .max_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then(a.cmp(b)))
}

pub fn parse_potential(text: &str) -> Result<Vec<BigRational>, FlatBandError> {
    text.split(',')
        .map(|s| parse_rational(s).ok_or_else(|| FlatBandError::Parse(format!("bad rational {:?} in potential", s.trim()))))
        .collect()
}

/// Flat bands of `A + diag(q)`.
pub fn detect_with_potential(g: &PeriodicGraph, q: &[BigRational]) -> Result<FlatBandReport, FlatBandError> {
    if q.len() != g.nu() {
        return Err(FlatBandError::Precondition(format!("potential has {} entries, expected {}", q.len(), g.nu())));
    }
    detect_flat_bands(&g.clone().with_potential(q.to_vec()))
}

/// A line `Q1 = Q0 + gap` of potentials with flat band `l = Q0 - x0`.
///
/// `x0` is the common value of `Q0 - l`; the gap is stored as `gap_const + gap_coeff * x0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocusLine {
    pub x0: RealAlgebraic,
    pub multiplicity: usize,
    pub gap_const: BigRational,
    pub gap_coeff: BigRational,
}

impl LocusLine {
    pub fn gap(&self) -> RealAlgebraic {
        self.x0.affine(&self.gap_const, &self.gap_coeff)
    }

    /// Flat value for the potential with first entry `q0`.
    pub fn flat_value_at(&self, q0: &BigRational) -> RealAlgebraic {
        self.x0.affine(q0, &-BigRational::one())
    }

    /// The rational potential `(q0, q0 + gap)`, when the gap is rational.
    pub fn potential_at(&self, q0: &BigRational) -> Option<Vec<BigRational>> {
        let gap = self.gap();
        gap.as_rational().map(|c| vec![q0.clone(), q0 + c])
    }

    pub fn to_json(&self) -> Value {
        json!({
            "constraint": format!("Q1 = Q0 + {}", self.gap()),
            "flat_value": format!("λ = Q0 - {}", self.x0),
            "x0": self.x0.to_string(),
            "gap": self.gap().to_string(),
            "multiplicity": self.multiplicity,
        })
    }
}

impl fmt::Display for LocusLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q1 = Q0 + {}, λ = Q0 - {}", self.gap(), self.x0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Nu2Locus {
    /// No potential gives a flat band; `certificate` names a constant coefficient when there is one.
    Empty { certificate: Option<Offset> },
    Lines(Vec<LocusLine>),
    /// The equations leave a two-parameter family.
    Degenerate(String),
}

impl Nu2Locus {
    pub fn lines(&self) -> &[LocusLine] {
        match self {
            Nu2Locus::Lines(l) => l,
            _ => &[],
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Nu2Locus::Empty { certificate } => json!({"kind": "empty", "certificate": certificate}),
            Nu2Locus::Lines(l) => json!({"kind": "lines", "lines": l.iter().map(LocusLine::to_json).collect::<Vec<_>>()}),
            Nu2Locus::Degenerate(s) => json!({"kind": "degenerate", "reason": s}),
        }
    }
}

impl fmt::Display for Nu2Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nu2Locus::Empty { certificate: Some(r) } => write!(f, "empty: constant coefficient at z^{:?}", r),
            Nu2Locus::Empty { certificate: None } => write!(f, "empty"),
            Nu2Locus::Lines(l) => {
                let s: Vec<String> = l.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", s.join("; "))
            }
            Nu2Locus::Degenerate(s) => write!(f, "degenerate: {}", s),
        }
    }
}

fn rational_line(x: BigRational, y: BigRational) -> LocusLine {
    LocusLine { x0: RealAlgebraic::Rational(x.clone()), multiplicity: 1, gap_const: y - x, gap_coeff: BigRational::zero() }
}

/// Potentials `(Q0, Q1)` giving a flat band of a graph with two vertices per cell.
///
/// In `x = Q0 - l`, `y = Q1 - l` every `p_r` with `r != 0` is affine and `p_0 = xy + n`.
/// The affine equations are solved exactly and intersected with the hyperbola.
pub fn nu2_locus(g: &PeriodicGraph) -> Result<Nu2Locus, FlatBandError> {
    if g.nu() != 2 {
        return Err(FlatBandError::Precondition(format!("the two-vertex locus needs nu = 2, found {}", g.nu())));
    }
    let report = g.validate();
    if !report.is_ok() {
        return Err(FlatBandError::Invalid(report));
    }
    let s = floquet_symbol(&g.clone().with_potential(vec![BigRational::zero(); 2]));
    let [h00, h01] = [&s.entries[0][0], &s.entries[0][1]];
    let [h10, h11] = [&s.entries[1][0], &s.entries[1][1]];
    let n = h00.mul(h11).sub(&h01.mul(h10));
    let zero = vec![0; g.dim()];
    let mut exps: Vec<Offset> = h00.terms().keys().chain(h11.terms().keys()).chain(n.terms().keys()).cloned().collect();
    exps.sort();
    exps.dedup();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for r in exps.iter().filter(|r| **r != zero) {
        let (a, b, c) = (h11.coeff(r), h00.coeff(r), n.coeff(r));
        rows.push(vec![a.re.clone(), b.re.clone(), c.re.clone()]);
        rows.push(vec![a.im.clone(), b.im.clone(), c.im.clone()]);
    }
    let n0 = n.coeff(&zero);
    if !n0.im.is_zero() || !h00.coeff(&zero).is_zero() || !h11.coeff(&zero).is_zero() {
        return Err(FlatBandError::Precondition("constant symbol entries are not of the expected form".into()));
    }
    let n0 = n0.re;
    let pivots = if rows.is_empty() { vec![] } else { rref(&mut rows) };
    let one = BigRational::one();
    let mut lines: Vec<LocusLine> = Vec::new();
    let degenerate = |why: &str| Ok(Nu2Locus::Degenerate(why.to_string()));
    match pivots.as_slice() {
        p if p.contains(&2) => {
            return Ok(Nu2Locus::Empty { certificate: empty_locus_certificate(&coefficient_system(g)) });
        }
        [0, 1] => {
            let (x, y) = (-rows[0][2].clone(), -rows[1][2].clone());
            if (&x * &y + &n0).is_zero() {
                lines.push(rational_line(x, y));
            }
        }
        [0] => {
            // x + beta y + gamma = 0
            let (beta, gamma) = (rows[0][1].clone(), rows[0][2].clone());
            if beta.is_zero() {
                let x = -gamma.clone();
                if !x.is_zero() {
                    lines.push(rational_line(x.clone(), -&n0 / &x));
                } else if n0.is_zero() {
                    return degenerate("x = 0 and y is free");
                }
            } else {
                // x^2 + gamma x - beta n0 = 0, y = -(gamma + x) / beta
                let quad = UniPoly::new(vec![-(&beta * &n0), gamma.clone(), one.clone()]);
                for (x0, mult) in real_roots(&quad) {
                    let gap_const = -&gamma / &beta;
                    let gap_coeff = -(&one / &beta) - &one;
                    lines.push(LocusLine { x0, multiplicity: mult, gap_const, gap_coeff });
                }
            }
        }
        [1] => {
            // y + gamma = 0
            let y = -rows[0][2].clone();
            if !y.is_zero() {
                lines.push(rational_line(-&n0 / &y, y));
            } else if n0.is_zero() {
                return degenerate("y = 0 and x is free");
            }
        }
        _ => return degenerate("no coefficient constrains the potential"),
    }
    let cs = coefficient_system(g);
    for line in &lines {
        if !verify_line(&cs, line) {
            return Err(FlatBandError::NotFlat(format!("locus line {} failed substitution", line)));
        }
    }
    if lines.is_empty() {
        Ok(Nu2Locus::Empty { certificate: None })
    } else {
        Ok(Nu2Locus::Lines(lines))
    }
}

/// Substitutes `Q0 = s`, `Q1 = s + gap`, `l = s - x0` into every coefficient for a few rational `s`.
pub fn verify_line(cs: &CoefficientSystem, line: &LocusLine) -> bool {
    let (modulus, theta) = field_of(&line.x0);
    let lift = |q: &BigRational| NumberFieldElement::rational(q.clone()).with_modulus(&modulus);
    let gap = lift(&line.gap_const).add(&theta.mul(&lift(&line.gap_coeff)));
    [-2i64, 0, 1, 5].iter().all(|&s| {
        let s = lift(&BigRational::from_int(s));
        let vals = vec![s.clone(), s.add(&gap), s.sub(&theta)];
        cs.coeffs.values().all(|p| p.eval_in(&vals, NumberFieldElement::gaussian).is_zero())
    })
}

/// Comma-separated rationals, the inverse of [`parse_potential`].
pub fn format_potential(q: &[BigRational]) -> String {
    q.iter().map(format_rational).collect::<Vec<_>>().join(",")
}
