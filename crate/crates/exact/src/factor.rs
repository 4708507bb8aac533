//! Factorization of integer polynomials into irreducibles over Q.
//!
//! Linear factors come from the rational root test. Higher-degree factors are
//! proposed from numerically computed roots and accepted only after exact division.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::ring::Ring;
use crate::unipoly::UniPoly;

/// Subset search is skipped above this degree; the remaining factor is reported as irreducible.
pub const MAX_SEARCH_DEGREE: usize = 24;

/// Irreducible primitive factors of `p` with multiplicities. Content and sign are dropped.
pub fn factor(p: &UniPoly<BigInt>) -> Vec<(UniPoly<BigInt>, usize)> {
    let mut out = Vec::new();
    for (f, m) in p.to_rational().squarefree_decomposition() {
        let (_, prim) = f.to_primitive_integer();
        for g in factor_squarefree(&prim) {
            out.push((g, m));
        }
    }
    out.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));
    out
}

/// Irreducible factors of a square-free primitive polynomial.
pub fn factor_squarefree(p: &UniPoly<BigInt>) -> Vec<UniPoly<BigInt>> {
    let mut out = Vec::new();
    let mut rest = p.primitive();
    if rest.degree().unwrap_or(0) == 0 {
        return out;
    }
    if rest.coeff(0).is_zero() {
        out.push(UniPoly::x());
        rest = UniPoly::new(rest.coeffs()[1..].to_vec());
    }
    for r in rational_roots(&rest) {
        let lin = UniPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        rest = exact_int_div(&rest, &lin).expect("rational root divides");
        out.push(lin);
    }
    out.extend(split_higher(&rest));
    out
}

/// Rational roots of an integer polynomial, each listed once.
pub fn rational_roots(p: &UniPoly<BigInt>) -> Vec<BigRational> {
    let mut roots = Vec::new();
    let deg = match p.degree() {
        Some(d) if d > 0 => d,
        _ => return roots,
    };
    let v = p.valuation().unwrap();
    if v > 0 {
        roots.push(BigRational::zero());
    }
    let a0 = p.coeff(v).abs();
    let an = p.lc().abs();
    if deg == v {
        return roots;
    }
    let candidates = match (divisors(&a0), divisors(&an)) {
        (Some(ps), Some(qs)) => {
            let mut c = Vec::new();
            for q in &qs {
                for pp in &ps {
                    if pp.gcd(q).is_one() {
                        let r = BigRational::new(pp.clone(), q.clone());
                        c.push(r.clone());
                        c.push(-r);
                    }
                }
            }
            c
        }
        _ => numeric_rational_candidates(p),
    };
    for c in candidates {
        if p.sign_at(&c) == 0 && !roots.contains(&c) {
            roots.push(c);
        }
    }
    roots.sort();
    roots
}

fn numeric_rational_candidates(p: &UniPoly<BigInt>) -> Vec<BigRational> {
    let an = p.lc().abs();
    let lc_divs = divisors(&an).unwrap_or_else(|| vec![an.clone()]);
    let mut out = Vec::new();
    for z in complex_roots(p) {
        if z.im.abs() > 1e-6 * (1.0 + z.re.abs()) {
            continue;
        }
        for q in &lc_divs {
            let qf = q.to_f64().unwrap_or(f64::INFINITY);
            if let Some(n) = BigInt::from_f64((z.re * qf).round()) {
                out.push(BigRational::new(n, q.clone()));
            }
        }
    }
    out
}

/// Positive divisors, or `None` when the number is too large for trial division.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

fn exact_int_div(a: &UniPoly<BigInt>, b: &UniPoly<BigInt>) -> Option<UniPoly<BigInt>> {
    let q = a.to_rational().exact_div(&b.to_rational())?;
    let mut coeffs = Vec::new();
    for c in q.coeffs() {
        if !c.is_integer() {
            return None;
        }
        coeffs.push(c.to_integer());
    }
    Some(UniPoly::new(coeffs))
}

fn split_higher(p: &UniPoly<BigInt>) -> Vec<UniPoly<BigInt>> {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return vec![];
    }
    if n <= 3 || n > MAX_SEARCH_DEGREE {
        return vec![p.clone()];
    }
    let roots = complex_roots(p);
    let lc_divs = divisors(&p.lc().abs()).unwrap_or_else(|| vec![p.lc().abs()]);
    for k in 2..=n / 2 {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if let Some(g) = candidate_factor(&roots, &idx, &lc_divs) {
                if let Some(q) = exact_int_div(p, &g) {
                    let mut out = vec![g];
                    out.extend(split_higher(&q.primitive()));
                    return out;
                }
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    vec![p.clone()]
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn candidate_factor(roots: &[Complex64], idx: &[usize], lc_divs: &[BigInt]) -> Option<UniPoly<BigInt>> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &i in idx {
        let r = roots[i];
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (j, a) in c.iter().enumerate() {
            next[j + 1] += a;
            next[j] -= a * r;
        }
        c = next;
    }
    let scale = c.iter().map(|z| z.norm()).fold(1.0, f64::max);
    if c.iter().any(|z| z.im.abs() > 1e-6 * scale) {
        return None;
    }
    for d in lc_divs {
        let df = d.to_f64()?;
        let mut coeffs = Vec::with_capacity(c.len());
        let mut ok = true;
        for z in &c {
            let v = z.re * df;
            let rv = v.round();
            if (v - rv).abs() > 1e-4 * (1.0 + v.abs()) || !rv.is_finite() {
                ok = false;
                break;
            }
            coeffs.push(BigInt::from_f64(rv)?);
        }
        if ok {
            let g = UniPoly::new(coeffs);
            if g.degree() == Some(idx.len()) {
                return Some(g.primitive());
            }
        }
    }
    None
}

/// All complex roots by Aberth-Ehrlich iteration in double precision.
pub fn complex_roots(p: &UniPoly<BigInt>) -> Vec<Complex64> {
    let n = match p.degree() {
        Some(n) if n > 0 => n,
        _ => return vec![],
    };
    let lc = crate::ring::rational_to_f64(&BigRational::from_integer(p.lc()));
    let a: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| crate::ring::rational_to_f64(&BigRational::from_integer(c.clone())) / lc)
        .collect();
    let bound = 1.0 + a[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(bound * 0.7, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for c in a.iter().rev() {
            d = d * x + v;
            v = v * x + c;
        }
        (v, d)
    };
    for _ in 0..2000 {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let (v, d) = eval(z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    s += 1.0 / (z[k] - z[j]);
                }
            }
            let w = ratio / (1.0 - ratio * s);
            if w.is_finite() {
                z[k] -= w;
                max_step = max_step.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}
