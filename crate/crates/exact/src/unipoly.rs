use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use crate::ring::{Conj, Field, RationalAlgebra, Ring};

/// Dense univariate polynomial, coefficients stored low to high, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        UniPoly { coeffs: vec![R::zero(), R::one()] }
    }

    pub fn monomial(c: R, e: usize) -> Self {
        if c.is_zero() {
            return Self::new(vec![]);
        }
        let mut coeffs = vec![R::zero(); e];
        coeffs.push(c);
        UniPoly { coeffs }
    }

    /// `x - a`
    pub fn linear_root(a: &R) -> Self {
        UniPoly { coeffs: vec![a.neg(), R::one()] }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Evaluates into an algebra `S` with a ring map `f: R -> S`.
    pub fn eval_with<S: Ring>(&self, x: &S, f: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&f(c));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&R::from_int(i as i64)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn shift_up(&self, e: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// `p(x + a)`
    pub fn taylor_shift(&self, a: &R) -> Self {
        // Horner in the shifted variable.
        let mut acc = Self::zero();
        let lin = UniPoly { coeffs: vec![a.clone(), R::one()] };
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn fmt_var(&self, var: &str) -> String
    where
        R: fmt::Display,
    {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let needs_paren = cs.contains('+') || cs[1..].contains('-');
            let (sign, body) = if let Some(rest) = cs.strip_prefix('-').filter(|_| !needs_paren) {
                ("-", rest.to_string())
            } else if needs_paren {
                ("+", format!("({})", cs))
            } else {
                ("+", cs)
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, i),
            };
            if i == 0 {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&body);
                out.push_str(&mono);
            }
        }
        out
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }
    fn one() -> Self {
        UniPoly { coeffs: vec![R::one()] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(out)
    }
    fn mul(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(out)
    }
    fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }
}

impl<R: Ring + Conj> Conj for UniPoly<R> {
    fn conj(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.conj()).collect() }
    }
}

impl<R: RationalAlgebra> RationalAlgebra for UniPoly<R> {
    fn from_rational(q: &BigRational) -> Self {
        Self::constant(R::from_rational(q))
    }
    fn scale(&self, q: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(q)).collect())
    }
}

impl<F: Field> UniPoly<F> {
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv_lc = d.lc().inv().expect("leading coefficient not invertible");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].mul(&inv_lc);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].sub(&c.mul(dc));
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient when `d` divides `self`, otherwise `None`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        match r0.lc().inv() {
            Some(i) => (r0.scale(&i), s0.scale(&i), t0.scale(&i)),
            None => (r0, s0, t0),
        }
    }

    /// Yun's square-free decomposition: `self = lc * prod f_i^i`, returned as `(f_i, i)` with `f_i` monic and nonconstant.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0).unwrap();
        let mut c = fp.exact_div(&a0).unwrap_or_else(|| fp.div_rem(&a0).0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).unwrap();
            c = d.exact_div(&a).unwrap();
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> Self {
        let mut acc = Self::one();
        for (f, _) in self.squarefree_decomposition() {
            acc = acc.mul(&f);
        }
        acc
    }

    /// Multiplicity of `f` (irreducible, nonconstant) as a factor of `self`.
    pub fn multiplicity_of(&self, f: &Self) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut m = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(f) {
            cur = q;
            m += 1;
        }
        m
    }
}

impl UniPoly<BigRational> {
    /// Splits into a positive rational content and a primitive integer polynomial with positive leading coefficient.
    pub fn to_primitive_integer(&self) -> (BigRational, UniPoly<BigInt>) {
        if self.is_zero() {
            return (BigRational::zero(), UniPoly::zero());
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = UniPoly::new(ints.iter().map(|c| c / &g).collect());
        (BigRational::new(g, lcm), prim)
    }
}

impl UniPoly<BigInt> {
    pub fn to_rational(&self) -> UniPoly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        UniPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Sign of `p(q)` for rational `q`, computed without denominators.
    pub fn sign_at(&self, q: &BigRational) -> i32 {
        // sum c_i n^i d^(deg - i)
        let n = q.numer();
        let d = q.denom();
        let deg = match self.degree() {
            Some(d) => d,
            None => return 0,
        };
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        let mut terms = vec![BigInt::zero(); deg + 1];
        for i in (0..=deg).rev() {
            terms[i] = dpow.clone();
            dpow *= d;
        }
        let mut npow = BigInt::one();
        for i in 0..=deg {
            acc += &self.coeffs[i] * &npow * &terms[i];
            npow *= n;
        }
        if acc.is_positive() {
            1
        } else if acc.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Cauchy bound `1 + max |c_i / c_n|`, rounded up to an integer.
    pub fn cauchy_bound(&self) -> BigInt {
        let lc = self.lc().abs();
        let m = self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default();
        let (q, r) = m.div_rem(&lc);
        q + if r.is_zero() { 1 } else { 2 }
    }
}

impl<R: Ring + fmt::Display> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("x"))
    }
}

/// Builds an integer polynomial from low-to-high coefficients.
pub fn int_poly(c: &[i64]) -> UniPoly<BigInt> {
    UniPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
}

pub fn rat_poly(c: &[i64]) -> UniPoly<BigRational> {
    UniPoly::new(c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
}
