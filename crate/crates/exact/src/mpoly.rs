use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::ring::{Conj, RationalAlgebra, Ring};

/// Sparse multivariate polynomial in `nvars` variables; `nvars == 0` is a promotable constant.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<R> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, R>,
}

/// Graded lexicographic comparison.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl<R: Ring> MPoly<R> {
    pub fn zero_in(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant_in(nvars: usize, c: R) -> Self {
        let mut p = Self::zero_in(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero_in(nvars);
        p.add_term(e, R::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, R> {
        &self.terms
    }

    /// Terms in graded lexicographic descending order.
    pub fn terms_grlex_desc(&self) -> Vec<(&Vec<u32>, &R)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex(b.0, a.0));
        v
    }

    pub fn coeff(&self, e: &[u32]) -> R {
        self.terms.get(e).cloned().unwrap_or_else(R::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> R {
        self.terms.iter().find(|(e, _)| e.iter().all(|&x| x == 0)).map(|(_, c)| c.clone()).unwrap_or_else(R::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn promote(&self, n: usize) -> Self {
        if self.nvars == n {
            return self.clone();
        }
        assert_eq!(self.nvars, 0, "variable count mismatch");
        MPoly { nvars: n, terms: self.terms.values().map(|c| (vec![0; n], c.clone())).collect() }
    }

    fn common(&self, o: &Self) -> (Self, Self) {
        let n = self.nvars.max(o.nvars);
        (self.promote(n), o.promote(n))
    }

    pub fn eval(&self, vals: &[R]) -> R {
        self.eval_in(vals, |c| c.clone())
    }

    /// Substitutes values from another ring `S` with a coefficient map.
    pub fn eval_in<S: Ring>(&self, vals: &[S], f: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = f(c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&vals[i].pow(k));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        let mut out = MPoly::zero_in(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn fmt_with(&self, vars: &[&str]) -> String
    where
        R: fmt::Display,
    {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms_grlex_desc() {
            let mut mono = String::new();
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let v = vars.get(k).copied().unwrap_or("x");
                if !mono.is_empty() {
                    mono.push('*');
                }
                if x == 1 {
                    mono.push_str(v);
                } else {
                    mono.push_str(&format!("{}^{}", v, x));
                }
            }
            let cs = c.to_string();
            let compound = cs.contains(' ') || cs.contains('+') || cs[1..].contains('-');
            let cs = if compound { format!("({})", cs) } else { cs };
            parts.push(if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{}", mono)
            } else {
                format!("{}*{}", cs, mono)
            });
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

impl<R: Ring> Ring for MPoly<R> {
    fn zero() -> Self {
        Self::zero_in(0)
    }
    fn one() -> Self {
        Self::constant_in(0, R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let (mut a, b) = self.common(o);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let (a, b) = self.common(o);
        let mut out = Self::zero_in(a.nvars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                out.add_term(ea.iter().zip(eb).map(|(x, y)| x + y).collect(), ca.mul(cb));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }
    fn from_int(n: i64) -> Self {
        Self::constant_in(0, R::from_int(n))
    }
}

impl<R: Ring + Conj> Conj for MPoly<R> {
    fn conj(&self) -> Self {
        self.map(|c| c.conj())
    }
}

impl<R: RationalAlgebra> RationalAlgebra for MPoly<R> {
    fn from_rational(q: &BigRational) -> Self {
        Self::constant_in(0, R::from_rational(q))
    }
}
