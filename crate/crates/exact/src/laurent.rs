use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::ring::{Conj, RationalAlgebra, Ring};
use crate::ExactError;

/// Laurent polynomial in `dim` variables `z_1..z_dim` with coefficients in `R`.
///
/// `dim == 0` marks a dimension-free constant; it is promoted when combined with a polynomial of positive dimension.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<R> {
    dim: usize,
    terms: BTreeMap<Vec<i64>, R>,
}

impl<R: Ring> LaurentPoly<R> {
    pub fn zero_in(dim: usize) -> Self {
        LaurentPoly { dim, terms: BTreeMap::new() }
    }

    pub fn constant_in(dim: usize, c: R) -> Self {
        Self::monomial(vec![0; dim], c)
    }

    pub fn monomial(exp: Vec<i64>, c: R) -> Self {
        let dim = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { dim, terms }
    }

    /// `z_axis^power` in `dim` variables.
    pub fn var(dim: usize, axis: usize, power: i64) -> Self {
        let mut e = vec![0; dim];
        e[axis] = power;
        Self::monomial(e, R::one())
    }

    pub fn from_terms(dim: usize, it: impl IntoIterator<Item = (Vec<i64>, R)>) -> Self {
        let mut p = Self::zero_in(dim);
        for (e, c) in it {
            assert_eq!(e.len(), dim, "exponent arity");
            p.add_term(e, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, R> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Vec<i64>, R> {
        self.terms
    }

    pub fn coeff(&self, e: &[i64]) -> R {
        if self.dim == 0 {
            if e.iter().all(|&x| x == 0) {
                return self.terms.get(&Vec::new()).cloned().unwrap_or_else(R::zero);
            }
            return R::zero();
        }
        self.terms.get(e).cloned().unwrap_or_else(R::zero)
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: R) {
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
        self.coeff(&vec![0; self.dim])
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-expresses a dimension-free constant in `dim` variables.
    pub fn promote(&self, dim: usize) -> Result<Self, ExactError> {
        if self.dim == dim {
            return Ok(self.clone());
        }
        if self.dim == 0 {
            return Ok(LaurentPoly {
                dim,
                terms: self.terms.iter().map(|(_, c)| (vec![0; dim], c.clone())).collect(),
            });
        }
        Err(ExactError::DimensionMismatch(self.dim, dim))
    }

    fn common(&self, o: &Self) -> Result<(Self, Self), ExactError> {
        let d = if self.dim == 0 { o.dim } else { self.dim };
        Ok((self.promote(d)?, o.promote(d)?))
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, ExactError> {
        let (mut a, b) = self.common(o)?;
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        Ok(a)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, ExactError> {
        let (a, b) = self.common(o)?;
        let mut out = Self::zero_in(a.dim);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero_in(self.dim);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.mul(c));
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        let mut out = LaurentPoly::zero_in(self.dim);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Multiplies by `z^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        if self.dim == 0 {
            return self.promote(shift.len()).unwrap().shift(shift);
        }
        LaurentPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone())).collect(),
        }
    }

    /// Componentwise minimum and maximum exponent, `None` for zero.
    pub fn exponent_box(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for e in it {
            for k in 0..e.len() {
                lo[k] = lo[k].min(e[k]);
                hi[k] = hi[k].max(e[k]);
            }
        }
        Some((lo, hi))
    }

    /// Evaluates with `z^k` mapped by `mono` into a ring `S`.
    pub fn eval_with<S: Ring>(&self, mono: impl Fn(&[i64]) -> S, coeff: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            acc = acc.add(&coeff(c).mul(&mono(e)));
        }
        acc
    }

    pub fn fmt_with(&self, vars: &[&str]) -> String
    where
        R: fmt::Display,
    {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let v = vars.get(k).copied().unwrap_or("z");
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
            let term = if mono.is_empty() {
                if compound {
                    format!("({})", cs)
                } else {
                    cs
                }
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{}", mono)
            } else if compound {
                format!("({})*{}", cs, mono)
            } else {
                format!("{}*{}", cs, mono)
            };
            parts.push(term);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

impl<R: Ring + Conj> LaurentPoly<R> {
    /// `z^k -> z^-k` together with coefficient conjugation.
    pub fn involute(&self) -> Self {
        LaurentPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.conj())).collect(),
        }
    }
}

impl<R: Ring + Conj> Conj for LaurentPoly<R> {
    fn conj(&self) -> Self {
        self.involute()
    }
}

impl<R: Ring> Ring for LaurentPoly<R> {
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
        self.checked_add(o).expect("Laurent dimension mismatch")
    }
    fn sub(&self, o: &Self) -> Self {
        self.checked_add(&o.neg()).expect("Laurent dimension mismatch")
    }
    fn mul(&self, o: &Self) -> Self {
        self.checked_mul(o).expect("Laurent dimension mismatch")
    }
    fn neg(&self) -> Self {
        LaurentPoly { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.is_constant() && self.constant_term().is_one()
    }
    fn from_int(n: i64) -> Self {
        Self::constant_in(0, R::from_int(n))
    }
}

impl<R: RationalAlgebra> RationalAlgebra for LaurentPoly<R> {
    fn from_rational(q: &BigRational) -> Self {
        Self::constant_in(0, R::from_rational(q))
    }
    fn scale(&self, q: &BigRational) -> Self {
        let mut out = Self::zero_in(self.dim);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.scale(q));
        }
        out
    }
}

impl<R: Ring + fmt::Display> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = if self.dim == 1 { vec!["z".into()] } else { (1..=self.dim).map(|k| format!("z{}", k)).collect() };
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.fmt_with(&refs))
    }
}
