use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;

use crate::algebraic::RealAlgebraic;
use crate::gaussian::Gaussian;
use crate::ring::{format_rational, rational_to_f64, Conj, Field, RationalAlgebra, Ring};
use crate::unipoly::UniPoly;

/// Element `re + i*im` of `K(i)`, `K = Q[t]/(m)` with `m` monic irreducible and real-rooted at the chosen embedding.
///
/// Constants may omit the modulus; it is adopted on first contact with a full element.
#[derive(Clone, Debug)]
pub struct NumberFieldElement {
    modulus: Option<Arc<UniPoly<BigRational>>>,
    re: UniPoly<BigRational>,
    im: UniPoly<BigRational>,
}

impl PartialEq for NumberFieldElement {
    fn eq(&self, o: &Self) -> bool {
        self.re == o.re && self.im == o.im
    }
}

impl NumberFieldElement {
    pub fn rational(q: BigRational) -> Self {
        NumberFieldElement { modulus: None, re: UniPoly::constant(q), im: UniPoly::zero() }
    }

    pub fn gaussian(g: &Gaussian) -> Self {
        NumberFieldElement { modulus: None, re: UniPoly::constant(g.re.clone()), im: UniPoly::constant(g.im.clone()) }
    }

    /// The class of `t` modulo `m`.
    pub fn generator(modulus: &Arc<UniPoly<BigRational>>) -> Self {
        Self::from_parts(modulus, UniPoly::x(), UniPoly::zero())
    }

    pub fn from_parts(modulus: &Arc<UniPoly<BigRational>>, re: UniPoly<BigRational>, im: UniPoly<BigRational>) -> Self {
        NumberFieldElement { re: re.rem(modulus), im: im.rem(modulus), modulus: Some(modulus.clone()) }
    }

    pub fn modulus(&self) -> Option<&Arc<UniPoly<BigRational>>> {
        self.modulus.as_ref()
    }

    pub fn re(&self) -> &UniPoly<BigRational> {
        &self.re
    }

    pub fn im(&self) -> &UniPoly<BigRational> {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        (self.im.is_zero() && self.re.is_constant()).then(|| self.re.coeff(0))
    }

    pub fn with_modulus(mut self, m: &Arc<UniPoly<BigRational>>) -> Self {
        if self.modulus.is_none() {
            self.re = self.re.rem(m);
            self.im = self.im.rem(m);
            self.modulus = Some(m.clone());
        }
        self
    }

    fn merged_modulus(&self, o: &Self) -> Option<Arc<UniPoly<BigRational>>> {
        self.modulus.clone().or_else(|| o.modulus.clone())
    }

    fn reduce(mut self) -> Self {
        if let Some(m) = &self.modulus {
            if self.re.degree().unwrap_or(0) >= m.degree().unwrap_or(0) {
                self.re = self.re.rem(m);
            }
            if self.im.degree().unwrap_or(0) >= m.degree().unwrap_or(0) {
                self.im = self.im.rem(m);
            }
        }
        self
    }

    /// Every rational coefficient, used for content computations.
    pub fn rational_coefficients(&self) -> impl Iterator<Item = &BigRational> {
        self.re.coeffs().iter().chain(self.im.coeffs().iter())
    }

    /// Numeric value at the embedding `t = theta`.
    pub fn to_complex(&self, theta: f64) -> Complex64 {
        let ev = |p: &UniPoly<BigRational>| p.coeffs().iter().rev().fold(0.0, |acc, c| acc * theta + rational_to_f64(c));
        Complex64::new(ev(&self.re), ev(&self.im))
    }

    /// Numeric value with the generator set to the given real algebraic number.
    pub fn approx(&self, theta: &RealAlgebraic) -> Complex64 {
        self.to_complex(theta.to_f64())
    }

    pub fn fmt_var(&self, var: &str) -> String {
        let r = if self.re.is_zero() { None } else { Some(poly_str(&self.re, var)) };
        let i = if self.im.is_zero() { None } else { Some(poly_str(&self.im, var)) };
        match (r, i) {
            (None, None) => "0".into(),
            (Some(r), None) => r,
            (None, Some(i)) => imag_str(&i),
            (Some(r), Some(i)) => {
                let is = imag_str(&i);
                if let Some(rest) = is.strip_prefix('-') {
                    format!("{} - {}", r, rest)
                } else {
                    format!("{} + {}", r, is)
                }
            }
        }
    }
}

fn poly_str(p: &UniPoly<BigRational>, var: &str) -> String {
    if p.is_constant() {
        format_rational(&p.coeff(0))
    } else {
        p.map(|c| Gaussian::real(c.clone())).fmt_var(var)
    }
}

fn imag_str(s: &str) -> String {
    match s {
        "1" => "i".into(),
        "-1" => "-i".into(),
        _ if s.contains(' ') => format!("({})i", s),
        _ => format!("{}i", s),
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("a"))
    }
}

impl Ring for NumberFieldElement {
    fn zero() -> Self {
        NumberFieldElement { modulus: None, re: UniPoly::zero(), im: UniPoly::zero() }
    }
    fn one() -> Self {
        NumberFieldElement { modulus: None, re: UniPoly::one(), im: UniPoly::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        NumberFieldElement { modulus: self.merged_modulus(o), re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }
    fn sub(&self, o: &Self) -> Self {
        NumberFieldElement { modulus: self.merged_modulus(o), re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }
    fn mul(&self, o: &Self) -> Self {
        let modulus = self.merged_modulus(o);
        let (re, im) = if self.im.is_zero() && o.im.is_zero() {
            (self.re.mul(&o.re), UniPoly::zero())
        } else {
            (self.re.mul(&o.re).sub(&self.im.mul(&o.im)), self.re.mul(&o.im).add(&self.im.mul(&o.re)))
        };
        NumberFieldElement { modulus, re, im }.reduce()
    }
    fn neg(&self) -> Self {
        NumberFieldElement { modulus: self.modulus.clone(), re: self.re.neg(), im: self.im.neg() }
    }
    fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }
}

fn inv_real(a: &UniPoly<BigRational>, m: Option<&Arc<UniPoly<BigRational>>>) -> Option<UniPoly<BigRational>> {
    if a.is_zero() {
        return None;
    }
    if a.is_constant() {
        return Some(UniPoly::constant(a.coeff(0).inv()?));
    }
    let m = m?;
    let (g, s, _) = a.ext_gcd(m);
    if g.degree() != Some(0) {
        return None;
    }
    Some(s.rem(m))
}

impl Field for NumberFieldElement {
    fn inv(&self) -> Option<Self> {
        let m = self.modulus.as_ref();
        if self.im.is_zero() {
            let r = inv_real(&self.re, m)?;
            return Some(NumberFieldElement { modulus: self.modulus.clone(), re: r, im: UniPoly::zero() });
        }
        let norm = NumberFieldElement { modulus: self.modulus.clone(), re: self.re.mul(&self.re).add(&self.im.mul(&self.im)), im: UniPoly::zero() }.reduce();
        let ni = inv_real(&norm.re, m)?;
        let ni = NumberFieldElement { modulus: self.modulus.clone(), re: ni, im: UniPoly::zero() };
        Some(self.conj().mul(&ni))
    }
}

impl Conj for NumberFieldElement {
    fn conj(&self) -> Self {
        NumberFieldElement { modulus: self.modulus.clone(), re: self.re.clone(), im: self.im.neg() }
    }
}

impl RationalAlgebra for NumberFieldElement {
    fn from_rational(q: &BigRational) -> Self {
        Self::rational(q.clone())
    }
    fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        NumberFieldElement { modulus: self.modulus.clone(), re: self.re.scale(q), im: self.im.scale(q) }
    }
}

/// Monic modulus and generator for the field generated by a real algebraic number.
pub fn field_of(value: &RealAlgebraic) -> (Arc<UniPoly<BigRational>>, NumberFieldElement) {
    let m = Arc::new(value.minpoly().to_rational().monic());
    let g = NumberFieldElement::generator(&m);
    (m, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::real_roots;
    use crate::ring::rat;
    use crate::unipoly::rat_poly;

    #[test]
    fn golden_field_arithmetic() {
        let phi = real_roots(&rat_poly(&[-1, -1, 1]))[1].0.clone();
        let (m, a) = field_of(&phi);
        // a^2 = a + 1
        assert_eq!(a.mul(&a), a.add(&NumberFieldElement::one()));
        let inv = a.inv().unwrap();
        assert_eq!(inv.mul(&a), NumberFieldElement::one());
        assert_eq!(inv, a.sub(&NumberFieldElement::one()));
        assert!((a.approx(&phi).re - 1.618033988749895).abs() < 1e-12);
        assert_eq!(m.degree(), Some(2));
    }

    #[test]
    fn gaussian_part_inverse() {
        let s2 = real_roots(&rat_poly(&[-2, 0, 1]))[1].0.clone();
        let (_, a) = field_of(&s2);
        let z = a.add(&NumberFieldElement::gaussian(&Gaussian::i()));
        let zi = z.inv().unwrap();
        assert_eq!(z.mul(&zi), NumberFieldElement::one());
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn rational_field_degenerates() {
        let (_, a) = field_of(&RealAlgebraic::from_int(-3));
        assert_eq!(a.as_rational(), Some(rat(-3)));
        assert_eq!(a.to_string(), "-3");
    }
}
