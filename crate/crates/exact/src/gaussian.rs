use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::ring::{format_rational, parse_rational, rational_to_f64, Conj, Field, RationalAlgebra, Ring};

/// Element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Gaussian { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        Gaussian { re: BigRational::zero(), im: BigRational::from_integer(BigInt::from(1)) }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    /// Accepts `"a"`, `"a/b"`, `"bi"`, `"a+bi"`, `"a-b/ci"` and `"i"`.
    pub fn parse(s: &str) -> Option<Gaussian> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return None;
        }
        if let Some(body) = s.strip_suffix('i') {
            // split at the last sign that is not the first character
            let split = body
                .char_indices()
                .skip(1)
                .filter(|(_, c)| *c == '+' || *c == '-')
                .map(|(k, _)| k)
                .last();
            let (re_part, im_part) = match split {
                Some(k) => (&body[..k], &body[k..]),
                None => ("", body),
            };
            let im = match im_part {
                "" | "+" => BigRational::from_integer(1.into()),
                "-" => BigRational::from_integer((-1).into()),
                t => parse_rational(t.strip_prefix('+').unwrap_or(t))?,
            };
            let re = if re_part.is_empty() { BigRational::zero() } else { parse_rational(re_part)? };
            Some(Gaussian { re, im })
        } else {
            parse_rational(&s).map(Gaussian::real)
        }
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        let one = BigRational::from_integer(1.into());
        let im = if self.im == one {
            String::new()
        } else if self.im == -one.clone() {
            "-".to_string()
        } else {
            format_rational(&self.im)
        };
        if self.re.is_zero() {
            write!(f, "{}i", im)
        } else if im.starts_with('-') {
            write!(f, "{}{}i", format_rational(&self.re), im)
        } else {
            write!(f, "{}+{}i", format_rational(&self.re), im)
        }
    }
}

impl Ring for Gaussian {
    fn zero() -> Self {
        Gaussian { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn one() -> Self {
        Gaussian::real(BigRational::from_integer(1.into()))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Gaussian { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Self) -> Self {
        Gaussian { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return Gaussian::real(&self.re * &o.re);
        }
        Gaussian {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn neg(&self) -> Self {
        Gaussian { re: -&self.re, im: -&self.im }
    }
    fn from_int(n: i64) -> Self {
        Gaussian::real(BigRational::from_integer(n.into()))
    }
}

impl Field for Gaussian {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        let n = self.norm_sq();
        Some(Gaussian { re: &self.re / &n, im: -&self.im / &n })
    }
}

impl Conj for Gaussian {
    fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -&self.im }
    }
}

impl RationalAlgebra for Gaussian {
    fn from_rational(q: &BigRational) -> Self {
        Gaussian::real(q.clone())
    }
    fn scale(&self, q: &BigRational) -> Self {
        Gaussian { re: &self.re * q, im: &self.im * q }
    }
}
