use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use crate::factor::factor;
use crate::ring::{format_rational, rational_to_f64, Ring};
use crate::sturm::{isolate_real_roots, SturmSequence};
use crate::unipoly::UniPoly;

/// Irrational real algebraic number: the unique root of `minpoly` in `(lo, hi)`.
///
/// `minpoly` is irreducible, primitive, with positive leading coefficient and degree at least 2.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    minpoly: UniPoly<BigInt>,
    lo: BigRational,
    hi: BigRational,
}

impl AlgebraicNumber {
    /// Caller guarantees irreducibility and a single root in the interval.
    pub fn new_unchecked(minpoly: UniPoly<BigInt>, lo: BigRational, hi: BigRational) -> Self {
        AlgebraicNumber { minpoly, lo, hi }
    }

    pub fn minpoly(&self) -> &UniPoly<BigInt> {
        &self.minpoly
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    fn sturm(&self) -> SturmSequence {
        SturmSequence::new(&self.minpoly)
    }

    /// Halves the interval until its width is at most `width`.
    pub fn refine_to(&mut self, width: &BigRational) {
        let seq = self.sturm();
        let two = BigRational::from_integer(2.into());
        while &(&self.hi - &self.lo) > width {
            let mid = (&self.lo + &self.hi) / &two;
            if seq.count_roots(&self.lo, &mid) > 0 {
                self.hi = mid;
            } else {
                self.lo = mid;
            }
        }
    }

    fn bisect(&mut self, seq: &SturmSequence) {
        let two = BigRational::from_integer(2.into());
        let mid = (&self.lo + &self.hi) / &two;
        if seq.count_roots(&self.lo, &mid) > 0 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut c = self.clone();
        let w = BigRational::new(BigInt::one(), BigInt::one() << 60usize);
        let scale = (rational_to_f64(&self.lo).abs().max(rational_to_f64(&self.hi).abs())).max(1.0);
        let w = w * BigRational::from_integer(BigInt::from(scale.ceil() as i64));
        c.refine_to(&w);
        rational_to_f64(&((&c.lo + &c.hi) / BigRational::from_integer(2.into())))
    }

    fn cmp_rational(&self, q: &BigRational) -> Ordering {
        if q <= &self.lo {
            return Ordering::Greater;
        }
        if q >= &self.hi {
            return Ordering::Less;
        }
        let seq = self.sturm();
        // q is not a root: the root lies in (lo, q] or (q, hi)
        if seq.count_roots(&self.lo, q) > 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    fn cmp_algebraic(&self, other: &AlgebraicNumber) -> Ordering {
        if self.minpoly == other.minpoly {
            let lo = if self.lo > other.lo { &self.lo } else { &other.lo };
            let hi = if self.hi < other.hi { &self.hi } else { &other.hi };
            if lo < hi && self.sturm().count_roots(lo, hi) == 1 {
                return Ordering::Equal;
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let (sa, sb) = (a.sturm(), b.sturm());
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            a.bisect(&sa);
            b.bisect(&sb);
        }
    }
}

/// Exact real algebraic number.
#[derive(Clone, Debug)]
pub enum RealAlgebraic {
    Rational(BigRational),
    Irrational(AlgebraicNumber),
}

impl RealAlgebraic {
    pub fn from_int(n: i64) -> Self {
        RealAlgebraic::Rational(BigRational::from_integer(n.into()))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            RealAlgebraic::Rational(q) => Some(q),
            RealAlgebraic::Irrational(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, RealAlgebraic::Rational(_))
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_integer())
    }

    /// Primitive integer minimal polynomial with positive leading coefficient.
    pub fn minpoly(&self) -> UniPoly<BigInt> {
        match self {
            RealAlgebraic::Rational(q) => UniPoly::new(vec![-q.numer().clone(), q.denom().clone()]),
            RealAlgebraic::Irrational(a) => a.minpoly.clone(),
        }
    }

    pub fn degree(&self) -> usize {
        self.minpoly().degree().unwrap_or(0)
    }

    /// Isolating interval. Rationals report the degenerate interval `[q, q]`.
    pub fn interval(&self) -> (BigRational, BigRational) {
        match self {
            RealAlgebraic::Rational(q) => (q.clone(), q.clone()),
            RealAlgebraic::Irrational(a) => (a.lo.clone(), a.hi.clone()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            RealAlgebraic::Rational(q) => rational_to_f64(q),
            RealAlgebraic::Irrational(a) => a.to_f64(),
        }
    }

    /// Exact test `p(self) = 0`.
    pub fn is_root_of(&self, p: &UniPoly<BigRational>) -> bool {
        match self {
            RealAlgebraic::Rational(q) => p.eval(q).is_zero(),
            RealAlgebraic::Irrational(a) => p.rem(&a.minpoly.to_rational()).is_zero(),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            RealAlgebraic::Rational(q) => RealAlgebraic::Rational(-q),
            RealAlgebraic::Irrational(a) => {
                let m: Vec<BigInt> = a
                    .minpoly
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                    .collect();
                RealAlgebraic::Irrational(AlgebraicNumber {
                    minpoly: UniPoly::new(m).primitive(),
                    lo: -&a.hi,
                    hi: -&a.lo,
                })
            }
        }
    }

    /// `self + q`.
    pub fn add_rational(&self, q: &BigRational) -> Self {
        match self {
            RealAlgebraic::Rational(r) => RealAlgebraic::Rational(r + q),
            RealAlgebraic::Irrational(a) => {
                let shifted = a.minpoly.to_rational().taylor_shift(&-q);
                let (_, prim) = shifted.to_primitive_integer();
                RealAlgebraic::Irrational(AlgebraicNumber { minpoly: prim, lo: &a.lo + q, hi: &a.hi + q })
            }
        }
    }

    /// `q * self`.
    pub fn scale(&self, q: &BigRational) -> Self {
        match self {
            RealAlgebraic::Rational(r) => RealAlgebraic::Rational(r * q),
            _ if q.is_zero() => RealAlgebraic::Rational(q.clone()),
            _ if q.is_negative() => self.scale(&-q).neg(),
            RealAlgebraic::Irrational(a) => {
                // m(x / q) * q^deg
                let deg = a.minpoly.degree().unwrap_or(0);
                let coeffs: Vec<BigRational> = a
                    .minpoly
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| BigRational::from_integer(c.clone()) * Ring::pow(q, (deg - i) as u32))
                    .collect();
                let (_, prim) = UniPoly::new(coeffs).to_primitive_integer();
                RealAlgebraic::Irrational(AlgebraicNumber { minpoly: prim, lo: &a.lo * q, hi: &a.hi * q })
            }
        }
    }

    /// `a + b * self`.
    pub fn affine(&self, a: &BigRational, b: &BigRational) -> Self {
        self.scale(b).add_rational(a)
    }

    /// Closed form for rationals and quadratic irrationals.
    pub fn closed_form(&self) -> Option<String> {
        match self {
            RealAlgebraic::Rational(q) => Some(format_rational(q)),
            RealAlgebraic::Irrational(a) if a.minpoly.degree() == Some(2) => {
                let c = a.minpoly.coeffs();
                let (c0, b, a2) = (&c[0], &c[1], &c[2]);
                let disc: BigInt = b * b - BigInt::from(4) * a2 * c0;
                let (s, core) = split_square(&disc);
                // larger root takes the + sign since a2 > 0
                let plus = *self > conjugate_quadratic(a);
                let g = b.gcd(&s).gcd(&(BigInt::from(2) * a2));
                let num_a = -b / &g;
                let num_s = &s / &g;
                let den = BigInt::from(2) * a2 / &g;
                let sq = if num_s.is_one() { format!("√{}", core) } else { format!("{}√{}", num_s, core) };
                let num = if num_a.is_zero() {
                    if plus {
                        sq
                    } else {
                        format!("-{}", sq)
                    }
                } else {
                    format!("{}{}{}", num_a, if plus { "+" } else { "-" }, sq)
                };
                Some(if den.is_one() {
                    num
                } else if num_a.is_zero() {
                    format!("{}/{}", num, den)
                } else {
                    format!("({})/{}", num, den)
                })
            }
            RealAlgebraic::Irrational(_) => None,
        }
    }
}

fn conjugate_quadratic(a: &AlgebraicNumber) -> RealAlgebraic {
    // the other root: -b/a2 - self
    let c = a.minpoly.coeffs();
    let sum = BigRational::new(-c[1].clone(), c[2].clone());
    let this = RealAlgebraic::Irrational(a.clone());
    this.neg().add_rational(&sum)
}

/// `n = s^2 * core` with `core` square-free (sign kept in `core`).
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut core = n.clone();
    let mut s = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= core.abs() {
        let pp = &p * &p;
        while (&core % &pp).is_zero() {
            core /= &pp;
            s *= &p;
        }
        p += 1;
        if p > BigInt::from(1_000_000) {
            break;
        }
    }
    let r = core.abs().sqrt();
    if &r * &r == core.abs() && core.is_positive() {
        s *= &r;
        core = BigInt::one();
    }
    (s, core)
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        use RealAlgebraic::*;
        match (self, other) {
            (Rational(a), Rational(b)) => a.cmp(b),
            (Irrational(a), Rational(q)) => a.cmp_rational(q),
            (Rational(q), Irrational(a)) => a.cmp_rational(q).reverse(),
            (Irrational(a), Irrational(b)) => a.cmp_algebraic(b),
        }
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.closed_form() {
            Some(s) => write!(f, "{}", s),
            None => {
                let (lo, hi) = self.interval();
                write!(
                    f,
                    "root of {} in [{}, {}] ≈ {:.12}",
                    self.minpoly(),
                    format_rational(&lo),
                    format_rational(&hi),
                    self.to_f64()
                )
            }
        }
    }
}

/// Distinct real roots of `p` in ascending order with their multiplicities.
pub fn real_roots(p: &UniPoly<BigRational>) -> Vec<(RealAlgebraic, usize)> {
    if p.is_zero() {
        return vec![];
    }
    let (_, prim) = p.to_primitive_integer();
    let mut out = Vec::new();
    for (f, m) in factor(&prim) {
        match f.degree() {
            Some(1) => {
                let c = f.coeffs();
                out.push((RealAlgebraic::Rational(BigRational::new(-c[0].clone(), c[1].clone())), m));
            }
            Some(_) => {
                for (lo, hi) in isolate_real_roots(&f) {
                    out.push((RealAlgebraic::Irrational(AlgebraicNumber { minpoly: f.clone(), lo, hi }), m));
                }
            }
            None => {}
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}
