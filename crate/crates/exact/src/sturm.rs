use num_bigint::BigInt;
use num_rational::BigRational;

use crate::ring::Ring;
use crate::unipoly::UniPoly;

/// Sturm chain of a square-free integer polynomial, each member rescaled to a primitive integer polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<UniPoly<BigInt>>,
}

impl SturmSequence {
    pub fn new(p: &UniPoly<BigInt>) -> Self {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if d.is_zero() {
            return SturmSequence { chain };
        }
        chain.push(d.primitive());
        loop {
            let n = chain.len();
            let a = chain[n - 2].to_rational();
            let b = chain[n - 1].to_rational();
            let r = a.rem(&b);
            if r.is_zero() {
                break;
            }
            let (c, prim) = r.to_primitive_integer();
            // next = -r up to a positive factor
            let next = if c > BigRational::zero() { prim.neg() } else { prim };
            chain.push(next);
        }
        SturmSequence { chain }
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Disjoint isolating intervals `(lo, hi]` of the real roots of a square-free integer polynomial, ascending.
///
/// Intervals are shrunk to integer unit width when possible.
pub fn isolate_real_roots(p: &UniPoly<BigInt>) -> Vec<(BigRational, BigRational)> {
    if p.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let seq = SturmSequence::new(p);
    let b = BigRational::from_integer(p.cauchy_bound());
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = seq.count_roots(&lo, &hi);
        if n == 0 {
            continue;
        }
        let width = &hi - &lo;
        if n == 1 && width <= BigRational::from_integer(1.into()) {
            out.push((lo, hi));
            continue;
        }
        let mid = split_point(&lo, &hi);
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn split_point(lo: &BigRational, hi: &BigRational) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let mid = (lo + hi) / &two;
    if hi - lo > BigRational::from_integer(1.into()) {
        let f = mid.floor();
        if &f > lo && &f < hi {
            return f;
        }
    }
    mid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use crate::unipoly::int_poly;

    #[test]
    fn golden_ratio_intervals() {
        let p = int_poly(&[-1, -1, 1]);
        let iv = isolate_real_roots(&p);
        assert_eq!(iv, vec![(rat(-1), rat(0)), (rat(1), rat(2))]);
    }

    #[test]
    fn counts_match_known_roots() {
        // (x-1)(x+2)(x-3)
        let p = int_poly(&[-1, 1]).mul(&int_poly(&[2, 1])).mul(&int_poly(&[-3, 1]));
        let s = SturmSequence::new(&p);
        assert_eq!(s.count_roots(&rat(-10), &rat(10)), 3);
        assert_eq!(s.count_roots(&rat(0), &rat(2)), 1);
        assert_eq!(s.count_roots(&rat(1), &rat(2)), 0);
        assert_eq!(isolate_real_roots(&p).len(), 3);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&int_poly(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn close_roots_separate() {
        // (10x - 1)(10x - 2)(x^2 - 2)
        let p = int_poly(&[-1, 10]).mul(&int_poly(&[-2, 10])).mul(&int_poly(&[-2, 0, 1]));
        let iv = isolate_real_roots(&p);
        assert_eq!(iv.len(), 4);
        for w in iv.windows(2) {
            assert!(w[0].1 <= w[1].0);
        }
    }
}
