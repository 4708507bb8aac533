use num_rational::BigRational;

use crate::ring::{Field, Ring};
use crate::unipoly::UniPoly;

pub type Matrix<R> = Vec<Vec<R>>;

/// Determinant over any commutative ring, division free.
///
/// Laplace expansion along rows with minors memoized by column subset;
/// `O(n 2^n)` ring operations, intended for `n <= 16`.
pub fn det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    assert!(n <= 20, "determinant size too large");
    assert!(m.iter().all(|r| r.len() == n), "square matrix expected");
    let full = 1usize << n;
    let mut minors: Vec<Option<R>> = vec![None; full];
    minors[0] = Some(R::one());
    // masks grouped by popcount so that row k uses masks of size k+1
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 1..full {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for (k, masks) in by_size.iter().enumerate().skip(1) {
        let row = &m[k - 1];
        for &mask in masks {
            let mut acc = R::zero();
            let mut pos = 0usize;
            for (j, entry) in row.iter().enumerate() {
                if mask & (1 << j) == 0 {
                    continue;
                }
                if !entry.is_zero() {
                    if let Some(sub) = &minors[mask ^ (1 << j)] {
                        if !sub.is_zero() {
                            let t = entry.mul(sub);
                            // sign of column j as the last row's pivot among the selected columns
                            if (k - 1 + pos) % 2 == 0 {
                                acc = acc.add(&t);
                            } else {
                                acc = acc.sub(&t);
                            }
                        }
                    }
                }
                pos += 1;
            }
            minors[mask] = Some(acc);
        }
        if k >= 2 {
            for &mask in &by_size[k - 1] {
                minors[mask] = None;
            }
        }
    }
    minors[full - 1].take().unwrap()
}

pub fn mat_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Matrix<R> {
    let n = a.len();
    let p = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![R::zero(); p]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..p {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&aik.mul(&b[k][j]));
                }
            }
        }
    }
    out
}

pub fn identity<R: Ring>(n: usize) -> Matrix<R> {
    (0..n).map(|i| (0..n).map(|j| if i == j { R::one() } else { R::zero() }).collect()).collect()
}

pub fn is_zero_matrix<R: Ring>(m: &[Vec<R>]) -> bool {
    m.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for j in 0..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = f.mul(&m[r][j]);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Basis of the right kernel.
pub fn kernel<F: Field>(m: &[Vec<F>]) -> Vec<Vec<F>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = a[r][free].neg();
        }
        out.push(v);
    }
    out
}

/// `det(A - x I)` for a rational matrix.
pub fn char_poly(a: &[Vec<BigRational>]) -> UniPoly<BigRational> {
    let n = a.len();
    let m: Matrix<UniPoly<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UniPoly::constant(a[i][j].clone());
                    if i == j {
                        c.sub(&UniPoly::x())
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    det(&m)
}
