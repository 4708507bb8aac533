use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-style Hermite normal form of the lattice spanned by `vectors` in Z^dim.
///
/// Returns the nonzero rows; pivots are positive and entries above each pivot are reduced.
pub fn hermite_normal_form(vectors: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vectors.iter().filter(|v| v.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..dim {
        // gcd-reduce the column among remaining rows
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            for &i in &nz {
                if i == p {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[p][col]);
                let pr = rows[p].clone();
                for (a, b) in rows[i].iter_mut().zip(&pr) {
                    *a -= &q * b;
                }
            }
        }
        if let Some(i) = rows.iter().position(|r| !r[col].is_zero()) {
            let mut r = rows.remove(i);
            if r[col].is_negative() {
                r.iter_mut().for_each(|x| *x = -&*x);
            }
            out.push(r);
            pivots.push(col);
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    // reduce entries above pivots
    for k in 0..out.len() {
        let c = pivots[k];
        for i in 0..k {
            let q = out[i][c].div_floor(&out[k][c]);
            if !q.is_zero() {
                let pr = out[k].clone();
                for (a, b) in out[i].iter_mut().zip(&pr) {
                    *a -= &q * b;
                }
            }
        }
    }
    out
}

/// Whether `vectors` generate all of Z^dim.
pub fn spans_integer_lattice(vectors: &[Vec<BigInt>], dim: usize) -> bool {
    let h = hermite_normal_form(vectors, dim);
    if h.len() != dim {
        return false;
    }
    let mut prod = BigInt::one();
    for (k, row) in h.iter().enumerate() {
        let c = row.iter().position(|x| !x.is_zero()).unwrap();
        if c != k {
            return false;
        }
        prod *= &row[c];
    }
    prod.is_one()
}
