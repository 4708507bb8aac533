//! Local symmetries of the fundamental cell and the flat bands they force.
//!
//! Split the symbol as `A(z) = B(z) + C` with `C` the offset-zero hopping plus
//! the potential. A permutation that only exchanges vertices with identical
//! rows in `B` makes `B` vanish on `W = span{e_u - e_v : u, v in one orbit}`.
//! If `C` also preserves `W` (it commutes with the permutation, or the orbit
//! partition is equitable for `C`) then `A(z)` restricted to `W` is the constant
//! matrix `C|W` and its `nu - r` eigenvalues are flat bands with eigenvectors in
//! a single cell.

use std::collections::BTreeMap;
use std::fmt;

use flatband_exact::algebraic::real_roots;
use flatband_exact::matrix::{det, kernel};
use flatband_exact::{field_of, BigRational, Gaussian, LaurentPoly, NumberFieldElement, RationalAlgebra, RealAlgebraic, Ring, UniPoly};

use crate::eigvec::{verify_eigenvector, CompactEigenvector};
use crate::error::FlatBandError;
use crate::graph::{Offset, PeriodicGraph};

pub const MAX_SYMMETRY_NU: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SymmetryMode {
    /// The permutation is an automorphism of `C`.
    Strict,
    /// The orbit partition is equitable for `C`.
    #[default]
    Equitable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSymmetry {
    /// `perm[v]` is the image of `v`.
    pub perm: Vec<usize>,
    /// Orbits in order of their smallest vertex, fixed points included.
    pub cycles: Vec<Vec<usize>>,
    pub mode: SymmetryMode,
}

impl LocalSymmetry {
    pub fn new(perm: Vec<usize>, mode: SymmetryMode) -> Self {
        let mut seen = vec![false; perm.len()];
        let mut cycles = Vec::new();
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut v = perm[s];
            while v != s {
                seen[v] = true;
                c.push(v);
                v = perm[v];
            }
            cycles.push(c);
        }
        LocalSymmetry { perm, cycles, mode }
    }

    /// Number of orbits `r`.
    pub fn orbit_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.orbit_count() == self.perm.len()
    }

    pub fn cycle_sizes(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c.len()).collect()
    }
}

impl fmt::Display for LocalSymmetry {
    /// Cycle notation without fixed points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cycles
            .iter()
            .filter(|c| c.len() > 1)
            .map(|c| format!("({})", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        if parts.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", parts.concat())
        }
    }
}

type Row = Vec<BTreeMap<Offset, Gaussian>>;

fn periodic_rows(g: &PeriodicGraph) -> Vec<Row> {
    let zero = vec![0; g.dim()];
    g.hopping()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|mut m| {
                    m.remove(&zero);
                    m
                })
                .collect()
        })
        .collect()
}

/// `C`: offset-zero hopping plus the potential on the diagonal.
pub fn cell_matrix(g: &PeriodicGraph) -> Vec<Vec<Gaussian>> {
    let zero = vec![0; g.dim()];
    let h = g.hopping();
    (0..g.nu())
        .map(|i| {
            (0..g.nu())
                .map(|j| {
                    let w = h[i][j].get(&zero).cloned().unwrap_or_else(Gaussian::zero);
                    if i == j {
                        w.add(&Gaussian::real(g.potential()[i].clone()))
                    } else {
                        w
                    }
                })
                .collect()
        })
        .collect()
}

fn satisfies_mode(c: &[Vec<Gaussian>], sym: &LocalSymmetry) -> bool {
    let n = c.len();
    match sym.mode {
        SymmetryMode::Strict => (0..n).all(|i| (0..n).all(|j| c[sym.perm[i]][sym.perm[j]] == c[i][j])),
        SymmetryMode::Equitable => sym.cycles.iter().all(|target| {
            sym.cycles.iter().all(|source| {
                let sums: Vec<Gaussian> =
                    source.iter().map(|&i| target.iter().fold(Gaussian::zero(), |acc, &j| acc.add(&c[i][j]))).collect();
                sums.iter().all(|s| s == &sums[0])
            })
        }),
    }
}

/// Checks that `perm` only exchanges vertices with equal periodic rows and satisfies the mode's condition on `C`.
pub fn is_local_symmetry(g: &PeriodicGraph, sym: &LocalSymmetry) -> bool {
    let n = g.nu();
    if sym.perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &sym.perm {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let rows = periodic_rows(g);
    (0..n).all(|i| rows[i] == rows[sym.perm[i]]) && satisfies_mode(&cell_matrix(g), sym)
}

/// `A(z) 1_X` is constant on every orbit for every orbit `X`.
pub fn w_invariant(g: &PeriodicGraph, sym: &LocalSymmetry) -> bool {
    let sym_entries = crate::floquet::floquet_symbol(g).entries;
    sym.cycles.iter().all(|x| {
        let image: Vec<LaurentPoly<Gaussian>> = (0..g.nu())
            .map(|i| x.iter().fold(LaurentPoly::zero_in(g.dim()), |acc, &j| acc.add(&sym_entries[i][j])))
            .collect();
        sym.cycles.iter().all(|orbit| orbit.iter().all(|&i| image[i] == image[orbit[0]]))
    })
}

/// Every nontrivial local symmetry of `g` in the given mode.
pub fn find_local_symmetries(g: &PeriodicGraph, mode: SymmetryMode) -> Result<Vec<LocalSymmetry>, FlatBandError> {
    let n = g.nu();
    if n > MAX_SYMMETRY_NU {
        return Err(FlatBandError::Precondition(format!("symmetry search supports nu <= {}", MAX_SYMMETRY_NU)));
    }
    let rows = periodic_rows(g);
    let c = cell_matrix(g);
    // an automorphism of C also fixes its diagonal
    let allowed: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| rows[i] == rows[j] && (mode == SymmetryMode::Equitable || c[i][i] == c[j][j])).collect())
        .collect();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(0, &allowed, &mut perm, &mut used, &mut |p| {
        let sym = LocalSymmetry::new(p.to_vec(), mode);
        if !sym.is_trivial() && satisfies_mode(&c, &sym) {
            out.push(sym);
        }
    });
    Ok(out)
}

fn search(v: usize, allowed: &[Vec<usize>], perm: &mut Vec<usize>, used: &mut Vec<bool>, emit: &mut dyn FnMut(&[usize])) {
    if v == allowed.len() {
        emit(perm);
        return;
    }
    for &u in &allowed[v] {
        if !used[u] {
            used[u] = true;
            perm[v] = u;
            search(v + 1, allowed, perm, used, emit);
            used[u] = false;
        }
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Orthogonal basis of `W`: Gram-Schmidt on the orbit indicators followed by the standard basis.
pub fn complement_basis(sym: &LocalSymmetry) -> Vec<Vec<BigRational>> {
    let n = sym.perm.len();
    let mut inputs: Vec<Vec<BigRational>> =
        sym.cycles.iter().map(|c| (0..n).map(|v| BigRational::from_int(c.contains(&v) as i64)).collect()).collect();
    inputs.extend((0..n).map(|k| (0..n).map(|v| BigRational::from_int((v == k) as i64)).collect()));
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    for mut x in inputs {
        for y in &basis {
            let c = dot(&x, y) / dot(y, y);
            for (a, b) in x.iter_mut().zip(y) {
                *a -= &c * b;
            }
        }
        if x.iter().any(|a| !a.is_zero()) {
            basis.push(x);
        }
    }
    basis.split_off(sym.orbit_count())
}

/// A flat band forced by a local symmetry, with one single-cell eigenvector per dimension.
#[derive(Clone, Debug)]
pub struct SymmetryBand {
    pub value: RealAlgebraic,
    pub eigenvectors: Vec<CompactEigenvector>,
}

/// The `nu - r` eigenvalues of `C` on `W`, counted by the eigenvectors returned.
pub fn symmetry_flat_bands(g: &PeriodicGraph, sym: &LocalSymmetry) -> Result<Vec<SymmetryBand>, FlatBandError> {
    if sym.is_trivial() {
        return Err(FlatBandError::Precondition("symmetry has no nontrivial orbit".into()));
    }
    if !is_local_symmetry(g, sym) {
        return Err(FlatBandError::Precondition(format!("{} is not a local symmetry in {:?} mode", sym, sym.mode)));
    }
    let c = cell_matrix(g);
    let y = complement_basis(sym);
    let m = y.len();
    let n = g.nu();
    let cy: Vec<Vec<Gaussian>> = y
        .iter()
        .map(|yj| (0..n).map(|i| (0..n).fold(Gaussian::zero(), |acc, k| acc.add(&c[i][k].scale(&yj[k])))).collect())
        .collect();
    // block[i][j] = <Y_i, C Y_j> / <Y_i, Y_i>
    let block: Vec<Vec<Gaussian>> = (0..m)
        .map(|i| {
            let norm = dot(&y[i], &y[i]);
            (0..m)
                .map(|j| (0..n).fold(Gaussian::zero(), |acc, k| acc.add(&cy[j][k].scale(&y[i][k]))).scale(&(BigRational::one() / &norm)))
                .collect()
        })
        .collect();
    let shifted: Vec<Vec<UniPoly<Gaussian>>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let e = UniPoly::constant(block[i][j].clone());
                    if i == j {
                        e.sub(&UniPoly::x())
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    let cp = det(&shifted);
    if cp.coeffs().iter().any(|c| !c.im.is_zero()) {
        return Err(FlatBandError::Precondition("block characteristic polynomial is not real".into()));
    }
    let cp = cp.map(|c| c.re.clone());
    let mut bands = Vec::new();
    for (value, _) in real_roots(&cp) {
        let (modulus, theta) = field_of(&value);
        let mat: Vec<Vec<NumberFieldElement>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let x = NumberFieldElement::gaussian(&block[i][j]).with_modulus(&modulus);
                        if i == j {
                            x.sub(&theta)
                        } else {
                            x
                        }
                    })
                    .collect()
            })
            .collect();
        let mut eigenvectors = Vec::new();
        for coeffs in kernel(&mat) {
            let mut values = BTreeMap::new();
            for v in 0..n {
                let x = coeffs.iter().zip(&y).fold(NumberFieldElement::zero().with_modulus(&modulus), |acc, (a, yj)| {
                    acc.add(&a.mul(&NumberFieldElement::rational(yj[v].clone())))
                });
                if !x.is_zero() {
                    values.insert((v, vec![0; g.dim()]), x);
                }
            }
            let ev = CompactEigenvector { lambda: value.clone(), modulus: modulus.clone(), dim: g.dim(), values };
            if !verify_eigenvector(g, &ev) {
                return Err(FlatBandError::NotFlat(format!("symmetry eigenvector for {} failed verification", value)));
            }
            eigenvectors.push(ev);
        }
        bands.push(SymmetryBand { value, eigenvectors });
    }
    Ok(bands)
}
