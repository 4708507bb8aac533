//! Numerical band structure: grid sampling of the Floquet symbol and finite-torus spectra.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde_json::json;

use crate::graph::PeriodicGraph;

/// `H(e^{2 pi i theta})` as a dense complex matrix.
pub fn symbol_at(g: &PeriodicGraph, theta: &[f64]) -> Vec<Vec<Complex64>> {
    let n = g.nu();
    let mut h = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (i, row) in g.hopping().iter().enumerate() {
        for (j, map) in row.iter().enumerate() {
            for (k, w) in map {
                let phase: f64 = k.iter().zip(theta).map(|(a, t)| *a as f64 * t).sum::<f64>() * 2.0 * PI;
                h[i][j] += w.to_complex() * Complex64::from_polar(1.0, phase);
            }
        }
        h[i][i] += flatband_exact::ring::rational_to_f64(&g.potential()[i]);
    }
    h
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Cyclic Jacobi on the real symmetric embedding `[[A, -B], [B, A]]`; every eigenvalue appears twice there.
pub fn hermitian_eigenvalues(h: &[Vec<Complex64>]) -> Vec<f64> {
    let n = h.len();
    let m = 2 * n;
    let mut a = vec![vec![0.0f64; m]; m];
    for i in 0..n {
        for j in 0..n {
            let z = h[i][j];
            a[i][j] = z.re;
            a[i + n][j + n] = z.re;
            a[i][j + n] = -z.im;
            a[i + n][j] = z.im;
        }
    }
    let mut ev = jacobi_eigenvalues(a);
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev.into_iter().step_by(2).collect()
}

const SWEEP_LIMIT: usize = 60;

fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    let norm: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    for _ in 0..SWEEP_LIMIT {
        let off: f64 = (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).map(|(p, q)| a[p][q] * a[p][q]).sum();
        if off.sqrt() <= 1e-15 * norm.max(1e-300) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

#[derive(Clone, Debug)]
pub struct BandSummary {
    pub index: usize,
    pub min: f64,
    pub max: f64,
    pub flat: bool,
}

#[derive(Clone, Debug)]
pub struct BandSample {
    pub dim: usize,
    pub grid: usize,
    /// `(theta, sorted eigenvalues)` for each grid point.
    pub points: Vec<(Vec<f64>, Vec<f64>)>,
    pub bands: Vec<BandSummary>,
    pub tol: f64,
}

pub const DEFAULT_FLAT_TOL: f64 = 1e-9;

pub fn sample_bands(g: &PeriodicGraph, grid: usize) -> BandSample {
    sample_bands_with_tol(g, grid, DEFAULT_FLAT_TOL)
}

/// Samples the `grid^d` points `theta = j / grid`.
pub fn sample_bands_with_tol(g: &PeriodicGraph, grid: usize, tol: f64) -> BandSample {
    let d = g.dim();
    let total = grid.pow(d as u32);
    let mut points = Vec::with_capacity(total);
    for idx in 0..total {
        let mut rest = idx;
        let theta: Vec<f64> = (0..d)
            .map(|_| {
                let j = rest % grid;
                rest /= grid;
                j as f64 / grid as f64
            })
            .collect();
        let ev = hermitian_eigenvalues(&symbol_at(g, &theta));
        points.push((theta, ev));
    }
    let bands = (0..g.nu())
        .map(|b| {
            let (mut min, mut max) = (f64::INFINITY, f64::NEG_INFINITY);
            for (_, ev) in &points {
                min = min.min(ev[b]);
                max = max.max(ev[b]);
            }
            BandSummary { index: b, min, max, flat: max - min < tol }
        })
        .collect();
    BandSample { dim: d, grid, points, bands, tol }
}

impl BandSample {
    /// Values that occur at every grid point, with the least number of times they occur.
    ///
    /// Unlike the per-band flags this sees flat bands that cross dispersive ones.
    pub fn flat_values(&self, tol: f64) -> Vec<(f64, usize)> {
        let Some((_, first)) = self.points.first() else { return vec![] };
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &cand in first {
            if out.iter().any(|(v, _)| (v - cand).abs() < tol) {
                continue;
            }
            let mult = self
                .points
                .iter()
                .map(|(_, ev)| ev.iter().filter(|x| (*x - cand).abs() < tol).count())
                .min()
                .unwrap_or(0);
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        let names: Vec<String> = (1..=self.dim).map(|k| format!("theta_{}", k)).chain((1..=self.bands.len()).map(|b| format!("E_{}", b))).collect();
        s.push_str(&names.join(","));
        s.push('\n');
        for (theta, ev) in &self.points {
            let row: Vec<String> = theta.iter().chain(ev.iter()).map(|x| format!("{:.15e}", x)).collect();
            s.push_str(&row.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "dim": self.dim,
            "grid": self.grid,
            "tol": self.tol,
            "bands": self.bands.iter().map(|b| json!({"index": b.index, "min": b.min, "max": b.max, "flat": b.flat})).collect::<Vec<_>>(),
            "points": self.points.iter().map(|(t, e)| json!({"theta": t, "energies": e})).collect::<Vec<_>>(),
        })
    }
}

/// Spectrum of the graph on the torus `(Z/N)^d`, ascending, by nalgebra's Hermitian eigensolver.
pub fn torus_spectrum(g: &PeriodicGraph, n: usize) -> Vec<f64> {
    let d = g.dim();
    let cells = n.pow(d as u32);
    let size = g.nu() * cells;
    let mut m = DMatrix::<Complex64>::zeros(size, size);
    let cell_index = |r: &[i64]| -> usize {
        r.iter().rev().fold(0usize, |acc, &x| acc * n + x.rem_euclid(n as i64) as usize)
    };
    let coords = |mut c: usize| -> Vec<i64> {
        (0..d)
            .map(|_| {
                let x = (c % n) as i64;
                c /= n;
                x
            })
            .collect()
    };
    let h = g.hopping();
    for c in 0..cells {
        let r = coords(c);
        for i in 0..g.nu() {
            let row = i * cells + c;
            m[(row, row)] += Complex64::new(flatband_exact::ring::rational_to_f64(&g.potential()[i]), 0.0);
            for j in 0..g.nu() {
                for (k, w) in &h[i][j] {
                    let target: Vec<i64> = r.iter().zip(k).map(|(a, b)| a + b).collect();
                    let col = j * cells + cell_index(&target);
                    m[(row, col)] += w.to_complex();
                }
            }
        }
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

/// Number of torus eigenvalues within `tol` of `lambda`.
pub fn torus_count(spectrum: &[f64], lambda: f64, tol: f64) -> usize {
    spectrum.iter().filter(|x| (*x - lambda).abs() <= tol).count()
}
