//! Quick combinatorial screen for two vertices per cell, unit weights and no potential.
//!
//! With `f_i(z) = sum_{k in I_ii} z^k` and `g(z) = sum_{p in I_01} z^p`, a flat band
//! `l` satisfies `(f_0 - l)(f_1 - l) = g(z) g(1/z)`. Comparing top degrees along each
//! axis, the constant term, and the value at `z = 1` yields necessary conditions and
//! at most one integer candidate.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Roots;
use serde_json::{json, Value};

use crate::error::FlatBandError;
use crate::graph::{Offset, PeriodicGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `k_max(r) + k'_max(r) != p_max(r) - p_min(r)` along axis `r`.
    DegreeMismatch { axis: usize },
    /// `|I_01| = 1`.
    SingleCoupling,
    /// `I_00` or `I_11` is empty.
    EmptyDiagonal { first: bool, second: bool },
    /// `|I_01| - |I_00 ∩ I_11|` is not a perfect square.
    NoIntegerRoot { value: i64 },
    /// The value at `z = 1` is not an integer.
    IrrationalOther,
    /// The two candidate formulas disagree.
    Disagreement { vap: Vec<i64>, other: i64 },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::DegreeMismatch { axis } => write!(f, "condition (i): k_max + k'_max ≠ p_max − p_min along axis {}", axis),
            Certificate::SingleCoupling => write!(f, "condition (ii): |I₁₂|=1"),
            Certificate::EmptyDiagonal { first: true, second: true } => write!(f, "condition (iii): I₁₁=∅ and I₂₂=∅"),
            Certificate::EmptyDiagonal { first: true, .. } => write!(f, "condition (iii): I₁₁=∅"),
            Certificate::EmptyDiagonal { .. } => write!(f, "condition (iii): I₂₂=∅"),
            Certificate::NoIntegerRoot { value } => write!(f, "|I₁₂|−|I₁₁∩I₂₂| = {} is not a perfect square", value),
            Certificate::IrrationalOther => write!(f, "the value at z=1 is not an integer"),
            Certificate::Disagreement { vap, other } => write!(f, "candidates {:?} from the constant term miss {} from z=1", vap, other),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScreenResult {
    /// No flat band exists.
    NoFlatBand(Certificate),
    /// The only value that can be flat; the exact detector decides.
    Candidate(i64),
}

impl ScreenResult {
    pub fn to_json(&self) -> Value {
        match self {
            ScreenResult::NoFlatBand(c) => json!({"result": "no flat band", "certificate": c.to_string()}),
            ScreenResult::Candidate(l) => json!({"result": "candidate", "candidates": [l]}),
        }
    }
}

/// `|I_00|`, `|I_11|`, `|I_01|`, `|I_00 ∩ I_11|` and the index sets.
#[derive(Clone, Debug)]
pub struct IndexSets {
    pub i00: BTreeSet<Offset>,
    pub i11: BTreeSet<Offset>,
    pub i01: BTreeSet<Offset>,
}

impl IndexSets {
    pub fn of(g: &PeriodicGraph) -> Self {
        IndexSets {
            i00: g.index_set(0, 0).into_iter().collect(),
            i11: g.index_set(1, 1).into_iter().collect(),
            i01: g.index_set(0, 1).into_iter().collect(),
        }
    }

    pub fn common(&self) -> usize {
        self.i00.intersection(&self.i11).count()
    }

    fn axis_max(s: &BTreeSet<Offset>, r: usize) -> i64 {
        s.iter().map(|k| k[r]).max().unwrap_or(0)
    }

    fn axis_min(s: &BTreeSet<Offset>, r: usize) -> i64 {
        s.iter().map(|k| k[r]).min().unwrap_or(0)
    }

    /// `k_max(r) + k'_max(r) == p_max(r) - p_min(r)`.
    pub fn degree_identity(&self, r: usize) -> bool {
        Self::axis_max(&self.i00, r) + Self::axis_max(&self.i11, r) == Self::axis_max(&self.i01, r) - Self::axis_min(&self.i01, r)
    }
}

/// `±sqrt(|I_01| - |I_00 ∩ I_11|)` when it is an integer.
pub fn vap_candidates(s: &IndexSets) -> Result<Vec<i64>, i64> {
    let v = s.i01.len() as i64 - s.common() as i64;
    if v < 0 {
        return Err(v);
    }
    let r = v.sqrt();
    if r * r != v {
        return Err(v);
    }
    Ok(if r == 0 { vec![0] } else { vec![-r, r] })
}

/// `(a + b - sqrt((a - b)^2 + 4c^2)) / 2` with `a = |I_00|`, `b = |I_11|`, `c = |I_01|`, when integral.
pub fn othervap(s: &IndexSets) -> Option<i64> {
    let (a, b, c) = (s.i00.len() as i64, s.i11.len() as i64, s.i01.len() as i64);
    let d = (a - b) * (a - b) + 4 * c * c;
    let r = d.sqrt();
    if r * r != d || (a + b - r) % 2 != 0 {
        return None;
    }
    Some((a + b - r) / 2)
}

pub fn screen_nu2(g: &PeriodicGraph) -> Result<ScreenResult, FlatBandError> {
    if g.nu() != 2 {
        return Err(FlatBandError::Precondition(format!("the screen needs nu = 2, found {}", g.nu())));
    }
    let report = g.validate();
    if !report.is_ok() {
        return Err(FlatBandError::Invalid(report));
    }
    if !g.has_unit_weights() || !g.has_zero_potential() {
        return Err(FlatBandError::Precondition("the screen needs unit weights and zero potential".into()));
    }
    let s = IndexSets::of(g);
    if s.i01.is_empty() {
        return Err(FlatBandError::Disconnected);
    }
    use Certificate::*;
    let no = |c| Ok(ScreenResult::NoFlatBand(c));
    if s.i00.is_empty() || s.i11.is_empty() {
        return no(EmptyDiagonal { first: s.i00.is_empty(), second: s.i11.is_empty() });
    }
    if s.i01.len() == 1 {
        return no(SingleCoupling);
    }
    if let Some(axis) = (0..g.dim()).find(|&r| !s.degree_identity(r)) {
        return no(DegreeMismatch { axis });
    }
    let vap = match vap_candidates(&s) {
        Ok(v) => v,
        Err(value) => return no(NoIntegerRoot { value }),
    };
    let Some(other) = othervap(&s) else { return no(IrrationalOther) };
    if vap.contains(&other) {
        Ok(ScreenResult::Candidate(other))
    } else {
        no(Disagreement { vap, other })
    }
}
