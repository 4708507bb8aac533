//! Z^d-periodic graphs given by a finite quotient with offset-labelled edges.
//!
//! Vertex `(i, r)` with `i < nu` and `r` in Z^d. An edge `(from, to, k, w)` joins
//! `(from, r)` and `(to, r + k)` with weight `w` for every cell `r`; the reverse
//! direction carries `conj(w)`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use flatband_exact::lattice::spans_integer_lattice;
use flatband_exact::{BigInt, BigRational, Conj, Gaussian, Ring};

pub type Offset = Vec<i64>;

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeSpec {
    pub from: usize,
    pub to: usize,
    pub offset: Offset,
    pub weight: Gaussian,
}

impl EdgeSpec {
    pub fn new(from: usize, to: usize, offset: Offset) -> Self {
        EdgeSpec { from, to, offset, weight: Gaussian::one() }
    }

    pub fn weighted(from: usize, to: usize, offset: Offset, weight: Gaussian) -> Self {
        EdgeSpec { from, to, offset, weight }
    }

    pub fn is_canonical(&self) -> bool {
        self.from < self.to || (self.from == self.to && lex_positive(&self.offset))
    }

    /// The same edge seen from the other endpoint.
    pub fn flipped(&self) -> Self {
        EdgeSpec {
            from: self.to,
            to: self.from,
            offset: self.offset.iter().map(|x| -x).collect(),
            weight: self.weight.conj(),
        }
    }

    pub fn canonical(&self) -> Self {
        if self.from > self.to || (self.from == self.to && !lex_positive(&self.offset) && self.offset.iter().any(|&x| x != 0)) {
            self.flipped()
        } else {
            self.clone()
        }
    }

    fn key(&self) -> (usize, usize, &Offset) {
        (self.from, self.to, &self.offset)
    }
}

fn lex_positive(k: &[i64]) -> bool {
    k.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PeriodicGraph {
    nu: usize,
    dim: usize,
    edges: Vec<EdgeSpec>,
    potential: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ValidationIssue {
    EmptyQuotient,
    ZeroDimension,
    VertexOutOfRange { edge: usize },
    OffsetArity { edge: usize, found: usize },
    SelfLoopAtZero { edge: usize },
    ZeroWeight { edge: usize },
    NonCanonical { edge: usize },
    Duplicate { first: usize, second: usize },
    PotentialLength { found: usize },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ValidationIssue::*;
        match self {
            EmptyQuotient => write!(f, "quotient has no vertices"),
            ZeroDimension => write!(f, "lattice dimension must be at least 1"),
            VertexOutOfRange { edge } => write!(f, "edge {}: vertex index out of range", edge),
            OffsetArity { edge, found } => write!(f, "edge {}: offset has {} components", edge, found),
            SelfLoopAtZero { edge } => write!(f, "edge {}: self-loop at offset 0", edge),
            ZeroWeight { edge } => write!(f, "edge {}: zero weight", edge),
            NonCanonical { edge } => write!(f, "edge {}: orientation is not canonical", edge),
            Duplicate { first, second } => write!(f, "edges {} and {} coincide", first, second),
            PotentialLength { found } => write!(f, "potential has {} entries", found),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "ok");
        }
        for (k, i) in self.issues.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", i)?;
        }
        Ok(())
    }
}

/// Hopping amplitudes `h_ij(k)` for both orientations, keyed by `(i, j)`.
pub type HoppingMaps = Vec<Vec<BTreeMap<Offset, Gaussian>>>;

impl PeriodicGraph {
    /// Builds a graph, canonicalizing and sorting edges. The potential defaults to zero.
    pub fn new(nu: usize, dim: usize, edges: Vec<EdgeSpec>) -> Self {
        let mut edges: Vec<EdgeSpec> = edges.iter().map(|e| e.canonical()).collect();
        edges.sort_by(|a, b| a.key().cmp(&b.key()));
        PeriodicGraph { nu, dim, edges, potential: vec![BigRational::zero(); nu] }
    }

    /// Keeps edges exactly as given; used for files that still need validation.
    pub fn from_raw(nu: usize, dim: usize, edges: Vec<EdgeSpec>, potential: Vec<BigRational>) -> Self {
        PeriodicGraph { nu, dim, edges, potential }
    }

    pub fn with_potential(mut self, q: Vec<BigRational>) -> Self {
        self.potential = q;
        self
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn edges(&self) -> &[EdgeSpec] {
        &self.edges
    }

    pub fn potential(&self) -> &[BigRational] {
        &self.potential
    }

    pub fn has_zero_potential(&self) -> bool {
        self.potential.iter().all(|q| q.is_zero())
    }

    pub fn has_unit_weights(&self) -> bool {
        self.edges.iter().all(|e| e.weight.is_one())
    }

    pub fn canonicalized(&self) -> Self {
        PeriodicGraph::new(self.nu, self.dim, self.edges.clone()).with_potential(self.potential.clone())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        if self.nu == 0 {
            issues.push(ValidationIssue::EmptyQuotient);
        }
        if self.dim == 0 {
            issues.push(ValidationIssue::ZeroDimension);
        }
        if self.potential.len() != self.nu {
            issues.push(ValidationIssue::PotentialLength { found: self.potential.len() });
        }
        for (k, e) in self.edges.iter().enumerate() {
            if e.from >= self.nu || e.to >= self.nu {
                issues.push(ValidationIssue::VertexOutOfRange { edge: k });
            }
            if e.offset.len() != self.dim {
                issues.push(ValidationIssue::OffsetArity { edge: k, found: e.offset.len() });
            }
            if e.from == e.to && e.offset.iter().all(|&x| x == 0) {
                issues.push(ValidationIssue::SelfLoopAtZero { edge: k });
            } else if !e.is_canonical() {
                issues.push(ValidationIssue::NonCanonical { edge: k });
            }
            if e.weight.is_zero() {
                issues.push(ValidationIssue::ZeroWeight { edge: k });
            }
        }
        let mut seen: BTreeMap<(usize, usize, Offset), usize> = BTreeMap::new();
        for (k, e) in self.edges.iter().enumerate() {
            let c = e.canonical();
            if let Some(&first) = seen.get(&(c.from, c.to, c.offset.clone())) {
                issues.push(ValidationIssue::Duplicate { first, second: k });
            } else {
                seen.insert((c.from, c.to, c.offset), k);
            }
        }
        ValidationReport { issues }
    }

    /// `h[i][j][k]`: amplitude from `(i, r)` to `(j, r + k)`, Hermitian by construction.
    pub fn hopping(&self) -> HoppingMaps {
        let mut h: HoppingMaps = vec![vec![BTreeMap::new(); self.nu]; self.nu];
        let mut put = |i: usize, j: usize, k: Offset, w: Gaussian| {
            let slot = h[i][j].entry(k.clone()).or_insert_with(Gaussian::zero);
            *slot = slot.add(&w);
            if slot.is_zero() {
                h[i][j].remove(&k);
            }
        };
        for e in &self.edges {
            put(e.from, e.to, e.offset.clone(), e.weight.clone());
            let f = e.flipped();
            put(f.from, f.to, f.offset, f.weight);
        }
        h
    }

    /// Offsets of nonzero hopping from `i` to `j` (the index set `I_ij`).
    pub fn index_set(&self, i: usize, j: usize) -> Vec<Offset> {
        self.hopping()[i][j].keys().cloned().collect()
    }

    pub fn connectivity(&self) -> Connectivity {
        let n = self.nu;
        if n == 0 {
            return Connectivity { quotient_connected: false, lattice_generated: false };
        }
        let mut adj: Vec<Vec<(usize, Offset)>> = vec![Vec::new(); n];
        for e in &self.edges {
            if e.weight.is_zero() {
                continue;
            }
            adj[e.from].push((e.to, e.offset.clone()));
            let f = e.flipped();
            adj[f.from].push((f.to, f.offset));
        }
        let mut pi: Vec<Option<Offset>> = vec![None; n];
        pi[0] = Some(vec![0; self.dim]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            let pa = pi[a].clone().unwrap();
            for (b, k) in &adj[a] {
                if pi[*b].is_none() {
                    pi[*b] = Some(pa.iter().zip(k).map(|(x, y)| x + y).collect());
                    queue.push_back(*b);
                }
            }
        }
        let quotient_connected = pi.iter().all(|p| p.is_some());
        if !quotient_connected {
            return Connectivity { quotient_connected, lattice_generated: false };
        }
        let labels: Vec<Vec<BigInt>> = self
            .edges
            .iter()
            .filter(|e| !e.weight.is_zero())
            .map(|e| {
                let (pa, pb) = (pi[e.from].as_ref().unwrap(), pi[e.to].as_ref().unwrap());
                (0..self.dim).map(|t| BigInt::from(pa[t] + e.offset[t] - pb[t])).collect()
            })
            .collect();
        Connectivity { quotient_connected, lattice_generated: spans_integer_lattice(&labels, self.dim) }
    }

    pub fn is_connected(&self) -> bool {
        self.connectivity().is_connected()
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| EdgeSpec { from: perm[e.from], to: perm[e.to], offset: e.offset.clone(), weight: e.weight.clone() })
            .collect();
        let mut q = vec![BigRational::zero(); self.nu];
        for (v, p) in self.potential.iter().enumerate() {
            q[perm[v]] = p.clone();
        }
        PeriodicGraph::new(self.nu, self.dim, edges).with_potential(q)
    }

    /// Moves the representative of vertex `v` by `by` cells: offsets leaving `v` decrease by `by`, offsets entering `v` increase.
    pub fn shift_cell(&self, v: usize, by: &[i64]) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut e = e.clone();
                if e.from == v && e.to != v {
                    e.offset = e.offset.iter().zip(by).map(|(k, b)| k - b).collect();
                } else if e.to == v && e.from != v {
                    e.offset = e.offset.iter().zip(by).map(|(k, b)| k + b).collect();
                }
                e
            })
            .collect();
        PeriodicGraph::new(self.nu, self.dim, edges).with_potential(self.potential.clone())
    }

    /// Largest absolute offset component.
    pub fn max_offset(&self) -> i64 {
        self.edges.iter().flat_map(|e| e.offset.iter().map(|x| x.abs())).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub quotient_connected: bool,
    pub lattice_generated: bool,
}

impl Connectivity {
    pub fn is_connected(&self) -> bool {
        self.quotient_connected && self.lattice_generated
    }
}
