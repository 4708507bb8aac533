//! Finite simple graphs: exact spectra and isomorphism-free enumeration.

use std::collections::HashSet;
use std::fmt;

use flatband_exact::algebraic::real_roots;
use flatband_exact::matrix::{char_poly, kernel};
use flatband_exact::{field_of, BigRational, NumberFieldElement, RealAlgebraic, Ring};

use crate::error::FlatBandError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGraph {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl FiniteGraph {
    pub fn empty(n: usize) -> Self {
        FiniteGraph { n, adj: vec![vec![false; n]; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    pub fn cycle(n: usize) -> Self {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n > 2 {
            e.push((n - 1, 0));
        }
        Self::from_edges(n, &e)
    }

    pub fn complete(n: usize) -> Self {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self::from_edges(n, &e)
    }

    /// Parses `P4`, `C5`, `K3` or `E4:0-1,1-2,2-3`.
    pub fn parse(spec: &str) -> Result<Self, FlatBandError> {
        let bad = || FlatBandError::Parse(format!("bad finite graph spec {:?}", spec));
        let s = spec.trim();
        let (head, rest) = s.split_at(1.min(s.len()));
        match head {
            "P" | "C" | "K" => {
                let n: usize = rest.parse().map_err(|_| bad())?;
                if n == 0 {
                    return Err(bad());
                }
                Ok(match head {
                    "P" => Self::path(n),
                    "C" => Self::cycle(n),
                    _ => Self::complete(n),
                })
            }
            "E" => {
                let (n, list) = rest.split_once(':').unwrap_or((rest, ""));
                let n: usize = n.parse().map_err(|_| bad())?;
                let mut edges = Vec::new();
                for item in list.split(',').filter(|x| !x.is_empty()) {
                    let (a, b) = item.split_once('-').ok_or_else(bad)?;
                    let (a, b): (usize, usize) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
                    if a >= n || b >= n || a == b {
                        return Err(bad());
                    }
                    edges.push((a, b));
                }
                Ok(Self::from_edges(n, &edges))
            }
            _ => Err(bad()),
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "loops are not allowed");
        self.adj[a][b] = true;
        self.adj[b][a] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|i| (i + 1..self.n).map(move |j| (i, j))).filter(|&(i, j)| self.adj[i][j]).collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.adj[v][u]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&x| x).count()
    }

    pub fn is_regular(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.degree(0))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().all(|&x| x)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    match colour[u] {
                        None => {
                            colour[u] = Some(!colour[v].unwrap());
                            stack.push(u);
                        }
                        Some(c) if c == colour[v].unwrap() => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn adjacency(&self) -> Vec<Vec<BigRational>> {
        self.adj.iter().map(|r| r.iter().map(|&b| BigRational::from_int(b as i64)).collect()).collect()
    }

    /// Canonical form: minimal upper-triangle bit string over relabelings that sort vertices by degree.
    pub fn canonical_code(&self) -> u64 {
        assert!(self.n <= 11, "canonical codes limited to 11 vertices");
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match classes.last_mut() {
                Some(c) if self.degree(c[0]) == self.degree(v) => c.push(v),
                _ => classes.push(vec![v]),
            }
        }
        let mut best = u64::MAX;
        let mut perm: Vec<usize> = Vec::with_capacity(self.n);
        self.search_code(&classes, 0, &mut classes.clone(), &mut perm, &mut best);
        best
    }

    fn search_code(&self, classes: &[Vec<usize>], ci: usize, pool: &mut Vec<Vec<usize>>, perm: &mut Vec<usize>, best: &mut u64) {
        if ci == classes.len() {
            let mut code = 0u64;
            for i in 0..self.n {
                for j in i + 1..self.n {
                    code = (code << 1) | self.adj[perm[i]][perm[j]] as u64;
                }
            }
            *best = (*best).min(code);
            return;
        }
        if pool[ci].is_empty() {
            self.search_code(classes, ci + 1, pool, perm, best);
            return;
        }
        for k in 0..pool[ci].len() {
            let v = pool[ci].remove(k);
            perm.push(v);
            self.search_code(classes, ci, pool, perm, best);
            perm.pop();
            pool[ci].insert(k, v);
        }
    }

    /// The graph obtained by keeping the vertices in `keep`, in order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut g = Self::empty(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate() {
                if a < b && self.adj[u][v] {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }
}

impl fmt::Display for FiniteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.edges().iter().map(|(a, b)| format!("{}-{}", a, b)).collect();
        write!(f, "E{}:{}", self.n, e.join(","))
    }
}

/// All graphs on `n` vertices up to isomorphism, in order of discovery.
pub fn enumerate_graphs(n: usize) -> Vec<FiniteGraph> {
    if n == 0 {
        return vec![];
    }
    let mut level = vec![FiniteGraph::empty(1)];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (m - 1)) {
                let mut h = FiniteGraph::empty(m);
                for (a, b) in g.edges() {
                    h.add_edge(a, b);
                }
                for u in 0..m - 1 {
                    if mask & (1 << u) != 0 {
                        h.add_edge(u, m - 1);
                    }
                }
                if seen.insert(h.canonical_code()) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

pub fn enumerate_connected_graphs(n: usize) -> Vec<FiniteGraph> {
    enumerate_graphs(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// An eigenvalue with an exact eigenspace basis over `Q(value)`.
#[derive(Clone, Debug)]
pub struct ExactEigenpair {
    pub value: RealAlgebraic,
    pub multiplicity: usize,
    pub basis: Vec<Vec<NumberFieldElement>>,
}

/// Eigenvalues in ascending order with eigenspace bases.
pub fn exact_spectrum(g: &FiniteGraph) -> Vec<ExactEigenpair> {
    let a = g.adjacency();
    real_roots(&char_poly(&a))
        .into_iter()
        .map(|(value, multiplicity)| {
            let (m, theta) = field_of(&value);
            let mat: Vec<Vec<NumberFieldElement>> = (0..g.n())
                .map(|i| {
                    (0..g.n())
                        .map(|j| {
                            let x = NumberFieldElement::rational(a[i][j].clone()).with_modulus(&m);
                            if i == j {
                                x.sub(&theta)
                            } else {
                                x
                            }
                        })
                        .collect()
                })
                .collect();
            ExactEigenpair { value, multiplicity, basis: kernel(&mat) }
        })
        .collect()
}
