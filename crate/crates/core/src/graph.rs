//! Simple graphs on indexed vertices: the path/cycle/antipath/anticycle
//! families, edge ideals, chordality recognition via maximum cardinality
//! search, and the canonical labeling of anticycle vertices.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Ring};

/// An undirected graph without loops or multi-edges, vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Build a graph from unordered edge pairs. Loops and out-of-range
    /// endpoints are rejected; duplicates collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Graph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Graph(format!("edge ({u},{v}) out of range for n={n}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(SimpleGraph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph { n, edges: BTreeSet::new() }
    }

    /// The path `0 - 1 - ... - (n-1)`; needs at least two vertices.
    pub fn path(n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::Graph(format!("path needs n >= 2, got {n}")));
        }
        SimpleGraph::new(n, (0..n - 1).map(|i| (i, i + 1)))
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; needs at least three vertices.
    pub fn cycle(n: usize) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::Graph(format!("cycle needs n >= 3, got {n}")));
        }
        SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Complement of the path: all non-path pairs.
    pub fn antipath(n: usize) -> Result<Self, Error> {
        Ok(SimpleGraph::path(n)?.complement())
    }

    /// Complement of the cycle.
    pub fn anticycle(n: usize) -> Result<Self, Error> {
        Ok(SimpleGraph::cycle(n)?.complement())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = BTreeSet::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.insert((u, v));
            }
        }
        SimpleGraph { n, edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut edges = BTreeSet::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.edges.contains(&(u, v)) {
                    edges.insert((u, v));
                }
            }
        }
        SimpleGraph { n: self.n, edges }
    }

    /// Remove vertex `v`; the remaining vertices are reindexed preserving
    /// relative order (`w > v` becomes `w - 1`).
    pub fn delete_vertex(&self, v: usize) -> Result<SimpleGraph, Error> {
        if v >= self.n {
            return Err(Error::Graph(format!("vertex {v} out of range for n={}", self.n)));
        }
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)));
        SimpleGraph::new(self.n - 1, edges)
    }

    fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    /// The edge ideal over the standard ring `x1..xn`: one squarefree
    /// quadratic generator per edge (vertex `i` binds to variable `i`).
    pub fn edge_ideal(&self) -> MonomialIdeal {
        self.edge_ideal_in(Ring::standard(self.n))
            .expect("standard ring always matches the vertex count")
    }

    /// The edge ideal over a caller-supplied ring (e.g. a labeled anticycle
    /// ring); the ring must have one variable per vertex.
    pub fn edge_ideal_in(&self, ring: Ring) -> Result<MonomialIdeal, Error> {
        if ring.num_vars() != self.n {
            return Err(Error::RingMismatch { expected: self.n, found: ring.num_vars() });
        }
        let gens = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let mut exps = vec![0u32; self.n];
                exps[u] = 1;
                exps[v] = 1;
                Monomial::new(exps)
            })
            .collect();
        MonomialIdeal::from_generators(ring, gens)
    }

    /// Maximum cardinality search followed by elimination-order verification.
    /// Returns a perfect elimination ordering when the graph is chordal.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let adj = self.adjacency();

        let mut weight = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut visit_order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !visited[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("an unvisited vertex remains");
            visited[v] = true;
            visit_order.push(v);
            for &u in &adj[v] {
                if !visited[u] {
                    weight[u] += 1;
                }
            }
        }

        // The reverse of the MCS visit order is a PEO iff the graph is chordal.
        let elim: Vec<usize> = visit_order.into_iter().rev().collect();
        let mut pos = vec![0usize; n];
        for (i, &v) in elim.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in elim.iter().enumerate() {
            let later: Vec<usize> = adj[v].iter().copied().filter(|&u| pos[u] > i).collect();
            if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
                for &u in &later {
                    if u != parent && !adj[parent].contains(&u) {
                        return None;
                    }
                }
            }
        }
        Some(elim)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// Fröberg's classification: the edge ideal has a linear resolution iff
    /// the complement graph is chordal.
    pub fn has_linear_resolution_by_froeberg(&self) -> bool {
        self.complement().is_chordal()
    }

    /// Parse the edge-list text format: optional header `n <count>`, then one
    /// `u v` pair per line (0-based). Blank lines and `#` comments are skipped.
    pub fn from_edge_list_str(text: &str) -> Result<Self, Error> {
        let mut declared_n: Option<usize> = None;
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["n", count] if declared_n.is_none() && pairs.is_empty() => {
                    declared_n = Some(count.parse().map_err(|_| {
                        Error::Parse(format!("line {}: bad vertex count", lineno + 1))
                    })?);
                }
                [u, v] => {
                    let parse = |s: &str| {
                        s.parse::<usize>().map_err(|_| {
                            Error::Parse(format!("line {}: bad vertex index {s:?}", lineno + 1))
                        })
                    };
                    pairs.push((parse(u)?, parse(v)?));
                }
                _ => {
                    return Err(Error::Parse(format!("line {}: expected `u v`", lineno + 1)));
                }
            }
        }
        let n = declared_n
            .unwrap_or_else(|| pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
        SimpleGraph::new(n, pairs)
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// The role a vertex plays in the canonical anticycle labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    X,
    Z1,
    /// `Y(i)` with `1 <= i <= n`.
    Y(usize),
    Z2,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::X => write!(f, "x"),
            Role::Z1 => write!(f, "z1"),
            Role::Y(i) => write!(f, "y{i}"),
            Role::Z2 => write!(f, "z2"),
        }
    }
}

/// Canonical labeling of the anticycle on `n + 3` vertices: the underlying
/// cycle reads `x, z1, y1, ..., yn, z2` and wraps back to `x`. Deleting `x`
/// leaves the antipath on `(z1, y1, ..., yn, z2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnticycleLabeling {
    n: usize,
}

impl AnticycleLabeling {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::Graph(format!("anticycle labeling needs n >= 2, got {n}")));
        }
        Ok(AnticycleLabeling { n })
    }

    /// The parameter `n`: the number of `y` vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        self.n + 3
    }

    /// The labeled anticycle graph, cycle positions in labeling order.
    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::anticycle(self.num_vertices()).expect("n + 3 >= 5")
    }

    /// Ring with display names `x, z1, y1, ..., yn, z2`, one per vertex.
    pub fn ring(&self) -> Ring {
        let mut names = vec!["x".to_string(), "z1".to_string()];
        names.extend((1..=self.n).map(|i| format!("y{i}")));
        names.push("z2".to_string());
        Ring::new(names).expect("labeling names are always valid")
    }

    pub fn role_of_vertex(&self, pos: usize) -> Role {
        assert!(pos < self.num_vertices(), "vertex position out of range");
        match pos {
            0 => Role::X,
            1 => Role::Z1,
            p if p == self.n + 2 => Role::Z2,
            p => Role::Y(p - 1),
        }
    }

    pub fn vertex_of_role(&self, role: Role) -> usize {
        match role {
            Role::X => 0,
            Role::Z1 => 1,
            Role::Y(i) => {
                assert!(i >= 1 && i <= self.n, "y index out of range");
                i + 1
            }
            Role::Z2 => self.n + 2,
        }
    }

    /// Ring variable index of `y_i`.
    pub fn y(&self, i: usize) -> usize {
        self.vertex_of_role(Role::Y(i))
    }

    pub fn x(&self) -> usize {
        0
    }

    pub fn z1(&self) -> usize {
        1
    }

    pub fn z2(&self) -> usize {
        self.n + 2
    }

    /// The labeled edge ideal of the anticycle.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        self.graph()
            .edge_ideal_in(self.ring())
            .expect("labeling ring matches the vertex count")
    }
}
