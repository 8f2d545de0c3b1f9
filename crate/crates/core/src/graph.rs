//! Graph and digraph model, degree queries and the exact Eulerian verifiers.
//!
//! Vertices are 0-based internally. Edge and arc ids are dense, assigned in
//! insertion order, and never renumbered: every bitmask in the crate is keyed
//! on them.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A set of edge (or arc) ids, stored as a fixed-width bitmask.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    width: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            words: vec![0; width.div_ceil(64)],
        }
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(width: usize, ids: I) -> Self {
        let mut set = Self::new(width);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn full(width: usize) -> Self {
        Self::from_ids(width, 0..width)
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        id < self.width && self.words[id / 64] >> (id % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, id: usize) {
        assert!(
            id < self.width,
            "edge id {id} out of range 0..{}",
            self.width
        );
        self.words[id / 64] |= 1 << (id % 64);
    }

    #[inline]
    pub fn remove(&mut self, id: usize) {
        if id < self.width {
            self.words[id / 64] &= !(1 << (id % 64));
        }
    }

    /// Copy of `self` with `id` added.
    pub fn with(&self, id: usize) -> Self {
        let mut out = self.clone();
        out.insert(id);
        out
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.width, other.width);
        Self {
            width: self.width,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    /// Ids in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Undirected graph. Parallel edges are representable (the directed
/// pipeline needs the underlying multigraph); self-loops are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Appends edge `{u, v}` and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adjacency[u].push(id);
        self.adjacency[v].push(id);
        Ok(id)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Incident edge ids of `v`, in insertion order.
    #[inline]
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn other_end(&self, id: usize, v: usize) -> usize {
        let (a, b) = self.edges[id];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// First edge id joining `u` and `v`, if any.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adjacency[u]
            .iter()
            .copied()
            .find(|&e| self.other_end(e, u) == v)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    pub fn empty_set(&self) -> EdgeSet {
        EdgeSet::new(self.m())
    }

    /// Whether `G \ deleted` is connected on all `n` vertices. Isolated
    /// vertices count as separate components; `n <= 1` is connected.
    pub fn is_connected(&self, deleted: &EdgeSet) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &e in &self.adjacency[u] {
                if deleted.contains(e) {
                    continue;
                }
                let w = self.other_end(e, u);
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// Degree of every vertex in `G \ deleted`.
    pub fn degrees_after(&self, deleted: &EdgeSet) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if !deleted.contains(id) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn is_eulerian(&self) -> bool {
        self.is_eulerian_after(&self.empty_set())
    }

    /// `G \ deleted` is connected and every degree is even.
    pub fn is_eulerian_after(&self, deleted: &EdgeSet) -> bool {
        self.degrees_after(deleted).iter().all(|d| d % 2 == 0) && self.is_connected(deleted)
    }

    /// `G \ deleted` is connected and every degree is odd.
    pub fn is_connected_odd_after(&self, deleted: &EdgeSet) -> bool {
        self.degrees_after(deleted).iter().all(|d| d % 2 == 1) && self.is_connected(deleted)
    }

    pub fn odd_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    pub fn even_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.degree(v).is_multiple_of(2))
            .collect()
    }

    /// Odd-degree vertices of the subgraph `(V, s)`.
    pub fn odd_vertices_of(&self, s: &EdgeSet) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in s.iter() {
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        (0..self.n).filter(|&v| deg[v] % 2 == 1).collect()
    }

    /// Whether the subgraph `(V, s)` contains no cycle.
    pub fn is_forest(&self, s: &EdgeSet) -> bool {
        let mut uf = UnionFind::new(self.n);
        s.iter().all(|e| {
            let (u, v) = self.edges[e];
            uf.union(u, v)
        })
    }
}

/// Simple digraph (no self-loops, no duplicate arcs; antiparallel pairs allowed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_adjacency: Vec<Vec<usize>>,
    in_adjacency: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            arcs: Vec::new(),
            out_adjacency: vec![Vec::new(); n],
            in_adjacency: vec![Vec::new(); n],
        }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Self::new(n);
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<usize> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "arc ({u}, {v}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        if self.find_arc(u, v).is_some() {
            return Err(Error::InvalidArgument(format!("duplicate arc ({u}, {v})")));
        }
        let id = self.arcs.len();
        self.arcs.push((u, v));
        self.out_adjacency[u].push(id);
        self.in_adjacency[v].push(id);
        Ok(id)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    #[inline]
    pub fn arc(&self, id: usize) -> (usize, usize) {
        self.arcs[id]
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    #[inline]
    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out_adjacency[v]
    }

    #[inline]
    pub fn in_arcs(&self, v: usize) -> &[usize] {
        &self.in_adjacency[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adjacency[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adjacency[v].len()
    }

    pub fn find_arc(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.out_adjacency[u]
            .iter()
            .copied()
            .find(|&a| self.arcs[a].1 == v)
    }

    pub fn empty_set(&self) -> EdgeSet {
        EdgeSet::new(self.m())
    }

    /// Underlying undirected multigraph; edge id `i` is arc id `i`.
    pub fn underlying(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for &(u, v) in &self.arcs {
            g.add_edge(u, v).expect("arcs are valid edges");
        }
        g
    }

    pub fn is_weakly_connected(&self, deleted: &EdgeSet) -> bool {
        self.underlying().is_connected(deleted)
    }

    pub fn is_balanced_after(&self, deleted: &EdgeSet) -> bool {
        let mut surplus = vec![0i64; self.n];
        for (id, &(u, v)) in self.arcs.iter().enumerate() {
            if !deleted.contains(id) {
                surplus[u] += 1;
                surplus[v] -= 1;
            }
        }
        surplus.iter().all(|&s| s == 0)
    }

    pub fn is_eulerian(&self) -> bool {
        self.is_eulerian_after(&self.empty_set())
    }

    /// `D \ deleted` is weakly connected and balanced.
    pub fn is_eulerian_after(&self, deleted: &EdgeSet) -> bool {
        self.is_balanced_after(deleted) && self.is_weakly_connected(deleted)
    }

    /// Multisets of surplus and deficit vertices: `v` appears
    /// `d+(v) - d-(v)` times in the first list when positive, and
    /// `d-(v) - d+(v)` times in the second when positive. Both are sorted.
    pub fn degree_surplus_terminals(&self) -> (Vec<usize>, Vec<usize>) {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for v in 0..self.n {
            let (out, inn) = (self.out_degree(v), self.in_degree(v));
            if out > inn {
                plus.extend(std::iter::repeat_n(v, out - inn));
            } else if inn > out {
                minus.extend(std::iter::repeat_n(v, inn - out));
            }
        }
        (plus, minus)
    }

    /// Whether the arc subgraph `(V, s)` is acyclic.
    pub fn is_acyclic(&self, s: &EdgeSet) -> bool {
        let mut indeg = vec![0usize; self.n];
        for a in s.iter() {
            indeg[self.arcs[a].1] += 1;
        }
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(u) = stack.pop() {
            removed += 1;
            for &a in &self.out_adjacency[u] {
                if s.contains(a) {
                    let w = self.arcs[a].1;
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        stack.push(w);
                    }
                }
            }
        }
        removed == self.n
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
