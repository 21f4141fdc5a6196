//! Undirected multigraphs with loops, divisors on their vertices and
//! (partial) orientations of their edges.
//!
//! Vertices and edges are stored in construction order and every enumeration
//! in this crate walks them by index, so outputs are stable across runs.

use std::fmt;
use std::ops::{Add, Index, Sub};

use crate::error::{Error, Result};

/// Hard ceiling imposed by the `u64` edge bitmask.
pub const MAX_MASK_BITS: usize = 63;

/// Bounds on exhaustive enumerations.
///
/// `max_edges` caps every "all subsets" style loop: edge subsets,
/// orientations and vertex subsets alike, so a single call never walks more
/// than `2^max_edges` objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_edges: 20 }
    }
}

impl Limits {
    pub const ENV_VAR: &'static str = "SPECTRAL_STRATA_MAX_EDGES";

    pub fn new(max_edges: usize) -> Self {
        Limits { max_edges }
    }

    /// Default limits, overridden by `SPECTRAL_STRATA_MAX_EDGES` when set.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Limits::new)
            .unwrap_or_default()
    }

    pub fn check(&self, what: &'static str, size: usize) -> Result<()> {
        let cap = self.max_edges.min(MAX_MASK_BITS);
        if size > cap {
            return Err(Error::CapExceeded { what, size, cap });
        }
        Ok(())
    }
}

/// Undirected multigraph; parallel edges and loops are allowed and are told
/// apart by their index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Builds a graph from vertex identifiers and endpoint pairs given by
    /// identifier.
    pub fn build<S: AsRef<str>>(vertex_ids: &[S], edge_pairs: &[(S, S)]) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::with_capacity(vertex_ids.len());
        for id in vertex_ids {
            let id = id.as_ref();
            if vertices.iter().any(|v| v == id) {
                return Err(Error::DuplicateVertex(id.to_string()));
            }
            vertices.push(id.to_string());
        }
        let lookup = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let edges = edge_pairs
            .iter()
            .map(|(u, v)| Ok((lookup(u.as_ref())?, lookup(v.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Multigraph { vertices, edges })
    }

    /// Builds a graph on `n` vertices named `v1..vn` from index pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            let bad = if u >= n { u } else { v };
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        Ok(Multigraph {
            vertices: default_names(n),
            edges: edges.to_vec(),
        })
    }

    pub fn edgeless(n: usize) -> Self {
        Multigraph {
            vertices: default_names(n),
            edges: Vec::new(),
        }
    }

    /// The complete graph `K_n`, edges in lexicographic order of index pairs.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Multigraph {
            vertices: default_names(n),
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    pub fn has_loops(&self) -> bool {
        self.loop_count() > 0
    }

    /// All edges as a bitmask.
    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    /// Number of edge-endpoint incidences at each vertex; a loop counts twice.
    pub fn degree_divisor(&self) -> Divisor {
        let mut deg = vec![0i64; self.vertices.len()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        Divisor(deg)
    }

    /// Number of edges with both endpoints in the vertex set `mask`.
    pub fn induced_edge_count(&self, vertex_mask: u64) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| vertex_mask >> u & 1 == 1 && vertex_mask >> v & 1 == 1)
            .count()
    }

    /// Connected component id of every vertex, numbered by first appearance.
    pub fn components(&self) -> Vec<usize> {
        self.components_of(self.all_edges())
    }

    /// Components of the spanning subgraph with edge set `edges`.
    pub fn components_of(&self, edges: EdgeSet) -> Vec<usize> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in edges.iter() {
            let (u, v) = self.edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = vec![0; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out[v] = label[r];
        }
        out
    }

    /// Vertex bitmasks of the connected components.
    pub fn component_masks(&self) -> Vec<u64> {
        let comp = self.components();
        let count = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut masks = vec![0u64; count];
        for (v, &c) in comp.iter().enumerate() {
            masks[c] |= 1 << v;
        }
        masks
    }

    /// An empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// The spanning subgraph with the given edges, as a graph in its own right.
    /// Edges keep their relative order.
    pub fn spanning(&self, edges: EdgeSet) -> Multigraph {
        Multigraph {
            vertices: self.vertices.clone(),
            edges: edges.iter().map(|e| self.edges[e]).collect(),
        }
    }

    /// The subgraph induced on the vertex set `vertex_mask`, with vertices and
    /// edges in their original relative order.
    pub fn induced(&self, vertex_mask: u64) -> Multigraph {
        let keep: Vec<usize> = (0..self.vertices.len())
            .filter(|v| vertex_mask >> v & 1 == 1)
            .collect();
        let mut relabel = vec![usize::MAX; self.vertices.len()];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i;
        }
        Multigraph {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            edges: self
                .edges
                .iter()
                .filter(|&&(u, v)| relabel[u] != usize::MAX && relabel[v] != usize::MAX)
                .map(|&(u, v)| (relabel[u], relabel[v]))
                .collect(),
        }
    }

    /// Every generating subgraph, ordered by edge bitmask.
    pub fn generating_subgraphs(&self, limits: Limits) -> Result<Vec<Subgraph<'_>>> {
        limits.check("edge subsets", self.edge_count())?;
        Ok((0..1u64 << self.edge_count())
            .map(|bits| Subgraph {
                parent: self,
                edges: EdgeSet(bits),
            })
            .collect())
    }

    pub fn check_divisor(&self, d: &Divisor) -> Result<()> {
        if d.len() != self.vertex_count() {
            return Err(Error::DivisorLength {
                expected: self.vertex_count(),
                got: d.len(),
            });
        }
        Ok(())
    }
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

/// A set of edge indices of some parent graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn full(edge_count: usize) -> Self {
        if edge_count >= 64 {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << edge_count) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        EdgeSet(indices.into_iter().fold(0, |acc, e| acc | 1 << e))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !other.0)
    }

    pub fn with(self, e: usize) -> EdgeSet {
        EdgeSet(self.0 | 1 << e)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(e)
        })
    }
}

/// A generating subgraph: all vertices of the parent, a subset of its edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Subgraph<'g> {
    pub parent: &'g Multigraph,
    pub edges: EdgeSet,
}

impl<'g> Subgraph<'g> {
    pub fn new(parent: &'g Multigraph, edges: EdgeSet) -> Result<Self> {
        if !edges.is_subset(parent.all_edges()) {
            let bad = edges.difference(parent.all_edges()).iter().next().unwrap_or(64);
            return Err(Error::EdgeOutOfRange(bad));
        }
        Ok(Subgraph { parent, edges })
    }

    pub fn full(parent: &'g Multigraph) -> Self {
        Subgraph {
            parent,
            edges: parent.all_edges(),
        }
    }

    pub fn empty(parent: &'g Multigraph) -> Self {
        Subgraph {
            parent,
            edges: EdgeSet::EMPTY,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_subgraph_of(&self, other: &Subgraph<'_>) -> bool {
        self.parent == other.parent && self.edges.is_subset(other.edges)
    }

    /// Materialises the subgraph as a standalone graph.
    pub fn to_graph(&self) -> Multigraph {
        self.parent.spanning(self.edges)
    }
}

/// Integer-valued function on the vertices of a graph, indexed by vertex order.
///
/// Negative entries are allowed; positivity is a property of indegree
/// divisors, not of divisors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor(pub Vec<i64>);

impl Divisor {
    pub fn zero(n: usize) -> Self {
        Divisor(vec![0; n])
    }

    pub fn unit(n: usize, v: usize) -> Self {
        let mut d = Divisor::zero(n);
        d.0[v] = 1;
        d
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sum of the values over the vertex set `mask`.
    pub fn degree_on(&self, vertex_mask: u64) -> i64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(v, _)| vertex_mask >> v & 1 == 1)
            .map(|(_, x)| x)
            .sum()
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|&x| x < 0)
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Divisor) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Restriction to the vertex set `mask`, in vertex order.
    pub fn restrict(&self, vertex_mask: u64) -> Divisor {
        Divisor(
            self.0
                .iter()
                .enumerate()
                .filter(|(v, _)| vertex_mask >> v & 1 == 1)
                .map(|(_, &x)| x)
                .collect(),
        )
    }
}

impl From<Vec<i64>> for Divisor {
    fn from(v: Vec<i64>) -> Self {
        Divisor(v)
    }
}

impl Index<usize> for Divisor {
    type Output = i64;
    fn index(&self, v: usize) -> &i64 {
        &self.0[v]
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        assert_eq!(self.len(), rhs.len(), "divisors on different vertex sets");
        Divisor(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        assert_eq!(self.len(), rhs.len(), "divisors on different vertex sets");
        Divisor(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Direction of an edge `(u, v)`: `Forward` points `u -> v`.
///
/// A loop has two formal directions, both with head equal to tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

fn head_tail((u, v): (usize, usize), dir: Direction) -> (usize, usize) {
    match dir {
        Direction::Forward => (v, u),
        Direction::Backward => (u, v),
    }
}

/// A direction for every edge of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation<'g> {
    graph: &'g Multigraph,
    dirs: Vec<Direction>,
}

impl<'g> Orientation<'g> {
    pub fn new(graph: &'g Multigraph, dirs: Vec<Direction>) -> Result<Self> {
        if dirs.len() != graph.edge_count() {
            return Err(Error::Shape(format!(
                "{} directions for {} edges",
                dirs.len(),
                graph.edge_count()
            )));
        }
        Ok(Orientation { graph, dirs })
    }

    /// Bit `e` of `mask` set means edge `e` is `Backward`.
    pub fn from_mask(graph: &'g Multigraph, mask: u64) -> Self {
        let dirs = (0..graph.edge_count())
            .map(|e| {
                if mask >> e & 1 == 1 {
                    Direction::Backward
                } else {
                    Direction::Forward
                }
            })
            .collect();
        Orientation { graph, dirs }
    }

    /// All `2^|E|` orientations in mask order.
    pub fn all(graph: &'g Multigraph, limits: Limits) -> Result<impl Iterator<Item = Self> + 'g> {
        limits.check("orientations", graph.edge_count())?;
        Ok((0..1u64 << graph.edge_count()).map(move |m| Orientation::from_mask(graph, m)))
    }

    pub fn graph(&self) -> &'g Multigraph {
        self.graph
    }

    pub fn directions(&self) -> &[Direction] {
        &self.dirs
    }

    pub fn direction(&self, e: usize) -> Direction {
        self.dirs[e]
    }

    pub fn head(&self, e: usize) -> usize {
        head_tail(self.graph.edge(e), self.dirs[e]).0
    }

    pub fn tail(&self, e: usize) -> usize {
        head_tail(self.graph.edge(e), self.dirs[e]).1
    }

    /// Number of edges pointing to each vertex.
    pub fn indeg(&self) -> Divisor {
        let mut d = vec![0i64; self.graph.vertex_count()];
        for e in 0..self.dirs.len() {
            d[self.head(e)] += 1;
        }
        Divisor(d)
    }

    /// The orientation with every edge reversed.
    pub fn reverse(&self) -> Self {
        Orientation {
            graph: self.graph,
            dirs: self.dirs.iter().map(|d| d.reversed()).collect(),
        }
    }

    /// The same orientation viewed as a partial one covering every edge.
    pub fn as_partial(&self) -> PartialOrientation<'g> {
        PartialOrientation {
            graph: self.graph,
            dirs: self.dirs.iter().map(|&d| Some(d)).collect(),
        }
    }

    /// Strongly connected component of every vertex.
    pub fn scc(&self) -> Vec<usize> {
        let n = self.graph.vertex_count();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for e in 0..self.dirs.len() {
            let (h, t) = (self.head(e), self.tail(e));
            out_adj[t].push(h);
            in_adj[h].push(t);
        }
        kosaraju(&out_adj, &in_adj)
    }

    /// Every ordered pair of vertices is joined by a directed path.
    pub fn is_strongly_connected(&self) -> bool {
        self.scc().iter().all(|&c| c == 0)
    }

    /// Every edge lies on a directed cycle.
    pub fn is_totally_cyclic(&self) -> bool {
        let comp = self.scc();
        self.graph
            .edges()
            .iter()
            .all(|&(u, v)| comp[u] == comp[v])
    }

    /// No directed cycle other than loops.
    pub fn is_acyclic_except_loops(&self) -> bool {
        let comp = self.scc();
        let n = self.graph.vertex_count();
        let mut size = vec![0usize; n];
        for &c in &comp {
            size[c] += 1;
        }
        size.iter().all(|&s| s <= 1)
    }
}

fn kosaraju(out_adj: &[Vec<usize>], in_adj: &[Vec<usize>]) -> Vec<usize> {
    let n = out_adj.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if let Some(&w) = out_adj[v].get(*i) {
                *i += 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for &s in order.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &in_adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Directions on a subset of the edges; the rest stay unoriented.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialOrientation<'g> {
    graph: &'g Multigraph,
    dirs: Vec<Option<Direction>>,
}

impl<'g> PartialOrientation<'g> {
    pub fn empty(graph: &'g Multigraph) -> Self {
        PartialOrientation {
            graph,
            dirs: vec![None; graph.edge_count()],
        }
    }

    pub fn new(graph: &'g Multigraph, dirs: Vec<Option<Direction>>) -> Result<Self> {
        if dirs.len() != graph.edge_count() {
            return Err(Error::Shape(format!(
                "{} directions for {} edges",
                dirs.len(),
                graph.edge_count()
            )));
        }
        Ok(PartialOrientation { graph, dirs })
    }

    /// Orients the edges of `edges`: bit `i` of `mask` set means the `i`-th
    /// edge of the set (in index order) is `Backward`.
    pub fn from_mask(graph: &'g Multigraph, edges: EdgeSet, mask: u64) -> Self {
        let mut dirs = vec![None; graph.edge_count()];
        for (i, e) in edges.iter().enumerate() {
            dirs[e] = Some(if mask >> i & 1 == 1 {
                Direction::Backward
            } else {
                Direction::Forward
            });
        }
        PartialOrientation { graph, dirs }
    }

    pub fn set(&mut self, e: usize, dir: Option<Direction>) {
        self.dirs[e] = dir;
    }

    pub fn direction(&self, e: usize) -> Option<Direction> {
        self.dirs[e]
    }

    pub fn oriented_edges(&self) -> EdgeSet {
        EdgeSet::from_indices(
            self.dirs
                .iter()
                .enumerate()
                .filter(|(_, d)| d.is_some())
                .map(|(e, _)| e),
        )
    }

    /// Heads counted over the oriented edges only.
    pub fn indeg(&self) -> Divisor {
        let mut d = vec![0i64; self.graph.vertex_count()];
        for (e, dir) in self.dirs.iter().enumerate() {
            if let Some(dir) = dir {
                d[head_tail(self.graph.edge(e), *dir).0] += 1;
            }
        }
        Divisor(d)
    }
}
