//! Finite simplicial graphs with a fixed vertex order.
//!
//! Vertices are addressed by their index in declaration order. That order is
//! the tie-break for everything downstream that has to be deterministic
//! (normal forms, orbit labels, report output).

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Index of a vertex in declaration order.
pub type Vertex = usize;

#[derive(Clone, Debug, Default)]
pub struct SimplicialGraph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    neighbors: Vec<Vec<Vertex>>,
    matrix: Vec<bool>,
}

impl PartialEq for SimplicialGraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.neighbors == other.neighbors
    }
}

impl Eq for SimplicialGraph {}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl SimplicialGraph {
    /// An edgeless graph on the given vertex names.
    pub fn with_vertices<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut g = Self::default();
        for name in names {
            g.push_vertex(name.as_ref())?;
        }
        Ok(g)
    }

    pub fn from_edges<S: AsRef<str>>(names: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut g = Self::with_vertices(names)?;
        for (a, b) in edges {
            let u = g.vertex(a.as_ref())?;
            let v = g.vertex(b.as_ref())?;
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn push_vertex(&mut self, name: &str) -> Result<Vertex> {
        if !valid_name(name) {
            return Err(Error::InvalidParameters(format!(
                "bad vertex name `{name}`"
            )));
        }
        if self.index.contains_key(name) {
            return Err(Error::NameCollision(name.to_string()));
        }
        let n = self.names.len();
        let mut matrix = vec![false; (n + 1) * (n + 1)];
        for u in 0..n {
            for v in 0..n {
                matrix[u * (n + 1) + v] = self.matrix[u * n + v];
            }
        }
        self.matrix = matrix;
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), n);
        self.neighbors.push(Vec::new());
        Ok(n)
    }

    /// Inserts an undirected edge. Fails on self-loops; returns `false` if
    /// the edge was already present.
    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        let n = self.len();
        if u >= n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::InvalidParameters(format!(
                "self-loop at `{}`",
                self.names[u]
            )));
        }
        if self.matrix[u * n + v] {
            return Ok(false);
        }
        self.matrix[u * n + v] = true;
        self.matrix[v * n + u] = true;
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.neighbors[a];
            let pos = list.partition_point(|&x| x < b);
            list.insert(pos, b);
        }
        Ok(true)
    }

    /// Parses the line-oriented graph file format (`v name`, `e a b`, `#`
    /// comments).
    pub fn parse(text: &str) -> Result<Self> {
        let mut g = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| Error::Parse { line, message };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            match tokens.as_slice() {
                ["v", name] => {
                    if !valid_name(name) {
                        return Err(err(format!("invalid vertex name `{name}`")));
                    }
                    if g.index.contains_key(*name) {
                        return Err(err(format!("duplicate vertex `{name}`")));
                    }
                    g.push_vertex(name).map_err(|e| err(e.to_string()))?;
                }
                ["e", a, b] => {
                    let u = *g
                        .index
                        .get(*a)
                        .ok_or_else(|| err(format!("unknown endpoint `{a}`")))?;
                    let v = *g
                        .index
                        .get(*b)
                        .ok_or_else(|| err(format!("unknown endpoint `{b}`")))?;
                    if u == v {
                        return Err(err(format!("self-loop at `{a}`")));
                    }
                    if !g.insert_edge(u, v).map_err(|e| err(e.to_string()))? {
                        return Err(err(format!("duplicate edge `{a}` `{b}`")));
                    }
                }
                _ => return Err(err(format!("unrecognised directive `{trimmed}`"))),
            }
        }
        Ok(g)
    }

    /// Renders the graph in the file format accepted by [`parse`](Self::parse).
    /// Edges are listed by (smaller endpoint, larger endpoint).
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            let _ = writeln!(out, "v {name}");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {} {}", self.names[u], self.names[v]);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.matrix[u * self.len() + v]
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.vertices()
            .flat_map(|u| {
                self.neighbors[u]
                    .iter()
                    .filter(move |&&v| v > u)
                    .map(move |&v| (u, v))
            })
            .collect()
    }

    /// lk(v): the neighbors of `v`.
    pub fn link(&self, v: Vertex) -> Result<BTreeSet<Vertex>> {
        self.check_vertex(v)?;
        Ok(self.neighbors[v].iter().copied().collect())
    }

    /// st(v) = lk(v) ∪ {v}.
    pub fn star(&self, v: Vertex) -> Result<BTreeSet<Vertex>> {
        let mut s = self.link(v)?;
        s.insert(v);
        Ok(s)
    }

    /// The induced subgraph on `keep`, with vertex order inherited from `self`.
    pub fn full_subgraph(&self, keep: &BTreeSet<Vertex>) -> Result<Self> {
        for &v in keep {
            self.check_vertex(v)?;
        }
        let kept: Vec<Vertex> = keep.iter().copied().collect();
        let mut g = Self::with_vertices(&kept.iter().map(|&v| self.name(v)).collect::<Vec<_>>())?;
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.insert_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Connected components of the subgraph induced on `within`. Each block is
    /// sorted; blocks are ordered by their smallest vertex.
    pub fn components_within(&self, within: &BTreeSet<Vertex>) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.len()];
        let mut blocks = Vec::new();
        for &start in within {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut block = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.neighbors[u] {
                    if !seen[w] && within.contains(&w) {
                        seen[w] = true;
                        block.push(w);
                        stack.push(w);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        self.components_within(&self.vertices().collect())
    }

    /// Components of Γ \ st(c).
    pub fn star_cut_components(&self, c: Vertex) -> Result<Vec<Vec<Vertex>>> {
        let star = self.star(c)?;
        let rest: BTreeSet<Vertex> = self.vertices().filter(|v| !star.contains(v)).collect();
        Ok(self.components_within(&rest))
    }

    /// Disjoint union, keeping each factor's vertex order and concatenating
    /// factors in the order given.
    pub fn disjoint_union(graphs: &[SimplicialGraph]) -> Result<Self> {
        Self::union_impl(graphs, false)
    }

    /// Join of the given graphs: disjoint union plus every edge between
    /// distinct factors.
    pub fn join(graphs: &[SimplicialGraph]) -> Result<Self> {
        Self::union_impl(graphs, true)
    }

    fn union_impl(graphs: &[SimplicialGraph], cross_edges: bool) -> Result<Self> {
        let mut out = Self::default();
        let mut offsets = Vec::with_capacity(graphs.len());
        for g in graphs {
            offsets.push(out.len());
            for name in &g.names {
                out.push_vertex(name)?;
            }
        }
        for (g, &off) in graphs.iter().zip(&offsets) {
            for (u, v) in g.edges() {
                out.insert_edge(off + u, off + v)?;
            }
        }
        if cross_edges {
            for i in 0..graphs.len() {
                for j in i + 1..graphs.len() {
                    for u in 0..graphs[i].len() {
                        for v in 0..graphs[j].len() {
                            out.insert_edge(offsets[i] + u, offsets[j] + v)?;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Complete graph on the given names.
    pub fn complete<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut g = Self::with_vertices(names)?;
        for u in 0..g.len() {
            for v in u + 1..g.len() {
                g.insert_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Path through the given names in order.
    pub fn path<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut g = Self::with_vertices(names)?;
        for u in 1..g.len() {
            g.insert_edge(u - 1, u)?;
        }
        Ok(g)
    }

    /// Cycle through the given names in order (needs at least 3 names).
    pub fn cycle<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.len() < 3 {
            return Err(Error::InvalidParameters(
                "a cycle needs at least 3 vertices".into(),
            ));
        }
        let mut g = Self::path(names)?;
        g.insert_edge(names.len() - 1, 0)?;
        Ok(g)
    }

    /// Renders a vertex set as `{a, b, c}` using vertex names.
    pub fn format_set<'a, I: IntoIterator<Item = &'a Vertex>>(&self, set: I) -> String {
        let names: Vec<&str> = set.into_iter().map(|&v| self.name(v)).collect();
        format!("{{{}}}", names.join(", "))
    }
}
