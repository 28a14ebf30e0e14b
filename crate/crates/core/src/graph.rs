//! 3-colored graphs and their correspondence with subarrangements.
//!
//! A vertex is colored 0, 1, or left uncolored (`None`). Subarrangements
//! without a `{0_i, 1_i}` pair correspond one-to-one with such graphs:
//! type I walls become edges, type II walls become colors.
//!
//! A graph is *central* when every component holding a colored vertex is
//! bipartite and the colors inside such a component follow path parity
//! (equal across even paths, different across odd ones). Centrality of the
//! graph coincides with the walls having a common point.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::arrangement::{ArrangementSpace, Level, Subarrangement, Wall};
use crate::dsu::ParityDsu;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColoredGraph {
    n: usize,
    vertices: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
    colors: BTreeMap<usize, Level>,
}

impl ColoredGraph {
    /// Empty graph whose vertices will be drawn from `[1, n]`.
    pub fn new(n: usize) -> Self {
        ColoredGraph { n, ..Default::default() }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub fn add_vertex(&mut self, v: usize) -> Result<&mut Self> {
        self.check_vertex(v)?;
        self.vertices.insert(v);
        Ok(self)
    }

    /// Adds edge `{a, b}` and both endpoints.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<&mut Self> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::DegeneratePair(a, b));
        }
        self.vertices.insert(a);
        self.vertices.insert(b);
        self.edges.insert((a.min(b), a.max(b)));
        Ok(self)
    }

    /// Colors `v` (adding it if needed); `None` erases the color.
    pub fn set_color(&mut self, v: usize, color: Option<Level>) -> Result<&mut Self> {
        self.check_vertex(v)?;
        self.vertices.insert(v);
        match color {
            Some(c) => self.colors.insert(v, c),
            None => self.colors.remove(&v),
        };
        Ok(self)
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) -> bool {
        self.edges.remove(&(a.min(b), a.max(b)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn colors(&self) -> &BTreeMap<usize, Level> {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Option<Level> {
        self.colors.get(&v).copied()
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.colors.contains_key(&v)
    }

    /// Neighbors of every vertex.
    pub fn adjacency(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> = self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        adj
    }

    /// Connected components as induced subgraphs, ordered by least vertex.
    pub fn components(&self) -> Vec<ColoredGraph> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = ColoredGraph::new(self.n);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                comp.vertices.insert(v);
                if let Some(c) = self.color(v) {
                    comp.colors.insert(v, c);
                }
                for &w in &adj[&v] {
                    comp.edges.insert((v.min(w), v.max(w)));
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// 2-coloring of a connected graph by BFS, `None` if it has an odd cycle.
    fn bipartite_sides(&self) -> Option<BTreeMap<usize, u8>> {
        let adj = self.adjacency();
        let mut side = BTreeMap::new();
        for &start in &self.vertices {
            if side.contains_key(&start) {
                continue;
            }
            side.insert(start, 0u8);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let s = side[&v];
                for &w in &adj[&v] {
                    match side.get(&w) {
                        Some(&t) if t == s => return None,
                        Some(_) => {}
                        None => {
                            side.insert(w, s ^ 1);
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite_sides().is_some()
    }
}

/// The associated graph of `sub`: vertices `I(sub)`, one edge per type I
/// wall, one color per type II wall.
pub fn graph_of(sub: &Subarrangement) -> Result<ColoredGraph> {
    if let Some(i) = sub.double_colored() {
        return Err(Error::DoubleColor(i));
    }
    let mut g = ColoredGraph::new(sub.n());
    for w in sub.walls() {
        match w {
            Wall::TypeI { alpha, beta } => {
                g.add_edge(alpha, beta)?;
            }
            Wall::TypeII { vertex, level } => {
                g.set_color(vertex, Some(level))?;
            }
        }
    }
    Ok(g)
}

/// The subarrangement `{x_i = color(i)} ∪ {H_ij : {i,j} ∈ E}`. Isolated
/// uncolored vertices contribute nothing.
pub fn arrangement_of(graph: &ColoredGraph, space: &ArrangementSpace) -> Result<Subarrangement> {
    let walls = graph
        .edges
        .iter()
        .map(|&(a, b)| Wall::pair(a, b))
        .chain(graph.colors.iter().map(|(&v, &level)| Ok(Wall::TypeII { vertex: v, level })))
        .collect::<Result<Vec<_>>>()?;
    space.subarrangement(walls)
}

/// Centrality via parity union-find: edges relate their endpoints with
/// parity 1, a colored vertex is pinned to its color through the ground node.
/// Only an odd cycle in the ground component breaks centrality; odd cycles
/// among uncolored vertices are solved by `x = 1/2`.
pub fn is_central(graph: &ColoredGraph) -> bool {
    let mut dsu = ParityDsu::new(graph.n);
    for &(a, b) in &graph.edges {
        dsu.relate(a - 1, b - 1, 1);
    }
    for (&v, &c) in &graph.colors {
        dsu.pin(v - 1, c.value());
    }
    dsu.ground_consistent()
}

/// The three-way split of components.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    /// Components with no colored vertex.
    pub first_kind: Vec<ColoredGraph>,
    /// Isolated colored vertices.
    pub second_kind: Vec<usize>,
    /// Components with a colored vertex and at least one edge.
    pub third_kind: Vec<ColoredGraph>,
}

impl Decomposition {
    /// Union of a list of components as one graph.
    pub fn merged(n: usize, parts: &[ColoredGraph]) -> ColoredGraph {
        let mut g = ColoredGraph::new(n);
        for p in parts {
            g.vertices.extend(&p.vertices);
            g.edges.extend(&p.edges);
            g.colors.extend(&p.colors);
        }
        g
    }
}

pub fn decompose(graph: &ColoredGraph) -> Decomposition {
    let mut d = Decomposition::default();
    for comp in graph.components() {
        if comp.colors.is_empty() {
            d.first_kind.push(comp);
        } else if comp.edges.is_empty() {
            d.second_kind.extend(comp.vertices.iter().copied());
        } else {
            d.third_kind.push(comp);
        }
    }
    d
}

/// Rank of the walls of a central graph, read off its components: a
/// component contributes its vertex count if it is colored or has an odd
/// cycle, and one less otherwise. Meaningless for non-central graphs.
pub fn graph_rank(graph: &ColoredGraph) -> usize {
    graph
        .components()
        .iter()
        .map(|c| {
            let size = c.vertices.len();
            if !c.colors.is_empty() || !c.is_bipartite() {
                size
            } else {
                size - 1
            }
        })
        .sum()
}
