//! Undirected multigraphs without loops.
//!
//! A [`Multigraph`] is immutable once built: every operation that changes the
//! structure ([`Multigraph::disjoint_union`], [`Multigraph::induced`],
//! [`Multigraph::relabel`]) returns a new graph. Edge multiplicities are kept
//! on sorted adjacency lists, so a pair `{u, v}` appears once per endpoint with
//! its multiplicity.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::canon::{self, CanonicalCode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge {{{0}, {1}}} has multiplicity zero")]
    ZeroMultiplicity(usize, usize),
    #[error("bipartition has {got} colors for {expected} vertices")]
    BipartitionLength { expected: usize, got: usize },
    #[error("edge {{{0}, {1}}} joins two vertices of the same color class")]
    MonochromaticEdge(usize, usize),
    #[error("graph is not simple (edge {{{0}, {1}}} has multiplicity {2})")]
    NotSimple(usize, usize, u32),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Undirected loopless multigraph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    adj: Vec<Vec<(usize, u32)>>,
    bipartition: Option<Vec<bool>>,
}

impl Multigraph {
    pub fn empty(vertex_count: usize) -> Self {
        Multigraph {
            adj: vec![Vec::new(); vertex_count],
            bipartition: None,
        }
    }

    /// Builds a multigraph from `(u, v, multiplicity)` triples. Repeated pairs
    /// accumulate their multiplicities.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, u32)>,
    {
        let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); vertex_count];
        for (u, v, mult) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if mult == 0 {
                return Err(GraphError::ZeroMultiplicity(u, v));
            }
            adj[u].push((v, mult));
            adj[v].push((u, mult));
        }
        for list in &mut adj {
            list.sort_unstable();
            let mut merged: Vec<(usize, u32)> = Vec::with_capacity(list.len());
            for &(w, m) in list.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == w => last.1 += m,
                    _ => merged.push((w, m)),
                }
            }
            *list = merged;
        }
        Ok(Multigraph {
            adj,
            bipartition: None,
        })
    }

    /// Simple graph from unordered pairs.
    pub fn from_pairs<I>(vertex_count: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(vertex_count, pairs.into_iter().map(|(u, v)| (u, v, 1)))
    }

    /// Attaches an explicit two-coloring. `colors[v]` is the class of `v`.
    pub fn with_bipartition(mut self, colors: Vec<bool>) -> Result<Self, GraphError> {
        if colors.len() != self.vertex_count() {
            return Err(GraphError::BipartitionLength {
                expected: self.vertex_count(),
                got: colors.len(),
            });
        }
        for (u, v, _) in self.edges() {
            if colors[u] == colors[v] {
                return Err(GraphError::MonochromaticEdge(u, v));
            }
        }
        self.bipartition = Some(colors);
        Ok(self)
    }

    /// Attaches the BFS two-coloring when the graph is bipartite.
    pub fn with_detected_bipartition(mut self) -> Self {
        self.bipartition = self.two_coloring();
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of distinct adjacent pairs.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Total edge multiplicity (the number of edge "slots").
    pub fn edge_slots(&self) -> u64 {
        self.adj
            .iter()
            .flat_map(|l| l.iter().map(|&(_, m)| m as u64))
            .sum::<u64>()
            / 2
    }

    /// Distinct pairs `(u, v, multiplicity)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, m)| (u, v, m))
        })
    }

    /// Neighbors of `v` with multiplicities, sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, u32)] {
        &self.adj[v]
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        match self.adj[u].binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.adj[u][i].1,
            Err(_) => 0,
        }
    }

    /// Degree counting multiplicities.
    pub fn degree(&self, v: usize) -> u64 {
        self.adj[v].iter().map(|&(_, m)| m as u64).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.adj.iter().all(|l| l.iter().all(|&(_, m)| m == 1))
    }

    pub fn is_regular(&self, r: u64) -> bool {
        (0..self.vertex_count()).all(|v| self.degree(v) == r)
    }

    pub fn bipartition(&self) -> Option<&[bool]> {
        self.bipartition.as_deref()
    }

    /// The stored bipartition, or a BFS two-coloring; `None` if an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        if let Some(colors) = &self.bipartition {
            return Some(colors.clone());
        }
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &(w, _) in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.component_vertex_sets().len() == 1
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &(w, _) in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Multigraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<(usize, u32)> = self.adj[v]
                    .iter()
                    .filter(|&&(w, _)| index[w] != usize::MAX)
                    .map(|&(w, m)| (index[w], m))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        let bipartition = self
            .bipartition
            .as_ref()
            .map(|c| vertices.iter().map(|&v| c[v]).collect());
        Multigraph { adj, bipartition }
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.vertex_count(), "permutation length");
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (v, list) in self.adj.iter().enumerate() {
            let mut mapped: Vec<(usize, u32)> = list.iter().map(|&(w, m)| (perm[w], m)).collect();
            mapped.sort_unstable();
            adj[perm[v]] = mapped;
        }
        let bipartition = self.bipartition.as_ref().map(|c| {
            let mut out = vec![false; c.len()];
            for (v, &col) in c.iter().enumerate() {
                out[perm[v]] = col;
            }
            out
        });
        Multigraph { adj, bipartition }
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    /// The bipartition survives only when both operands carry one.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&(w, m)| (w + shift, m)).collect()),
        );
        let bipartition = match (&self.bipartition, &other.bipartition) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Multigraph { adj, bipartition }
    }

    /// `copies` disjoint copies of `self`.
    pub fn repeat(&self, copies: usize) -> Multigraph {
        let mut out = Multigraph::empty(0);
        if self.bipartition.is_some() {
            out.bipartition = Some(Vec::new());
        }
        for _ in 0..copies {
            out = out.disjoint_union(self);
        }
        out
    }

    /// Connected components as standalone graphs, ordered by canonical code.
    pub fn connected_components(&self) -> Vec<Multigraph> {
        let mut comps: Vec<(CanonicalCode, Multigraph)> = self
            .component_vertex_sets()
            .iter()
            .map(|vs| {
                let c = self.induced(vs);
                (canon::connected_code(&c), c)
            })
            .collect();
        comps.sort_by(|a, b| a.0.cmp(&b.0));
        comps.into_iter().map(|(_, c)| c).collect()
    }

    /// Degrees (with multiplicity), sorted ascending.
    pub fn degree_sequence(&self) -> Vec<u64> {
        let mut d: Vec<u64> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Number of 4-cycle subgraphs. Only defined for simple graphs.
    pub fn count_4cycles(&self) -> Result<u64, GraphError> {
        if let Some((u, v, m)) = self.edges().find(|&(_, _, m)| m > 1) {
            return Err(GraphError::NotSimple(u, v, m));
        }
        // Each 4-cycle has two diagonals; a pair {u, w} with c common
        // neighbours spans C(c, 2) cycles through it as a diagonal.
        let n = self.vertex_count();
        let mut codegree = vec![0u64; n];
        let mut touched = Vec::new();
        let mut twice = 0u64;
        for u in 0..n {
            for &(v, _) in &self.adj[u] {
                for &(w, _) in &self.adj[v] {
                    if w > u {
                        if codegree[w] == 0 {
                            touched.push(w);
                        }
                        codegree[w] += 1;
                    }
                }
            }
            for w in touched.drain(..) {
                let c = codegree[w];
                twice += c * (c.saturating_sub(1)) / 2;
                codegree[w] = 0;
            }
        }
        Ok(twice / 2)
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canon::canonical_code(self)
    }

    pub fn is_isomorphic(&self, other: &Multigraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_slots() == other.edge_slots()
            && self.canonical_code() == other.canonical_code()
    }

    /// Serializes to the line-oriented text format (`n <count>`, `e <u> <v> [mult]`).
    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.vertex_count());
        for (u, v, m) in self.edges() {
            if m == 1 {
                s.push_str(&format!("e {u} {v}\n"));
            } else {
                s.push_str(&format!("e {u} {v} {m}\n"));
            }
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self, GraphError> {
        let mut vertex_count: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            let err = |message: String| GraphError::Parse { line, message };
            let number = |s: &str| -> Result<usize, GraphError> {
                s.parse::<usize>()
                    .map_err(|_| err(format!("expected a nonnegative integer, found `{s}`")))
            };
            match (fields[0], vertex_count) {
                ("n", None) => {
                    if fields.len() != 2 {
                        return Err(err("expected `n <vertex_count>`".into()));
                    }
                    vertex_count = Some(number(fields[1])?);
                }
                ("n", Some(_)) => return Err(err("duplicate `n` line".into())),
                (_, None) => return Err(err("first directive must be `n <vertex_count>`".into())),
                ("e", Some(_)) => {
                    if !(3..=4).contains(&fields.len()) {
                        return Err(err("expected `e <u> <v> [mult]`".into()));
                    }
                    let u = number(fields[1])?;
                    let v = number(fields[2])?;
                    let m = match fields.get(3) {
                        Some(s) => u32::try_from(number(s)?)
                            .map_err(|_| err("multiplicity too large".into()))?,
                        None => 1,
                    };
                    edges.push((u, v, m));
                }
                (other, Some(_)) => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        let n = vertex_count.ok_or_else(|| GraphError::Parse {
            line: 0,
            message: "missing `n <vertex_count>` line".into(),
        })?;
        Multigraph::new(n, edges)
    }
}

impl FromStr for Multigraph {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Multigraph::parse_text(s)
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}; ", self.vertex_count())?;
        let mut first = true;
        for (u, v, m) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{u}-{v}")?;
            } else {
                write!(f, "{u}-{v}x{m}")?;
            }
        }
        write!(f, ")")
    }
}
