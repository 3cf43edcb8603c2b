//! Simple undirected graphs on at most 64 vertices, with adjacency rows as bitsets.

use std::fmt;

use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

/// A simple undirected graph on vertices `0..n`.
///
/// `adj[v]` is the open neighbourhood `N(v)`. Rows are kept symmetric and
/// loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// The null graph (no vertices).
    pub fn null() -> Graph {
        Graph { adj: Vec::new() }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, checking symmetry and the absence of loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        for (v, row) in adj.iter().enumerate() {
            if row.contains(v) {
                return Err(GraphError::SelfLoop(v));
            }
            if let Some(u) = (*row - VertexSet::full(n)).first() {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if let Some(u) = row.iter().find(|&u| !adj[u].contains(v)) {
                return Err(GraphError::Asymmetric(v, u));
            }
        }
        Ok(Graph { adj })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | VertexSet::singleton(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| all - *row - VertexSet::singleton(v))
            .collect();
        Graph { adj }
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in increasing vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        debug_assert!(s.within(self.n()));
        let keep: Vec<usize> = s.to_vec();
        let adj = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adj[v].contains(u))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    /// Vertex-disjoint union; the vertices of `gs[i]` follow those of `gs[i-1]`.
    pub fn disjoint_union<'a, I>(gs: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a Graph>,
    {
        let mut adj: Vec<VertexSet> = Vec::new();
        for g in gs {
            let offset = adj.len();
            let total = offset + g.n();
            if total > MAX_VERTICES {
                return Err(GraphError::TooLarge(total));
            }
            adj.extend(
                g.adj
                    .iter()
                    .map(|row| VertexSet::from_bits(row.bits() << offset)),
            );
        }
        Ok(Graph { adj })
    }

    /// Vertices reachable from `start`, including `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        self.reach_within(start, self.vertices())
    }

    /// Vertices reachable from `start` using only vertices of `allowed`.
    pub(crate) fn reach_within(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = (next & allowed) - seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components, each listed once, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_of(v);
            left = left - c;
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.component_of(0) == self.vertices()
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut seen = VertexSet::singleton(src);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next - seen;
            seen |= frontier;
            for v in frontier {
                dist[v] = Some(d);
            }
        }
        dist
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![VertexSet::EMPTY; self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj }
    }

    /// Every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map(|r| r.len())?;
        self.adj.iter().all(|r| r.len() == d).then_some(d)
    }

    /// Parses the whitespace-separated edge-list format: a header line `n m`
    /// followed by `m` lines `u v` with 0-based endpoints. Blank lines and
    /// lines starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let err = |line: usize, reason: &str| GraphError::EdgeList {
            line,
            reason: reason.to_string(),
        };
        let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
        let nums = parse_usizes(header).ok_or_else(|| err(hline, "header must be `n m`"))?;
        let [n, m] = nums[..] else {
            return Err(err(hline, "header must be `n m`"));
        };
        let mut g = Graph::empty(n)?;
        let mut seen = 0;
        for (line, l) in lines {
            let nums = parse_usizes(l).ok_or_else(|| err(line, "expected `u v`"))?;
            let [u, v] = nums[..] else {
                return Err(err(line, "expected `u v`"));
            };
            g.add_edge(u, v).map_err(|e| err(line, &e.to_string()))?;
            seen += 1;
        }
        if seen != m {
            return Err(err(
                hline,
                &format!("header declares {m} edges, found {seen}"),
            ));
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_usizes(s: &str) -> Option<Vec<usize>> {
    s.split_whitespace().map(|t| t.parse().ok()).collect()
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {})", self.n(), crate::graph6::emit(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Next permutation in lexicographic order; false after the last one.
    fn next_permutation(p: &mut [usize]) -> bool {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn five_cycle_is_self_complementary() {
        let c5 = families::cycle(5).unwrap();
        let target = c5.complement();
        let mut perm: Vec<usize> = (0..5).collect();
        let mut isomorphisms = 0;
        loop {
            if c5.permuted(&perm) == target {
                isomorphisms += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        // |Aut(C_5)| = 10 maps, each composed with one fixed isomorphism
        assert_eq!(isomorphisms, 10);
        assert_eq!(target.complement(), c5);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Graph::empty(65), Err(GraphError::TooLarge(65)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        let asym = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(asym).is_err());
    }

    #[test]
    fn complement_examples() {
        let k3 = families::complete(3);
        assert_eq!(k3.complement(), Graph::empty(3).unwrap());
        let p4 = families::path(4);
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = families::cycle(5).unwrap();
        let sub = c5.induced_subgraph(VertexSet::from_iter([0, 1, 2]));
        assert_eq!(sub, families::path(3));
        assert_eq!(c5.induced_subgraph(VertexSet::EMPTY).n(), 0);
        let k5 = families::complete(5);
        for s in crate::vertex_set::subsets_of_size(k5.vertices(), 3) {
            assert_eq!(k5.induced_subgraph(s), families::complete(3));
        }
        // relabelling keeps sorted order: {1,3,4} of C5 is 1 | 3-4
        let sub = c5.induced_subgraph(VertexSet::from_iter([1, 3, 4]));
        assert_eq!(sub, Graph::from_edges(3, [(1, 2)]).unwrap());
    }

    #[test]
    fn disjoint_union_examples() {
        let g = Graph::disjoint_union([&families::complete(2), &families::complete(1)]).unwrap();
        assert_eq!(g, Graph::from_edges(3, [(0, 1)]).unwrap());
        let k2 = families::complete(2);
        let three = Graph::disjoint_union([&k2, &k2, &k2]).unwrap();
        assert_eq!(three.n(), 6);
        assert_eq!(three.edge_count(), 3);
        assert_eq!(three.components().len(), 3);
        let big = families::complete(40);
        assert_eq!(
            Graph::disjoint_union([&big, &big]),
            Err(GraphError::TooLarge(80))
        );
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let pet = families::petersen();
        let text = pet.to_edge_list();
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), pet);
        let hand = "# triangle\n3 3\n0 1\n1 2\n\n2 0\n";
        assert_eq!(Graph::parse_edge_list(hand).unwrap(), families::complete(3));
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 5\n"),
            Err(GraphError::EdgeList { line: 2, .. })
        ));
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("2 1\n0 x\n").is_err());
    }

    #[test]
    fn distances_and_components() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(
            g.distances_from(0),
            vec![Some(0), Some(1), Some(2), None, None]
        );
        assert_eq!(g.components().len(), 2);
        assert!(!g.is_connected());
        assert!(Graph::null().is_connected());
    }
}
