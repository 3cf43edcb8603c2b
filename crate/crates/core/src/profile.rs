//! Structural invariants consumed by the bounds and the recognizers.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A length that may be infinite: diameter of a disconnected graph, girth of a forest.
///
/// Kept as its own type so that infinite values never take part in arithmetic;
/// callers match on [`Length::Finite`] before using the number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<usize> {
        match self {
            Length::Finite(d) => Some(d),
            Length::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Length::Finite(_))
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(d) => write!(f, "{d}"),
            Length::Infinite => write!(f, "inf"),
        }
    }
}

/// Finite values serialize as numbers, infinity as the string `"inf"`.
impl Serialize for Length {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Length::Finite(d) => s.serialize_u64(*d as u64),
            Length::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphProfile {
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub is_tree: bool,
    pub max_degree: usize,
    pub min_degree: usize,
    /// Minimum degree over vertices of degree at least 2; absent when there are none.
    pub min_nonleaf_degree: Option<usize>,
    pub diameter: Length,
    pub girth: Length,
    pub cut_vertices: VertexSet,
    pub every_edge_on_triangle: bool,
}

pub fn profile(g: &Graph) -> GraphProfile {
    let n = g.n();
    let edges = g.edge_count();
    let connected = g.is_connected();
    GraphProfile {
        n,
        edges,
        connected,
        is_tree: n >= 1 && connected && edges == n - 1,
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        min_nonleaf_degree: (0..n).map(|v| g.degree(v)).filter(|&d| d >= 2).min(),
        diameter: diameter(g),
        girth: girth(g),
        cut_vertices: cut_vertices(g),
        every_edge_on_triangle: every_edge_on_triangle(g),
    }
}

/// Largest distance between two vertices; 0 for graphs with at most one vertex.
pub fn diameter(g: &Graph) -> Length {
    let mut best = 0;
    for v in 0..g.n() {
        for d in g.distances_from(v) {
            match d {
                Some(d) => best = best.max(d),
                None => return Length::Infinite,
            }
        }
    }
    Length::Finite(best)
}

/// Length of a shortest cycle.
///
/// A breadth-first search from every root; a non-tree edge `uw` met during
/// the search from `r` closes a closed walk of length `d(u) + d(w) + 1`
/// through `r`, and the minimum over all roots is attained by a cycle.
pub fn girth(g: &Graph) -> Length {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::with_capacity(n);
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Length::Infinite
    } else {
        Length::Finite(best)
    }
}

/// Articulation points by the depth-first lowpoint method.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut cut = VertexSet::EMPTY;
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // explicit stack of (vertex, parent, neighbours still to visit)
        let mut stack: Vec<(usize, usize, VertexSet)> = vec![(root, usize::MAX, g.neighbors(root))];
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            if let Some(w) = top.2.first() {
                top.2.remove(w);
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, g.neighbors(w)));
                } else if w != parent {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if parent != root && low[u] >= disc[parent] {
                        cut.insert(parent);
                    }
                }
            }
        }
        if root_children >= 2 {
            cut.insert(root);
        }
    }
    cut
}

pub fn every_edge_on_triangle(g: &Graph) -> bool {
    g.edges()
        .all(|(u, v)| g.neighbors(u).intersects(g.neighbors(v)))
}
