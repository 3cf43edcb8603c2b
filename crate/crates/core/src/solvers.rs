//! Exact solvers for the k-limited packing number `L_k`, the open packing
//! number `ρ⁰`, the domination number `γ` and the total domination number `γ_t`.
//!
//! Every parameter has a subset-enumeration oracle, guarded at
//! [`ORACLE_MAX_VERTICES`]. The two packing parameters also have a
//! branch-and-bound search that works for any order up to 64; it is certified
//! by agreement with the oracle on the guarded range.
//!
//! Oracle witnesses are canonical: among all optimal sets the one with the
//! smallest bitset value is returned.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::{subsets_of_size, VertexSet};

/// Largest order the enumeration oracles accept.
pub const ORACLE_MAX_VERTICES: usize = 24;

/// Orders up to this use the oracle in the `*_number` dispatchers; larger ones
/// use branch-and-bound.
pub const AUTO_ORACLE_MAX_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("subset enumeration refused for n = {n} (limit {limit}); use branch-and-bound")]
    OracleGuard { n: usize, limit: usize },
    #[error("total domination is undefined: vertex {0} is isolated")]
    IsolatedVertex(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Oracle,
    BranchAndBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub method: Method,
}

/// `|N[v] ∩ b| ≤ k` for every vertex `v`.
pub fn is_k_limited_packing(g: &Graph, k: usize, b: VertexSet) -> bool {
    debug_assert!(b.within(g.n()));
    (0..g.n()).all(|v| (g.closed_neighbors(v) & b).len() <= k)
}

/// `|N(v) ∩ s| ≤ 1` for every vertex `v`.
pub fn is_open_packing(g: &Graph, s: VertexSet) -> bool {
    (0..g.n()).all(|v| (g.neighbors(v) & s).len() <= 1)
}

/// `N[d] = V`.
pub fn is_dominating_set(g: &Graph, d: VertexSet) -> bool {
    d.iter()
        .fold(VertexSet::EMPTY, |acc, v| acc | g.closed_neighbors(v))
        == g.vertices()
}

/// `N(d) = V`: every vertex, members of `d` included, has a neighbour in `d`.
pub fn is_total_dominating_set(g: &Graph, d: VertexSet) -> bool {
    d.iter()
        .fold(VertexSet::EMPTY, |acc, v| acc | g.neighbors(v))
        == g.vertices()
}

fn closed_rows(g: &Graph) -> Vec<VertexSet> {
    (0..g.n()).map(|v| g.closed_neighbors(v)).collect()
}

fn guard(g: &Graph) -> Result<(), SolveError> {
    if g.n() > ORACLE_MAX_VERTICES {
        Err(SolveError::OracleGuard {
            n: g.n(),
            limit: ORACLE_MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Largest `B` with `|rows[v] ∩ B| ≤ cap` for all `v`, by scanning every subset
/// in increasing bitset order.
fn packing_oracle(rows: &[VertexSet], cap: usize) -> SolveResult {
    let n = rows.len();
    let mut best = VertexSet::EMPTY;
    let mut nodes = 0u64;
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() as usize <= best.len() {
            continue;
        }
        nodes += 1;
        let s = VertexSet::from_bits(mask);
        if rows.iter().all(|r| (*r & s).len() <= cap) {
            best = s;
        }
    }
    SolveResult {
        value: best.len(),
        witness: best,
        nodes_explored: nodes,
        method: Method::Oracle,
    }
}

/// Smallest `D` whose `rows` cover every vertex, by size then bitset order.
fn covering_oracle(rows: &[VertexSet]) -> SolveResult {
    let n = rows.len();
    let all = VertexSet::full(n);
    let mut nodes = 0u64;
    for size in 0..=n {
        for d in subsets_of_size(all, size) {
            nodes += 1;
            let covered = d.iter().fold(VertexSet::EMPTY, |acc, v| acc | rows[v]);
            if covered == all {
                return SolveResult {
                    value: size,
                    witness: d,
                    nodes_explored: nodes,
                    method: Method::Oracle,
                };
            }
        }
    }
    unreachable!("the full vertex set covers whenever every row is nonempty")
}

/// Depth-first include/exclude search for a largest set `B` with
/// `|rows[v] ∩ B| ≤ cap` for every `v`.
///
/// Vertices are branched on in descending degree order (ties by index). Each
/// vertex `w` keeps a residual capacity `cap - |rows[w] ∩ chosen|`; a vertex is
/// eligible while every row containing it has capacity left. A node is cut when
/// `|chosen| + #eligible` cannot beat the incumbent.
struct PackingSearch<'a> {
    rows: &'a [VertexSet],
    order: Vec<usize>,
    residual: Vec<usize>,
    saturated: VertexSet,
    best: VertexSet,
    nodes: u64,
}

impl<'a> PackingSearch<'a> {
    fn new(rows: &'a [VertexSet], degrees: impl Fn(usize) -> usize, cap: usize) -> Self {
        let n = rows.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(degrees(v)), v));
        let saturated = if cap == 0 {
            VertexSet::full(n)
        } else {
            VertexSet::EMPTY
        };
        PackingSearch {
            rows,
            order,
            residual: vec![cap; n],
            saturated,
            best: VertexSet::EMPTY,
            nodes: 0,
        }
    }

    #[inline]
    fn eligible(&self, u: usize) -> bool {
        // rows are symmetric, so the rows containing u are indexed by rows[u]
        !self.rows[u].intersects(self.saturated)
    }

    fn take(&mut self, u: usize) {
        for w in self.rows[u] {
            self.residual[w] -= 1;
            if self.residual[w] == 0 {
                self.saturated.insert(w);
            }
        }
    }

    fn untake(&mut self, u: usize) {
        for w in self.rows[u] {
            if self.residual[w] == 0 {
                self.saturated.remove(w);
            }
            self.residual[w] += 1;
        }
    }

    fn greedy_seed(&mut self) {
        let mut chosen = VertexSet::EMPTY;
        for i in 0..self.order.len() {
            let u = self.order[i];
            if self.eligible(u) {
                self.take(u);
                chosen.insert(u);
            }
        }
        for u in chosen {
            self.untake(u);
        }
        self.best = chosen;
    }

    fn run(&mut self, pos: usize, chosen: VertexSet) {
        self.nodes += 1;
        if chosen.len() > self.best.len() {
            self.best = chosen;
        }
        let mut next = None;
        let mut eligible = 0;
        for (j, &u) in self.order.iter().enumerate().skip(pos) {
            if self.eligible(u) {
                eligible += 1;
                next.get_or_insert(j);
            }
        }
        if chosen.len() + eligible <= self.best.len() {
            return;
        }
        // ineligible vertices stay ineligible below this node, so skip them
        let Some(j) = next else { return };
        let u = self.order[j];
        self.take(u);
        self.run(j + 1, chosen | VertexSet::singleton(u));
        self.untake(u);
        self.run(j + 1, chosen);
    }

    fn solve(mut self) -> SolveResult {
        self.greedy_seed();
        self.run(0, VertexSet::EMPTY);
        SolveResult {
            value: self.best.len(),
            witness: self.best,
            nodes_explored: self.nodes,
            method: Method::BranchAndBound,
        }
    }
}

/// `L_k(G)` by exhaustive enumeration (`n ≤ 24`).
pub fn limited_packing_oracle(g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    guard(g)?;
    Ok(packing_oracle(&closed_rows(g), k))
}

/// `L_k(G)` by branch-and-bound; any order up to 64.
pub fn limited_packing_bb(g: &Graph, k: usize) -> SolveResult {
    if k > g.max_degree() {
        return SolveResult {
            value: g.n(),
            witness: g.vertices(),
            nodes_explored: 0,
            method: Method::BranchAndBound,
        };
    }
    let rows = closed_rows(g);
    PackingSearch::new(&rows, |v| g.degree(v), k).solve()
}

/// `L_k(G)`, using the oracle for small orders and branch-and-bound otherwise.
pub fn limited_packing_number(g: &Graph, k: usize) -> SolveResult {
    if g.n() <= AUTO_ORACLE_MAX_VERTICES {
        packing_oracle(&closed_rows(g), k)
    } else {
        limited_packing_bb(g, k)
    }
}

/// `ρ⁰(G)` by exhaustive enumeration (`n ≤ 24`).
pub fn open_packing_oracle(g: &Graph) -> Result<SolveResult, SolveError> {
    guard(g)?;
    Ok(packing_oracle(g.rows(), 1))
}

pub fn open_packing_bb(g: &Graph) -> SolveResult {
    PackingSearch::new(g.rows(), |v| g.degree(v), 1).solve()
}

/// `ρ⁰(G)`, dispatching like [`limited_packing_number`].
pub fn open_packing_number(g: &Graph) -> SolveResult {
    if g.n() <= AUTO_ORACLE_MAX_VERTICES {
        packing_oracle(g.rows(), 1)
    } else {
        open_packing_bb(g)
    }
}

/// `γ(G)`: smallest dominating set, by enumeration in order of size (`n ≤ 24`).
pub fn domination_number(g: &Graph) -> Result<SolveResult, SolveError> {
    guard(g)?;
    Ok(covering_oracle(&closed_rows(g)))
}

/// `γ_t(G)`: smallest total dominating set (`n ≤ 24`, no isolated vertex).
pub fn total_domination_number(g: &Graph) -> Result<SolveResult, SolveError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(SolveError::IsolatedVertex(v));
    }
    guard(g)?;
    Ok(covering_oracle(g.rows()))
}
