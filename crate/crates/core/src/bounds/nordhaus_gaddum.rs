//! Sums `L_k(G) + L_k(Ḡ)` and the equality case for regular graphs.

use serde::Serialize;

use crate::graph::Graph;
use crate::solvers::limited_packing_number;
use crate::vertex_set::subsets_of_size;

/// Which of the three upper bounds on the sum applies, decided by how `k`
/// compares with the maximum degrees of `G` and `Ḡ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NgCase {
    /// `k > max(Δ(G), Δ(Ḡ))`; the sum is at most `2n`.
    BothSmallDelta,
    /// `min(Δ(G), Δ(Ḡ)) < k <= max(Δ(G), Δ(Ḡ))`; at most `2n - 1`.
    Mixed,
    /// `k <= min(Δ(G), Δ(Ḡ))`; at most `n + 2k - 2`.
    BothLargeDelta,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NgReport {
    pub k: usize,
    pub n: usize,
    pub lk_graph: usize,
    pub lk_complement: usize,
    pub sum: usize,
    /// `2k`, valid once `n >= k`.
    pub lower_bound: Option<usize>,
    pub lower_tight: bool,
    /// Whether the structural condition for `sum = 2k` holds.
    pub lower_condition: bool,
    pub case: NgCase,
    pub upper_bound: usize,
    pub upper_tight: bool,
    /// `n + 2` for `k = 2` and `n >= 2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refined_upper_bound: Option<usize>,
}

pub fn nordhaus_gaddum(g: &Graph, k: usize) -> NgReport {
    let n = g.n();
    let gc = g.complement();
    let lk_graph = limited_packing_number(g, k).value;
    let lk_complement = limited_packing_number(&gc, k).value;
    let sum = lk_graph + lk_complement;
    let (d, dc) = (g.max_degree(), gc.max_degree());
    let (case, upper_bound) = if k > d.max(dc) {
        (NgCase::BothSmallDelta, 2 * n)
    } else if k > d.min(dc) {
        (NgCase::Mixed, 2 * n - 1)
    } else {
        (NgCase::BothLargeDelta, n + 2 * k - 2)
    };
    let lower_bound = (n >= k).then_some(2 * k);
    NgReport {
        k,
        n,
        lk_graph,
        lk_complement,
        sum,
        lower_bound,
        lower_tight: lower_bound == Some(sum),
        lower_condition: ng_lower_equality_condition(g, k),
        case,
        upper_bound,
        upper_tight: sum == upper_bound,
        refined_upper_bound: (k == 2 && n >= 2).then_some(n + 2),
    }
}

/// Structural condition for `L_k(G) + L_k(Ḡ) = 2k`: either `n = k`, or
/// `n > k` and every `(k+1)`-subset `X` satisfies one of
///
/// - `G[X]` has maximum degree `k` and some vertex outside `X` has no neighbour in `X`;
/// - some vertex outside `X` is adjacent to all of `X` and `G[X]` has an isolated vertex;
/// - some vertex outside `X` is adjacent to all of `X` and another has no neighbour in `X`.
pub fn ng_lower_equality_condition(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n < k {
        return false;
    }
    if n == k {
        return true;
    }
    let all = g.vertices();
    subsets_of_size(all, k + 1).all(|x| {
        let outside = all - x;
        let misses = outside.iter().any(|u| !g.neighbors(u).intersects(x));
        let covers: Vec<usize> = outside
            .iter()
            .filter(|&u| x.is_subset(g.neighbors(u)))
            .collect();
        let inner_degree = |v: usize| (g.neighbors(v) & x).len();
        let max_inner = x.iter().map(inner_degree).max().unwrap_or(0);
        let has_isolated = x.iter().any(|v| inner_degree(v) == 0);
        let covers_and_misses = covers.iter().any(|&c| {
            outside
                .iter()
                .any(|w| w != c && !g.neighbors(w).intersects(x))
        });
        (max_inner == k && misses) || (!covers.is_empty() && has_isolated) || covers_and_misses
    })
}

/// Outcome of checking the equality case for a `d`-regular graph with `k <= d`:
/// `L_k(G) = n + k - 1 - d` forces `d >= n/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegularVerdict {
    pub degree: Option<usize>,
    /// The graph is regular with `k <= d`.
    pub applicable: bool,
    pub equality_holds: bool,
    pub conclusion_holds: bool,
}

impl RegularVerdict {
    pub fn passed(&self) -> bool {
        !self.applicable || !self.equality_holds || self.conclusion_holds
    }

    /// Applicable with the equality actually attained.
    pub fn is_substantive(&self) -> bool {
        self.applicable && self.equality_holds
    }
}

pub fn regular_equality_check(g: &Graph, k: usize) -> RegularVerdict {
    let n = g.n();
    let degree = g.regular_degree().filter(|_| n >= 1);
    let applicable = degree.is_some_and(|d| k <= d);
    let (equality_holds, conclusion_holds) = match degree.filter(|_| applicable) {
        Some(d) => (
            limited_packing_number(g, k).value + d == n + k - 1,
            2 * d >= n,
        ),
        None => (false, false),
    };
    RegularVerdict {
        degree,
        applicable,
        equality_holds,
        conclusion_holds,
    }
}
