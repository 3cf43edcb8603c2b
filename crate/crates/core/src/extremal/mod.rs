//! Recognizers for the extremal graph classes and constructors for the
//! families that attain prescribed parameter values.
//!
//! Recognizers work structurally; the test suites compare them against the
//! exact solvers, which are treated as ground truth.

mod construct;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::solvers::open_packing_number;
use crate::vertex_set::{subsets_of_size, VertexSet};

pub use construct::{
    construct_diam2, construct_family, construct_tree_prescribed, FamilySpec, DIAM2_MAX_A,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("input graph is not a tree")]
    NotATree,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("cannot parse family spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `true` iff no `(k+1)`-subset is a k-limited packing, i.e. every
/// `(k+1)`-subset `X` induces maximum degree `k` or has a common neighbour.
/// For `n <= k` the answer is `n == k`.
#[allow(non_snake_case)]
pub fn check_Lk_equals_k(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return n == k;
    }
    if n == k + 1 {
        return g.max_degree() == k;
    }
    subsets_of_size(g.vertices(), k + 1).all(|x| {
        let spanning = x.iter().any(|v| (g.neighbors(v) & x).len() == k);
        spanning || (0..n).any(|w| x.is_subset(g.neighbors(w)))
    })
}

/// Partition certifying `L_2(G) = n + 1 - Δ(G)`.
#[allow(non_snake_case)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassGWitness {
    pub A0: VertexSet,
    pub B0: VertexSet,
}

impl ClassGWitness {
    /// Checks the defining properties: `|A0 ∩ B0| = 2`, `A0 ∪ B0 = V`,
    /// `G[A0]` has a spanning star, `G[B0]` has maximum degree at most one,
    /// and every vertex outside `B0` has at most two neighbours in `B0`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let (a, b) = (self.A0, self.B0);
        (a & b).len() == 2
            && (a | b) == g.vertices()
            && has_spanning_star(g, a)
            && b.iter().all(|v| (g.neighbors(v) & b).len() <= 1)
            && (g.vertices() - b)
                .iter()
                .all(|v| (g.neighbors(v) & b).len() <= 2)
    }
}

fn has_spanning_star(g: &Graph, a: VertexSet) -> bool {
    a.iter()
        .any(|c| (a - VertexSet::singleton(c)).is_subset(g.neighbors(c)))
}

/// Largest order for which the exhaustive fallback searches run.
pub const FALLBACK_MAX_VERTICES: usize = 10;

/// Finds a class-G partition.
///
/// The primary search takes `A0 = N[v0]` for a maximum-degree vertex `v0`
/// and `B0 = (V \ N[v0]) ∪ {p, q}` for a pair inside `N[v0]`, trying pairs
/// of neighbours of `v0` before pairs containing `v0`. If that fails and
/// `n <= 10`, every `A0` with a spanning star is tried.
#[allow(non_snake_case)]
pub fn recognize_class_G(g: &Graph) -> Option<ClassGWitness> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let delta = g.max_degree();
    for v0 in (0..n).filter(|&v| g.degree(v) == delta) {
        let a0 = g.closed_neighbors(v0);
        let outside = g.vertices() - a0;
        let nb = g.neighbors(v0);
        let pairs = subsets_of_size(nb, 2).chain(
            nb.iter()
                .map(|u| VertexSet::singleton(v0) | VertexSet::singleton(u)),
        );
        for pair in pairs {
            let w = ClassGWitness {
                A0: a0,
                B0: outside | pair,
            };
            if w.is_valid(g) {
                return Some(w);
            }
        }
    }
    if n <= FALLBACK_MAX_VERTICES {
        return class_g_exhaustive(g);
    }
    None
}

fn class_g_exhaustive(g: &Graph) -> Option<ClassGWitness> {
    let all = g.vertices();
    let mut found: Option<ClassGWitness> = None;
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        // every subset S of N(c), as A0 = {c} ∪ S
        let mut s = nb.bits();
        loop {
            let a0 = VertexSet::from_bits(s) | VertexSet::singleton(c);
            let rest = all - a0;
            if a0.len() >= 2 && rest.iter().all(|v| (g.neighbors(v) & rest).len() <= 1) {
                for pair in subsets_of_size(a0, 2) {
                    let w = ClassGWitness {
                        A0: a0,
                        B0: rest | pair,
                    };
                    if w.is_valid(g) && found.is_none_or(|f| key(&w) < key(&f)) {
                        found = Some(w);
                    }
                }
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & nb.bits();
        }
    }
    found
}

fn key(w: &ClassGWitness) -> (u64, u64) {
    (w.A0.bits(), w.B0.bits())
}

/// A star with `t` of its `t + s` edges subdivided once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpiderShape {
    pub center: usize,
    pub t: usize,
    pub s: usize,
}

fn require_tree(g: &Graph) -> Result<(), ExtremalError> {
    let n = g.n();
    if n >= 1 && g.is_connected() && g.edge_count() == n - 1 {
        Ok(())
    } else {
        Err(ExtremalError::NotATree)
    }
}

/// Spider shape of a tree, choosing the centre with the fewest subdivided
/// legs (lowest index on ties); `None` when the tree is not a spider.
pub fn recognize_spider(tree: &Graph) -> Result<Option<SpiderShape>, ExtremalError> {
    require_tree(tree)?;
    let mut best: Option<SpiderShape> = None;
    for c in 0..tree.n() {
        let (mut t, mut s) = (0, 0);
        let ok = tree.neighbors(c).iter().all(|u| match tree.degree(u) {
            1 => {
                s += 1;
                true
            }
            2 => {
                let w = (tree.neighbors(u) - VertexSet::singleton(c)).first();
                let leg = w.is_some_and(|w| tree.degree(w) == 1);
                t += leg as usize;
                leg
            }
            _ => false,
        });
        if ok && best.is_none_or(|b| t < b.t) {
            best = Some(SpiderShape { center: c, t, s });
        }
    }
    Ok(best)
}

/// Partition certifying `ρ⁰(T) = L_2(T)` for a tree.
#[allow(non_snake_case)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassTWitness {
    pub S0: VertexSet,
    pub R0: VertexSet,
}

impl ClassTWitness {
    /// `S0`, `R0` partition `V`; `T[S0]` is a nonempty perfect matching
    /// whose edges each have a leaf endpoint; every vertex of `R0` has
    /// exactly one neighbour in `S0`.
    pub fn is_valid(&self, t: &Graph) -> bool {
        let (s, r) = (self.S0, self.R0);
        if (s & r) != VertexSet::EMPTY || (s | r) != t.vertices() || s.is_empty() {
            return false;
        }
        let matched = s.iter().all(|v| {
            let partner = t.neighbors(v) & s;
            partner.len() == 1
                && (t.degree(v) == 1 || t.degree(partner.first().expect("one partner")) == 1)
        });
        matched && r.iter().all(|v| (t.neighbors(v) & s).len() == 1)
    }
}

/// Finds a class-T partition of a tree.
///
/// `S0` is searched among maximum open packings (a valid `S0` is always
/// one); if none qualifies and `n <= 10`, every subset is tried. Among
/// candidates the one with the smallest bitset is returned.
#[allow(non_snake_case)]
pub fn recognize_class_T(tree: &Graph) -> Result<Option<ClassTWitness>, ExtremalError> {
    require_tree(tree)?;
    if tree.n() < 2 {
        return Ok(None);
    }
    let rho = open_packing_number(tree).value;
    let all = tree.vertices();
    let mut best: Option<ClassTWitness> = None;
    let consider = |s: VertexSet, best: &mut Option<ClassTWitness>| {
        let w = ClassTWitness { S0: s, R0: all - s };
        if w.is_valid(tree) && best.is_none_or(|b| s.bits() < b.S0.bits()) {
            *best = Some(w);
        }
    };
    for_each_open_packing_of_size(tree, rho, &mut |s| consider(s, &mut best));
    if best.is_none() && tree.n() <= FALLBACK_MAX_VERTICES {
        for bits in 1..=all.bits() {
            consider(VertexSet::from_bits(bits), &mut best);
        }
    }
    Ok(best)
}

/// Calls `f` on every open packing of exactly `size` vertices.
fn for_each_open_packing_of_size(g: &Graph, size: usize, f: &mut impl FnMut(VertexSet)) {
    // hit[w] = whether w already has a neighbour in the partial set
    fn go(
        g: &Graph,
        v: usize,
        chosen: VertexSet,
        hit: VertexSet,
        size: usize,
        f: &mut impl FnMut(VertexSet),
    ) {
        if chosen.len() == size {
            f(chosen);
            return;
        }
        if v >= g.n() || chosen.len() + (g.n() - v) < size {
            return;
        }
        let nb = g.neighbors(v);
        if !nb.intersects(hit) {
            let mut c = chosen;
            c.insert(v);
            go(g, v + 1, c, hit | nb, size, f);
        }
        go(g, v + 1, chosen, hit, size, f);
    }
    go(g, 0, VertexSet::EMPTY, VertexSet::EMPTY, size, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::solvers::limited_packing_oracle;

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u32..1 << pairs.len()).map(move |mask| {
            Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap()
        })
    }

    fn l(g: &Graph, k: usize) -> usize {
        limited_packing_oracle(g, k).unwrap().value
    }

    #[test]
    fn lk_equals_k_examples() {
        assert!(check_Lk_equals_k(&families::complete(4), 2));
        assert!(!check_Lk_equals_k(&families::cycle(6).unwrap(), 1));
        assert!(check_Lk_equals_k(&families::cycle(4).unwrap(), 1));
        assert!(!check_Lk_equals_k(&Graph::empty(2).unwrap(), 3));
    }

    #[test]
    fn lk_equals_k_matches_solver_up_to_order_six() {
        for n in 1..=6 {
            for g in all_graphs(n) {
                for k in 1..=3 {
                    assert_eq!(check_Lk_equals_k(&g, k), l(&g, k) == k, "{g:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn class_g_examples() {
        let star = families::star(5).unwrap();
        let w = recognize_class_G(&star).unwrap();
        assert_eq!(w.A0, star.vertices());
        assert_eq!(w.B0, VertexSet::from_iter([1, 2]));
        assert!(recognize_class_G(&families::cycle(6).unwrap()).is_none());
        let k2 = families::complete(2);
        let w = recognize_class_G(&k2).unwrap();
        assert_eq!((w.A0, w.B0), (k2.vertices(), k2.vertices()));
    }

    #[test]
    fn class_g_matches_solver_up_to_order_six() {
        for n in 1..=6 {
            for g in all_graphs(n) {
                let member = l(&g, 2) + g.max_degree() == n + 1;
                let found = recognize_class_G(&g);
                assert_eq!(found.is_some(), member, "{g:?}");
                assert!(found.is_none_or(|w| w.is_valid(&g)));
                assert_eq!(class_g_exhaustive(&g).is_some(), member, "{g:?}");
            }
        }
    }

    #[test]
    fn spider_examples() {
        let p3 = recognize_spider(&families::path(3)).unwrap().unwrap();
        assert_eq!(
            p3,
            SpiderShape {
                center: 1,
                t: 0,
                s: 2
            }
        );
        let p5 = recognize_spider(&families::path(5)).unwrap().unwrap();
        assert_eq!((p5.center, p5.t, p5.s), (2, 2, 0));
        let double_star = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(recognize_spider(&double_star).unwrap(), None);
        let sp = families::spider(3, 2).unwrap();
        assert_eq!(
            recognize_spider(&sp).unwrap(),
            Some(SpiderShape {
                center: 0,
                t: 3,
                s: 2
            })
        );
        assert_eq!(
            recognize_spider(&families::cycle(4).unwrap()),
            Err(ExtremalError::NotATree)
        );
    }

    #[test]
    fn class_t_examples() {
        let w = recognize_class_T(&families::star(4).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(w.S0, VertexSet::from_iter([0, 1]));
        assert_eq!(w.R0, VertexSet::from_iter([2, 3]));
        assert_eq!(recognize_class_T(&families::path(4)).unwrap(), None);
        let k2 = families::complete(2);
        let w = recognize_class_T(&k2).unwrap().unwrap();
        assert_eq!((w.S0, w.R0), (k2.vertices(), VertexSet::EMPTY));
        assert_eq!(
            recognize_class_T(&Graph::empty(3).unwrap()),
            Err(ExtremalError::NotATree)
        );
    }

    #[test]
    fn tree_recognizers_match_solvers_on_small_trees() {
        for n in 2..=7 {
            for g in all_graphs(n).filter(|g| g.is_connected() && g.edge_count() == n - 1) {
                let (l1, l2) = (l(&g, 1), l(&g, 2));
                let rho = open_packing_number(&g).value;
                let delta = g.max_degree();
                let spider = recognize_spider(&g).unwrap().is_some_and(|s| s.t < delta);
                assert_eq!(spider, l2 == l1 + 1, "{g:?}");
                let t = recognize_class_T(&g).unwrap();
                assert_eq!(t.is_some(), rho == l2, "{g:?}");
            }
        }
    }
}
