//! Closed formulas and inequalities for `L_k`, each guarded by its hypothesis.
//!
//! Entries never silently disappear: a bound whose hypothesis fails on the
//! input is still listed, with [`BoundValue::NotApplicable`], so callers can
//! count vacuous against substantive checks. Rational bounds keep their raw
//! value next to the integral one (floor for upper, ceiling for lower bounds;
//! equivalent for an integer-valued parameter).

mod nordhaus_gaddum;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6;
use crate::profile::{GraphProfile, Length};

pub use nordhaus_gaddum::{
    ng_lower_equality_condition, nordhaus_gaddum, regular_equality_check, NgCase, NgReport,
    RegularVerdict,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams {
        family: &'static str,
        reason: String,
    },
    #[error("the packing limit k must be at least 1")]
    ZeroLimit,
}

/// Families with a closed formula for `L_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
        }
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `L_k` of a named family.
///
/// Paths and cycles have `⌈kn/3⌉` and `⌊kn/3⌋` for `k ∈ {1,2}` and `n` for
/// `k ≥ 3`; `L_k(K_n) = min(k, n)`; `L_1(K_{m,n}) = 1` and otherwise
/// `min(k-1, m) + min(k-1, n)`.
pub fn closed_form(family: Family, k: usize) -> Result<usize, BoundsError> {
    if k == 0 {
        return Err(BoundsError::ZeroLimit);
    }
    let invalid = |reason: &str| BoundsError::InvalidParams {
        family: family.name(),
        reason: reason.to_string(),
    };
    Ok(match family {
        Family::Path(n) => {
            if n == 0 {
                return Err(invalid("n must be at least 1"));
            }
            if k <= 2 {
                ceil_div(k * n, 3)
            } else {
                n
            }
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("n must be at least 3"));
            }
            if k <= 2 {
                k * n / 3
            } else {
                n
            }
        }
        Family::Complete(n) => {
            if n == 0 {
                return Err(invalid("n must be at least 1"));
            }
            k.min(n)
        }
        Family::CompleteBipartite(m, n) => {
            if m == 0 || n == 0 {
                return Err(invalid("both parts must be nonempty"));
            }
            if k == 1 {
                1
            } else {
                (k - 1).min(m) + (k - 1).min(n)
            }
        }
    })
}

/// Exact value for orders at most `k + 1`: `n` when `n ≤ k`; for `n = k + 1`,
/// `k` if `Δ = k` and `k + 1` otherwise. `None` for larger orders.
pub fn small_order_value(g: &Graph, k: usize) -> Option<usize> {
    let n = g.n();
    if n <= k {
        Some(n)
    } else if n == k + 1 {
        Some(if g.max_degree() == k { k } else { k + 1 })
    } else {
        None
    }
}

/// Every family in [`Family`] that `g` is (with its labelling ignored).
/// `K_2`, for example, is a path, a complete graph and `K_{1,1}`.
pub fn detect_families(g: &Graph, p: &GraphProfile) -> Vec<Family> {
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    if p.is_tree && p.max_degree <= 2 {
        out.push(Family::Path(n));
    }
    if n >= 3 && p.connected && g.regular_degree() == Some(2) {
        out.push(Family::Cycle(n));
    }
    if p.min_degree == n - 1 {
        out.push(Family::Complete(n));
    }
    if let Some((m, r)) = complete_bipartite_parts(g, p) {
        out.push(Family::CompleteBipartite(m, r));
    }
    out
}

fn complete_bipartite_parts(g: &Graph, p: &GraphProfile) -> Option<(usize, usize)> {
    if g.n() < 2 || !p.connected {
        return None;
    }
    // the side of vertex 0 is its non-neighbourhood, the other side N(0)
    let other = g.neighbors(0);
    let side = g.vertices() - other;
    let ok = side.iter().all(|v| g.neighbors(v) == other)
        && other.iter().all(|v| g.neighbors(v) == side);
    ok.then(|| {
        let (a, b) = (side.len(), other.len());
        (a.min(b), a.max(b))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Lower,
    Upper,
    Exact,
}

/// Integral bound value, or absent when the hypothesis fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundValue {
    Applicable(i64),
    NotApplicable,
}

impl BoundValue {
    pub fn get(self) -> Option<i64> {
        match self {
            BoundValue::Applicable(v) => Some(v),
            BoundValue::NotApplicable => None,
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            BoundValue::Applicable(v) => s.serialize_i64(*v),
            BoundValue::NotApplicable => s.serialize_str("not applicable"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub id: &'static str,
    pub direction: Direction,
    pub value: BoundValue,
    /// Unrounded value of a rational bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw: Option<Ratio<i64>>,
    pub hypothesis: &'static str,
    pub citation: &'static str,
}

impl BoundEntry {
    /// Whether `exact` is consistent with this entry; inapplicable entries always are.
    pub fn admits(&self, exact: usize) -> bool {
        let x = exact as i64;
        match (self.value.get(), self.direction) {
            (None, _) => true,
            (Some(v), Direction::Lower) => x >= v,
            (Some(v), Direction::Upper) => x <= v,
            (Some(v), Direction::Exact) => x == v,
        }
    }

    pub fn is_applicable(&self) -> bool {
        self.value.get().is_some()
    }
}

/// Exact solver values some bounds are stated in terms of.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AuxValues {
    pub gamma: Option<usize>,
    pub l1: Option<usize>,
    pub rho0: Option<usize>,
}

struct Builder {
    entries: Vec<BoundEntry>,
}

impl Builder {
    fn push(
        &mut self,
        id: &'static str,
        direction: Direction,
        hypothesis: &'static str,
        citation: &'static str,
        value: Option<i64>,
    ) {
        self.entries.push(BoundEntry {
            id,
            direction,
            value: value.map_or(BoundValue::NotApplicable, BoundValue::Applicable),
            raw: None,
            hypothesis,
            citation,
        });
    }

    /// Rational bound `num/den`, rounded inward for its direction.
    #[allow(clippy::too_many_arguments)]
    fn push_ratio(
        &mut self,
        id: &'static str,
        direction: Direction,
        hypothesis: &'static str,
        citation: &'static str,
        ratio: Option<(i64, i64)>,
    ) {
        let raw = ratio.map(|(a, b)| Ratio::new(a, b));
        let value = raw.map(|r| match direction {
            Direction::Lower => r.ceil().to_integer(),
            _ => r.floor().to_integer(),
        });
        self.push(id, direction, hypothesis, citation, value);
        self.entries.last_mut().expect("just pushed").raw = raw;
    }
}

fn when<T>(cond: bool, f: impl FnOnce() -> T) -> Option<T> {
    cond.then(f)
}

/// Lower bounds on `L_k(G)` (and exact values that double as lower bounds).
pub fn lower_bounds(g: &Graph, k: usize, p: &GraphProfile, aux: &AuxValues) -> Vec<BoundEntry> {
    use Direction::*;
    let n = g.n() as i64;
    let ki = k as i64;
    let delta = p.max_degree;
    let diam = p.diameter.finite().filter(|_| p.connected && g.n() >= 1);
    let girth = p.girth.finite();
    let mut b = Builder {
        entries: Vec::new(),
    };

    b.push(
        "trivial-min-k-n",
        Lower,
        "always",
        "L_k(G) >= min(k, n)",
        Some(ki.min(n)),
    );
    b.push(
        "lem-diam-lower-k12",
        Lower,
        "G connected, k in {1,2}",
        "L_k(G) >= ceil((k + k*diam(G))/3)",
        diam.filter(|_| k == 1 || k == 2)
            .map(|d| ceil_div(k + k * d, 3) as i64),
    );
    b.push(
        "th-diam-lower-k3",
        Lower,
        "G connected, Delta(G) >= k >= 3",
        "L_k(G) >= diam(G) + k - 2",
        diam.filter(|_| k >= 3 && delta >= k)
            .map(|d| d as i64 + ki - 2),
    );
    b.push(
        "th-girth-l1",
        Lower,
        "k = 1, G has a cycle",
        "L_1(G) >= floor(g(G)/3)",
        girth.filter(|_| k == 1).map(|gg| (gg / 3) as i64),
    );
    b.push(
        "th-girth-l2",
        Lower,
        "k = 2, G has a cycle",
        "L_2(G) >= floor(2g(G)/3)",
        girth.filter(|_| k == 2).map(|gg| (2 * gg / 3) as i64),
    );
    b.push(
        "th-girth-lk",
        Lower,
        "Delta(G) >= k >= 3, G has a cycle",
        "L_k(G) >= g(G) + k - 3",
        girth
            .filter(|_| k >= 3 && delta >= k)
            .map(|gg| gg as i64 + ki - 3),
    );
    b.push_ratio(
        "lem-l1-maxdeg-lower",
        Lower,
        "k = 1, n >= 1",
        "L_1(G) >= n/(Delta(G)^2 + 1)",
        when(k == 1 && n >= 1, || (n, (delta * delta + 1) as i64)),
    );
    b.push(
        "prop-lk-geq-k",
        Lower,
        "n >= k + 2",
        "L_k(G) >= k",
        when(n >= ki + 2, || ki),
    );
    b.push(
        "lem-lk-geq-l1-plus",
        Lower,
        "L_1 known, k - 1 <= Delta(G)",
        "L_k(G) >= L_1(G) + k - 1",
        aux.l1
            .filter(|_| k >= 1 && k - 1 <= delta)
            .map(|l1| l1 as i64 + ki - 1),
    );
    b.push(
        "prop-l1-l2-sandwich-lower",
        Lower,
        "k = 2, G has an edge, L_1 known",
        "L_2(G) >= L_1(G) + 1",
        aux.l1
            .filter(|_| k == 2 && p.edges > 0)
            .map(|l1| l1 as i64 + 1),
    );
    b.push(
        "th-classT-lower",
        Lower,
        "k = 2, rho0 known",
        "L_2(G) >= rho0(G)",
        aux.rho0.filter(|_| k == 2).map(|r| r as i64),
    );
    b.push_ratio(
        "lem-openpack-sandwich-lower",
        Lower,
        "k = 1, rho0 known",
        "rho0(G) <= 2 L_1(G)",
        aux.rho0.filter(|_| k == 1).map(|r| (r as i64, 2)),
    );
    b.push(
        "lem-l1-diam-gt2-lower",
        Lower,
        "k = 1, diam(G) > 2 (or G disconnected)",
        "L_1(G) = 1 iff diam(G) <= 2",
        when(k == 1 && n >= 2 && p.diameter > Length::Finite(2), || 2),
    );

    // exact values
    b.push(
        "prop-small-order",
        Exact,
        "n <= k",
        "L_k(G) = n when n <= k",
        when(n <= ki, || n),
    );
    b.push(
        "prop-order-kplus1",
        Exact,
        "n = k + 1",
        "L_k(G) = k if Delta(G) = k, else k + 1, when n = k + 1",
        small_order_value(g, k)
            .filter(|_| n == ki + 1)
            .map(|v| v as i64),
    );
    b.push(
        "rem-saturation",
        Exact,
        "Delta(G) + 1 <= k",
        "L_k(G) = n when Delta(G) < k",
        when(delta < k, || n),
    );
    b.push(
        "lem-l1-diam-le2-exact",
        Exact,
        "k = 1, n >= 1, diam(G) <= 2",
        "L_1(G) = 1 iff diam(G) <= 2",
        when(k == 1 && n >= 1 && p.diameter <= Length::Finite(2), || 1),
    );
    b.push(
        "lem-maxdeg-n1",
        Exact,
        "k = 2, n >= 2, Delta(G) = n - 1",
        "L_2(G) = 2 when Delta(G) = n - 1",
        when(k == 2 && n >= 2 && delta as i64 == n - 1, || 2),
    );
    b.push(
        "lem-cutvertex-diam2",
        Exact,
        "k = 2, diam(G) = 2, G has a cut vertex",
        "L_2(G) = 2 when diam(G) = 2 and G has a cut vertex",
        when(
            k == 2 && p.diameter == Length::Finite(2) && !p.cut_vertices.is_empty(),
            || 2,
        ),
    );
    let families = detect_families(g, p);
    let formula = |pick: fn(&Family) -> bool| {
        families
            .iter()
            .find(|f| pick(f))
            .and_then(|&f| closed_form(f, k).ok())
            .map(|v| v as i64)
    };
    b.push(
        "closed-form-path",
        Exact,
        "G is a path",
        "L_k(P_n) = ceil(kn/3) for k = 1,2; n for k >= 3",
        formula(|f| matches!(f, Family::Path(_))),
    );
    b.push(
        "closed-form-cycle",
        Exact,
        "G is a cycle",
        "L_k(C_n) = floor(kn/3) for k = 1,2; n for k >= 3",
        formula(|f| matches!(f, Family::Cycle(_))),
    );
    b.push(
        "closed-form-complete",
        Exact,
        "G is complete",
        "L_k(K_n) = min(k, n)",
        formula(|f| matches!(f, Family::Complete(_))),
    );
    b.push(
        "closed-form-bipartite",
        Exact,
        "G is complete bipartite",
        "L_k(K_{m,n}) = 1 if k = 1, else min(k-1, m) + min(k-1, n)",
        formula(|f| matches!(f, Family::CompleteBipartite(..))),
    );
    b.entries
}

/// Upper bounds on `L_k(G)`.
pub fn upper_bounds(g: &Graph, k: usize, p: &GraphProfile, aux: &AuxValues) -> Vec<BoundEntry> {
    use Direction::*;
    let n = g.n() as i64;
    let ki = k as i64;
    let delta = p.max_degree as i64;
    let min_deg = p.min_degree as i64;
    let nonempty = n >= 1;
    let mut b = Builder {
        entries: Vec::new(),
    };

    b.push("trivial-order", Upper, "always", "L_k(G) <= n", Some(n));
    b.push(
        "lem-kgamma",
        Upper,
        "gamma known",
        "L_k(G) <= k gamma(G)",
        aux.gamma.map(|gm| ki * gm as i64),
    );
    b.push_ratio(
        "lem-delta-upper",
        Upper,
        "n >= 1",
        "L_k(G) <= kn/(delta(G) + 1)",
        when(nonempty, || (ki * n, min_deg + 1)),
    );
    b.push(
        "th-order-degree-upper",
        Upper,
        "n >= 1",
        "L_k(G) <= n + k - 1 - Delta(G)",
        when(nonempty, || n + ki - 1 - delta),
    );
    b.push(
        "th-improved-diam-upper",
        Upper,
        "k = 2, G connected, n >= 1",
        "L_2(G) <= n + 1 - Delta(G) - floor((diam(G) - 4)/3)",
        p.diameter
            .finite()
            .filter(|_| k == 2 && p.connected && nonempty)
            .map(|d| n + 1 - delta - (d as i64 - 4).div_euclid(3)),
    );
    b.push_ratio(
        "lem-45-upper",
        Upper,
        "k = 2, G connected, n >= 3",
        "L_2(G) <= 4n/5",
        when(k == 2 && p.connected && n >= 3, || (4 * n, 5)),
    );
    b.push_ratio(
        "lem-kk1-upper",
        Upper,
        "G connected, n >= 1, delta(G) >= k",
        "L_k(G) <= kn/(k + 1)",
        when(p.connected && nonempty && min_deg >= ki, || {
            (ki * n, ki + 1)
        }),
    );
    b.push_ratio(
        "th-tree-deltaprime",
        Upper,
        "k = 2, G a tree with every non-leaf degree >= 4",
        "L_2(T) <= 2n/3",
        when(
            k == 2 && p.is_tree && p.min_nonleaf_degree.is_some_and(|d| d >= 4),
            || (2 * n, 3),
        ),
    );
    b.push_ratio(
        "prop-l1-l2-sandwich-upper",
        Upper,
        "k = 2, G has an edge, L_1 known",
        "L_2(G) <= 2(Delta(G)^2 + 1)/(delta(G) + 1) L_1(G)",
        aux.l1
            .filter(|_| k == 2 && p.edges > 0)
            .map(|l1| (2 * (delta * delta + 1) * l1 as i64, min_deg + 1)),
    );
    b.push(
        "lem-openpack-sandwich-upper",
        Upper,
        "k = 1, rho0 known",
        "L_1(G) <= rho0(G)",
        aux.rho0.filter(|_| k == 1).map(|r| r as i64),
    );
    b.push(
        "th-spider-upper",
        Upper,
        "k = 2, G a tree, L_1 known",
        "L_2(T) <= 2 L_1(T)",
        aux.l1.filter(|_| k == 2 && p.is_tree).map(|l| 2 * l as i64),
    );
    b.push(
        "th-classT-upper",
        Upper,
        "k = 2, G a tree, rho0 known",
        "L_2(T) <= 2 rho0(T)",
        aux.rho0
            .filter(|_| k == 2 && p.is_tree)
            .map(|r| 2 * r as i64),
    );
    b.entries
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub k: usize,
    /// Sorted by `id`.
    pub entries: Vec<BoundEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
}

impl BoundReport {
    /// Entries whose value contradicts the exact value (empty when it is unknown).
    pub fn violations(&self) -> Vec<&BoundEntry> {
        match self.exact {
            Some(x) => self.entries.iter().filter(|e| !e.admits(x)).collect(),
            None => Vec::new(),
        }
    }

    pub fn entry(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

pub fn bound_report(
    g: &Graph,
    k: usize,
    p: &GraphProfile,
    aux: &AuxValues,
    exact: Option<usize>,
) -> BoundReport {
    let mut entries = lower_bounds(g, k, p, aux);
    entries.extend(upper_bounds(g, k, p, aux));
    entries.sort_by(|a, b| a.id.cmp(b.id));
    BoundReport {
        graph_id: graph6::emit(g),
        k,
        entries,
        exact,
    }
}

/// Bound report with `L_k`, `L_1`, `ρ⁰` and (for `n ≤ 24`) `γ` computed exactly.
pub fn bound_report_exact(g: &Graph, k: usize) -> BoundReport {
    use crate::solvers;
    let p = crate::profile::profile(g);
    let aux = AuxValues {
        gamma: solvers::domination_number(g).ok().map(|r| r.value),
        l1: Some(solvers::limited_packing_number(g, 1).value),
        rho0: Some(solvers::open_packing_number(g).value),
    };
    let exact = solvers::limited_packing_number(g, k).value;
    bound_report(g, k, &p, &aux, Some(exact))
}
