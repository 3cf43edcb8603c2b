//! The theorem registry: one executable check per verified statement.
//!
//! A check receives cached facts about one graph and one limit `k` and
//! reports whether the hypothesis applied, whether the conclusion held, and
//! whether the graph is a positive case (equality attained or family member).

use crate::bounds::{
    closed_form, ng_lower_equality_condition, nordhaus_gaddum, regular_equality_check, Family,
    NgCase,
};
use crate::extremal::{
    check_Lk_equals_k, recognize_class_T, recognize_spider, FamilySpec, DIAM2_MAX_A,
};
use crate::profile::Length;

use super::facts::GraphFacts;

/// Which limits a theorem is evaluated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KScope {
    /// Every `k` in the campaign's range.
    Range,
    /// These limits, whatever the campaign's range.
    Fixed(&'static [usize]),
    /// Statements without a limit; evaluated once per graph.
    Once,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Inapplicable,
    Holds { positive: bool },
    Violated(String),
}

pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    pub scope: KScope,
    pub check: fn(&GraphFacts, usize) -> Outcome,
    /// Constructed graphs checked in addition to the corpus.
    pub supplements: fn() -> Vec<FamilySpec>,
}

fn check(cond: bool, positive: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Outcome::Holds { positive }
    } else {
        Outcome::Violated(detail())
    }
}

/// Runs the conjunction of several checks; the first violation wins and
/// the result is positive only if every part is.
fn all_of(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    let mut any = false;
    let mut positive = true;
    for p in parts {
        match p {
            Outcome::Inapplicable => {}
            Outcome::Holds { positive: q } => {
                any = true;
                positive &= q;
            }
            v @ Outcome::Violated(_) => return v,
        }
    }
    if any {
        Outcome::Holds { positive }
    } else {
        Outcome::Inapplicable
    }
}

fn none() -> Vec<FamilySpec> {
    Vec::new()
}

fn formula(f: &GraphFacts, k: usize, pick: fn(&Family) -> bool) -> Outcome {
    let Some(&family) = f.families().iter().find(|x| pick(x)) else {
        return Outcome::Inapplicable;
    };
    let Ok(expected) = closed_form(family, k) else {
        return Outcome::Inapplicable;
    };
    let lk = f.lk(k);
    check(lk == expected, true, || {
        format!("{family:?}: L_{k} = {lk}, formula gives {expected}")
    })
}

fn lem_path_formula(f: &GraphFacts, k: usize) -> Outcome {
    formula(f, k, |x| matches!(x, Family::Path(_)))
}

fn lem_cycle_formula(f: &GraphFacts, k: usize) -> Outcome {
    formula(f, k, |x| matches!(x, Family::Cycle(_)))
}

fn lem_complete_formula(f: &GraphFacts, k: usize) -> Outcome {
    formula(f, k, |x| matches!(x, Family::Complete(_)))
}

fn lem_bipartite_formula(f: &GraphFacts, k: usize) -> Outcome {
    formula(f, k, |x| matches!(x, Family::CompleteBipartite(..)))
}

fn lem_kgamma(f: &GraphFacts, k: usize) -> Outcome {
    let Some(gamma) = f.gamma() else {
        return Outcome::Inapplicable;
    };
    let lk = f.lk(k);
    check(lk <= k * gamma, lk == k * gamma, || {
        format!("L_{k} = {lk} exceeds k * gamma = {}", k * gamma)
    })
}

fn lem_delta_upper(f: &GraphFacts, k: usize) -> Outcome {
    let n = f.n();
    if n == 0 {
        return Outcome::Inapplicable;
    }
    let lk = f.lk(k);
    let d = f.profile().min_degree;
    check(lk * (d + 1) <= k * n, lk * (d + 1) == k * n, || {
        format!("L_{k} = {lk} exceeds kn/(delta+1) = {}/{}", k * n, d + 1)
    })
}

fn lem_monotone_chain(f: &GraphFacts, k: usize) -> Outcome {
    let p = f.profile();
    if !p.connected || k > p.max_degree || k == 0 {
        return Outcome::Inapplicable;
    }
    let (lk, next, l1) = (f.lk(k), f.lk(k + 1), f.lk(1));
    all_of([
        check(next > lk, next == lk + 1, || {
            format!("L_{} = {next} is not above L_{k} = {lk}", k + 1)
        }),
        check(lk + 1 >= l1 + k, lk + 1 == l1 + k, || {
            format!("L_{k} = {lk} is below L_1 + k - 1 = {}", l1 + k - 1)
        }),
    ])
}

fn lem_l1_eq_1_iff_diam2(f: &GraphFacts, _k: usize) -> Outcome {
    if f.n() == 0 {
        return Outcome::Inapplicable;
    }
    let l1 = f.lk(1);
    let diam = f.profile().diameter;
    check((l1 == 1) == (diam <= Length::Finite(2)), l1 == 1, || {
        format!("L_1 = {l1} with diameter {diam}")
    })
}

fn lem_open_packing_diam2(f: &GraphFacts, _k: usize) -> Outcome {
    let p = f.profile();
    let rho = f.rho0();
    let iff = if f.n() >= 3 {
        let structural = p.diameter <= Length::Finite(2) && p.every_edge_on_triangle;
        check((rho == 1) == structural, rho == 1, || {
            format!(
                "rho0 = {rho}, diameter {}, every edge on a triangle: {}",
                p.diameter, p.every_edge_on_triangle
            )
        })
    } else {
        Outcome::Inapplicable
    };
    let diam2 = if p.diameter == Length::Finite(2) {
        check(rho <= 2, rho == 2, || {
            format!("diameter 2 but rho0 = {rho}")
        })
    } else {
        Outcome::Inapplicable
    };
    all_of([iff, diam2])
}

fn lem_rho_eq_gammat_trees(f: &GraphFacts, _k: usize) -> Outcome {
    if !f.is_tree() || f.n() < 2 {
        return Outcome::Inapplicable;
    }
    let Some(gt) = f.gamma_t() else {
        return Outcome::Inapplicable;
    };
    let rho = f.rho0();
    check(rho == gt, true, || {
        format!("rho0 = {rho} but gamma_t = {gt}")
    })
}

fn lem_l1_eq_gamma_trees(f: &GraphFacts, _k: usize) -> Outcome {
    if !f.is_tree() {
        return Outcome::Inapplicable;
    }
    let Some(gamma) = f.gamma() else {
        return Outcome::Inapplicable;
    };
    let l1 = f.lk(1);
    check(l1 == gamma, true, || {
        format!("L_1 = {l1} but gamma = {gamma}")
    })
}

fn lem_diam_lower_k12(f: &GraphFacts, k: usize) -> Outcome {
    let p = f.profile();
    let Some(d) = p.diameter.finite().filter(|_| p.connected && f.n() >= 1) else {
        return Outcome::Inapplicable;
    };
    let bound = (k + k * d).div_ceil(3);
    let lk = f.lk(k);
    check(lk >= bound, lk == bound, || {
        format!("L_{k} = {lk} below ceil((k + k diam)/3) = {bound} (diam {d})")
    })
}

fn lem_ng_l2_n_plus_2(f: &GraphFacts, _k: usize) -> Outcome {
    if f.n() == 0 {
        return Outcome::Inapplicable;
    }
    let sum = f.lk(2) + f.lk_complement(2);
    let n = f.n();
    check(sum <= n + 2, sum == n + 2, || {
        format!("L_2(G) + L_2(complement) = {sum} exceeds n + 2 = {}", n + 2)
    })
}

fn lem_l1_maxdeg_lower(f: &GraphFacts, _k: usize) -> Outcome {
    let n = f.n();
    if n == 0 {
        return Outcome::Inapplicable;
    }
    let d = f.profile().max_degree;
    let l1 = f.lk(1);
    let denom = d * d + 1;
    check(l1 * denom >= n, l1 == n.div_ceil(denom), || {
        format!("L_1 = {l1} below n/(Delta^2 + 1) = {n}/{denom}")
    })
}

fn prop_small_order(f: &GraphFacts, k: usize) -> Outcome {
    let n = f.n();
    let lk = f.lk(k);
    let small = if n <= k {
        check(lk == n, true, || format!("n = {n} <= k but L_{k} = {lk}"))
    } else {
        Outcome::Inapplicable
    };
    let delta = f.profile().max_degree;
    let saturated = if delta < k {
        check(lk == n, true, || {
            format!("Delta = {delta} < k but L_{k} = {lk} differs from n = {n}")
        })
    } else {
        Outcome::Inapplicable
    };
    all_of([small, saturated])
}

fn prop_order_kplus1(f: &GraphFacts, k: usize) -> Outcome {
    if f.n() != k + 1 {
        return Outcome::Inapplicable;
    }
    let delta = f.profile().max_degree;
    let expected = if delta == k { k } else { k + 1 };
    let lk = f.lk(k);
    check(lk == expected, delta == k, || {
        format!("n = k + 1, Delta = {delta}: L_{k} = {lk}, expected {expected}")
    })
}

fn prop_lk_geq_k(f: &GraphFacts, k: usize) -> Outcome {
    if f.n() < k + 2 {
        return Outcome::Inapplicable;
    }
    let lk = f.lk(k);
    check(lk >= k, lk == k, || format!("L_{k} = {lk} below k"))
}

fn th_lk_eq_k_characterization(f: &GraphFacts, k: usize) -> Outcome {
    let lk = f.lk(k);
    let predicted = check_Lk_equals_k(&f.graph, k);
    check(predicted == (lk == k), lk == k, || {
        format!("structural test says {predicted}, but L_{k} = {lk}")
    })
}

fn cor_diam_le_2(f: &GraphFacts, k: usize) -> Outcome {
    if f.n() < k + 1 || f.lk(k) != k {
        return Outcome::Inapplicable;
    }
    let diam = f.profile().diameter;
    check(diam <= Length::Finite(2), true, || {
        format!("L_{k} = k with diameter {diam}")
    })
}

fn th_diam_lower_k3(f: &GraphFacts, k: usize) -> Outcome {
    let p = f.profile();
    if k < 3 || !p.connected || p.max_degree < k {
        return Outcome::Inapplicable;
    }
    let Some(d) = p.diameter.finite() else {
        return Outcome::Inapplicable;
    };
    let lk = f.lk(k);
    check(lk + 2 >= d + k, lk + 2 == d + k, || {
        format!("L_{k} = {lk} below diam + k - 2 = {}", d + k - 2)
    })
}

fn th_girth_l1(f: &GraphFacts, _k: usize) -> Outcome {
    let Some(g) = f.profile().girth.finite() else {
        return Outcome::Inapplicable;
    };
    let l1 = f.lk(1);
    check(l1 >= g / 3, l1 == g / 3, || {
        format!("L_1 = {l1} below floor(g/3) = {} (g = {g})", g / 3)
    })
}

fn th_girth_l2_lk(f: &GraphFacts, k: usize) -> Outcome {
    let p = f.profile();
    let Some(g) = p.girth.finite() else {
        return Outcome::Inapplicable;
    };
    let lk = f.lk(k);
    if k == 2 {
        let bound = 2 * g / 3;
        check(lk >= bound, lk == bound, || {
            format!("L_2 = {lk} below floor(2g/3) = {bound} (g = {g})")
        })
    } else if k >= 3 && p.max_degree >= k {
        check(lk + 3 >= g + k, lk + 3 == g + k, || {
            format!("L_{k} = {lk} below g + k - 3 = {} (g = {g})", g + k - 3)
        })
    } else {
        Outcome::Inapplicable
    }
}

fn th_order_degree_upper(f: &GraphFacts, k: usize) -> Outcome {
    let n = f.n();
    if n == 0 || k == 0 {
        return Outcome::Inapplicable;
    }
    let delta = f.profile().max_degree;
    let lk = f.lk(k);
    check(lk + 1 + delta <= n + k, lk + 1 + delta == n + k, || {
        format!(
            "L_{k} = {lk} exceeds n + k - 1 - Delta = {}",
            (n + k) as i64 - 1 - delta as i64
        )
    })
}

fn cor_class_g(f: &GraphFacts, _k: usize) -> Outcome {
    let n = f.n();
    if n == 0 {
        return Outcome::Inapplicable;
    }
    let delta = f.profile().max_degree;
    let l2 = f.lk(2);
    let equality = l2 + delta == n + 1;
    let witness = f.class_g();
    all_of([
        check(l2 + delta <= n + 1, equality, || {
            format!("L_2 = {l2} exceeds n + 1 - Delta = {}", n + 1 - delta)
        }),
        check(witness.is_some() == equality, equality, || {
            format!(
                "recognizer membership {} but L_2 = {l2}, n + 1 - Delta = {}",
                witness.is_some(),
                n + 1 - delta
            )
        }),
        check(
            witness.is_none_or(|w| w.is_valid(&f.graph)),
            equality,
            || format!("invalid witness {witness:?}"),
        ),
    ])
}

fn cor_regular_half(f: &GraphFacts, k: usize) -> Outcome {
    let v = regular_equality_check(&f.graph, k);
    if !v.is_substantive() {
        return Outcome::Inapplicable;
    }
    check(v.passed(), true, || {
        format!(
            "{}-regular on {} vertices attains L_{k} = n + k - 1 - d",
            v.degree.unwrap_or(0),
            f.n()
        )
    })
}

fn prop_ng_lower(f: &GraphFacts, k: usize) -> Outcome {
    let n = f.n();
    if n < k || k == 0 {
        return Outcome::Inapplicable;
    }
    let sum = f.lk(k) + f.lk_complement(k);
    let condition = ng_lower_equality_condition(&f.graph, k);
    all_of([
        check(sum >= 2 * k, sum == 2 * k, || format!("sum {sum} below 2k")),
        check((sum == 2 * k) == condition, sum == 2 * k, || {
            format!("sum = {sum} but the equality condition evaluates to {condition}")
        }),
    ])
}

fn th_ng_upper(f: &GraphFacts, k: usize) -> Outcome {
    if f.n() == 0 || k == 0 {
        return Outcome::Inapplicable;
    }
    let r = nordhaus_gaddum(&f.graph, k);
    debug_assert_eq!(r.sum, f.lk(k) + f.lk_complement(k));
    check(r.sum <= r.upper_bound, r.upper_tight, || {
        let case = match r.case {
            NgCase::BothSmallDelta => "both-small-delta",
            NgCase::Mixed => "mixed",
            NgCase::BothLargeDelta => "both-large-delta",
        };
        format!("sum {} exceeds the {case} bound {}", r.sum, r.upper_bound)
    })
}

fn lem_45_upper(f: &GraphFacts, _k: usize) -> Outcome {
    let n = f.n();
    if n < 3 || !f.profile().connected {
        return Outcome::Inapplicable;
    }
    let l2 = f.lk(2);
    check(5 * l2 <= 4 * n, l2 == 4 * n / 5, || {
        format!("L_2 = {l2} exceeds 4n/5 = {}/5", 4 * n)
    })
}

fn lem_kk1_upper(f: &GraphFacts, k: usize) -> Outcome {
    let p = f.profile();
    let n = f.n();
    if n == 0 || !p.connected || p.min_degree < k || k == 0 {
        return Outcome::Inapplicable;
    }
    let lk = f.lk(k);
    check((k + 1) * lk <= k * n, lk == k * n / (k + 1), || {
        format!("L_{k} = {lk} exceeds kn/(k+1) = {}/{}", k * n, k + 1)
    })
}

fn th_tree_deltaprime(f: &GraphFacts, _k: usize) -> Outcome {
    let p = f.profile();
    if !p.is_tree || !p.min_nonleaf_degree.is_some_and(|d| d >= 4) {
        return Outcome::Inapplicable;
    }
    let n = f.n();
    let l2 = f.lk(2);
    check(3 * l2 <= 2 * n, l2 == 2 * n / 3, || {
        format!("L_2 = {l2} exceeds 2n/3 = {}/3", 2 * n)
    })
}

fn th_diam2_construction(f: &GraphFacts, _k: usize) -> Outcome {
    let Some(FamilySpec::Diam2(a)) = f.origin else {
        return Outcome::Inapplicable;
    };
    let diam = f.profile().diameter;
    let l2 = f.lk(2);
    check(diam == Length::Finite(2) && l2 == a, true, || {
        format!("diam2:{a} has diameter {diam} and L_2 = {l2}")
    })
}

fn lem_maxdeg_n1(f: &GraphFacts, _k: usize) -> Outcome {
    let n = f.n();
    if n < 2 || f.profile().max_degree != n - 1 {
        return Outcome::Inapplicable;
    }
    let l2 = f.lk(2);
    check(l2 == 2, true, || format!("Delta = n - 1 but L_2 = {l2}"))
}

fn lem_cutvertex_diam2(f: &GraphFacts, _k: usize) -> Outcome {
    let p = f.profile();
    if p.diameter != Length::Finite(2) || p.cut_vertices.is_empty() {
        return Outcome::Inapplicable;
    }
    let l2 = f.lk(2);
    check(l2 == 2, true, || {
        format!(
            "diameter 2 with cut vertices {} but L_2 = {l2}",
            p.cut_vertices
        )
    })
}

fn th_improved_diam_upper(f: &GraphFacts, _k: usize) -> Outcome {
    let p = f.profile();
    let Some(d) = p.diameter.finite().filter(|_| p.connected && f.n() >= 1) else {
        return Outcome::Inapplicable;
    };
    let bound = f.n() as i64 + 1 - p.max_degree as i64 - (d as i64 - 4).div_euclid(3);
    let l2 = f.lk(2) as i64;
    check(l2 <= bound, l2 == bound, || {
        format!("L_2 = {l2} exceeds n + 1 - Delta - floor((diam - 4)/3) = {bound}")
    })
}

fn lem_openpack_sandwich(f: &GraphFacts, _k: usize) -> Outcome {
    if f.n() == 0 {
        return Outcome::Inapplicable;
    }
    let (l1, rho) = (f.lk(1), f.rho0());
    check(l1 <= rho && rho <= 2 * l1, rho == 2 * l1, || {
        format!("L_1 = {l1}, rho0 = {rho}")
    })
}

fn prop_l1_l2_sandwich(f: &GraphFacts, _k: usize) -> Outcome {
    let p = f.profile();
    if p.edges == 0 {
        return Outcome::Inapplicable;
    }
    let (l1, l2) = (f.lk(1), f.lk(2));
    let (big, small) = (p.max_degree, p.min_degree);
    let upper_num = 2 * (big * big + 1) * l1;
    all_of([
        check(l2 > l1, l2 == l1 + 1, || {
            format!("L_2 = {l2} not above L_1 = {l1}")
        }),
        check(
            l2 * (small + 1) <= upper_num,
            l2 * (small + 1) == upper_num,
            || {
                format!(
                    "L_2 = {l2} exceeds 2(Delta^2+1) L_1/(delta+1) = {upper_num}/{}",
                    small + 1
                )
            },
        ),
    ])
}

fn th_spider_characterization(f: &GraphFacts, _k: usize) -> Outcome {
    if !f.is_tree() || f.n() < 2 {
        return Outcome::Inapplicable;
    }
    let (l1, l2) = (f.lk(1), f.lk(2));
    let delta = f.profile().max_degree;
    let shape = recognize_spider(&f.graph).expect("input is a tree");
    let predicted = shape.is_some_and(|s| s.t < delta);
    let remark = f.gamma().map_or(Outcome::Inapplicable, |gamma| {
        check((l2 == 2 * l1) == (l2 == 2 * gamma), true, || {
            format!("L_2 = {l2}, L_1 = {l1}, gamma = {gamma}")
        })
    });
    all_of([
        check(l1 < l2 && l2 <= 2 * l1, l2 == l1 + 1, || {
            format!("L_1 = {l1}, L_2 = {l2} outside L_1 + 1 <= L_2 <= 2 L_1")
        }),
        check(predicted == (l2 == l1 + 1), l2 == l1 + 1, || {
            format!("spider shape {shape:?} (Delta {delta}) but L_1 = {l1}, L_2 = {l2}")
        }),
        remark,
    ])
}

fn th_class_t_characterization(f: &GraphFacts, _k: usize) -> Outcome {
    if !f.is_tree() || f.n() < 2 {
        return Outcome::Inapplicable;
    }
    let (rho, l2) = (f.rho0(), f.lk(2));
    let witness = recognize_class_T(&f.graph).expect("input is a tree");
    all_of([
        check(rho <= l2 && l2 <= 2 * rho, rho == l2, || {
            format!("rho0 = {rho}, L_2 = {l2} outside rho0 <= L_2 <= 2 rho0")
        }),
        check(witness.is_some() == (rho == l2), rho == l2, || {
            format!(
                "recognizer membership {} but rho0 = {rho}, L_2 = {l2}",
                witness.is_some()
            )
        }),
        check(
            witness.is_none_or(|w| w.is_valid(&f.graph)),
            rho == l2,
            || format!("invalid witness {witness:?}"),
        ),
    ])
}

fn th_prescribed_construction(f: &GraphFacts, _k: usize) -> Outcome {
    let Some(FamilySpec::Prescribed(a, b)) = f.origin else {
        return Outcome::Inapplicable;
    };
    let (rho, l1, l2) = (f.rho0(), f.lk(1), f.lk(2));
    check(f.is_tree() && rho == a && l1 == a && l2 == b, true, || {
        format!("prescribed:{a},{b} gives rho0 = {rho}, L_1 = {l1}, L_2 = {l2}")
    })
}

fn paths_and_more() -> Vec<FamilySpec> {
    (1..=12).map(FamilySpec::Path).collect()
}

fn cycles() -> Vec<FamilySpec> {
    (3..=12).map(FamilySpec::Cycle).collect()
}

fn completes() -> Vec<FamilySpec> {
    (1..=10).map(FamilySpec::Complete).collect()
}

fn bipartites() -> Vec<FamilySpec> {
    (2..=10usize)
        .flat_map(|t| (1..=t / 2).map(move |m| FamilySpec::CompleteBipartite(m, t - m)))
        .collect()
}

fn stars() -> Vec<FamilySpec> {
    (2..=12).map(FamilySpec::Star).collect()
}

fn spiders() -> Vec<FamilySpec> {
    (0..=7usize)
        .flat_map(|t| (0..=8usize).map(move |s| (t, s)))
        .filter(|&(t, s)| t + s >= 1)
        .map(|(t, s)| FamilySpec::Spider(t, s))
        .collect()
}

fn k_minus_e() -> Vec<FamilySpec> {
    (3..=8).map(FamilySpec::CompleteMinusEdge).collect()
}

fn lk_eq_k_members() -> Vec<FamilySpec> {
    let mut v = completes();
    v.extend(k_minus_e());
    v.extend(stars());
    v.extend((2..=4).map(FamilySpec::Diam2));
    v.push(FamilySpec::Petersen);
    v
}

fn class_g_members() -> Vec<FamilySpec> {
    let mut v = stars();
    v.extend(completes());
    v.extend(spiders());
    v.extend(k_minus_e());
    v
}

fn tree_members() -> Vec<FamilySpec> {
    let mut v = stars();
    v.extend(spiders());
    v.extend((2..=12).map(FamilySpec::Path));
    v
}

fn diam2_members() -> Vec<FamilySpec> {
    (2..=6.min(DIAM2_MAX_A)).map(FamilySpec::Diam2).collect()
}

fn prescribed_members() -> Vec<FamilySpec> {
    let mut v: Vec<FamilySpec> = (2..=5usize)
        .flat_map(|a| (a + 1..=2 * a).map(move |b| FamilySpec::Prescribed(a, b)))
        .collect();
    v.push(FamilySpec::Prescribed(8, 12));
    v
}

fn regular_members() -> Vec<FamilySpec> {
    let mut v: Vec<FamilySpec> = (2..=8).map(FamilySpec::Complete).collect();
    v.extend(cycles());
    v.extend((1..=5).map(|m| FamilySpec::CompleteBipartite(m, m)));
    v.push(FamilySpec::Petersen);
    v
}

fn long_diameter() -> Vec<FamilySpec> {
    let mut v: Vec<FamilySpec> = (2..=20).map(FamilySpec::Path).collect();
    v.extend((3..=20).map(FamilySpec::Cycle));
    v
}

fn girth_members() -> Vec<FamilySpec> {
    let mut v = cycles();
    v.push(FamilySpec::Petersen);
    v.extend(completes());
    v
}

fn tree_deltaprime_members() -> Vec<FamilySpec> {
    let mut v: Vec<FamilySpec> = (5..=12).map(FamilySpec::Star).collect();
    v.extend((4..=8).map(|s| FamilySpec::Spider(0, s)));
    v
}

const R: KScope = KScope::Range;
const K1: KScope = KScope::Fixed(&[1]);
const K2: KScope = KScope::Fixed(&[2]);
const K12: KScope = KScope::Fixed(&[1, 2]);
const ONCE: KScope = KScope::Once;

macro_rules! theorem {
    ($id:literal, $scope:expr, $check:expr, $supp:expr, $statement:literal) => {
        Theorem {
            id: $id,
            statement: $statement,
            scope: $scope,
            check: $check,
            supplements: $supp,
        }
    };
}

/// Every registered theorem, sorted by id.
pub static REGISTRY: &[Theorem] = &[
    theorem!("cor-classG", K2, cor_class_g, class_g_members,
        "L_2(G) <= n + 1 - Delta(G), with equality iff G admits a class-G partition"),
    theorem!("cor-diam-le-2", R, cor_diam_le_2, none,
        "n >= k + 1 and L_k(G) = k imply diam(G) <= 2"),
    theorem!("cor-regular-half", R, cor_regular_half, regular_members,
        "a d-regular G with k <= d and L_k(G) = n + k - 1 - d has d >= n/2"),
    theorem!("lem-45-upper", K2, lem_45_upper, none,
        "connected G with n >= 3 has L_2(G) <= 4n/5"),
    theorem!("lem-bipartite-formula", R, lem_bipartite_formula, bipartites,
        "L_k(K_{m,n}) = 1 for k = 1 and min(k-1, m) + min(k-1, n) otherwise"),
    theorem!("lem-complete-formula", R, lem_complete_formula, completes,
        "L_k(K_n) = min(k, n)"),
    theorem!("lem-cutvertex-diam2", K2, lem_cutvertex_diam2, stars,
        "diam(G) = 2 and a cut vertex imply L_2(G) = 2"),
    theorem!("lem-cycle-formula", R, lem_cycle_formula, cycles,
        "L_k(C_n) = floor(kn/3) for k = 1, 2 and n for k >= 3"),
    theorem!("lem-delta-upper", R, lem_delta_upper, none,
        "L_k(G) <= kn/(delta(G) + 1)"),
    theorem!("lem-diam-lower-k12", K12, lem_diam_lower_k12, long_diameter,
        "connected G and k in {1,2} give L_k(G) >= ceil((k + k diam(G))/3)"),
    theorem!("lem-kgamma", R, lem_kgamma, none,
        "L_k(G) <= k gamma(G)"),
    theorem!("lem-kk1-upper", R, lem_kk1_upper, regular_members,
        "connected G with delta(G) >= k has L_k(G) <= kn/(k + 1)"),
    theorem!("lem-l1-eq-1-iff-diam2", K1, lem_l1_eq_1_iff_diam2, none,
        "L_1(G) = 1 iff diam(G) <= 2"),
    theorem!("lem-l1-eq-gamma-trees", ONCE, lem_l1_eq_gamma_trees, tree_members,
        "L_1(T) = gamma(T) for every tree"),
    theorem!("lem-l1-maxdeg-lower", K1, lem_l1_maxdeg_lower, none,
        "L_1(G) >= n/(Delta(G)^2 + 1)"),
    theorem!("lem-maxdeg-n1", K2, lem_maxdeg_n1, class_g_members,
        "n >= 2 and Delta(G) = n - 1 imply L_2(G) = 2"),
    theorem!("lem-monotone-chain", R, lem_monotone_chain, none,
        "connected G with k <= Delta(G) has L_{k+1}(G) >= L_k(G) + 1 and L_k(G) >= L_1(G) + k - 1"),
    theorem!("lem-ng-l2-n-plus-2", K2, lem_ng_l2_n_plus_2, k_minus_e,
        "L_2(G) + L_2(complement) <= n + 2"),
    theorem!("lem-open-packing-diam2", ONCE, lem_open_packing_diam2, completes,
        "n >= 3: rho0(G) = 1 iff diam(G) <= 2 and every edge lies on a triangle; diam(G) = 2 implies rho0(G) <= 2"),
    theorem!("lem-openpack-sandwich", ONCE, lem_openpack_sandwich, none,
        "L_1(G) <= rho0(G) <= 2 L_1(G)"),
    theorem!("lem-path-formula", R, lem_path_formula, paths_and_more,
        "L_k(P_n) = ceil(kn/3) for k = 1, 2 and n for k >= 3"),
    theorem!("lem-rho-eq-gammat-trees", ONCE, lem_rho_eq_gammat_trees, tree_members,
        "rho0(T) = gamma_t(T) for every tree with n >= 2"),
    theorem!("prop-l1-l2-sandwich", ONCE, prop_l1_l2_sandwich, none,
        "G with edges has L_1(G) + 1 <= L_2(G) <= 2(Delta^2 + 1)/(delta + 1) L_1(G)"),
    theorem!("prop-lk-geq-k", R, prop_lk_geq_k, none,
        "n >= k + 2 implies L_k(G) >= k"),
    theorem!("prop-ng-lower", R, prop_ng_lower, none,
        "n >= k: L_k(G) + L_k(complement) >= 2k, with equality iff the subset condition holds"),
    theorem!("prop-order-kplus1", R, prop_order_kplus1, none,
        "n = k + 1: L_k(G) = k if Delta(G) = k and k + 1 otherwise"),
    theorem!("prop-small-order", R, prop_small_order, none,
        "n <= k (more generally Delta(G) < k) implies L_k(G) = n"),
    theorem!("th-classT-characterization", ONCE, th_class_t_characterization, tree_members,
        "trees have rho0 <= L_2 <= 2 rho0, with rho0 = L_2 iff the tree admits a class-T partition"),
    theorem!("th-diam-lower-k3", R, th_diam_lower_k3, long_diameter,
        "connected G with Delta(G) >= k >= 3 has L_k(G) >= diam(G) + k - 2"),
    theorem!("th-diam2-construction", ONCE, th_diam2_construction, diam2_members,
        "the diameter-two construction for a has diameter 2 and L_2 = a"),
    theorem!("th-girth-l1", K1, th_girth_l1, girth_members,
        "L_1(G) >= floor(g(G)/3)"),
    theorem!("th-girth-l2-lk", R, th_girth_l2_lk, girth_members,
        "L_2(G) >= floor(2 g(G)/3) and L_k(G) >= g(G) + k - 3 for Delta(G) >= k >= 3"),
    theorem!("th-improved-diam-upper", K2, th_improved_diam_upper, long_diameter,
        "connected G has L_2(G) <= n + 1 - Delta(G) - floor((diam(G) - 4)/3)"),
    theorem!("th-lk-eq-k-characterization", R, th_lk_eq_k_characterization, lk_eq_k_members,
        "L_k(G) = k iff n = k, or n = k + 1 and Delta = k, or every (k+1)-subset spans degree k or has a common neighbour"),
    theorem!("th-ng-upper", R, th_ng_upper, k_minus_e,
        "L_k(G) + L_k(complement) <= 2n, 2n - 1 or n + 2k - 2 depending on k against both maximum degrees"),
    theorem!("th-order-degree-upper", R, th_order_degree_upper, none,
        "L_k(G) <= n + k - 1 - Delta(G)"),
    theorem!("th-prescribed-construction", ONCE, th_prescribed_construction, prescribed_members,
        "the prescribed tree for (a, b) has rho0 = L_1 = a and L_2 = b"),
    theorem!("th-spider-characterization", ONCE, th_spider_characterization, tree_members,
        "trees have L_1 + 1 <= L_2 <= 2 L_1, with L_2 = L_1 + 1 iff the tree is a t-spider with t < Delta"),
    theorem!("th-tree-deltaprime", K2, th_tree_deltaprime, tree_deltaprime_members,
        "a tree whose non-leaf vertices all have degree >= 4 has L_2(T) <= 2n/3"),
];

pub fn find(id: &str) -> Option<&'static Theorem> {
    REGISTRY.iter().find(|t| t.id == id)
}
