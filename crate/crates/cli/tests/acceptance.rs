//! Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.
//!
//! Derived values come from small oracles written here (brute-force subset
//! scans and textbook formulas) rather than from the library under test.

use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;

use limpack::bounds::{closed_form, nordhaus_gaddum, Family};
use limpack::extremal::{construct_diam2, construct_tree_prescribed};
use limpack::harness::corpus::{enumerate_labeled_graphs, enumerate_trees};
use limpack::harness::SplitMix64;
use limpack::profile::diameter;
use limpack::{families, solvers, Graph, Length, VertexSet};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

const CAMPAIGN_CORPUS: &str = "all_labeled(6)+trees(≤9)+random_connected(n=8..12,1000,seed=42)";
const CHARACTERIZATIONS: [&str; 4] = [
    "th-lk-eq-k-characterization",
    "cor-classG",
    "th-spider-characterization",
    "th-classT-characterization",
];

fn main() -> ExitCode {
    let dir = tempfile::tempdir().expect("temporary directory");
    let first = dir.path().join("run1.json");
    let second = dir.path().join("run2.json");
    let criteria: [Criterion; 9] = [
        ("formula agreement", Box::new(formula_agreement)),
        (
            "oracle and branch-and-bound agree on order six",
            Box::new(oracle_bb_agreement),
        ),
        (
            "full campaign has no violations",
            Box::new(|| bound_soundness(&first)),
        ),
        (
            "characterizations hold with enough positives",
            Box::new(|| characterizations(&first)),
        ),
        ("constructions certified", Box::new(constructions)),
        ("complement-sum tightness", Box::new(ng_tightness)),
        ("tree identities on all labeled trees", Box::new(tree_sweep)),
        (
            "saturation, monotonicity, additivity",
            Box::new(property_suite),
        ),
        (
            "campaign reports are byte-identical",
            Box::new(|| determinism(&first, &second)),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {} [{tag}] {name}: {detail} ({secs:.1}s)", i + 1);
        failed += outcome.is_err() as usize;
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || {
        format!("{what} took {took:?}, limit {limit:?}")
    })
}

/// Closed neighbourhoods as plain bitmasks.
fn closed_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| {
            (0..g.n())
                .filter(|&u| u == v || g.has_edge(u, v))
                .fold(0, |m, u| m | 1 << u)
        })
        .collect()
}

/// `best[k]` = largest subset whose heaviest closed neighbourhood holds at
/// most `k` of its vertices, for every `k` in `0..=n`, by scanning all subsets.
fn brute_force_lk_table(g: &Graph) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 20);
    let masks = closed_masks(g);
    let mut best = vec![0usize; n + 1];
    for s in 0u32..(1 << n) {
        let load = masks
            .iter()
            .map(|m| (m & s).count_ones())
            .max()
            .unwrap_or(0) as usize;
        let size = s.count_ones() as usize;
        best[load] = best[load].max(size);
    }
    for k in 1..=n {
        best[k] = best[k].max(best[k - 1]);
    }
    best
}

fn brute_force_lk(g: &Graph, k: usize) -> usize {
    let table = brute_force_lk_table(g);
    table[k.min(g.n())]
}

/// Textbook values for the four named families.
fn textbook(family: Family, k: usize) -> usize {
    match family {
        Family::Path(n) if k <= 2 => (k * n).div_ceil(3),
        Family::Cycle(n) if k <= 2 => k * n / 3,
        Family::Path(n) | Family::Cycle(n) => n,
        Family::Complete(n) => k.min(n),
        Family::CompleteBipartite(..) if k == 1 => 1,
        Family::CompleteBipartite(m, n) => (k - 1).min(m) + (k - 1).min(n),
    }
}

fn formula_agreement() -> Outcome {
    let start = Instant::now();
    let mut cases: Vec<(Family, Graph)> = Vec::new();
    for n in 3..=12 {
        cases.push((Family::Path(n), families::path(n)));
        cases.push((Family::Cycle(n), families::cycle(n).unwrap()));
    }
    for n in 1..=10 {
        cases.push((Family::Complete(n), families::complete(n)));
    }
    for total in 2..=10usize {
        for m in 1..=total / 2 {
            let g = families::complete_bipartite(m, total - m).unwrap();
            cases.push((Family::CompleteBipartite(m, total - m), g));
        }
    }
    let mut checked = 0;
    for (family, g) in &cases {
        let table = brute_force_lk_table(g);
        for k in 1..=4 {
            let oracle = solvers::limited_packing_oracle(g, k)
                .map_err(|e| e.to_string())?
                .value;
            let formula = closed_form(*family, k).map_err(|e| e.to_string())?;
            let (expected, brute) = (textbook(*family, k), table[k.min(g.n())]);
            ensure(
                oracle == formula && formula == expected && brute == expected,
                || {
                    format!("{family:?} k={k}: oracle {oracle}, closed form {formula}, textbook {expected}, brute force {brute}")
                },
            )?;
            checked += 1;
        }
    }
    within(start, Duration::from_secs(10), "formula agreement")?;
    Ok(format!("{checked} (family, k) pairs agree"))
}

fn oracle_bb_agreement() -> Outcome {
    let start = Instant::now();
    let mut graphs = 0;
    for g in enumerate_labeled_graphs(6, false).map_err(|e| e.to_string())? {
        for k in 1..=3 {
            let oracle = solvers::limited_packing_oracle(&g, k).map_err(|e| e.to_string())?;
            let bb = solvers::limited_packing_bb(&g, k);
            ensure(oracle.value == bb.value, || {
                format!(
                    "{:?} k={k}: oracle {} vs branch-and-bound {}",
                    g, oracle.value, bb.value
                )
            })?;
            ensure(
                solvers::is_k_limited_packing(&g, k, bb.witness) && bb.witness.len() == bb.value,
                || format!("{g:?} k={k}: invalid branch-and-bound witness"),
            )?;
        }
        graphs += 1;
    }
    ensure(graphs == 32768, || {
        format!("enumerated {graphs} graphs, expected 32768")
    })?;
    within(start, Duration::from_secs(300), "oracle agreement")?;
    Ok(format!("{graphs} graphs, k = 1..3"))
}

fn run_verify(out: &Path) -> Result<std::process::Output, String> {
    Command::new(env!("CARGO_BIN_EXE_limpack"))
        .args([
            "verify",
            "--theorems",
            "all",
            "--corpus",
            CAMPAIGN_CORPUS,
            "--k",
            "1..3",
            "--json",
        ])
        .arg(out)
        .output()
        .map_err(|e| format!("running limpack: {e}"))
}

fn load_report(path: &Path) -> Result<Value, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("reading report: {e}"))?;
    serde_json::from_str(&text).map_err(|e| format!("parsing report: {e}"))
}

fn bound_soundness(report: &Path) -> Outcome {
    let start = Instant::now();
    let out = run_verify(report)?;
    within(start, Duration::from_secs(30 * 60), "campaign")?;
    let v = load_report(report)?;
    let verdicts = v["verdicts"].as_array().ok_or("report has no verdicts")?;
    let violations: usize = verdicts
        .iter()
        .map(|t| t["violations"].as_array().map_or(0, Vec::len))
        .sum();
    let bad: Vec<&str> = verdicts
        .iter()
        .filter(|t| t["status"] != "pass")
        .filter_map(|t| t["theorem_id"].as_str())
        .collect();
    ensure(
        out.status.success() && violations == 0 && bad.is_empty(),
        || {
            format!(
                "exit {:?}, {violations} violations, not passing: {bad:?}",
                out.status.code()
            )
        },
    )?;
    Ok(format!("{} theorems pass, 0 violations", verdicts.len()))
}

fn characterizations(report: &Path) -> Outcome {
    let v = load_report(report)?;
    let verdicts = v["verdicts"].as_array().ok_or("report has no verdicts")?;
    let mut summary = Vec::new();
    for id in CHARACTERIZATIONS {
        let t = verdicts
            .iter()
            .find(|t| t["theorem_id"] == id)
            .ok_or_else(|| format!("{id} missing from report"))?;
        let positives = t["positive_cases"].as_u64().unwrap_or(0);
        ensure(t["status"] == "pass" && positives >= 50, || {
            format!("{id}: status {}, {positives} positives", t["status"])
        })?;
        summary.push(format!("{id} {positives}"));
    }
    Ok(format!("positives: {}", summary.join(", ")))
}

fn constructions() -> Outcome {
    for a in 2..=6 {
        let g = construct_diam2(a).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let l2 = solvers::limited_packing_bb(&g, 2).value;
        within(
            start,
            Duration::from_secs(60),
            &format!("L_2 of the a={a} diameter-two graph"),
        )?;
        let d = diameter(&g);
        ensure(d == Length::Finite(2) && l2 == a, || {
            format!("diameter-two construction a={a}: diameter {d}, L_2 = {l2}")
        })?;
        if a == 6 {
            ensure(g.n() == 21, || {
                format!("a=6 construction has {} vertices", g.n())
            })?;
        }
    }
    let mut pairs: Vec<(usize, usize)> = (2..=5)
        .flat_map(|a| (a + 1..=2 * a).map(move |b| (a, b)))
        .collect();
    pairs.push((8, 12));
    for &(a, b) in &pairs {
        let t = construct_tree_prescribed(a, b).map_err(|e| e.to_string())?;
        let rho = solvers::open_packing_number(&t).value;
        let l1 = solvers::limited_packing_number(&t, 1).value;
        let l2 = solvers::limited_packing_number(&t, 2).value;
        let is_tree = t.is_connected() && t.edge_count() + 1 == t.n();
        ensure(is_tree && rho == a && l1 == a && l2 == b, || {
            format!("prescribed ({a},{b}): tree {is_tree}, rho0 {rho}, L_1 {l1}, L_2 {l2}")
        })?;
    }
    Ok(format!(
        "diameter-two a = 2..6 and {} prescribed trees",
        pairs.len()
    ))
}

fn complement_sum(g: &Graph, k: usize) -> Result<usize, String> {
    let direct = brute_force_lk(g, k) + brute_force_lk(&g.complement(), k);
    let report = nordhaus_gaddum(g, k);
    ensure(report.sum == direct, || {
        format!("{g:?}: library sum {} vs {direct}", report.sum)
    })?;
    Ok(direct)
}

fn ng_tightness() -> Outcome {
    for n in 3..=8 {
        let g = families::complete_minus_edge(n).map_err(|e| e.to_string())?;
        let sum = complement_sum(&g, 1)?;
        ensure(sum == n, || {
            format!("K_{n} - e, k=1: sum {sum}, expected {n}")
        })?;
    }
    let k2_k1 = Graph::from_edges(3, [(0, 1)]).map_err(|e| e.to_string())?;
    let sum = complement_sum(&k2_k1, 2)?;
    ensure(sum == 2 * 3 - 1, || {
        format!("K_2 + K_1, k=2: sum {sum}, expected 5")
    })?;
    let k2 = families::complete(2);
    let sum = complement_sum(&k2, 2)?;
    ensure(sum == 4, || format!("K_2, k=2: sum {sum}, expected 4"))?;
    Ok("K_n - e for n = 3..8, K_2 + K_1 and K_2 attain the bounds".into())
}

/// Minimum dominating / total dominating set sizes of a tree by a subset scan.
fn brute_force_domination(g: &Graph, total: bool) -> usize {
    let n = g.n();
    let masks = closed_masks(g);
    let full = (1u32 << n) - 1;
    (0u32..=full)
        .filter(|&d| {
            (0..n).all(|v| {
                let nb = if total {
                    masks[v] & !(1 << v)
                } else {
                    masks[v]
                };
                nb & d != 0
            })
        })
        .map(|d| d.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

fn tree_sweep() -> Outcome {
    let mut trees = 0u64;
    for n in 2..=9 {
        for t in enumerate_trees(n).map_err(|e| e.to_string())? {
            let l1 = solvers::limited_packing_number(&t, 1).value;
            let rho = solvers::open_packing_number(&t).value;
            let gamma = solvers::domination_number(&t)
                .map_err(|e| e.to_string())?
                .value;
            let gamma_t = solvers::total_domination_number(&t)
                .map_err(|e| e.to_string())?
                .value;
            ensure(l1 == gamma && rho == gamma_t, || {
                format!("{t:?}: L_1 {l1}, gamma {gamma}, rho0 {rho}, gamma_t {gamma_t}")
            })?;
            trees += 1;
        }
        // spot-check the library solvers against subset scans on one order
        if n == 6 {
            for t in enumerate_trees(n).map_err(|e| e.to_string())? {
                let (gamma, gamma_t) = (
                    brute_force_domination(&t, false),
                    brute_force_domination(&t, true),
                );
                ensure(
                    solvers::domination_number(&t).ok().map(|r| r.value) == Some(gamma)
                        && solvers::total_domination_number(&t).ok().map(|r| r.value)
                            == Some(gamma_t),
                    || format!("{t:?}: domination solvers disagree with subset scan"),
                )?;
            }
        }
    }
    let expected: u64 = (2..=9u64).map(|n| n.pow(n as u32 - 2)).sum();
    ensure(trees == expected, || {
        format!("swept {trees} trees, expected {expected}")
    })?;
    Ok(format!("{trees} labeled trees"))
}

fn random_graph(rng: &mut SplitMix64, n: usize) -> Graph {
    let p = 0.05 + 0.6 * rng.next_f64();
    let mut g = Graph::empty(n).expect("order within range");
    for v in 1..n {
        for u in 0..v {
            if rng.next_f64() < p {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

fn component_sum(g: &Graph, k: usize) -> usize {
    g.components()
        .into_iter()
        .map(|c: VertexSet| solvers::limited_packing_number(&g.induced_subgraph(c), k).value)
        .sum()
}

fn property_suite() -> Outcome {
    let mut rng = SplitMix64::new(20_240_601);
    let mut checks = 0u64;
    for _ in 0..10_000 {
        let n = 1 + rng.below(12) as usize;
        let g = random_graph(&mut rng, n);
        let table = brute_force_lk_table(&g);
        let delta = g.max_degree();
        let lk: Vec<usize> = (0..=delta + 2)
            .map(|k| {
                if k == 0 {
                    0
                } else {
                    solvers::limited_packing_number(&g, k).value
                }
            })
            .collect();
        for k in 1..=delta + 1 {
            ensure(lk[k] == table[k.min(n)], || {
                format!(
                    "{g:?} k={k}: solver {} vs brute force {}",
                    lk[k],
                    table[k.min(n)]
                )
            })?;
            ensure((lk[k] == n) == (delta < k), || {
                format!("{g:?} k={k}: L_k = {} with n = {n}, Delta = {delta}", lk[k])
            })?;
            if k <= delta {
                ensure(lk[k + 1] > lk[k], || {
                    format!(
                        "{g:?} k={k}: L_(k+1) = {} not above L_k = {}",
                        lk[k + 1],
                        lk[k]
                    )
                })?;
            }
            ensure(component_sum(&g, k) == lk[k], || {
                format!("{g:?} k={k}: components do not add up")
            })?;
            checks += 1;
        }
        if n < 12 {
            let order = 1 + rng.below((12 - n) as u64) as usize;
            let h = random_graph(&mut rng, order);
            let union = Graph::disjoint_union([&g, &h]).map_err(|e| e.to_string())?;
            for k in 1..=3 {
                let (lu, lg, lh) = (
                    brute_force_lk(&union, k),
                    solvers::limited_packing_number(&g, k).value,
                    solvers::limited_packing_number(&h, k).value,
                );
                let solved = solvers::limited_packing_number(&union, k).value;
                ensure(lu == lg + lh && solved == lu, || {
                    format!("{g:?} + {h:?} k={k}: union {lu} (solver {solved}) vs {lg} + {lh}")
                })?;
            }
        }
    }
    Ok(format!("10000 graphs, {checks} (graph, k) checks"))
}

fn determinism(first: &Path, second: &Path) -> Outcome {
    let a = fs::read(first).map_err(|e| format!("first report unavailable: {e}"))?;
    let out = run_verify(second)?;
    ensure(out.status.success(), || "second campaign failed".into())?;
    let b = fs::read(second).map_err(|e| format!("reading second report: {e}"))?;
    ensure(a == b, || "reports differ".into())?;
    Ok(format!("two reports of {} bytes match", a.len()))
}
