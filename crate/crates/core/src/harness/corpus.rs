//! Graph corpora and the textual corpus grammar.
//!
//! A corpus spec is a `+`-separated list of terms:
//!
//! | term | graphs |
//! |------|--------|
//! | `all_labeled(N)`, `all_labeled(A..B)` | every labeled graph on `1..=N` (or `A..=B`) vertices, in edge-mask order; orders above 6 need a trailing `,large` |
//! | `trees(<=N)`, `trees(≤N)`, `trees(A..B)` | trees on `2..=N` vertices from all Prüfer sequences, one per isomorphism class; `,labeled` keeps every labeled tree; `,sample=C,seed=S` draws `C` random Prüfer sequences per order instead |
//! | `random_connected(n=A..B,COUNT,seed=S[,p=P])` | `COUNT` connected graphs per order from `G(n, p)`, default `p = 0.3` |
//! | `paths(A..B)`, `cycles(A..B)`, `complete(A..B)` | one family member per order |
//! | `bipartite(<=N)` | `K_{m,n}` for `1 <= m <= n`, `m + n <= N` |
//! | `family(SPEC)` | one constructed graph, e.g. `family(spider:3,2)` |
//! | `files(PATH,...)` | graph6 lines from files; blank lines and `#` comments skipped |
//!
//! Iteration order is fully determined by the corpus spec and seed.

use std::collections::HashSet;
use std::fs;

use thiserror::Error;

use super::rng::SplitMix64;
use crate::extremal::FamilySpec;
use crate::families;
use crate::graph::Graph;
use crate::graph6;
use crate::vertex_set::VertexSet;

/// Largest order enumerated exhaustively without the `large` override.
pub const LABELED_DEFAULT_MAX: usize = 6;
/// Hard ceiling for exhaustive labeled enumeration (2^28 graphs at n = 8).
pub const LABELED_HARD_MAX: usize = 8;
/// Largest order for exhaustive Prüfer enumeration.
pub const TREES_EXHAUSTIVE_MAX: usize = 10;
pub const RANDOM_MIN_ORDER: usize = 2;
pub const RANDOM_MAX_ORDER: usize = 16;
/// Rejected samples allowed per requested graph before giving up.
pub const REJECTION_BUDGET: usize = 1000;
pub const DEFAULT_EDGE_PROB: f64 = 0.3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CorpusError {
    #[error("cannot parse corpus term {term:?}: {reason}")]
    Parse { term: String, reason: String },
    #[error("{what} order {n} is outside {min}..={max}")]
    OrderOutOfRange {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },
    #[error("exhaustive enumeration at n = {n} needs the explicit `large` override")]
    NeedsOverride { n: usize },
    #[error(
        "rejection budget exhausted: only {found} of {wanted} connected graphs on {n} vertices \
         found with p = {p}; try a higher edge probability"
    )]
    BudgetExhausted {
        n: usize,
        p: f64,
        found: usize,
        wanted: usize,
    },
    #[error("cannot read {path}: {reason}")]
    File { path: String, reason: String },
    #[error("{path}:{line}: {reason}")]
    BadGraph {
        path: String,
        line: usize,
        reason: String,
    },
}

/// Every labeled graph on `n` vertices, in edge-mask order: bit `b` of the
/// mask is the `b`-th pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn enumerate_labeled_graphs(
    n: usize,
    allow_large: bool,
) -> Result<impl Iterator<Item = Graph>, CorpusError> {
    if n > LABELED_HARD_MAX {
        return Err(CorpusError::OrderOutOfRange {
            what: "labeled enumeration",
            n,
            min: 0,
            max: LABELED_HARD_MAX,
        });
    }
    if n > LABELED_DEFAULT_MAX && !allow_large {
        return Err(CorpusError::NeedsOverride { n });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            let (i, j) = pairs[b];
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Graph::from_adjacency(adj).expect("enumerated graphs are simple")
    }))
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a labeled tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    assert!(
        n >= 2 && seq.len() == n - 2,
        "Prüfer sequence of length n - 2"
    );
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut g = Graph::empty(n).expect("order within range");
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        g.add_edge(leaf, x).expect("valid edge");
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let (u, v) = (
        rest.next().expect("two left"),
        rest.next().expect("two left"),
    );
    g.add_edge(u, v).expect("valid edge");
    g
}

/// All `n^(n-2)` labeled trees on `n` vertices, Prüfer sequences in lexicographic order.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph>, CorpusError> {
    if !(2..=TREES_EXHAUSTIVE_MAX).contains(&n) {
        return Err(CorpusError::OrderOutOfRange {
            what: "exhaustive tree enumeration",
            n,
            min: 2,
            max: TREES_EXHAUSTIVE_MAX,
        });
    }
    let len = n - 2;
    let total = (n as u64).pow(len as u32);
    Ok((0..total).map(move |mut code| {
        let mut seq = vec![0usize; len];
        for slot in seq.iter_mut().rev() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        prufer_decode(&seq, n)
    }))
}

/// Canonical code of a tree up to isomorphism (AHU encoding rooted at the centre).
pub fn tree_canonical_code(t: &Graph) -> Vec<u8> {
    let n = t.n();
    if n <= 1 {
        return vec![n as u8];
    }
    // peel leaves to find the one or two centres
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for u in t.neighbors(leaf) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(t, c, usize::MAX))
        .min()
        .expect("a centre exists")
}

fn rooted_code(t: &Graph, v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = t
        .neighbors(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| rooted_code(t, u, v))
        .collect();
    children.sort();
    let mut out = vec![b'('];
    for c in children {
        out.extend(c);
    }
    out.push(b')');
    out
}

/// `count` connected graphs on `n` vertices from `G(n, p)` by rejection.
///
/// Each sample draws one uniform number per vertex pair in graph6 order and
/// keeps the edge when it is below `p`.
pub fn random_connected(
    n: usize,
    count: usize,
    rng: &mut SplitMix64,
    p: f64,
) -> Result<Vec<Graph>, CorpusError> {
    if !(RANDOM_MIN_ORDER..=RANDOM_MAX_ORDER).contains(&n) {
        return Err(CorpusError::OrderOutOfRange {
            what: "random connected",
            n,
            min: RANDOM_MIN_ORDER,
            max: RANDOM_MAX_ORDER,
        });
    }
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    let budget = REJECTION_BUDGET.saturating_mul(count.max(1));
    while out.len() < count {
        if attempts == budget {
            return Err(CorpusError::BudgetExhausted {
                n,
                p,
                found: out.len(),
                wanted: count,
            });
        }
        attempts += 1;
        let mut g = Graph::empty(n).expect("order within range");
        for j in 1..n {
            for i in 0..j {
                if rng.next_f64() < p {
                    g.add_edge(i, j).expect("valid edge");
                }
            }
        }
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

/// A uniformly random labeled tree on `n` vertices.
pub fn random_tree(n: usize, rng: &mut SplitMix64) -> Graph {
    if n == 1 {
        return Graph::empty(1).expect("one vertex");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    prufer_decode(&seq, n)
}

#[derive(Clone, Debug, PartialEq)]
enum Term {
    Labeled { lo: usize, hi: usize, large: bool },
    Trees { lo: usize, hi: usize, labeled: bool },
    Materialized(Vec<(Graph, Option<FamilySpec>)>),
}

/// A parsed corpus: graphs are produced lazily by [`Corpus::iter`].
#[derive(Clone, Debug, PartialEq)]
pub struct Corpus {
    spec: String,
    terms: Vec<Term>,
}

/// One corpus member; constructed graphs remember the family spec they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusGraph {
    pub graph: Graph,
    pub origin: Option<FamilySpec>,
}

impl Corpus {
    /// Parses `spec`; `default_seed` is used by random terms without `seed=`.
    pub fn parse(spec: &str, default_seed: u64) -> Result<Corpus, CorpusError> {
        let mut terms = Vec::new();
        for raw in split_terms(spec)? {
            terms.push(parse_term(&raw, default_seed)?);
        }
        if terms.is_empty() {
            return Err(CorpusError::Parse {
                term: spec.to_string(),
                reason: "empty corpus".into(),
            });
        }
        Ok(Corpus {
            spec: spec.trim().to_string(),
            terms,
        })
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn iter(&self) -> Box<dyn Iterator<Item = CorpusGraph> + '_> {
        let plain = |g: Graph| CorpusGraph {
            graph: g,
            origin: None,
        };
        Box::new(
            self.terms
                .iter()
                .flat_map(move |term| -> Box<dyn Iterator<Item = CorpusGraph>> {
                    match *term {
                        Term::Labeled { lo, hi, large } => Box::new((lo..=hi).flat_map(move |n| {
                            enumerate_labeled_graphs(n, large)
                                .expect("validated at parse time")
                                .map(plain)
                        })),
                        Term::Trees { lo, hi, labeled } => {
                            let all = (lo..=hi)
                                .flat_map(|n| enumerate_trees(n).expect("validated at parse time"));
                            if labeled {
                                Box::new(all.map(plain))
                            } else {
                                let mut seen = HashSet::new();
                                Box::new(
                                    all.filter(move |t| seen.insert(tree_canonical_code(t)))
                                        .map(plain),
                                )
                            }
                        }
                        Term::Materialized(ref v) => {
                            Box::new(v.iter().map(|(g, origin)| CorpusGraph {
                                graph: g.clone(),
                                origin: *origin,
                            }))
                        }
                    }
                }),
        )
    }
}

fn parse_err(term: &str, reason: impl Into<String>) -> CorpusError {
    CorpusError::Parse {
        term: term.to_string(),
        reason: reason.into(),
    }
}

/// Splits on `+` outside parentheses.
fn split_terms(spec: &str) -> Result<Vec<String>, CorpusError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in spec.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(parse_err(spec, "unbalanced parentheses"));
        }
        if ch == '+' && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    if depth != 0 {
        return Err(parse_err(spec, "unbalanced parentheses"));
    }
    out.push(cur);
    Ok(out
        .into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect())
}

fn parse_usize(term: &str, s: &str) -> Result<usize, CorpusError> {
    s.trim()
        .parse()
        .map_err(|_| parse_err(term, format!("expected a number, found {s:?}")))
}

/// `N` (meaning `default_lo..=N`), `<=N`, `≤N` or `A..B` (inclusive).
fn parse_range(term: &str, s: &str, default_lo: usize) -> Result<(usize, usize), CorpusError> {
    let s = s.trim();
    let (lo, hi) = if let Some(rest) = s.strip_prefix("<=").or_else(|| s.strip_prefix('≤')) {
        (default_lo, parse_usize(term, rest)?)
    } else if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        (parse_usize(term, a)?, parse_usize(term, b)?)
    } else {
        (default_lo, parse_usize(term, s)?)
    };
    if lo > hi {
        return Err(parse_err(term, format!("empty range {lo}..{hi}")));
    }
    Ok((lo, hi))
}

fn parse_term(term: &str, default_seed: u64) -> Result<Term, CorpusError> {
    let (name, inner) = term
        .split_once('(')
        .and_then(|(name, rest)| rest.strip_suffix(')').map(|inner| (name.trim(), inner)))
        .ok_or_else(|| parse_err(term, "expected name(arguments)"))?;
    let args: Vec<&str> = inner.split(',').map(str::trim).collect();
    let materialized =
        |graphs: Vec<Graph>| Term::Materialized(graphs.into_iter().map(|g| (g, None)).collect());
    match name {
        "all_labeled" => {
            let (lo, hi) = parse_range(term, args[0], 1)?;
            let large = match &args[1..] {
                [] => false,
                ["large"] => true,
                _ => return Err(parse_err(term, "only the `large` option is accepted")),
            };
            enumerate_labeled_graphs(hi, large).map(drop)?;
            Ok(Term::Labeled { lo, hi, large })
        }
        "trees" => {
            let (lo, hi) = parse_range(term, args[0], 2)?;
            let mut labeled = false;
            let mut sample = None;
            let mut seed = default_seed;
            for opt in &args[1..] {
                match opt.split_once('=') {
                    None if *opt == "labeled" => labeled = true,
                    Some(("sample", v)) => sample = Some(parse_usize(term, v)?),
                    Some(("seed", v)) => seed = parse_usize(term, v)? as u64,
                    _ => return Err(parse_err(term, format!("unknown option {opt:?}"))),
                }
            }
            if let Some(count) = sample {
                if lo < 1 || hi > crate::vertex_set::MAX_VERTICES {
                    return Err(parse_err(term, "sampled tree orders must lie in 1..=64"));
                }
                let mut rng = SplitMix64::new(seed);
                let trees = (lo..=hi)
                    .flat_map(|n| (0..count).map(move |_| n))
                    .map(|n| random_tree(n, &mut rng))
                    .collect();
                return Ok(materialized(trees));
            }
            enumerate_trees(lo).map(drop)?;
            enumerate_trees(hi).map(drop)?;
            Ok(Term::Trees { lo, hi, labeled })
        }
        "random_connected" => {
            let mut range = None;
            let mut count = None;
            let mut seed = default_seed;
            let mut p = DEFAULT_EDGE_PROB;
            for arg in &args {
                match arg.split_once('=') {
                    Some(("n", v)) if v.contains("..") => range = Some(parse_range(term, v, 0)?),
                    Some(("n", v)) => {
                        let n = parse_usize(term, v)?;
                        range = Some((n, n));
                    }
                    Some(("count", v)) => count = Some(parse_usize(term, v)?),
                    Some(("seed", v)) => seed = parse_usize(term, v)? as u64,
                    Some(("p", v)) => {
                        p = v
                            .trim()
                            .parse()
                            .map_err(|_| parse_err(term, "bad probability"))?;
                        if !(0.0..=1.0).contains(&p) {
                            return Err(parse_err(term, "probability outside [0, 1]"));
                        }
                    }
                    None if count.is_none() => count = Some(parse_usize(term, arg)?),
                    _ => return Err(parse_err(term, format!("unknown argument {arg:?}"))),
                }
            }
            let (lo, hi) = range.ok_or_else(|| parse_err(term, "missing n=A..B"))?;
            let count = count.ok_or_else(|| parse_err(term, "missing graph count"))?;
            let mut rng = SplitMix64::new(seed);
            let mut graphs = Vec::new();
            for n in lo..=hi {
                graphs.extend(random_connected(n, count, &mut rng, p)?);
            }
            Ok(materialized(graphs))
        }
        "paths" | "cycles" | "complete" => {
            let (lo, hi) = parse_range(term, inner, 1)?;
            let graphs = (lo..=hi)
                .map(|n| match name {
                    "paths" => families::try_path(n),
                    "cycles" => families::cycle(n),
                    _ => families::try_complete(n),
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| parse_err(term, e.to_string()))?;
            Ok(materialized(graphs))
        }
        "bipartite" => {
            let (_, hi) = parse_range(term, inner, 2)?;
            if hi > crate::vertex_set::MAX_VERTICES {
                return Err(parse_err(term, "order above 64"));
            }
            let graphs = (2..=hi)
                .flat_map(|total| (1..=total / 2).map(move |m| (m, total - m)))
                .map(|(m, n)| families::complete_bipartite(m, n).expect("order checked"))
                .collect();
            Ok(materialized(graphs))
        }
        "family" => {
            let spec: FamilySpec = inner
                .parse()
                .map_err(|e: crate::extremal::ExtremalError| parse_err(term, e.to_string()))?;
            let g = spec.build().map_err(|e| parse_err(term, e.to_string()))?;
            Ok(Term::Materialized(vec![(g, Some(spec))]))
        }
        "files" => {
            let mut graphs = Vec::new();
            for path in args.iter().filter(|a| !a.is_empty()) {
                let text = fs::read_to_string(path).map_err(|e| CorpusError::File {
                    path: path.to_string(),
                    reason: e.to_string(),
                })?;
                for (i, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let g = graph6::parse(line).map_err(|e| CorpusError::BadGraph {
                        path: path.to_string(),
                        line: i + 1,
                        reason: e.to_string(),
                    })?;
                    graphs.push(g);
                }
            }
            Ok(materialized(graphs))
        }
        _ => Err(parse_err(term, format!("unknown corpus {name:?}"))),
    }
}
