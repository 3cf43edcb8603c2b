//! Campaign execution, verdicts and the JSON report.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::corpus::{Corpus, CorpusGraph};
use super::facts::GraphFacts;
use super::theorems::{find, KScope, Outcome, Theorem, REGISTRY};
use crate::extremal::FamilySpec;
use crate::graph6;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CampaignError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("invalid replay input: {0}")]
    Replay(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

/// A counterexample, replayable from its graph6 string (and construction
/// spec, for theorems about constructions).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub origin: Option<String>,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem_id: String,
    /// Graphs (corpus members plus constructed supplements) examined.
    pub graphs_checked: u64,
    /// `(graph, k)` evaluations where the hypothesis held.
    pub substantive_checks: u64,
    /// Substantive evaluations that attained equality or found a family member.
    pub positive_cases: u64,
    pub violations: Vec<Violation>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub corpus_spec: String,
    pub verdicts: Vec<TheoremVerdict>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Resolves `all` or a comma-separated id list against the registry.
pub fn select_theorems(ids: &str) -> Result<Vec<&'static Theorem>, CampaignError> {
    if ids.trim() == "all" {
        return Ok(REGISTRY.iter().collect());
    }
    let mut chosen = BTreeSet::new();
    for id in ids.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let t = find(id).ok_or_else(|| CampaignError::UnknownTheorem(id.to_string()))?;
        chosen.insert(t.id);
    }
    Ok(chosen
        .into_iter()
        .map(|id| find(id).expect("known id"))
        .collect())
}

fn limits(scope: KScope, k_range: &RangeInclusive<usize>) -> Vec<usize> {
    match scope {
        KScope::Range => k_range.clone().collect(),
        KScope::Fixed(ks) => ks.to_vec(),
        KScope::Once => vec![0],
    }
}

#[derive(Default)]
struct Tally {
    graphs: u64,
    substantive: u64,
    positive: u64,
    violations: Vec<Violation>,
}

impl Tally {
    fn record(&mut self, theorem: &Theorem, facts: &GraphFacts, k_range: &RangeInclusive<usize>) {
        self.graphs += 1;
        for k in limits(theorem.scope, k_range) {
            match (theorem.check)(facts, k) {
                Outcome::Inapplicable => {}
                Outcome::Holds { positive } => {
                    self.substantive += 1;
                    self.positive += positive as u64;
                }
                Outcome::Violated(details) => {
                    self.substantive += 1;
                    self.violations.push(Violation {
                        graph6: graph6::emit(&facts.graph),
                        k: (theorem.scope != KScope::Once).then_some(k),
                        origin: facts.origin.map(|o| o.to_string()),
                        details,
                    });
                }
            }
        }
    }

    fn finish(mut self, id: &str) -> TheoremVerdict {
        self.violations.sort();
        self.violations.dedup();
        let status = if !self.violations.is_empty() {
            Status::Fail
        } else if self.substantive == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
        TheoremVerdict {
            theorem_id: id.to_string(),
            graphs_checked: self.graphs,
            substantive_checks: self.substantive,
            positive_cases: self.positive,
            violations: self.violations,
            status,
        }
    }
}

/// Checks every theorem on every corpus graph (and on the theorem's own
/// constructed supplements) for the limits its scope selects.
pub fn run_campaign(
    theorems: &[&'static Theorem],
    corpus: &Corpus,
    k_range: RangeInclusive<usize>,
) -> Report {
    let mut tallies: Vec<Tally> = theorems.iter().map(|_| Tally::default()).collect();
    for CorpusGraph { graph, origin } in corpus.iter() {
        let facts = GraphFacts::new(graph, origin);
        for (t, tally) in theorems.iter().zip(&mut tallies) {
            tally.record(t, &facts, &k_range);
        }
    }
    for (t, tally) in theorems.iter().zip(&mut tallies) {
        for spec in (t.supplements)() {
            let graph = spec.build().expect("registered supplements build");
            tally.record(t, &GraphFacts::new(graph, Some(spec)), &k_range);
        }
    }
    Report {
        tool_version: TOOL_VERSION.to_string(),
        corpus_spec: corpus.spec().to_string(),
        verdicts: theorems
            .iter()
            .zip(tallies)
            .map(|(t, tally)| tally.finish(t.id))
            .collect(),
    }
}

/// Re-evaluates one theorem on one graph; returns the violation details if
/// the statement still fails there.
pub fn replay(theorem_id: &str, violation: &Violation) -> Result<Option<String>, CampaignError> {
    let theorem =
        find(theorem_id).ok_or_else(|| CampaignError::UnknownTheorem(theorem_id.to_string()))?;
    let graph =
        graph6::parse(&violation.graph6).map_err(|e| CampaignError::Replay(e.to_string()))?;
    let origin = violation
        .origin
        .as_deref()
        .map(str::parse::<FamilySpec>)
        .transpose()
        .map_err(|e| CampaignError::Replay(e.to_string()))?;
    let facts = GraphFacts::new(graph, origin);
    Ok(match (theorem.check)(&facts, violation.k.unwrap_or(0)) {
        Outcome::Violated(d) => Some(d),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_degree_bound_on_order_five() {
        let corpus = Corpus::parse("all_labeled(5)", 0).unwrap();
        let ts = select_theorems("th-order-degree-upper").unwrap();
        let r = run_campaign(&ts, &corpus, 1..=3);
        let v = &r.verdicts[0];
        assert_eq!(v.status, Status::Pass);
        assert_eq!(v.graphs_checked, 1 + 2 + 8 + 64 + 1024);
        assert!(v.violations.is_empty());
    }

    #[test]
    fn path_formula_on_paths() {
        let corpus = Corpus::parse("paths(3..12)", 0).unwrap();
        let ts = select_theorems("lem-path-formula").unwrap();
        let r = run_campaign(&ts, &corpus, 1..=2);
        let v = &r.verdicts[0];
        assert_eq!(v.status, Status::Pass);
        // 10 corpus paths and 12 supplements, each at two limits, all exact
        assert_eq!(v.substantive_checks, 44);
        assert_eq!(v.positive_cases, 44);
    }

    #[test]
    fn spider_characterization_on_trees() {
        let corpus = Corpus::parse("trees(<=9)", 0).unwrap();
        let ts = select_theorems("th-spider-characterization").unwrap();
        let r = run_campaign(&ts, &corpus, 1..=3);
        assert_eq!(r.verdicts[0].status, Status::Pass);
    }

    #[test]
    fn unknown_ids_are_rejected() {
        assert_eq!(
            select_theorems("th-order-degree-upper,th-nonexistent").err(),
            Some(CampaignError::UnknownTheorem("th-nonexistent".into()))
        );
        assert_eq!(select_theorems("all").unwrap().len(), 39);
    }

    #[test]
    fn vacuous_status() {
        // the 4n/5 bound needs a connected graph on at least three vertices
        let corpus = Corpus::parse("paths(1..2)", 0).unwrap();
        let r = run_campaign(&select_theorems("lem-45-upper").unwrap(), &corpus, 1..=3);
        assert_eq!(r.verdicts[0].status, Status::Vacuous);
        assert_eq!(r.verdicts[0].graphs_checked, 2);
        assert!(r.all_passed());
    }

    #[test]
    fn replay_detects_a_planted_violation() {
        // a record whose statement does hold replays as not violated
        let fine = Violation {
            graph6: "A_".into(),
            k: Some(2),
            origin: None,
            details: String::new(),
        };
        assert_eq!(replay("th-order-degree-upper", &fine).unwrap(), None);
        // the diameter-two check with a mismatched construction label fails
        let planted = Violation {
            graph6: graph6::emit(&crate::extremal::construct_diam2(3).unwrap()),
            k: None,
            origin: Some("diam2:4".into()),
            details: String::new(),
        };
        assert!(replay("th-diam2-construction", &planted).unwrap().is_some());
        assert!(replay("no-such-theorem", &fine).is_err());
    }

    #[test]
    fn report_json_has_fixed_top_level_order() {
        let corpus = Corpus::parse("all_labeled(3)", 0).unwrap();
        let r = run_campaign(
            &select_theorems("prop-small-order").unwrap(),
            &corpus,
            1..=2,
        );
        let json = r.to_json();
        let a = json.find("tool_version").unwrap();
        let b = json.find("corpus_spec").unwrap();
        let c = json.find("verdicts").unwrap();
        assert!(a < b && b < c);
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
