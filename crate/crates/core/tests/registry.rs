//! The theorem registry exposes exactly the stable id list, once each.

use std::collections::BTreeSet;

use limpack::harness::{select_theorems, REGISTRY};

const STABLE_IDS: [&str; 39] = [
    "lem-path-formula",
    "lem-cycle-formula",
    "lem-complete-formula",
    "lem-bipartite-formula",
    "lem-kgamma",
    "lem-delta-upper",
    "lem-monotone-chain",
    "lem-l1-eq-1-iff-diam2",
    "lem-open-packing-diam2",
    "lem-rho-eq-gammat-trees",
    "lem-l1-eq-gamma-trees",
    "lem-diam-lower-k12",
    "lem-ng-l2-n-plus-2",
    "lem-l1-maxdeg-lower",
    "prop-small-order",
    "prop-order-kplus1",
    "prop-lk-geq-k",
    "th-lk-eq-k-characterization",
    "cor-diam-le-2",
    "th-diam-lower-k3",
    "th-girth-l1",
    "th-girth-l2-lk",
    "th-order-degree-upper",
    "cor-classG",
    "cor-regular-half",
    "prop-ng-lower",
    "th-ng-upper",
    "lem-45-upper",
    "lem-kk1-upper",
    "th-tree-deltaprime",
    "th-diam2-construction",
    "lem-maxdeg-n1",
    "lem-cutvertex-diam2",
    "th-improved-diam-upper",
    "lem-openpack-sandwich",
    "prop-l1-l2-sandwich",
    "th-spider-characterization",
    "th-classT-characterization",
    "th-prescribed-construction",
];

#[test]
fn registry_ids_match_the_stable_list() {
    let registered: Vec<&str> = REGISTRY.iter().map(|t| t.id).collect();
    let unique: BTreeSet<&str> = registered.iter().copied().collect();
    assert_eq!(unique.len(), registered.len(), "duplicate ids");
    let expected: BTreeSet<&str> = STABLE_IDS.into_iter().collect();
    assert_eq!(unique, expected);
}

#[test]
fn every_theorem_has_a_statement_and_is_selectable() {
    for t in REGISTRY.iter() {
        assert!(!t.statement.is_empty(), "{} has no statement", t.id);
        let chosen = select_theorems(t.id).unwrap();
        assert_eq!(chosen.len(), 1);
        assert_eq!(chosen[0].id, t.id);
    }
}
