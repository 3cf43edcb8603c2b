//! Per-graph cache of exact parameters, computed on first use.

use std::cell::{OnceCell, RefCell};
use std::collections::BTreeMap;

use crate::bounds::{detect_families, Family};
use crate::extremal::{recognize_class_G, ClassGWitness, FamilySpec};
use crate::graph::Graph;
use crate::profile::{profile, GraphProfile};
use crate::solvers;

pub struct GraphFacts {
    pub graph: Graph,
    pub origin: Option<FamilySpec>,
    profile: OnceCell<GraphProfile>,
    complement: OnceCell<Graph>,
    lk: RefCell<BTreeMap<usize, usize>>,
    lk_complement: RefCell<BTreeMap<usize, usize>>,
    rho0: OnceCell<usize>,
    gamma: OnceCell<Option<usize>>,
    gamma_t: OnceCell<Option<usize>>,
    families: OnceCell<Vec<Family>>,
    class_g: OnceCell<Option<ClassGWitness>>,
}

impl GraphFacts {
    pub fn new(graph: Graph, origin: Option<FamilySpec>) -> Self {
        GraphFacts {
            graph,
            origin,
            profile: OnceCell::new(),
            complement: OnceCell::new(),
            lk: RefCell::new(BTreeMap::new()),
            lk_complement: RefCell::new(BTreeMap::new()),
            rho0: OnceCell::new(),
            gamma: OnceCell::new(),
            gamma_t: OnceCell::new(),
            families: OnceCell::new(),
            class_g: OnceCell::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn profile(&self) -> &GraphProfile {
        self.profile.get_or_init(|| profile(&self.graph))
    }

    pub fn complement(&self) -> &Graph {
        self.complement.get_or_init(|| self.graph.complement())
    }

    pub fn lk(&self, k: usize) -> usize {
        *self
            .lk
            .borrow_mut()
            .entry(k)
            .or_insert_with(|| solvers::limited_packing_number(&self.graph, k).value)
    }

    pub fn lk_complement(&self, k: usize) -> usize {
        if let Some(&v) = self.lk_complement.borrow().get(&k) {
            return v;
        }
        let v = solvers::limited_packing_number(self.complement(), k).value;
        self.lk_complement.borrow_mut().insert(k, v);
        v
    }

    pub fn rho0(&self) -> usize {
        *self
            .rho0
            .get_or_init(|| solvers::open_packing_number(&self.graph).value)
    }

    /// Domination number; `None` above the oracle's order limit.
    pub fn gamma(&self) -> Option<usize> {
        *self.gamma.get_or_init(|| {
            solvers::domination_number(&self.graph)
                .ok()
                .map(|r| r.value)
        })
    }

    /// Total domination number; `None` with an isolated vertex or above the oracle's limit.
    pub fn gamma_t(&self) -> Option<usize> {
        *self.gamma_t.get_or_init(|| {
            solvers::total_domination_number(&self.graph)
                .ok()
                .map(|r| r.value)
        })
    }

    pub fn families(&self) -> &[Family] {
        self.families
            .get_or_init(|| detect_families(&self.graph, self.profile()))
    }

    pub fn class_g(&self) -> Option<ClassGWitness> {
        *self.class_g.get_or_init(|| recognize_class_G(&self.graph))
    }

    pub fn is_tree(&self) -> bool {
        self.profile().is_tree
    }
}
