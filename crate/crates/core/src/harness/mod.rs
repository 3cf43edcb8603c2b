//! Corpora, the theorem registry and the campaign runner.

pub mod campaign;
pub mod corpus;
pub mod facts;
pub mod rng;
pub mod theorems;

pub use campaign::{
    replay, run_campaign, select_theorems, CampaignError, Report, Status, TheoremVerdict,
    Violation, TOOL_VERSION,
};
pub use corpus::{Corpus, CorpusError, CorpusGraph};
pub use facts::GraphFacts;
pub use rng::SplitMix64;
pub use theorems::{KScope, Outcome, Theorem, REGISTRY};
