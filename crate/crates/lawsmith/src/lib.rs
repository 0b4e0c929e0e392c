//! Law design for one-shot concurrent games.
//!
//! Given a game (agents, per-agent action sets, and a set of prohibited
//! joint profiles), this crate synthesizes and verifies *laws*: sets of
//! banned actions. A law is useful when it rules out every prohibited
//! profile, and gap-free when every prohibited profile that is still
//! playable leaves at least one agent responsible, legally or
//! counterfactually. Both properties, their minimality variants, and
//! factor-|agents| law minimization are decided by translating to vertex
//! cover on rank-k hypergraphs; exhaustive oracles pin down ground truth on
//! small instances, and a CLI exposes the whole surface over JSON documents.
//!
//! Module map:
//!
//! * [`game`]: the game model, laws, and the definitional checks.
//! * [`hypergraph`]: rank-k hypergraphs, covers, the greedy approximation.
//! * [`reductions`]: game/graph translations and the gap-free gadget.
//! * [`law_design`]: the cover-based verdicts and reducers.
//! * [`exact`]: budgeted exhaustive minimum searches.
//! * [`io`], [`generate`], [`rng`], [`cli`]: documents, seeded instances,
//!   the frozen PRNG, and the command-line front end.

pub mod cli;
pub mod error;
pub mod exact;
pub mod game;
pub mod generate;
pub mod hypergraph;
pub mod io;
pub mod law_design;
pub mod reductions;
pub mod rng;

pub use error::{Error, Result};
pub use exact::{
    exact_min_gap_free_reduction, exact_min_useful_reduction, exact_min_vertex_cover, SearchBudget,
};
pub use game::{
    support_set, ActionId, AgentId, Game, Law, Profile, Responsibility, ResponsibilityVerdict,
    ValidationReport,
};
pub use generate::{generate, Generated, GeneratorKind, GeneratorSpec};
pub use hypergraph::Hypergraph;
pub use law_design::{
    approx_min_gap_free_reduction, approx_min_useful_reduction, is_gap_free_law,
    is_minimal_gap_free_law, is_minimal_useful_law, is_useful_law, ReductionResult,
    ReductionWitness,
};
pub use reductions::{
    game_to_graph, graph_to_game, safe_action_graph, useful_to_gapfree_game, FreshNames,
};
