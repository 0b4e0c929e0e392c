//! Crate-wide error type.

use std::collections::BTreeSet;

use crate::game::{ActionId, AgentId};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The law bans actions that no agent can take.
    #[error("law is not a subset of the action universe; unknown actions: {}", join(.outside))]
    LawOutOfUniverse { outside: BTreeSet<ActionId> },

    /// The named agent is not part of the game.
    #[error("unknown agent `{agent}`")]
    UnknownAgent { agent: AgentId },

    /// The action is not in the named agent's action set.
    #[error("agent `{agent}` has no action `{action}`")]
    ActionNotAvailable { agent: AgentId, action: ActionId },

    /// Responsibility is only attributed over prohibited profiles.
    #[error("profile is not in the game's prohibition set")]
    NotProhibited,

    /// Some prohibited profile has the action as its entire support.
    #[error("action `{action}` is not safable")]
    NotSafable { action: ActionId },

    /// The candidate set fails to touch every edge.
    #[error("candidate set is not a vertex cover")]
    NotACover,

    /// Reduction requires a useful law as the starting point.
    #[error("law is not useful")]
    NotUseful,

    /// Reduction requires a gap-free law as the starting point.
    #[error("law is not gap-free")]
    NotGapFree,

    /// Gadget names must not collide with the original game.
    #[error("gadget names are not fresh: {reason}")]
    NamesNotFresh { reason: String },

    /// A game document violated its structural invariants.
    #[error("invalid game: {}", .violations.join("; "))]
    InvalidGame { violations: Vec<String> },

    /// A graph document violated its structural invariants.
    #[error("invalid hypergraph: {}", .violations.join("; "))]
    InvalidGraph { violations: Vec<String> },

    /// A generator size parameter exceeds its documented cap.
    #[error("generator cap exceeded: {what} = {requested} (cap {cap})")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    /// Exhaustive search refused or interrupted.
    #[error("search budget exceeded: {detail}")]
    BudgetExceeded { detail: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

fn join(ids: &BTreeSet<ActionId>) -> String {
    itertools::join(ids.iter(), ", ")
}
