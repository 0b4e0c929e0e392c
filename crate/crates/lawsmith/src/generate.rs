//! Seeded instance generators.
//!
//! Every kind is deterministic in its spec: equal [`GeneratorSpec`]s produce
//! equal documents, byte for byte, because the PRNG is the frozen
//! [`SplitMix64`](crate::rng::SplitMix64) stream and saving canonicalizes.
//! Size parameters are capped (agents 6, actions per agent 8, prohibitions
//! 64, vertices 24, edges 64) to keep generated instances at desk scale.
//!
//! Sampling details, all part of the format contract:
//!
//! * Random games name agents `a1..` and draw each agent's action set as a
//!   uniform subset of a shared pool of `2 × actions_per_agent` names
//!   (`d01..`), so action sets overlap across agents. Prohibited profiles
//!   are sampled without replacement from the joint action space (the
//!   requested count is clamped to its size).
//! * Random graphs name vertices `v01..` and draw each edge by picking a
//!   uniform size in `1..=min(rank, |V|)` and then a uniform subset of that
//!   size. Duplicate draws collapse, so the edge count is an upper bound.
//! * The gadget kinds feed a random graph through
//!   [`graph_to_game`](crate::reductions::graph_to_game) and a random game
//!   through
//!   [`useful_to_gapfree_game`](crate::reductions::useful_to_gapfree_game)
//!   (default fresh names), respectively.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{ActionId, AgentId, Game, Profile};
use crate::hypergraph::Hypergraph;
use crate::reductions::{graph_to_game, useful_to_gapfree_game, FreshNames};
use crate::rng::SplitMix64;

pub const MAX_AGENTS: usize = 6;
pub const MAX_ACTIONS_PER_AGENT: usize = 8;
pub const MAX_PROHIBITIONS: usize = 64;
pub const MAX_VERTICES: usize = 24;
pub const MAX_EDGES: usize = 64;

/// What to generate and from which seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub seed: u64,
    pub kind: GeneratorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorKind {
    RandomGame {
        agents: usize,
        actions_per_agent: usize,
        prohibitions: usize,
    },
    RandomGraph {
        vertices: usize,
        edges: usize,
        rank: usize,
    },
    Factory,
    MatchingPennies,
    /// A random graph turned into its cover game.
    GraphGadget {
        vertices: usize,
        edges: usize,
        rank: usize,
    },
    /// A random game extended so gap-freeness mirrors usefulness.
    GapfreeGadget {
        agents: usize,
        actions_per_agent: usize,
        prohibitions: usize,
    },
}

/// A generated instance: some kinds produce games, others graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Game(Game),
    Graph(Hypergraph),
}

fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        Err(Error::CapExceeded {
            what,
            requested,
            cap,
        })
    } else {
        Ok(())
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Generated> {
    let mut rng = SplitMix64::new(spec.seed);
    match spec.kind {
        GeneratorKind::RandomGame {
            agents,
            actions_per_agent,
            prohibitions,
        } => Ok(Generated::Game(random_game(
            &mut rng,
            agents,
            actions_per_agent,
            prohibitions,
        )?)),
        GeneratorKind::RandomGraph {
            vertices,
            edges,
            rank,
        } => Ok(Generated::Graph(random_graph(
            &mut rng, vertices, edges, rank,
        )?)),
        GeneratorKind::Factory => Ok(Generated::Game(factory())),
        GeneratorKind::MatchingPennies => Ok(Generated::Game(matching_pennies())),
        GeneratorKind::GraphGadget {
            vertices,
            edges,
            rank,
        } => {
            check_cap("rank", rank, MAX_AGENTS)?;
            let graph = random_graph(&mut rng, vertices, edges, rank)?;
            Ok(Generated::Game(graph_to_game(&graph)))
        }
        GeneratorKind::GapfreeGadget {
            agents,
            actions_per_agent,
            prohibitions,
        } => {
            let game = random_game(&mut rng, agents, actions_per_agent, prohibitions)?;
            Ok(Generated::Game(useful_to_gapfree_game(
                &game,
                &FreshNames::default(),
            )?))
        }
    }
}

/// Three production lines, three days, three clashing same-day duties.
pub fn factory() -> Game {
    let agents = ["a", "b", "c"].map(AgentId::from);
    let actions = agents.clone().map(|agent| {
        let set: BTreeSet<ActionId> = (1..=3)
            .map(|day| ActionId::new(format!("d_{agent}^{day}")))
            .collect();
        (agent, set)
    });
    let prohibition = (1..=3).map(|day| {
        ["a", "b", "c"]
            .iter()
            .map(|agent| (*agent, format!("d_{agent}^{day}")))
            .collect::<Profile>()
    });
    Game::new(agents, actions, prohibition)
}

/// Two agents, actions {head, tail} each; matching on either side is
/// prohibited. Useful laws must ban both actions, and nothing is safable.
pub fn matching_pennies() -> Game {
    let agents = ["p1", "p2"].map(AgentId::from);
    let actions = agents.clone().map(|agent| {
        (
            agent,
            ["head", "tail"].map(ActionId::from).into_iter().collect(),
        )
    });
    let prohibition = [
        Profile::from_iter([("p1", "head"), ("p2", "head")]),
        Profile::from_iter([("p1", "tail"), ("p2", "tail")]),
    ];
    Game::new(agents, actions, prohibition)
}

fn random_game(
    rng: &mut SplitMix64,
    agents: usize,
    actions_per_agent: usize,
    prohibitions: usize,
) -> Result<Game> {
    check_cap("agents", agents, MAX_AGENTS)?;
    check_cap(
        "actions_per_agent",
        actions_per_agent,
        MAX_ACTIONS_PER_AGENT,
    )?;
    check_cap("prohibitions", prohibitions, MAX_PROHIBITIONS)?;
    if agents == 0 {
        return Err(Error::InvalidGame {
            violations: vec!["agent count must be at least 1".to_string()],
        });
    }

    let agent_ids: Vec<AgentId> = (1..=agents)
        .map(|i| AgentId::new(format!("a{i}")))
        .collect();
    let pool: Vec<ActionId> = (1..=2 * actions_per_agent)
        .map(|i| ActionId::new(format!("d{i:02}")))
        .collect();

    let mut actions: BTreeMap<AgentId, BTreeSet<ActionId>> = BTreeMap::new();
    for agent in &agent_ids {
        let chosen = rng.sample_indices(pool.len() as u64, actions_per_agent as u64);
        actions.insert(
            agent.clone(),
            chosen
                .into_iter()
                .map(|i| pool[i as usize].clone())
                .collect(),
        );
    }

    // Index the joint action space in mixed radix over the sorted agents and
    // sample profile indices without replacement.
    let joint_size: u64 = actions.values().map(|set| set.len() as u64).product();
    let wanted = (prohibitions as u64).min(joint_size);
    let prohibition: Vec<Profile> = rng
        .sample_indices(joint_size, wanted)
        .into_iter()
        .map(|mut index| {
            actions
                .iter()
                .map(|(agent, set)| {
                    let slot = (index % set.len() as u64) as usize;
                    index /= set.len() as u64;
                    let action = set.iter().nth(slot).expect("slot is within the set");
                    (agent.clone(), action.clone())
                })
                .collect()
        })
        .collect();

    Ok(Game::new(agent_ids, actions, prohibition))
}

fn random_graph(
    rng: &mut SplitMix64,
    vertices: usize,
    edges: usize,
    rank: usize,
) -> Result<Hypergraph> {
    check_cap("vertices", vertices, MAX_VERTICES)?;
    check_cap("edges", edges, MAX_EDGES)?;
    check_cap("rank", rank, MAX_VERTICES)?;
    if rank == 0 {
        return Err(Error::InvalidGraph {
            violations: vec!["rank must be at least 1".to_string()],
        });
    }

    let vertex_ids: Vec<ActionId> = (1..=vertices)
        .map(|i| ActionId::new(format!("v{i:02}")))
        .collect();
    let mut edge_set: BTreeSet<BTreeSet<ActionId>> = BTreeSet::new();
    if !vertex_ids.is_empty() {
        let max_size = rank.min(vertex_ids.len()) as u64;
        for _ in 0..edges {
            let size = rng.between(1, max_size);
            let edge: BTreeSet<ActionId> = rng
                .sample_indices(vertex_ids.len() as u64, size)
                .into_iter()
                .map(|i| vertex_ids[i as usize].clone())
                .collect();
            edge_set.insert(edge);
        }
    }
    Hypergraph::new(rank, vertex_ids, edge_set)
}
