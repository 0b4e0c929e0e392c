//! Translations between games and hypergraphs.
//!
//! The two directions of the core correspondence:
//!
//! * [`game_to_graph`] sends a game to the hypergraph of its prohibited
//!   supports. A law is useful exactly when it covers this graph, so law
//!   minimization *is* vertex-cover minimization.
//! * [`graph_to_game`] sends a rank-k hypergraph to a k-agent game whose
//!   prohibited supports are exactly the edges, so cover questions can be
//!   asked as law questions.
//!
//! [`useful_to_gapfree_game`] embeds a game into a slightly larger one in
//! which a law is gap-free exactly when it was useful in the original, which
//! transfers hardness from usefulness questions to gap-freeness questions.
//! [`safe_action_graph`] is the per-action gadget behind the gap-free
//! algorithms: a law keeps an action safe exactly when it covers the graph of
//! the remaining supports that assign that action to that agent.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::game::{ActionId, AgentId, Game, Profile};
use crate::hypergraph::Hypergraph;

/// Names used by [`useful_to_gapfree_game`] for the added agent and actions.
/// They must be fresh for the game being extended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreshNames {
    /// The added agent.
    pub agent: AgentId,
    /// The added agent's distinguishing action; it is safe in the extended
    /// game exactly when the law under scrutiny is useful in the original.
    pub witness: ActionId,
    /// The do-nothing action granted to every agent, old and new.
    pub idle: ActionId,
}

impl Default for FreshNames {
    fn default() -> Self {
        FreshNames {
            agent: AgentId::from("__gamma"),
            witness: ActionId::from("__p"),
            idle: ActionId::from("__n"),
        }
    }
}

impl FreshNames {
    /// Errors unless the names avoid every identifier of `game`.
    pub fn check_fresh_for(&self, game: &Game) -> Result<()> {
        let mut clashes = Vec::new();
        if game.has_agent(&self.agent) {
            clashes.push(format!("agent `{}` already exists", self.agent));
        }
        if self.witness == self.idle {
            clashes.push("witness and idle actions must differ".to_string());
        }
        let universe = game.action_universe();
        for action in [&self.witness, &self.idle] {
            if universe.contains(action) {
                clashes.push(format!("action `{action}` already exists"));
            }
        }
        if clashes.is_empty() {
            Ok(())
        } else {
            Err(Error::NamesNotFresh {
                reason: clashes.join("; "),
            })
        }
    }
}

/// The hypergraph of prohibited supports: vertices are the game's action
/// universe, edges are the supports of prohibited profiles, and the rank is
/// the agent count. A law is useful exactly when it covers this graph.
pub fn game_to_graph(game: &Game) -> Hypergraph {
    let edges = game.prohibition().iter().map(Profile::support);
    Hypergraph::new(game.agents().len(), game.action_universe(), edges)
        .expect("supports of a well-formed game are valid edges")
}

/// The k-agent game of a rank-k hypergraph: agents "1".."k" all share the
/// vertex set as actions, and each edge becomes one prohibited profile whose
/// support is exactly that edge. Agent i takes the ((i mod |e|) + 1)-th
/// vertex of the edge in lexicographic order, which spreads the edge across
/// the agents and wraps when the edge is smaller than the rank.
pub fn graph_to_game(graph: &Hypergraph) -> Game {
    let agents: Vec<AgentId> = (1..=graph.rank())
        .map(|i| AgentId::new(i.to_string()))
        .collect();
    let actions = agents
        .iter()
        .map(|agent| (agent.clone(), graph.vertices().clone()));
    let prohibition = graph.edges().iter().map(|edge| {
        let items: Vec<&ActionId> = edge.iter().collect();
        agents
            .iter()
            .enumerate()
            .map(|(index, agent)| {
                let i = index + 1;
                (agent.clone(), items[i % items.len()].clone())
            })
            .collect::<Profile>()
    });
    Game::new(agents.iter().cloned(), actions, prohibition)
}

/// Extends a game so that gap-freeness in the extension coincides with
/// usefulness in the original, for every law over the original's actions.
///
/// The extension adds one agent with actions {witness, idle}, gives every
/// original agent the extra idle action, and prohibits: every original
/// prohibited profile with the new agent taking witness; every profile in
/// which exactly one original agent acts while everyone else idles; and the
/// all-idle profile. Idling is then never safe, acting alone is never safe,
/// and the witness action is safe exactly when the law strikes every original
/// prohibited profile.
pub fn useful_to_gapfree_game(game: &Game, names: &FreshNames) -> Result<Game> {
    names.check_fresh_for(game)?;
    let mut agents: BTreeSet<AgentId> = game.agents().clone();
    agents.insert(names.agent.clone());

    let mut actions: BTreeMap<AgentId, BTreeSet<ActionId>> = game
        .actions()
        .iter()
        .map(|(agent, set)| {
            let mut set = set.clone();
            set.insert(names.idle.clone());
            (agent.clone(), set)
        })
        .collect();
    actions.insert(
        names.agent.clone(),
        [names.witness.clone(), names.idle.clone()].into(),
    );

    let mut prohibition: BTreeSet<Profile> = BTreeSet::new();
    for profile in game.prohibition() {
        prohibition.insert(
            profile
                .choices()
                .iter()
                .map(|(a, d)| (a.clone(), d.clone()))
                .chain([(names.agent.clone(), names.witness.clone())])
                .collect(),
        );
    }
    for (actor, available) in game.actions() {
        for action in available {
            prohibition.insert(
                agents
                    .iter()
                    .map(|agent| {
                        let choice = if agent == actor {
                            action.clone()
                        } else {
                            names.idle.clone()
                        };
                        (agent.clone(), choice)
                    })
                    .collect(),
            );
        }
    }
    prohibition.insert(
        agents
            .iter()
            .map(|agent| (agent.clone(), names.idle.clone()))
            .collect(),
    );

    // All three profile families are pairwise distinct, so the prohibition
    // grows by exactly |P| + sum of action-set sizes + 1.
    debug_assert_eq!(
        prohibition.len(),
        game.prohibition().len() + game.actions().values().map(BTreeSet::len).sum::<usize>() + 1
    );

    Ok(Game::new(agents.iter().cloned(), actions, prohibition))
}

/// The per-action cover gadget: vertices are every action except `action`,
/// and each prohibited profile assigning `action` to `agent` contributes its
/// support minus `action` as an edge. A law that avoids `action` keeps it
/// safe for `agent` exactly when the law covers this graph.
///
/// Requires `action` to belong to `agent` and to be safable; otherwise some
/// support would shrink to an empty edge.
pub fn safe_action_graph(game: &Game, agent: &AgentId, action: &ActionId) -> Result<Hypergraph> {
    if !game.has_agent(agent) {
        return Err(Error::UnknownAgent {
            agent: agent.clone(),
        });
    }
    if !game.actions_of(agent).contains(action) {
        return Err(Error::ActionNotAvailable {
            agent: agent.clone(),
            action: action.clone(),
        });
    }
    if !game.is_safable(action) {
        return Err(Error::NotSafable {
            action: action.clone(),
        });
    }
    let mut vertices = game.action_universe();
    vertices.remove(action);
    let edges = game
        .prohibition()
        .iter()
        .filter(|p| p.get(agent) == Some(action))
        .map(|p| {
            let mut support = p.support();
            support.remove(action);
            support
        });
    Ok(Hypergraph::new(game.agents().len(), vertices, edges)
        .expect("supports of a safable action minus itself are valid edges"))
}
