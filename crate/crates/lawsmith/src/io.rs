//! JSON document formats and file IO.
//!
//! Four document shapes, all JSON objects with sorted keys on save:
//!
//! * game: `{"agents": [..], "actions": {agent: [..]}, "prohibited": [{agent: action}, ..]}`
//! * graph: `{"rank": k, "vertices": [..], "edges": [[..], ..]}`
//! * law: `{"banned": [..]}`
//! * profile: `{agent: action, ..}`
//!
//! Saving canonicalizes: keys and list entries are emitted in lexicographic
//! order, so equal values produce byte-identical documents. Loading validates
//! structure and reports every violated invariant.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{ActionId, AgentId, Game, Law, Profile};
use crate::hypergraph::Hypergraph;

// --- documents ---

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    pub agents: Vec<String>,
    pub actions: BTreeMap<String, Vec<String>>,
    pub prohibited: Vec<BTreeMap<String, String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub rank: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LawDocument {
    pub banned: Vec<String>,
}

impl GameDocument {
    pub fn from_game(game: &Game) -> GameDocument {
        GameDocument {
            agents: game.agents().iter().map(|a| a.to_string()).collect(),
            actions: game
                .actions()
                .iter()
                .map(|(agent, set)| {
                    (
                        agent.to_string(),
                        set.iter().map(|d| d.to_string()).collect(),
                    )
                })
                .collect(),
            prohibited: game
                .prohibition()
                .iter()
                .map(|p| {
                    p.choices()
                        .iter()
                        .map(|(a, d)| (a.to_string(), d.to_string()))
                        .collect()
                })
                .collect(),
        }
    }

    /// Builds and validates the game; errors list every violated invariant.
    pub fn into_game(self) -> Result<Game> {
        let game = Game::new(
            self.agents.into_iter().map(AgentId::from),
            self.actions.into_iter().map(|(agent, actions)| {
                (
                    AgentId::from(agent),
                    actions.into_iter().map(ActionId::from).collect(),
                )
            }),
            self.prohibited
                .into_iter()
                .map(|choices| choices.into_iter().collect::<Profile>()),
        );
        let report = game.validate();
        if report.is_valid() {
            Ok(game)
        } else {
            Err(Error::InvalidGame {
                violations: report.violations,
            })
        }
    }
}

impl GraphDocument {
    pub fn from_graph(graph: &Hypergraph) -> GraphDocument {
        GraphDocument {
            rank: graph.rank(),
            vertices: graph.vertices().iter().map(|v| v.to_string()).collect(),
            edges: graph
                .edges()
                .iter()
                .map(|e| e.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }

    pub fn into_graph(self) -> Result<Hypergraph> {
        Hypergraph::new(
            self.rank,
            self.vertices.into_iter().map(ActionId::from),
            self.edges
                .into_iter()
                .map(|e| e.into_iter().map(ActionId::from).collect::<BTreeSet<_>>()),
        )
    }
}

impl LawDocument {
    pub fn from_law(law: &Law) -> LawDocument {
        LawDocument {
            banned: law.iter().map(|d| d.to_string()).collect(),
        }
    }

    pub fn into_law(self) -> Law {
        self.banned.into_iter().collect()
    }
}

pub fn profile_document(profile: &Profile) -> BTreeMap<String, String> {
    profile
        .choices()
        .iter()
        .map(|(a, d)| (a.to_string(), d.to_string()))
        .collect()
}

// --- text round-trips ---

/// Serializes any document with sorted keys and a trailing newline.
/// Documents pass through `serde_json::Value`, whose object maps are ordered,
/// so equal values always produce identical bytes.
pub fn to_canonical_json<T: Serialize>(doc: &T) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize infallibly");
    let mut text = serde_json::to_string_pretty(&value).expect("values render infallibly");
    text.push('\n');
    text
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn game_to_json(game: &Game) -> String {
    to_canonical_json(&GameDocument::from_game(game))
}

pub fn game_from_json(text: &str) -> Result<Game> {
    parse::<GameDocument>(text)?.into_game()
}

pub fn graph_to_json(graph: &Hypergraph) -> String {
    to_canonical_json(&GraphDocument::from_graph(graph))
}

pub fn graph_from_json(text: &str) -> Result<Hypergraph> {
    parse::<GraphDocument>(text)?.into_graph()
}

pub fn law_to_json(law: &Law) -> String {
    to_canonical_json(&LawDocument::from_law(law))
}

pub fn law_from_json(text: &str) -> Result<Law> {
    Ok(parse::<LawDocument>(text)?.into_law())
}

pub fn profile_to_json(profile: &Profile) -> String {
    to_canonical_json(&profile_document(profile))
}

pub fn profile_from_json(text: &str) -> Result<Profile> {
    let choices: BTreeMap<String, String> = parse(text)?;
    Ok(choices.into_iter().collect())
}

// --- file IO ---

pub fn load_game(path: impl AsRef<Path>) -> Result<Game> {
    game_from_json(&std::fs::read_to_string(path)?)
}

pub fn save_game(path: impl AsRef<Path>, game: &Game) -> Result<()> {
    Ok(std::fs::write(path, game_to_json(game))?)
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<Hypergraph> {
    graph_from_json(&std::fs::read_to_string(path)?)
}

pub fn save_graph(path: impl AsRef<Path>, graph: &Hypergraph) -> Result<()> {
    Ok(std::fs::write(path, graph_to_json(graph))?)
}

pub fn load_law(path: impl AsRef<Path>) -> Result<Law> {
    law_from_json(&std::fs::read_to_string(path)?)
}

pub fn load_profile(path: impl AsRef<Path>) -> Result<Profile> {
    profile_from_json(&std::fs::read_to_string(path)?)
}
