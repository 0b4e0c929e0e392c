//! One-shot concurrent games, laws, and responsibility attribution.
//!
//! A game is a finite set of agents, a finite action set per agent (action
//! sets may overlap across agents and may be empty), and a prohibition: the
//! set of joint action profiles that must never be played. A law bans
//! individual actions outright, for every agent that has them; imposing a law
//! shrinks each action set and drops every prohibited profile that uses a
//! banned action. A law is *useful* when no prohibited profile survives it.
//!
//! Responsibility attribution asks, for a prohibited profile that was played
//! anyway, which agents can be blamed: an agent is *legally* responsible when
//! its own choice was banned, and *counterfactually* responsible when nobody
//! broke the law but the agent had a safe lawful alternative it declined to
//! take. A law is *gap-free* when every prohibited profile leaves at least
//! one agent responsible.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

// --- identifiers ---

/// Opaque identifier for an agent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AgentId(String);

/// Opaque identifier for an action. Actions are compared by exact string
/// equality; the same action may belong to several agents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ActionId(String);

macro_rules! string_id {
    ($t:ty) => {
        impl $t {
            pub fn new(name: impl Into<String>) -> Self {
                Self(name.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $t {
            fn from(name: &str) -> Self {
                Self(name.to_owned())
            }
        }

        impl From<String> for $t {
            fn from(name: String) -> Self {
                Self(name)
            }
        }
    };
}

string_id!(AgentId);
string_id!(ActionId);

// --- profiles ---

/// A joint action profile: one chosen action per agent.
///
/// A profile is *total* for a game when its domain equals the game's agent
/// set; only total profiles are meaningful as prohibition entries.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Profile(BTreeMap<AgentId, ActionId>);

impl Profile {
    pub fn get(&self, agent: &AgentId) -> Option<&ActionId> {
        self.0.get(agent)
    }

    pub fn choices(&self) -> &BTreeMap<AgentId, ActionId> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The set of actions the profile uses, forgetting who chose them.
    /// For a total profile of a game with n agents this has between 1 and n
    /// items (agents may pick the same action).
    pub fn support(&self) -> BTreeSet<ActionId> {
        self.0.values().cloned().collect()
    }

    /// True when at least one choice in the profile is banned by `law`.
    /// Equivalently: the support intersects the banned set.
    pub fn is_struck_by(&self, law: &Law) -> bool {
        self.0.values().any(|d| law.contains(d))
    }
}

impl<K: Into<AgentId>, V: Into<ActionId>> FromIterator<(K, V)> for Profile {
    fn from_iter<I: IntoIterator<Item = (K, V)>>(iter: I) -> Self {
        Profile(
            iter.into_iter()
                .map(|(a, d)| (a.into(), d.into()))
                .collect(),
        )
    }
}

/// The set of actions a profile uses, forgetting who chose them.
pub fn support_set(profile: &Profile) -> BTreeSet<ActionId> {
    profile.support()
}

// --- laws ---

/// A law: a set of banned actions. Bans are agent-independent; imposing a law
/// removes each banned action from every agent that has it.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Law(BTreeSet<ActionId>);

impl Law {
    pub fn empty() -> Self {
        Law::default()
    }

    pub fn banned(&self) -> &BTreeSet<ActionId> {
        &self.0
    }

    pub fn contains(&self, action: &ActionId) -> bool {
        self.0.contains(action)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ActionId> {
        self.0.iter()
    }

    /// The same law with one action unbanned.
    pub fn without(&self, action: &ActionId) -> Law {
        let mut banned = self.0.clone();
        banned.remove(action);
        Law(banned)
    }

    /// Errors unless every banned action exists in the game's action universe.
    pub fn check_within(&self, game: &Game) -> Result<()> {
        let universe = game.action_universe();
        let outside: BTreeSet<ActionId> = self
            .0
            .iter()
            .filter(|d| !universe.contains(*d))
            .cloned()
            .collect();
        if outside.is_empty() {
            Ok(())
        } else {
            Err(Error::LawOutOfUniverse { outside })
        }
    }

    /// Report-style validation of the law against a game. Banning an action
    /// outside the universe is a violation. Banning every action of some
    /// agent is accepted but worth flagging, so it is reported as a warning.
    pub fn validate_in(&self, game: &Game) -> ValidationReport {
        let mut report = ValidationReport::default();
        let universe = game.action_universe();
        let outside: Vec<String> = self
            .0
            .iter()
            .filter(|d| !universe.contains(*d))
            .map(|d| d.to_string())
            .collect();
        if !outside.is_empty() {
            report.violations.push(format!(
                "banned actions outside the universe: {}",
                outside.join(", ")
            ));
        }
        for agent in game.agents() {
            let actions = game.actions_of(agent);
            if !actions.is_empty() && actions.iter().all(|d| self.contains(d)) {
                report
                    .warnings
                    .push(format!("law bans every action of agent `{agent}`"));
            }
        }
        report
    }
}

impl<V: Into<ActionId>> FromIterator<V> for Law {
    fn from_iter<I: IntoIterator<Item = V>>(iter: I) -> Self {
        Law(iter.into_iter().map(Into::into).collect())
    }
}

impl From<BTreeSet<ActionId>> for Law {
    fn from(banned: BTreeSet<ActionId>) -> Self {
        Law(banned)
    }
}

// --- validation ---

/// Outcome of report-style validation: every violated invariant, plus
/// warnings for accepted-but-suspicious inputs. An empty violation list
/// means the value is well-formed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

// --- responsibility ---

/// How a single agent relates to a played prohibited profile under a law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Responsibility {
    /// The agent's own choice was banned.
    Legal,
    /// Nobody's choice was banned, and the agent had a safe action available
    /// in the law-imposed game it chose not to take.
    Counterfactual,
    /// Not responsible.
    None,
}

impl Responsibility {
    pub fn is_responsible(self) -> bool {
        !matches!(self, Responsibility::None)
    }

    pub fn label(self) -> &'static str {
        match self {
            Responsibility::Legal => "legal",
            Responsibility::Counterfactual => "counterfactual",
            Responsibility::None => "none",
        }
    }
}

/// Per-agent responsibility for one prohibited profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResponsibilityVerdict {
    verdicts: BTreeMap<AgentId, Responsibility>,
}

impl ResponsibilityVerdict {
    pub fn get(&self, agent: &AgentId) -> Option<Responsibility> {
        self.verdicts.get(agent).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AgentId, Responsibility)> {
        self.verdicts.iter().map(|(a, r)| (a, *r))
    }

    /// Agents held responsible in either mode.
    pub fn responsible_agents(&self) -> BTreeSet<AgentId> {
        self.verdicts
            .iter()
            .filter(|(_, r)| r.is_responsible())
            .map(|(a, _)| a.clone())
            .collect()
    }

    pub fn has_responsible_agent(&self) -> bool {
        self.verdicts.values().any(|r| r.is_responsible())
    }
}

// --- games ---

/// A one-shot concurrent game: agents, an action set per agent, and the
/// prohibited joint profiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    agents: BTreeSet<AgentId>,
    actions: BTreeMap<AgentId, BTreeSet<ActionId>>,
    prohibition: BTreeSet<Profile>,
}

static NO_ACTIONS: BTreeSet<ActionId> = BTreeSet::new();

impl Game {
    /// Assembles a game without validating it; see [`Game::validate`].
    pub fn new(
        agents: impl IntoIterator<Item = AgentId>,
        actions: impl IntoIterator<Item = (AgentId, BTreeSet<ActionId>)>,
        prohibition: impl IntoIterator<Item = Profile>,
    ) -> Game {
        Game {
            agents: agents.into_iter().collect(),
            actions: actions.into_iter().collect(),
            prohibition: prohibition.into_iter().collect(),
        }
    }

    pub fn agents(&self) -> &BTreeSet<AgentId> {
        &self.agents
    }

    pub fn actions(&self) -> &BTreeMap<AgentId, BTreeSet<ActionId>> {
        &self.actions
    }

    /// The agent's action set; empty for agents missing from the action map.
    pub fn actions_of(&self, agent: &AgentId) -> &BTreeSet<ActionId> {
        self.actions.get(agent).unwrap_or(&NO_ACTIONS)
    }

    pub fn prohibition(&self) -> &BTreeSet<Profile> {
        &self.prohibition
    }

    /// The union of all agents' action sets.
    pub fn action_universe(&self) -> BTreeSet<ActionId> {
        self.actions.values().flatten().cloned().collect()
    }

    pub fn has_agent(&self, agent: &AgentId) -> bool {
        self.agents.contains(agent)
    }

    /// Report-style structural validation. Lists every violated invariant;
    /// an empty violation list means the game is well-formed.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.agents.is_empty() {
            report.violations.push("agent set is empty".into());
        }
        for agent in &self.agents {
            if agent.as_str().is_empty() {
                report.violations.push("empty agent identifier".into());
            }
        }
        for agent in self.actions.keys() {
            if !self.agents.contains(agent) {
                report
                    .violations
                    .push(format!("action set for unknown agent `{agent}`"));
            }
        }
        for agent in &self.agents {
            if !self.actions.contains_key(agent) {
                report
                    .violations
                    .push(format!("agent `{agent}` has no action set entry"));
            }
        }
        for actions in self.actions.values() {
            for action in actions {
                if action.as_str().is_empty() {
                    report.violations.push("empty action identifier".into());
                }
            }
        }
        for (i, profile) in self.prohibition.iter().enumerate() {
            let domain: BTreeSet<&AgentId> = profile.choices().keys().collect();
            let agents: BTreeSet<&AgentId> = self.agents.iter().collect();
            if domain != agents {
                report.violations.push(format!(
                    "prohibited profile #{i} does not assign exactly the game's agents"
                ));
                continue;
            }
            for (agent, action) in profile.choices() {
                if !self.actions_of(agent).contains(action) {
                    report.violations.push(format!(
                        "prohibited profile #{i} assigns `{action}` to `{agent}`, \
                         which is not in that agent's action set"
                    ));
                }
            }
        }
        report
    }

    /// The law-imposed game: banned actions disappear from every action set,
    /// and prohibited profiles that use a banned action disappear with them.
    pub fn impose(&self, law: &Law) -> Result<Game> {
        law.check_within(self)?;
        let actions: BTreeMap<AgentId, BTreeSet<ActionId>> = self
            .actions
            .iter()
            .map(|(agent, set)| {
                let kept: BTreeSet<ActionId> =
                    set.iter().filter(|d| !law.contains(d)).cloned().collect();
                (agent.clone(), kept)
            })
            .collect();
        let prohibition: BTreeSet<Profile> = self
            .prohibition
            .iter()
            .filter(|p| !p.is_struck_by(law))
            .cloned()
            .collect();
        Ok(Game {
            agents: self.agents.clone(),
            actions,
            prohibition,
        })
    }

    /// True when the law leaves no prohibited profile playable, i.e. the
    /// law-imposed game has an empty prohibition. Equivalently, every
    /// prohibited profile uses at least one banned action.
    pub fn is_useful_direct(&self, law: &Law) -> Result<bool> {
        law.check_within(self)?;
        Ok(self.prohibition.iter().all(|p| p.is_struck_by(law)))
    }

    /// True when `action` belongs to `agent` and no prohibited profile
    /// assigns it to `agent`: playing it can never complete a prohibited
    /// profile, whatever everyone else does.
    pub fn is_safe_action(&self, agent: &AgentId, action: &ActionId) -> Result<bool> {
        if !self.agents.contains(agent) {
            return Err(Error::UnknownAgent {
                agent: agent.clone(),
            });
        }
        if !self.actions_of(agent).contains(action) {
            return Ok(false);
        }
        Ok(self
            .prohibition
            .iter()
            .all(|p| p.get(agent) != Some(action)))
    }

    /// Agents that have at least one safe action in this game.
    pub fn agents_with_safe_action(&self) -> BTreeSet<AgentId> {
        self.agents
            .iter()
            .filter(|agent| {
                self.actions_of(agent)
                    .iter()
                    .any(|d| self.prohibition.iter().all(|p| p.get(agent) != Some(d)))
            })
            .cloned()
            .collect()
    }

    /// True when some ban-based law can make `action` safe for an agent that
    /// has it: the action exists and no prohibited profile has it as its
    /// entire support. Actions outside the universe are simply not safable.
    pub fn is_safable(&self, action: &ActionId) -> bool {
        if !self.action_universe().contains(action) {
            return false;
        }
        self.prohibition
            .iter()
            .all(|p| p.choices().is_empty() || !p.choices().values().all(|d| d == action))
    }

    /// Who is responsible for `profile` having been played under `law`?
    ///
    /// An agent is legally responsible when its own choice is banned. When
    /// nobody's choice is banned, an agent is counterfactually responsible
    /// when it had a safe action in the law-imposed game. The two modes are
    /// mutually exclusive by construction.
    pub fn attribute_responsibility(
        &self,
        law: &Law,
        profile: &Profile,
    ) -> Result<ResponsibilityVerdict> {
        law.check_within(self)?;
        if !self.prohibition.contains(profile) {
            return Err(Error::NotProhibited);
        }
        let struck = profile.is_struck_by(law);
        // The safe-agent set depends only on the law, not on the profile.
        let safe_agents = if struck {
            BTreeSet::new()
        } else {
            self.impose(law)?.agents_with_safe_action()
        };
        let verdicts = self
            .agents
            .iter()
            .map(|agent| {
                let choice = profile.get(agent);
                let verdict = if choice.is_some_and(|d| law.contains(d)) {
                    Responsibility::Legal
                } else if !struck && safe_agents.contains(agent) {
                    Responsibility::Counterfactual
                } else {
                    Responsibility::None
                };
                (agent.clone(), verdict)
            })
            .collect();
        Ok(ResponsibilityVerdict { verdicts })
    }

    /// True when every prohibited profile leaves at least one agent
    /// responsible under `law`, per [`Game::attribute_responsibility`].
    pub fn is_gap_free_direct(&self, law: &Law) -> Result<bool> {
        law.check_within(self)?;
        // Whether any agent has a safe lawful alternative does not depend on
        // the profile, so compute it once.
        let any_safe = !self.impose(law)?.agents_with_safe_action().is_empty();
        Ok(self
            .prohibition
            .iter()
            .all(|p| p.is_struck_by(law) || any_safe))
    }
}
