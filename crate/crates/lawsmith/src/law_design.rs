//! Law synthesis and verification through the cover correspondence.
//!
//! Three problems, each in a verify / verify-minimal / reduce flavor:
//!
//! * **Useful laws** kill every prohibited profile. Usefulness is vertex
//!   cover on the prohibited-support graph, so all three flavors delegate to
//!   the cover gadgets directly.
//! * **Gap-free laws** guarantee a responsible agent for every prohibited
//!   profile. A law is gap-free when it is useful, or when some action it
//!   spares is kept safe, which is again a cover condition on the per-action
//!   graphs of [`crate::reductions::safe_action_graph`].
//! * **Reductions** shrink a law while preserving the property, within a
//!   factor |A| of the smallest possible subset (the greedy cover bound).
//!
//! The `*_direct` methods on [`Game`] decide the same properties straight
//! from the definitions; the acceptance suite holds the two routes equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::game::{ActionId, AgentId, Game, Law};
use crate::hypergraph::Hypergraph;
use crate::reductions::{game_to_graph, safe_action_graph};

/// Which branch of the gap-free reduction produced the output law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionWitness {
    /// The output covers the prohibited-support graph, so it is useful.
    UsefulCover,
    /// The output keeps `action` (already unbanned) safe for `agent`.
    KeptSafeAction { agent: AgentId, action: ActionId },
    /// The output unbans `action`, which becomes safe for `agent`.
    NewSafeAction { agent: AgentId, action: ActionId },
}

impl fmt::Display for ReductionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionWitness::UsefulCover => write!(f, "useful-cover"),
            ReductionWitness::KeptSafeAction { agent, action } => {
                write!(f, "kept-safe-action({agent}, {action})")
            }
            ReductionWitness::NewSafeAction { agent, action } => {
                write!(f, "new-safe-action({agent}, {action})")
            }
        }
    }
}

/// A reduced law plus the branch that produced it. `witness` is `None` when
/// no candidate beat the input law, which is then returned unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub law: Law,
    pub witness: Option<ReductionWitness>,
}

/// True when the law strikes every prohibited profile, decided as a vertex
/// cover of the prohibited-support graph.
pub fn is_useful_law(game: &Game, law: &Law) -> Result<bool> {
    law.check_within(game)?;
    Ok(game_to_graph(game).is_vertex_cover(law.banned()))
}

/// True when the law is useful and no proper subset is, decided as cover
/// minimality on the prohibited-support graph.
pub fn is_minimal_useful_law(game: &Game, law: &Law) -> Result<bool> {
    law.check_within(game)?;
    Ok(game_to_graph(game).is_minimal_vertex_cover(law.banned()))
}

/// Shrinks a useful law to a useful subset at most |A| times larger than the
/// smallest one, by running the greedy cover approximation on the subgraph
/// the law induces.
pub fn approx_min_useful_reduction(game: &Game, law: &Law) -> Result<ReductionResult> {
    law.check_within(game)?;
    let graph = game_to_graph(game);
    if !graph.is_vertex_cover(law.banned()) {
        return Err(Error::NotUseful);
    }
    let induced = graph
        .induced_subgraph(law.banned())
        .expect("a useful law covers the prohibited-support graph");
    Ok(ReductionResult {
        law: induced.approx_min_vertex_cover().into(),
        witness: Some(ReductionWitness::UsefulCover),
    })
}

/// The safable (agent, action) pairs of the game in lexicographic order,
/// each with its safe-action cover gadget.
fn safable_gadgets(game: &Game) -> Vec<(AgentId, ActionId, Hypergraph)> {
    let mut gadgets = Vec::new();
    for agent in game.agents() {
        for action in game.actions_of(agent) {
            if game.is_safable(action) {
                let graph = safe_action_graph(game, agent, action)
                    .expect("safable actions admit a safe-action graph");
                gadgets.push((agent.clone(), action.clone(), graph));
            }
        }
    }
    gadgets
}

/// True when the law leaves no responsibility gap: it is useful, or it covers
/// the safe-action graph of some action it spares (that action is then a safe
/// lawful alternative for its agent, making everyone counterfactually
/// accountable on surviving profiles).
pub fn is_gap_free_law(game: &Game, law: &Law) -> Result<bool> {
    law.check_within(game)?;
    if game_to_graph(game).is_vertex_cover(law.banned()) {
        return Ok(true);
    }
    for (_, action, graph) in safable_gadgets(game) {
        if !law.contains(&action) && graph.is_vertex_cover(law.banned()) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True when the law is gap-free and no proper subset is. Gap-free laws shed
/// actions one at a time without losing gap-freeness, so minimality reduces
/// to three cover-minimality conditions: a useful law must be a minimal
/// cover of the main graph; a law keeping a spared action safe must be a
/// minimal cover of that action's graph; and unbanning any banned safable
/// action must not leave a cover of its graph behind.
pub fn is_minimal_gap_free_law(game: &Game, law: &Law) -> Result<bool> {
    law.check_within(game)?;
    if !is_gap_free_law(game, law)? {
        return Ok(false);
    }
    let main = game_to_graph(game);
    if main.is_vertex_cover(law.banned()) && !main.is_minimal_vertex_cover(law.banned()) {
        return Ok(false);
    }
    for (_, action, graph) in safable_gadgets(game) {
        if !law.contains(&action) {
            if graph.is_vertex_cover(law.banned()) && !graph.is_minimal_vertex_cover(law.banned()) {
                return Ok(false);
            }
        } else if graph.is_vertex_cover(law.without(&action).banned()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shrinks a gap-free law to a gap-free subset at most |A| times larger than
/// the smallest one.
///
/// Candidates come from three sources: the greedy cover of the subgraph the
/// law induces on the main graph (a useful subset); for each spared safable
/// action whose graph the law covers, the greedy cover of the induced
/// subgraph (keeps that action safe); and for each banned safable action
/// whose graph the law-minus-it covers, the greedy cover likewise (unbans the
/// action and keeps it safe). The smallest candidate wins; ties keep the
/// earlier one, with the input law itself as the starting incumbent.
pub fn approx_min_gap_free_reduction(game: &Game, law: &Law) -> Result<ReductionResult> {
    law.check_within(game)?;
    if !is_gap_free_law(game, law)? {
        return Err(Error::NotGapFree);
    }

    let mut best = ReductionResult {
        law: law.clone(),
        witness: None,
    };
    let mut offer = |candidate: Law, witness: ReductionWitness| {
        if candidate.len() < best.law.len() {
            best = ReductionResult {
                law: candidate,
                witness: Some(witness),
            };
        }
    };

    let main = game_to_graph(game);
    if main.is_vertex_cover(law.banned()) {
        let induced = main
            .induced_subgraph(law.banned())
            .expect("cover already checked");
        offer(
            induced.approx_min_vertex_cover().into(),
            ReductionWitness::UsefulCover,
        );
    }

    let gadgets = safable_gadgets(game);
    for (agent, action, graph) in &gadgets {
        if !law.contains(action) && graph.is_vertex_cover(law.banned()) {
            let induced = graph
                .induced_subgraph(law.banned())
                .expect("cover already checked");
            offer(
                induced.approx_min_vertex_cover().into(),
                ReductionWitness::KeptSafeAction {
                    agent: agent.clone(),
                    action: action.clone(),
                },
            );
        }
    }
    for (agent, action, graph) in &gadgets {
        if law.contains(action) {
            let spared = law.without(action);
            if graph.is_vertex_cover(spared.banned()) {
                let induced = graph
                    .induced_subgraph(spared.banned())
                    .expect("cover already checked");
                offer(
                    induced.approx_min_vertex_cover().into(),
                    ReductionWitness::NewSafeAction {
                        agent: agent.clone(),
                        action: action.clone(),
                    },
                );
            }
        }
    }

    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn factory() -> Game {
        crate::game::tests::factory()
    }

    fn pennies() -> Game {
        crate::game::tests::pennies()
    }

    fn law(names: &[&str]) -> Law {
        names.iter().copied().collect()
    }

    fn l0() -> Law {
        law(&["d_a^1", "d_a^2", "d_b^2", "d_b^3", "d_c^1", "d_c^3"])
    }

    fn l1() -> Law {
        law(&["d_a^1", "d_b^2", "d_c^3"])
    }

    #[test]
    fn usefulness_via_covers() {
        let game = factory();
        assert!(is_useful_law(&game, &l0()).unwrap());
        assert!(is_useful_law(&game, &l1()).unwrap());
        assert!(!is_useful_law(&game, &law(&["d_a^1", "d_b^2"])).unwrap());
        assert!(!is_useful_law(&game, &Law::empty()).unwrap());

        let game = pennies();
        assert!(is_useful_law(&game, &law(&["head", "tail"])).unwrap());
        assert!(!is_useful_law(&game, &law(&["head"])).unwrap());
    }

    #[test]
    fn out_of_universe_laws_error_everywhere() {
        let game = factory();
        let bad = law(&["nope"]);
        assert!(matches!(
            is_useful_law(&game, &bad),
            Err(Error::LawOutOfUniverse { .. })
        ));
        assert!(matches!(
            is_minimal_useful_law(&game, &bad),
            Err(Error::LawOutOfUniverse { .. })
        ));
        assert!(matches!(
            approx_min_useful_reduction(&game, &bad),
            Err(Error::LawOutOfUniverse { .. })
        ));
        assert!(matches!(
            is_gap_free_law(&game, &bad),
            Err(Error::LawOutOfUniverse { .. })
        ));
        assert!(matches!(
            is_minimal_gap_free_law(&game, &bad),
            Err(Error::LawOutOfUniverse { .. })
        ));
        assert!(matches!(
            approx_min_gap_free_reduction(&game, &bad),
            Err(Error::LawOutOfUniverse { .. })
        ));
    }

    #[test]
    fn minimal_usefulness() {
        let game = factory();
        assert!(is_minimal_useful_law(&game, &l1()).unwrap());
        assert!(!is_minimal_useful_law(&game, &l0()).unwrap());
        // Not useful at all, hence not minimal-useful.
        assert!(!is_minimal_useful_law(&game, &law(&["d_a^1"])).unwrap());

        assert!(is_minimal_useful_law(&pennies(), &law(&["head", "tail"])).unwrap());
    }

    #[test]
    fn useful_reduction_of_l0_keeps_all_disjoint_day_pairs() {
        let game = factory();
        let result = approx_min_useful_reduction(&game, &l0()).unwrap();
        assert!(is_useful_law(&game, &result.law).unwrap());
        assert!(result.law.banned().is_subset(l0().banned()));
        assert_eq!(result.witness, Some(ReductionWitness::UsefulCover));
        // The induced day edges are pairwise disjoint, so the greedy takes
        // every vertex of L0; the exact minimum (3) is checked in the
        // integration suites.
        assert_eq!(result.law, l0());
    }

    #[test]
    fn useful_reduction_requires_useful_input() {
        let err = approx_min_useful_reduction(&factory(), &law(&["d_a^1"])).unwrap_err();
        assert!(matches!(err, Error::NotUseful));
    }

    #[test]
    fn gap_freeness_via_covers() {
        let game = factory();
        assert!(is_gap_free_law(&game, &l1()).unwrap());
        assert!(is_gap_free_law(&game, &law(&["d_a^1", "d_b^2"])).unwrap());
        assert!(is_gap_free_law(&game, &law(&["d_a^1"])).unwrap());
        assert!(!is_gap_free_law(&game, &Law::empty()).unwrap());

        // Nothing is safable in pennies, so gap-free collapses to useful.
        let game = pennies();
        assert!(is_gap_free_law(&game, &law(&["head", "tail"])).unwrap());
        assert!(!is_gap_free_law(&game, &law(&["head"])).unwrap());
        assert!(!is_gap_free_law(&game, &Law::empty()).unwrap());
    }

    #[test]
    fn minimal_gap_freeness() {
        let game = factory();
        assert!(is_minimal_gap_free_law(&game, &law(&["d_a^1"])).unwrap());
        // L2 keeps d_a^2 safe but is not a minimal cover of its graph.
        assert!(!is_minimal_gap_free_law(&game, &law(&["d_a^1", "d_b^2"])).unwrap());
        assert!(!is_minimal_gap_free_law(&game, &l1()).unwrap());
        assert!(!is_minimal_gap_free_law(&game, &Law::empty()).unwrap());
        // The empty law is minimal gap-free when the prohibition is empty.
        let trivial = Game::new(
            [crate::game::AgentId::from("solo")],
            [(
                crate::game::AgentId::from("solo"),
                BTreeSet::from(["x".into()]),
            )],
            [],
        );
        assert!(is_minimal_gap_free_law(&trivial, &Law::empty()).unwrap());
    }

    #[test]
    fn gap_free_reduction_of_l1_keeps_one_safe_action() {
        let game = factory();
        let result = approx_min_gap_free_reduction(&game, &l1()).unwrap();
        assert_eq!(result.law, law(&["d_b^2"]));
        assert_eq!(
            result.witness,
            Some(ReductionWitness::KeptSafeAction {
                agent: "a".into(),
                action: "d_a^2".into(),
            })
        );
        assert!(crate::game::tests::factory()
            .is_gap_free_direct(&result.law)
            .unwrap());
    }

    #[test]
    fn gap_free_reduction_keeps_already_minimal_input() {
        let game = factory();
        let l3 = law(&["d_a^1"]);
        let result = approx_min_gap_free_reduction(&game, &l3).unwrap();
        assert_eq!(result.law, l3);
        assert_eq!(result.witness, None);
    }

    #[test]
    fn gap_free_reduction_requires_gap_free_input() {
        let err = approx_min_gap_free_reduction(&factory(), &Law::empty()).unwrap_err();
        assert!(matches!(err, Error::NotGapFree));
    }

    #[test]
    fn witness_labels() {
        assert_eq!(ReductionWitness::UsefulCover.to_string(), "useful-cover");
        assert_eq!(
            ReductionWitness::KeptSafeAction {
                agent: "a".into(),
                action: "d".into(),
            }
            .to_string(),
            "kept-safe-action(a, d)"
        );
        assert_eq!(
            ReductionWitness::NewSafeAction {
                agent: "a".into(),
                action: "d".into(),
            }
            .to_string(),
            "new-safe-action(a, d)"
        );
    }
}
