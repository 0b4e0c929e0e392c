//! Exhaustive minimum-search oracles.
//!
//! Everything here enumerates subsets of a universe in (size, lexicographic)
//! order and returns the first hit, which is the lexicographically least
//! among the minimum-size solutions. The search is exponential by design;
//! [`SearchBudget`] bounds both the universe size it will even attempt and
//! the wall-clock time it may burn. These oracles exist to pin down ground
//! truth for the approximation algorithms, not to be fast.

use std::collections::BTreeSet;
use std::time::Instant;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::game::{ActionId, Game, Law};
use crate::hypergraph::Hypergraph;

/// Limits for the exhaustive searches. `max_universe` refuses instances
/// whose subset lattice is too large to even start; `max_millis` cuts off a
/// search that started but runs long.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_universe: usize,
    pub max_millis: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_universe: 20,
            max_millis: 10_000,
        }
    }
}

impl SearchBudget {
    pub fn with_max_universe(mut self, max_universe: usize) -> Self {
        self.max_universe = max_universe;
        self
    }

    pub fn with_max_millis(mut self, max_millis: u64) -> Self {
        self.max_millis = max_millis;
        self
    }
}

/// The smallest subset of `universe` satisfying `accept`, searching subsets
/// in (size, lexicographic) order. The caller guarantees that the full
/// universe is accepted, so a result always exists.
fn min_subset_satisfying(
    universe: &BTreeSet<ActionId>,
    budget: &SearchBudget,
    mut accept: impl FnMut(&BTreeSet<ActionId>) -> bool,
) -> Result<BTreeSet<ActionId>> {
    if universe.len() > budget.max_universe {
        return Err(Error::BudgetExceeded {
            detail: format!(
                "universe has {} items, above the limit of {}",
                universe.len(),
                budget.max_universe
            ),
        });
    }
    let started = Instant::now();
    let mut tested: u64 = 0;
    let items: Vec<&ActionId> = universe.iter().collect();
    for size in 0..=items.len() {
        for combo in items.iter().combinations(size) {
            tested += 1;
            if tested.is_multiple_of(1024)
                && started.elapsed().as_millis() as u64 > budget.max_millis
            {
                return Err(Error::BudgetExceeded {
                    detail: format!(
                        "wall clock passed {} ms after {} candidates",
                        budget.max_millis, tested
                    ),
                });
            }
            let candidate: BTreeSet<ActionId> = combo.into_iter().map(|id| (*id).clone()).collect();
            if accept(&candidate) {
                return Ok(candidate);
            }
        }
    }
    unreachable!("the full universe satisfies the property");
}

/// A minimum vertex cover, lexicographically least among those of minimum
/// size.
pub fn exact_min_vertex_cover(
    graph: &Hypergraph,
    budget: &SearchBudget,
) -> Result<BTreeSet<ActionId>> {
    min_subset_satisfying(graph.vertices(), budget, |c| graph.is_vertex_cover(c))
}

/// A minimum-size useful subset of a useful law, decided against the
/// definitional check rather than the cover route.
pub fn exact_min_useful_reduction(game: &Game, law: &Law, budget: &SearchBudget) -> Result<Law> {
    law.check_within(game)?;
    if !game.is_useful_direct(law)? {
        return Err(Error::NotUseful);
    }
    let minimum = min_subset_satisfying(law.banned(), budget, |subset| {
        game.is_useful_direct(&subset.clone().into())
            .expect("subsets of a valid law stay within the universe")
    })?;
    Ok(minimum.into())
}

/// A minimum-size gap-free subset of a gap-free law, decided against the
/// definitional check rather than the cover route.
pub fn exact_min_gap_free_reduction(game: &Game, law: &Law, budget: &SearchBudget) -> Result<Law> {
    law.check_within(game)?;
    if !game.is_gap_free_direct(law)? {
        return Err(Error::NotGapFree);
    }
    let minimum = min_subset_satisfying(law.banned(), budget, |subset| {
        game.is_gap_free_direct(&subset.clone().into())
            .expect("subsets of a valid law stay within the universe")
    })?;
    Ok(minimum.into())
}
