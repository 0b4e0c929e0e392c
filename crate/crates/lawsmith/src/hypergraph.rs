//! Rank-k hypergraphs and vertex-cover gadgets.
//!
//! A rank-k hypergraph has edges of between 1 and k vertices. A vertex cover
//! touches every edge. Minimum covers are NP-hard already at rank 2, so the
//! crate pairs an exact oracle (see [`crate::exact`]) with the classic greedy
//! k-approximation implemented here: repeatedly take *all* vertices of the
//! first uncovered edge. Every cover must contain at least one vertex of each
//! edge the greedy selected, and those edges are pairwise disjoint, hence the
//! factor k.
//!
//! Vertices are identified by [`ActionId`]s: in this crate every vertex set
//! ranges over game actions, and laws are exactly vertex sets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::game::ActionId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    rank: usize,
    vertices: BTreeSet<ActionId>,
    edges: BTreeSet<BTreeSet<ActionId>>,
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting rank 0, empty edges, edges larger than
    /// the rank, and edges with vertices outside the vertex set. Duplicate
    /// edges collapse.
    pub fn new(
        rank: usize,
        vertices: impl IntoIterator<Item = ActionId>,
        edges: impl IntoIterator<Item = BTreeSet<ActionId>>,
    ) -> Result<Hypergraph> {
        let vertices: BTreeSet<ActionId> = vertices.into_iter().collect();
        let edges: BTreeSet<BTreeSet<ActionId>> = edges.into_iter().collect();
        let mut violations = Vec::new();
        if rank == 0 {
            violations.push("rank must be at least 1".to_string());
        }
        for edge in &edges {
            if edge.is_empty() {
                violations.push("empty edge".to_string());
            } else if edge.len() > rank {
                violations.push(format!(
                    "edge {{{}}} has {} vertices, above rank {rank}",
                    itertools::join(edge, ", "),
                    edge.len()
                ));
            }
            if !edge.is_subset(&vertices) {
                violations.push(format!(
                    "edge {{{}}} uses vertices outside the vertex set",
                    itertools::join(edge, ", ")
                ));
            }
        }
        if violations.is_empty() {
            Ok(Hypergraph {
                rank,
                vertices,
                edges,
            })
        } else {
            Err(Error::InvalidGraph { violations })
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &BTreeSet<ActionId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<BTreeSet<ActionId>> {
        &self.edges
    }

    /// True when the candidate is a subset of the vertices touching every edge.
    pub fn is_vertex_cover(&self, candidate: &BTreeSet<ActionId>) -> bool {
        candidate.is_subset(&self.vertices) && self.edges.iter().all(|e| !e.is_disjoint(candidate))
    }

    /// True when the candidate is a cover and dropping any single vertex
    /// breaks it. Covers are upward closed, so single removals are enough to
    /// decide minimality.
    pub fn is_minimal_vertex_cover(&self, candidate: &BTreeSet<ActionId>) -> bool {
        if !self.is_vertex_cover(candidate) {
            return false;
        }
        candidate.iter().all(|v| {
            self.edges
                .iter()
                .any(|e| e.contains(v) && e.iter().all(|u| u == v || !candidate.contains(u)))
        })
    }

    /// Greedy k-approximation of a minimum vertex cover: scan edges in
    /// canonical order (size, then lexicographic vertex list) and take every
    /// vertex of each edge still uncovered. The output is at most rank times
    /// larger than a minimum cover.
    pub fn approx_min_vertex_cover(&self) -> BTreeSet<ActionId> {
        let mut order: Vec<&BTreeSet<ActionId>> = self.edges.iter().collect();
        order.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut cover = BTreeSet::new();
        for edge in order {
            if edge.is_disjoint(&cover) {
                cover.extend(edge.iter().cloned());
            }
        }
        cover
    }

    /// The subgraph induced by a cover: vertices shrink to the cover and each
    /// edge shrinks to its intersection with it. Requires a cover, which
    /// keeps every intersected edge nonempty. Minimum covers of the induced
    /// subgraph that lie inside the cover are exactly the minimum covers of
    /// the original graph that lie inside it.
    pub fn induced_subgraph(&self, cover: &BTreeSet<ActionId>) -> Result<Hypergraph> {
        if !self.is_vertex_cover(cover) {
            return Err(Error::NotACover);
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.intersection(cover).cloned().collect::<BTreeSet<_>>());
        Hypergraph::new(self.rank, cover.iter().cloned(), edges)
    }
}
