//! Independent computation of weighted degrees and the irregularity
//! predicate. Everything else in the crate is tested against this module,
//! so it recomputes weights from edge labels alone and shares no
//! bookkeeping with the walk engine.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::group::{GroupElement, GroupSpec};
use crate::walk::EdgeLabeling;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("labeling is bound to group {bound}, expected {expected}")]
    SpecMismatch { bound: String, expected: String },
}

/// Weighted degree of every vertex, including isolated ones (weight 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    weights: Vec<GroupElement>,
}

impl WeightTable {
    pub fn weight(&self, v: u32) -> &GroupElement {
        &self.weights[v as usize]
    }

    pub fn weights(&self) -> &[GroupElement] {
        &self.weights
    }
}

/// Two vertices sharing a weighted degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub u: u32,
    pub v: u32,
    pub weight: GroupElement,
}

impl fmt::Display for Collision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices {},{} weight {}", self.u, self.v, self.weight)
    }
}

fn check_spec(lab: &EdgeLabeling, spec: &GroupSpec) -> Result<(), VerifyError> {
    if lab.spec() != spec {
        return Err(VerifyError::SpecMismatch {
            bound: lab.spec().to_string(),
            expected: spec.to_string(),
        });
    }
    Ok(())
}

/// `w(v)`: the group sum of the labels of all edges incident to `v`.
pub fn weights(g: &Graph, lab: &EdgeLabeling, spec: &GroupSpec) -> Result<WeightTable, VerifyError> {
    check_spec(lab, spec)?;
    let mut weights = vec![spec.zero(); g.vertex_count()];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let label = lab.label(id);
        weights[u as usize] = spec.add(&weights[u as usize], label);
        weights[v as usize] = spec.add(&weights[v as usize], label);
    }
    Ok(WeightTable { weights })
}

/// `None` when all weighted degrees are pairwise distinct; otherwise the
/// collision with the smallest second vertex (and its earliest partner).
pub fn is_irregular(
    g: &Graph,
    lab: &EdgeLabeling,
    spec: &GroupSpec,
) -> Result<Option<Collision>, VerifyError> {
    let table = weights(g, lab, spec)?;
    let mut first_seen: Vec<Option<u32>> = vec![None; spec.order() as usize];
    for (v, w) in table.weights.iter().enumerate() {
        let key = spec.rank(w) as usize;
        match first_seen[key] {
            Some(u) => {
                return Ok(Some(Collision {
                    u,
                    v: v as u32,
                    weight: w.clone(),
                }))
            }
            None => first_seen[key] = Some(v as u32),
        }
    }
    Ok(None)
}
