//! Shortest walks of prescribed parity and the two labeling increments
//! built on them.
//!
//! Parity here always means EDGE-count parity. A walk with an odd number
//! of edges raises the weighted degree of both endpoints by the applied
//! element; a walk with an even number of edges transfers weight from one
//! endpoint to the other. Interior contributions cancel in both cases.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;
use crate::group::{GroupElement, GroupSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("no {parity:?}-edge-count walk from {from} to {to}")]
    NoWalk {
        from: u32,
        to: u32,
        parity: EdgeParity,
    },
    #[error("weight transfer between a vertex and itself is a no-op")]
    SameVertex(u32),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeParity {
    Odd,
    Even,
}

/// A walk as its vertex sequence; may repeat vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    vertices: Vec<u32>,
}

impl Walk {
    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// Minimum-edge-count walk from `from` to `to` with the requested parity.
///
/// Breadth-first search on the graph layered with a 2-state parity track;
/// neighbor expansion in ascending vertex order makes the result
/// deterministic. Returns `None` when no such walk exists (different
/// components, or a bipartite component forbidding the parity).
pub fn shortest_walk(g: &Graph, from: u32, to: u32, parity: EdgeParity) -> Option<Walk> {
    let n = g.vertex_count();
    assert!((from as usize) < n, "vertex {from} out of range");
    assert!((to as usize) < n, "vertex {to} out of range");
    let want = match parity {
        EdgeParity::Odd => 1usize,
        EdgeParity::Even => 0usize,
    };
    let state = |v: u32, p: usize| (v as usize) * 2 + p;
    if from == to && want == 0 {
        return Some(Walk {
            vertices: vec![from],
        });
    }
    let mut parent = vec![u32::MAX; 2 * n];
    let mut visited = vec![false; 2 * n];
    let mut queue = VecDeque::new();
    visited[state(from, 0)] = true;
    queue.push_back((from, 0usize));
    while let Some((v, p)) = queue.pop_front() {
        for &w in g.neighbors(v) {
            let q = 1 - p;
            let sw = state(w, q);
            if visited[sw] {
                continue;
            }
            visited[sw] = true;
            parent[sw] = state(v, p) as u32;
            if w == to && q == want {
                let mut rev = vec![w];
                let mut cur = sw;
                while parent[cur] != u32::MAX {
                    cur = parent[cur] as usize;
                    rev.push((cur / 2) as u32);
                }
                rev.reverse();
                return Some(Walk { vertices: rev });
            }
            queue.push_back((w, q));
        }
    }
    None
}

/// Edge labels over a group, indexed by edge id; unassigned edges are 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    spec: GroupSpec,
    labels: Vec<GroupElement>,
}

impl EdgeLabeling {
    pub fn zero(g: &Graph, spec: &GroupSpec) -> EdgeLabeling {
        EdgeLabeling {
            spec: spec.clone(),
            labels: vec![spec.zero(); g.edge_count()],
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn labels(&self) -> &[GroupElement] {
        &self.labels
    }

    pub fn label(&self, edge_id: usize) -> &GroupElement {
        &self.labels[edge_id]
    }

    pub fn set_label(&mut self, edge_id: usize, value: GroupElement) {
        self.labels[edge_id] = value;
    }

    /// Adds `a` to every edge at odd position along the walk (counted from
    /// its start) and `-a` at even positions. Increments accumulate; an
    /// edge traversed twice is modified twice.
    pub fn apply_walk(&mut self, g: &Graph, walk: &Walk, a: &GroupElement) {
        let neg = self.spec.neg(a);
        for (j, pair) in walk.vertices().windows(2).enumerate() {
            let id = g
                .edge_id(pair[0], pair[1])
                .expect("walk steps along graph edges");
            let delta = if j % 2 == 0 { a } else { &neg };
            self.labels[id] = self.spec.add(&self.labels[id], delta);
        }
    }
}

/// Adds `a` to the weighted degree of both `x1` and `x2` (2a when they
/// coincide) by incrementing along a shortest odd-edge-count walk.
pub fn add_weight_both(
    lab: &mut EdgeLabeling,
    g: &Graph,
    x1: u32,
    x2: u32,
    a: &GroupElement,
) -> Result<(), WalkError> {
    let walk = shortest_walk(g, x1, x2, EdgeParity::Odd).ok_or(WalkError::NoWalk {
        from: x1,
        to: x2,
        parity: EdgeParity::Odd,
    })?;
    lab.apply_walk(g, &walk, a);
    Ok(())
}

/// Adds `a` to the weighted degree of `x1` and `-a` to that of `x2` by
/// incrementing along a shortest even-edge-count walk. Rejects `x1 == x2`
/// (the empty walk would change nothing).
pub fn transfer_weight(
    lab: &mut EdgeLabeling,
    g: &Graph,
    x1: u32,
    x2: u32,
    a: &GroupElement,
) -> Result<(), WalkError> {
    if x1 == x2 {
        return Err(WalkError::SameVertex(x1));
    }
    let walk = shortest_walk(g, x1, x2, EdgeParity::Even).ok_or(WalkError::NoWalk {
        from: x1,
        to: x2,
        parity: EdgeParity::Even,
    })?;
    lab.apply_walk(g, &walk, a);
    Ok(())
}
