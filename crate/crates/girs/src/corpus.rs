//! Small named graphs and disjoint unions, used by tests and examples.

use crate::graph::Graph;

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).expect("complete graph is simple")
}

/// Cycle `C_n` (n >= 3).
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<(u32, u32)> = (0..n as u32)
        .map(|u| (u, (u + 1) % n as u32))
        .collect();
    Graph::new(n, &edges).expect("cycle is simple")
}

/// Path `P_n` on n vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).expect("path is simple")
}

/// Star `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..=leaves as u32).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges).expect("star is simple")
}

/// `K_n` with the edge {0, 1} removed.
pub fn complete_minus_edge(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
        .filter(|&e| e != (0, 1))
        .collect();
    Graph::new(n, &edges).expect("simple")
}

/// Disjoint union with vertices relabeled consecutively.
pub fn union(parts: &[Graph]) -> Graph {
    let n: usize = parts.iter().map(|g| g.vertex_count()).sum();
    let mut edges = Vec::new();
    let mut offset = 0u32;
    for g in parts {
        for &(u, v) in g.edges() {
            edges.push((u + offset, v + offset));
        }
        offset += g.vertex_count() as u32;
    }
    Graph::new(n, &edges).expect("union of simple graphs is simple")
}
