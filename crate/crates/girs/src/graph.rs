//! Undirected simple graphs: edge-list parsing, connected components,
//! bipartition detection, and the component classification that drives
//! the labeling constructions.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed input: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u32 },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: u32, v: u32 },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { line: usize, vertex: u32, n: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// Undirected simple graph on vertices `0..n-1`.
///
/// Edges are normalized to `u < v` and kept sorted, so edge ids and all
/// iteration orders are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let mut norm: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            let line = i + 1;
            if a == b {
                return Err(GraphError::SelfLoop { line, vertex: a });
            }
            for v in [a, b] {
                if v as usize >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex: v, n });
                }
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                line: 0,
                u: w[0].0,
                v: w[0].1,
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    /// Parses the edge-list text format: optional `#` comment lines, a
    /// header `n m`, then exactly `m` lines `u v`.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let mut edge_lines: Vec<usize> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(GraphError::Malformed {
                    line: line_no,
                    msg: format!("expected two integers, got `{line}`"),
                });
            }
            let a: u64 = fields[0].parse().map_err(|_| GraphError::Malformed {
                line: line_no,
                msg: format!("bad integer `{}`", fields[0]),
            })?;
            let b: u64 = fields[1].parse().map_err(|_| GraphError::Malformed {
                line: line_no,
                msg: format!("bad integer `{}`", fields[1]),
            })?;
            if header.is_none() {
                header = Some((a as usize, b as usize));
            } else {
                edges.push((a as u32, b as u32));
                edge_lines.push(line_no);
            }
        }
        let (n, m) = header.ok_or(GraphError::Malformed {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            });
        }
        // re-run validation so errors carry real line numbers
        for (k, &(a, b)) in edges.iter().enumerate() {
            let line = edge_lines[k];
            if a == b {
                return Err(GraphError::SelfLoop { line, vertex: a });
            }
            for v in [a, b] {
                if v as usize >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex: v, n });
                }
            }
            let key = (a.min(b), a.max(b));
            if edges[..k]
                .iter()
                .any(|&(x, y)| (x.min(y), x.max(y)) == key)
            {
                return Err(GraphError::DuplicateEdge {
                    line,
                    u: key.0,
                    v: key.1,
                });
            }
        }
        Graph::new(n, &edges)
    }

    /// Serializes in the edge-list format; writers always emit `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Edge id of `{u, v}`, if present.
    pub fn edge_id(&self, u: u32, v: u32) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Connected components in order of smallest contained vertex.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n as u32 {
            if seen[start as usize] {
                continue;
            }
            // BFS with 2-coloring; color[v] = Some(side)
            let mut color = vec![None::<u8>; self.n];
            let mut vertices = Vec::new();
            let mut bipartite = true;
            let mut queue = VecDeque::new();
            seen[start as usize] = true;
            color[start as usize] = Some(0);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                vertices.push(v);
                let side = color[v as usize].unwrap();
                for &w in self.neighbors(v) {
                    match color[w as usize] {
                        None => {
                            color[w as usize] = Some(1 - side);
                            seen[w as usize] = true;
                            queue.push_back(w);
                        }
                        Some(c) if c == side => bipartite = false,
                        Some(_) => {}
                    }
                }
            }
            vertices.sort_unstable();
            let edges: Vec<(u32, u32)> = self
                .edges
                .iter()
                .copied()
                .filter(|&(u, _)| color[u as usize].is_some())
                .collect();
            let bipartition = if bipartite {
                let mut class0 = Vec::new();
                let mut class1 = Vec::new();
                for &v in &vertices {
                    if color[v as usize] == Some(0) {
                        class0.push(v);
                    } else {
                        class1.push(v);
                    }
                }
                Some((class0, class1))
            } else {
                None
            };
            let class = classify(&vertices, &bipartition, |v| self.degree(v));
            out.push(Component {
                vertices,
                edges,
                bipartition,
                class,
            });
        }
        out
    }

    pub fn census(&self) -> ComponentCensus {
        ComponentCensus::from_components(&self.components())
    }

    /// Violations of the given hypothesis; empty means the graph qualifies.
    pub fn hypothesis_violations(&self, h: Hypothesis) -> Vec<HypothesisViolation> {
        let mut out = Vec::new();
        for (i, comp) in self.components().iter().enumerate() {
            let order = comp.vertices.len();
            if order < 3 {
                out.push(HypothesisViolation {
                    component: i,
                    least_vertex: comp.vertices[0],
                    reason: ViolationReason::OrderBelowThree(order),
                });
                continue;
            }
            match h {
                Hypothesis::EvenClasses => {
                    if let Some((c0, c1)) = &comp.bipartition {
                        if c0.len() % 2 != 0 || c1.len() % 2 != 0 {
                            out.push(HypothesisViolation {
                                component: i,
                                least_vertex: comp.vertices[0],
                                reason: ViolationReason::OddColorClass(c0.len(), c1.len()),
                            });
                        }
                    }
                }
                Hypothesis::NoOddStar => {
                    if comp.class == ComponentClass::OddStar {
                        out.push(HypothesisViolation {
                            component: i,
                            least_vertex: comp.vertices[0],
                            reason: ViolationReason::OddStar(order - 1),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn satisfies(&self, h: Hypothesis) -> bool {
        self.hypothesis_violations(h).is_empty()
    }
}

/// The two component-shape hypotheses the constructions require.
///
/// `EvenClasses`: no component of order < 3 and every bipartite component
/// has both color classes of even order. `NoOddStar`: no component of
/// order < 3 and no star with an odd number of leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    EvenClasses,
    NoOddStar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisViolation {
    pub component: usize,
    pub least_vertex: u32,
    pub reason: ViolationReason,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationReason {
    OrderBelowThree(usize),
    OddColorClass(usize, usize),
    OddStar(usize),
}

impl fmt::Display for HypothesisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "component {} (vertex {}): ",
            self.component, self.least_vertex
        )?;
        match self.reason {
            ViolationReason::OrderBelowThree(o) => write!(f, "order {o} is below 3"),
            ViolationReason::OddColorClass(a, b) => {
                write!(f, "bipartite color classes {a}+{b} are not both even")
            }
            ViolationReason::OddStar(leaves) => write!(f, "star with {leaves} leaves"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentClass {
    TooSmall,
    BipartiteBothEven,
    BipartiteBothOdd,
    BipartiteMixed,
    NonBipartiteOdd,
    NonBipartiteEven,
    OddStar,
}

/// A connected component with its 2-coloring, when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
    /// Color classes; the first contains the least vertex.
    pub bipartition: Option<(Vec<u32>, Vec<u32>)>,
    pub class: ComponentClass,
}

impl Component {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

fn classify(
    vertices: &[u32],
    bipartition: &Option<(Vec<u32>, Vec<u32>)>,
    degree: impl Fn(u32) -> usize,
) -> ComponentClass {
    let order = vertices.len();
    if order < 3 {
        return ComponentClass::TooSmall;
    }
    // K_{1,2u+1}, u >= 1: even order >= 4, one center, all other degrees 1
    if order >= 4 && order % 2 == 0 {
        let centers = vertices.iter().filter(|&&v| degree(v) == order - 1).count();
        let leaves = vertices.iter().filter(|&&v| degree(v) == 1).count();
        if centers == 1 && leaves == order - 1 {
            return ComponentClass::OddStar;
        }
    }
    match bipartition {
        Some((c0, c1)) => match (c0.len() % 2, c1.len() % 2) {
            (0, 0) => ComponentClass::BipartiteBothEven,
            (1, 1) => ComponentClass::BipartiteBothOdd,
            _ => ComponentClass::BipartiteMixed,
        },
        None => {
            if order % 2 == 1 {
                ComponentClass::NonBipartiteOdd
            } else {
                ComponentClass::NonBipartiteEven
            }
        }
    }
}

/// Component counts by shape.
///
/// `bipartite_both_odd` etc. are computed from the bipartition itself, so
/// odd stars count as bipartite components with both classes odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentCensus {
    pub total: usize,
    pub odd_order: usize,
    pub even_nonbipartite: usize,
    pub even_bipartite: usize,
    pub bipartite_both_odd: usize,
    pub bipartite_both_even: usize,
    pub bipartite_mixed: usize,
    pub nonbipartite_odd: usize,
    pub nonbipartite_even: usize,
}

impl ComponentCensus {
    pub fn from_components(comps: &[Component]) -> ComponentCensus {
        let mut c = ComponentCensus {
            total: comps.len(),
            odd_order: 0,
            even_nonbipartite: 0,
            even_bipartite: 0,
            bipartite_both_odd: 0,
            bipartite_both_even: 0,
            bipartite_mixed: 0,
            nonbipartite_odd: 0,
            nonbipartite_even: 0,
        };
        for comp in comps {
            let odd = comp.order() % 2 == 1;
            if odd {
                c.odd_order += 1;
            }
            match &comp.bipartition {
                Some((c0, c1)) => {
                    if !odd {
                        c.even_bipartite += 1;
                    }
                    match (c0.len() % 2, c1.len() % 2) {
                        (0, 0) => c.bipartite_both_even += 1,
                        (1, 1) => c.bipartite_both_odd += 1,
                        _ => c.bipartite_mixed += 1,
                    }
                }
                None => {
                    if odd {
                        c.nonbipartite_odd += 1;
                    } else {
                        c.even_nonbipartite += 1;
                        c.nonbipartite_even += 1;
                    }
                }
            }
        }
        c
    }

    /// Vertex triples the zero-sum construction needs: two per both-odd
    /// bipartite component, one per odd-order component.
    pub fn triple_demand(&self) -> usize {
        2 * self.bipartite_both_odd + self.bipartite_mixed + self.nonbipartite_odd
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn parse_small_graphs() {
        let k3 = Graph::parse("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(k3.vertex_count(), 3);
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);

        let star = Graph::parse("4 3\n0 1\n0 2\n0 3").unwrap();
        assert_eq!(star.degree(0), 3);

        assert!(matches!(
            Graph::parse("3 1\n0 0"),
            Err(GraphError::SelfLoop { vertex: 0, .. })
        ));
        assert!(matches!(
            Graph::parse("3 2\n0 1\n1 0"),
            Err(GraphError::DuplicateEdge { .. })
        ));
        assert!(matches!(
            Graph::parse("3 1\n0 5"),
            Err(GraphError::VertexOutOfRange { vertex: 5, .. })
        ));
        assert!(matches!(
            Graph::parse("# comment only"),
            Err(GraphError::Malformed { .. })
        ));
        assert!(matches!(
            Graph::parse("3 2\n0 1"),
            Err(GraphError::EdgeCountMismatch { .. })
        ));
    }

    #[test]
    fn parse_accepts_comments_and_roundtrips() {
        let text = "# triangle\n3 3\n0 1\n0 2\n1 2\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.to_edge_list(), "3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(Graph::parse(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn component_classification() {
        let two_k3 = corpus::union(&[corpus::complete(3), corpus::complete(3)]);
        let comps = two_k3.components();
        assert_eq!(comps.len(), 2);
        assert!(comps
            .iter()
            .all(|c| c.class == ComponentClass::NonBipartiteOdd));

        let g = corpus::union(&[corpus::cycle(4), corpus::complete(3)]);
        let comps = g.components();
        assert_eq!(comps[0].class, ComponentClass::BipartiteBothEven);
        let (c0, c1) = comps[0].bipartition.as_ref().unwrap();
        assert_eq!((c0.len(), c1.len()), (2, 2));
        assert_eq!(comps[1].class, ComponentClass::NonBipartiteOdd);

        let star = corpus::star(3);
        let comps = star.components();
        assert_eq!(comps[0].class, ComponentClass::OddStar);

        // even stars are not odd stars
        assert_eq!(
            corpus::star(4).components()[0].class,
            ComponentClass::BipartiteMixed
        );
        // P_2 is too small
        assert_eq!(
            corpus::path(2).components()[0].class,
            ComponentClass::TooSmall
        );
    }

    #[test]
    fn census_counts() {
        let g = corpus::union(&[corpus::cycle(6), corpus::complete(3)]);
        let c = g.census();
        assert_eq!(c.total, 2);
        assert_eq!(c.bipartite_both_odd, 1);
        assert_eq!(c.nonbipartite_odd, 1);
        assert_eq!(c.bipartite_both_even, 0);
        assert_eq!(c.triple_demand(), 3);

        let c = corpus::union(&[corpus::cycle(4), corpus::cycle(4)]).census();
        assert_eq!(c.bipartite_both_even, 2);
        assert_eq!(c.total, 2);
        assert_eq!(c.triple_demand(), 0);

        let c = corpus::union(&[corpus::complete(3), corpus::complete(4)]).census();
        assert_eq!(c.nonbipartite_odd, 1);
        assert_eq!(c.nonbipartite_even, 1);
        assert_eq!(c.triple_demand(), 1);
    }

    #[test]
    fn census_partitions_components() {
        for g in [
            corpus::union(&[corpus::cycle(6), corpus::complete(3)]),
            corpus::union(&[corpus::path(1), corpus::path(2), corpus::star(3)]),
            corpus::union(&[corpus::complete(4), corpus::path(5), corpus::cycle(7)]),
        ] {
            let c = g.census();
            assert_eq!(
                c.bipartite_both_odd
                    + c.bipartite_both_even
                    + c.bipartite_mixed
                    + c.nonbipartite_odd
                    + c.nonbipartite_even,
                c.total
            );
            assert_eq!(c.odd_order, c.bipartite_mixed + c.nonbipartite_odd);
            assert_eq!(c.even_nonbipartite, c.nonbipartite_even);
        }
    }

    #[test]
    fn hypothesis_checks() {
        let two_k3 = corpus::union(&[corpus::complete(3), corpus::complete(3)]);
        assert!(two_k3.satisfies(Hypothesis::EvenClasses));

        let g = corpus::union(&[corpus::cycle(6), corpus::complete(3)]);
        let violations = g.hypothesis_violations(Hypothesis::EvenClasses);
        assert_eq!(violations.len(), 1);
        assert!(matches!(
            violations[0].reason,
            ViolationReason::OddColorClass(3, 3)
        ));
        assert!(g.satisfies(Hypothesis::NoOddStar));

        let star_union = corpus::union(&[corpus::star(3), corpus::complete(3)]);
        assert!(!star_union.satisfies(Hypothesis::NoOddStar));
        let v = star_union.hypothesis_violations(Hypothesis::NoOddStar);
        assert!(matches!(v[0].reason, ViolationReason::OddStar(3)));

        let with_tiny = corpus::union(&[corpus::complete(3), corpus::path(2)]);
        assert!(!with_tiny.satisfies(Hypothesis::EvenClasses));
        assert!(!with_tiny.satisfies(Hypothesis::NoOddStar));
    }

    /// Under the even-classes hypothesis every odd-order component is
    /// non-bipartite (an all-even bipartition forces even order).
    #[test]
    fn even_classes_implies_odd_components_nonbipartite() {
        let graphs = [
            corpus::union(&[corpus::complete(3), corpus::complete(3)]),
            corpus::union(&[corpus::cycle(4), corpus::complete(3)]),
            corpus::union(&[corpus::complete(3), corpus::cycle(5)]),
            corpus::union(&[corpus::cycle(4), corpus::cycle(4)]),
        ];
        for g in graphs {
            if !g.satisfies(Hypothesis::EvenClasses) {
                continue;
            }
            for comp in g.components() {
                if comp.order() % 2 == 1 {
                    assert!(comp.bipartition.is_none());
                }
            }
        }
    }

    /// Exhaustive check of the 2-coloring against a brute-force search for
    /// a valid coloring, on all graphs with up to 5 vertices.
    #[test]
    fn bipartiteness_matches_brute_force() {
        for n in 1..=5usize {
            let pairs: Vec<(u32, u32)> = (0..n as u32)
                .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(u32, u32)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                for comp in g.components() {
                    let brute = has_two_coloring(&comp.vertices, &comp.edges);
                    assert_eq!(comp.bipartition.is_some(), brute);
                    if let Some((c0, c1)) = &comp.bipartition {
                        for &(u, v) in &comp.edges {
                            let side = |x: u32| c0.contains(&x);
                            assert_ne!(side(u), side(v));
                        }
                        assert_eq!(c0.len() + c1.len(), comp.order());
                    }
                }
            }
        }
    }

    fn has_two_coloring(vertices: &[u32], edges: &[(u32, u32)]) -> bool {
        let k = vertices.len();
        'outer: for mask in 0u32..(1 << k) {
            let side = |v: u32| {
                let i = vertices.iter().position(|&x| x == v).unwrap();
                mask & (1 << i) != 0
            };
            for &(u, v) in edges {
                if side(u) == side(v) {
                    continue 'outer;
                }
            }
            return true;
        }
        false
    }
}
