//! The constructive labelers: one for arbitrary Abelian groups with at
//! most one involution, one for cyclic groups of odd order, plus the
//! strength/gracefulness dispatchers built on them.
//!
//! Every labeling built here is re-checked by the verifier before it is
//! returned; the construction is never trusted.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{Component, Graph, Hypothesis, HypothesisViolation};
use crate::group::{groups_of_order, GroupElement, GroupSpec};
use crate::verifier::{self, Collision};
use crate::walk::{add_weight_both, transfer_weight, EdgeLabeling, WalkError};
use crate::zsp::{self, ZspError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelerError {
    #[error("hypothesis violated: {}", format_violations(.0))]
    Hypothesis(Vec<HypothesisViolation>),
    #[error("group {group} has {count} involutions, at most one is allowed")]
    TooManyInvolutions { group: String, count: usize },
    #[error("group order {got} is below the required {required}")]
    OrderTooSmall { required: u64, got: u64 },
    #[error("the involution of this group has no half, its order must be divisible by 4")]
    MissingHalfInvolution,
    #[error("modulus {0} must be odd")]
    ModulusNotOdd(u64),
    #[error(transparent)]
    Partition(#[from] ZspError),
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error("constructed labeling is not irregular ({0}); this is a bug")]
    NotIrregular(Collision),
}

fn format_violations(v: &[HypothesisViolation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    /// Adds the element to the weighted degree of both endpoints
    /// (twice the element when they coincide).
    Both,
    /// Adds the element at `from` and its inverse at `to`.
    Transfer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlannedOp {
    pub kind: OpKind,
    pub from: u32,
    pub to: u32,
    pub element: GroupElement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// General Abelian groups with at most one involution, via halved
    /// elements on closed walks.
    AbelianHalving,
    /// Cyclic groups of odd order, via a zero-sum partition.
    CyclicZeroSum,
}

/// An ordered list of weight operations; replaying it from the all-zero
/// labeling reproduces the construction exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingPlan {
    pub method: Method,
    pub spec: GroupSpec,
    pub ops: Vec<PlannedOp>,
}

impl LabelingPlan {
    pub fn replay(&self, g: &Graph) -> Result<EdgeLabeling, LabelerError> {
        let mut lab = EdgeLabeling::zero(g, &self.spec);
        for op in &self.ops {
            match op.kind {
                OpKind::Both => add_weight_both(&mut lab, g, op.from, op.to, &op.element)?,
                OpKind::Transfer => transfer_weight(&mut lab, g, op.from, op.to, &op.element)?,
            }
        }
        Ok(lab)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::AbelianHalving => write!(f, "abelian-halving"),
            Method::CyclicZeroSum => write!(f, "cyclic-zero-sum"),
        }
    }
}

/// Lower and upper bounds on the group irregularity strength.
///
/// The lower bound is unconditional: n distinct weights need n elements,
/// and one more when n = 2 (mod 4). The upper bound is what the
/// constructions achieve on qualifying graphs: n for odd n, n+1 for even.
pub fn bounds(g: &Graph) -> (u64, u64) {
    let n = g.vertex_count() as u64;
    let lower = if n % 4 == 2 { n + 1 } else { n };
    let upper = if n % 2 == 1 { n } else { n + 1 };
    (lower, upper)
}

fn verified(
    g: &Graph,
    plan: LabelingPlan,
) -> Result<(LabelingPlan, EdgeLabeling), LabelerError> {
    let lab = plan.replay(g)?;
    match verifier::is_irregular(g, &lab, &plan.spec).expect("labeling bound to plan spec") {
        None => Ok((plan, lab)),
        Some(c) => Err(LabelerError::NotIrregular(c)),
    }
}

/// Components ordered for construction: odd orders first, then even,
/// both by least contained vertex.
fn ordered_components(g: &Graph) -> Vec<Component> {
    let comps = g.components();
    let mut odd: Vec<Component> = Vec::new();
    let mut even: Vec<Component> = Vec::new();
    for c in comps {
        if c.order() % 2 == 1 {
            odd.push(c);
        } else {
            even.push(c);
        }
    }
    odd.extend(even);
    odd
}

/// Pairs up the vertices of a component that are not in `taken`,
/// within color classes when the component is bipartite.
fn leftover_pairs(comp: &Component, taken: &HashSet<u32>) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let classes: Vec<Vec<u32>> = match &comp.bipartition {
        Some((c0, c1)) => vec![c0.clone(), c1.clone()],
        None => vec![comp.vertices.clone()],
    };
    for class in classes {
        let free: Vec<u32> = class.into_iter().filter(|v| !taken.contains(v)).collect();
        assert!(
            free.len() % 2 == 0,
            "leftover vertices in a class must pair off"
        );
        for chunk in free.chunks(2) {
            out.push((chunk[0], chunk[1]));
        }
    }
    out
}

struct ElementPool<'a> {
    spec: &'a GroupSpec,
    excluded: HashSet<u64>,
}

impl<'a> ElementPool<'a> {
    fn new(spec: &'a GroupSpec) -> ElementPool<'a> {
        ElementPool {
            spec,
            excluded: HashSet::new(),
        }
    }

    fn exclude(&mut self, e: &GroupElement) {
        self.excluded.insert(self.spec.rank(e));
    }

    /// Next `count` elements in lexicographic order that are nonzero,
    /// not involutions, pass `extra`, and whose inverses are untouched.
    /// Both the element and its inverse are consumed.
    fn take_pairs(
        &mut self,
        count: usize,
        extra: impl Fn(&GroupSpec, &GroupElement) -> bool,
    ) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(count);
        for e in self.spec.elements() {
            if out.len() == count {
                break;
            }
            let neg = self.spec.neg(&e);
            if e == self.spec.zero() || e == neg {
                continue;
            }
            if self.excluded.contains(&self.spec.rank(&e))
                || self.excluded.contains(&self.spec.rank(&neg))
            {
                continue;
            }
            if !extra(self.spec, &e) {
                continue;
            }
            self.excluded.insert(self.spec.rank(&e));
            self.excluded.insert(self.spec.rank(&neg));
            out.push(e);
        }
        out
    }
}

/// Irregular labeling over an arbitrary Abelian group with at most one
/// involution, for graphs whose bipartite components have both color
/// classes even and no component of order below 3.
pub fn plan_with_group(g: &Graph, spec: &GroupSpec) -> Result<LabelingPlan, LabelerError> {
    let violations = g.hypothesis_violations(Hypothesis::EvenClasses);
    if !violations.is_empty() {
        return Err(LabelerError::Hypothesis(violations));
    }
    let involutions = spec.involutions();
    if involutions.len() > 1 {
        return Err(LabelerError::TooManyInvolutions {
            group: spec.to_string(),
            count: involutions.len(),
        });
    }
    let n = g.vertex_count() as u64;
    let required = if n % 4 == 2 { n + 1 } else { n };
    let t = spec.order();
    if t < required {
        return Err(LabelerError::OrderTooSmall { required, got: t });
    }

    let comps = ordered_components(g);
    let p = comps.iter().filter(|c| c.order() % 2 == 1).count();
    let k = p / 2;
    let tight_even = t == n && n % 2 == 0;
    let half_inv = involutions.first().map(|i| spec.halve(i));
    if tight_even && matches!(half_inv, Some(None)) {
        return Err(LabelerError::MissingHalfInvolution);
    }

    let mut pool = ElementPool::new(spec);
    let needed = if tight_even { k.saturating_sub(1) } else { k };
    let halvable = pool.take_pairs(needed, |s, e| s.halve(e).is_some());
    // the counting argument guarantees enough halvable pairs exist
    assert_eq!(
        halvable.len(),
        needed,
        "not enough halvable element pairs: group {spec}, graph order {n}"
    );

    let mut ops: Vec<PlannedOp> = Vec::new();
    let mut taken: HashSet<u32> = HashSet::new();

    // one vertex per odd component carries a chosen weight
    let weighted_odd = if p == 0 {
        0
    } else if n % 2 == 1 || tight_even {
        p - 1
    } else {
        p
    };
    for j in 0..weighted_odd {
        let x = comps[j].vertices[0];
        taken.insert(x);
        let elem = if tight_even && j == weighted_odd - 1 {
            let i = &involutions[0];
            pool.exclude(i);
            spec.halve(i).expect("checked above")
        } else if j % 2 == 0 {
            spec.halve(&halvable[j / 2]).expect("selected halvable")
        } else {
            let neg = spec.neg(&halvable[j / 2]);
            spec.halve(&neg).expect("inverse of halvable is halvable")
        };
        ops.push(PlannedOp {
            kind: OpKind::Both,
            from: x,
            to: x,
            element: elem,
        });
    }
    if p > weighted_odd {
        // the last odd component keeps weighted degree 0 at its least vertex
        taken.insert(comps[p - 1].vertices[0]);
    }

    // graphs with no odd component cannot park the involution weight
    // there; with the full group as weight range it must live somewhere
    if p == 0 && tight_even {
        let i = &involutions[0];
        pool.exclude(i);
        let half = spec.halve(i).expect("checked above");
        match comps.iter().find(|c| c.bipartition.is_none()) {
            Some(comp) => {
                // closed odd walk exists: weight i one vertex, park 0 on another
                let x1 = comp.vertices[0];
                let x2 = comp.vertices[1];
                taken.insert(x1);
                taken.insert(x2);
                ops.push(PlannedOp {
                    kind: OpKind::Both,
                    from: x1,
                    to: x1,
                    element: half.clone(),
                });
            }
            None => {
                // fully bipartite: realize weights {0, i/2, i, -i/2} on the
                // first component with one cross-class and one in-class move
                let comp = &comps[0];
                let (c0, c1) = comp.bipartition.as_ref().expect("bipartite");
                let (u1, u2, w1, w2) = (c0[0], c0[1], c1[0], c1[1]);
                for v in [u1, u2, w1, w2] {
                    taken.insert(v);
                }
                pool.exclude(&half);
                ops.push(PlannedOp {
                    kind: OpKind::Both,
                    from: u2,
                    to: w1,
                    element: half.clone(),
                });
                ops.push(PlannedOp {
                    kind: OpKind::Transfer,
                    from: w1,
                    to: w2,
                    element: half.clone(),
                });
            }
        }
    }

    // pair every remaining vertex inside its component and class
    let mut vertex_pairs: Vec<(u32, u32)> = Vec::new();
    for comp in &comps {
        vertex_pairs.extend(leftover_pairs(comp, &taken));
    }
    let pair_elems = pool.take_pairs(vertex_pairs.len(), |_, _| true);
    assert_eq!(
        pair_elems.len(),
        vertex_pairs.len(),
        "not enough free element pairs: group {spec}, graph order {n}"
    );
    for ((v1, v2), h) in vertex_pairs.into_iter().zip(pair_elems) {
        ops.push(PlannedOp {
            kind: OpKind::Transfer,
            from: v1,
            to: v2,
            element: h,
        });
    }

    Ok(LabelingPlan {
        method: Method::AbelianHalving,
        spec: spec.clone(),
        ops,
    })
}

pub fn label_with_group(g: &Graph, spec: &GroupSpec) -> Result<EdgeLabeling, LabelerError> {
    let plan = plan_with_group(g, spec)?;
    verified(g, plan).map(|(_, lab)| lab)
}

/// Irregular labeling over the cyclic group of odd order `t >= n`, for
/// graphs with no component of order below 3 and no odd star.
pub fn plan_cyclic_odd(g: &Graph, t: u64) -> Result<LabelingPlan, LabelerError> {
    let violations = g.hypothesis_violations(Hypothesis::NoOddStar);
    if !violations.is_empty() {
        return Err(LabelerError::Hypothesis(violations));
    }
    if t % 2 == 0 {
        return Err(LabelerError::ModulusNotOdd(t));
    }
    let n = g.vertex_count() as u64;
    if t < n {
        return Err(LabelerError::OrderTooSmall { required: n, got: t });
    }
    let spec = GroupSpec::cyclic(t).expect("t >= 3");

    let comps = ordered_components(g);
    let census = g.census();
    let demand = census.triple_demand();
    let partition = if n % 2 == 1 {
        // demand is odd exactly when n is odd
        zsp::zero_sum_partition(t, demand)?
    } else if 3 * (demand as u64 + 1) <= t {
        zsp::zero_sum_partition(t, demand + 1)?.remove_zero()?
    } else {
        // too tight to build one extra triple and drop the zero element
        zsp::zero_sum_partition_excluding_zero(t, demand)?
    };
    assert!(
        partition.triples().len() == demand,
        "partition supplies {} triples, demand is {demand}",
        partition.triples().len()
    );

    let elem = |v: u64| spec.element(&[v % t]);
    let mut ops: Vec<PlannedOp> = Vec::new();
    let mut next_triple = 0usize;
    let mut next_pair = 0usize;
    let mut pair_ops: Vec<(u32, u32)> = Vec::new();

    for comp in &comps {
        let mut taken: HashSet<u32> = HashSet::new();
        let odd = comp.order() % 2 == 1;
        if odd {
            let [_, b, c] = partition.triples()[next_triple];
            next_triple += 1;
            let (x, y, z) = match &comp.bipartition {
                Some((c0, c1)) => {
                    // two weight carriers in the even class, the sink in the odd
                    let (even_class, odd_class) =
                        if c0.len() % 2 == 0 { (c0, c1) } else { (c1, c0) };
                    (even_class[0], even_class[1], odd_class[0])
                }
                None => (comp.vertices[0], comp.vertices[1], comp.vertices[2]),
            };
            for v in [x, y, z] {
                taken.insert(v);
            }
            ops.push(PlannedOp {
                kind: OpKind::Both,
                from: x,
                to: z,
                element: elem(b),
            });
            ops.push(PlannedOp {
                kind: OpKind::Both,
                from: y,
                to: z,
                element: elem(c),
            });
        } else if let Some((c0, c1)) = &comp.bipartition {
            if c0.len() % 2 == 1 {
                // both classes odd: two triples, the sinks sit cross-class
                let [_, b1, c1v] = partition.triples()[next_triple];
                let [_, b2, c2v] = partition.triples()[next_triple + 1];
                next_triple += 2;
                let (u1, u2, u3) = (c0[0], c0[1], c0[2]);
                let (w1, w2, w3) = (c1[0], c1[1], c1[2]);
                for v in [u1, u2, u3, w1, w2, w3] {
                    taken.insert(v);
                }
                ops.push(PlannedOp {
                    kind: OpKind::Both,
                    from: u1,
                    to: w3,
                    element: elem(b1),
                });
                ops.push(PlannedOp {
                    kind: OpKind::Both,
                    from: u2,
                    to: w3,
                    element: elem(c1v),
                });
                ops.push(PlannedOp {
                    kind: OpKind::Both,
                    from: w1,
                    to: u3,
                    element: elem(b2),
                });
                ops.push(PlannedOp {
                    kind: OpKind::Both,
                    from: w2,
                    to: u3,
                    element: elem(c2v),
                });
            }
        }
        pair_ops.extend(leftover_pairs(comp, &taken));
    }
    assert_eq!(next_triple, demand, "triple consumption must match demand");
    assert!(
        pair_ops.len() <= partition.pairs().len(),
        "pair demand {} exceeds supply {}",
        pair_ops.len(),
        partition.pairs().len()
    );
    for (v1, v2) in pair_ops {
        let [d, _] = partition.pairs()[next_pair];
        next_pair += 1;
        ops.push(PlannedOp {
            kind: OpKind::Transfer,
            from: v1,
            to: v2,
            element: elem(d),
        });
    }

    Ok(LabelingPlan {
        method: Method::CyclicZeroSum,
        spec,
        ops,
    })
}

pub fn label_cyclic_odd(g: &Graph, t: u64) -> Result<EdgeLabeling, LabelerError> {
    let plan = plan_cyclic_odd(g, t)?;
    verified(g, plan).map(|(_, lab)| lab)
}

/// The strength value the construction achieves, with one verified
/// labeling per Abelian group of that order.
#[derive(Debug, Clone)]
pub struct SgConstruction {
    pub s: u64,
    pub labelings: Vec<(GroupSpec, EdgeLabeling)>,
}

pub fn sg_labeling(g: &Graph) -> Result<SgConstruction, LabelerError> {
    let violations = g.hypothesis_violations(Hypothesis::EvenClasses);
    if !violations.is_empty() {
        return Err(LabelerError::Hypothesis(violations));
    }
    let (_, s) = bounds(g);
    let mut labelings = Vec::new();
    for spec in groups_of_order(s) {
        let lab = label_with_group(g, &spec)?;
        labelings.push((spec, lab));
    }
    Ok(SgConstruction { s, labelings })
}

/// Modular edge-gracefulness via the strongest applicable construction.
#[derive(Debug, Clone)]
pub struct KConstruction {
    pub k: u64,
    /// False when the value is only an upper bound (even order divisible
    /// by four, reached through the odd-star-free route).
    pub exact: bool,
    pub spec: GroupSpec,
    pub labeling: EdgeLabeling,
}

pub fn k_labeling(g: &Graph) -> Result<KConstruction, LabelerError> {
    let n = g.vertex_count() as u64;
    if g.satisfies(Hypothesis::EvenClasses) {
        let k = if n % 4 == 2 { n + 1 } else { n };
        let spec = GroupSpec::cyclic(k).expect("k >= 3");
        let labeling = label_with_group(g, &spec)?;
        return Ok(KConstruction {
            k,
            exact: true,
            spec,
            labeling,
        });
    }
    let violations = g.hypothesis_violations(Hypothesis::NoOddStar);
    if !violations.is_empty() {
        return Err(LabelerError::Hypothesis(violations));
    }
    let k = if n % 2 == 1 { n } else { n + 1 };
    let labeling = label_cyclic_odd(g, k)?;
    Ok(KConstruction {
        k,
        exact: n % 4 != 0,
        spec: GroupSpec::cyclic(k).expect("k >= 3"),
        labeling,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::verifier::{is_irregular, weights};

    fn two_k3() -> Graph {
        corpus::union(&[corpus::complete(3), corpus::complete(3)])
    }

    fn assert_irregular(g: &Graph, lab: &EdgeLabeling, spec: &GroupSpec) {
        assert_eq!(is_irregular(g, lab, spec).unwrap(), None);
    }

    #[test]
    fn bound_values() {
        assert_eq!(bounds(&two_k3()), (7, 7));
        assert_eq!(bounds(&corpus::union(&[corpus::cycle(4), corpus::complete(3)])), (7, 7));
        assert_eq!(
            bounds(&corpus::union(&[corpus::complete(3), corpus::cycle(5)])),
            (8, 9)
        );
    }

    #[test]
    fn triangle_over_z3() {
        let k3 = corpus::complete(3);
        let z3 = GroupSpec::cyclic(3).unwrap();
        let lab = label_with_group(&k3, &z3).unwrap();
        let w = weights(&k3, &lab, &z3).unwrap();
        let mut seen: Vec<u64> = w.weights().iter().map(|e| z3.rank(e)).collect();
        seen.sort_unstable();
        assert_eq!(seen, vec![0, 1, 2]);
        // the chosen vertex of the single odd component stays at weight 0
        assert_eq!(w.weight(0), &z3.zero());
        // deterministic construction: exact labels
        assert_eq!(lab.label(k3.edge_id(0, 1).unwrap()), &z3.element(&[1]));
        assert_eq!(lab.label(k3.edge_id(0, 2).unwrap()), &z3.element(&[2]));
        assert_eq!(lab.label(k3.edge_id(1, 2).unwrap()), &z3.element(&[0]));
    }

    #[test]
    fn two_triangles_over_z7() {
        let g = two_k3();
        let z7 = GroupSpec::cyclic(7).unwrap();
        let lab = label_with_group(&g, &z7).unwrap();
        let w = weights(&g, &lab, &z7).unwrap();
        let per_vertex: Vec<u64> = w.weights().iter().map(|e| z7.rank(e)).collect();
        assert_eq!(per_vertex, vec![1, 2, 5, 6, 3, 4]);
        assert_irregular(&g, &lab, &z7);
    }

    #[test]
    fn too_many_involutions_rejected() {
        let g = two_k3();
        let spec = GroupSpec::new(&[4, 2]).unwrap();
        assert!(matches!(
            label_with_group(&g, &spec),
            Err(LabelerError::TooManyInvolutions { count: 3, .. })
        ));
    }

    #[test]
    fn order_below_requirement_rejected() {
        let g = two_k3();
        let z6 = GroupSpec::cyclic(6).unwrap();
        assert!(matches!(
            label_with_group(&g, &z6),
            Err(LabelerError::OrderTooSmall { required: 7, got: 6 })
        ));
    }

    #[test]
    fn hypothesis_violation_rejected() {
        let g = corpus::union(&[corpus::cycle(6), corpus::complete(3)]);
        let z9 = GroupSpec::cyclic(9).unwrap();
        assert!(matches!(
            label_with_group(&g, &z9),
            Err(LabelerError::Hypothesis(_))
        ));
    }

    #[test]
    fn even_group_with_tight_order() {
        // n = 8, divisible by 4, so Z_8 at t = n exercises the involution half
        let g = corpus::union(&[corpus::cycle(4), corpus::cycle(4)]);
        let z8 = GroupSpec::cyclic(8).unwrap();
        let lab = label_with_group(&g, &z8).unwrap();
        assert_irregular(&g, &lab, &z8);

        // same order with a non-bipartite even component
        let g = corpus::union(&[corpus::complete(4), corpus::cycle(4)]);
        let lab = label_with_group(&g, &z8).unwrap();
        assert_irregular(&g, &lab, &z8);

        // and with odd components present
        let g = corpus::union(&[corpus::complete(3), corpus::cycle(5), corpus::cycle(4)]);
        let z12 = GroupSpec::cyclic(12).unwrap();
        let lab = label_with_group(&g, &z12).unwrap();
        assert_irregular(&g, &lab, &z12);
    }

    #[test]
    fn cyclic_odd_small_unions() {
        let g = corpus::union(&[corpus::complete(3), corpus::cycle(4)]);
        let lab = label_cyclic_odd(&g, 7).unwrap();
        let z7 = GroupSpec::cyclic(7).unwrap();
        assert_irregular(&g, &lab, &z7);
        let census = g.census();
        assert_eq!(census.bipartite_both_even, 1);
        assert_eq!(census.nonbipartite_odd, 1);
        assert_eq!(census.triple_demand(), 1);

        let g = corpus::union(&[corpus::cycle(6), corpus::complete(3)]);
        assert_eq!(g.census().triple_demand(), 3);
        let lab = label_cyclic_odd(&g, 9).unwrap();
        assert_irregular(&g, &lab, &GroupSpec::cyclic(9).unwrap());
    }

    #[test]
    fn cyclic_odd_rejects_bad_inputs() {
        let g = corpus::union(&[corpus::star(3), corpus::complete(3)]);
        assert!(matches!(
            label_cyclic_odd(&g, 9),
            Err(LabelerError::Hypothesis(_))
        ));
        let g = two_k3();
        assert!(matches!(
            label_cyclic_odd(&g, 8),
            Err(LabelerError::ModulusNotOdd(8))
        ));
        assert!(matches!(
            label_cyclic_odd(&g, 5),
            Err(LabelerError::OrderTooSmall { .. })
        ));
    }

    #[test]
    fn cyclic_odd_tight_even_case() {
        // n = 6 with triple demand 2: building three triples needs 9 > 7
        // values, so the zero-free partition route must engage
        let g = two_k3();
        let lab = label_cyclic_odd(&g, 7).unwrap();
        assert_irregular(&g, &lab, &GroupSpec::cyclic(7).unwrap());

        let g = corpus::union(&[corpus::cycle(6)]);
        let lab = label_cyclic_odd(&g, 7).unwrap();
        assert_irregular(&g, &lab, &GroupSpec::cyclic(7).unwrap());
    }

    #[test]
    fn sg_construction_examples() {
        let r = sg_labeling(&two_k3()).unwrap();
        assert_eq!(r.s, 7);
        assert_eq!(r.labelings.len(), 1);

        let g = corpus::union(&[corpus::complete(3), corpus::cycle(5)]);
        let r = sg_labeling(&g).unwrap();
        assert_eq!(r.s, 9);
        let names: Vec<String> = r.labelings.iter().map(|(s, _)| s.to_string()).collect();
        assert_eq!(names, vec!["Z9", "Z3xZ3"]);

        let g = corpus::union(&[corpus::cycle(4), corpus::complete(3)]);
        let r = sg_labeling(&g).unwrap();
        assert_eq!(r.s, 7);
    }

    #[test]
    fn k_construction_examples() {
        let g = corpus::union(&[corpus::cycle(4), corpus::cycle(4)]);
        let r = k_labeling(&g).unwrap();
        assert_eq!((r.k, r.exact), (8, true));
        assert_eq!(r.spec.to_string(), "Z8");

        let g = corpus::union(&[corpus::cycle(6), corpus::complete(3)]);
        let r = k_labeling(&g).unwrap();
        assert_eq!((r.k, r.exact), (9, true));

        let r = k_labeling(&two_k3()).unwrap();
        assert_eq!((r.k, r.exact), (7, true));

        let g = corpus::union(&[corpus::star(3), corpus::complete(3)]);
        assert!(k_labeling(&g).is_err());
    }

    #[test]
    fn construction_is_deterministic() {
        let g = corpus::union(&[corpus::complete(3), corpus::cycle(5), corpus::cycle(4)]);
        let spec = GroupSpec::cyclic(12).unwrap();
        let a = plan_with_group(&g, &spec).unwrap();
        let b = plan_with_group(&g, &spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.replay(&g).unwrap(), b.replay(&g).unwrap());

        let a = plan_cyclic_odd(&g, 13).unwrap();
        let b = plan_cyclic_odd(&g, 13).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn connected_inputs_are_accepted() {
        // the construction never needs more than one component
        let c5 = corpus::cycle(5);
        let z5 = GroupSpec::cyclic(5).unwrap();
        let lab = label_with_group(&c5, &z5).unwrap();
        assert_irregular(&c5, &lab, &z5);
    }
}
