//! Rooted-tree algorithms built around recursive directed star elimination:
//! the linear-time maximum packing procedure (which also computes the
//! domination number, since the two coincide on directed trees), the
//! `s <= rho <= ceil((n - l + s)/2)` bounds, and the structural
//! characterizations of the trees attaining either end.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::rooted_tree::RootedTree;
use crate::solvers::{gamma_exact, is_packing, rho_exact};
use crate::transforms::reduce_support_leaves;
use crate::vertex_set::VertexSet;

/// One elimination step: a deepest leaf, its support vertex, and the closed
/// out-neighborhood of the support in the digraph of that stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdsesStage {
    pub leaf: usize,
    pub support: usize,
    pub removed: VertexSet,
}

/// What is left when the elimination stops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RdsesTerminal {
    Empty,
    Isolated(usize),
    /// For contrafunctional digraphs the process stops at the unique cycle
    /// or at a height-one digraph; `induced` is that digraph relabeled
    /// order-preservingly to `0..vertices.len()`.
    Residual {
        vertices: VertexSet,
        induced: Digraph,
    },
}

/// Record of a recursive directed star elimination sequence.
///
/// `chosen` is the packing assembled along the way. The blocks of
/// `partition` are the per-stage removed sets, followed by the singleton or
/// residual block; they partition the vertex set of the original digraph.
#[derive(Debug, Clone)]
pub struct RdsesResult {
    pub stages: Vec<RdsesStage>,
    pub terminal: RdsesTerminal,
    pub chosen: VertexSet,
    pub partition: Vec<VertexSet>,
}

/// Leaf, support and height counts of a rooted tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeProfile {
    pub n: usize,
    pub leaves: usize,
    pub supports: usize,
    pub height: usize,
}

impl TreeProfile {
    pub fn of(t: &RootedTree) -> Self {
        let leaves = (0..t.n()).filter(|&v| t.is_leaf(v)).count();
        let supports = (0..t.n()).filter(|&v| t.is_support(v)).count();
        Self {
            n: t.n(),
            leaves,
            supports,
            height: t.height(),
        }
    }
}

/// Maximum packing of a rooted tree by star elimination, in time linear in
/// the order (up to the id sorting in the BFS order).
///
/// Repeatedly takes the last not-yet-removed vertex of the BFS order (a
/// deepest leaf of the current stage tree, ties broken towards the largest
/// id) and removes the closed out-neighborhood of its parent. When only the
/// root remains it joins the packing on its own. The size of the returned
/// packing equals both the packing and the domination number of the tree.
pub fn max_packing_rooted_tree(t: &RootedTree) -> RdsesResult {
    let n = t.n();
    let order = t.bfs_order();
    let mut in_l = vec![true; n];
    let mut chosen: Vec<usize> = Vec::new();
    let mut stages: Vec<RdsesStage> = Vec::new();
    let mut partition: Vec<VertexSet> = Vec::new();
    let mut terminal = RdsesTerminal::Empty;
    let mut idx = n;
    loop {
        while idx > 0 && !in_l[order[idx - 1]] {
            idx -= 1;
        }
        if idx == 0 {
            break;
        }
        let v = order[idx - 1];
        chosen.push(v);
        match t.parent(v) {
            None => {
                // only the root is left
                in_l[v] = false;
                terminal = RdsesTerminal::Isolated(v);
                partition.push(VertexSet::singleton(v));
            }
            Some(u) => {
                let mut removed = vec![u];
                in_l[u] = false;
                for &c in t.children(u) {
                    if in_l[c] {
                        in_l[c] = false;
                        removed.push(c);
                    }
                }
                let removed: VertexSet = removed.into_iter().collect();
                partition.push(removed.clone());
                stages.push(RdsesStage {
                    leaf: v,
                    support: u,
                    removed,
                });
            }
        }
    }
    let chosen: VertexSet = chosen.into_iter().collect();
    debug_assert!(is_packing(t.digraph(), &chosen));
    RdsesResult {
        stages,
        terminal,
        chosen,
        partition,
    }
}

/// Domination number of a directed tree. Rooted trees go through the star
/// elimination; other orientations fall back to the exact solver, where the
/// agreement of packing and domination numbers is asserted.
pub fn gamma_directed_tree(d: &Digraph) -> Result<usize> {
    let c = d.classify();
    if let Some(t) = c.rooted_tree {
        return Ok(max_packing_rooted_tree(&t).chosen.len());
    }
    if !c.directed_tree {
        return Err(Error::NotDirectedTree);
    }
    let gamma = gamma_exact(d)?.0;
    let rho = rho_exact(d)?.0;
    assert_eq!(rho, gamma, "packing and domination numbers must agree on directed trees");
    Ok(gamma)
}

/// Lower and upper bounds `(s, ceil((n - l + s)/2))` on the packing number
/// of a rooted tree of order at least 2.
pub fn t1_bounds(t: &RootedTree) -> Result<(usize, usize)> {
    if t.n() < 2 {
        return Err(Error::OrderTooSmall { n: t.n(), min: 2 });
    }
    let p = TreeProfile::of(t);
    Ok((p.supports, (p.n - p.leaves + p.supports).div_ceil(2)))
}

/// Outcome of the structural test for `rho = s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportTightness {
    /// `n = l + s`: every vertex is a leaf or a support.
    LeafSupportSplit,
    /// `n != l + s` and every vertex that is neither support nor leaf is
    /// adjacent from a support vertex.
    InternalsCovered,
    /// Fails: `witness` is neither support nor leaf and has no support
    /// in-neighbor (the root, in particular, has no in-neighbor at all).
    NotTight { witness: usize },
}

impl SupportTightness {
    pub fn holds(&self) -> bool {
        !matches!(self, SupportTightness::NotTight { .. })
    }
}

/// Structural condition equivalent to `rho(T) = s`; evaluates only the
/// right-hand side of the characterization, never `rho` itself. Requires
/// `t.n() >= 2`.
pub fn rho_equals_s_test(t: &RootedTree) -> SupportTightness {
    assert!(t.n() >= 2);
    let p = TreeProfile::of(t);
    if p.n == p.leaves + p.supports {
        return SupportTightness::LeafSupportSplit;
    }
    for v in 0..t.n() {
        if t.is_leaf(v) || t.is_support(v) {
            continue;
        }
        let covered = t.parent(v).is_some_and(|u| t.is_support(u));
        if !covered {
            return SupportTightness::NotTight { witness: v };
        }
    }
    SupportTightness::InternalsCovered
}

/// Shape of the star partition certifying membership in the extremal family
/// of rooted trees with `gamma = ceil(n/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiShape {
    /// Every block is a 2-vertex directed star.
    AllPairs,
    /// 2-vertex star blocks plus the root as a singleton.
    PairsWithSingleton,
    /// One 3-vertex star block, the rest 2-vertex, plus the singleton.
    OneTriple,
}

/// Certificate for membership in the `gamma = ceil(n/2)` family.
#[derive(Debug, Clone)]
pub struct PhiWitness {
    pub shape: PhiShape,
    pub partition: Vec<VertexSet>,
}

/// Tests whether `gamma(T) = ceil(n/2)` (via the star elimination) and, when
/// it holds, extracts the certifying star partition. Requires `t.n() >= 2`.
pub fn phi_membership(t: &RootedTree) -> Option<PhiWitness> {
    assert!(t.n() >= 2);
    let r = max_packing_rooted_tree(t);
    if r.chosen.len() != t.n().div_ceil(2) {
        return None;
    }
    for stage in &r.stages {
        debug_assert!(stage
            .removed
            .iter()
            .all(|v| v == stage.support || t.parent(v) == Some(stage.support)));
    }
    let star_sizes: Vec<usize> = r.stages.iter().map(|s| s.removed.len()).collect();
    let shape = match r.terminal {
        RdsesTerminal::Empty => {
            assert!(star_sizes.iter().all(|&s| s == 2));
            PhiShape::AllPairs
        }
        RdsesTerminal::Isolated(_) => {
            let triples = star_sizes.iter().filter(|&&s| s == 3).count();
            let pairs = star_sizes.iter().filter(|&&s| s == 2).count();
            assert_eq!(triples + pairs, star_sizes.len());
            match triples {
                0 => PhiShape::PairsWithSingleton,
                1 => PhiShape::OneTriple,
                _ => unreachable!("block sizes cannot reach ceil(n/2) otherwise"),
            }
        }
        RdsesTerminal::Residual { .. } => unreachable!("tree elimination has no residual"),
    };
    Some(PhiWitness {
        shape,
        partition: r.partition,
    })
}

/// Structural condition equivalent to `rho(T) = ceil((n - l + s)/2)`: the
/// support-leaf reduction of `T` lies in the `gamma = ceil(n/2)` family.
pub fn rho_upper_characterization(t: &RootedTree) -> bool {
    phi_membership(&reduce_support_leaves(t)).is_some()
}
