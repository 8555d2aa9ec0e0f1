//! Structural transforms: the split construction that turns a digraph into
//! an undirected graph preserving domination and packing numbers, the
//! support-leaf reduction of rooted trees, and arc removal.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::rooted_tree::RootedTree;

/// Split construction for a digraph of order `n`: each vertex `v` gets a
/// private copy `v' = v + n` with an arc `(v, v')`, and each source arc
/// `(u, v)` is doubled into `(u, v)` and `(u, v')`.
///
/// `split_graph` is the underlying graph of `split_digraph`, stored as a
/// symmetric digraph so the undirected solvers can consume it directly.
#[derive(Debug, Clone)]
pub struct SplitTransform {
    pub source: Digraph,
    pub split_digraph: Digraph,
    pub split_graph: Digraph,
}

impl SplitTransform {
    /// Id of the primed copy of `v`.
    pub fn primed(&self, v: usize) -> usize {
        v + self.source.n()
    }
}

/// Builds the split transform of `d`; requires `d.n() >= 1`.
pub fn build_split(d: &Digraph) -> SplitTransform {
    let n = d.n();
    assert!(n >= 1, "split transform of an empty digraph");
    let mut arcs: Vec<(usize, usize)> = (0..n).map(|v| (v, v + n)).collect();
    for &(u, v) in d.arcs() {
        arcs.push((u, v));
        arcs.push((u, v + n));
    }
    let split_digraph = Digraph::new(2 * n, &arcs).expect("split arcs are loop- and duplicate-free");
    let mut sym: Vec<(usize, usize)> = Vec::with_capacity(2 * arcs.len());
    for &(u, v) in split_digraph.arcs() {
        sym.push((u, v));
        if !split_digraph.has_arc(v, u) {
            sym.push((v, u));
        }
    }
    let split_graph = Digraph::new(2 * n, &sym).expect("symmetric closure is valid");
    SplitTransform {
        source: d.clone(),
        split_digraph,
        split_graph,
    }
}

/// Deletes all but the lowest-id leaf below every support vertex, then
/// relabels order-preservingly. The result has order `n - leaves + supports`.
/// Requires `t.n() >= 2`.
pub fn reduce_support_leaves(t: &RootedTree) -> RootedTree {
    let n = t.n();
    assert!(n >= 2, "support-leaf reduction needs at least two vertices");
    let mut keep = vec![true; n];
    for u in 0..n {
        let mut kept_leaf = false;
        for &c in t.children(u) {
            if t.is_leaf(c) {
                if kept_leaf {
                    keep[c] = false;
                } else {
                    kept_leaf = true; // children are ascending, first = lowest id
                }
            }
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let arcs: Vec<(usize, usize)> = t
        .digraph()
        .arcs()
        .iter()
        .filter(|&&(u, v)| keep[u] && keep[v])
        .map(|&(u, v)| (index[u], index[v]))
        .collect();
    let d = Digraph::new(kept.len(), &arcs).expect("reduction of a tree is valid");
    RootedTree::from_digraph(d).expect("reduction of a rooted tree is a rooted tree")
}

/// Returns `d` minus the arc `(u, v)`.
pub fn remove_arc(d: &Digraph, u: usize, v: usize) -> Result<Digraph> {
    if !d.has_arc(u, v) {
        return Err(Error::MissingArc(u, v));
    }
    let arcs: Vec<(usize, usize)> = d
        .arcs()
        .iter()
        .copied()
        .filter(|&a| a != (u, v))
        .collect();
    Digraph::new(d.n(), &arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_of_single_arc() {
        let t = build_split(&Digraph::path(2));
        let mut expect = vec![(0, 2), (1, 3), (0, 1), (0, 3)];
        expect.sort_unstable();
        assert_eq!(t.split_digraph.arcs(), expect.as_slice());
    }

    #[test]
    fn split_of_single_vertex() {
        let t = build_split(&Digraph::new(1, &[]).unwrap());
        assert_eq!(t.split_digraph.n(), 2);
        assert_eq!(t.split_digraph.arcs(), &[(0, 1)]);
    }

    #[test]
    fn split_arc_count_formula() {
        let t = build_split(&Digraph::cycle(3));
        assert_eq!(t.split_digraph.n(), 6);
        assert_eq!(t.split_digraph.arc_count(), 3 + 2 * 3);
        assert!(t.split_graph.is_symmetric());
        assert_eq!(
            t.split_graph.underlying_edge_count(),
            t.split_digraph.underlying_edge_count()
        );
    }

    #[test]
    fn reduce_star_to_single_arc() {
        let t = RootedTree::from_digraph(Digraph::star(4)).unwrap();
        let r = reduce_support_leaves(&t);
        assert_eq!(r.n(), 2);
        assert_eq!(r.digraph().arcs(), &[(0, 1)]);
    }

    #[test]
    fn reduce_keeps_single_leaf_chains() {
        let t = RootedTree::from_digraph(Digraph::path(3)).unwrap();
        let r = reduce_support_leaves(&t);
        assert_eq!(r.digraph(), t.digraph());
    }

    #[test]
    fn reduce_two_level_tree() {
        let d = Digraph::new(5, &[(0, 1), (1, 2), (1, 3), (0, 4)]).unwrap();
        let t = RootedTree::from_digraph(d).unwrap();
        let r = reduce_support_leaves(&t);
        // keeps leaf 2 under support 1 and leaf 4 under support 0
        assert_eq!(r.n(), 4);
        assert_eq!(r.digraph().arcs(), &[(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn remove_arc_from_cycle() {
        let p = remove_arc(&Digraph::cycle(3), 2, 0).unwrap();
        assert_eq!(p, Digraph::path(3));
        let c = remove_arc(&Digraph::cycle(4), 3, 0).unwrap().classify();
        assert_eq!(c.rooted_tree.unwrap().root(), 0);
    }

    #[test]
    fn remove_arc_of_opposite_pair() {
        let d = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        let r = remove_arc(&d, 0, 1).unwrap();
        assert_eq!(r.arcs(), &[(1, 0)]);
        assert_eq!(remove_arc(&r, 0, 1), Err(Error::MissingArc(0, 1)));
    }
}
