//! Immutable digraph representation.
//!
//! Vertices are dense ids `0..n`. Loops and duplicate arcs are rejected at
//! construction; pairs of opposite arcs are allowed and collapse to a single
//! edge of the underlying graph.

use crate::error::{Error, Result};
use crate::rooted_tree::RootedTree;
use crate::vertex_set::VertexSet;

/// A finite digraph with vertex set `{0, ..., n-1}` and a set of arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

/// Degree summary of a digraph.
///
/// `min_underlying` and `max_underlying` are taken over the underlying graph
/// (opposite arc pairs count once). `delta_star` is the minimum in-degree
/// over the vertices that attain `min_underlying`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub max_out: usize,
    pub max_in: usize,
    pub min_underlying: usize,
    pub max_underlying: usize,
    pub delta_star: usize,
}

/// Structural flags computed by [`Digraph::classify`]. Flags are independent;
/// all that apply are set.
#[derive(Debug, Clone)]
pub struct Classification {
    /// Underlying graph is connected.
    pub connected: bool,
    /// Present exactly when the digraph is a rooted tree.
    pub rooted_tree: Option<RootedTree>,
    /// An orientation of a tree: connected, no opposite arc pairs, underlying
    /// graph acyclic.
    pub directed_tree: bool,
    /// Every vertex has in-degree exactly one.
    pub contrafunctional: bool,
    /// Exactly one arc between every pair of distinct vertices.
    pub tournament: bool,
}

impl Digraph {
    /// Builds a digraph of order `n` from an arc list.
    ///
    /// Rejects endpoints outside `0..n`, loops, and duplicate arcs.
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut sorted: Vec<(usize, usize)> = Vec::with_capacity(arcs.len());
        for &(u, v) in arcs {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
            sorted.push((u, v));
        }
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateArc(w[0].0, w[0].1));
            }
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &sorted {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for l in in_adj.iter_mut() {
            l.sort_unstable();
        }
        Ok(Self {
            n,
            arcs: sorted,
            out_adj,
            in_adj,
        })
    }

    /// Order of the digraph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// Out-neighbors of `v` in ascending order. Panics if `v >= n`.
    pub fn outs(&self, v: usize) -> &[usize] {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        &self.out_adj[v]
    }

    /// In-neighbors of `v` in ascending order. Panics if `v >= n`.
    pub fn ins(&self, v: usize) -> &[usize] {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.outs(v).len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.ins(v).len()
    }

    /// Open in-neighborhood `N^-(v)` as a set. Panics if `v >= n`.
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.ins(v).iter().copied().collect()
    }

    /// Closed in-neighborhood `N^-[v]`. Panics if `v >= n`.
    pub fn in_neighbors_closed(&self, v: usize) -> VertexSet {
        let mut s = self.in_neighbors(v);
        s.insert(v);
        s
    }

    /// Open out-neighborhood `N^+(v)` as a set. Panics if `v >= n`.
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.outs(v).iter().copied().collect()
    }

    /// Closed out-neighborhood `N^+[v]`. Panics if `v >= n`.
    pub fn out_neighbors_closed(&self, v: usize) -> VertexSet {
        let mut s = self.out_neighbors(v);
        s.insert(v);
        s
    }

    /// Distinct neighbors of `v` in the underlying graph, ascending.
    pub fn underlying_neighbors(&self, v: usize) -> VertexSet {
        let mut s: VertexSet = self.ins(v).iter().copied().collect();
        for &w in self.outs(v) {
            s.insert(w);
        }
        s
    }

    pub fn underlying_degree(&self, v: usize) -> usize {
        self.underlying_neighbors(v).len()
    }

    /// Number of arcs going from `a` into `b` (the two sets need not be
    /// disjoint).
    pub fn arc_cut(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter()
            .map(|u| self.outs(u).iter().filter(|&&v| b.contains(v)).count())
            .sum()
    }

    /// Degree summary; requires `n >= 1`.
    pub fn degree_stats(&self) -> DegreeStats {
        assert!(self.n >= 1, "degree_stats on an empty digraph");
        let underlying: Vec<usize> = (0..self.n).map(|v| self.underlying_degree(v)).collect();
        let min_underlying = *underlying.iter().min().unwrap();
        let max_underlying = *underlying.iter().max().unwrap();
        let delta_star = (0..self.n)
            .filter(|&v| underlying[v] == min_underlying)
            .map(|v| self.in_degree(v))
            .min()
            .unwrap();
        DegreeStats {
            max_out: (0..self.n).map(|v| self.out_degree(v)).max().unwrap(),
            max_in: (0..self.n).map(|v| self.in_degree(v)).max().unwrap(),
            min_underlying,
            max_underlying,
            delta_star,
        }
    }

    /// True when every arc has its opposite, i.e. the digraph is the
    /// symmetric encoding of an undirected graph.
    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetric_arc().is_none()
    }

    pub(crate) fn first_asymmetric_arc(&self) -> Option<(usize, usize)> {
        self.arcs
            .iter()
            .copied()
            .find(|&(u, v)| !self.has_arc(v, u))
    }

    /// True when the underlying graph is connected. An empty digraph and a
    /// single vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.outs(v).iter().chain(self.ins(v)) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Number of edges of the underlying graph (opposite pairs collapse).
    pub fn underlying_edge_count(&self) -> usize {
        self.arcs
            .iter()
            .filter(|&&(u, v)| u < v || !self.has_arc(v, u))
            .count()
    }

    /// True when the underlying graph is acyclic, via union-find over
    /// underlying edges.
    pub fn underlying_acyclic(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.arcs {
            if u > v && self.has_arc(v, u) {
                continue; // opposite pair: one underlying edge
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
        true
    }

    /// Structural classification; requires `n >= 1`.
    pub fn classify(&self) -> Classification {
        assert!(self.n >= 1, "classify on an empty digraph");
        let connected = self.is_connected();
        let contrafunctional = (0..self.n).all(|v| self.in_degree(v) == 1);
        let opposite_free = self
            .arcs
            .iter()
            .all(|&(u, v)| u < v || !self.has_arc(v, u));
        let directed_tree = connected
            && opposite_free
            && self.arc_count() + 1 == self.n
            && self.underlying_acyclic();
        let tournament =
            opposite_free && self.arc_count() == self.n * (self.n - 1) / 2 && {
                // with that many loop-free, duplicate-free, opposite-free
                // arcs every pair carries exactly one
                true
            };
        let rooted_tree = RootedTree::from_digraph(self.clone()).ok();
        Classification {
            connected,
            rooted_tree,
            directed_tree,
            contrafunctional,
            tournament,
        }
    }

    /// Directed path `0 -> 1 -> ... -> n-1`. Panics for `n == 0`.
    pub fn path(n: usize) -> Digraph {
        assert!(n >= 1);
        let arcs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Digraph::new(n, &arcs).unwrap()
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`. Panics for `n < 2`;
    /// `n == 2` yields the opposite pair.
    pub fn cycle(n: usize) -> Digraph {
        assert!(n >= 2);
        let arcs: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Digraph::new(n, &arcs).unwrap()
    }

    /// Directed star: root `0` adjacent to each of `1..n`. Panics for `n == 0`.
    pub fn star(n: usize) -> Digraph {
        assert!(n >= 1);
        let arcs: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Digraph::new(n, &arcs).unwrap()
    }

    /// Induced subdigraph on `vertices`, relabeled order-preservingly to
    /// `0..vertices.len()`.
    pub fn induced(&self, vertices: &VertexSet) -> Digraph {
        let verts: Vec<usize> = vertices.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Digraph::new(verts.len(), &arcs).expect("induced subdigraph of a valid digraph is valid")
    }
}
