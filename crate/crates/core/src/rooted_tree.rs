use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// A rooted tree: a connected digraph with one vertex of in-degree 0 (the
/// root) and in-degree exactly 1 everywhere else. All arcs point away from
/// the root, so `children(v)` are just the out-neighbors of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    digraph: Digraph,
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    height: usize,
}

impl RootedTree {
    /// Validates that `digraph` is a rooted tree and takes ownership of it.
    pub fn from_digraph(digraph: Digraph) -> Result<Self> {
        let n = digraph.n();
        if n == 0 {
            return Err(Error::NotRootedTree("empty digraph".into()));
        }
        let mut root = None;
        for v in 0..n {
            match digraph.in_degree(v) {
                0 if root.is_none() => root = Some(v),
                0 => {
                    return Err(Error::NotRootedTree(format!(
                        "two vertices of in-degree 0: {} and {v}",
                        root.unwrap()
                    )))
                }
                1 => {}
                d => {
                    return Err(Error::NotRootedTree(format!(
                        "vertex {v} has in-degree {d}"
                    )))
                }
            }
        }
        let root = root
            .ok_or_else(|| Error::NotRootedTree("no vertex of in-degree 0".into()))?;
        if !digraph.is_connected() {
            return Err(Error::NotRootedTree("underlying graph disconnected".into()));
        }
        // connectivity plus the in-degree profile force an acyclic underlying
        // graph and make every vertex reachable from the root
        let mut parent = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut queue = std::collections::VecDeque::from([root]);
        let mut seen = 1usize;
        while let Some(v) = queue.pop_front() {
            for &c in digraph.outs(v) {
                parent[c] = Some(v);
                depth[c] = depth[v] + 1;
                seen += 1;
                queue.push_back(c);
            }
        }
        debug_assert_eq!(seen, n);
        let height = depth.iter().copied().max().unwrap();
        Ok(Self {
            digraph,
            root,
            parent,
            depth,
            height,
        })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn n(&self) -> usize {
        self.digraph.n()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Parent of `v`, `None` for the root. Panics if `v >= n`.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Children of `v` in ascending order.
    pub fn children(&self, v: usize) -> &[usize] {
        self.digraph.outs(v)
    }

    /// Distance from the root to `v` in arcs.
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Maximum root distance.
    pub fn height(&self) -> usize {
        self.height
    }

    /// `v` has out-degree 0.
    pub fn is_leaf(&self, v: usize) -> bool {
        self.digraph.out_degree(v) == 0
    }

    /// `v` has a leaf among its children.
    pub fn is_support(&self, v: usize) -> bool {
        self.children(v).iter().any(|&c| self.is_leaf(c))
    }

    /// Level order from the root; within a level, ascending vertex id.
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| (self.depth[v], v));
        order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(n: usize, arcs: &[(usize, usize)]) -> RootedTree {
        RootedTree::from_digraph(Digraph::new(n, arcs).unwrap()).unwrap()
    }

    #[test]
    fn bfs_order_on_path_and_star() {
        assert_eq!(
            RootedTree::from_digraph(Digraph::path(3)).unwrap().bfs_order(),
            vec![0, 1, 2]
        );
        assert_eq!(
            RootedTree::from_digraph(Digraph::star(4)).unwrap().bfs_order(),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn bfs_order_breaks_ties_by_id() {
        let t = tree(4, &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(t.bfs_order(), vec![0, 1, 2, 3]);
        // a shape where naive queue order would differ from id order
        let t = tree(5, &[(0, 3), (0, 1), (3, 2), (1, 4)]);
        assert_eq!(t.bfs_order(), vec![0, 1, 3, 2, 4]);
    }

    #[test]
    fn parent_precedes_child_in_bfs_order() {
        let t = tree(6, &[(0, 2), (2, 1), (2, 4), (4, 3), (0, 5)]);
        let order = t.bfs_order();
        let pos = |v: usize| order.iter().position(|&x| x == v).unwrap();
        for v in 0..t.n() {
            if let Some(p) = t.parent(v) {
                assert!(pos(p) < pos(v));
            }
        }
    }

    #[test]
    fn heights_and_supports() {
        let t = tree(5, &[(0, 1), (1, 2), (1, 3), (0, 4)]);
        assert_eq!(t.height(), 2);
        assert!(t.is_leaf(2) && t.is_leaf(3) && t.is_leaf(4));
        assert!(t.is_support(1) && t.is_support(0));
        assert_eq!(t.parent(3), Some(1));
        assert_eq!(t.parent(0), None);
    }

    #[test]
    fn rejects_non_trees() {
        assert!(RootedTree::from_digraph(Digraph::cycle(3)).is_err());
        // disconnected: two paths
        let d = Digraph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(RootedTree::from_digraph(d).is_err());
    }

    #[test]
    fn single_vertex_tree() {
        let t = tree(1, &[]);
        assert_eq!(t.root(), 0);
        assert_eq!(t.height(), 0);
        assert!(t.is_leaf(0));
    }
}
