//! Chordality via greedy simplicial elimination and a brute-force search for
//! induced k-suns. Both take undirected graphs encoded as symmetric
//! digraphs. The strong-chordality verdict is desk-scale: the sun search is
//! bounded in both graph order and sun size.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Default bound on the sun size `k` checked by [`strongly_chordal_desk`].
pub const DEFAULT_SUN_BOUND: usize = 4;

/// Maximum graph order accepted by [`find_k_sun`].
pub const SUN_SEARCH_GUARD: usize = 16;

/// Maximum graph order accepted by [`simplicial_elimination`].
pub const ELIMINATION_GUARD: usize = 40;

/// A deletion order `v_n, ..., v_1` in which each vertex is simplicial in
/// the graph induced by the vertices not yet deleted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
}

/// An induced k-sun: `core` carries a Hamiltonian cycle in its induced
/// subgraph (chords allowed), the `outer` vertices are pairwise nonadjacent,
/// and `outer[i]` is adjacent to exactly `core[i]` and `core[i+1 mod k]`
/// among the 2k chosen vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunWitness {
    pub k: usize,
    pub core: Vec<usize>,
    pub outer: Vec<usize>,
}

/// Desk-scale strong-chordality verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalVerdict {
    NotChordal,
    ChordalWithSun(SunWitness),
    /// Chordal with no induced k-sun for any `k <= k_max`. Not a certified
    /// recognition: suns larger than `k_max` are not searched.
    StronglyChordal { k_max: usize },
}

fn require_symmetric(g: &Digraph) -> Result<()> {
    match g.first_asymmetric_arc() {
        Some((u, v)) => Err(Error::NotSymmetric(u, v)),
        None => Ok(()),
    }
}

/// Greedy simplicial elimination: repeatedly deletes the lowest-id vertex
/// whose remaining neighborhood is a clique. Returns an ordering exactly
/// when the graph is chordal.
pub fn simplicial_elimination(g: &Digraph) -> Result<Option<EliminationOrdering>> {
    require_symmetric(g)?;
    let n = g.n();
    if n > ELIMINATION_GUARD {
        return Err(Error::GuardExceeded {
            n,
            guard: ELIMINATION_GUARD,
        });
    }
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let is_simplicial = |v: usize, alive: &[bool], g: &Digraph| {
        let nb: Vec<usize> = g.outs(v).iter().copied().filter(|&w| alive[w]).collect();
        nb.iter()
            .enumerate()
            .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_arc(a, b)))
    };
    for _ in 0..n {
        let pick = (0..n).find(|&v| alive[v] && is_simplicial(v, &alive, g));
        match pick {
            Some(v) => {
                alive[v] = false;
                order.push(v);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(EliminationOrdering { order }))
}

/// Exhaustive search for an induced k-sun with `3 <= k <= k_max`. Returns
/// the first witness in a fixed enumeration order (smallest k, then
/// lexicographically by core tuple).
pub fn find_k_sun(g: &Digraph, k_max: usize) -> Result<Option<SunWitness>> {
    require_symmetric(g)?;
    let n = g.n();
    if n > SUN_SEARCH_GUARD {
        return Err(Error::GuardExceeded {
            n,
            guard: SUN_SEARCH_GUARD,
        });
    }
    for k in 3..=k_max {
        if 2 * k > n {
            break;
        }
        let mut core = Vec::with_capacity(k);
        if let Some(w) = extend_core(g, k, &mut core) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn extend_core(g: &Digraph, k: usize, core: &mut Vec<usize>) -> Option<SunWitness> {
    if core.len() == k {
        if !g.has_arc(core[k - 1], core[0]) {
            return None;
        }
        return match_outer(g, core);
    }
    for v in 0..g.n() {
        if core.contains(&v) {
            continue;
        }
        // keep rotations out: the first core vertex is the smallest
        if !core.is_empty() && v < core[0] {
            continue;
        }
        if let Some(&prev) = core.last() {
            if !g.has_arc(prev, v) {
                continue;
            }
        }
        core.push(v);
        if let Some(w) = extend_core(g, k, core) {
            return Some(w);
        }
        core.pop();
    }
    None
}

fn match_outer(g: &Digraph, core: &[usize]) -> Option<SunWitness> {
    let k = core.len();
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            let (a, b) = (core[i], core[(i + 1) % k]);
            (0..g.n())
                .filter(|&u| {
                    !core.contains(&u)
                        && core
                            .iter()
                            .all(|&c| g.has_arc(u, c) == (c == a || c == b))
                })
                .collect()
        })
        .collect();
    let mut outer: Vec<usize> = Vec::with_capacity(k);
    fn pick(
        g: &Digraph,
        candidates: &[Vec<usize>],
        outer: &mut Vec<usize>,
        i: usize,
    ) -> bool {
        if i == candidates.len() {
            return true;
        }
        for &u in &candidates[i] {
            if outer.contains(&u) || outer.iter().any(|&w| g.has_arc(w, u)) {
                continue;
            }
            outer.push(u);
            if pick(g, candidates, outer, i + 1) {
                return true;
            }
            outer.pop();
        }
        false
    }
    if pick(g, &candidates, &mut outer, 0) {
        Some(SunWitness {
            k,
            core: core.to_vec(),
            outer,
        })
    } else {
        None
    }
}

/// Chordal (simplicial elimination succeeds) and no induced k-sun for
/// `k <= k_max`. The verdict is desk-scale by construction.
pub fn strongly_chordal_desk(g: &Digraph) -> Result<ChordalVerdict> {
    strongly_chordal_desk_bounded(g, DEFAULT_SUN_BOUND)
}

pub fn strongly_chordal_desk_bounded(g: &Digraph, k_max: usize) -> Result<ChordalVerdict> {
    if simplicial_elimination(g)?.is_none() {
        return Ok(ChordalVerdict::NotChordal);
    }
    Ok(match find_k_sun(g, k_max)? {
        Some(w) => ChordalVerdict::ChordalWithSun(w),
        None => ChordalVerdict::StronglyChordal { k_max },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn undirected(n: usize, edges: &[(usize, usize)]) -> Digraph {
        let mut arcs = Vec::with_capacity(2 * edges.len());
        for &(u, v) in edges {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        Digraph::new(n, &arcs).unwrap()
    }

    fn three_sun() -> Digraph {
        undirected(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)],
        )
    }

    #[test]
    fn triangle_has_elimination_ordering() {
        let g = undirected(3, &[(0, 1), (1, 2), (2, 0)]);
        let o = simplicial_elimination(&g).unwrap().unwrap();
        assert_eq!(o.order, vec![0, 1, 2]);
    }

    #[test]
    fn c4_is_not_chordal() {
        let g = undirected(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(simplicial_elimination(&g).unwrap(), None);
        assert_eq!(strongly_chordal_desk(&g).unwrap(), ChordalVerdict::NotChordal);
    }

    #[test]
    fn trees_are_chordal_and_sun_free() {
        let g = undirected(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]);
        assert!(simplicial_elimination(&g).unwrap().is_some());
        assert_eq!(find_k_sun(&g, 4).unwrap(), None);
        assert_eq!(
            strongly_chordal_desk(&g).unwrap(),
            ChordalVerdict::StronglyChordal { k_max: 4 }
        );
    }

    #[test]
    fn explicit_three_sun_is_found() {
        let g = three_sun();
        let w = find_k_sun(&g, 4).unwrap().unwrap();
        assert_eq!(w.k, 3);
        assert_eq!(w.core, vec![0, 1, 2]);
        assert_eq!(w.outer, vec![3, 4, 5]);
        assert!(matches!(
            strongly_chordal_desk(&g).unwrap(),
            ChordalVerdict::ChordalWithSun(_)
        ));
    }

    #[test]
    fn c6_has_no_sun() {
        let g = undirected(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(find_k_sun(&g, 4).unwrap(), None);
        assert_eq!(strongly_chordal_desk(&g).unwrap(), ChordalVerdict::NotChordal);
    }

    #[test]
    fn rejects_asymmetric_input() {
        assert_eq!(
            simplicial_elimination(&Digraph::path(3)),
            Err(Error::NotSymmetric(0, 1))
        );
        assert_eq!(
            find_k_sun(&Digraph::path(3), 4),
            Err(Error::NotSymmetric(0, 1))
        );
    }

    #[test]
    fn sun_search_guard() {
        let g = Digraph::new(17, &[]).unwrap();
        assert_eq!(
            find_k_sun(&g, 4),
            Err(Error::GuardExceeded { n: 17, guard: 16 })
        );
    }
}
