//! Analysis of connected contrafunctional digraphs (every in-degree is 1):
//! the unique directed cycle, the height of the trees hanging off it, star
//! elimination down to a cycle or a height-one residual, and the exact
//! relation `gamma ∈ {rho, rho + 1}` with equality to `rho + 1` precisely
//! when the elimination ends in an odd directed cycle.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::rooted_tree::RootedTree;
use crate::solvers::is_packing;
use crate::transforms::remove_arc;
use crate::trees::{max_packing_rooted_tree, RdsesResult, RdsesStage, RdsesTerminal};
use crate::vertex_set::VertexSet;

/// Full analysis record of a connected contrafunctional digraph.
#[derive(Debug, Clone)]
pub struct ContrafunctionalAnalysis {
    /// The unique directed cycle, starting at its minimum-id vertex.
    pub cycle: Vec<usize>,
    /// Maximum distance from the cycle.
    pub height: usize,
    pub rdses: RdsesResult,
    /// The elimination ends in an odd directed cycle.
    pub omega: bool,
    pub rho: usize,
    pub gamma: usize,
}

fn require_connected_contrafunctional(d: &Digraph) -> Result<()> {
    if d.n() == 0 || !d.is_connected() || (0..d.n()).any(|v| d.in_degree(v) != 1) {
        return Err(Error::NotContrafunctional);
    }
    Ok(())
}

/// The unique directed cycle of a connected contrafunctional digraph, in arc
/// direction, starting at its minimum-id vertex.
pub fn unique_cycle(d: &Digraph) -> Result<Vec<usize>> {
    require_connected_contrafunctional(d)?;
    // walking backwards along the unique in-neighbor map must repeat
    let mut pos = vec![usize::MAX; d.n()];
    let mut walk: Vec<usize> = Vec::new();
    let mut v = 0;
    while pos[v] == usize::MAX {
        pos[v] = walk.len();
        walk.push(v);
        v = d.ins(v)[0];
    }
    let mut cycle = walk[pos[v]..].to_vec();
    cycle.reverse();
    let start = cycle
        .iter()
        .position(|&c| c == *cycle.iter().min().unwrap())
        .unwrap();
    cycle.rotate_left(start);
    Ok(cycle)
}

fn distances_from_cycle(d: &Digraph, cycle: &[usize], alive: &[bool]) -> Vec<Option<usize>> {
    let mut dist = vec![None; d.n()];
    let mut queue = std::collections::VecDeque::new();
    for &c in cycle {
        dist[c] = Some(0);
        queue.push_back(c);
    }
    while let Some(v) = queue.pop_front() {
        for &w in d.outs(v) {
            if alive[w] && dist[w].is_none() {
                dist[w] = Some(dist[v].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Height: maximum distance from the unique cycle; 0 exactly when the
/// digraph is a directed cycle.
pub fn height(d: &Digraph) -> Result<usize> {
    let cycle = unique_cycle(d)?;
    let alive = vec![true; d.n()];
    let dist = distances_from_cycle(d, &cycle, &alive);
    Ok(dist.iter().map(|x| x.expect("connected")).max().unwrap())
}

/// Star elimination for a connected contrafunctional digraph: while the
/// height is at least 2, remove the closed out-neighborhood of the support
/// of a maximum-distance leaf (ties towards the lowest leaf id). The
/// terminal is the unique cycle itself or a height-one digraph; it is
/// returned as an order-preservingly relabeled residual.
pub fn rdses_contrafunctional(d: &Digraph) -> Result<RdsesResult> {
    let cycle = unique_cycle(d)?;
    let n = d.n();
    let mut alive = vec![true; n];
    let mut stages: Vec<RdsesStage> = Vec::new();
    let mut partition: Vec<VertexSet> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    loop {
        let dist = distances_from_cycle(d, &cycle, &alive);
        let far = (0..n)
            .filter(|&v| alive[v])
            .max_by_key(|&v| (dist[v].unwrap(), std::cmp::Reverse(v)));
        let leaf = match far {
            Some(v) if dist[v].unwrap() >= 2 => v,
            _ => break,
        };
        let support = d.ins(leaf)[0];
        let mut removed = vec![support];
        alive[support] = false;
        for &c in d.outs(support) {
            if alive[c] {
                alive[c] = false;
                removed.push(c);
            }
        }
        let removed: VertexSet = removed.into_iter().collect();
        partition.push(removed.clone());
        chosen.push(leaf);
        stages.push(RdsesStage {
            leaf,
            support,
            removed,
        });
    }
    let vertices: VertexSet = (0..n).filter(|&v| alive[v]).collect();
    let induced = d.induced(&vertices);
    partition.push(vertices.clone());
    let chosen: VertexSet = chosen.into_iter().collect();
    debug_assert!(is_packing(d, &chosen));
    Ok(RdsesResult {
        stages,
        terminal: RdsesTerminal::Residual { vertices, induced },
        chosen,
        partition,
    })
}

/// Packing and domination numbers of the terminal digraph of the
/// elimination, plus whether it is an odd directed cycle.
fn terminal_values(induced: &Digraph) -> Result<(usize, usize, bool)> {
    let cycle = unique_cycle(induced)?;
    let m = cycle.len();
    if induced.n() == m {
        // the terminal is the directed cycle itself
        return Ok((m / 2, m.div_ceil(2), m % 2 == 1));
    }
    // height-one terminal: every cycle vertex of out-degree > 1 supports a leaf
    let is_support: Vec<bool> = cycle.iter().map(|&c| induced.out_degree(c) > 1).collect();
    if is_support.iter().all(|&s| s) {
        return Ok((m, m, false));
    }
    let (u, v) = (0..m)
        .filter(|&i| is_support[i] && !is_support[(i + 1) % m])
        .map(|i| (cycle[i], cycle[(i + 1) % m]))
        .min()
        .expect("a support precedes a non-support somewhere on the cycle");
    let tree = RootedTree::from_digraph(remove_arc(induced, u, v)?)
        .expect("removing a cycle arc of a contrafunctional digraph yields a rooted tree");
    let r = max_packing_rooted_tree(&tree);
    let value = match r.terminal {
        RdsesTerminal::Empty => r.chosen.len(),
        // the isolated root is dominated in the original digraph through the
        // removed arc, and the stage supports dominate everything else
        RdsesTerminal::Isolated(_) => r.chosen.len() - 1,
        RdsesTerminal::Residual { .. } => unreachable!(),
    };
    Ok((value, value, false))
}

/// Computes the packing and domination numbers of a connected
/// contrafunctional digraph from its elimination sequence: both parameters
/// grow by one per stage on top of their terminal values, and they differ
/// (by exactly one) precisely when the terminal is an odd directed cycle.
pub fn analyze_contrafunctional(d: &Digraph) -> Result<ContrafunctionalAnalysis> {
    let cycle = unique_cycle(d)?;
    let h = height(d)?;
    let rdses = rdses_contrafunctional(d)?;
    let RdsesTerminal::Residual { ref induced, .. } = rdses.terminal else {
        unreachable!("contrafunctional elimination always ends in a residual")
    };
    let (t_rho, t_gamma, omega) = terminal_values(induced)?;
    let stages = rdses.stages.len();
    Ok(ContrafunctionalAnalysis {
        cycle,
        height: h,
        omega,
        rho: t_rho + stages,
        gamma: t_gamma + stages,
        rdses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{gamma_exact, rho_exact};

    fn digraph(n: usize, arcs: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, arcs).unwrap()
    }

    #[test]
    fn unique_cycle_examples() {
        assert_eq!(unique_cycle(&Digraph::cycle(3)).unwrap(), vec![0, 1, 2]);
        let d = digraph(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]);
        assert_eq!(unique_cycle(&d).unwrap(), vec![0, 1, 2]);
        assert_eq!(
            unique_cycle(&Digraph::path(3)),
            Err(Error::NotContrafunctional)
        );
    }

    #[test]
    fn unique_cycle_of_opposite_pair() {
        let d = digraph(2, &[(0, 1), (1, 0)]);
        assert_eq!(unique_cycle(&d).unwrap(), vec![0, 1]);
    }

    #[test]
    fn height_examples() {
        assert_eq!(height(&Digraph::cycle(4)).unwrap(), 0);
        let pendant = digraph(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]);
        assert_eq!(height(&pendant).unwrap(), 1);
        let tail = digraph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]);
        assert_eq!(height(&tail).unwrap(), 2);
    }

    #[test]
    fn rdses_strips_the_tail() {
        let tail = digraph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]);
        let r = rdses_contrafunctional(&tail).unwrap();
        assert_eq!(r.stages.len(), 1);
        assert_eq!(r.stages[0].leaf, 4);
        assert_eq!(r.stages[0].support, 3);
        assert_eq!(r.stages[0].removed, VertexSet::from([3, 4]));
        let RdsesTerminal::Residual { vertices, induced } = &r.terminal else {
            panic!("expected residual");
        };
        assert_eq!(*vertices, VertexSet::from([0, 1, 2]));
        assert_eq!(*induced, Digraph::cycle(3));
    }

    #[test]
    fn rdses_stops_at_low_height() {
        let r = rdses_contrafunctional(&Digraph::cycle(4)).unwrap();
        assert!(r.stages.is_empty());
        let sun = digraph(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]);
        let r = rdses_contrafunctional(&sun).unwrap();
        assert!(r.stages.is_empty());
        let RdsesTerminal::Residual { induced, .. } = &r.terminal else {
            panic!("expected residual");
        };
        assert_eq!(induced, &sun);
    }

    #[test]
    fn analyze_cycles() {
        let a = analyze_contrafunctional(&Digraph::cycle(3)).unwrap();
        assert_eq!((a.rho, a.gamma, a.omega), (1, 2, true));
        let a = analyze_contrafunctional(&Digraph::cycle(4)).unwrap();
        assert_eq!((a.rho, a.gamma, a.omega), (2, 2, false));
        let a = analyze_contrafunctional(&digraph(2, &[(0, 1), (1, 0)])).unwrap();
        assert_eq!((a.rho, a.gamma, a.omega), (1, 1, false));
    }

    #[test]
    fn analyze_all_supports_case() {
        let sun = digraph(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]);
        let a = analyze_contrafunctional(&sun).unwrap();
        assert_eq!((a.rho, a.gamma, a.omega), (3, 3, false));
    }

    #[test]
    fn analyze_matches_exact_solvers_on_small_cases() {
        let cases = [
            digraph(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]),
            digraph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]),
            digraph(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
            digraph(7, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (1, 5), (5, 6)]),
        ];
        for d in cases {
            let a = analyze_contrafunctional(&d).unwrap();
            assert_eq!(a.rho, rho_exact(&d).unwrap().0, "rho mismatch on {:?}", d);
            assert_eq!(a.gamma, gamma_exact(&d).unwrap().0, "gamma mismatch on {:?}", d);
            assert_eq!(a.gamma == a.rho + 1, a.omega);
        }
    }
}
