//! Predicates and exact solvers for the five parameters: packing number,
//! domination number, total and open domination numbers, and the out-Slater
//! number, plus the degree-based lower bound on the packing number.
//!
//! The exact solvers enumerate subsets by cardinality (ascending for minima,
//! descending for maxima) and stop at the first feasible cardinality, so the
//! returned witness is the lexicographically least optimal set. They are
//! guarded by a maximum order, 20 by default.

use num_rational::Rational64;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Default maximum order accepted by the exact solvers.
pub const DEFAULT_SOLVER_GUARD: usize = 20;

/// A parameter value together with an optimal witness set.
pub type Solution = (usize, VertexSet);

fn check_range(d: &Digraph, s: &VertexSet) {
    if let Some(v) = s.max() {
        assert!(v < d.n(), "vertex {v} out of range for order {}", d.n());
    }
}

/// True when `|N^+[v] ∩ b| <= 1` for every vertex `v`.
pub fn is_packing(d: &Digraph, b: &VertexSet) -> bool {
    check_range(d, b);
    let holds = (0..d.n()).all(|v| {
        let mut hits = usize::from(b.contains(v));
        for &w in d.outs(v) {
            if b.contains(w) {
                hits += 1;
                if hits > 1 {
                    return false;
                }
            }
        }
        true
    });
    debug_assert_eq!(holds, is_packing_pairwise(d, b));
    holds
}

/// The equivalent formulation of a packing: closed in-neighborhoods of
/// members are pairwise disjoint.
pub fn is_packing_pairwise(d: &Digraph, b: &VertexSet) -> bool {
    check_range(d, b);
    let mut marked = vec![false; d.n()];
    for u in b.iter() {
        for w in d.ins(u).iter().copied().chain(std::iter::once(u)) {
            if marked[w] {
                return false;
            }
            marked[w] = true;
        }
    }
    true
}

/// True when every vertex outside `s` has an in-neighbor in `s`.
pub fn is_dominating(d: &Digraph, s: &VertexSet) -> bool {
    check_range(d, s);
    (0..d.n()).all(|v| s.contains(v) || d.ins(v).iter().any(|&u| s.contains(u)))
}

/// True when `s` is dominating and the subdigraph induced by `s` has no
/// isolated vertices.
pub fn is_total_dominating(d: &Digraph, s: &VertexSet) -> bool {
    is_dominating(d, s)
        && s.iter().all(|u| {
            d.ins(u)
                .iter()
                .chain(d.outs(u))
                .any(|&w| s.contains(w))
        })
}

/// True when every vertex of the digraph, members of `s` included, has an
/// in-neighbor in `s`.
pub fn is_open_dominating(d: &Digraph, s: &VertexSet) -> bool {
    check_range(d, s);
    (0..d.n()).all(|v| d.ins(v).iter().any(|&u| s.contains(u)))
}

/// Undirected domination on a symmetric digraph: every vertex outside `s`
/// has an underlying neighbor in `s`.
pub fn is_undirected_dominating(g: &Digraph, s: &VertexSet) -> bool {
    check_range(g, s);
    (0..g.n()).all(|v| s.contains(v) || g.underlying_neighbors(v).iter().any(|u| s.contains(u)))
}

/// Undirected 2-packing: `|N[v] ∩ b| <= 1` for every vertex `v`, with `N[v]`
/// the closed underlying neighborhood.
pub fn is_undirected_packing(g: &Digraph, b: &VertexSet) -> bool {
    check_range(g, b);
    (0..g.n()).all(|v| {
        let hits = usize::from(b.contains(v))
            + g.underlying_neighbors(v).iter().filter(|&u| b.contains(u)).count();
        hits <= 1
    })
}

// ---------------------------------------------------------------------------
// subset enumeration

struct Masks {
    n: usize,
    out_closed: Vec<u64>,
    in_open: Vec<u64>,
    adj_open: Vec<u64>,
    underlying_closed: Vec<u64>,
}

impl Masks {
    fn build(d: &Digraph) -> Self {
        let n = d.n();
        let mut out_closed = vec![0u64; n];
        let mut in_open = vec![0u64; n];
        let mut adj_open = vec![0u64; n];
        let mut underlying_closed = vec![0u64; n];
        for v in 0..n {
            out_closed[v] = 1 << v;
            underlying_closed[v] = 1 << v;
            for &w in d.outs(v) {
                out_closed[v] |= 1 << w;
                adj_open[v] |= 1 << w;
                underlying_closed[v] |= 1 << w;
            }
            for &w in d.ins(v) {
                in_open[v] |= 1 << w;
                adj_open[v] |= 1 << w;
                underlying_closed[v] |= 1 << w;
            }
        }
        Self {
            n,
            out_closed,
            in_open,
            adj_open,
            underlying_closed,
        }
    }

    fn packing(&self, b: u64) -> bool {
        (0..self.n).all(|v| (self.out_closed[v] & b).count_ones() <= 1)
    }

    fn dominating(&self, s: u64) -> bool {
        (0..self.n).all(|v| s & (1 << v) != 0 || self.in_open[v] & s != 0)
    }

    fn total_dominating(&self, s: u64) -> bool {
        self.dominating(s)
            && (0..self.n).all(|v| s & (1 << v) == 0 || self.adj_open[v] & s != 0)
    }

    fn open_dominating(&self, s: u64) -> bool {
        (0..self.n).all(|v| self.in_open[v] & s != 0)
    }

    fn undirected_dominating(&self, s: u64) -> bool {
        (0..self.n).all(|v| self.underlying_closed[v] & s != 0)
    }

    fn undirected_packing(&self, b: u64) -> bool {
        (0..self.n).all(|v| (self.underlying_closed[v] & b).count_ones() <= 1)
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// First `k`-subset of `{0..n}` accepted by `test`, enumerated in
/// lexicographic order of the sorted member tuple.
fn first_feasible(n: usize, k: usize, mut test: impl FnMut(u64) -> bool) -> Option<u64> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | (1 << i));
        if test(mask) {
            return Some(mask);
        }
        if !next_combination(&mut idx, n) {
            return None;
        }
    }
}

fn set_of(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask & (1 << v) != 0).collect()
}

fn guard_check(d: &Digraph, guard: usize) -> Result<()> {
    let limit = guard.min(63);
    if d.n() > limit {
        return Err(Error::GuardExceeded {
            n: d.n(),
            guard: limit,
        });
    }
    Ok(())
}

fn minimize(d: &Digraph, guard: usize, test: impl Fn(&Masks, u64) -> bool) -> Result<Solution> {
    guard_check(d, guard)?;
    let masks = Masks::build(d);
    for k in 0..=d.n() {
        if let Some(mask) = first_feasible(d.n(), k, |m| test(&masks, m)) {
            return Ok((k, set_of(mask)));
        }
    }
    unreachable!("the full vertex set is always feasible for the minimized predicates")
}

fn maximize(d: &Digraph, guard: usize, test: impl Fn(&Masks, u64) -> bool) -> Result<Solution> {
    guard_check(d, guard)?;
    let masks = Masks::build(d);
    for k in (0..=d.n()).rev() {
        if let Some(mask) = first_feasible(d.n(), k, |m| test(&masks, m)) {
            return Ok((k, set_of(mask)));
        }
    }
    unreachable!("the empty set is always a packing")
}

// ---------------------------------------------------------------------------
// exact solvers

/// Maximum packing number with a witness.
pub fn rho_exact(d: &Digraph) -> Result<Solution> {
    rho_exact_within(d, DEFAULT_SOLVER_GUARD)
}

pub fn rho_exact_within(d: &Digraph, guard: usize) -> Result<Solution> {
    let sol = maximize(d, guard, |m, b| m.packing(b))?;
    debug_assert!(is_packing(d, &sol.1));
    Ok(sol)
}

/// Domination number with a witness.
pub fn gamma_exact(d: &Digraph) -> Result<Solution> {
    gamma_exact_within(d, DEFAULT_SOLVER_GUARD)
}

pub fn gamma_exact_within(d: &Digraph, guard: usize) -> Result<Solution> {
    let sol = minimize(d, guard, |m, s| m.dominating(s))?;
    debug_assert!(is_dominating(d, &sol.1));
    Ok(sol)
}

/// Total domination number with a witness; `None` when the underlying graph
/// has an isolated vertex, in which case no total dominating set exists.
pub fn gamma_t_exact(d: &Digraph) -> Result<Option<Solution>> {
    gamma_t_exact_within(d, DEFAULT_SOLVER_GUARD)
}

pub fn gamma_t_exact_within(d: &Digraph, guard: usize) -> Result<Option<Solution>> {
    guard_check(d, guard)?;
    if (0..d.n()).any(|v| d.underlying_degree(v) == 0) {
        return Ok(None);
    }
    let sol = minimize(d, guard, |m, s| m.total_dominating(s))?;
    debug_assert!(is_total_dominating(d, &sol.1));
    Ok(Some(sol))
}

/// Open domination number with a witness; `None` when some vertex has
/// in-degree 0, in which case no open dominating set exists.
pub fn gamma_o_exact(d: &Digraph) -> Result<Option<Solution>> {
    gamma_o_exact_within(d, DEFAULT_SOLVER_GUARD)
}

pub fn gamma_o_exact_within(d: &Digraph, guard: usize) -> Result<Option<Solution>> {
    guard_check(d, guard)?;
    if (0..d.n()).any(|v| d.in_degree(v) == 0) {
        return Ok(None);
    }
    let sol = minimize(d, guard, |m, s| m.open_dominating(s))?;
    debug_assert!(is_open_dominating(d, &sol.1));
    Ok(Some(sol))
}

/// Undirected domination number of a symmetric digraph.
pub fn undirected_gamma_exact(g: &Digraph) -> Result<Solution> {
    undirected_gamma_exact_within(g, DEFAULT_SOLVER_GUARD)
}

pub fn undirected_gamma_exact_within(g: &Digraph, guard: usize) -> Result<Solution> {
    if let Some((u, v)) = g.first_asymmetric_arc() {
        return Err(Error::NotSymmetric(u, v));
    }
    let sol = minimize(g, guard, |m, s| m.undirected_dominating(s))?;
    debug_assert!(is_undirected_dominating(g, &sol.1));
    Ok(sol)
}

/// Undirected 2-packing number of a symmetric digraph.
pub fn undirected_rho_exact(g: &Digraph) -> Result<Solution> {
    undirected_rho_exact_within(g, DEFAULT_SOLVER_GUARD)
}

pub fn undirected_rho_exact_within(g: &Digraph, guard: usize) -> Result<Solution> {
    if let Some((u, v)) = g.first_asymmetric_arc() {
        return Err(Error::NotSymmetric(u, v));
    }
    let sol = maximize(g, guard, |m, b| m.undirected_packing(b))?;
    debug_assert!(is_undirected_packing(g, &sol.1));
    Ok(sol)
}

// ---------------------------------------------------------------------------
// closed-form parameters

/// Out-Slater number: the least `k >= 1` such that `floor(k/2)` plus the `k`
/// largest out-degrees reaches the order. `None` when even `k = n` falls
/// short.
pub fn slater_out(d: &Digraph) -> Option<usize> {
    let n = d.n();
    let mut degs: Vec<usize> = (0..n).map(|v| d.out_degree(v)).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    let mut sum = 0usize;
    for k in 1..=n {
        sum += degs[k - 1];
        if k / 2 + sum >= n {
            return Some(k);
        }
    }
    None
}

/// Degree-based lower bound on the packing number:
/// `(n + Δ - δ + (Δ⁺-1)(Δ⁻-δ*)) / (1 + Δ + Δ⁻(Δ⁺-1))`.
pub fn rho_lower_bound(d: &Digraph) -> Rational64 {
    let s = d.degree_stats();
    let (max_out, max_in) = (s.max_out as i64, s.max_in as i64);
    let (min_u, max_u) = (s.min_underlying as i64, s.max_underlying as i64);
    let delta_star = s.delta_star as i64;
    let numer = d.n() as i64 + max_u - min_u + (max_out - 1) * (max_in - delta_star);
    let denom = 1 + max_u + max_in * (max_out - 1);
    Rational64::new(numer, denom)
}

/// Constructive packing behind the lower bound: repeatedly take a vertex of
/// minimum underlying degree in the remaining digraph (minimum in-degree,
/// then lowest id, as tie-breaks) and delete its closed underlying
/// neighborhood together with all out-neighbors of its in-neighbors, both
/// taken in the original digraph. The result is always a packing of size at
/// least [`rho_lower_bound`].
pub fn greedy_packing(d: &Digraph) -> VertexSet {
    let n = d.n();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut chosen: Vec<usize> = Vec::new();
    while remaining > 0 {
        let u = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| {
                let und = d
                    .underlying_neighbors(v)
                    .iter()
                    .filter(|&w| alive[w])
                    .count();
                let ind = d.ins(v).iter().filter(|&&w| alive[w]).count();
                (und, ind, v)
            })
            .unwrap();
        chosen.push(u);
        let mut kill: Vec<usize> = vec![u];
        kill.extend(d.underlying_neighbors(u).iter());
        for &v in d.ins(u) {
            kill.extend(d.outs(v).iter().copied());
        }
        for w in kill {
            if alive[w] {
                alive[w] = false;
                remaining -= 1;
            }
        }
    }
    let set: VertexSet = chosen.into_iter().collect();
    debug_assert!(is_packing(d, &set));
    set
}

// ---------------------------------------------------------------------------
// report

/// All parameters of a digraph with their witnesses.
#[derive(Debug, Clone)]
pub struct ParameterReport {
    pub rho: Solution,
    pub gamma: Solution,
    /// `None` when the underlying graph has an isolated vertex.
    pub gamma_t: Option<Solution>,
    /// `None` when some vertex has in-degree 0.
    pub gamma_o: Option<Solution>,
    pub slater_out: Option<usize>,
    pub stats: crate::digraph::DegreeStats,
    pub rho_lower_bound: Rational64,
}

impl ParameterReport {
    pub fn compute(d: &Digraph, guard: usize) -> Result<Self> {
        Ok(Self {
            rho: rho_exact_within(d, guard)?,
            gamma: gamma_exact_within(d, guard)?,
            gamma_t: gamma_t_exact_within(d, guard)?,
            gamma_o: gamma_o_exact_within(d, guard)?,
            slater_out: slater_out(d),
            stats: d.degree_stats(),
            rho_lower_bound: rho_lower_bound(d),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn packing_predicate_examples() {
        let c3 = Digraph::cycle(3);
        assert!(is_packing(&c3, &set(&[0])));
        assert!(!is_packing(&c3, &set(&[0, 1])));
        assert!(is_packing(&Digraph::cycle(4), &set(&[0, 2])));
    }

    #[test]
    fn dominating_predicate_examples() {
        let c3 = Digraph::cycle(3);
        assert!(is_dominating(&c3, &set(&[0, 1])));
        assert!(!is_dominating(&c3, &set(&[0])));
        assert!(is_dominating(&c3, &VertexSet::full(3)));
    }

    #[test]
    fn total_dominating_predicate_examples() {
        let p4 = Digraph::path(4);
        assert!(is_total_dominating(&p4, &set(&[0, 1, 2])));
        assert!(!is_total_dominating(&p4, &set(&[0, 2])));
        assert!(is_total_dominating(&Digraph::path(2), &set(&[0, 1])));
    }

    #[test]
    fn open_dominating_predicate_examples() {
        let c3 = Digraph::cycle(3);
        assert!(is_open_dominating(&c3, &VertexSet::full(3)));
        assert!(!is_open_dominating(&c3, &set(&[0, 1])));
        assert!(!is_open_dominating(&Digraph::star(4), &set(&[0])));
    }

    #[test]
    fn rho_exact_examples() {
        assert_eq!(rho_exact(&Digraph::cycle(3)).unwrap().0, 1);
        assert_eq!(rho_exact(&Digraph::cycle(4)).unwrap(), (2, set(&[0, 2])));
        assert_eq!(rho_exact(&Digraph::new(1, &[]).unwrap()).unwrap().0, 1);
        // tournaments have packing number 1
        let t = Digraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(rho_exact(&t).unwrap().0, 1);
    }

    #[test]
    fn gamma_exact_examples() {
        assert_eq!(gamma_exact(&Digraph::star(5)).unwrap(), (1, set(&[0])));
        assert_eq!(gamma_exact(&Digraph::cycle(3)).unwrap().0, 2);
        assert_eq!(gamma_exact(&Digraph::cycle(4)).unwrap().0, 2);
    }

    #[test]
    fn gamma_t_exact_examples() {
        assert_eq!(gamma_t_exact(&Digraph::star(5)).unwrap().unwrap().0, 2);
        assert_eq!(gamma_t_exact(&Digraph::path(4)).unwrap().unwrap().0, 3);
        let isolated = Digraph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(gamma_t_exact(&isolated).unwrap(), None);
    }

    #[test]
    fn gamma_o_exact_examples() {
        assert_eq!(gamma_o_exact(&Digraph::cycle(3)).unwrap().unwrap().0, 3);
        assert_eq!(gamma_o_exact(&Digraph::cycle(4)).unwrap().unwrap().0, 4);
        assert_eq!(gamma_o_exact(&Digraph::star(4)).unwrap(), None);
        assert_eq!(gamma_o_exact(&Digraph::path(3)).unwrap(), None);
    }

    #[test]
    fn undirected_solvers_examples() {
        let p2 = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(undirected_gamma_exact(&p2).unwrap().0, 1);
        assert_eq!(undirected_rho_exact(&p2).unwrap().0, 1);

        let c4u = Digraph::new(
            4,
            &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)],
        )
        .unwrap();
        assert_eq!(undirected_gamma_exact(&c4u).unwrap().0, 2);
        assert_eq!(undirected_rho_exact(&c4u).unwrap().0, 1);

        let k13 = {
            let mut arcs = Vec::new();
            for v in 1..4 {
                arcs.push((0, v));
                arcs.push((v, 0));
            }
            Digraph::new(4, &arcs).unwrap()
        };
        assert_eq!(undirected_gamma_exact(&k13).unwrap().0, 1);
        assert_eq!(undirected_rho_exact(&k13).unwrap().0, 1);

        assert_eq!(
            undirected_gamma_exact(&Digraph::path(2)),
            Err(Error::NotSymmetric(0, 1))
        );
    }

    #[test]
    fn guard_is_enforced() {
        let d = Digraph::new(21, &[]).unwrap();
        assert_eq!(
            rho_exact(&d),
            Err(Error::GuardExceeded { n: 21, guard: 20 })
        );
        assert!(rho_exact_within(&d, 25).is_ok());
    }

    #[test]
    fn slater_out_examples() {
        assert_eq!(slater_out(&Digraph::star(5)), Some(2));
        assert_eq!(slater_out(&Digraph::path(4)), Some(3));
        assert_eq!(slater_out(&Digraph::path(2)), Some(2));
        assert_eq!(slater_out(&Digraph::new(3, &[]).unwrap()), None);
    }

    #[test]
    fn rho_lower_bound_examples() {
        assert_eq!(rho_lower_bound(&Digraph::star(5)), Rational64::new(1, 1));
        assert_eq!(rho_lower_bound(&Digraph::cycle(4)), Rational64::new(4, 3));
        assert_eq!(rho_lower_bound(&Digraph::cycle(3)), Rational64::new(1, 1));
        // arcless: bound equals the order
        assert_eq!(rho_lower_bound(&Digraph::new(4, &[]).unwrap()), Rational64::new(4, 1));
    }

    #[test]
    fn greedy_packing_examples() {
        let s5 = Digraph::star(5);
        let b = greedy_packing(&s5);
        assert_eq!(b.len(), 1);
        assert!(is_packing(&s5, &b));

        let arcless = Digraph::new(4, &[]).unwrap();
        assert_eq!(greedy_packing(&arcless), VertexSet::full(4));

        let c4 = Digraph::cycle(4);
        let b = greedy_packing(&c4);
        assert!(b.len() >= 2);
        assert!(is_packing(&c4, &b));
    }

    #[test]
    fn witnesses_are_lexicographically_least() {
        // gamma(C4) = 2 and {0, 1} is dominating: 2 <- 1, 3 <- ... no.
        // {0, 1}: vertex 3 has in-neighbor 2, not in the set. {0, 2} works.
        assert_eq!(gamma_exact(&Digraph::cycle(4)).unwrap().1, set(&[0, 2]));
        assert_eq!(rho_exact(&Digraph::cycle(3)).unwrap().1, set(&[0]));
    }

    #[test]
    fn report_computes_all_fields() {
        let r = ParameterReport::compute(&Digraph::cycle(3), 20).unwrap();
        assert_eq!(r.rho.0, 1);
        assert_eq!(r.gamma.0, 2);
        assert_eq!(r.gamma_t.unwrap().0, 2);
        assert_eq!(r.gamma_o.unwrap().0, 3);
        assert_eq!(r.slater_out, Some(2));
        assert_eq!(r.rho_lower_bound, Rational64::new(1, 1));
    }

    #[test]
    fn empty_digraph_is_handled() {
        let d = Digraph::new(0, &[]).unwrap();
        assert_eq!(rho_exact(&d).unwrap(), (0, VertexSet::new()));
        assert_eq!(gamma_exact(&d).unwrap(), (0, VertexSet::new()));
    }
}
