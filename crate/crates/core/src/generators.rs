//! Constructions of the digraph families studied here, each carrying the
//! parameter values the construction certifies. Random generators are
//! deterministic in `(parameters, seed)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Star,
    Path,
    Cycle,
    Tournament,
    RootedTree,
    DirectedTree,
    Contrafunctional,
    Theta,
    Sigma,
    SlaterTree,
    PhiMember,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Tournament => "tournament",
            Family::RootedTree => "rooted-tree",
            Family::DirectedTree => "directed-tree",
            Family::Contrafunctional => "contrafunctional",
            Family::Theta => "theta",
            Family::Sigma => "sigma",
            Family::SlaterTree => "slater-tree",
            Family::PhiMember => "phi-member",
        }
    }
}

/// Parameter values certified by a construction; fields the construction
/// does not pin stay `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExpectedParams {
    pub rho: Option<usize>,
    pub gamma: Option<usize>,
    pub gamma_t: Option<usize>,
    pub gamma_o: Option<usize>,
    pub slater_out: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub digraph: Digraph,
    pub family: Family,
    pub expected: ExpectedParams,
    pub seed: Option<u64>,
}

fn require_order(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::OrderTooSmall { n, min });
    }
    Ok(())
}

/// Directed star: root 0 with `n - 1` out-leaves. Certifies `rho = gamma = 1`
/// and, from order 2 on, `gamma_t = slater_out = 2`.
pub fn directed_star(n: usize) -> Result<GeneratedInstance> {
    require_order(n, 1)?;
    let two = (n >= 2).then_some(2);
    Ok(GeneratedInstance {
        digraph: Digraph::star(n),
        family: Family::Star,
        expected: ExpectedParams {
            rho: Some(1),
            gamma: Some(1),
            gamma_t: two,
            slater_out: two,
            ..Default::default()
        },
        seed: None,
    })
}

/// Directed path; certifies `rho = gamma = ceil(n/2)`.
pub fn directed_path(n: usize) -> Result<GeneratedInstance> {
    require_order(n, 1)?;
    Ok(GeneratedInstance {
        digraph: Digraph::path(n),
        family: Family::Path,
        expected: ExpectedParams {
            rho: Some(n.div_ceil(2)),
            gamma: Some(n.div_ceil(2)),
            ..Default::default()
        },
        seed: None,
    })
}

/// Directed cycle on `n >= 3` vertices; certifies `rho = floor(n/2)`,
/// `gamma = ceil(n/2)` and `gamma_o = n`.
pub fn directed_cycle(n: usize) -> Result<GeneratedInstance> {
    require_order(n, 3)?;
    Ok(GeneratedInstance {
        digraph: Digraph::cycle(n),
        family: Family::Cycle,
        expected: ExpectedParams {
            rho: Some(n / 2),
            gamma: Some(n.div_ceil(2)),
            gamma_o: Some(n),
            ..Default::default()
        },
        seed: None,
    })
}

fn random_parents(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    (1..n).map(|i| rng.gen_range(0..i)).collect()
}

/// Uniform parent-array rooted tree: vertex `i >= 1` picks its parent among
/// `0..i`.
pub fn random_rooted_tree(n: usize, seed: u64) -> Result<GeneratedInstance> {
    require_order(n, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs: Vec<(usize, usize)> = random_parents(n, &mut rng)
        .into_iter()
        .enumerate()
        .map(|(i, p)| (p, i + 1))
        .collect();
    Ok(GeneratedInstance {
        digraph: Digraph::new(n, &arcs)?,
        family: Family::RootedTree,
        expected: ExpectedParams::default(),
        seed: Some(seed),
    })
}

/// Random tree skeleton with every edge oriented by a coin flip.
pub fn random_directed_tree(n: usize, seed: u64) -> Result<GeneratedInstance> {
    require_order(n, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parents = random_parents(n, &mut rng);
    let arcs: Vec<(usize, usize)> = parents
        .into_iter()
        .enumerate()
        .map(|(i, p)| if rng.gen() { (p, i + 1) } else { (i + 1, p) })
        .collect();
    Ok(GeneratedInstance {
        digraph: Digraph::new(n, &arcs)?,
        family: Family::DirectedTree,
        expected: ExpectedParams::default(),
        seed: Some(seed),
    })
}

/// Random tournament: one arc per pair, orientation by coin flip. Certifies
/// `rho = 1`.
pub fn random_tournament(n: usize, seed: u64) -> Result<GeneratedInstance> {
    require_order(n, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            arcs.push(if rng.gen() { (u, v) } else { (v, u) });
        }
    }
    Ok(GeneratedInstance {
        digraph: Digraph::new(n, &arcs)?,
        family: Family::Tournament,
        expected: ExpectedParams {
            rho: Some(1),
            ..Default::default()
        },
        seed: Some(seed),
    })
}

/// Random connected contrafunctional digraph: a random rooted tree plus one
/// arc from a random non-root vertex back to the root.
pub fn random_contrafunctional(n: usize, seed: u64) -> Result<GeneratedInstance> {
    require_order(n, 3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs: Vec<(usize, usize)> = random_parents(n, &mut rng)
        .into_iter()
        .enumerate()
        .map(|(i, p)| (p, i + 1))
        .collect();
    arcs.push((rng.gen_range(1..n), 0));
    Ok(GeneratedInstance {
        digraph: Digraph::new(n, &arcs)?,
        family: Family::Contrafunctional,
        expected: ExpectedParams::default(),
        seed: Some(seed),
    })
}

/// Random member of the `gamma = ceil(n/2)` family of rooted trees: a random
/// skeleton with one pendant leaf per vertex and, for odd orders, a fresh
/// root above. Certifies `rho = gamma = ceil(n/2)`.
pub fn phi_member(n: usize, seed: u64) -> Result<GeneratedInstance> {
    require_order(n, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = n / 2;
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(n - 1);
    let skeleton = random_parents(m, &mut rng);
    if n % 2 == 0 {
        // skeleton 0..m, pendants m..2m
        for (i, p) in skeleton.into_iter().enumerate() {
            arcs.push((p, i + 1));
        }
        for v in 0..m {
            arcs.push((v, m + v));
        }
    } else {
        // root 0, skeleton 1..=m, pendants m+1..=2m
        arcs.push((0, 1));
        for (i, p) in skeleton.into_iter().enumerate() {
            arcs.push((p + 1, i + 2));
        }
        for v in 0..m {
            arcs.push((v + 1, m + 1 + v));
        }
    }
    Ok(GeneratedInstance {
        digraph: Digraph::new(n, &arcs)?,
        family: Family::PhiMember,
        expected: ExpectedParams {
            rho: Some(n.div_ceil(2)),
            gamma: Some(n.div_ceil(2)),
            ..Default::default()
        },
        seed: Some(seed),
    })
}

/// Seeded Erdos-Renyi style digraph: each ordered pair carries an arc with
/// probability `arc_prob`.
pub fn random_digraph(n: usize, arc_prob: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen::<f64>() < arc_prob {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, &arcs).expect("generated arcs are valid")
}

fn add_extra_arcs(
    arcs: &mut Vec<(usize, usize)>,
    n: usize,
    outside_start: usize,
    out_cap: usize,
    rng: &mut ChaCha8Rng,
) {
    let mut out_deg = vec![0usize; n];
    let mut present: std::collections::HashSet<(usize, usize)> = arcs.iter().copied().collect();
    for &(u, _) in arcs.iter() {
        out_deg[u] += 1;
    }
    let budget = 4 * n;
    for _ in 0..budget {
        let src = rng.gen_range(outside_start..n);
        let dst = rng.gen_range(0..n);
        if src == dst || out_deg[src] >= out_cap || present.contains(&(src, dst)) {
            continue;
        }
        present.insert((src, dst));
        arcs.push((src, dst));
        out_deg[src] += 1;
    }
}

/// Total-domination extremal family: `r` arcs `(u_i, v_i)` on vertices
/// `0..2r` (with `u_i = 2i`, `v_i = 2i + 1`), `k` private out-neighbors for
/// each `u_i` and `k + 1` for each `v_i`. With `extra_arcs`, seeded arcs
/// leaving outside vertices are added under the out-degree cap `k + 1`.
///
/// The order is `r(2k + 3)`, the maximum out-degree `k + 1`, and the
/// construction certifies `gamma_t = 2r = 2n/(2 max_out + 1)`.
pub fn theta_instance(r: usize, k: usize, extra_arcs: bool, seed: u64) -> Result<GeneratedInstance> {
    if r < 1 {
        return Err(Error::InvalidParameter("theta needs r >= 1".into()));
    }
    let n = r * (2 * k + 3);
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut next = 2 * r;
    for i in 0..r {
        arcs.push((2 * i, 2 * i + 1));
        for _ in 0..k {
            arcs.push((2 * i, next));
            next += 1;
        }
        for _ in 0..=k {
            arcs.push((2 * i + 1, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    if extra_arcs {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        add_extra_arcs(&mut arcs, n, 2 * r, k + 1, &mut rng);
    }
    Ok(GeneratedInstance {
        digraph: Digraph::new(n, &arcs)?,
        family: Family::Theta,
        expected: ExpectedParams {
            gamma_t: Some(2 * r),
            ..Default::default()
        },
        seed: extra_arcs.then_some(seed),
    })
}

/// Open-domination extremal family over a connected contrafunctional core:
/// pads every core vertex up to out-degree `k` with private out-neighbors.
/// With `extra_arcs`, seeded arcs leaving outside vertices are added under
/// the out-degree cap `k`.
///
/// The order is `base.n() * k`, the maximum out-degree `k`, and the
/// construction certifies `gamma_o = base.n() = n/max_out`.
pub fn sigma_instance(
    base: &Digraph,
    k: usize,
    extra_arcs: bool,
    seed: u64,
) -> Result<GeneratedInstance> {
    let b = base.n();
    if b == 0 || !base.is_connected() || (0..b).any(|v| base.in_degree(v) != 1) {
        return Err(Error::NotContrafunctional);
    }
    let max_out = (0..b).map(|v| base.out_degree(v)).max().unwrap();
    if k < max_out {
        return Err(Error::InvalidParameter(format!(
            "sigma needs k >= max out-degree of the base ({max_out})"
        )));
    }
    let n = b * k;
    let mut arcs: Vec<(usize, usize)> = base.arcs().to_vec();
    let mut next = b;
    for v in 0..b {
        for _ in 0..k - base.out_degree(v) {
            arcs.push((v, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    if extra_arcs {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        add_extra_arcs(&mut arcs, n, b, k, &mut rng);
    }
    Ok(GeneratedInstance {
        digraph: Digraph::new(n, &arcs)?,
        family: Family::Sigma,
        expected: ExpectedParams {
            gamma_o: Some(b),
            ..Default::default()
        },
        seed: extra_arcs.then_some(seed),
    })
}

/// Rooted tree realizing out-Slater number `a` with total domination number
/// `a + b`: a directed path on `a` vertices with `2a` leaves under each, and
/// the first pendant arc of each of the first `b` path vertices subdivided.
///
/// The order is `2a^2 + a + b`; certifies `slater_out = a`, `gamma_t = a + b`.
pub fn slater_realization_tree(a: usize, b: usize) -> Result<GeneratedInstance> {
    if a < 2 {
        return Err(Error::InvalidParameter("slater tree needs a >= 2".into()));
    }
    if b + 1 > a / 2 {
        return Err(Error::InvalidParameter(format!(
            "slater tree needs b <= floor(a/2) - 1 = {}",
            a / 2 - 1
        )));
    }
    let n = 2 * a * a + a + b;
    let leaf = |i: usize, j: usize| a + 2 * a * i + j;
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(n - 1);
    for i in 1..a {
        arcs.push((i - 1, i));
    }
    for i in 0..a {
        for j in 0..2 * a {
            arcs.push((i, leaf(i, j)));
        }
    }
    for i in 0..b {
        let w = 2 * a * a + a + i;
        let first = leaf(i, 0);
        arcs.retain(|&arc| arc != (i, first));
        arcs.push((i, w));
        arcs.push((w, first));
    }
    Ok(GeneratedInstance {
        digraph: Digraph::new(n, &arcs)?,
        family: Family::SlaterTree,
        expected: ExpectedParams {
            gamma_t: Some(a + b),
            slater_out: Some(a),
            ..Default::default()
        },
        seed: None,
    })
}
