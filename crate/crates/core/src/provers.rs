//! Certificate construction. Provers are computationally unbounded, but where a
//! cheap heuristic already meets the threshold it is used before any exact
//! (exponential) search. Every prover is deterministic.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::cert::{self, Certificate, Scheme};
use crate::graph::{Graph, Node};
use crate::oracles::{self, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProveError {
    #[error("the instance does not satisfy the certified property")]
    NotCertifiable,
    #[error(transparent)]
    TooLarge(#[from] OracleError),
}

/// Builds the honest certificate for `scheme` on `(g, k)`.
pub fn prove(scheme: Scheme, g: &Graph, k: usize) -> Result<Certificate, ProveError> {
    match scheme {
        Scheme::MmAtLeastList => prove_mm_atleast_list(g, k),
        Scheme::MmAtLeastColoring => prove_mm_atleast_coloring(g, k),
        Scheme::MmAtMost => prove_mm_atmost(g, k),
        Scheme::DegAtMost => prove_deg_atmost(g, k),
        Scheme::DegAtLeast => prove_deg_atleast(g, k),
        Scheme::DiamAtLeast => prove_diam_atleast(g, k),
        Scheme::ColoringAtMost => prove_coloring_atmost(g, k),
        Scheme::IsAtLeast | Scheme::CliqueAtLeast | Scheme::VcAtMost => prove_set_cert(g, k, scheme),
        Scheme::EqMatching | Scheme::EqDegeneracy => prove_equality(scheme, g, k),
    }
}

/// The first `k` edges of a maximum matching.
pub fn prove_mm_atleast_list(g: &Graph, k: usize) -> Result<Certificate, ProveError> {
    let m = oracles::maximum_matching(g);
    if m.len() < k {
        return Err(ProveError::NotCertifiable);
    }
    Ok(cert::encode_matching_list(g.node_count(), &m[..k]))
}

/// Colours `k` matching edges so that they are the only monochromatic edges,
/// using at most `max(1, 2Δ − 1)` colours. Returned colours are 1-based.
pub fn matching_coloring(g: &Graph, k: usize) -> Result<Vec<u32>, ProveError> {
    let m = oracles::maximum_matching(g);
    if m.len() < k {
        return Err(ProveError::NotCertifiable);
    }
    let adj = g.adjacency();
    let palette = (2 * g.max_degree()).saturating_sub(1).max(1) as u32;
    let mut color = vec![0u32; g.node_count()];
    let smallest_free = |taken: &HashSet<u32>| (1..=palette).find(|c| !taken.contains(c));
    for e in &m[..k] {
        let (u, v) = (e.u() as usize - 1, e.v() as usize - 1);
        let taken: HashSet<u32> =
            adj[u].iter().chain(&adj[v]).filter(|&&w| w != u && w != v).map(|&w| color[w]).collect();
        let c = smallest_free(&taken).expect("at most 2Δ − 2 colours are blocked");
        color[u] = c;
        color[v] = c;
    }
    for w in 0..g.node_count() {
        if color[w] == 0 {
            let taken: HashSet<u32> = adj[w].iter().map(|&x| color[x]).collect();
            // Only when Δ <= 1 can every colour be blocked; one colour is then fine.
            color[w] = smallest_free(&taken).unwrap_or(1);
        }
    }
    Ok(color)
}

pub fn prove_mm_atleast_coloring(g: &Graph, k: usize) -> Result<Certificate, ProveError> {
    Ok(cert::encode_matching_coloring(&matching_coloring(g, k)?))
}

/// A Tutte–Berge witness `U`: the exhaustive minimiser on small graphs, the
/// Gallai–Edmonds set `A` otherwise.
pub fn prove_mm_atmost(g: &Graph, k: usize) -> Result<Certificate, ProveError> {
    let n = g.node_count();
    let witness = if n <= oracles::TUTTE_BERGE_LIMIT {
        let (value, u) = oracles::tutte_berge(g)?;
        if value > k {
            return Err(ProveError::NotCertifiable);
        }
        u
    } else {
        let ge = oracles::gallai_edmonds(g);
        if ge.matching.len() > k {
            return Err(ProveError::NotCertifiable);
        }
        ge.a
    };
    let mut in_u = vec![false; n];
    for v in witness {
        in_u[v as usize - 1] = true;
    }
    Ok(cert::encode_tutte_berge(&in_u))
}

/// Positions in the peel order: `pi[v - 1]` is 1 for the first node removed.
/// Each node then has at most `degeneracy` neighbours with a larger position.
pub fn peel_positions(g: &Graph) -> (usize, Vec<u32>) {
    let peel = oracles::peel(g);
    let mut pi = vec![0u32; g.node_count()];
    for (i, &v) in peel.order.iter().enumerate() {
        pi[v as usize - 1] = i as u32 + 1;
    }
    (peel.degeneracy, pi)
}

pub fn prove_deg_atmost(g: &Graph, k: usize) -> Result<Certificate, ProveError> {
    let (d, pi) = peel_positions(g);
    if d > k {
        return Err(ProveError::NotCertifiable);
    }
    Ok(cert::encode_peel_order(&pi))
}

pub fn prove_deg_atleast(g: &Graph, k: usize) -> Result<Certificate, ProveError> {
    let core = oracles::k_core(g, k);
    if k >= 1 && core.is_empty() {
        return Err(ProveError::NotCertifiable);
    }
    Ok(cert::encode_core_subset(g.node_count(), &core))
}

/// Labels `min(dist(u, ·), k + 1)` from the first node `u` whose eccentricity
/// reaches `k` (or that cannot reach some node).
pub fn distance_labels(g: &Graph, k: usize) -> Result<Vec<u64>, ProveError> {
    let adj = g.adjacency();
    let cap = k as u64 + 1;
    for u in g.nodes() {
        let dist = oracles::bfs(&adj, u);
        let far = dist.iter().any(|d| d.map_or(true, |d| d >= k));
        if far {
            return Ok(dist.into_iter().map(|d| d.map_or(cap, |d| (d as u64).min(cap))).collect());
        }
    }
    Err(ProveError::NotCertifiable)
}

pub fn prove_diam_atleast(g: &Graph, k: usize) -> Result<Certificate, ProveError> {
    if g.node_count() == 0 {
        return if k == 0 { Ok(cert::encode_distance_labels(k, &[])) } else { Err(ProveError::NotCertifiable) };
    }
    Ok(cert::encode_distance_labels(k, &distance_labels(g, k)?))
}

/// DSatur greedy colouring (1-based colours). Optimal on bipartite graphs.
pub fn dsatur(g: &Graph) -> Vec<u32> {
    let adj = g.adjacency();
    let n = adj.len();
    let mut color = vec![0u32; n];
    let mut seen: Vec<HashSet<u32>> = vec![HashSet::new(); n];
    let key = |v: usize, seen: &[HashSet<u32>]| (Reverse(seen[v].len()), Reverse(adj[v].len()), v);
    let mut queue: BTreeSet<_> = (0..n).map(|v| key(v, &seen)).collect();
    while let Some((_, _, v)) = queue.pop_first() {
        let c = (1..).find(|c| !seen[v].contains(c)).unwrap();
        color[v] = c;
        for &u in &adj[v] {
            if color[u] == 0 && !seen[u].contains(&c) {
                queue.remove(&key(u, &seen));
                seen[u].insert(c);
                queue.insert(key(u, &seen));
            }
        }
    }
    color
}

pub fn prove_coloring_atmost(g: &Graph, k: usize) -> Result<Certificate, ProveError> {
    let greedy = dsatur(g);
    if greedy.iter().all(|&c| c as usize <= k) {
        return Ok(cert::encode_coloring(k, &greedy));
    }
    match oracles::colorable(g, k)? {
        Some(colors) => Ok(cert::encode_coloring(k, &colors)),
        None => Err(ProveError::NotCertifiable),
    }
}

/// Repeatedly takes a minimum-degree node and deletes its neighbourhood.
pub fn greedy_independent_set(g: &Graph) -> Vec<Node> {
    let adj = g.adjacency();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; adj.len()];
    let mut queue: BTreeSet<(usize, usize)> = (0..adj.len()).map(|v| (deg[v], v)).collect();
    let mut set = Vec::new();
    let kill = |v: usize, alive: &mut Vec<bool>, deg: &mut Vec<usize>, queue: &mut BTreeSet<(usize, usize)>| {
        alive[v] = false;
        queue.remove(&(deg[v], v));
        for &u in &adj[v] {
            if alive[u] {
                queue.remove(&(deg[u], u));
                deg[u] -= 1;
                queue.insert((deg[u], u));
            }
        }
    };
    while let Some(&(_, v)) = queue.first() {
        set.push(v as Node + 1);
        let nbrs: Vec<usize> = adj[v].iter().copied().filter(|&u| alive[u]).collect();
        kill(v, &mut alive, &mut deg, &mut queue);
        for u in nbrs {
            kill(u, &mut alive, &mut deg, &mut queue);
        }
    }
    set.sort_unstable();
    set
}

/// Repeatedly takes a maximum-degree node until no edge is left uncovered.
pub fn greedy_vertex_cover(g: &Graph) -> Vec<Node> {
    let adj = g.adjacency();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; adj.len()];
    let mut queue: BTreeSet<(Reverse<usize>, usize)> = (0..adj.len()).map(|v| (Reverse(deg[v]), v)).collect();
    let mut cover = Vec::new();
    while let Some((Reverse(d), v)) = queue.pop_first() {
        if d == 0 {
            break;
        }
        cover.push(v as Node + 1);
        alive[v] = false;
        for &u in &adj[v] {
            if alive[u] {
                queue.remove(&(Reverse(deg[u]), u));
                deg[u] -= 1;
                queue.insert((Reverse(deg[u]), u));
            }
        }
    }
    cover.sort_unstable();
    cover
}

/// Grows a clique from each node in turn (highest degree first), adding
/// neighbours in id order; stops at the first clique of size `k`.
pub fn greedy_clique(g: &Graph, k: usize) -> Vec<Node> {
    let adj = g.adjacency();
    let sets: Vec<HashSet<usize>> = adj.iter().map(|l| l.iter().copied().collect()).collect();
    let mut starts: Vec<usize> = (0..adj.len()).collect();
    starts.sort_by_key(|&v| (Reverse(adj[v].len()), v));
    let mut best: Vec<usize> = Vec::new();
    for s in starts {
        if adj[s].len() + 1 <= best.len() {
            break;
        }
        let mut clique = vec![s];
        for &u in &adj[s] {
            if clique.iter().all(|&w| sets[u].contains(&w)) {
                clique.push(u);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
        if best.len() >= k {
            break;
        }
    }
    let mut out: Vec<Node> = best.into_iter().map(|v| v as Node + 1).collect();
    out.sort_unstable();
    out
}

/// Witness for `is_atleast` / `clique_atleast` (exactly `k` nodes) or
/// `vc_atmost` (at most `k` nodes).
pub fn prove_set_cert(g: &Graph, k: usize, which: Scheme) -> Result<Certificate, ProveError> {
    let n = g.node_count();
    let set = match which {
        Scheme::IsAtLeast | Scheme::CliqueAtLeast => {
            if k > n {
                return Err(ProveError::NotCertifiable);
            }
            let greedy = if which == Scheme::IsAtLeast { greedy_independent_set(g) } else { greedy_clique(g, k) };
            let found = if greedy.len() >= k {
                greedy
            } else if which == Scheme::IsAtLeast {
                oracles::max_independent_set(g)?
            } else {
                oracles::max_clique(g)?
            };
            if found.len() < k {
                return Err(ProveError::NotCertifiable);
            }
            found[..k].to_vec()
        }
        Scheme::VcAtMost => {
            let greedy = greedy_vertex_cover(g);
            let found = if greedy.len() <= k { greedy } else { oracles::min_vertex_cover(g)? };
            if found.len() > k {
                return Err(ProveError::NotCertifiable);
            }
            found
        }
        other => panic!("{other} is not a node-set scheme"),
    };
    Ok(cert::encode_node_set(which, n, &set))
}

/// Pairs the honest `≤ k` and `≥ k` certificates.
pub fn prove_equality(scheme: Scheme, g: &Graph, k: usize) -> Result<Certificate, ProveError> {
    let (le, ge) = scheme.halves().expect("not an equality scheme");
    let at_most = prove(le, g, k)?;
    let at_least = prove(ge, g, k)?;
    Ok(cert::encode_equality(scheme, &at_most, &at_least))
}
