use super::OracleError;
use crate::graph::{Graph, Node};

pub const SET_LIMIT: usize = 24;

/// Minimum vertex cover, maximum independent set and maximum clique sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetParameters {
    pub vc: usize,
    pub is: usize,
    pub clique: usize,
}

/// Branch on a maximum-degree node of `alive`: either drop it or take it and
/// drop its neighbours.
fn mis(adj: &[u64], alive: u64) -> u64 {
    if alive == 0 {
        return 0;
    }
    let mut best_v = 0;
    let mut best_deg = 0;
    let mut bits = alive;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (adj[v] & alive).count_ones();
        if d > best_deg {
            best_v = v;
            best_deg = d;
        }
    }
    if best_deg == 0 {
        return alive;
    }
    let take = (1u64 << best_v) | mis(adj, alive & !(1u64 << best_v) & !adj[best_v]);
    if best_deg == 1 {
        // Every live component is an edge or a single node.
        return take;
    }
    let skip = mis(adj, alive & !(1u64 << best_v));
    if skip.count_ones() > take.count_ones() {
        skip
    } else {
        take
    }
}

fn check(g: &Graph) -> Result<(), OracleError> {
    let n = g.node_count();
    if n > SET_LIMIT {
        return Err(OracleError::TooLarge { n, limit: SET_LIMIT });
    }
    Ok(())
}

fn full(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        (1u64 << n) - 1
    }
}

fn to_nodes(mask: u64) -> Vec<Node> {
    (0..64).filter(|&v| mask >> v & 1 == 1).map(|v| v as Node + 1).collect()
}

fn mis_mask(g: &Graph) -> Result<u64, OracleError> {
    check(g)?;
    Ok(mis(&g.adjacency_masks(), full(g.node_count())))
}

/// A maximum independent set, sorted.
pub fn max_independent_set(g: &Graph) -> Result<Vec<Node>, OracleError> {
    mis_mask(g).map(to_nodes)
}

/// A minimum vertex cover: the complement of a maximum independent set.
pub fn min_vertex_cover(g: &Graph) -> Result<Vec<Node>, OracleError> {
    let s = mis_mask(g)?;
    Ok(to_nodes(full(g.node_count()) & !s))
}

/// A maximum clique: a maximum independent set of the complement.
pub fn max_clique(g: &Graph) -> Result<Vec<Node>, OracleError> {
    check(g)?;
    let n = g.node_count();
    let comp: Vec<u64> = g.adjacency_masks().iter().enumerate().map(|(v, m)| full(n) & !m & !(1u64 << v)).collect();
    Ok(to_nodes(mis(&comp, full(n))))
}

pub fn set_parameters(g: &Graph) -> Result<SetParameters, OracleError> {
    let is = max_independent_set(g)?.len();
    let vc = min_vertex_cover(g)?.len();
    let clique = max_clique(g)?.len();
    assert_eq!(vc + is, g.node_count());
    Ok(SetParameters { vc, is, clique })
}
