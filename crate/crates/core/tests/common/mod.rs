//! Brute-force reference computations, written independently of the library
//! oracles. All of them enumerate node subsets, so keep `n` small (≤ 16).

#![allow(dead_code, unused_imports)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use streamcert::graph::Graph;

/// Neighbour masks, bit `i` for node `i + 1`.
pub fn masks(g: &Graph) -> Vec<u32> {
    let mut m = vec![0u32; g.node_count()];
    for e in g.edges() {
        let (a, b) = (e.u() as usize - 1, e.v() as usize - 1);
        m[a] |= 1 << b;
        m[b] |= 1 << a;
    }
    m
}

/// Maximum matching by dynamic programming over node subsets.
pub fn matching(g: &Graph) -> usize {
    let n = g.node_count();
    let adj = masks(g);
    let mut best = vec![0u8; 1 << n];
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut b = best[rest];
        let mut cand = adj[v] as usize & rest;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            b = b.max(1 + best[rest & !(1 << u)]);
            cand &= cand - 1;
        }
        best[mask] = b;
    }
    best[(1 << n) - 1] as usize
}

/// Tutte–Berge minimum over every `U ⊆ V`.
pub fn tutte_berge(g: &Graph) -> usize {
    let n = g.node_count();
    let adj = masks(g);
    let mut best = usize::MAX;
    for u in 0u32..1 << n {
        let rest = ((1u64 << n) - 1) as u32 & !u;
        let mut seen = 0u32;
        let mut odd = 0;
        for s in 0..n {
            if rest >> s & 1 == 0 || seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u32 << s;
            loop {
                let mut grow = comp;
                let mut it = comp;
                while it != 0 {
                    let v = it.trailing_zeros() as usize;
                    grow |= adj[v] & rest;
                    it &= it - 1;
                }
                if grow == comp {
                    break;
                }
                comp = grow;
            }
            seen |= comp;
            odd += comp.count_ones() as usize % 2;
        }
        best = best.min((n + u.count_ones() as usize - odd) / 2);
    }
    best
}

/// Largest minimum degree over all induced subgraphs.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.node_count();
    let adj = masks(g);
    let mut best = 0;
    for s in 1u32..1 << n {
        let min = (0..n).filter(|&v| s >> v & 1 == 1).map(|v| (adj[v] & s).count_ones()).min().unwrap();
        best = best.max(min as usize);
    }
    best
}

/// Diameter by Floyd–Warshall; `None` when disconnected.
pub fn diameter(g: &Graph) -> Option<usize> {
    let n = g.node_count();
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for e in g.edges() {
        let (a, b) = (e.u() as usize - 1, e.v() as usize - 1);
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    (max < INF).then_some(max)
}

fn independent(adj: &[u32], s: u32) -> bool {
    (0..adj.len()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)
}

pub fn independence(g: &Graph) -> usize {
    let adj = masks(g);
    (0u32..1 << g.node_count()).filter(|&s| independent(&adj, s)).map(|s| s.count_ones() as usize).max().unwrap()
}

pub fn clique(g: &Graph) -> usize {
    let n = g.node_count();
    let full = ((1u64 << n) - 1) as u32;
    let co: Vec<u32> = masks(g).iter().enumerate().map(|(v, &m)| !m & full & !(1 << v)).collect();
    (0u32..1 << n).filter(|&s| independent(&co, s)).map(|s| s.count_ones() as usize).max().unwrap()
}

pub fn vertex_cover(g: &Graph) -> usize {
    g.node_count() - independence(g)
}

/// Chromatic number by inclusion–exclusion: `V` is covered by `k`
/// independent sets iff `Σ_S (−1)^{n−|S|} i(S)^k > 0`, where `i(S)` counts
/// independent subsets of `S`.
pub fn chromatic(g: &Graph) -> usize {
    let n = g.node_count();
    if n == 0 {
        return 0;
    }
    let adj = masks(g);
    let mut ind = vec![0i128; 1 << n];
    ind[0] = 1;
    for s in 1usize..1 << n {
        let v = s.trailing_zeros() as usize;
        let without = s & !(1 << v);
        ind[s] = ind[without] + ind[without & !(adj[v] as usize)];
    }
    (1..=n)
        .find(|&k| {
            let total: i128 = (0usize..1 << n)
                .map(|s| {
                    let sign = if (n - s.count_ones() as usize) % 2 == 0 { 1 } else { -1 };
                    sign * ind[s].pow(k as u32)
                })
                .sum();
            total > 0
        })
        .unwrap()
}

pub fn random_graph(seed: u64, max_n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.05..0.9);
    streamcert::generators::gnp(n, p, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use streamcert::generators;

    #[test]
    fn references_on_named_graphs() {
        let c5 = generators::cycle(5);
        assert_eq!((matching(&c5), tutte_berge(&c5), degeneracy(&c5), diameter(&c5)), (2, 2, 2, Some(2)));
        assert_eq!((chromatic(&c5), independence(&c5), clique(&c5), vertex_cover(&c5)), (3, 2, 2, 3));
        let k4 = generators::complete(4);
        assert_eq!((chromatic(&k4), clique(&k4), degeneracy(&k4)), (4, 4, 3));
        assert_eq!(diameter(&generators::edgeless(3)), None);
    }
}
