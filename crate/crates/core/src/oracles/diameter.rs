use std::collections::VecDeque;
use std::fmt;

use crate::graph::{Graph, Node};

/// A graph distance; unreachable pairs are infinitely far apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    /// True when this distance is at least `k`.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Distance::Finite(d) => d >= k,
            Distance::Infinite => true,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// BFS distances from `source`, indexed by `node - 1`; `None` when unreachable.
pub fn bfs(adj: &[Vec<usize>], source: Node) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    let s = source as usize - 1;
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &u in &adj[v] {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Largest pairwise distance. Graphs with fewer than two nodes have diameter 0.
pub fn diameter(g: &Graph) -> Distance {
    let adj = g.adjacency();
    let mut best = 0;
    for s in g.nodes() {
        for d in bfs(&adj, s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Distance::Infinite,
            }
        }
    }
    Distance::Finite(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn small_families() {
        assert_eq!(diameter(&generators::path(4)), Distance::Finite(3));
        assert_eq!(diameter(&generators::complete(3)), Distance::Finite(1));
        assert_eq!(diameter(&generators::edgeless(2)), Distance::Infinite);
        assert_eq!(diameter(&generators::edgeless(1)), Distance::Finite(0));
        assert_eq!(diameter(&generators::cycle(7)), Distance::Finite(3));
    }

    #[test]
    fn ordering() {
        assert!(Distance::Finite(100) < Distance::Infinite);
        assert!(Distance::Infinite.at_least(usize::MAX));
        assert!(!Distance::Finite(2).at_least(3));
    }
}
