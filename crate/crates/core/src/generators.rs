//! Deterministic graph families used by the corpus builder, the scaling runs
//! and the tests.

use rand::Rng;

use crate::graph::{Edge, Graph, Node};

fn build(n: usize, edges: Vec<(Node, Node)>) -> Graph {
    Graph::new(n, edges).expect("generator produced an invalid graph")
}

/// Path `1-2-...-n`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n as Node).map(|i| (i, i + 1)).collect())
}

/// Cycle `1-2-...-n-1`; needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 nodes");
    let mut edges: Vec<_> = (1..n as Node).map(|i| (i, i + 1)).collect();
    edges.push((1, n as Node));
    build(n, edges)
}

/// Complete graph on `n` nodes.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 1..=n as Node {
        for b in a + 1..=n as Node {
            edges.push((a, b));
        }
    }
    build(n, edges)
}

/// Star with centre `1` and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (2..=leaves as Node + 1).map(|i| (1, i)).collect())
}

/// `n / 2` disjoint edges `{1,2}, {3,4}, ...`; a trailing odd node stays isolated.
pub fn perfect_matching(n: usize) -> Graph {
    build(n, (0..n as Node / 2).map(|i| (2 * i + 1, 2 * i + 2)).collect())
}

pub fn edgeless(n: usize) -> Graph {
    Graph::empty(n)
}

/// Uniform random recursive tree: node `i` attaches to a uniformly chosen
/// earlier node.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let edges = (2..=n as Node).map(|i| (rng.gen_range(1..i), i)).collect();
    build(n, edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for a in 1..=n as Node {
        for b in a + 1..=n as Node {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    build(n, edges)
}

/// Random graph whose maximum degree never exceeds `max_degree`: `attempts`
/// random pairs are proposed and kept when both endpoints still have room.
pub fn bounded_degree<R: Rng>(n: usize, max_degree: usize, attempts: usize, rng: &mut R) -> Graph {
    let mut deg = vec![0usize; n + 1];
    let mut present = std::collections::HashSet::new();
    let mut edges = Vec::new();
    if n >= 2 {
        for _ in 0..attempts {
            let a = rng.gen_range(1..=n as Node);
            let b = rng.gen_range(1..=n as Node);
            if a == b || deg[a as usize] >= max_degree || deg[b as usize] >= max_degree {
                continue;
            }
            if present.insert(Edge::new(a, b)) {
                deg[a as usize] += 1;
                deg[b as usize] += 1;
                edges.push((a, b));
            }
        }
    }
    build(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn family_sizes() {
        assert_eq!(path(4).edge_count(), 3);
        assert_eq!(cycle(5).edge_count(), 5);
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(star(3).node_count(), 4);
        assert_eq!(perfect_matching(6).edge_count(), 3);
        assert_eq!(path(1).edge_count(), 0);
    }

    #[test]
    fn random_families_are_deterministic() {
        let a = gnp(12, 0.3, &mut ChaCha8Rng::seed_from_u64(1));
        let b = gnp(12, 0.3, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(a, b);
        let t = random_tree(20, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(t.edge_count(), 19);
    }

    #[test]
    fn bounded_degree_respects_cap() {
        let g = bounded_degree(100, 6, 1000, &mut ChaCha8Rng::seed_from_u64(3));
        assert!(g.max_degree() <= 6);
    }
}
