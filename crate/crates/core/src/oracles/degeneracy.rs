use std::collections::BTreeSet;

use crate::graph::{Graph, Node};

/// Result of minimum-degree peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peel {
    /// Largest degree seen at removal time.
    pub degeneracy: usize,
    /// Nodes in removal order.
    pub order: Vec<Node>,
}

/// Repeatedly removes a minimum-degree node, smallest id first on ties.
pub fn peel(g: &Graph) -> Peel {
    let adj = g.adjacency();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; adj.len()];
    let mut queue: BTreeSet<(usize, usize)> = (0..adj.len()).map(|v| (deg[v], v)).collect();
    let mut order = Vec::with_capacity(adj.len());
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        alive[v] = false;
        order.push(v as Node + 1);
        for &u in &adj[v] {
            if alive[u] {
                queue.remove(&(deg[u], u));
                deg[u] -= 1;
                queue.insert((deg[u], u));
            }
        }
    }
    Peel { degeneracy, order }
}

pub fn degeneracy(g: &Graph) -> usize {
    peel(g).degeneracy
}

/// The `k`-core: what survives after repeatedly deleting nodes of degree
/// below `k`. Sorted; empty if no core exists.
pub fn k_core(g: &Graph, k: usize) -> Vec<Node> {
    let adj = g.adjacency();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; adj.len()];
    let mut stack: Vec<usize> = (0..adj.len()).filter(|&v| deg[v] < k).collect();
    for &v in &stack {
        alive[v] = false;
    }
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if alive[u] {
                deg[u] -= 1;
                if deg[u] < k {
                    alive[u] = false;
                    stack.push(u);
                }
            }
        }
    }
    (0..adj.len()).filter(|&v| alive[v]).map(|v| v as Node + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn small_families() {
        assert_eq!(degeneracy(&generators::path(4)), 1);
        assert_eq!(degeneracy(&generators::cycle(4)), 2);
        assert_eq!(degeneracy(&generators::complete(4)), 3);
        assert_eq!(degeneracy(&generators::edgeless(3)), 0);
    }

    #[test]
    fn tie_break_is_smallest_id() {
        assert_eq!(peel(&generators::path(4)).order, vec![1, 2, 3, 4]);
    }

    #[test]
    fn cores() {
        assert_eq!(k_core(&generators::complete(4), 3), vec![1, 2, 3, 4]);
        assert_eq!(k_core(&generators::cycle(4), 2), vec![1, 2, 3, 4]);
        assert!(k_core(&generators::path(5), 2).is_empty());
        // A triangle with a pendant node.
        let g = Graph::new(4, [(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        assert_eq!(k_core(&g, 2), vec![1, 2, 3]);
    }
}
