//! Simple undirected graphs on the vertex set `1..=n`.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Node identifier. Nodes are 1-based: a graph on `n` nodes uses `1..=n`.
pub type Node = u32;

/// An undirected edge, normalized so that `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Node,
    v: Node,
}

impl Edge {
    /// Builds the edge `{a, b}`; the endpoints may be given in either order.
    pub fn new(a: Node, b: Node) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    /// Smaller endpoint.
    pub fn u(self) -> Node {
        self.u
    }

    /// Larger endpoint.
    pub fn v(self) -> Node {
        self.v
    }

    pub fn endpoints(self) -> (Node, Node) {
        (self.u, self.v)
    }

    pub fn touches(self, x: Node) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at node {0}")]
    SelfLoop(Node),
    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(Node, Node),
    #[error("node {0} is outside 1..=n")]
    NodeOutOfRange(Node),
}

/// A validated simple graph.
///
/// The edge list keeps the order in which edges were supplied; that order is
/// the "as-given" stream order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Validates `edges` against the vertex set `1..=n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Node, Node)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x == 0 || x as usize > n {
                    return Err(GraphError::NodeOutOfRange(x));
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = Edge::new(a, b);
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.u, e.v));
            }
            list.push(e);
        }
        Ok(Graph { n, edges: list })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        Self::new(n, edges.into_iter().map(Edge::endpoints))
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> {
        1..=self.n as Node
    }

    pub fn has_edge(&self, a: Node, b: Node) -> bool {
        let e = Edge::new(a, b);
        self.edges.contains(&e)
    }

    /// Adjacency lists indexed by `node - 1`, each holding 0-based neighbour
    /// indices in increasing order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            let (u, v) = (e.u as usize - 1, e.v as usize - 1);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Neighbourhood bitmasks (bit `j` of entry `i` set iff nodes `i+1` and
    /// `j+1` are adjacent). Only meaningful for `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs n <= 64");
        let mut masks = vec![0u64; self.n];
        for e in &self.edges {
            let (u, v) = (e.u as usize - 1, e.v as usize - 1);
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u as usize - 1] += 1;
            deg[e.v as usize - 1] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Copy of this graph with one more edge appended at the end.
    pub fn with_edge(&self, e: Edge) -> Result<Self, GraphError> {
        Self::from_edges(self.n, self.edges.iter().copied().chain(std::iter::once(e)))
    }

    /// Copy of this graph with `e` removed (no-op if absent).
    pub fn without_edge(&self, e: Edge) -> Self {
        Graph { n: self.n, edges: self.edges.iter().copied().filter(|&f| f != e).collect() }
    }

    /// All unordered pairs that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let present: HashSet<Edge> = self.edges.iter().copied().collect();
        let mut out = Vec::new();
        for a in 1..=self.n as Node {
            for b in a + 1..=self.n as Node {
                let e = Edge::new(a, b);
                if !present.contains(&e) {
                    out.push(e);
                }
            }
        }
        out
    }
}

/// Checks the graph invariants of an arbitrary edge list without building a
/// [`Graph`].
pub fn validate_graph(n: usize, edges: &[(Node, Node)]) -> Result<(), GraphError> {
    Graph::new(n, edges.iter().copied()).map(|_| ())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_valid() {
        assert!(validate_graph(3, &[(1, 2), (1, 3), (2, 3)]).is_ok());
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(validate_graph(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn duplicate_rejected() {
        assert_eq!(validate_graph(2, &[(1, 2), (1, 2)]), Err(GraphError::DuplicateEdge(1, 2)));
        assert_eq!(validate_graph(2, &[(1, 2), (2, 1)]), Err(GraphError::DuplicateEdge(1, 2)));
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(validate_graph(2, &[(1, 3)]), Err(GraphError::NodeOutOfRange(3)));
        assert_eq!(validate_graph(2, &[(0, 1)]), Err(GraphError::NodeOutOfRange(0)));
    }

    #[test]
    fn edges_are_normalized() {
        let g = Graph::new(3, [(3, 1)]).unwrap();
        assert_eq!(g.edges()[0].endpoints(), (1, 3));
        assert!(g.has_edge(1, 3) && g.has_edge(3, 1));
    }
}
