//! Text graph files: a header line `n m k`, then `m` lines `u v`. The edge
//! order in the file is the as-given stream order.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Node};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphFileError {
    #[error("line 1: expected `n m k`")]
    Header,
    #[error("line {0}: expected `u v`")]
    EdgeLine(usize),
    #[error("header announces {expected} edges, file has {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub k: usize,
}

fn numbers<T: std::str::FromStr>(line: &str, count: usize) -> Option<Vec<T>> {
    let v: Vec<T> = line.split_whitespace().map(|w| w.parse().ok()).collect::<Option<_>>()?;
    (v.len() == count).then_some(v)
}

/// Parses a graph file. Blank lines are ignored.
pub fn parse_graph_file(text: &str) -> Result<GraphFile, GraphFileError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(GraphFileError::Header)?;
    let h: Vec<usize> = numbers(header, 3).ok_or(GraphFileError::Header)?;
    let (n, m, k) = (h[0], h[1], h[2]);
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines {
        let uv: Vec<Node> = numbers(line, 2).ok_or(GraphFileError::EdgeLine(i + 1))?;
        edges.push((uv[0], uv[1]));
    }
    if edges.len() != m {
        return Err(GraphFileError::EdgeCount { expected: m, found: edges.len() });
    }
    Ok(GraphFile { graph: Graph::new(n, edges)?, k })
}

pub fn write_graph_file(g: &Graph, k: usize) -> String {
    let mut out = format!("{} {} {}\n", g.node_count(), g.edge_count(), k);
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use proptest::prelude::*;

    #[test]
    fn parse_example() {
        let f = parse_graph_file("4 3 2\n1 2\n3 2\n\n3 4\n").unwrap();
        assert_eq!(f.k, 2);
        assert_eq!(f.graph.node_count(), 4);
        assert_eq!(f.graph.edges()[1].endpoints(), (2, 3));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph_file(""), Err(GraphFileError::Header));
        assert_eq!(parse_graph_file("3 1\n1 2\n"), Err(GraphFileError::Header));
        assert_eq!(parse_graph_file("3 1 1\n1 x\n"), Err(GraphFileError::EdgeLine(2)));
        assert_eq!(parse_graph_file("3 2 1\n1 2\n"), Err(GraphFileError::EdgeCount { expected: 2, found: 1 }));
        assert!(matches!(parse_graph_file("3 1 1\n1 1\n"), Err(GraphFileError::Graph(_))));
        assert!(matches!(parse_graph_file("3 1 1\n1 4\n"), Err(GraphFileError::Graph(_))));
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..20, p in 0.0f64..1.0, seed: u64, k in 0usize..30) {
            use rand::SeedableRng;
            let g = generators::gnp(n, p, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let f = parse_graph_file(&write_graph_file(&g, k)).unwrap();
            prop_assert_eq!(f.graph, g);
            prop_assert_eq!(f.k, k);
        }
    }
}
