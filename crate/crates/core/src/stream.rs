//! Edge streams: a threshold header followed by some ordering of the edge set.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Edge, Graph};

/// How to order a graph's edges when streaming them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderSpec {
    AsGiven,
    Reversed,
    SortedLex,
    Shuffled(u64),
    /// The first `split` as-given edges (shuffled) are streamed in full before
    /// the remaining ones (shuffled), as in a two-party simulation where one
    /// party hands its verifier state to the other.
    Interleave { split: usize, seed: u64 },
}

impl OrderSpec {
    /// The fixed order battery: as-given, reversed, sorted-lex and 20 seeded
    /// shuffles.
    pub fn battery() -> Vec<OrderSpec> {
        let mut orders = vec![OrderSpec::AsGiven, OrderSpec::Reversed, OrderSpec::SortedLex];
        orders.extend((1..=20).map(OrderSpec::Shuffled));
        orders
    }

    /// Parses the command-line spelling `given | rev | lex | shuffle:SEED |
    /// split:IDX`; `seed` feeds the shuffles inside a split.
    pub fn parse(s: &str, seed: u64) -> Result<Self, OrderParseError> {
        let bad = || OrderParseError(s.to_string());
        match s {
            "given" => Ok(OrderSpec::AsGiven),
            "rev" => Ok(OrderSpec::Reversed),
            "lex" => Ok(OrderSpec::SortedLex),
            _ => {
                let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
                let value: u64 = arg.parse().map_err(|_| bad())?;
                match kind {
                    "shuffle" => Ok(OrderSpec::Shuffled(value)),
                    "split" => Ok(OrderSpec::Interleave { split: value as usize, seed }),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpec::AsGiven => write!(f, "given"),
            OrderSpec::Reversed => write!(f, "rev"),
            OrderSpec::SortedLex => write!(f, "lex"),
            OrderSpec::Shuffled(s) => write!(f, "shuffle:{s}"),
            OrderSpec::Interleave { split, seed } => write!(f, "split:{split}@{seed}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown stream order `{0}` (expected given, rev, lex, shuffle:SEED or split:IDX)")]
pub struct OrderParseError(pub String);

/// The threshold `k` followed by the graph's edges, each exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeStream {
    k: usize,
    edges: Vec<Edge>,
}

impl EdgeStream {
    pub fn threshold(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Orders the edges of `g` per `order`, behind the threshold header `k`.
pub fn make_stream(g: &Graph, k: usize, order: OrderSpec) -> EdgeStream {
    let mut edges = g.edges().to_vec();
    match order {
        OrderSpec::AsGiven => {}
        OrderSpec::Reversed => edges.reverse(),
        OrderSpec::SortedLex => edges.sort_unstable(),
        OrderSpec::Shuffled(seed) => edges.shuffle(&mut ChaCha8Rng::seed_from_u64(seed)),
        OrderSpec::Interleave { split, seed } => {
            let split = split.min(edges.len());
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (first, second) = edges.split_at_mut(split);
            first.shuffle(&mut rng);
            second.shuffle(&mut rng);
        }
    }
    EdgeStream { k, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use proptest::prelude::*;

    fn triangle() -> Graph {
        Graph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn sorted_and_reversed_orders() {
        let lex = make_stream(&triangle(), 1, OrderSpec::SortedLex);
        assert_eq!(lex.threshold(), 1);
        assert_eq!(lex.edges(), &[Edge::new(1, 2), Edge::new(1, 3), Edge::new(2, 3)]);
        let rev = make_stream(&triangle(), 1, OrderSpec::Reversed);
        assert_eq!(rev.edges(), &[Edge::new(2, 3), Edge::new(1, 3), Edge::new(1, 2)]);
    }

    #[test]
    fn seeded_shuffle_is_deterministic() {
        let g = generators::complete(7);
        let a = make_stream(&g, 0, OrderSpec::Shuffled(7));
        let b = make_stream(&g, 0, OrderSpec::Shuffled(7));
        assert_eq!(a, b);
    }

    #[test]
    fn interleave_keeps_parts_separate() {
        let g = generators::path(10);
        let s = make_stream(&g, 0, OrderSpec::Interleave { split: 4, seed: 3 });
        let mut head: Vec<_> = s.edges()[..4].to_vec();
        head.sort();
        assert_eq!(head, g.edges()[..4].to_vec());
    }

    #[test]
    fn battery_has_23_orders() {
        assert_eq!(OrderSpec::battery().len(), 23);
    }

    #[test]
    fn parse_orders() {
        assert_eq!(OrderSpec::parse("rev", 0), Ok(OrderSpec::Reversed));
        assert_eq!(OrderSpec::parse("shuffle:9", 0), Ok(OrderSpec::Shuffled(9)));
        assert_eq!(OrderSpec::parse("split:3", 5), Ok(OrderSpec::Interleave { split: 3, seed: 5 }));
        assert!(OrderSpec::parse("sideways", 0).is_err());
        assert!(OrderSpec::parse("shuffle:x", 0).is_err());
    }

    fn order_strategy() -> impl Strategy<Value = OrderSpec> {
        prop_oneof![
            Just(OrderSpec::AsGiven),
            Just(OrderSpec::Reversed),
            Just(OrderSpec::SortedLex),
            any::<u64>().prop_map(OrderSpec::Shuffled),
            (0usize..40, any::<u64>()).prop_map(|(split, seed)| OrderSpec::Interleave { split, seed }),
        ]
    }

    proptest! {
        #[test]
        fn every_order_is_a_permutation(n in 2usize..12, seed in any::<u64>(), order in order_strategy()) {
            use rand::SeedableRng;
            let g = generators::gnp(n, 0.4, &mut ChaCha8Rng::seed_from_u64(seed));
            let s = make_stream(&g, 3, order);
            let mut streamed = s.edges().to_vec();
            streamed.sort();
            let mut expected = g.edges().to_vec();
            expected.sort();
            prop_assert_eq!(streamed, expected);
        }
    }
}
