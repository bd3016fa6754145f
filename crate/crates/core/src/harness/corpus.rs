use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::cert::{Direction, Parameter, Scheme};
use crate::gadgets::{Gadget, InstanceSpace};
use crate::generators;
use crate::graph::Graph;
use crate::oracles::{self, Distance, OracleError};

use super::mix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("corpus spec: {0}")]
    Parse(String),
    #[error("oracle too large: {0}")]
    OracleTooLarge(#[from] OracleError),
}

/// Ground-truth parameters of one graph, computed by the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub matching: usize,
    pub degeneracy: usize,
    pub diameter: Distance,
    pub chromatic: usize,
    pub independence: usize,
    pub clique: usize,
    pub vertex_cover: usize,
}

impl Params {
    pub fn compute(g: &Graph) -> Result<Self, OracleError> {
        let sets = oracles::set_parameters(g)?;
        Ok(Params {
            matching: oracles::max_matching(g),
            degeneracy: oracles::degeneracy(g),
            diameter: oracles::diameter(g),
            chromatic: oracles::chromatic(g)?.0,
            independence: sets.is,
            clique: sets.clique,
            vertex_cover: sets.vc,
        })
    }

    /// The parameter's value; `None` stands for an infinite diameter.
    pub fn value(&self, p: Parameter) -> Option<usize> {
        Some(match p {
            Parameter::Matching => self.matching,
            Parameter::Degeneracy => self.degeneracy,
            Parameter::Diameter => match self.diameter {
                Distance::Finite(d) => d,
                Distance::Infinite => return None,
            },
            Parameter::Chromatic => self.chromatic,
            Parameter::IndependentSet => self.independence,
            Parameter::Clique => self.clique,
            Parameter::VertexCover => self.vertex_cover,
        })
    }

    /// Whether `(G, k)` has the property `scheme` certifies.
    pub fn is_legal(&self, scheme: Scheme, k: usize) -> bool {
        match (self.value(scheme.parameter()), scheme.direction()) {
            (None, Direction::AtLeast) => true,
            (None, _) => false,
            (Some(v), Direction::AtLeast) => v >= k,
            (Some(v), Direction::AtMost) => v <= k,
            (Some(v), Direction::Exactly) => v == k,
        }
    }

    /// Thresholds at which the instance is legal: the tight one plus one
    /// with slack.
    pub fn legal_thresholds(&self, scheme: Scheme, n: usize) -> Vec<usize> {
        let mut ks = match (self.value(scheme.parameter()), scheme.direction()) {
            (None, _) => vec![n, 1],
            (Some(v), Direction::AtLeast) => vec![v, v / 2],
            (Some(v), Direction::AtMost) => vec![v, v + 1],
            (Some(v), Direction::Exactly) => vec![v],
        };
        ks.dedup();
        ks
    }

    /// Thresholds just past the parameter value, where no certificate may be
    /// accepted.
    pub fn illegal_thresholds(&self, scheme: Scheme) -> Vec<usize> {
        match (self.value(scheme.parameter()), scheme.direction()) {
            (None, _) => vec![],
            (Some(v), Direction::AtLeast) => vec![v + 1, v + 2],
            (Some(v), Direction::AtMost) => (1..=2).filter_map(|d| v.checked_sub(d)).collect(),
            (Some(v), Direction::Exactly) => v.checked_sub(1).into_iter().chain([v + 1]).collect(),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "nu={} degeneracy={} diameter={} chi={} alpha={} omega={} tau={}",
            self.matching,
            self.degeneracy,
            self.diameter,
            self.chromatic,
            self.independence,
            self.clique,
            self.vertex_cover
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
    pub params: Params,
    /// For gadget outputs, the number of edges Alice streams first.
    pub split: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub seed: u64,
    pub entries: Vec<CorpusEntry>,
}

/// Gadget families (and sizes) included by the `gadgets` clause.
pub const CORPUS_GADGETS: [Gadget; 6] = [
    Gadget::DisjMatching { n: 4 },
    Gadget::DisjDegeneracy { n: 4 },
    Gadget::DisjDiameter8 { n: 2 },
    Gadget::Holzer { p: 4 },
    Gadget::BitgadgetVc { n: 2 },
    Gadget::PermColoring { r: 3 },
];

struct Clause<'a> {
    family: &'a str,
    keys: Vec<(&'a str, &'a str)>,
}

impl<'a> Clause<'a> {
    fn get(&self, key: &str) -> Option<&'a str> {
        self.keys.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
    }

    fn number<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T, CorpusError> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v.parse().map_err(|_| CorpusError::Parse(format!("bad value `{v}` for {key}"))),
        }
    }

    /// `n=A..B` or `n=A`.
    fn range(&self, key: &str, default: (usize, usize)) -> Result<(usize, usize), CorpusError> {
        let Some(v) = self.get(key) else { return Ok(default) };
        let bad = || CorpusError::Parse(format!("bad range `{v}` for {key}"));
        match v.split_once("..") {
            Some((a, b)) => Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)),
            None => {
                let a = v.parse().map_err(|_| bad())?;
                Ok((a, a))
            }
        }
    }
}

fn parse_spec(spec: &str) -> Result<Vec<Clause<'_>>, CorpusError> {
    let mut clauses = Vec::new();
    for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let mut words = part.split_whitespace();
        let family = words.next().unwrap();
        let keys = words
            .map(|w| w.split_once('=').ok_or_else(|| CorpusError::Parse(format!("expected key=value, got `{w}`"))))
            .collect::<Result<_, _>>()?;
        clauses.push(Clause { family, keys });
    }
    Ok(clauses)
}

/// Builds a corpus from a `;`-separated list of clauses, each a family name
/// followed by `key=value` options:
///
/// * `paths n=2..10`, `cycles n=3..10`, `cliques n=1..8`, `stars n=2..10`,
///   `matchings n=2..10`, `empty n=5` (`n` counts nodes),
/// * `trees n=2..12 count=20 seed=S`, `gnp n=12 p=0.3 count=50 seed=S`
///   (with an `n` range, sizes are drawn uniformly),
/// * `gadgets count=4 seed=S`: sampled outputs of each gadget family.
///
/// Clauses without a `seed` derive one from `seed` and their position.
pub fn build_corpus(spec: &str, seed: u64) -> Result<Corpus, CorpusError> {
    let mut raw: Vec<(String, Graph, Option<usize>)> = Vec::new();
    for (index, clause) in parse_spec(spec)?.iter().enumerate() {
        let clause_seed = clause.number("seed", mix(seed, index as u64))?;
        let mut rng = ChaCha8Rng::seed_from_u64(clause_seed);
        let family = clause.family;
        let fixed = |lo: usize, hi: usize, make: &dyn Fn(usize) -> Graph, raw: &mut Vec<_>| {
            for n in lo..=hi {
                raw.push((format!("{family}/n={n}"), make(n), None));
            }
        };
        match family {
            "paths" => {
                let (lo, hi) = clause.range("n", (2, 10))?;
                fixed(lo, hi, &generators::path, &mut raw);
            }
            "cycles" => {
                let (lo, hi) = clause.range("n", (3, 10))?;
                if lo < 3 {
                    return Err(CorpusError::Parse("cycles need n >= 3".into()));
                }
                fixed(lo, hi, &generators::cycle, &mut raw);
            }
            "cliques" => {
                let (lo, hi) = clause.range("n", (1, 8))?;
                fixed(lo, hi, &generators::complete, &mut raw);
            }
            "stars" => {
                let (lo, hi) = clause.range("n", (2, 10))?;
                if lo < 1 {
                    return Err(CorpusError::Parse("stars need n >= 1".into()));
                }
                fixed(lo, hi, &|n| generators::star(n - 1), &mut raw);
            }
            "matchings" => {
                let (lo, hi) = clause.range("n", (2, 10))?;
                fixed(lo, hi, &generators::perfect_matching, &mut raw);
            }
            "empty" => {
                let (lo, hi) = clause.range("n", (5, 5))?;
                fixed(lo, hi, &generators::edgeless, &mut raw);
            }
            "trees" | "gnp" => {
                let (lo, hi) = clause.range("n", (2, 12))?;
                let count: usize = clause.number("count", 20)?;
                let p: f64 = clause.number("p", 0.3)?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(CorpusError::Parse(format!("p = {p} is not a probability")));
                }
                for i in 0..count {
                    let n = rng.gen_range(lo..=hi);
                    let (id, g) = if family == "trees" {
                        (format!("trees/seed={clause_seed}/{i}/n={n}"), generators::random_tree(n, &mut rng))
                    } else {
                        (format!("gnp/seed={clause_seed}/p={p}/{i}/n={n}"), generators::gnp(n, p, &mut rng))
                    };
                    raw.push((id, g, None));
                }
            }
            "gadgets" => {
                let count: usize = clause.number("count", 4)?;
                for (gi, gadget) in CORPUS_GADGETS.iter().enumerate() {
                    let space = InstanceSpace::Sampled { count, seed: mix(clause_seed, gi as u64) };
                    let pairs = crate::gadgets::instance_pairs(gadget, space).expect("sampling never fails");
                    for (x, y) in pairs {
                        let inst = gadget.build(&x, &y).expect("enumerated inputs are well formed");
                        let id = format!("gadget/{}/x={x}/y={y}", gadget.name());
                        raw.push((id, inst.graph.clone(), Some(inst.split_point())));
                    }
                }
            }
            other => return Err(CorpusError::Parse(format!("unknown family `{other}`"))),
        }
    }
    let entries = raw
        .into_par_iter()
        .map(|(id, graph, split)| Ok(CorpusEntry { params: Params::compute(&graph)?, id, graph, split }))
        .collect::<Result<Vec<_>, OracleError>>()?;
    Ok(Corpus { seed, entries })
}
