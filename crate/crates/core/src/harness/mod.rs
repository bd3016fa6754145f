//! Experiment driver: corpora with oracle ground truth, completeness and
//! soundness campaigns, certificate fuzzing and space-scaling runs.
//!
//! Every campaign is deterministic given its seeds and parallelises over
//! instances; records come back in corpus order.

mod corpus;
mod fuzz;
mod scaling;

use std::fmt;

use rayon::prelude::*;

use crate::cert::{Certificate, Scheme};
use crate::gadgets::{self, Gadget, GadgetError, InstanceSpace};
use crate::provers::{self, ProveError};
use crate::stream::{make_stream, OrderSpec};
use crate::verdict::Verdict;
use crate::verifiers::{self, space_bound};

pub use corpus::{build_corpus, Corpus, CorpusEntry, CorpusError, Params, CORPUS_GADGETS};
pub use fuzz::{blank_certificate, fuzz_instance, run_soundness, Breach, FuzzMode, FuzzPolicy, InstanceSummary, SoundnessReport};
pub use scaling::{run_space_scaling, scaling_setup, Family, ScalingRow, ScalingTable};

/// Mixes two words into a seed (splitmix64 finaliser).
pub fn mix(a: u64, b: u64) -> u64 {
    let mut z = a ^ b.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The orders used for every soundness trial: as-given, reversed, sorted and
/// two seeded shuffles.
pub fn soundness_orders(seed: u64) -> Vec<OrderSpec> {
    vec![
        OrderSpec::AsGiven,
        OrderSpec::Reversed,
        OrderSpec::SortedLex,
        OrderSpec::Shuffled(seed),
        OrderSpec::Shuffled(mix(seed, 1)),
    ]
}

/// One honest-certificate trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub scheme: Scheme,
    pub graph: String,
    pub k: usize,
    pub order: Option<OrderSpec>,
    /// `None` when the prover failed on a legal instance.
    pub verdict: Option<Verdict>,
    pub peak_state_bits: u64,
    pub certificate_bits: u64,
    pub bound: u64,
}

impl TrialRecord {
    pub fn passed(&self) -> bool {
        self.verdict.is_some_and(|v| v.is_accept()) && self.peak_state_bits <= self.bound
    }
}

impl fmt::Display for TrialRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = self.order.map_or("-".to_string(), |o| o.to_string());
        let verdict = self.verdict.map_or("prove_failed".to_string(), |v| v.to_string());
        write!(
            f,
            "scheme={} graph={} k={} order={} cert=honest verdict={} peak_state_bits={} certificate_bits={} bound={} pass={}",
            self.scheme,
            self.graph,
            self.k,
            order,
            verdict,
            self.peak_state_bits,
            self.certificate_bits,
            self.bound,
            self.passed() as u8
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletenessReport {
    pub scheme: Scheme,
    /// Number of legal `(graph, k)` instances visited.
    pub instances: usize,
    pub records: Vec<TrialRecord>,
}

impl CompletenessReport {
    pub fn failures(&self) -> impl Iterator<Item = &TrialRecord> {
        self.records.iter().filter(|r| !r.passed())
    }
}

fn replay(scheme: Scheme, entry: &CorpusEntry, k: usize, orders: &[OrderSpec]) -> Vec<TrialRecord> {
    let g = &entry.graph;
    let n = g.node_count();
    let bound = space_bound(scheme, n, k);
    let base = TrialRecord {
        scheme,
        graph: entry.id.clone(),
        k,
        order: None,
        verdict: None,
        peak_state_bits: 0,
        certificate_bits: 0,
        bound,
    };
    let cert = match provers::prove(scheme, g, k) {
        Ok(c) => c,
        Err(_) => return vec![base],
    };
    let mut orders = orders.to_vec();
    if let Some(split) = entry.split {
        orders.push(OrderSpec::Interleave { split, seed: k as u64 });
    }
    orders
        .into_iter()
        .map(|order| {
            let (verdict, report) = verifiers::run(scheme, n, cert.as_ref(), &make_stream(g, k, order));
            TrialRecord {
                order: Some(order),
                verdict: Some(verdict),
                peak_state_bits: report.peak_state_bits,
                certificate_bits: report.certificate_bits,
                ..base.clone()
            }
        })
        .collect()
}

/// Proves every legal instance of the corpus (see
/// [`Params::legal_thresholds`]) and replays the certificate under each order
/// (plus the Alice-then-Bob split for gadget outputs), checking the verdict
/// and the space bound.
pub fn run_completeness(scheme: Scheme, corpus: &Corpus, orders: &[OrderSpec]) -> CompletenessReport {
    let instances: Vec<(&CorpusEntry, usize)> = corpus
        .entries
        .iter()
        .flat_map(|e| {
            let n = e.graph.node_count();
            e.params.legal_thresholds(scheme, n).into_iter().map(move |k| (e, k))
        })
        .collect();
    let records = instances.par_iter().flat_map_iter(|&(e, k)| replay(scheme, e, k, orders)).collect();
    CompletenessReport { scheme, instances: instances.len(), records }
}

/// One line of an equality-combinator agreement check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementRecord {
    pub scheme: Scheme,
    pub graph: String,
    pub value: usize,
    pub k: usize,
    pub verdicts: Vec<Verdict>,
}

impl AgreementRecord {
    pub fn agrees(&self) -> bool {
        !self.verdicts.is_empty() && self.verdicts.iter().all(|v| v.is_accept() == (self.value == self.k))
    }
}

impl fmt::Display for AgreementRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdicts: Vec<String> = self.verdicts.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "scheme={} graph={} value={} k={} verdicts=[{}] agree={}",
            self.scheme,
            self.graph,
            self.value,
            self.k,
            verdicts.join(", "),
            self.agrees() as u8
        )
    }
}

/// The honest certificate for `(g, k)` when one exists, else the honest one
/// at the parameter's true value.
fn honest_or_nearest(scheme: Scheme, entry: &CorpusEntry, k: usize, value: usize) -> Result<Certificate, ProveError> {
    provers::prove(scheme, &entry.graph, k).or_else(|_| provers::prove(scheme, &entry.graph, value))
}

/// For each equality scheme and each corpus graph with at most `max_n`
/// nodes, runs the combined verifier at `k ∈ {value − 1, value, value + 1}`
/// with the best available pair of half certificates.
pub fn run_equality_agreement(corpus: &Corpus, max_n: usize, seed: u64) -> Vec<AgreementRecord> {
    let orders = [OrderSpec::AsGiven, OrderSpec::Reversed, OrderSpec::Shuffled(seed)];
    let jobs: Vec<(Scheme, &CorpusEntry, usize, usize)> = [Scheme::EqMatching, Scheme::EqDegeneracy]
        .into_iter()
        .flat_map(|s| {
            corpus.entries.iter().filter(move |e| e.graph.node_count() <= max_n).flat_map(move |e| {
                let value = e.params.value(s.parameter()).expect("matching and degeneracy are finite");
                value.checked_sub(1).into_iter().chain([value, value + 1]).map(move |k| (s, e, k, value))
            })
        })
        .collect();
    jobs.par_iter()
        .map(|&(scheme, e, k, value)| {
            let (le, ge) = scheme.halves().unwrap();
            let pair = honest_or_nearest(le, e, k, value).and_then(|a| Ok((a, honest_or_nearest(ge, e, k, value)?)));
            let n = e.graph.node_count();
            let verdicts = match pair {
                Ok((a, b)) => {
                    let c = crate::cert::encode_equality(scheme, &a, &b);
                    orders.iter().map(|&o| verifiers::run(scheme, n, c.as_ref(), &make_stream(&e.graph, k, o)).0).collect()
                }
                Err(_) => vec![],
            };
            AgreementRecord { scheme, graph: e.id.clone(), value, k, verdicts }
        })
        .collect()
}

/// One gadget instance replayed in the Alice-then-Bob order and in ordinary
/// orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitRecord {
    pub gadget: &'static str,
    pub x: String,
    pub y: String,
    pub legal: bool,
    pub split: Verdict,
    pub others: Vec<Verdict>,
}

impl SplitRecord {
    pub fn consistent(&self) -> bool {
        self.split.is_accept() == self.legal && self.others.iter().all(|&v| v == self.split)
    }
}

impl fmt::Display for SplitRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "gadget={} x={} y={} legal={} split={} others_agree={} ok={}",
            self.gadget,
            self.x,
            self.y,
            self.legal as u8,
            self.split,
            self.others.iter().all(|&v| v == self.split) as u8,
            self.consistent() as u8
        )
    }
}

/// Streams each gadget instance with `E ∪ A_x` before `B_y` and in other
/// orders, for the scheme that certifies the family's predicate. Legal
/// instances use their honest certificate; illegal ones use the honest
/// certificate of the first legal instance of the sweep.
pub fn run_split_stream(gadget: &Gadget, space: InstanceSpace, seed: u64) -> Result<Vec<SplitRecord>, GadgetError> {
    let (scheme, k, legal_when) = gadget.scheme();
    let pairs = gadgets::instance_pairs(gadget, space)?;
    let instances = pairs
        .par_iter()
        .map(|(x, y)| {
            let inst = gadget.build(x, y)?;
            let legal = gadget.predicate(&inst.graph)? == legal_when;
            Ok((inst, legal))
        })
        .collect::<Result<Vec<_>, GadgetError>>()?;
    let donor = instances
        .iter()
        .find(|(_, legal)| *legal)
        .map(|(inst, _)| provers::prove(scheme, &inst.graph, k))
        .transpose()
        .map_err(|e| match e {
            ProveError::TooLarge(o) => GadgetError::OracleTooLarge(o),
            ProveError::NotCertifiable => GadgetError::BadParameter("donor instance is not certifiable".into()),
        })?;
    let orders = [OrderSpec::AsGiven, OrderSpec::Reversed, OrderSpec::SortedLex, OrderSpec::Shuffled(seed)];
    instances
        .par_iter()
        .map(|(inst, legal)| {
            let g = &inst.graph;
            let cert = if *legal {
                provers::prove(scheme, g, k).map_err(|_| GadgetError::BadParameter("legal instance without certificate".into()))?
            } else {
                match &donor {
                    Some(c) => c.clone(),
                    None => blank_certificate(scheme, g.node_count(), k),
                }
            };
            let n = g.node_count();
            let run = |o| verifiers::run(scheme, n, cert.as_ref(), &make_stream(g, k, o)).0;
            Ok(SplitRecord {
                gadget: gadget.name(),
                x: inst.x.to_string(),
                y: inst.y.to_string(),
                legal: *legal,
                split: run(OrderSpec::Interleave { split: inst.split_point(), seed }),
                others: orders.iter().map(|&o| run(o)).collect(),
            })
        })
        .collect()
}
