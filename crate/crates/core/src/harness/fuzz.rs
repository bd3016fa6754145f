use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cert::{self, Certificate, Scheme, SubsetEncoding};
use crate::graph::{Edge, Graph};
use crate::provers;
use crate::stream::{make_stream, OrderSpec};
use crate::verifiers;

use super::corpus::{Corpus, CorpusEntry};
use super::mix;

/// Certificates with at most this many semantic bits are enumerated in full
/// by [`FuzzMode::Exhaustive`].
pub const EXHAUSTIVE_CERT_BITS: u64 = 12;

/// Single-edge variants tried when transplanting certificates.
const EDGE_VARIANTS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FuzzMode {
    /// Random payloads shaped like a real certificate, alternating with raw
    /// random byte strings.
    RandomBytes,
    /// One flipped bit in a structured certificate file.
    BitFlip,
    /// Honest certificates of near-miss instances: the same graph at other
    /// thresholds, and one-edge-different graphs at the same threshold.
    Structured,
    /// Every payload of each structured length, for short certificates.
    Exhaustive,
}

impl FuzzMode {
    pub fn name(self) -> &'static str {
        match self {
            FuzzMode::RandomBytes => "random_bytes",
            FuzzMode::BitFlip => "bit_flip",
            FuzzMode::Structured => "structured",
            FuzzMode::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzPolicy {
    pub modes: Vec<FuzzMode>,
    /// Certificates per instance for the random and bit-flip modes.
    pub trials: usize,
    pub seed: u64,
}

impl FuzzPolicy {
    /// Random bytes, bit flips and transplants, 200 trials each.
    pub fn standard(seed: u64) -> Self {
        FuzzPolicy { modes: vec![FuzzMode::RandomBytes, FuzzMode::BitFlip, FuzzMode::Structured], trials: 200, seed }
    }
}

/// An all-zero certificate of the natural length for `(scheme, n, k)`.
pub fn blank_certificate(scheme: Scheme, n: usize, k: usize) -> Certificate {
    let bits = match scheme {
        Scheme::MmAtLeastList => cert::matching_list_bits(n, k),
        Scheme::MmAtLeastColoring => cert::matching_coloring_bits(n, 0),
        Scheme::MmAtMost => n as u64,
        Scheme::DegAtMost => cert::peel_order_bits(n),
        Scheme::DegAtLeast => cert::core_subset_bits(n, 0, SubsetEncoding::Bitvector),
        Scheme::DiamAtLeast => cert::distance_labels_bits(n, k),
        Scheme::ColoringAtMost => cert::coloring_bits(n, k),
        Scheme::IsAtLeast | Scheme::CliqueAtLeast | Scheme::VcAtMost => cert::node_set_bits(n, k.min(n)),
        Scheme::EqMatching | Scheme::EqDegeneracy => {
            let (le, ge) = scheme.halves().unwrap();
            return cert::encode_equality(scheme, &blank_certificate(le, n, k), &blank_certificate(ge, n, k));
        }
    };
    Certificate::new(scheme, bits, vec![0; bits.div_ceil(8) as usize])
}

fn clear_padding(bits: u64, payload: &mut [u8]) {
    let spare = (8 * payload.len() as u64 - bits) as u32;
    if let Some(last) = payload.last_mut() {
        *last &= (0xffu16 << spare) as u8;
    }
}

/// A certificate with the same scheme and length as `template` and a random
/// payload. Equality certificates get two random halves.
fn random_like(template: &Certificate, rng: &mut ChaCha8Rng) -> Certificate {
    if template.scheme.halves().is_some() {
        let (a, b) = cert::decode_equality(&template.as_ref()).expect("templates are well formed");
        return cert::encode_equality(template.scheme, &random_like(&a.to_owned(), rng), &random_like(&b.to_owned(), rng));
    }
    let mut payload = vec![0u8; template.payload.len()];
    rng.fill_bytes(&mut payload);
    clear_padding(template.semantic_bits, &mut payload);
    Certificate::new(template.scheme, template.semantic_bits, payload)
}

fn flip_one_bit(file: &[u8], rng: &mut ChaCha8Rng) -> Vec<u8> {
    let mut out = file.to_vec();
    let total = 8 * out.len();
    let header = 72.min(total);
    // Mostly flip payload bits; sometimes the header.
    let bit = if total > header && rng.gen_bool(0.75) { rng.gen_range(header..total) } else { rng.gen_range(0..total) };
    out[bit / 8] ^= 0x80 >> (bit % 8);
    out
}

fn one_edge_variants(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<Graph> {
    let mut changes: Vec<(bool, Edge)> = g.edges().iter().map(|&e| (false, e)).collect();
    changes.extend(g.non_edges().into_iter().map(|e| (true, e)));
    changes.shuffle(rng);
    changes
        .into_iter()
        .take(EDGE_VARIANTS)
        .map(|(add, e)| if add { g.with_edge(e).expect("non-edges can be added") } else { g.without_edge(e) })
        .collect()
}

/// Certificates honest for some near-miss instance of `(entry, k)`.
fn transplants(scheme: Scheme, entry: &CorpusEntry, k: usize, rng: &mut ChaCha8Rng) -> Vec<Certificate> {
    let g = &entry.graph;
    let mut ks: Vec<usize> = (k.saturating_sub(2)..=k + 2).filter(|&k2| k2 != k).collect();
    ks.extend(entry.params.value(scheme.parameter()));
    ks.sort_unstable();
    ks.dedup();
    let mut out: Vec<Certificate> = ks.into_iter().filter_map(|k2| provers::prove(scheme, g, k2).ok()).collect();
    out.extend(one_edge_variants(g, rng).iter().filter_map(|g2| provers::prove(scheme, g2, k).ok()));
    out
}

/// A certificate that was accepted on an illegal instance, with everything
/// needed to replay it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Breach {
    pub scheme: Scheme,
    pub graph: String,
    pub n: usize,
    pub edges: Vec<Edge>,
    pub k: usize,
    pub order: OrderSpec,
    pub mode: FuzzMode,
    pub seed: u64,
    pub certificate: Vec<u8>,
}

impl fmt::Display for Breach {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|e| format!("{}-{}", e.u(), e.v())).collect();
        let hex: String = self.certificate.iter().map(|b| format!("{b:02x}")).collect();
        write!(
            f,
            "BREACH scheme={} graph={} n={} k={} order={} mode={} seed={} edges={} cert={}",
            self.scheme,
            self.graph,
            self.n,
            self.k,
            self.order,
            self.mode.name(),
            self.seed,
            edges.join(","),
            hex
        )
    }
}

/// Outcome of all trials on one illegal instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceSummary {
    pub scheme: Scheme,
    pub graph: String,
    pub k: usize,
    pub certificates: usize,
    pub orders: usize,
    pub accepts: usize,
}

impl fmt::Display for InstanceSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "scheme={} graph={} k={} certificates={} orders={} accepts={}",
            self.scheme, self.graph, self.k, self.certificates, self.orders, self.accepts
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoundnessReport {
    pub scheme: Scheme,
    pub summaries: Vec<InstanceSummary>,
    pub breaches: Vec<Breach>,
}

impl SoundnessReport {
    pub fn trials(&self) -> usize {
        self.summaries.iter().map(|s| s.certificates * s.orders).sum()
    }
}

fn id_hash(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn candidates(scheme: Scheme, entry: &CorpusEntry, k: usize, policy: &FuzzPolicy, seed: u64) -> Vec<(FuzzMode, Vec<u8>)> {
    let n = entry.graph.node_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut templates = vec![blank_certificate(scheme, n, k)];
    templates.extend(transplants(scheme, entry, k, &mut rng));
    let mut out = Vec::new();
    for &mode in &policy.modes {
        match mode {
            FuzzMode::Structured => out.extend(templates[1..].iter().map(|c| (mode, c.to_bytes()))),
            FuzzMode::RandomBytes => {
                for i in 0..policy.trials {
                    let t = &templates[i / 2 % templates.len()];
                    let bytes = if i % 2 == 0 {
                        random_like(t, &mut rng).to_bytes()
                    } else {
                        let len = rng.gen_range(0..=2 * t.to_bytes().len() + 1);
                        let mut b = vec![0u8; len];
                        rng.fill_bytes(&mut b);
                        if len > 0 && rng.gen_bool(0.5) {
                            b[0] = scheme.tag();
                        }
                        b
                    };
                    out.push((mode, bytes));
                }
            }
            FuzzMode::BitFlip => {
                for i in 0..policy.trials {
                    let t = templates[i % templates.len()].to_bytes();
                    out.push((mode, flip_one_bit(&t, &mut rng)));
                }
            }
            FuzzMode::Exhaustive => {
                let shapes: HashSet<u64> = templates
                    .iter()
                    .filter(|t| t.scheme.halves().is_none() && t.semantic_bits <= EXHAUSTIVE_CERT_BITS)
                    .map(|t| t.semantic_bits)
                    .collect();
                let mut shapes: Vec<u64> = shapes.into_iter().collect();
                shapes.sort_unstable();
                for bits in shapes {
                    let len = bits.div_ceil(8) as usize;
                    for value in 0u64..1 << bits {
                        // Payload bits are MSB-first, so left-align the value.
                        let aligned = value << (8 * len as u64 - bits);
                        let payload = aligned.to_be_bytes()[8 - len..].to_vec();
                        out.push((mode, Certificate::new(scheme, bits, payload).to_bytes()));
                    }
                }
            }
        }
    }
    out
}

/// Fuzzes one instance, which the caller asserts is illegal, streaming every
/// candidate certificate under every order.
pub fn fuzz_instance(
    scheme: Scheme,
    entry: &CorpusEntry,
    k: usize,
    policy: &FuzzPolicy,
    orders: &[OrderSpec],
) -> (InstanceSummary, Vec<Breach>) {
    let seed = mix(mix(policy.seed, scheme.tag() as u64), id_hash(&entry.id) ^ k as u64);
    let g = &entry.graph;
    let n = g.node_count();
    let streams: Vec<_> = orders.iter().map(|&o| (o, make_stream(g, k, o))).collect();
    let certs = candidates(scheme, entry, k, policy, seed);
    let mut breaches = Vec::new();
    for (mode, bytes) in &certs {
        for (order, stream) in &streams {
            if verifiers::run_bytes(scheme, n, bytes, stream).0.is_accept() {
                breaches.push(Breach {
                    scheme,
                    graph: entry.id.clone(),
                    n,
                    edges: g.edges().to_vec(),
                    k,
                    order: *order,
                    mode: *mode,
                    seed,
                    certificate: bytes.clone(),
                });
            }
        }
    }
    let summary = InstanceSummary {
        scheme,
        graph: entry.id.clone(),
        k,
        certificates: certs.len(),
        orders: orders.len(),
        accepts: breaches.len(),
    };
    (summary, breaches)
}

/// Fuzzes every illegal instance of the corpus (see
/// [`super::Params::illegal_thresholds`]). Any acceptance is recorded as a
/// [`Breach`].
pub fn run_soundness(scheme: Scheme, corpus: &Corpus, policy: &FuzzPolicy, orders: &[OrderSpec]) -> SoundnessReport {
    let jobs: Vec<(&CorpusEntry, usize)> = corpus
        .entries
        .iter()
        .flat_map(|e| e.params.illegal_thresholds(scheme).into_iter().map(move |k| (e, k)))
        .collect();
    let results: Vec<(InstanceSummary, Vec<Breach>)> =
        jobs.par_iter().map(|&(entry, k)| fuzz_instance(scheme, entry, k, policy, orders)).collect();
    let mut report = SoundnessReport { scheme, summaries: Vec::new(), breaches: Vec::new() };
    for (s, b) in results {
        report.summaries.push(s);
        report.breaches.extend(b);
    }
    report
}
