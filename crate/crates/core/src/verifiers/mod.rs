//! One-pass streaming verifiers.
//!
//! Each verifier is built from `(n, k, certificate)`, consumes the stream one
//! edge at a time and then produces a [`Verdict`]. All working state is
//! declared to a [`SpaceMeter`]; the certificate is read in place and is not
//! charged. Once a check fails the verifier ignores the rest of the stream.

mod coloring;
mod degeneracy;
mod diameter;
mod matching;
mod sets;

use crate::bits::bits_for;
use crate::cert::{self, CertRef, Scheme};
use crate::graph::Edge;
use crate::meter::{register_width, SpaceMeter, SpaceReport};
use crate::stream::EdgeStream;
use crate::verdict::{Reason, Verdict};

pub use coloring::ColoringAtMost;
pub use degeneracy::{DegAtLeast, DegAtMost};
pub use diameter::DiamAtLeast;
pub use matching::{MmAtLeastColoring, MmAtLeastList, MmAtMost};
pub use sets::{NodeSetVerifier, SetKind};

pub trait StreamVerifier {
    fn on_edge(&mut self, e: Edge);
    fn finish(&mut self) -> Verdict;
    fn report(&self) -> SpaceReport;
}

/// State shared by every verifier: instance size, meter and the sticky
/// rejection flag.
#[derive(Debug, Clone)]
pub(crate) struct Base {
    pub n: usize,
    pub meter: SpaceMeter,
    pub cert_bits: u64,
    pub rejected: Option<Reason>,
}

impl Base {
    pub fn new(n: usize, cert_bits: u64) -> Self {
        Base { n, meter: SpaceMeter::new(n), cert_bits, rejected: None }
    }

    /// True when `e` should be processed: nothing failed yet and both
    /// endpoints lie in `1..=n`.
    pub fn live(&mut self, e: Edge) -> bool {
        if self.rejected.is_some() {
            return false;
        }
        if e.u() == 0 || e.v() as usize > self.n {
            self.rejected = Some(Reason::EdgeOutOfRange);
            return false;
        }
        true
    }

    pub fn fail(&mut self, reason: Reason) {
        self.rejected.get_or_insert(reason);
    }

    /// The final verdict: the sticky rejection if any, else `check`.
    pub fn conclude(&self, check: impl FnOnce() -> Result<(), Reason>) -> Verdict {
        match self.rejected {
            Some(r) => Verdict::reject(r),
            None => match check() {
                Ok(()) => Verdict::accept(),
                Err(r) => Verdict::reject(r),
            },
        }
    }

    pub fn report(&self) -> SpaceReport {
        self.meter.report(self.cert_bits)
    }
}

/// A verifier whose certificate failed the initial checks.
pub struct Failed(pub(crate) Base);

impl Failed {
    pub(crate) fn new(base: Base, reason: Reason) -> Self {
        let mut base = base;
        base.fail(reason);
        Failed(base)
    }
}

impl StreamVerifier for Failed {
    fn on_edge(&mut self, _e: Edge) {}

    fn finish(&mut self) -> Verdict {
        self.0.conclude(|| Ok(()))
    }

    fn report(&self) -> SpaceReport {
        self.0.report()
    }
}

/// Runs both halves of an equality certificate side by side.
pub struct Equality<'a> {
    at_most: Box<dyn StreamVerifier + 'a>,
    at_least: Box<dyn StreamVerifier + 'a>,
}

impl StreamVerifier for Equality<'_> {
    fn on_edge(&mut self, e: Edge) {
        self.at_most.on_edge(e);
        self.at_least.on_edge(e);
    }

    fn finish(&mut self) -> Verdict {
        let a = self.at_most.finish();
        let b = self.at_least.finish();
        if !a.is_accept() {
            a
        } else {
            b
        }
    }

    fn report(&self) -> SpaceReport {
        self.at_most.report().combine(self.at_least.report())
    }
}

fn boxed<'a, V: StreamVerifier + 'a>(r: Result<V, Failed>) -> Box<dyn StreamVerifier + 'a> {
    match r {
        Ok(v) => Box::new(v),
        Err(f) => Box::new(f),
    }
}

/// Initialises the verifier for `scheme` on an `n`-node instance with
/// threshold `k`.
pub fn init<'a>(scheme: Scheme, n: usize, k: usize, c: CertRef<'a>) -> Box<dyn StreamVerifier + 'a> {
    if c.scheme != scheme {
        return Box::new(Failed::new(Base::new(n, c.semantic_bits), Reason::WrongScheme));
    }
    match scheme {
        Scheme::MmAtLeastList => boxed(MmAtLeastList::new(n, k, c)),
        Scheme::MmAtLeastColoring => boxed(MmAtLeastColoring::new(n, k, c)),
        Scheme::MmAtMost => boxed(MmAtMost::new(n, k, c)),
        Scheme::DegAtMost => boxed(DegAtMost::new(n, k, c)),
        Scheme::DegAtLeast => boxed(DegAtLeast::new(n, k, c)),
        Scheme::DiamAtLeast => boxed(DiamAtLeast::new(n, k, c)),
        Scheme::ColoringAtMost => boxed(ColoringAtMost::new(n, k, c)),
        Scheme::IsAtLeast => boxed(NodeSetVerifier::new(SetKind::Independent, n, k, c)),
        Scheme::CliqueAtLeast => boxed(NodeSetVerifier::new(SetKind::Clique, n, k, c)),
        Scheme::VcAtMost => boxed(NodeSetVerifier::new(SetKind::Cover, n, k, c)),
        Scheme::EqMatching | Scheme::EqDegeneracy => match cert::decode_equality(&c) {
            Ok((le, ge)) => {
                let (sle, sge) = scheme.halves().unwrap();
                Box::new(Equality { at_most: init(sle, n, k, le), at_least: init(sge, n, k, ge) })
            }
            Err(r) => Box::new(Failed::new(Base::new(n, c.semantic_bits), r)),
        },
    }
}

/// Runs one verifier over `stream`.
pub fn run(scheme: Scheme, n: usize, c: CertRef<'_>, stream: &EdgeStream) -> (Verdict, SpaceReport) {
    let mut v = init(scheme, n, stream.threshold(), c);
    for &e in stream.edges() {
        v.on_edge(e);
    }
    let verdict = v.finish();
    (verdict, v.report())
}

/// Like [`run`], starting from a raw certificate file. Unparseable files are
/// rejected as malformed.
pub fn run_bytes(scheme: Scheme, n: usize, bytes: &[u8], stream: &EdgeStream) -> (Verdict, SpaceReport) {
    match CertRef::parse(bytes) {
        Ok(c) => run(scheme, n, c, stream),
        Err(_) => (Verdict::reject(Reason::MalformedCertificate), SpaceReport::default()),
    }
}

fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Closed-form ceiling on `peak_state_bits` for a run of `scheme`: 64
/// registers of `⌈log2(n+2)⌉` bits plus the scheme's declared counters.
pub fn space_bound(scheme: Scheme, n: usize, k: usize) -> u64 {
    let registers = 64 * register_width(n) as u64;
    let (n64, k64) = (n as u64, k as u64);
    let id = bits_for(n64) as u64;
    match scheme {
        Scheme::MmAtLeastList | Scheme::IsAtLeast | Scheme::VcAtMost => registers,
        Scheme::CliqueAtLeast => registers + bits_for(choose2(k64.min(n64 + 1))) as u64,
        Scheme::DiamAtLeast | Scheme::ColoringAtMost => registers + bits_for(k64) as u64,
        Scheme::MmAtLeastColoring => n64 + registers,
        Scheme::DegAtMost | Scheme::DegAtLeast => n64 * bits_for(k64.saturating_add(1)) as u64 + registers,
        Scheme::MmAtMost => 2 * n64.saturating_sub(1) * id + n64 * id + registers,
        Scheme::EqMatching | Scheme::EqDegeneracy => {
            let (a, b) = scheme.halves().unwrap();
            space_bound(a, n, k) + space_bound(b, n, k)
        }
    }
}
