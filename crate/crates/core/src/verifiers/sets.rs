use super::{Base, Failed, StreamVerifier};
use crate::bits::bits_for;
use crate::cert::{self, CertRef, Fields};
use crate::graph::Edge;
use crate::meter::SpaceReport;
use crate::verdict::{Reason, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    /// Independent set of size exactly `k`.
    Independent,
    /// Clique of size exactly `k`.
    Clique,
    /// Vertex cover of size at most `k`.
    Cover,
}

/// Node-set certificates. Membership is tested by scanning the certificate.
pub struct NodeSetVerifier<'a> {
    base: Base,
    kind: SetKind,
    set: Fields<'a>,
    inside: u64,
    needed: u64,
}

impl<'a> NodeSetVerifier<'a> {
    pub fn new(kind: SetKind, n: usize, k: usize, c: CertRef<'a>) -> Result<Self, Failed> {
        let mut base = Base::new(n, c.semantic_bits);
        base.meter.scratch(4).unwrap();
        let k = (k as u64).min(n as u64 + 1);
        base.meter.register("threshold", bits_for(k) as u64);
        let set = match cert::decode_node_set(n, &c) {
            Ok(f) => f,
            Err(r) => return Err(Failed::new(base, r)),
        };
        let size = set.len() as u64;
        let size_ok = match kind {
            SetKind::Independent | SetKind::Clique => size == k,
            SetKind::Cover => size <= k,
        };
        if !size_ok {
            return Err(Failed::new(base, Reason::WrongSetSize));
        }
        for i in 0..set.len() {
            if set.node(i) > n as u64 {
                return Err(Failed::new(base, Reason::MalformedCertificate));
            }
            for j in i + 1..set.len() {
                if set.raw(i) == set.raw(j) {
                    return Err(Failed::new(base, Reason::DuplicateNode));
                }
            }
        }
        let needed = size * size.saturating_sub(1) / 2;
        if kind == SetKind::Clique {
            base.meter.register("inside", bits_for(needed) as u64);
        }
        Ok(NodeSetVerifier { base, kind, set, inside: 0, needed })
    }

    fn contains(&self, v: u32) -> bool {
        (0..self.set.len()).any(|i| self.set.node(i) == v as u64)
    }
}

impl StreamVerifier for NodeSetVerifier<'_> {
    fn on_edge(&mut self, e: Edge) {
        if !self.base.live(e) {
            return;
        }
        let (a, b) = (self.contains(e.u()), self.contains(e.v()));
        match self.kind {
            SetKind::Independent if a && b => self.base.fail(Reason::EdgeInsideSet),
            SetKind::Clique if a && b => self.inside += 1,
            SetKind::Cover if !a && !b => self.base.fail(Reason::UncoveredEdge),
            _ => {}
        }
    }

    fn finish(&mut self) -> Verdict {
        let complete = self.kind != SetKind::Clique || self.inside == self.needed;
        self.base.conclude(|| if complete { Ok(()) } else { Err(Reason::CliqueIncomplete) })
    }

    fn report(&self) -> SpaceReport {
        self.base.report()
    }
}

#[cfg(test)]
mod tests {
    use crate::cert::{encode_node_set, Scheme};
    use crate::generators;
    use crate::stream::{make_stream, OrderSpec};
    use crate::verdict::{Reason, Verdict};
    use crate::verifiers::run;

    fn verdict(scheme: Scheme, g: &crate::graph::Graph, k: usize, set: &[u32]) -> Verdict {
        let c = encode_node_set(scheme, g.node_count(), set);
        run(scheme, g.node_count(), c.as_ref(), &make_stream(g, k, OrderSpec::Reversed)).0
    }

    #[test]
    fn examples() {
        let tri = generators::complete(3);
        let p4 = generators::path(4);
        assert!(verdict(Scheme::CliqueAtLeast, &tri, 3, &[1, 2, 3]).is_accept());
        assert!(verdict(Scheme::IsAtLeast, &p4, 2, &[1, 3]).is_accept());
        assert_eq!(verdict(Scheme::VcAtMost, &p4, 1, &[2]), Verdict::reject(Reason::UncoveredEdge));
        assert_eq!(verdict(Scheme::IsAtLeast, &p4, 2, &[1, 2]), Verdict::reject(Reason::EdgeInsideSet));
        assert_eq!(verdict(Scheme::IsAtLeast, &p4, 2, &[1, 1]), Verdict::reject(Reason::DuplicateNode));
        assert_eq!(verdict(Scheme::IsAtLeast, &p4, 3, &[1, 3]), Verdict::reject(Reason::WrongSetSize));
        assert_eq!(verdict(Scheme::CliqueAtLeast, &p4, 3, &[1, 2, 3]), Verdict::reject(Reason::CliqueIncomplete));
        assert!(verdict(Scheme::VcAtMost, &p4, 3, &[2, 3]).is_accept());
    }

    #[test]
    fn no_triple_of_c5_is_a_clique() {
        let c5 = generators::cycle(5);
        for a in 1..=5 {
            for b in a + 1..=5 {
                for c in b + 1..=5 {
                    assert!(!verdict(Scheme::CliqueAtLeast, &c5, 3, &[a, b, c]).is_accept());
                }
            }
        }
    }
}
