use super::{Base, Failed, StreamVerifier};
use crate::bits::{bits_for, PackedArray};
use crate::cert::{self, CertRef, Fields, SubsetView};
use crate::graph::Edge;
use crate::meter::SpaceReport;
use crate::verdict::{Reason, Verdict};

/// Degeneracy at most `k`, certified by an ordering `π`. Each edge is charged
/// to its endpoint with the smaller `π`; no node may be charged more than `k`
/// times.
pub struct DegAtMost<'a> {
    base: Base,
    pi: Fields<'a>,
    k: u64,
    counters: PackedArray,
}

impl<'a> DegAtMost<'a> {
    pub fn new(n: usize, k: usize, c: CertRef<'a>) -> Result<Self, Failed> {
        let mut base = Base::new(n, c.semantic_bits);
        base.meter.scratch(4).unwrap();
        let k = (k as u64).min(n as u64);
        base.meter.register("threshold", bits_for(k) as u64);
        let pi = match cert::decode_peel_order(n, &c) {
            Ok(f) => f,
            Err(r) => return Err(Failed::new(base, r)),
        };
        let mut counters = PackedArray::new(n, bits_for(k + 1));
        base.meter.register("counters", counters.bits());
        // The counters double as seen-flags for the permutation check.
        for v in 0..n {
            let p = pi.raw(v) as usize;
            if p >= n || counters.get(p) != 0 {
                return Err(Failed::new(base, Reason::NotAPermutation));
            }
            counters.set(p, 1);
        }
        counters.fill(0);
        Ok(DegAtMost { base, pi, k, counters })
    }
}

impl StreamVerifier for DegAtMost<'_> {
    fn on_edge(&mut self, e: Edge) {
        if !self.base.live(e) {
            return;
        }
        let (u, v) = (e.u() as usize - 1, e.v() as usize - 1);
        let w = if self.pi.raw(u) < self.pi.raw(v) { u } else { v };
        let count = self.counters.get(w) + 1;
        self.counters.set(w, count);
        if count > self.k {
            self.base.fail(Reason::CounterExceeded);
        }
    }

    fn finish(&mut self) -> Verdict {
        self.base.conclude(|| Ok(()))
    }

    fn report(&self) -> SpaceReport {
        self.base.report()
    }
}

/// Degeneracy at least `k`, certified by a node set `V′` inducing minimum
/// degree at least `k`. One saturating counter per member of `V′`, addressed
/// by its position (list order, or rank in the bit vector).
pub struct DegAtLeast<'a> {
    base: Base,
    subset: SubsetView<'a>,
    k: u64,
    counters: PackedArray,
}

impl<'a> DegAtLeast<'a> {
    pub fn new(n: usize, k: usize, c: CertRef<'a>) -> Result<Self, Failed> {
        let mut base = Base::new(n, c.semantic_bits);
        base.meter.scratch(4).unwrap();
        let k = (k as u64).min(n as u64);
        base.meter.register("threshold", bits_for(k) as u64);
        let subset = match cert::decode_core_subset(n, &c) {
            Ok(s) => s,
            Err(r) => return Err(Failed::new(base, r)),
        };
        let size = match subset {
            SubsetView::List(ids) => {
                for i in 0..ids.len() {
                    if ids.node(i) > n as u64 {
                        return Err(Failed::new(base, Reason::MalformedCertificate));
                    }
                    for j in i + 1..ids.len() {
                        if ids.raw(i) == ids.raw(j) {
                            return Err(Failed::new(base, Reason::DuplicateNode));
                        }
                    }
                }
                ids.len()
            }
            SubsetView::Bitvector(bits) => bits.count_ones(0, n) as usize,
        };
        if k >= 1 && size == 0 {
            return Err(Failed::new(base, Reason::EmptySubset));
        }
        let counters = PackedArray::new(size, bits_for(k));
        base.meter.register("counters", counters.bits());
        Ok(DegAtLeast { base, subset, k, counters })
    }

    /// Counter slot of 0-based node `v`, if `v` is in `V′`.
    fn slot(&self, v: usize) -> Option<usize> {
        match self.subset {
            SubsetView::List(ids) => (0..ids.len()).find(|&i| ids.raw(i) == v as u64),
            SubsetView::Bitvector(bits) => (bits.raw(v) == 1).then(|| bits.count_ones(0, v) as usize),
        }
    }
}

impl StreamVerifier for DegAtLeast<'_> {
    fn on_edge(&mut self, e: Edge) {
        if !self.base.live(e) {
            return;
        }
        let (su, sv) = (self.slot(e.u() as usize - 1), self.slot(e.v() as usize - 1));
        if let (Some(a), Some(b)) = (su, sv) {
            for s in [a, b] {
                let c = self.counters.get(s);
                if c < self.k {
                    self.counters.set(s, c + 1);
                }
            }
        }
    }

    fn finish(&mut self) -> Verdict {
        let (k, counters) = (self.k, &self.counters);
        self.base.conclude(|| {
            if (0..counters.len()).all(|i| counters.get(i) == k) {
                Ok(())
            } else {
                Err(Reason::CounterShort)
            }
        })
    }

    fn report(&self) -> SpaceReport {
        self.base.report()
    }
}

#[cfg(test)]
mod tests {
    use crate::cert::{encode_core_subset, encode_core_subset_as, encode_peel_order, Scheme, SubsetEncoding};
    use crate::generators;
    use crate::stream::{make_stream, OrderSpec};
    use crate::verdict::{Reason, Verdict};
    use crate::verifiers::run;

    fn verdict(scheme: Scheme, g: &crate::graph::Graph, k: usize, c: &crate::cert::Certificate) -> Verdict {
        run(scheme, g.node_count(), c.as_ref(), &make_stream(g, k, OrderSpec::Shuffled(3))).0
    }

    #[test]
    fn at_most_examples() {
        let s = Scheme::DegAtMost;
        assert!(verdict(s, &generators::path(4), 1, &encode_peel_order(&[1, 2, 3, 4])).is_accept());
        assert!(verdict(s, &generators::edgeless(3), 0, &encode_peel_order(&[1, 2, 3])).is_accept());
        assert_eq!(
            verdict(s, &generators::complete(4), 2, &encode_peel_order(&[2, 4, 1, 3])),
            Verdict::reject(Reason::CounterExceeded)
        );
        assert_eq!(
            verdict(s, &generators::path(3), 1, &encode_peel_order(&[1, 1, 2])),
            Verdict::reject(Reason::NotAPermutation)
        );
    }

    #[test]
    fn at_least_examples() {
        let s = Scheme::DegAtLeast;
        assert!(verdict(s, &generators::complete(4), 3, &encode_core_subset(4, &[1, 2, 3, 4])).is_accept());
        assert!(verdict(s, &generators::cycle(4), 2, &encode_core_subset(4, &[1, 2, 3, 4])).is_accept());
        assert_eq!(
            verdict(s, &generators::path(4), 2, &encode_core_subset(4, &[1, 2, 3, 4])),
            Verdict::reject(Reason::CounterShort)
        );
        assert_eq!(verdict(s, &generators::path(4), 1, &encode_core_subset(4, &[])), Verdict::reject(Reason::EmptySubset));
    }

    #[test]
    fn at_least_list_mode() {
        // A triangle inside a long path: the list encoding is the short one.
        let mut edges: Vec<(u32, u32)> = (1..40).map(|i| (i, i + 1)).collect();
        edges.push((1, 3));
        let g = crate::graph::Graph::new(40, edges).unwrap();
        let c = encode_core_subset(40, &[1, 2, 3]);
        assert!(verdict(Scheme::DegAtLeast, &g, 2, &c).is_accept());
        let dup = encode_core_subset_as(40, &[1, 2, 2], SubsetEncoding::List);
        assert_eq!(verdict(Scheme::DegAtLeast, &g, 2, &dup), Verdict::reject(Reason::DuplicateNode));
    }
}
