use super::{Base, Failed, StreamVerifier};
use crate::bits::bits_for;
use crate::cert::{self, CertRef, Fields};
use crate::graph::Edge;
use crate::meter::SpaceReport;
use crate::verdict::{Reason, Verdict};

/// Diameter at least `k`, certified by distance labels: some node has label
/// 0, some node has label at least `k`, and labels change by at most one
/// along every edge.
pub struct DiamAtLeast<'a> {
    base: Base,
    labels: Fields<'a>,
}

impl<'a> DiamAtLeast<'a> {
    pub fn new(n: usize, k: usize, c: CertRef<'a>) -> Result<Self, Failed> {
        let mut base = Base::new(n, c.semantic_bits);
        base.meter.scratch(4).unwrap();
        base.meter.register("threshold", bits_for(k as u64) as u64);
        let labels = match cert::decode_distance_labels(n, k, &c) {
            Ok(f) => f,
            Err(r) => return Err(Failed::new(base, r)),
        };
        let k = k as u64;
        if (0..n).any(|v| labels.raw(v) > k.saturating_add(1)) {
            return Err(Failed::new(base, Reason::MalformedCertificate));
        }
        if n == 0 {
            return if k == 0 { Ok(DiamAtLeast { base, labels }) } else { Err(Failed::new(base, Reason::MissingFarLabel)) };
        }
        if !(0..n).any(|v| labels.raw(v) == 0) {
            return Err(Failed::new(base, Reason::MissingZeroLabel));
        }
        if !(0..n).any(|v| labels.raw(v) >= k) {
            return Err(Failed::new(base, Reason::MissingFarLabel));
        }
        Ok(DiamAtLeast { base, labels })
    }
}

impl StreamVerifier for DiamAtLeast<'_> {
    fn on_edge(&mut self, e: Edge) {
        if !self.base.live(e) {
            return;
        }
        let a = self.labels.raw(e.u() as usize - 1);
        let b = self.labels.raw(e.v() as usize - 1);
        if a.abs_diff(b) > 1 {
            self.base.fail(Reason::Shortcut);
        }
    }

    fn finish(&mut self) -> Verdict {
        self.base.conclude(|| Ok(()))
    }

    fn report(&self) -> SpaceReport {
        self.base.report()
    }
}

#[cfg(test)]
mod tests {
    use crate::cert::{encode_distance_labels, Scheme};
    use crate::generators;
    use crate::stream::{make_stream, OrderSpec};
    use crate::verdict::{Reason, Verdict};
    use crate::verifiers::run;

    #[test]
    fn examples() {
        let s = Scheme::DiamAtLeast;
        let p4 = generators::path(4);
        let c = encode_distance_labels(3, &[0, 1, 2, 3]);
        assert!(run(s, 4, c.as_ref(), &make_stream(&p4, 3, OrderSpec::Reversed)).0.is_accept());
        let tri = generators::complete(3);
        let c = encode_distance_labels(2, &[0, 1, 2]);
        assert_eq!(run(s, 3, c.as_ref(), &make_stream(&tri, 2, OrderSpec::AsGiven)).0, Verdict::reject(Reason::Shortcut));
        let c = encode_distance_labels(1, &[2, 2, 2]);
        assert_eq!(
            run(s, 3, c.as_ref(), &make_stream(&tri, 1, OrderSpec::AsGiven)).0,
            Verdict::reject(Reason::MissingZeroLabel)
        );
    }

    #[test]
    fn monotone_on_paths() {
        for len in 1..=12usize {
            let g = generators::path(len + 1);
            for k in 0..=len + 2 {
                let labels = crate::provers::distance_labels(&g, k);
                assert_eq!(labels.is_ok(), k <= len);
                let labels = labels.unwrap_or_else(|_| (0..=len as u64).map(|d| d.min(k as u64 + 1)).collect());
                let c = encode_distance_labels(k, &labels);
                let v = run(Scheme::DiamAtLeast, len + 1, c.as_ref(), &make_stream(&g, k, OrderSpec::Shuffled(k as u64))).0;
                assert_eq!(v.is_accept(), k <= len, "len {len} k {k}");
            }
        }
    }
}
