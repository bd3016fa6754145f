use super::{Base, Failed, StreamVerifier};
use crate::bits::bits_for;
use crate::cert::{self, CertRef, Fields};
use crate::graph::Edge;
use crate::meter::SpaceReport;
use crate::verdict::{Reason, Verdict};

/// Chromatic number at most `k`, certified by a proper colouring.
pub struct ColoringAtMost<'a> {
    base: Base,
    colors: Fields<'a>,
}

impl<'a> ColoringAtMost<'a> {
    pub fn new(n: usize, k: usize, c: CertRef<'a>) -> Result<Self, Failed> {
        let mut base = Base::new(n, c.semantic_bits);
        base.meter.scratch(3).unwrap();
        base.meter.register("threshold", bits_for(k as u64) as u64);
        let colors = match cert::decode_coloring(n, k, &c) {
            Ok(f) => f,
            Err(r) => return Err(Failed::new(base, r)),
        };
        if (0..n).any(|v| colors.raw(v) + 1 > k as u64) {
            return Err(Failed::new(base, Reason::ColorOutOfRange));
        }
        Ok(ColoringAtMost { base, colors })
    }
}

impl StreamVerifier for ColoringAtMost<'_> {
    fn on_edge(&mut self, e: Edge) {
        if !self.base.live(e) {
            return;
        }
        if self.colors.raw(e.u() as usize - 1) == self.colors.raw(e.v() as usize - 1) {
            self.base.fail(Reason::MonochromaticEdge);
        }
    }

    fn finish(&mut self) -> Verdict {
        self.base.conclude(|| Ok(()))
    }

    fn report(&self) -> SpaceReport {
        self.base.report()
    }
}
