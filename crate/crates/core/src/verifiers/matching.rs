use super::{Base, Failed, StreamVerifier};
use crate::bits::{bits_for, PackedArray};
use crate::cert::{self, CertRef, Fields};
use crate::graph::Edge;
use crate::meter::{ComponentId, SpaceReport};
use crate::verdict::{Reason, Verdict};

/// Matching of size at least `k`, certified by `k` disjoint edges.
pub struct MmAtLeastList<'a> {
    base: Base,
    ends: Fields<'a>,
    count: u64,
    matched: u64,
}

impl<'a> MmAtLeastList<'a> {
    pub fn new(n: usize, k: usize, c: CertRef<'a>) -> Result<Self, Failed> {
        let mut base = Base::new(n, c.semantic_bits);
        base.meter.scratch(6).unwrap();
        base.meter.register("threshold", bits_for((k as u64).min(n as u64 + 1)) as u64);
        let ends = match cert::decode_matching_list(n, &c) {
            Ok(f) => f,
            Err(r) => return Err(Failed::new(base, r)),
        };
        let count = ends.len() as u64 / 2;
        if count != k as u64 {
            return Err(Failed::new(base, Reason::CountMismatch));
        }
        // Every endpoint against every later one, straight off the certificate.
        for i in 0..ends.len() {
            let a = ends.raw(i);
            for j in i + 1..ends.len() {
                if ends.raw(j) == a {
                    return Err(Failed::new(base, Reason::NotAMatching));
                }
            }
        }
        base.meter.register("matched", bits_for(count) as u64);
        Ok(MmAtLeastList { base, ends, count, matched: 0 })
    }
}

impl StreamVerifier for MmAtLeastList<'_> {
    fn on_edge(&mut self, e: Edge) {
        if !self.base.live(e) {
            return;
        }
        let (u, v) = (e.u() as u64, e.v() as u64);
        for i in 0..self.count as usize {
            let (a, b) = (self.ends.node(2 * i), self.ends.node(2 * i + 1));
            if (a, b) == (u, v) || (a, b) == (v, u) {
                self.matched += 1;
                return;
            }
        }
    }

    fn finish(&mut self) -> Verdict {
        self.base.conclude(|| if self.matched == self.count { Ok(()) } else { Err(Reason::CountMismatch) })
    }

    fn report(&self) -> SpaceReport {
        self.base.report()
    }
}

/// Matching of size at least `k`, certified by a colouring whose
/// monochromatic edges form a matching of size at least `k`.
pub struct MmAtLeastColoring<'a> {
    base: Base,
    colors: Fields<'a>,
    flags: PackedArray,
    k: u64,
    mono: u64,
}

impl<'a> MmAtLeastColoring<'a> {
    pub fn new(n: usize, k: usize, c: CertRef<'a>) -> Result<Self, Failed> {
        let mut base = Base::new(n, c.semantic_bits);
        base.meter.scratch(4).unwrap();
        let k = (k as u64).min(n as u64);
        base.meter.register("threshold", bits_for(k) as u64);
        let colors = match cert::decode_matching_coloring(n, &c) {
            Ok(f) => f,
            Err(r) => return Err(Failed::new(base, r)),
        };
        let flags = PackedArray::new(n, 1);
        base.meter.register("flags", flags.bits());
        base.meter.register("monochromatic", bits_for(n as u64 / 2) as u64);
        Ok(MmAtLeastColoring { base, colors, flags, k, mono: 0 })
    }
}

impl StreamVerifier for MmAtLeastColoring<'_> {
    fn on_edge(&mut self, e: Edge) {
        if !self.base.live(e) {
            return;
        }
        let (u, v) = (e.u() as usize - 1, e.v() as usize - 1);
        if self.colors.raw(u) != self.colors.raw(v) {
            return;
        }
        if self.flags.get(u) == 1 || self.flags.get(v) == 1 {
            self.base.fail(Reason::FlagConflict);
            return;
        }
        self.flags.set(u, 1);
        self.flags.set(v, 1);
        self.mono += 1;
    }

    fn finish(&mut self) -> Verdict {
        self.base.conclude(|| if self.mono >= self.k { Ok(()) } else { Err(Reason::TooFewMonochromatic) })
    }

    fn report(&self) -> SpaceReport {
        self.base.report()
    }
}

/// Matching of size at most `k`, certified by a Tutte–Berge set `U`. Keeps a
/// spanning forest of `G - U` with a union–find (path compression only).
pub struct MmAtMost<'a> {
    base: Base,
    in_u: Fields<'a>,
    k: u64,
    parent: PackedArray,
    forest: PackedArray,
    forest_id: ComponentId,
}

impl<'a> MmAtMost<'a> {
    pub fn new(n: usize, k: usize, c: CertRef<'a>) -> Result<Self, Failed> {
        let mut base = Base::new(n, c.semantic_bits);
        base.meter.scratch(6).unwrap();
        let k = (k as u64).min(n as u64);
        base.meter.register("threshold", bits_for(k) as u64);
        let in_u = match cert::decode_tutte_berge(n, &c) {
            Ok(f) => f,
            Err(r) => return Err(Failed::new(base, r)),
        };
        let width = bits_for(n as u64);
        let parent = PackedArray::new(n, width);
        base.meter.register("parents", parent.bits());
        let forest = PackedArray::new(0, width);
        let forest_id = base.meter.register("forest", 0);
        Ok(MmAtMost { base, in_u, k, parent, forest, forest_id })
    }

    /// Root of `x` (0-based); parent entries hold `root + 1`, 0 marks a root.
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent.get(root) != 0 {
            root = self.parent.get(root) as usize - 1;
        }
        let mut cur = x;
        while cur != root {
            let next = self.parent.get(cur) as usize - 1;
            self.parent.set(cur, root as u64 + 1);
            cur = next;
        }
        root
    }
}

impl StreamVerifier for MmAtMost<'_> {
    fn on_edge(&mut self, e: Edge) {
        if !self.base.live(e) {
            return;
        }
        let (u, v) = (e.u() as usize - 1, e.v() as usize - 1);
        if self.in_u.raw(u) == 1 || self.in_u.raw(v) == 1 {
            return;
        }
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return;
        }
        self.parent.set(ru, rv as u64 + 1);
        self.forest.push(e.u() as u64);
        self.forest.push(e.v() as u64);
        self.base.meter.resize(self.forest_id, self.forest.bits()).unwrap();
    }

    fn finish(&mut self) -> Verdict {
        if self.base.rejected.is_some() {
            return self.base.conclude(|| Ok(()));
        }
        let n = self.base.n;
        for v in 0..n {
            self.find(v);
        }
        let u_size = self.in_u.count_ones(0, n);
        // A tree component has an odd number of nodes iff it has an even
        // number of forest edges.
        let mut odd = 0u64;
        for r in 0..n {
            if self.in_u.raw(r) == 1 || self.parent.get(r) != 0 {
                continue;
            }
            let mut parity = 0u64;
            for i in (0..self.forest.len()).step_by(2) {
                let a = self.forest.get(i) as usize - 1;
                if a == r || self.parent.get(a) as usize == r + 1 {
                    parity ^= 1;
                }
            }
            odd += 1 - parity;
        }
        let k = self.k;
        self.base.conclude(|| {
            if 2 * k + odd >= u_size + n as u64 {
                Ok(())
            } else {
                Err(Reason::TutteBergeViolated)
            }
        })
    }

    fn report(&self) -> SpaceReport {
        self.base.report()
    }
}
