//! Semantic space accounting for verifier runs.
//!
//! A verifier declares each piece of working state as a named component with
//! an explicit bit width. The meter tracks the sum of live widths and its peak.
//! Reads of the certificate are never charged.

use thiserror::Error;

use crate::bits::bits_for;

/// At most this many scratch registers may be live at once.
pub const MAX_SCRATCH: u32 = 8;

/// Width of one scratch register for an `n`-node instance: `⌈log2(n+2)⌉`.
pub fn register_width(n: usize) -> u32 {
    bits_for(n as u64 + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComponentId(usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeterError {
    #[error("unknown meter component {0}")]
    UnknownComponent(usize),
    #[error("requested {0} scratch registers; at most {MAX_SCRATCH} may be live")]
    ScratchExhausted(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SpaceReport {
    pub peak_state_bits: u64,
    pub certificate_bits: u64,
}

impl SpaceReport {
    /// Space of two verifiers running side by side on one pass.
    pub fn combine(self, other: SpaceReport) -> SpaceReport {
        SpaceReport {
            peak_state_bits: self.peak_state_bits + other.peak_state_bits,
            certificate_bits: self.certificate_bits + other.certificate_bits,
        }
    }
}

#[derive(Debug, Clone)]
struct Component {
    name: &'static str,
    width: u64,
    live: bool,
}

#[derive(Debug, Clone)]
pub struct SpaceMeter {
    register_width: u32,
    components: Vec<Component>,
    current: u64,
    peak: u64,
}

impl SpaceMeter {
    pub fn new(n: usize) -> Self {
        SpaceMeter { register_width: register_width(n), components: Vec::new(), current: 0, peak: 0 }
    }

    pub fn register_width(&self) -> u32 {
        self.register_width
    }

    pub fn register(&mut self, name: &'static str, width_bits: u64) -> ComponentId {
        self.components.push(Component { name, width: width_bits, live: true });
        self.current += width_bits;
        self.peak = self.peak.max(self.current);
        ComponentId(self.components.len() - 1)
    }

    /// Declares `count` scratch registers as one component.
    pub fn scratch(&mut self, count: u32) -> Result<ComponentId, MeterError> {
        if count > MAX_SCRATCH {
            return Err(MeterError::ScratchExhausted(count));
        }
        Ok(self.register("scratch", count as u64 * self.register_width as u64))
    }

    fn live_mut(&mut self, id: ComponentId) -> Result<&mut Component, MeterError> {
        match self.components.get_mut(id.0) {
            Some(c) if c.live => Ok(c),
            _ => Err(MeterError::UnknownComponent(id.0)),
        }
    }

    pub fn resize(&mut self, id: ComponentId, width_bits: u64) -> Result<(), MeterError> {
        let c = self.live_mut(id)?;
        let old = std::mem::replace(&mut c.width, width_bits);
        self.current = self.current - old + width_bits;
        self.peak = self.peak.max(self.current);
        Ok(())
    }

    pub fn release(&mut self, id: ComponentId) -> Result<(), MeterError> {
        let c = self.live_mut(id)?;
        c.live = false;
        let w = c.width;
        self.current -= w;
        Ok(())
    }

    pub fn width(&self, id: ComponentId) -> Result<u64, MeterError> {
        match self.components.get(id.0) {
            Some(c) if c.live => Ok(c.width),
            _ => Err(MeterError::UnknownComponent(id.0)),
        }
    }

    pub fn current(&self) -> u64 {
        self.current
    }

    pub fn peak(&self) -> u64 {
        self.peak
    }

    /// Live components and their widths, in registration order.
    pub fn live_components(&self) -> Vec<(&'static str, u64)> {
        self.components.iter().filter(|c| c.live).map(|c| (c.name, c.width)).collect()
    }

    pub fn report(&self, certificate_bits: u64) -> SpaceReport {
        SpaceReport { peak_state_bits: self.peak, certificate_bits }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn resize_raises_peak() {
        let mut m = SpaceMeter::new(10);
        let c = m.register("counter", 7);
        m.resize(c, 9).unwrap();
        assert_eq!(m.peak(), 9);
    }

    #[test]
    fn live_components_sum() {
        let mut m = SpaceMeter::new(10);
        m.register("a", 5);
        m.register("b", 6);
        assert_eq!(m.peak(), 11);
    }

    #[test]
    fn constant_run() {
        let mut m = SpaceMeter::new(10);
        m.register("a", 3);
        m.register("b", 4);
        assert_eq!(m.report(0).peak_state_bits, 7);
    }

    #[test]
    fn peak_survives_shrink_and_release() {
        let mut m = SpaceMeter::new(10);
        let a = m.register("a", 10);
        m.resize(a, 2).unwrap();
        assert_eq!((m.current(), m.peak()), (2, 10));
        m.release(a).unwrap();
        assert_eq!(m.current(), 0);
        assert_eq!(m.resize(a, 1), Err(MeterError::UnknownComponent(0)));
        assert_eq!(m.release(ComponentId(7)), Err(MeterError::UnknownComponent(7)));
    }

    #[test]
    fn scratch_registers() {
        let mut m = SpaceMeter::new(254);
        assert_eq!(m.register_width(), 8);
        m.scratch(8).unwrap();
        assert_eq!(m.peak(), 64);
        assert_eq!(m.scratch(9), Err(MeterError::ScratchExhausted(9)));
        assert_eq!(register_width(1), 2);
        assert_eq!(register_width(2), 2);
        assert_eq!(register_width(3), 3);
    }

    proptest! {
        #[test]
        fn peak_is_monotone(ops in prop::collection::vec((0usize..4, 0u64..100, any::<bool>()), 1..60)) {
            let mut m = SpaceMeter::new(100);
            let ids: Vec<_> = (0..4).map(|_| m.register("c", 0)).collect();
            let mut last = m.peak();
            for (i, w, release) in ops {
                if release {
                    let _ = m.release(ids[i]);
                } else {
                    let _ = m.resize(ids[i], w);
                }
                prop_assert!(m.peak() >= last);
                prop_assert!(m.peak() >= m.current());
                last = m.peak();
            }
        }
    }
}
