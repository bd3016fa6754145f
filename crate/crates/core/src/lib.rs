//! Streaming certification of graph properties: provers that write
//! certificates, one-pass space-metered verifiers that check them against an
//! adversarially ordered edge stream, brute-force oracles, and the lower-bound
//! gadget families.

pub mod bits;
pub mod cert;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod meter;
pub mod oracles;
pub mod provers;
pub mod stream;
pub mod verdict;
pub mod verifiers;
