//! Certificate container, file format and per-scheme codecs.
//!
//! File layout: one tag byte, the semantic bit count as a big-endian `u64`,
//! then the payload. Basic payloads are MSB-first bit strings whose length is
//! exactly `ceil(semantic_bits / 8)` bytes with zero padding. Node ids are
//! stored as `id - 1` in `bits_for(n - 1)` bits.

use std::fmt;

use thiserror::Error;

use crate::bits::{bits_for, BitView, BitWriter};
use crate::graph::{Edge, Node};
use crate::verdict::Reason;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    MmAtLeastList,
    MmAtLeastColoring,
    MmAtMost,
    DegAtMost,
    DegAtLeast,
    DiamAtLeast,
    ColoringAtMost,
    IsAtLeast,
    CliqueAtLeast,
    VcAtMost,
    EqMatching,
    EqDegeneracy,
}

/// The graph parameter a scheme talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parameter {
    Matching,
    Degeneracy,
    Diameter,
    Chromatic,
    IndependentSet,
    Clique,
    VertexCover,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    AtLeast,
    AtMost,
    Exactly,
}

impl Scheme {
    pub const ALL: [Scheme; 12] = [
        Scheme::MmAtLeastList,
        Scheme::MmAtLeastColoring,
        Scheme::MmAtMost,
        Scheme::DegAtMost,
        Scheme::DegAtLeast,
        Scheme::DiamAtLeast,
        Scheme::ColoringAtMost,
        Scheme::IsAtLeast,
        Scheme::CliqueAtLeast,
        Scheme::VcAtMost,
        Scheme::EqMatching,
        Scheme::EqDegeneracy,
    ];

    /// The ten single-direction schemes.
    pub const BASIC: [Scheme; 10] = [
        Scheme::MmAtLeastList,
        Scheme::MmAtLeastColoring,
        Scheme::MmAtMost,
        Scheme::DegAtMost,
        Scheme::DegAtLeast,
        Scheme::DiamAtLeast,
        Scheme::ColoringAtMost,
        Scheme::IsAtLeast,
        Scheme::CliqueAtLeast,
        Scheme::VcAtMost,
    ];

    pub fn tag(self) -> u8 {
        Scheme::ALL.iter().position(|&s| s == self).unwrap() as u8 + 1
    }

    pub fn from_tag(tag: u8) -> Option<Scheme> {
        Scheme::ALL.get((tag as usize).checked_sub(1)?).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Scheme::MmAtLeastList => "mm_atleast_list",
            Scheme::MmAtLeastColoring => "mm_atleast_coloring",
            Scheme::MmAtMost => "mm_atmost",
            Scheme::DegAtMost => "deg_atmost",
            Scheme::DegAtLeast => "deg_atleast",
            Scheme::DiamAtLeast => "diam_atleast",
            Scheme::ColoringAtMost => "coloring_atmost",
            Scheme::IsAtLeast => "is_atleast",
            Scheme::CliqueAtLeast => "clique_atleast",
            Scheme::VcAtMost => "vc_atmost",
            Scheme::EqMatching => "eq_matching",
            Scheme::EqDegeneracy => "eq_degeneracy",
        }
    }

    pub fn from_name(name: &str) -> Option<Scheme> {
        Scheme::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn parameter(self) -> Parameter {
        match self {
            Scheme::MmAtLeastList | Scheme::MmAtLeastColoring | Scheme::MmAtMost | Scheme::EqMatching => {
                Parameter::Matching
            }
            Scheme::DegAtMost | Scheme::DegAtLeast | Scheme::EqDegeneracy => Parameter::Degeneracy,
            Scheme::DiamAtLeast => Parameter::Diameter,
            Scheme::ColoringAtMost => Parameter::Chromatic,
            Scheme::IsAtLeast => Parameter::IndependentSet,
            Scheme::CliqueAtLeast => Parameter::Clique,
            Scheme::VcAtMost => Parameter::VertexCover,
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            Scheme::MmAtMost | Scheme::DegAtMost | Scheme::ColoringAtMost | Scheme::VcAtMost => Direction::AtMost,
            Scheme::EqMatching | Scheme::EqDegeneracy => Direction::Exactly,
            _ => Direction::AtLeast,
        }
    }

    /// For an equality scheme, its `(at most, at least)` halves.
    pub fn halves(self) -> Option<(Scheme, Scheme)> {
        match self {
            Scheme::EqMatching => Some((Scheme::MmAtMost, Scheme::MmAtLeastList)),
            Scheme::EqDegeneracy => Some((Scheme::DegAtMost, Scheme::DegAtLeast)),
            _ => None,
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertParseError {
    #[error("certificate file is {0} bytes; the header alone needs 9")]
    Truncated(usize),
    #[error("unknown scheme tag {0}")]
    UnknownTag(u8),
    #[error("declared {declared} semantic bits but the payload holds only {available}")]
    SemanticOverflow { declared: u64, available: u64 },
}

/// A scheme-tagged certificate: the prover's output.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub scheme: Scheme,
    pub semantic_bits: u64,
    pub payload: Vec<u8>,
}

impl Certificate {
    pub fn new(scheme: Scheme, semantic_bits: u64, payload: Vec<u8>) -> Self {
        Certificate { scheme, semantic_bits, payload }
    }

    fn from_writer(scheme: Scheme, w: BitWriter) -> Self {
        let (payload, bits) = w.finish();
        Certificate::new(scheme, bits, payload)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(9 + self.payload.len());
        out.push(self.scheme.tag());
        out.extend_from_slice(&self.semantic_bits.to_be_bytes());
        out.extend_from_slice(&self.payload);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CertParseError> {
        CertRef::parse(bytes).map(|c| c.to_owned())
    }

    pub fn as_ref(&self) -> CertRef<'_> {
        CertRef { scheme: self.scheme, semantic_bits: self.semantic_bits, payload: &self.payload }
    }
}

/// Borrowed certificate, so equality certificates can hand out their halves
/// without copying.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertRef<'a> {
    pub scheme: Scheme,
    pub semantic_bits: u64,
    pub payload: &'a [u8],
}

impl<'a> CertRef<'a> {
    pub fn parse(bytes: &'a [u8]) -> Result<Self, CertParseError> {
        if bytes.len() < 9 {
            return Err(CertParseError::Truncated(bytes.len()));
        }
        let scheme = Scheme::from_tag(bytes[0]).ok_or(CertParseError::UnknownTag(bytes[0]))?;
        let semantic_bits = u64::from_be_bytes(bytes[1..9].try_into().unwrap());
        let payload = &bytes[9..];
        let available = 8 * payload.len() as u64;
        if semantic_bits > available {
            return Err(CertParseError::SemanticOverflow { declared: semantic_bits, available });
        }
        Ok(CertRef { scheme, semantic_bits, payload })
    }

    pub fn to_owned(self) -> Certificate {
        Certificate::new(self.scheme, self.semantic_bits, self.payload.to_vec())
    }

    /// The payload as a bit string, provided its length is exactly
    /// `ceil(semantic_bits / 8)` bytes and the padding is zero.
    pub fn bits(&self) -> Result<BitView<'a>, Reason> {
        if self.payload.len() as u64 != self.semantic_bits.div_ceil(8) {
            return Err(Reason::MalformedCertificate);
        }
        let view = BitView::new(self.payload, self.semantic_bits);
        if !view.padding_is_zero() {
            return Err(Reason::MalformedCertificate);
        }
        Ok(view)
    }
}

/// Width of a stored node id.
pub fn id_width(n: usize) -> u32 {
    bits_for((n as u64).saturating_sub(1))
}

/// `len` consecutive `width`-bit fields starting at bit `offset`.
#[derive(Debug, Clone, Copy)]
pub struct Fields<'a> {
    view: BitView<'a>,
    offset: u64,
    width: u32,
    len: usize,
}

impl<'a> Fields<'a> {
    fn new(view: BitView<'a>, offset: u64, width: u32, len: usize) -> Self {
        debug_assert!(offset + width as u64 * len as u64 <= view.bit_len());
        Fields { view, offset, width, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn raw(&self, i: usize) -> u64 {
        assert!(i < self.len);
        self.view.read(self.offset + i as u64 * self.width as u64, self.width)
    }

    /// Field `i` read as a 1-based node id.
    pub fn node(&self, i: usize) -> u64 {
        self.raw(i) + 1
    }

    /// Number of set fields among `start..end`; only for 1-bit fields.
    pub fn count_ones(&self, start: usize, end: usize) -> u64 {
        assert_eq!(self.width, 1);
        assert!(start <= end && end <= self.len);
        self.view.count_ones(self.offset + start as u64, self.offset + end as u64)
    }
}

fn exact(cert: &CertRef<'_>, expected_bits: u64) -> Result<(), Reason> {
    if cert.semantic_bits == expected_bits {
        Ok(())
    } else {
        Err(Reason::MalformedCertificate)
    }
}

fn push_node(w: &mut BitWriter, v: Node, width: u32) {
    assert!(v >= 1, "node ids are 1-based");
    w.push(v as u64 - 1, width);
}

// ---- matching list ----

/// Count field (`bits_for(n)` bits) then two ids per edge.
pub fn encode_matching_list(n: usize, edges: &[Edge]) -> Certificate {
    let idw = id_width(n);
    let mut w = BitWriter::new();
    w.push(edges.len() as u64, bits_for(n as u64));
    for e in edges {
        push_node(&mut w, e.u(), idw);
        push_node(&mut w, e.v(), idw);
    }
    Certificate::from_writer(Scheme::MmAtLeastList, w)
}

pub fn matching_list_bits(n: usize, count: usize) -> u64 {
    bits_for(n as u64) as u64 + 2 * count as u64 * id_width(n) as u64
}

/// Endpoint ids: field `2i` and `2i + 1` are the ends of edge `i`.
pub fn decode_matching_list<'a>(n: usize, cert: &CertRef<'a>) -> Result<Fields<'a>, Reason> {
    let view = cert.bits()?;
    let cw = bits_for(n as u64);
    if view.bit_len() < cw as u64 {
        return Err(Reason::MalformedCertificate);
    }
    let count = view.read(0, cw);
    exact(cert, matching_list_bits(n, count as usize))?;
    Ok(Fields::new(view, cw as u64, id_width(n), 2 * count as usize))
}

// ---- matching coloring ----

const COLOR_HEADER_BITS: u32 = 6;

/// A 6-bit width header `b`, then one `b`-bit colour per node (stored `c - 1`).
pub fn encode_matching_coloring(colors: &[u32]) -> Certificate {
    let max = colors.iter().copied().max().unwrap_or(1).max(1);
    let b = bits_for(max as u64 - 1);
    let mut w = BitWriter::new();
    w.push(b as u64, COLOR_HEADER_BITS);
    for &c in colors {
        assert!(c >= 1, "colours are 1-based");
        w.push(c as u64 - 1, b);
    }
    Certificate::from_writer(Scheme::MmAtLeastColoring, w)
}

pub fn matching_coloring_bits(n: usize, width: u32) -> u64 {
    COLOR_HEADER_BITS as u64 + n as u64 * width as u64
}

pub fn decode_matching_coloring<'a>(n: usize, cert: &CertRef<'a>) -> Result<Fields<'a>, Reason> {
    let view = cert.bits()?;
    if view.bit_len() < COLOR_HEADER_BITS as u64 {
        return Err(Reason::MalformedCertificate);
    }
    let b = view.read(0, COLOR_HEADER_BITS) as u32;
    exact(cert, matching_coloring_bits(n, b))?;
    Ok(Fields::new(view, COLOR_HEADER_BITS as u64, b, n))
}

// ---- Tutte–Berge set ----

/// One membership bit per node.
pub fn encode_tutte_berge(in_u: &[bool]) -> Certificate {
    let mut w = BitWriter::new();
    for &b in in_u {
        w.push_bit(b);
    }
    Certificate::from_writer(Scheme::MmAtMost, w)
}

pub fn decode_tutte_berge<'a>(n: usize, cert: &CertRef<'a>) -> Result<Fields<'a>, Reason> {
    let view = cert.bits()?;
    exact(cert, n as u64)?;
    Ok(Fields::new(view, 0, 1, n))
}

// ---- peel order ----

/// `pi[v - 1]` is the position of node `v`, in `1..=n`.
pub fn encode_peel_order(pi: &[u32]) -> Certificate {
    let width = id_width(pi.len());
    let mut w = BitWriter::new();
    for &p in pi {
        push_node(&mut w, p, width);
    }
    Certificate::from_writer(Scheme::DegAtMost, w)
}

pub fn peel_order_bits(n: usize) -> u64 {
    n as u64 * id_width(n) as u64
}

pub fn decode_peel_order<'a>(n: usize, cert: &CertRef<'a>) -> Result<Fields<'a>, Reason> {
    let view = cert.bits()?;
    exact(cert, peel_order_bits(n))?;
    Ok(Fields::new(view, 0, id_width(n), n))
}

// ---- core subset ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetEncoding {
    List,
    Bitvector,
}

/// The cheaper encoding for a subset of `size` nodes.
pub fn subset_encoding(n: usize, size: usize) -> SubsetEncoding {
    if (size as u64) * (id_width(n) as u64) < n as u64 {
        SubsetEncoding::List
    } else {
        SubsetEncoding::Bitvector
    }
}

pub fn core_subset_bits(n: usize, size: usize, encoding: SubsetEncoding) -> u64 {
    match encoding {
        SubsetEncoding::List => 1 + bits_for(n as u64) as u64 + size as u64 * id_width(n) as u64,
        SubsetEncoding::Bitvector => 1 + n as u64,
    }
}

/// A mode bit (1 = list), then either a count and the ids or `n` membership bits.
pub fn encode_core_subset_as(n: usize, nodes: &[Node], encoding: SubsetEncoding) -> Certificate {
    let mut w = BitWriter::new();
    match encoding {
        SubsetEncoding::List => {
            w.push_bit(true);
            w.push(nodes.len() as u64, bits_for(n as u64));
            for &v in nodes {
                push_node(&mut w, v, id_width(n));
            }
        }
        SubsetEncoding::Bitvector => {
            w.push_bit(false);
            let mut member = vec![false; n];
            for &v in nodes {
                member[v as usize - 1] = true;
            }
            for b in member {
                w.push_bit(b);
            }
        }
    }
    Certificate::from_writer(Scheme::DegAtLeast, w)
}

pub fn encode_core_subset(n: usize, nodes: &[Node]) -> Certificate {
    encode_core_subset_as(n, nodes, subset_encoding(n, nodes.len()))
}

#[derive(Debug, Clone, Copy)]
pub enum SubsetView<'a> {
    /// Node ids in list order.
    List(Fields<'a>),
    /// One membership bit per node.
    Bitvector(Fields<'a>),
}

pub fn decode_core_subset<'a>(n: usize, cert: &CertRef<'a>) -> Result<SubsetView<'a>, Reason> {
    let view = cert.bits()?;
    if view.bit_len() == 0 {
        return Err(Reason::MalformedCertificate);
    }
    if view.bit(0) {
        let cw = bits_for(n as u64);
        if view.bit_len() < 1 + cw as u64 {
            return Err(Reason::MalformedCertificate);
        }
        let count = view.read(1, cw) as usize;
        exact(cert, core_subset_bits(n, count, SubsetEncoding::List))?;
        Ok(SubsetView::List(Fields::new(view, 1 + cw as u64, id_width(n), count)))
    } else {
        exact(cert, 1 + n as u64)?;
        Ok(SubsetView::Bitvector(Fields::new(view, 1, 1, n)))
    }
}

// ---- distance labels ----

pub fn label_width(k: usize) -> u32 {
    bits_for((k as u64).saturating_add(1))
}

/// `n` labels in `0..=k+1`, `bits_for(k + 1)` bits each.
pub fn encode_distance_labels(k: usize, labels: &[u64]) -> Certificate {
    let width = label_width(k);
    let mut w = BitWriter::new();
    for &l in labels {
        w.push(l, width);
    }
    Certificate::from_writer(Scheme::DiamAtLeast, w)
}

pub fn distance_labels_bits(n: usize, k: usize) -> u64 {
    n as u64 * label_width(k) as u64
}

pub fn decode_distance_labels<'a>(n: usize, k: usize, cert: &CertRef<'a>) -> Result<Fields<'a>, Reason> {
    let view = cert.bits()?;
    exact(cert, distance_labels_bits(n, k))?;
    Ok(Fields::new(view, 0, label_width(k), n))
}

// ---- proper coloring ----

pub fn color_width(k: usize) -> u32 {
    bits_for((k as u64).saturating_sub(1))
}

/// `n` colours in `1..=k`, stored `c - 1` in `bits_for(k - 1)` bits.
pub fn encode_coloring(k: usize, colors: &[u32]) -> Certificate {
    let width = color_width(k);
    let mut w = BitWriter::new();
    for &c in colors {
        assert!(c >= 1, "colours are 1-based");
        w.push(c as u64 - 1, width);
    }
    Certificate::from_writer(Scheme::ColoringAtMost, w)
}

pub fn coloring_bits(n: usize, k: usize) -> u64 {
    n as u64 * color_width(k) as u64
}

/// Fields hold `colour - 1`.
pub fn decode_coloring<'a>(n: usize, k: usize, cert: &CertRef<'a>) -> Result<Fields<'a>, Reason> {
    let view = cert.bits()?;
    exact(cert, coloring_bits(n, k))?;
    Ok(Fields::new(view, 0, color_width(k), n))
}

// ---- node sets ----

/// Count field (`bits_for(n)` bits) then the ids.
pub fn encode_node_set(scheme: Scheme, n: usize, nodes: &[Node]) -> Certificate {
    assert!(matches!(scheme, Scheme::IsAtLeast | Scheme::CliqueAtLeast | Scheme::VcAtMost));
    let mut w = BitWriter::new();
    w.push(nodes.len() as u64, bits_for(n as u64));
    for &v in nodes {
        push_node(&mut w, v, id_width(n));
    }
    Certificate::from_writer(scheme, w)
}

pub fn node_set_bits(n: usize, size: usize) -> u64 {
    bits_for(n as u64) as u64 + size as u64 * id_width(n) as u64
}

pub fn decode_node_set<'a>(n: usize, cert: &CertRef<'a>) -> Result<Fields<'a>, Reason> {
    let view = cert.bits()?;
    let cw = bits_for(n as u64);
    if view.bit_len() < cw as u64 {
        return Err(Reason::MalformedCertificate);
    }
    let count = view.read(0, cw) as usize;
    exact(cert, node_set_bits(n, count))?;
    Ok(Fields::new(view, cw as u64, id_width(n), count))
}

// ---- equality pairs ----

/// Payload: two nested certificate files, each prefixed by its byte length
/// as a big-endian `u64`. The semantic size is the sum of the halves.
pub fn encode_equality(scheme: Scheme, at_most: &Certificate, at_least: &Certificate) -> Certificate {
    let (le, ge) = scheme.halves().expect("not an equality scheme");
    assert_eq!((at_most.scheme, at_least.scheme), (le, ge), "wrong halves for {scheme}");
    let mut payload = Vec::new();
    for c in [at_most, at_least] {
        let bytes = c.to_bytes();
        payload.extend_from_slice(&(bytes.len() as u64).to_be_bytes());
        payload.extend_from_slice(&bytes);
    }
    Certificate::new(scheme, at_most.semantic_bits + at_least.semantic_bits, payload)
}

pub fn decode_equality<'a>(cert: &CertRef<'a>) -> Result<(CertRef<'a>, CertRef<'a>), Reason> {
    let (le, ge) = cert.scheme.halves().ok_or(Reason::WrongScheme)?;
    let mut rest = cert.payload;
    let mut take = || -> Result<CertRef<'a>, Reason> {
        if rest.len() < 8 {
            return Err(Reason::MalformedCertificate);
        }
        let len = u64::from_be_bytes(rest[..8].try_into().unwrap());
        if len > (rest.len() - 8) as u64 {
            return Err(Reason::MalformedCertificate);
        }
        let (inner, tail) = rest[8..].split_at(len as usize);
        rest = tail;
        CertRef::parse(inner).map_err(|_| Reason::MalformedCertificate)
    };
    let a = take()?;
    let b = take()?;
    if !rest.is_empty() || a.scheme != le || b.scheme != ge {
        return Err(Reason::MalformedCertificate);
    }
    if a.semantic_bits.checked_add(b.semantic_bits) != Some(cert.semantic_bits) {
        return Err(Reason::MalformedCertificate);
    }
    Ok((a, b))
}
