//! Lower-bound graph families `G_{x,y} = (V, E ∪ A_x ∪ B_y)` and sweeps that
//! compare the graph predicate (via the oracles) with the two-party function
//! `f(x, y)` evaluated directly.
//!
//! Every builder emits the edges in the order `E`, then `A_x`, then `B_y`, so
//! [`GadgetInstance::split_point`] separates Alice's share from Bob's. Edges
//! that do not depend on the inputs always live in `E`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::cert::Scheme;
use crate::graph::{Edge, Graph, Node};
use crate::oracles::{self, Distance, OracleError};

/// Largest instance space an exhaustive sweep will enumerate.
pub const EXHAUSTIVE_LIMIT: u128 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("inputs have the wrong sizes: {0}")]
    BadSizes(String),
    #[error("input has length {got}, expected {expected}")]
    BadLength { got: usize, expected: usize },
    #[error("not a permutation of 1..={0}")]
    BadPermutation(usize),
    #[error("bad gadget parameter: {0}")]
    BadParameter(String),
    #[error("instance space has {0} pairs; exhaustive sweeps stop at 65536")]
    SpaceTooLarge(u128),
    #[error("oracle too large: {0}")]
    OracleTooLarge(#[from] OracleError),
}

/// One party's input.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GadgetInput {
    /// A subset of `[N]`, sorted.
    Set(Vec<usize>),
    /// A bit vector.
    Bits(Vec<bool>),
    /// A permutation of `1..=r` in one-line notation.
    Perm(Vec<usize>),
}

impl fmt::Display for GadgetInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        match self {
            GadgetInput::Set(s) => write!(f, "{{{}}}", join(s)),
            GadgetInput::Bits(b) => b.iter().try_for_each(|&bit| write!(f, "{}", bit as u8)),
            GadgetInput::Perm(p) => write!(f, "[{}]", join(p)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub graph: Graph,
    pub fixed: Vec<Edge>,
    pub alice: Vec<Edge>,
    pub bob: Vec<Edge>,
    pub x: GadgetInput,
    pub y: GadgetInput,
    /// `f(x, y)`, computed directly from the inputs.
    pub expected: bool,
}

impl GadgetInstance {
    fn assemble(n: usize, fixed: Vec<Edge>, alice: Vec<Edge>, bob: Vec<Edge>, x: GadgetInput, y: GadgetInput, expected: bool) -> Self {
        let all = fixed.iter().chain(&alice).chain(&bob).copied();
        let graph = Graph::from_edges(n, all).expect("gadget builders produce simple graphs");
        GadgetInstance { graph, fixed, alice, bob, x, y, expected }
    }

    /// Number of leading edges (`E ∪ A_x`) streamed before Bob's share.
    pub fn split_point(&self) -> usize {
        self.fixed.len() + self.alice.len()
    }
}

fn set_mask(n: usize, s: &[usize]) -> Result<u64, GadgetError> {
    let mut mask = 0u64;
    for &i in s {
        if i == 0 || i > n {
            return Err(GadgetError::BadSizes(format!("element {i} is outside 1..={n}")));
        }
        if mask >> i & 1 == 1 {
            return Err(GadgetError::BadSizes(format!("element {i} is repeated")));
        }
        mask |= 1 << i;
    }
    Ok(mask)
}

fn sorted(s: &[usize]) -> Vec<usize> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v
}

fn e(a: usize, b: usize) -> Edge {
    Edge::new(a as Node, b as Node)
}

/// Bipartite graph with `u_i = i` and `v_i = N + i`. Alice joins `u_{x_i}` to
/// `v_i`, Bob joins `u_{y_i}` to `v_{N/2+i}` (inputs sorted). It has a perfect
/// matching iff `x ∩ y = ∅`.
pub fn disj_matching(n: usize, x: &[usize], y: &[usize]) -> Result<GadgetInstance, GadgetError> {
    if n % 2 != 0 || x.len() != n / 2 || y.len() != n / 2 {
        return Err(GadgetError::BadSizes(format!("need N even and |x| = |y| = N/2 (N = {n})")));
    }
    let (mx, my) = (set_mask(n, x)?, set_mask(n, y)?);
    let (x, y) = (sorted(x), sorted(y));
    let alice = x.iter().enumerate().map(|(i, &xi)| e(xi, n + i + 1)).collect();
    let bob = y.iter().enumerate().map(|(i, &yi)| e(yi, n + n / 2 + i + 1)).collect();
    Ok(GadgetInstance::assemble(2 * n, vec![], alice, bob, GadgetInput::Set(x), GadgetInput::Set(y), mx & my == 0))
}

/// Elements `1..=N`, `a = N + 1`, `b = N + 2`. `E = {a, b}`; Alice adds the
/// star from `a` to `x`; Bob adds the path `b, y_1, y_2, ...`. The graph is
/// 1-degenerate iff `x ∩ y = ∅`.
pub fn disj_degeneracy(n: usize, x: &[usize], y: &[usize]) -> Result<GadgetInstance, GadgetError> {
    let (mx, my) = (set_mask(n, x)?, set_mask(n, y)?);
    let (x, y) = (sorted(x), sorted(y));
    let (a, b) = (n + 1, n + 2);
    let alice = x.iter().map(|&i| e(a, i)).collect();
    let mut bob = Vec::new();
    let mut prev = b;
    for &j in &y {
        bob.push(e(prev, j));
        prev = j;
    }
    Ok(GadgetInstance::assemble(n + 2, vec![e(a, b)], alice, bob, GadgetInput::Set(x), GadgetInput::Set(y), mx & my == 0))
}

/// Layers `P_1 = 1..=N`, `P_2 = N+1..=2N`, `P_3 = 2N+1..=3N`, then
/// `u, v, a, b, t_1, t_2, t_3, t_4 = 3N+1..=3N+8`. Alice adds `{v¹_i, v²_i}`
/// for `i ∈ x`, Bob adds `{v²_j, v³_j}` for `j ∈ y`. The diameter is at least 8
/// iff `x ∩ y = ∅`.
pub fn disj_diameter8(n: usize, x: &[usize], y: &[usize]) -> Result<GadgetInstance, GadgetError> {
    if n == 0 {
        return Err(GadgetError::BadParameter("N must be at least 1".into()));
    }
    let (mx, my) = (set_mask(n, x)?, set_mask(n, y)?);
    let (x, y) = (sorted(x), sorted(y));
    let p = |layer: usize, i: usize| (layer - 1) * n + i;
    let (u, v, a, b) = (3 * n + 1, 3 * n + 2, 3 * n + 3, 3 * n + 4);
    let t = |i: usize| 3 * n + 4 + i;
    let mut fixed = vec![e(u, a), e(b, v), e(t(1), t(2)), e(t(3), t(4))];
    for i in 1..=n {
        fixed.extend([
            e(a, p(1, i)),
            e(p(3, i), b),
            e(p(1, i), t(1)),
            e(t(2), p(2, i)),
            e(p(2, i), t(3)),
            e(t(4), p(3, i)),
        ]);
    }
    let alice = x.iter().map(|&i| e(p(1, i), p(2, i))).collect();
    let bob = y.iter().map(|&j| e(p(2, j), p(3, j))).collect();
    Ok(GadgetInstance::assemble(3 * n + 8, fixed, alice, bob, GadgetInput::Set(x), GadgetInput::Set(y), mx & my == 0))
}

/// Pairs `(i, j)` with `1 <= i < j <= p` in lexicographic order; position `t`
/// of a Holzer input vector refers to the `t`-th pair.
pub fn holzer_pairs(p: usize) -> Vec<(usize, usize)> {
    (1..=p).flat_map(|i| (i + 1..=p).map(move |j| (i, j))).collect()
}

fn disjoint_bits(x: &[bool], y: &[bool]) -> bool {
    !x.iter().zip(y).any(|(&a, &b)| a && b)
}

/// `a_i = i + 1` and `b_i = p + 2 + i` for `i = 0..=p`. `E` holds the spokes
/// `a_i b_i` and the stars at `a_0` and `b_0`; `{a_i, a_j}` is Alice's iff
/// `x[i,j] = 0`, `{b_i, b_j}` is Bob's iff `y[i,j] = 0`. The diameter is 2 iff
/// `x ∩ y = ∅`.
pub fn holzer_diameter2(p: usize, x: &[bool], y: &[bool]) -> Result<GadgetInstance, GadgetError> {
    if p < 2 {
        return Err(GadgetError::BadParameter("p must be at least 2".into()));
    }
    let pairs = holzer_pairs(p);
    for s in [x, y] {
        if s.len() != pairs.len() {
            return Err(GadgetError::BadLength { got: s.len(), expected: pairs.len() });
        }
    }
    let a = |i: usize| i + 1;
    let b = |i: usize| p + 2 + i;
    let mut fixed: Vec<Edge> = (0..=p).map(|i| e(a(i), b(i))).collect();
    fixed.extend((1..=p).map(|i| e(a(0), a(i))));
    fixed.extend((1..=p).map(|i| e(b(0), b(i))));
    let alice = pairs.iter().zip(x).filter(|(_, &bit)| !bit).map(|(&(i, j), _)| e(a(i), a(j))).collect();
    let bob = pairs.iter().zip(y).filter(|(_, &bit)| !bit).map(|(&(i, j), _)| e(b(i), b(j))).collect();
    let expected = disjoint_bits(x, y);
    Ok(GadgetInstance::assemble(2 * p + 2, fixed, alice, bob, GadgetInput::Bits(x.to_vec()), GadgetInput::Bits(y.to_vec()), expected))
}

/// Vertex cover size that certifies an intersecting input pair.
pub fn bitgadget_cover_size(n: usize) -> usize {
    4 * (n - 1) + 4 * n.trailing_zeros() as usize
}

/// Two bit gadgets. With `L = log2 N`, the node blocks are, in order:
/// `A, B, A', B'` (`N` nodes each, index `i` at offset `i`), then
/// `F_A, T_A, F_B, T_B, F_A', T_A', F_B', T_B'` (`L` nodes each, bit `j` at
/// offset `j`). Input position `i·N + j` refers to the pair `(a_i, a'_j)` or
/// `(b_i, b'_j)`. The minimum vertex cover exceeds
/// [`bitgadget_cover_size`] iff `x ∩ y = ∅`.
pub fn bitgadget_vc(n: usize, x: &[bool], y: &[bool]) -> Result<GadgetInstance, GadgetError> {
    if n < 2 || !n.is_power_of_two() {
        return Err(GadgetError::BadParameter(format!("N = {n} is not a power of two >= 2")));
    }
    for s in [x, y] {
        if s.len() != n * n {
            return Err(GadgetError::BadLength { got: s.len(), expected: n * n });
        }
    }
    let l = n.trailing_zeros() as usize;
    // Block indices: 0 A, 1 B, 2 A', 3 B'.
    let clique = |blk: usize, i: usize| blk * n + i + 1;
    // Bit blocks: (F, T) of clique block `blk`.
    let f = |blk: usize, j: usize| 4 * n + (2 * blk) * l + j + 1;
    let t = |blk: usize, j: usize| 4 * n + (2 * blk + 1) * l + j + 1;
    let mut fixed = Vec::new();
    for blk in 0..4 {
        for i in 0..n {
            for i2 in i + 1..n {
                fixed.push(e(clique(blk, i), clique(blk, i2)));
            }
            for j in 0..l {
                let target = if i >> j & 1 == 0 { f(blk, j) } else { t(blk, j) };
                fixed.push(e(clique(blk, i), target));
            }
        }
    }
    // The 4-cycles (f_S, t_S, f_R, t_R) for the pairs (A, B) and (A', B').
    for (s, r) in [(0, 1), (2, 3)] {
        for j in 0..l {
            fixed.extend([e(f(s, j), t(s, j)), e(t(s, j), f(r, j)), e(f(r, j), t(r, j)), e(t(r, j), f(s, j))]);
        }
    }
    let mut alice = Vec::new();
    let mut bob = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !x[i * n + j] {
                alice.push(e(clique(0, i), clique(2, j)));
            }
            if !y[i * n + j] {
                bob.push(e(clique(1, i), clique(3, j)));
            }
        }
    }
    let expected = disjoint_bits(x, y);
    Ok(GadgetInstance::assemble(4 * n + 8 * l, fixed, alice, bob, GadgetInput::Bits(x.to_vec()), GadgetInput::Bits(y.to_vec()), expected))
}

fn check_perm(p: &[usize]) -> Result<(), GadgetError> {
    let r = p.len();
    let mut seen = vec![false; r + 1];
    for &v in p {
        if v == 0 || v > r || seen[v] {
            return Err(GadgetError::BadPermutation(r));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Two copies `P`, `P'` of `K_{2r}` minus the perfect matching
/// `{(i,1), (i,2)}`. Node `(i, p)` of `P` is `(p − 1)·r + i`, of `P'` it is
/// `2r + (p − 1)·r + i`. Alice adds `{(i,1), (j,1)'}` for `j ≠ σ(i)`, Bob adds
/// `{(i,2), (j,2)'}` for `j ≠ τ(i)`. The graph is `r`-colourable iff `σ = τ`.
pub fn perm_coloring(sigma: &[usize], tau: &[usize]) -> Result<GadgetInstance, GadgetError> {
    let r = sigma.len();
    if r < 3 {
        return Err(GadgetError::BadParameter("r must be at least 3".into()));
    }
    if tau.len() != r {
        return Err(GadgetError::BadLength { got: tau.len(), expected: r });
    }
    check_perm(sigma)?;
    check_perm(tau)?;
    let node = |copy: usize, i: usize, p: usize| copy * 2 * r + (p - 1) * r + i;
    let mut fixed = Vec::new();
    for copy in 0..2 {
        for i in 1..=r {
            for j in 1..=r {
                if i < j {
                    fixed.push(e(node(copy, i, 1), node(copy, j, 1)));
                    fixed.push(e(node(copy, i, 2), node(copy, j, 2)));
                }
                if i != j {
                    fixed.push(e(node(copy, i, 1), node(copy, j, 2)));
                }
            }
        }
    }
    let cross = |perm: &[usize], p: usize| -> Vec<Edge> {
        let mut out = Vec::new();
        for i in 1..=r {
            for j in 1..=r {
                if j != perm[i - 1] {
                    out.push(e(node(0, i, p), node(1, j, p)));
                }
            }
        }
        out
    };
    let alice = cross(sigma, 1);
    let bob = cross(tau, 2);
    Ok(GadgetInstance::assemble(
        4 * r,
        fixed,
        alice,
        bob,
        GadgetInput::Perm(sigma.to_vec()),
        GadgetInput::Perm(tau.to_vec()),
        sigma == tau,
    ))
}

/// A gadget family at a fixed size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gadget {
    DisjMatching { n: usize },
    DisjDegeneracy { n: usize },
    DisjDiameter8 { n: usize },
    Holzer { p: usize },
    BitgadgetVc { n: usize },
    PermColoring { r: usize },
}

fn all_subsets(n: usize) -> Vec<GadgetInput> {
    (0u64..1 << n).map(|m| GadgetInput::Set((1..=n).filter(|&i| m >> (i - 1) & 1 == 1).collect())).collect()
}

fn all_bits(len: usize) -> Vec<GadgetInput> {
    (0u64..1 << len).map(|m| GadgetInput::Bits((0..len).map(|i| m >> (len - 1 - i) & 1 == 1).collect())).collect()
}

fn all_perms(r: usize) -> Vec<GadgetInput> {
    let mut p: Vec<usize> = (1..=r).collect();
    let mut out = vec![GadgetInput::Perm(p.clone())];
    // Lexicographic successor until the last permutation.
    loop {
        let Some(i) = (0..r.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else { break };
        let j = (i + 1..r).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        out.push(GadgetInput::Perm(p.clone()));
    }
    out
}

impl Gadget {
    pub fn name(&self) -> &'static str {
        match self {
            Gadget::DisjMatching { .. } => "disj_matching",
            Gadget::DisjDegeneracy { .. } => "disj_degeneracy",
            Gadget::DisjDiameter8 { .. } => "disj_diameter8",
            Gadget::Holzer { .. } => "holzer_diameter2",
            Gadget::BitgadgetVc { .. } => "bitgadget_vc",
            Gadget::PermColoring { .. } => "perm_coloring",
        }
    }

    /// Every input one party can hold, in a fixed order.
    pub fn inputs(&self) -> Vec<GadgetInput> {
        match *self {
            Gadget::DisjMatching { n } => all_subsets(n)
                .into_iter()
                .filter(|s| matches!(s, GadgetInput::Set(v) if v.len() == n / 2))
                .collect(),
            Gadget::DisjDegeneracy { n } | Gadget::DisjDiameter8 { n } => all_subsets(n),
            Gadget::Holzer { p } => all_bits(p * (p - 1) / 2),
            Gadget::BitgadgetVc { n } => all_bits(n * n),
            Gadget::PermColoring { r } => all_perms(r),
        }
    }

    pub fn build(&self, x: &GadgetInput, y: &GadgetInput) -> Result<GadgetInstance, GadgetError> {
        use GadgetInput::*;
        match (*self, x, y) {
            (Gadget::DisjMatching { n }, Set(x), Set(y)) => disj_matching(n, x, y),
            (Gadget::DisjDegeneracy { n }, Set(x), Set(y)) => disj_degeneracy(n, x, y),
            (Gadget::DisjDiameter8 { n }, Set(x), Set(y)) => disj_diameter8(n, x, y),
            (Gadget::Holzer { p }, Bits(x), Bits(y)) => holzer_diameter2(p, x, y),
            (Gadget::BitgadgetVc { n }, Bits(x), Bits(y)) => bitgadget_vc(n, x, y),
            (Gadget::PermColoring { .. }, Perm(x), Perm(y)) => perm_coloring(x, y),
            _ => Err(GadgetError::BadSizes(format!("input kinds do not fit {}", self.name()))),
        }
    }

    /// Evaluates the graph predicate with the oracles.
    pub fn predicate(&self, g: &Graph) -> Result<bool, GadgetError> {
        Ok(match *self {
            Gadget::DisjMatching { n } => oracles::max_matching(g) == n,
            Gadget::DisjDegeneracy { .. } => oracles::degeneracy(g) <= 1,
            Gadget::DisjDiameter8 { .. } => oracles::diameter(g).at_least(8),
            Gadget::Holzer { .. } => matches!(oracles::diameter(g), Distance::Finite(d) if d <= 2),
            Gadget::BitgadgetVc { n } => oracles::min_vertex_cover(g)?.len() > bitgadget_cover_size(n),
            Gadget::PermColoring { r } => oracles::colorable(g, r)?.is_some(),
        })
    }

    /// The streaming scheme and threshold that certify this family's
    /// predicate (or its complement), and whether the scheme's instance is
    /// legal exactly when the predicate holds.
    pub fn scheme(&self) -> (Scheme, usize, bool) {
        match *self {
            Gadget::DisjMatching { n } => (Scheme::MmAtLeastList, n, true),
            Gadget::DisjDegeneracy { .. } => (Scheme::DegAtMost, 1, true),
            Gadget::DisjDiameter8 { .. } => (Scheme::DiamAtLeast, 8, true),
            Gadget::Holzer { .. } => (Scheme::DiamAtLeast, 3, false),
            Gadget::BitgadgetVc { n } => (Scheme::VcAtMost, bitgadget_cover_size(n), false),
            Gadget::PermColoring { r } => (Scheme::ColoringAtMost, r, true),
        }
    }

    pub fn space_size(&self) -> u128 {
        let per_side = self.inputs().len() as u128;
        per_side * per_side
    }
}

/// Which `(x, y)` pairs a sweep visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceSpace {
    Exhaustive,
    /// `count` pairs drawn uniformly (with replacement) from a seeded generator.
    Sampled { count: usize, seed: u64 },
}

/// The `(x, y)` pairs a sweep visits, in report order.
pub fn instance_pairs(gadget: &Gadget, space: InstanceSpace) -> Result<Vec<(GadgetInput, GadgetInput)>, GadgetError> {
    let inputs = gadget.inputs();
    let m = inputs.len();
    let idx: Vec<(usize, usize)> = match space {
        InstanceSpace::Exhaustive => {
            let size = (m as u128) * (m as u128);
            if size > EXHAUSTIVE_LIMIT {
                return Err(GadgetError::SpaceTooLarge(size));
            }
            (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).collect()
        }
        InstanceSpace::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| (rng.gen_range(0..m), rng.gen_range(0..m))).collect()
        }
    };
    Ok(idx.into_iter().map(|(a, b)| (inputs[a].clone(), inputs[b].clone())).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLine {
    pub x: GadgetInput,
    pub y: GadgetInput,
    pub f: bool,
    pub predicate: bool,
}

impl ReportLine {
    pub fn matches(&self) -> bool {
        self.f == self.predicate
    }
}

impl fmt::Display for ReportLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x={} y={} f={} predicate={} match={}",
            self.x, self.y, self.f as u8, self.predicate as u8, self.matches() as u8
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub gadget: &'static str,
    pub lines: Vec<ReportLine>,
}

impl EquivalenceReport {
    pub fn mismatches(&self) -> usize {
        self.lines.iter().filter(|l| !l.matches()).count()
    }
}

/// Builds each instance, evaluates the predicate with the oracles and `f`
/// directly, and records both.
pub fn check_gadget_equivalence(gadget: &Gadget, space: InstanceSpace) -> Result<EquivalenceReport, GadgetError> {
    let pairs = instance_pairs(gadget, space)?;
    let lines = pairs
        .par_iter()
        .map(|(x, y)| {
            let inst = gadget.build(x, y)?;
            let predicate = gadget.predicate(&inst.graph)?;
            Ok(ReportLine { x: x.clone(), y: y.clone(), f: inst.expected, predicate })
        })
        .collect::<Result<Vec<_>, GadgetError>>()?;
    Ok(EquivalenceReport { gadget: gadget.name(), lines })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn partition_invariant() {
        let inst = disj_diameter8(3, &[1, 3], &[2]).unwrap();
        assert_eq!(inst.graph.edge_count(), inst.fixed.len() + inst.alice.len() + inst.bob.len());
        assert_eq!(&inst.graph.edges()[..inst.split_point()], [inst.fixed.clone(), inst.alice.clone()].concat());
    }

    #[test]
    fn matching_examples() {
        assert_eq!(oracles::max_matching(&disj_matching(4, &[1, 2], &[3, 4]).unwrap().graph), 4);
        assert!(oracles::max_matching(&disj_matching(4, &[1, 2], &[2, 3]).unwrap().graph) < 4);
        assert_eq!(oracles::max_matching(&disj_matching(2, &[1], &[2]).unwrap().graph), 2);
        assert!(disj_matching(4, &[1], &[2, 3]).is_err());
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(oracles::degeneracy(&disj_degeneracy(4, &[1, 2], &[3, 4]).unwrap().graph), 1);
        assert!(oracles::degeneracy(&disj_degeneracy(4, &[1, 2], &[2, 4]).unwrap().graph) >= 2);
        let g = disj_degeneracy(4, &[], &[]).unwrap().graph;
        assert_eq!((g.edge_count(), oracles::degeneracy(&g)), (1, 1));
    }

    #[test]
    fn diameter8_examples() {
        assert_eq!(oracles::diameter(&disj_diameter8(3, &[1], &[1]).unwrap().graph), Distance::Finite(6));
        assert!(oracles::diameter(&disj_diameter8(3, &[1], &[2]).unwrap().graph).at_least(8));
        assert!(oracles::diameter(&disj_diameter8(1, &[], &[]).unwrap().graph).at_least(8));
    }

    #[test]
    fn holzer_examples() {
        let zero = vec![false; 6];
        let e12 = bits("100000");
        let e13 = bits("010000");
        assert_eq!(oracles::diameter(&holzer_diameter2(4, &zero, &zero).unwrap().graph), Distance::Finite(2));
        assert!(oracles::diameter(&holzer_diameter2(4, &e12, &e12).unwrap().graph).at_least(3));
        assert_eq!(oracles::diameter(&holzer_diameter2(4, &e12, &e13).unwrap().graph), Distance::Finite(2));
        assert!(holzer_diameter2(4, &zero, &[false; 5]).is_err());
    }

    #[test]
    fn bitgadget_examples() {
        let g = bitgadget_vc(2, &bits("1111"), &bits("1111")).unwrap().graph;
        assert_eq!(g.node_count(), 16);
        assert_eq!(oracles::min_vertex_cover(&g).unwrap().len(), 8);
        let g = bitgadget_vc(2, &bits("1100"), &bits("0011")).unwrap().graph;
        assert!(oracles::min_vertex_cover(&g).unwrap().len() >= 9);
        let inst = bitgadget_vc(2, &bits("0000"), &bits("1111")).unwrap();
        let pred = oracles::min_vertex_cover(&inst.graph).unwrap().len() > bitgadget_cover_size(2);
        assert_eq!(pred, inst.expected);
        assert!(bitgadget_vc(3, &[], &[]).is_err());
    }

    #[test]
    fn perm_examples() {
        let id = [1, 2, 3];
        let g = perm_coloring(&id, &id).unwrap().graph;
        assert_eq!(g.node_count(), 12);
        assert!(oracles::colorable(&g, 3).unwrap().is_some());
        assert!(oracles::colorable(&perm_coloring(&id, &[2, 1, 3]).unwrap().graph, 3).unwrap().is_none());
        assert!(oracles::colorable(&perm_coloring(&[2, 3, 1], &[2, 3, 1]).unwrap().graph, 3).unwrap().is_some());
        assert!(perm_coloring(&[1, 1, 2], &id).is_err());
    }

    #[test]
    fn input_spaces() {
        assert_eq!(Gadget::DisjMatching { n: 4 }.space_size(), 36);
        assert_eq!(Gadget::PermColoring { r: 3 }.space_size(), 36);
        assert_eq!(Gadget::Holzer { p: 4 }.space_size(), 4096);
        assert_eq!(Gadget::DisjDegeneracy { n: 4 }.space_size(), 256);
        assert_eq!(Gadget::BitgadgetVc { n: 2 }.space_size(), 256);
        assert!(matches!(
            instance_pairs(&Gadget::Holzer { p: 5 }, InstanceSpace::Exhaustive),
            Err(GadgetError::SpaceTooLarge(_))
        ));
    }

    #[test]
    fn report_line_format() {
        let line = ReportLine { x: GadgetInput::Set(vec![1, 2]), y: GadgetInput::Bits(bits("01")), f: true, predicate: true };
        assert_eq!(line.to_string(), "x={1,2} y=01 f=1 predicate=1 match=1");
    }
}
