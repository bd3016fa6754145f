//! Maximum matching by Edmonds' blossom algorithm, the Gallai–Edmonds
//! decomposition, and an exhaustive Tutte–Berge minimiser.

use std::collections::VecDeque;

use super::OracleError;
use crate::graph::{Edge, Graph, Node};

const NONE: usize = usize::MAX;

/// Upper node count for [`tutte_berge`].
pub const TUTTE_BERGE_LIMIT: usize = 20;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    even: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    touched: Vec<usize>,
    is_touched: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            even: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            touched: Vec::new(),
            is_touched: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] == NONE {
                if let Some(&u) = self.adj[v].iter().find(|&&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
    }

    fn touch(&mut self, v: usize) {
        if !self.is_touched[v] {
            self.is_touched[v] = true;
            self.touched.push(v);
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.parent[v] = NONE;
            self.base[v] = v;
            self.even[v] = false;
            self.is_touched[v] = false;
        }
        self.touched.clear();
        self.queue.clear();
    }

    fn make_even(&mut self, v: usize) {
        self.touch(v);
        self.even[v] = true;
        self.queue.push_back(v);
    }

    fn is_even(&self, v: usize) -> bool {
        self.even[v]
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        let mut marked = Vec::new();
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            marked.push(a);
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        let found = loop {
            b = self.base[b];
            if self.on_path[b] {
                break b;
            }
            assert!(self.mate[b] != NONE, "even vertices of two different trees are adjacent");
            b = self.parent[self.mate[b]];
        };
        for v in marked {
            self.on_path[v] = false;
        }
        found
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn contract(&mut self, v: usize, to: usize) {
        let cur = self.lca(v, to);
        self.mark_path(v, cur, to);
        self.mark_path(to, cur, v);
        let tree = self.touched.clone();
        for &i in &tree {
            if self.in_blossom[self.base[i]] {
                self.base[i] = cur;
                if !self.even[i] {
                    self.make_even(i);
                }
            }
        }
        for &i in &tree {
            self.in_blossom[i] = false;
        }
    }

    /// Grows alternating trees from `roots`. Returns the exposed end of an
    /// augmenting path, if one is found.
    fn search(&mut self, roots: &[usize]) -> Option<usize> {
        self.reset();
        for &r in roots {
            self.make_even(r);
        }
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if self.is_even(to) {
                    self.contract(v, to);
                } else if self.parent[to] == NONE {
                    self.touch(to);
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.make_even(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn run(&mut self) {
        self.greedy();
        for root in 0..self.adj.len() {
            if self.mate[root] == NONE {
                if let Some(end) = self.search(&[root]) {
                    self.augment(end);
                }
            }
        }
    }
}

fn mate_edges(mate: &[usize]) -> Vec<Edge> {
    let mut edges: Vec<Edge> = (0..mate.len())
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| Edge::new(v as Node + 1, mate[v] as Node + 1))
        .collect();
    edges.sort_unstable();
    edges
}

/// A maximum matching, sorted lexicographically.
pub fn maximum_matching(g: &Graph) -> Vec<Edge> {
    let adj = g.adjacency();
    let mut b = Blossom::new(&adj);
    b.run();
    mate_edges(&b.mate)
}

pub fn max_matching(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// Gallai–Edmonds decomposition `(D, A, C)`: `D` holds the nodes missed by
/// some maximum matching, `A = N(D) \ D`, `C` the rest. Each list is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiEdmonds {
    pub d: Vec<Node>,
    pub a: Vec<Node>,
    pub c: Vec<Node>,
    pub matching: Vec<Edge>,
}

pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let adj = g.adjacency();
    let mut b = Blossom::new(&adj);
    b.run();
    let exposed: Vec<usize> = (0..adj.len()).filter(|&v| b.mate[v] == NONE).collect();
    let found = b.search(&exposed);
    assert!(found.is_none(), "matching was not maximum");
    let in_d: Vec<bool> = (0..adj.len()).map(|v| b.even[v]).collect();
    let mut in_a = vec![false; adj.len()];
    for v in 0..adj.len() {
        if in_d[v] {
            for &u in &adj[v] {
                if !in_d[u] {
                    in_a[u] = true;
                }
            }
        }
    }
    let pick = |f: &dyn Fn(usize) -> bool| (0..adj.len()).filter(|&v| f(v)).map(|v| v as Node + 1).collect();
    GallaiEdmonds {
        d: pick(&|v| in_d[v]),
        a: pick(&|v| in_a[v]),
        c: pick(&|v| !in_d[v] && !in_a[v]),
        matching: mate_edges(&b.mate),
    }
}

/// Number of odd-size connected components of `G - U`, `U` given as a
/// membership slice indexed by `node - 1`.
pub fn odd_components(g: &Graph, in_u: &[bool]) -> usize {
    let adj = g.adjacency();
    let mut seen = in_u.to_vec();
    let mut odd = 0;
    let mut stack = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut size = 0usize;
        while let Some(v) = stack.pop() {
            size += 1;
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        odd += size % 2;
    }
    odd
}

/// `½(|U| − odd(V∖U) + n)` for the given `U`.
pub fn tutte_berge_bound(g: &Graph, in_u: &[bool]) -> usize {
    let u = in_u.iter().filter(|&&b| b).count();
    let odd = odd_components(g, in_u);
    (u + g.node_count() - odd) / 2
}

/// Exhaustive minimum of the Tutte–Berge bound over every `U ⊆ V`, with the
/// first minimiser in increasing bitmask order.
pub fn tutte_berge(g: &Graph) -> Result<(usize, Vec<Node>), OracleError> {
    let n = g.node_count();
    if n > TUTTE_BERGE_LIMIT {
        return Err(OracleError::TooLarge { n, limit: TUTTE_BERGE_LIMIT });
    }
    let adj = g.adjacency_masks();
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut best = (usize::MAX, 0u64);
    for u in 0..=full {
        let mut rest = full & !u;
        let mut odd = 0;
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            loop {
                let mut grown = comp;
                let mut bits = comp;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    grown |= adj[v];
                }
                grown &= full & !u;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            odd += comp.count_ones() as usize % 2;
            rest &= !comp;
        }
        let value = (u.count_ones() as usize + n - odd) / 2;
        if value < best.0 {
            best = (value, u);
        }
    }
    let witness = (0..n).filter(|&v| best.1 >> v & 1 == 1).map(|v| v as Node + 1).collect();
    Ok((best.0, witness))
}
