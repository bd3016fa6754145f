use super::OracleError;
use crate::graph::Graph;

pub const CHROMATIC_LIMIT: usize = 24;

struct Search<'a> {
    adj: &'a [u64],
    order: Vec<usize>,
    colors: Vec<u32>,
    k: u32,
}

impl Search<'_> {
    fn assign(&mut self, pos: usize, used: u32) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        // A fresh colour is interchangeable with every other unused one.
        for c in 1..=(used + 1).min(self.k) {
            let clash = (0..self.adj.len()).any(|u| self.adj[v] >> u & 1 == 1 && self.colors[u] == c);
            if clash {
                continue;
            }
            self.colors[v] = c;
            if self.assign(pos + 1, used.max(c)) {
                return true;
            }
            self.colors[v] = 0;
        }
        false
    }
}

/// A proper colouring with colours in `1..=k`, if one exists.
pub fn colorable(g: &Graph, k: usize) -> Result<Option<Vec<u32>>, OracleError> {
    let n = g.node_count();
    if n > CHROMATIC_LIMIT {
        return Err(OracleError::TooLarge { n, limit: CHROMATIC_LIMIT });
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let adj = g.adjacency_masks();
    // Visit high-degree nodes first, breadth-first from each, so neighbours
    // are coloured close together.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count_ones()), v));
    for &s in &by_degree {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in 0..n {
                if adj[v] >> u & 1 == 1 && !placed[u] {
                    placed[u] = true;
                    order.push(u);
                }
            }
        }
    }
    let mut search = Search { adj: &adj, order, colors: vec![0; n], k: k.min(n) as u32 };
    Ok(search.assign(0, 0).then_some(search.colors))
}

/// Chromatic number and an optimal colouring.
pub fn chromatic(g: &Graph) -> Result<(usize, Vec<u32>), OracleError> {
    for k in 0..=g.node_count() {
        if let Some(colors) = colorable(g, k)? {
            return Ok((k, colors));
        }
    }
    unreachable!("n colours always suffice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn small_families() {
        assert_eq!(chromatic(&generators::cycle(5)).unwrap().0, 3);
        assert_eq!(chromatic(&generators::path(4)).unwrap().0, 2);
        assert_eq!(chromatic(&generators::edgeless(3)).unwrap().0, 1);
        assert_eq!(chromatic(&generators::complete(6)).unwrap().0, 6);
        assert_eq!(chromatic(&Graph::empty(0)).unwrap().0, 0);
    }

    #[test]
    fn colouring_is_proper() {
        let g = generators::cycle(9);
        let (k, colors) = chromatic(&g).unwrap();
        assert_eq!(k, 3);
        for e in g.edges() {
            assert_ne!(colors[e.u() as usize - 1], colors[e.v() as usize - 1]);
        }
    }

    #[test]
    fn too_large() {
        assert!(colorable(&generators::path(25), 2).is_err());
    }
}
