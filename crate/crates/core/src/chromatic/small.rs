//! Bitmask graphs on at most 64 vertices, used inside the recursion.

use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SmallGraph {
    adj: Vec<u64>,
}

/// Deletes bit `v` from `mask`, shifting higher bits down by one.
#[inline]
fn drop_bit(mask: u64, v: usize) -> u64 {
    let low = mask & ((1u64 << v) - 1);
    let high = if v >= 63 { 0 } else { (mask >> (v + 1)) << v };
    low | high
}

#[inline]
fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl SmallGraph {
    pub(crate) fn from_graph(g: &Graph) -> Result<Self> {
        Ok(SmallGraph {
            adj: g.adjacency_masks()?,
        })
    }

    pub(crate) fn n(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub(crate) fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub(crate) fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Same neighbourhood apart from each other.
    pub(crate) fn are_twins(&self, u: usize, v: usize) -> bool {
        let strip = !((1u64 << u) | (1u64 << v));
        self.adj[u] & strip == self.adj[v] & strip
    }

    pub(crate) fn delete_edge(&self, u: usize, v: usize) -> SmallGraph {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        SmallGraph { adj }
    }

    /// Merges `max(u,v)` into `min(u,v)`; higher vertices shift down.
    pub(crate) fn contract_edge(&self, u: usize, v: usize) -> SmallGraph {
        let (keep, gone) = (u.min(v), u.max(v));
        let mut adj = self.adj.clone();
        let merged = (adj[keep] | adj[gone]) & !((1 << keep) | (1 << gone));
        adj[keep] = merged;
        for w in bits(merged) {
            adj[w] |= 1 << keep;
        }
        adj.remove(gone);
        for row in adj.iter_mut() {
            *row = drop_bit(*row, gone);
        }
        SmallGraph { adj }
    }

    /// Induced subgraph on the vertices of `mask`, in increasing order.
    pub(crate) fn induced(&self, mask: u64) -> SmallGraph {
        let verts: Vec<usize> = bits(mask).collect();
        let adj = verts
            .iter()
            .map(|&v| {
                let row = self.adj[v] & mask;
                verts
                    .iter()
                    .enumerate()
                    .filter(|(_, &w)| row >> w & 1 == 1)
                    .fold(0u64, |m, (i, _)| m | (1 << i))
            })
            .collect();
        SmallGraph { adj }
    }

    /// Component vertex masks, ordered by smallest member.
    pub(crate) fn components(&self) -> Vec<u64> {
        let n = self.n();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut left = all;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    /// Blocks of a connected graph as vertex masks (Hopcroft-Tarjan).
    pub(crate) fn blocks(&self) -> Vec<u64> {
        let n = self.n();
        let mut disc = vec![u32::MAX; n];
        let mut low = vec![0u32; n];
        let mut time = 0u32;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        disc[0] = 0;
        low[0] = 0;
        time += 1;
        let mut stack: Vec<(usize, usize, u64)> = vec![(0, usize::MAX, self.adj[0])];
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            if top.2 != 0 {
                let w = top.2.trailing_zeros() as usize;
                top.2 &= top.2 - 1;
                if w == parent {
                    continue;
                }
                if disc[w] == u32::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edges.push((u, w));
                    stack.push((w, u, self.adj[w]));
                } else if disc[w] < disc[u] {
                    low[u] = low[u].min(disc[w]);
                    edges.push((u, w));
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[u]);
                if low[u] >= disc[parent] {
                    let mut block = 0u64;
                    while let Some((a, b)) = edges.pop() {
                        block |= (1 << a) | (1 << b);
                        if (a, b) == (parent, u) {
                            break;
                        }
                    }
                    out.push(block);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(g: &Graph) -> SmallGraph {
        SmallGraph::from_graph(g).unwrap()
    }

    #[test]
    fn contraction_matches_graph_contraction() {
        let g = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3), (0, 4)]).unwrap();
        for (u, v) in g.edges() {
            let expected = small(&g.contract_edge(u, v).unwrap());
            assert_eq!(small(&g).contract_edge(u, v), expected);
            assert_eq!(small(&g).contract_edge(v, u), expected);
        }
    }

    #[test]
    fn components_and_blocks() {
        let g = Graph::complete(3).disjoint_union(&Graph::path(3));
        let s = small(&g);
        assert_eq!(s.components(), vec![0b000111, 0b111000]);
        let bowtie =
            Graph::from_edge_list(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let mut b = small(&bowtie).blocks();
        b.sort();
        assert_eq!(b, vec![0b00111, 0b11100]);
    }

    #[test]
    fn induced_relabels_in_order() {
        let s = small(&Graph::path(4));
        let sub = s.induced(0b1110);
        assert_eq!(sub, small(&Graph::path(3)));
    }
}
