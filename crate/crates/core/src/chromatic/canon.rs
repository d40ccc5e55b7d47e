//! Canonical labelling for the memo cache.
//!
//! Colour refinement followed by an individualisation search over the
//! refined partition. The key is the lexicographically smallest upper
//! triangle over all leaves of the search tree, so isomorphic graphs get
//! equal keys. Interchangeable twins in the target cell are tried once.

use super::small::SmallGraph;
use crate::budget::Budget;
use crate::error::Result;

/// Deterministic byte key: vertex count followed by the packed upper
/// triangle of the adjacency matrix.
pub(crate) type CacheKey = Vec<u8>;

/// Key of the graph exactly as labelled.
pub(crate) fn identity_key(g: &SmallGraph) -> CacheKey {
    let perm: Vec<usize> = (0..g.n()).collect();
    pack(g, &perm)
}

/// Key invariant under relabelling.
pub(crate) fn canonical_key(g: &SmallGraph, budget: &Budget) -> Result<CacheKey> {
    let n = g.n();
    if n <= 1 {
        return Ok(identity_key(g));
    }
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut sorted = degrees.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let colours: Vec<usize> = degrees
        .iter()
        .map(|d| sorted.binary_search(d).expect("present"))
        .collect();
    let colours = refine(g, colours);
    let mut best: Option<CacheKey> = None;
    search(g, colours, &mut best, budget)?;
    Ok(best.expect("search visits at least one leaf"))
}

// Packs the upper triangle with vertex v placed at position perm[v].
fn pack(g: &SmallGraph, perm: &[usize]) -> CacheKey {
    let n = g.n();
    let mut inverse = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inverse[p] = v;
    }
    let mut out = Vec::with_capacity(1 + (n * n) / 16 + 1);
    out.push(n as u8);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(inverse[i], inverse[j]) as u8;
            bits += 1;
            if bits == 8 {
                out.push(acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(acc << (8 - bits));
    }
    out
}

fn colour_count(colours: &[usize]) -> usize {
    colours.iter().max().map_or(0, |&m| m + 1)
}

/// Iterated colour refinement. New colours are ranks of
/// `(old colour, neighbour counts per colour)`, so the cell order of the
/// input is preserved and the result is isomorphism-equivariant.
fn refine(g: &SmallGraph, mut colours: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    loop {
        let k = colour_count(&colours);
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; k];
                let mut rest = g.row(v);
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    counts[colours[w]] += 1;
                }
                (colours[v], counts)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() == k {
            return colours;
        }
        colours = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
    }
}

fn search(
    g: &SmallGraph,
    colours: Vec<usize>,
    best: &mut Option<CacheKey>,
    budget: &Budget,
) -> Result<()> {
    budget.tick()?;
    let n = g.n();
    let k = colour_count(&colours);
    if k == n {
        let key = pack(g, &colours);
        if best.as_ref().is_none_or(|b| key < *b) {
            *best = Some(key);
        }
        return Ok(());
    }
    // First non-singleton cell.
    let mut sizes = vec![0usize; k];
    for &c in &colours {
        sizes[c] += 1;
    }
    let target = sizes.iter().position(|&s| s > 1).expect("not discrete");
    let members: Vec<usize> = (0..n).filter(|&v| colours[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &members {
        if tried.iter().any(|&u| g.are_twins(u, v)) {
            continue;
        }
        tried.push(v);
        let individualised: Vec<usize> = colours
            .iter()
            .enumerate()
            .map(|(w, &c)| {
                if c > target || (c == target && w != v) {
                    c + 1
                } else {
                    c
                }
            })
            .collect();
        search(g, refine(g, individualised), best, budget)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn key(g: &Graph) -> CacheKey {
        canonical_key(&SmallGraph::from_graph(g).unwrap(), &Budget::unlimited()).unwrap()
    }

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        Graph::from_edge_list(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
    }

    #[test]
    fn isomorphic_graphs_share_keys() {
        let g = Graph::from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let h = relabel(&g, &[5, 3, 1, 0, 2, 4]);
        assert_ne!(g, h);
        assert_eq!(key(&g), key(&h));
    }

    #[test]
    fn non_isomorphic_graphs_differ() {
        // Same degree sequence (all 2): C6 versus two triangles.
        let c6 = Graph::cycle(6);
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_ne!(key(&c6), key(&two_k3));
    }

    #[test]
    fn regular_graphs() {
        let petersen = Graph::from_edge_list(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        let shuffled = relabel(&petersen, &[3, 7, 1, 9, 0, 5, 2, 8, 6, 4]);
        assert_eq!(key(&petersen), key(&shuffled));
    }
}
