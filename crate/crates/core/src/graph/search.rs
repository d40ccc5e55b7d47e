//! Exhaustive searches: toughness witnesses, hamiltonian cycles and
//! back-neighbour orderings.

use itertools::Itertools;

use super::structure::{components_after_removal, connected_components};
use super::{Graph, VertexSet};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Smallest independent set `S` (by size, then lexicographically) with
/// `|S| <= max_size` whose removal leaves more than `|S|` components.
///
/// The empty set only qualifies when `G` is disconnected, so a witness
/// always certifies that `G` is not 1-tough.
pub fn independent_toughness_witness(g: &Graph, max_size: usize) -> Option<VertexSet> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    if connected_components(g).len() > 1 {
        return Some(VertexSet::new());
    }
    for size in 1..=max_size.min(n) {
        for combo in (0..n).combinations(size) {
            let set: VertexSet = combo.into_iter().collect();
            if g.is_independent(&set) && components_after_removal(g, &set) > size {
                return Some(set);
            }
        }
    }
    None
}

/// Exact hamiltonian-cycle decision by backtracking from vertex 0.
///
/// Graphs on fewer than 3 vertices have no hamiltonian cycle.
pub fn hamiltonian_cycle_exists(g: &Graph, budget: &Budget) -> Result<bool> {
    let n = g.n();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) || connected_components(g).len() > 1 {
        return Ok(false);
    }
    let adj = g.adjacency_masks()?;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    fn extend(adj: &[u64], full: u64, last: usize, used: u64, budget: &Budget) -> Result<bool> {
        budget.tick()?;
        if used == full {
            return Ok(adj[last] & 1 != 0);
        }
        let free = full & !used;
        // Every unvisited vertex needs two usable neighbours: unvisited ones,
        // the current end of the path, or the start vertex 0.
        let ends = (1u64 << last) | 1;
        let mut rest = free;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & (free | ends)).count_ones() < 2 {
                return Ok(false);
            }
        }
        let mut cand = adj[last] & free;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if extend(adj, full, w, used | (1 << w), budget)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    extend(&adj, full, 0, 1, budget)
}

fn check_permutation(n: usize, ordering: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if ordering.len() != n {
        return Err(Error::NotPermutation(n));
    }
    for &v in ordering {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotPermutation(n));
        }
    }
    Ok(())
}

/// Whether `ordering` is a hamiltonian path in which every vertex from the
/// third on has a neighbour among the vertices at least two places earlier.
pub fn dong_koh_check(g: &Graph, ordering: &[usize]) -> Result<bool> {
    check_permutation(g.n(), ordering)?;
    for i in 1..ordering.len() {
        if !g.has_edge(ordering[i - 1], ordering[i]) {
            return Ok(false);
        }
        if i >= 2
            && !ordering[..i - 1]
                .iter()
                .any(|&w| g.has_edge(ordering[i], w))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact search for an ordering accepted by [`dong_koh_check`].
pub fn dong_koh_ordering_exists(g: &Graph, budget: &Budget) -> Result<bool> {
    Ok(dong_koh_ordering(g, budget)?.is_some())
}

/// Like [`dong_koh_ordering_exists`], returning the first ordering found.
pub fn dong_koh_ordering(g: &Graph, budget: &Budget) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if connected_components(g).len() > 1 {
        return Ok(None);
    }
    let adj = g.adjacency_masks()?;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    // `earlier` holds every placed vertex except the last one.
    fn extend(
        adj: &[u64],
        full: u64,
        order: &mut Vec<usize>,
        earlier: u64,
        budget: &Budget,
    ) -> Result<bool> {
        budget.tick()?;
        let last = *order.last().expect("non-empty ordering");
        let used = earlier | (1 << last);
        if used == full {
            return Ok(true);
        }
        let mut cand = adj[last] & full & !used;
        if order.len() >= 2 {
            let mut filtered = 0;
            let mut rest = cand;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[w] & earlier != 0 {
                    filtered |= 1 << w;
                }
            }
            cand = filtered;
        }
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            order.push(w);
            if extend(adj, full, order, used, budget)? {
                return Ok(true);
            }
            order.pop();
        }
        Ok(false)
    }

    let mut order = Vec::with_capacity(n);
    for start in 0..n {
        order.clear();
        order.push(start);
        if extend(&adj, full, &mut order, 0, budget)? {
            return Ok(Some(order));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toughness_witness_examples() {
        assert_eq!(independent_toughness_witness(&Graph::complete(4), 3), None);
        assert_eq!(independent_toughness_witness(&Graph::cycle(5), 2), None);
        // Star K(1,3): removing the centre leaves 3 components.
        let star = Graph::complete_bipartite(1, 3);
        assert_eq!(
            independent_toughness_witness(&star, 1),
            Some(VertexSet::from([0]))
        );
        assert_eq!(
            independent_toughness_witness(&Graph::empty(2), 0),
            Some(VertexSet::new())
        );
    }

    #[test]
    fn hamiltonian_examples() {
        let b = Budget::unlimited();
        assert!(hamiltonian_cycle_exists(&Graph::cycle(5), &b).unwrap());
        assert!(!hamiltonian_cycle_exists(&Graph::path(4), &b).unwrap());
        assert!(hamiltonian_cycle_exists(&Graph::complete(6), &b).unwrap());
        assert!(!hamiltonian_cycle_exists(&Graph::complete_bipartite(3, 4), &b).unwrap());
        assert!(hamiltonian_cycle_exists(&Graph::complete_bipartite(4, 4), &b).unwrap());
    }

    #[test]
    fn hamiltonian_respects_budget() {
        let b = Budget::new(2);
        assert_eq!(
            hamiltonian_cycle_exists(&Graph::complete(8), &b),
            Err(Error::BudgetExhausted(2))
        );
    }

    #[test]
    fn dong_koh_check_examples() {
        let k4 = Graph::complete(4);
        assert!(dong_koh_check(&k4, &[2, 0, 3, 1]).unwrap());
        assert!(!dong_koh_check(&Graph::path(4), &[0, 1, 2, 3]).unwrap());
        assert!(!dong_koh_check(&Graph::cycle(4), &[0, 1, 2, 3]).unwrap());
        assert_eq!(
            dong_koh_check(&k4, &[0, 1, 1, 2]),
            Err(Error::NotPermutation(4))
        );
        assert_eq!(
            dong_koh_check(&k4, &[0, 1, 2]),
            Err(Error::NotPermutation(4))
        );
    }

    #[test]
    fn dong_koh_search_examples() {
        let b = Budget::unlimited();
        assert!(dong_koh_ordering_exists(&Graph::complete(4), &b).unwrap());
        assert!(!dong_koh_ordering_exists(&Graph::empty(2), &b).unwrap());
        assert!(!dong_koh_ordering_exists(&Graph::cycle(5), &b).unwrap());
        let found = dong_koh_ordering(&Graph::complete(5), &b).unwrap().unwrap();
        assert!(dong_koh_check(&Graph::complete(5), &found).unwrap());
    }
}
