use std::collections::{BTreeSet, VecDeque};

use super::Graph;

/// Connected components, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    components_masked(g, &vec![false; g.n()])
}

/// Number of components of `G - removed`.
pub fn components_after_removal(g: &Graph, removed: &BTreeSet<usize>) -> usize {
    let mut mask = vec![false; g.n()];
    for &v in removed {
        mask[v] = true;
    }
    components_masked(g, &mask).len()
}

fn components_masked(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Biconnected decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks as sorted vertex sets, ordered by their sorted member lists.
    /// Isolated vertices are not blocks.
    pub blocks: Vec<Vec<usize>>,
    pub articulation_points: BTreeSet<usize>,
}

impl BlockDecomposition {
    /// Number of blocks that are not isolated vertices.
    pub fn count(&self) -> usize {
        self.blocks.len()
    }
}

/// Hopcroft-Tarjan block decomposition (iterative DFS with an edge stack).
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    let mut cut = BTreeSet::new();

    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(u).get(*idx) {
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((u, w));
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    low[u] = low[u].min(disc[w]);
                    edge_stack.push((u, w));
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[u]);
                if low[u] >= disc[parent] {
                    if parent != root {
                        cut.insert(parent);
                    }
                    let mut block = BTreeSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (parent, u) {
                            break;
                        }
                    }
                    blocks.push(block.into_iter().collect::<Vec<_>>());
                }
            }
        }
        if root_children > 1 {
            cut.insert(root);
        }
    }
    blocks.sort();
    BlockDecomposition {
        blocks,
        articulation_points: cut,
    }
}

/// Outcome of a bipartiteness test, with a certificate either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Proper 2-colouring, `sides[v]` in `{0, 1}`.
    Bipartite(Vec<u8>),
    /// An odd cycle as a vertex sequence; consecutive vertices (and last to
    /// first) are adjacent.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite(_))
    }
}

pub fn is_bipartite(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Bipartition::OddCycle(odd_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    Bipartition::Bipartite(side)
}

// Joins the two BFS-tree paths from u and w up to their common ancestor.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        if depth[a] >= depth[b] {
            a = parent[a];
            left.push(a);
        }
        if depth[b] > depth[a] || (a != b && depth[a] == depth[b]) {
            b = parent[b];
            right.push(b);
        }
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for
/// non-adjacent `s != t`, capped at `cap`.
///
/// Unit-capacity augmenting paths on the split-vertex digraph.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let n = g.n();
    // Node v_in = 2v, v_out = 2v+1. Arc v_in -> v_out capacity 1 (inf for s,t),
    // arcs u_out -> w_in for every edge, capacity 1.
    let nodes = 2 * n;
    let mut arcs: Vec<(usize, usize, i32)> = Vec::new(); // (to, rev index, cap)
    let mut head: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut add = |arcs: &mut Vec<(usize, usize, i32)>, a: usize, b: usize, c: i32| {
        let ia = arcs.len();
        arcs.push((b, ia + 1, c));
        arcs.push((a, ia, 0));
        head[a].push(ia);
        head[b].push(ia + 1);
    };
    for v in 0..n {
        let c = if v == s || v == t { n as i32 } else { 1 };
        add(&mut arcs, 2 * v, 2 * v + 1, c);
    }
    for (u, w) in g.edges() {
        add(&mut arcs, 2 * u + 1, 2 * w, 1);
        add(&mut arcs, 2 * w + 1, 2 * u, 1);
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    while flow < cap {
        let mut prev = vec![usize::MAX; nodes];
        let mut seen = vec![false; nodes];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &ai in &head[x] {
                let (to, _, c) = arcs[ai];
                if c > 0 && !seen[to] {
                    seen[to] = true;
                    prev[to] = ai;
                    queue.push_back(to);
                }
            }
        }
        if !seen[sink] {
            break;
        }
        let mut x = sink;
        while x != source {
            let ai = prev[x];
            arcs[ai].2 -= 1;
            let rev = arcs[ai].1;
            arcs[rev].2 += 1;
            x = arcs[rev].0;
        }
        flow += 1;
    }
    flow
}

/// Vertex connectivity: `n - 1` for complete graphs, otherwise the minimum
/// local connectivity over non-adjacent pairs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t, best));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

/// `G` has more than `k` vertices and no vertex cut of fewer than `k`
/// vertices.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    if g.is_complete() {
        return true;
    }
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) && local_connectivity(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}
