//! Exact chromatic polynomials.
//!
//! [`ChromaticEngine`] runs deletion-contraction with structural
//! reductions and a memo cache keyed by canonical form. The [`oracle`]
//! module computes the same polynomials from colouring counts alone.

mod canon;
pub mod oracle;
mod small;

use dashmap::DashMap;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;
use crate::poly::{falling_factorial, IntPoly};
use canon::CacheKey;
use small::SmallGraph;

pub use oracle::{chromatic_polynomial_by_interpolation, count_proper_colourings};

/// How the engine keys its memo cache.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CacheMode {
    /// Canonical labelling: isomorphic graphs share entries.
    #[default]
    Canonical,
    /// Identity labelling: only identically labelled graphs share entries.
    Exact,
    Disabled,
}

/// Graphs above these sizes are never cached.
pub const CACHE_MAX_VERTICES: usize = 24;
pub const CACHE_MAX_EDGES: usize = 60;

// Recursion depth below which deletion and contraction run concurrently.
const PARALLEL_DEPTH: usize = 6;

/// Deletion-contraction engine with a shared memo cache.
///
/// Reductions, in order: disconnected graphs factor over components; graphs
/// with a cut vertex factor over blocks, divided by `x^(b-1)`; edgeless,
/// tree and complete graphs use closed forms; anything else recurses as
/// `P(G) = P(G - e) - P(G / e)` on the edge whose endpoint degrees sum
/// highest (first such edge in lexicographic order).
#[derive(Debug)]
pub struct ChromaticEngine {
    cache_mode: CacheMode,
    parallel: bool,
    budget_limit: u64,
    memo: DashMap<CacheKey, IntPoly>,
}

impl Default for ChromaticEngine {
    fn default() -> Self {
        ChromaticEngine::new()
    }
}

impl ChromaticEngine {
    /// Canonical cache, sequential, node limit from `CHROMROOT_BUDGET`.
    pub fn new() -> Self {
        ChromaticEngine {
            cache_mode: CacheMode::Canonical,
            parallel: false,
            budget_limit: Budget::from_env().limit(),
            memo: DashMap::new(),
        }
    }

    pub fn with_cache(mut self, mode: CacheMode) -> Self {
        self.cache_mode = mode;
        self
    }

    /// Node limit applied to each top-level call.
    pub fn with_budget_limit(mut self, limit: u64) -> Self {
        self.budget_limit = limit;
        self
    }

    /// Evaluates independent branches on the rayon pool.
    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }

    pub fn budget_limit(&self) -> u64 {
        self.budget_limit
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    /// Exact chromatic polynomial of `g` (at most 64 vertices).
    ///
    /// Each call gets a fresh node budget; the memo cache persists across
    /// calls.
    pub fn chromatic_polynomial(&self, g: &Graph) -> Result<IntPoly> {
        let small = SmallGraph::from_graph(g)?;
        self.poly(&small, 0, &Budget::new(self.budget_limit))
    }

    fn poly(&self, g: &SmallGraph, depth: usize, budget: &Budget) -> Result<IntPoly> {
        budget.tick()?;
        let n = g.n();
        let m = g.edge_count();
        if n == 0 {
            return Ok(IntPoly::one());
        }
        if m == 0 {
            return Ok(IntPoly::monomial(n));
        }
        let comps = g.components();
        if comps.len() > 1 {
            let mut acc = IntPoly::one();
            for c in comps {
                acc = &acc * &self.poly(&g.induced(c), depth + 1, budget)?;
            }
            return Ok(acc);
        }
        if m + 1 == n {
            return Ok(&IntPoly::x() * &IntPoly::x_minus(1).pow(n as u32 - 1));
        }
        if 2 * m == n * (n - 1) {
            return Ok(falling_factorial(n));
        }

        let key = self.key(g, budget)?;
        if let Some(k) = &key {
            if let Some(hit) = self.memo.get(k) {
                return Ok(hit.clone());
            }
        }

        let blocks = g.blocks();
        let result = if blocks.len() > 1 {
            let mut acc = IntPoly::one();
            for &b in &blocks {
                acc = &acc * &self.poly(&g.induced(b), depth + 1, budget)?;
            }
            acc.shift_down(blocks.len() - 1)
                .expect("each block polynomial is divisible by x")
        } else {
            let (u, v) = pick_edge(g);
            let deleted = g.delete_edge(u, v);
            let contracted = g.contract_edge(u, v);
            let (pd, pc) = if self.parallel && depth < PARALLEL_DEPTH {
                rayon::join(
                    || self.poly(&deleted, depth + 1, budget),
                    || self.poly(&contracted, depth + 1, budget),
                )
            } else {
                (
                    self.poly(&deleted, depth + 1, budget),
                    self.poly(&contracted, depth + 1, budget),
                )
            };
            &pd? - &pc?
        };

        if let Some(k) = key {
            // Atomic get-or-insert; concurrent writers store identical values.
            return Ok(self.memo.entry(k).or_insert(result).clone());
        }
        Ok(result)
    }

    fn key(&self, g: &SmallGraph, budget: &Budget) -> Result<Option<CacheKey>> {
        if g.n() > CACHE_MAX_VERTICES || g.edge_count() > CACHE_MAX_EDGES {
            return Ok(None);
        }
        Ok(match self.cache_mode {
            CacheMode::Disabled => None,
            CacheMode::Exact => Some(canon::identity_key(g)),
            CacheMode::Canonical => Some(canon::canonical_key(g, budget)?),
        })
    }
}

fn pick_edge(g: &SmallGraph) -> (usize, usize) {
    let n = g.n();
    let mut best = None;
    let mut best_score = 0;
    for u in 0..n {
        let du = g.degree(u);
        let mut row = g.row(u) >> (u + 1);
        let mut v = u + 1;
        while row != 0 {
            let skip = row.trailing_zeros() as usize;
            v += skip;
            row >>= skip;
            let score = du + g.degree(v);
            if best.is_none() || score > best_score {
                best = Some((u, v));
                best_score = score;
            }
            row >>= 1;
            v += 1;
        }
    }
    best.expect("graph has an edge")
}

/// Chromatic polynomial with a fresh default engine.
pub fn chromatic_polynomial(g: &Graph) -> Result<IntPoly> {
    ChromaticEngine::new().chromatic_polynomial(g)
}
