//! Chromatic polynomials from colouring counts only.
//!
//! Shares nothing with the deletion-contraction path: colourings are
//! enumerated by backtracking and the polynomial is recovered by exact
//! Newton interpolation.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{falling_factorial, IntPoly, Rat};

/// Number of proper colourings of `g` with colours `0..k`.
///
/// Vertices are coloured in index order. Colours not yet used are
/// interchangeable, so a fresh colour is tried once and weighted by the
/// number of unused colours; every colouring is still counted exactly once.
pub fn count_proper_colourings(g: &Graph, k: usize, budget: &Budget) -> Result<BigUint> {
    let n = g.n();
    let mut colour = vec![usize::MAX; n];

    fn go(
        g: &Graph,
        k: usize,
        v: usize,
        used: usize,
        colour: &mut [usize],
        budget: &Budget,
    ) -> Result<BigUint> {
        budget.tick()?;
        if v == colour.len() {
            return Ok(BigUint::one());
        }
        let mut total = BigUint::zero();
        for c in 0..used {
            if g.neighbors(v).iter().any(|&w| w < v && colour[w] == c) {
                continue;
            }
            colour[v] = c;
            total += go(g, k, v + 1, used, colour, budget)?;
        }
        if used < k {
            colour[v] = used;
            total += go(g, k, v + 1, used + 1, colour, budget)? * BigUint::from(k - used);
        }
        colour[v] = usize::MAX;
        Ok(total)
    }

    go(g, k, 0, 0, &mut colour, budget)
}

/// Interpolates the degree-`n` polynomial through `(k, P(G, k))` for
/// `k = 0..=n` using Newton forward differences over the rationals.
pub fn chromatic_polynomial_by_interpolation(g: &Graph, budget: &Budget) -> Result<IntPoly> {
    let n = g.n();
    let mut diffs: Vec<BigInt> = (0..=n)
        .map(|k| count_proper_colourings(g, k, budget).map(BigInt::from))
        .collect::<Result<_>>()?;
    // After this loop diffs[j] holds the j-th forward difference at 0.
    for j in 1..=n {
        for i in (j..=n).rev() {
            diffs[i] = &diffs[i] - &diffs[i - 1];
        }
    }
    let mut coeffs = vec![Rat::zero(); n + 1];
    let mut factorial = BigInt::one();
    for (j, d) in diffs.iter().enumerate() {
        if j > 0 {
            factorial *= BigInt::from(j);
        }
        let weight = Rat::new(d.clone(), factorial.clone());
        for (i, c) in falling_factorial(j).coeffs().iter().enumerate() {
            coeffs[i] += &weight * Rat::from_integer(c.clone());
        }
    }
    let ints = coeffs
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Internal(format!(
                    "interpolated coefficient {c} is not an integer"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(ints))
}
