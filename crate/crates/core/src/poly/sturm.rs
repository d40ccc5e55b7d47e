//! Sturm chains over the integers.

use super::{IntPoly, Rat};
use crate::error::{Error, Result};

/// Endpoint inclusion for [`sturm_count`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bounds {
    Open,
    Closed,
    /// `(lo, hi]`
    OpenClosed,
    /// `[lo, hi)`
    ClosedOpen,
}

impl Bounds {
    fn includes_lo(self) -> bool {
        matches!(self, Bounds::Closed | Bounds::ClosedOpen)
    }

    fn includes_hi(self) -> bool {
        matches!(self, Bounds::Closed | Bounds::OpenClosed)
    }
}

/// Sturm chain of the square-free part of a polynomial.
///
/// Built as a primitive pseudo-remainder sequence: each remainder is scaled
/// by a positive factor and divided by its content, so sign patterns are
/// those of the classical chain.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Chain for the square-free part of `p`.
    pub fn new(p: &IntPoly) -> Result<Self> {
        Ok(SturmChain::from_square_free(p.square_free_part()?))
    }

    /// Chain for a polynomial already known to be square-free.
    pub fn from_square_free(p: IntPoly) -> Self {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.primitive_part());
        }
        while chain.len() >= 2 {
            let k = chain.len();
            let r = chain[k - 2]
                .positive_pseudo_rem(&chain[k - 1])
                .expect("chain elements are nonzero");
            if r.is_zero() {
                break;
            }
            chain.push(-r.primitive_part());
        }
        SturmChain { chain }
    }

    /// The square-free polynomial heading the chain.
    pub fn base(&self) -> &IntPoly {
        &self.chain[0]
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign variations at `x`, zeros skipped. For a square-free base this
    /// equals the count just to the right of `x`.
    pub fn variations(&self, x: &Rat) -> usize {
        let mut prev = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Distinct real roots in the interval, endpoints per `bounds`.
    pub fn count(&self, lo: &Rat, hi: &Rat, bounds: Bounds) -> Result<usize> {
        if lo >= hi {
            return Err(Error::EmptyInterval {
                lo: super::format_rat(lo),
                hi: super::format_rat(hi),
            });
        }
        // V(lo) - V(hi) counts roots in (lo, hi].
        let mut n = self.variations(lo) - self.variations(hi);
        let base = self.base();
        if !bounds.includes_hi() && base.sign_at(hi) == 0 {
            n -= 1;
        }
        if bounds.includes_lo() && base.sign_at(lo) == 0 {
            n += 1;
        }
        Ok(n)
    }
}

/// Number of distinct real roots of `p` in the interval from `lo` to `hi`.
pub fn sturm_count(p: &IntPoly, lo: &Rat, hi: &Rat, bounds: Bounds) -> Result<usize> {
    SturmChain::new(p)?.count(lo, hi, bounds)
}
