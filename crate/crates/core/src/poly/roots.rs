//! Real root isolation and decimal refinement by exact bisection.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use super::sturm::{Bounds, SturmChain};
use super::{format_rat, IntPoly, Rat};
use crate::error::{Error, Result};

/// An isolated real root of `poly`.
///
/// The square-free part of `poly` has exactly one root in `[lo, hi]`, and
/// neither endpoint is a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootRecord {
    pub poly: IntPoly,
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: usize,
    /// Correctly rounded decimal, present after [`refine_root`].
    pub decimal: Option<String>,
}

impl RootRecord {
    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

#[derive(Serialize)]
struct RootRecordJson<'a> {
    lo: String,
    hi: String,
    decimal: &'a Option<String>,
    multiplicity: usize,
}

impl Serialize for RootRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RootRecordJson {
            lo: format_rat(&self.lo),
            hi: format_rat(&self.hi),
            decimal: &self.decimal,
            multiplicity: self.multiplicity,
        }
        .serialize(s)
    }
}

/// Precomputed chains for repeated isolation and refinement on one
/// polynomial.
#[derive(Debug, Clone)]
pub struct RootIsolator {
    poly: IntPoly,
    chain: SturmChain,
    // Yun factors: factor i (0-based) carries the roots of multiplicity i+1.
    factors: Vec<Option<SturmChain>>,
}

impl RootIsolator {
    pub fn new(p: &IntPoly) -> Result<Self> {
        let chain = SturmChain::new(p)?;
        let factors = p
            .square_free_factors()?
            .into_iter()
            .map(|f| (f.degree().unwrap_or(0) > 0).then(|| SturmChain::from_square_free(f)))
            .collect();
        Ok(RootIsolator {
            poly: p.clone(),
            chain,
            factors,
        })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn chain(&self) -> &SturmChain {
        &self.chain
    }

    fn sign(&self, x: &Rat) -> i8 {
        self.chain.base().sign_at(x)
    }

    fn count_open(&self, lo: &Rat, hi: &Rat) -> usize {
        self.chain.count(lo, hi, Bounds::Open).expect("lo < hi")
    }

    fn multiplicity(&self, lo: &Rat, hi: &Rat) -> usize {
        for (i, f) in self.factors.iter().enumerate() {
            if let Some(f) = f {
                if f.count(lo, hi, Bounds::Closed).expect("lo < hi") > 0 {
                    return i + 1;
                }
            }
        }
        unreachable!("isolated root belongs to some square-free factor")
    }

    /// One record per distinct real root in the open interval `(lo, hi)`,
    /// ascending.
    pub fn isolate(&self, lo: &Rat, hi: &Rat) -> Result<Vec<RootRecord>> {
        if lo >= hi {
            return Err(Error::EmptyInterval {
                lo: format_rat(lo),
                hi: format_rat(hi),
            });
        }
        let mut intervals = Vec::new();
        let count = self.count_open(lo, hi);
        self.split(lo.clone(), hi.clone(), count, &mut intervals);
        Ok(intervals
            .into_iter()
            .map(|(lo, hi)| {
                let multiplicity = self.multiplicity(&lo, &hi);
                RootRecord {
                    poly: self.poly.clone(),
                    lo,
                    hi,
                    multiplicity,
                    decimal: None,
                }
            })
            .collect())
    }

    fn split(&self, a: Rat, b: Rat, count: usize, out: &mut Vec<(Rat, Rat)>) {
        if count == 0 {
            return;
        }
        if count == 1 && self.sign(&a) != 0 && self.sign(&b) != 0 {
            out.push((a, b));
            return;
        }
        let two = Rat::from_integer(BigInt::from(2));
        let m = (&a + &b) / &two;
        if self.sign(&m) == 0 {
            // Exact root at the midpoint: shrink a window around it until it
            // holds no other root and its ends are not roots.
            let mut w = (&b - &a) / Rat::from_integer(BigInt::from(4));
            loop {
                let (l, r) = (&m - &w, &m + &w);
                if self.chain.count(&l, &r, Bounds::Closed).expect("l < r") == 1 {
                    let left = self.count_open(&a, &l);
                    let right = self.count_open(&r, &b);
                    self.split(a, l.clone(), left, out);
                    out.push((l, r.clone()));
                    self.split(r, b, right, out);
                    return;
                }
                w /= &two;
            }
        }
        let left = self.count_open(&a, &m);
        self.split(a, m.clone(), left, out);
        self.split(m, b, count - left, out);
    }

    /// Narrows `rec` by bisection and attaches the correctly rounded
    /// decimal with `places` digits after the point (round half to even).
    ///
    /// The interval is first narrowed below `10^-(places+3)`; bisection
    /// then continues at rounding boundaries until the rounding is decided.
    pub fn refine(&self, rec: &RootRecord, places: u32) -> RootRecord {
        let scale = Rat::from_integer(num_traits::pow(BigInt::from(10), places as usize));
        let target = Rat::new(
            BigInt::one(),
            num_traits::pow(BigInt::from(10), places as usize + 3),
        );
        let two = Rat::from_integer(BigInt::from(2));
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        let (mut lo, mut hi) = (rec.lo.clone(), rec.hi.clone());
        let lo_sign = self.sign(&lo);
        debug_assert!(lo_sign != 0 && lo_sign == -self.sign(&hi));

        let exact = |lo: Rat, hi: Rat, root: Rat| {
            let rounded = round_half_even(&(&root * &scale));
            let w = std::cmp::min(&hi - &lo, target.clone()) / Rat::from_integer(BigInt::from(4));
            RootRecord {
                poly: rec.poly.clone(),
                lo: &root - &w,
                hi: &root + &w,
                multiplicity: rec.multiplicity,
                decimal: Some(render_decimal(&rounded, places)),
            }
        };

        while &hi - &lo >= target {
            let m = (&lo + &hi) / &two;
            match self.sign(&m) {
                0 => return exact(lo, hi, m),
                s if s == lo_sign => lo = m,
                _ => hi = m,
            }
        }
        loop {
            let low_cell = (&lo * &scale + &half).floor().to_integer();
            let high_cell = (&hi * &scale + &half).floor().to_integer();
            if low_cell == high_cell {
                return RootRecord {
                    poly: rec.poly.clone(),
                    lo,
                    hi,
                    multiplicity: rec.multiplicity,
                    decimal: Some(render_decimal(&low_cell, places)),
                };
            }
            // Rounding boundary between the two cells.
            let boundary = (Rat::from_integer(low_cell.clone()) + &half) / &scale;
            if boundary >= hi {
                // hi itself is the boundary and not a root: the root is below.
                return RootRecord {
                    poly: rec.poly.clone(),
                    lo,
                    hi,
                    multiplicity: rec.multiplicity,
                    decimal: Some(render_decimal(&low_cell, places)),
                };
            }
            match self.sign(&boundary) {
                0 => return exact(lo, hi, boundary),
                s if s == lo_sign => lo = boundary,
                _ => hi = boundary,
            }
        }
    }
}

fn round_half_even(x: &Rat) -> BigInt {
    let floor = x.floor().to_integer();
    let frac = x - Rat::from_integer(floor.clone());
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    match frac.cmp(&half) {
        std::cmp::Ordering::Less => floor,
        std::cmp::Ordering::Greater => floor + 1,
        std::cmp::Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + 1
            }
        }
    }
}

/// Renders `units * 10^-places` as a decimal string.
pub fn render_decimal(units: &BigInt, places: u32) -> String {
    let digits = units.abs().to_string();
    let places = places as usize;
    let sign = if units.is_negative() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{digits}");
    }
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = padded.split_at(padded.len() - places);
    format!("{sign}{int}.{frac}")
}

/// Isolates the distinct real roots of `p` in `(lo, hi)`.
pub fn isolate_roots(p: &IntPoly, lo: &Rat, hi: &Rat) -> Result<Vec<RootRecord>> {
    RootIsolator::new(p)?.isolate(lo, hi)
}

/// Refines an isolated root to a decimal with `places` digits.
pub fn refine_root(rec: &RootRecord, places: u32) -> Result<RootRecord> {
    Ok(RootIsolator::new(&rec.poly)?.refine(rec, places))
}

impl RootRecord {
    /// Whether the rational `x` lies in `[lo, hi]`.
    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}
