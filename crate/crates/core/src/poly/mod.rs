//! Dense univariate polynomials over arbitrary-precision integers.

mod rat;
mod roots;
mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use rat::{format_rat, parse_rat, rat, Rat};
pub use roots::{isolate_roots, refine_root, render_decimal, RootIsolator, RootRecord};
pub use sturm::{sturm_count, Bounds, SturmChain};

/// Polynomial with integer coefficients in ascending degree order.
///
/// The highest stored coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// From small coefficients, ascending degree.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn x() -> Self {
        IntPoly::from_i64s(&[0, 1])
    }

    /// `x - a`.
    pub fn x_minus(a: i64) -> Self {
        IntPoly::from_i64s(&[-a, 1])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides by `x^k`; fails unless the low `k` coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Result<IntPoly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact value at a rational point (Horner).
    pub fn eval_rat(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + Rat::from_integer(c.clone()))
    }

    /// Sign of the value at `x` (-1, 0 or 1), computed on integers as
    /// `sum c_i a^i b^(d-i)` for `x = a/b`, `b > 0`.
    pub fn sign_at(&self, x: &Rat) -> i8 {
        let (a, b) = (x.numer(), x.denom());
        let mut iter = self.coeffs.iter().rev();
        let Some(lead) = iter.next() else {
            return 0;
        };
        let mut acc = lead.clone();
        let mut bpow = BigInt::one();
        for c in iter {
            bpow *= b;
            acc = acc * a + c * &bpow;
        }
        sign_of(&acc)
    }

    /// Exact quotient `self / d` over the integers.
    pub fn divide_exact(&self, d: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem_integral(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    // Long division that fails as soon as a quotient coefficient would be
    // non-integral.
    fn div_rem_integral(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = d.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Pseudo-remainder scaled by a positive factor: the result is
    /// `|lc(d)|^k * self mod d` for some `k`, so signs match the true
    /// remainder.
    pub fn positive_pseudo_rem(&self, d: &IntPoly) -> Result<IntPoly> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = d.leading().expect("nonzero divisor");
        let abs_lead = lead.abs();
        let lead_sign = lead.signum();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.last().expect("non-empty").clone();
            let shift = r.len() - 1 - dd;
            let q = &lead_sign * &top;
            for c in r.iter_mut() {
                *c *= &abs_lead;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[shift + j] -= &q * dc;
            }
            // Leading term cancels by construction.
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Ok(IntPoly::new(r))
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Primitive gcd with a positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a
                .positive_pseudo_rem(&b)
                .expect("divisor is nonzero")
                .primitive_part();
            a = b;
            b = r;
        }
        a.normalize_sign()
    }

    fn normalize_sign(self) -> IntPoly {
        if self.leading().is_some_and(Signed::is_negative) {
            -self
        } else {
            self
        }
    }

    /// `p / gcd(p, p')` as a primitive polynomial with positive leading
    /// coefficient.
    pub fn square_free_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self
            .primitive_part()
            .divide_exact(&g)
            .expect("gcd divides its argument")
            .normalize_sign())
    }

    /// Square-free decomposition (Yun): returns `[f_1, f_2, ...]` with
    /// `p = content * prod f_i^i` up to sign, each `f_i` square-free,
    /// primitive and pairwise coprime.
    pub fn square_free_factors(&self) -> Result<Vec<IntPoly>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.primitive_part();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.divide_exact(&a0).expect("gcd divides f");
        let c = df.divide_exact(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let next_b = b.divide_exact(&a).expect("gcd divides b");
            let c = d.divide_exact(&a).expect("gcd divides d");
            d = &c - &next_b.derivative();
            out.push(a);
            b = next_b;
        }
        Ok(out)
    }

    /// Largest `m` such that `(den*x - num)^m` divides `p`, for `r = num/den`.
    pub fn root_multiplicity(&self, r: &Rat) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let factor = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        let mut p = self.clone();
        let mut m = 0;
        while let Ok(q) = p.divide_exact(&factor) {
            p = q;
            m += 1;
        }
        Ok(m)
    }

    /// Cauchy bound `1 + max|a_i| / |a_n|`: every real root lies strictly
    /// inside `(-B, B)`.
    pub fn cauchy_bound(&self) -> Result<Rat> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?.abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default();
        Ok(Rat::one() + Rat::new(max, lead))
    }

    /// Coefficients as decimal strings, ascending degree.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<IntPoly> {
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {:?}", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntPoly::new)
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// `x(x-1)...(x-k+1)`.
pub fn falling_factorial(k: usize) -> IntPoly {
    (0..k as i64).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::x_minus(i))
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |a, b| &a * &b)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

// JSON: array of decimal coefficient strings, ascending degree.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        IntPoly::from_strings(&items).map_err(serde::de::Error::custom)
    }
}
