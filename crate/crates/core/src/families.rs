//! The hub graphs `X(s,t)`, `Y(s,t)` and complete bipartite graphs.
//!
//! `X(s,t)` has five hub vertices `v0..v4` with hub edges `v1v2` and `v3v4`,
//! an independent set `S` of size `s` joined to `{v0, v1, v3}` and an
//! independent set `T` of size `t` joined to `{v0, v2, v4}`. `Y(s,t)` adds
//! the edge `v1v4`.
//!
//! Colouring the hub first, each `S` vertex avoids the `dS` distinct colours
//! on `{v0, v1, v3}` and each `T` vertex the `dT` colours on `{v0, v2, v4}`,
//! so a hub partition with `k` blocks contributes
//! `x(x-1)...(x-k+1) (x-dS)^s (x-dT)^t`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::chromatic::ChromaticEngine;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{falling_factorial, IntPoly};

/// Hub vertices joined to every vertex of `S`.
pub const S_ATTACH: [usize; 3] = [0, 1, 3];
/// Hub vertices joined to every vertex of `T`.
pub const T_ATTACH: [usize; 3] = [0, 2, 4];
pub const HUB_SIZE: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    X,
    Y,
    CompleteBipartite,
}

impl FamilyKind {
    /// Edges among the hub vertices.
    pub fn hub_edges(self) -> &'static [(usize, usize)] {
        match self {
            FamilyKind::X => &[(1, 2), (3, 4)],
            FamilyKind::Y => &[(1, 2), (3, 4), (1, 4)],
            FamilyKind::CompleteBipartite => &[],
        }
    }

    fn has_hub(self) -> bool {
        !matches!(self, FamilyKind::CompleteBipartite)
    }
}

/// A member of one of the families, written `X:s,t`, `Y:s,t` or `Kb:s,t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub s: usize,
    pub t: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, s: usize, t: usize) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(Error::Parse(format!(
                "family sizes must be at least 1, got s={s}, t={t}"
            )));
        }
        Ok(FamilySpec { kind, s, t })
    }

    pub fn x(s: usize, t: usize) -> Self {
        FamilySpec::new(FamilyKind::X, s, t).expect("positive sizes")
    }

    pub fn y(s: usize, t: usize) -> Self {
        FamilySpec::new(FamilyKind::Y, s, t).expect("positive sizes")
    }

    pub fn complete_bipartite(s: usize, t: usize) -> Self {
        FamilySpec::new(FamilyKind::CompleteBipartite, s, t).expect("positive sizes")
    }

    pub fn vertex_count(&self) -> usize {
        match self.kind {
            FamilyKind::CompleteBipartite => self.s + self.t,
            _ => HUB_SIZE + self.s + self.t,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            FamilyKind::X => "X",
            FamilyKind::Y => "Y",
            FamilyKind::CompleteBipartite => "Kb",
        };
        write!(f, "{tag}:{},{}", self.s, self.t)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad family spec {text:?}; expected e.g. X:3,5"));
        let (tag, sizes) = text.trim().split_once(':').ok_or_else(bad)?;
        let kind = match tag {
            "X" => FamilyKind::X,
            "Y" => FamilyKind::Y,
            "Kb" => FamilyKind::CompleteBipartite,
            _ => return Err(bad()),
        };
        let (s, t) = sizes.split_once(',').ok_or_else(bad)?;
        let s = s.trim().parse().map_err(|_| bad())?;
        let t = t.trim().parse().map_err(|_| bad())?;
        FamilySpec::new(kind, s, t)
    }
}

/// Builds the graph. Hub vertices are `0..5`, `S = 5..5+s`,
/// `T = 5+s..5+s+t`; complete bipartite graphs put the `s` side first.
pub fn build_family(spec: &FamilySpec) -> Graph {
    let (s, t) = (spec.s, spec.t);
    if !spec.kind.has_hub() {
        return Graph::complete_bipartite(s, t);
    }
    let mut edges: Vec<(usize, usize)> = spec.kind.hub_edges().to_vec();
    for sv in HUB_SIZE..HUB_SIZE + s {
        edges.extend(S_ATTACH.iter().map(|&h| (h, sv)));
    }
    for tv in HUB_SIZE + s..HUB_SIZE + s + t {
        edges.extend(T_ATTACH.iter().map(|&h| (h, tv)));
    }
    Graph::from_edge_list(spec.vertex_count(), edges).expect("family edges are valid")
}

/// A proper partition of the hub vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HubType {
    /// Block index of each hub vertex as a restricted growth string: vertex
    /// 0 is in block 0 and each new block gets the next index.
    pub blocks: [u8; HUB_SIZE],
    /// Number of blocks.
    pub k: usize,
    /// Distinct blocks meeting `{v0, v1, v3}`.
    pub d_s: usize,
    /// Distinct blocks meeting `{v0, v2, v4}`.
    pub d_t: usize,
}

impl HubType {
    fn from_blocks(blocks: [u8; HUB_SIZE]) -> Self {
        let k = *blocks.iter().max().expect("five vertices") as usize + 1;
        HubType {
            blocks,
            k,
            d_s: distinct(S_ATTACH.map(|v| blocks[v])),
            d_t: distinct(T_ATTACH.map(|v| blocks[v])),
        }
    }

    /// This type's term `x^(k) (x - dS)^s (x - dT)^t`.
    pub fn term(&self, s: usize, t: usize) -> IntPoly {
        let a = IntPoly::x_minus(self.d_s as i64).pow(s as u32);
        let b = IntPoly::x_minus(self.d_t as i64).pow(t as u32);
        &(&falling_factorial(self.k) * &a) * &b
    }

    /// Blocks as lists of hub vertex indices.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        (0..self.k as u8)
            .map(|b| (0..HUB_SIZE).filter(|&v| self.blocks[v] == b).collect())
            .collect()
    }
}

impl fmt::Display for HubType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .partition()
            .iter()
            .map(|b| {
                let names: Vec<String> = b.iter().map(|v| format!("v{v}")).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        write!(
            f,
            "{} k={} dS={} dT={}",
            parts.join(""),
            self.k,
            self.d_s,
            self.d_t
        )
    }
}

fn distinct<const N: usize>(mut xs: [u8; N]) -> usize {
    xs.sort_unstable();
    1 + xs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// All proper hub partitions, ordered by block count and then by their
/// restricted growth strings.
pub fn enumerate_hub_types(kind: FamilyKind) -> Vec<HubType> {
    let edges = kind.hub_edges();
    let mut out = Vec::new();
    let mut rgs = [0u8; HUB_SIZE];

    fn grow(i: usize, max: u8, rgs: &mut [u8; HUB_SIZE], out: &mut Vec<[u8; HUB_SIZE]>) {
        if i == HUB_SIZE {
            out.push(*rgs);
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            grow(i + 1, max.max(b), rgs, out);
        }
    }

    let mut all = Vec::new();
    grow(1, 0, &mut rgs, &mut all);
    for blocks in all {
        if edges.iter().all(|&(u, v)| blocks[u] != blocks[v]) {
            out.push(HubType::from_blocks(blocks));
        }
    }
    out.sort_by(|a, b| a.k.cmp(&b.k).then(a.blocks.cmp(&b.blocks)));
    out
}

/// Chromatic polynomial in closed form: the sum of hub-type terms for `X`
/// and `Y`; complete bipartite graphs go through the deletion-contraction
/// engine.
pub fn family_chromatic_polynomial(spec: &FamilySpec) -> Result<IntPoly> {
    if !spec.kind.has_hub() {
        return ChromaticEngine::new().chromatic_polynomial(&build_family(spec));
    }
    Ok(enumerate_hub_types(spec.kind)
        .par_iter()
        .map(|ty| ty.term(spec.s, spec.t))
        .reduce(IntPoly::zero, |a, b| &a + &b))
}

/// `P(X(s,t), k)` by summing over all `k^5` hub colourings directly.
pub fn family_eval_bruteforce(spec: &FamilySpec, k: usize) -> Result<BigInt> {
    if !spec.kind.has_hub() {
        return Err(Error::Unsupported(
            "brute-force hub evaluation needs an X or Y family".into(),
        ));
    }
    let edges = spec.kind.hub_edges();
    let mut total = BigInt::zero();
    let mut colour = [0usize; HUB_SIZE];
    let combos = k.pow(HUB_SIZE as u32);
    for code in 0..combos {
        let mut c = code;
        for slot in colour.iter_mut() {
            *slot = c % k;
            c /= k;
        }
        if edges.iter().any(|&(u, v)| colour[u] == colour[v]) {
            continue;
        }
        let d_s = count_distinct(S_ATTACH.map(|v| colour[v]));
        let d_t = count_distinct(T_ATTACH.map(|v| colour[v]));
        total += num_traits::pow(BigInt::from(k - d_s), spec.s)
            * num_traits::pow(BigInt::from(k - d_t), spec.t);
    }
    Ok(total)
}

fn count_distinct(xs: [usize; 3]) -> usize {
    1 + (xs[1] != xs[0]) as usize + (xs[2] != xs[0] && xs[2] != xs[1]) as usize
}

/// Both routes to `P'(2)` for an `X` or `Y` family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeAtTwo {
    /// Derivative of the expanded closed form, evaluated at 2.
    pub symbolic: BigInt,
    /// `2((-1)^s + (-1)^t + (-1)^(s+t))`.
    pub formula: BigInt,
}

pub fn derivative_formula(s: usize, t: usize) -> BigInt {
    let sign = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
    BigInt::from(2 * (sign(s) + sign(t) + sign(s + t)))
}

/// Evaluates `P'(2)` symbolically and checks it against the parity formula.
/// Requires `s, t >= 2`.
pub fn derivative_at_two(spec: &FamilySpec) -> Result<DerivativeAtTwo> {
    if !spec.kind.has_hub() {
        return Err(Error::Unsupported(
            "P'(2) formula applies to X and Y".into(),
        ));
    }
    if spec.s < 2 || spec.t < 2 {
        return Err(Error::Unsupported(format!(
            "P'(2) formula needs s, t >= 2, got {spec}"
        )));
    }
    let p = family_chromatic_polynomial(spec)?;
    let symbolic = p.derivative().eval_int(&BigInt::from(2));
    let formula = derivative_formula(spec.s, spec.t);
    if symbolic != formula {
        return Err(Error::Internal(format!(
            "{spec}: P'(2) = {symbolic} but the formula gives {formula}"
        )));
    }
    Ok(DerivativeAtTwo { symbolic, formula })
}

/// Hub types whose terms survive differentiation at `x = 2` for `s, t > 1`:
/// those using one or three colours on each attachment triple.
pub fn derivative_contributing_types(kind: FamilyKind) -> Vec<HubType> {
    enumerate_hub_types(kind)
        .into_iter()
        .filter(|ty| ty.d_s != 2 && ty.d_t != 2)
        .collect()
}
