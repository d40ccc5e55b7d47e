use serde::Serialize;

use crate::chromatic::ChromaticEngine;
use crate::error::Result;
use crate::graph::{blocks, connected_components, Graph};
use crate::poly::{format_rat, rat, Bounds, IntPoly, Rat, SturmChain};

/// One sign claim: no roots on an interval, and the sign at a sample point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignCheck {
    pub interval: String,
    /// Exponent `e` of the expected sign `(-1)^e`.
    pub exponent: usize,
    pub sample_point: String,
    pub observed_sign: i8,
    pub roots_in_interval: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityCheck {
    pub point: u32,
    pub expected: usize,
    pub observed: usize,
    pub pass: bool,
}

/// Sign structure of `P(G, x)` for `x <= 32/27`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignReport {
    pub n: usize,
    pub components: usize,
    pub blocks: usize,
    /// On `(-inf, 0)`, `(0, 1)` and `(1, 32/27]`, in that order.
    pub intervals: Vec<SignCheck>,
    /// At 0 and at 1.
    pub multiplicities: Vec<MultiplicityCheck>,
}

impl SignReport {
    pub fn passed(&self) -> bool {
        self.intervals.iter().all(|c| c.pass) && self.multiplicities.iter().all(|c| c.pass)
    }
}

/// Upper end of the universal root-free interval above 1.
pub fn root_free_limit() -> Rat {
    rat(32, 27)
}

/// Computes `P(G, x)` with `engine` and checks its sign structure.
pub fn verify_sign_theorem(g: &Graph, engine: &ChromaticEngine) -> Result<SignReport> {
    let p = engine.chromatic_polynomial(g)?;
    verify_sign_theorem_for(g, &p)
}

/// Checks the sign structure of a chromatic polynomial `p` of `g` obtained
/// elsewhere (for instance from a closed form).
pub fn verify_sign_theorem_for(g: &Graph, p: &IntPoly) -> Result<SignReport> {
    let n = g.n();
    let c = connected_components(g).len();
    let b = blocks(g).count();
    let chain = SturmChain::new(p)?;
    let bound = p.cauchy_bound()?;
    let zero = Rat::from_integer(0.into());
    let one = Rat::from_integer(1.into());

    let check = |interval: &str, lo: &Rat, hi: &Rat, bounds, sample: Rat, exponent: usize| {
        let roots = chain.count(lo, hi, bounds)?;
        let observed = p.sign_at(&sample);
        let expected = if exponent.is_multiple_of(2) { 1 } else { -1 };
        Ok::<_, crate::error::Error>(SignCheck {
            interval: interval.to_string(),
            exponent,
            sample_point: format_rat(&sample),
            observed_sign: observed,
            roots_in_interval: roots,
            pass: roots == 0 && observed == expected,
        })
    };

    let limit = root_free_limit();
    let intervals = vec![
        check("(-inf,0)", &-bound, &zero, Bounds::Open, rat(-1, 1), n)?,
        check("(0,1)", &zero, &one, Bounds::Open, rat(1, 2), n + c)?,
        check(
            "(1,32/27]",
            &one,
            &limit,
            Bounds::OpenClosed,
            limit.clone(),
            n + c + b,
        )?,
    ];
    let at0 = p.root_multiplicity(&zero)?;
    let at1 = p.root_multiplicity(&one)?;
    let multiplicities = vec![
        MultiplicityCheck {
            point: 0,
            expected: c,
            observed: at0,
            pass: at0 == c,
        },
        MultiplicityCheck {
            point: 1,
            expected: b,
            observed: at1,
            pass: at1 == b,
        },
    ];
    Ok(SignReport {
        n,
        components: c,
        blocks: b,
        intervals,
        multiplicities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_passes() {
        let r = verify_sign_theorem(&Graph::complete(4), &ChromaticEngine::new()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!((r.n, r.components, r.blocks), (4, 1, 1));
    }

    #[test]
    fn detects_wrong_polynomial() {
        // x(x-1)(x-1.1)-like impostor: 10x^3 - 21x^2 + 11x has a root at 1.1.
        let g = Graph::path(3);
        let fake = IntPoly::from_i64s(&[0, 11, -21, 10]);
        let r = verify_sign_theorem_for(&g, &fake).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn isolated_vertices_and_forests() {
        let g = Graph::from_edge_list(5, [(0, 1), (1, 2)]).unwrap();
        let r = verify_sign_theorem(&g, &ChromaticEngine::new()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!((r.components, r.blocks), (3, 2));
    }
}
