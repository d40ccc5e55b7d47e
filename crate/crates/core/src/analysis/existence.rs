use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{derivative_at_two, family_chromatic_polynomial, FamilyKind, FamilySpec};
use crate::poly::{rat, Bounds, IntPoly, Rat, SturmChain};

/// Step to the right of 1 at which the sign is sampled.
pub fn right_of_one() -> Rat {
    rat(1025, 1024)
}

/// The facts behind the existence of a root in `(1, 2)`, each checked
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExistenceTrace {
    pub family: String,
    pub multiplicity_at_one: usize,
    pub derivative_at_two: String,
    pub value_at_two: String,
    /// Roots in `(1, 1025/1024)`; must be zero for the sign sample to
    /// speak for the whole gap.
    pub roots_right_of_one: usize,
    pub sign_right_of_one: i8,
    pub roots_in_open_unit_interval: usize,
}

fn fail(spec: &FamilySpec, step: &str, detail: String) -> Error {
    Error::Verification(format!("{spec}: {step}: {detail}"))
}

/// Replays the continuity argument for odd `s, t >= 3`: the root at 1 is
/// simple, `P` is negative just right of 1, `P(2) = 0` with `P'(2) < 0` so
/// `P` is positive just left of 2, and a Sturm count confirms a root in
/// `(1, 2)`.
pub fn verify_root_existence_argument(spec: &FamilySpec) -> Result<ExistenceTrace> {
    if spec.kind == FamilyKind::CompleteBipartite {
        return Err(Error::Unsupported(
            "existence argument applies to X and Y".into(),
        ));
    }
    if spec.s < 3 || spec.t < 3 || spec.s.is_multiple_of(2) || spec.t.is_multiple_of(2) {
        return Err(Error::Unsupported(format!(
            "existence argument needs odd s, t >= 3, got {spec}"
        )));
    }
    let p = family_chromatic_polynomial(spec)?;
    replay(spec, &p)
}

fn replay(spec: &FamilySpec, p: &IntPoly) -> Result<ExistenceTrace> {
    let one = rat(1, 1);
    let two = rat(2, 1);

    let multiplicity_at_one = p.root_multiplicity(&one)?;
    if multiplicity_at_one != 1 {
        return Err(fail(
            spec,
            "simple root at 1",
            format!("multiplicity is {multiplicity_at_one}"),
        ));
    }

    let value_at_two = p.eval_int(&BigInt::from(2));
    if value_at_two != BigInt::from(0) {
        return Err(fail(spec, "root at 2", format!("P(2) = {value_at_two}")));
    }
    let deriv = derivative_at_two(spec)?.symbolic;
    if !deriv.is_negative() {
        return Err(fail(
            spec,
            "decreasing through 2",
            format!("P'(2) = {deriv}"),
        ));
    }

    let chain = SturmChain::new(p)?;
    let step = right_of_one();
    let roots_right_of_one = chain.count(&one, &step, Bounds::Open)?;
    let sign_right_of_one = p.sign_at(&step);
    if roots_right_of_one != 0 || sign_right_of_one >= 0 {
        return Err(fail(
            spec,
            "negative just right of 1",
            format!("{roots_right_of_one} roots in (1, 1025/1024), sign {sign_right_of_one}"),
        ));
    }

    let roots = chain.count(&one, &two, Bounds::Open)?;
    if roots == 0 {
        return Err(fail(spec, "root in (1,2)", "Sturm count is zero".into()));
    }
    Ok(ExistenceTrace {
        family: spec.to_string(),
        multiplicity_at_one,
        derivative_at_two: deriv.to_string(),
        value_at_two: value_at_two.to_string(),
        roots_right_of_one,
        sign_right_of_one,
        roots_in_open_unit_interval: roots,
    })
}
