// Exact real root isolation and correctly rounded refinement for an
// arbitrary integer polynomial.
//
//     cargo run --example exact_roots -- 1 0 -7 7 12

use chromroot::poly::{rat, sturm_count, Bounds, IntPoly, RootIsolator};

pub fn run_example() -> chromroot::Result<()> {
    // (x - 1)^2 (x^2 - 2) (3x - 1)
    let p = &(&IntPoly::x_minus(1).pow(2) * &IntPoly::from_i64s(&[-2, 0, 1]))
        * &IntPoly::from_i64s(&[-1, 3]);
    describe(&p)
}

fn describe(p: &IntPoly) -> chromroot::Result<()> {
    println!("p(x) = {p}");
    let bound = p.cauchy_bound()?;
    println!("all real roots lie in (-{bound}, {bound})");
    println!(
        "distinct roots in (0, 1]: {}",
        sturm_count(p, &rat(0, 1), &rat(1, 1), Bounds::OpenClosed)?
    );
    let iso = RootIsolator::new(p)?;
    for r in iso.isolate(&-bound.clone(), &bound)? {
        let fine = iso.refine(&r, 15);
        println!(
            "{:>20}  multiplicity {}",
            fine.decimal.unwrap(),
            fine.multiplicity
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chromroot::Result<()> {
    // Coefficients from the highest degree down.
    let mut c = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<Vec<i64>, _>>()
        .map_err(|e| chromroot::Error::Parse(e.to_string()))?;
    if c.is_empty() {
        return run_example();
    }
    c.reverse();
    describe(&IntPoly::from_i64s(&c))
}
