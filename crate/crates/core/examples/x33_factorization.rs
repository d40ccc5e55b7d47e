// Chromatic polynomial of X(3,3) by deletion-contraction, its factor
// x(x-1)(x-2), and the real roots of the remaining octic.

use chromroot::chromatic::ChromaticEngine;
use chromroot::families::{build_family, FamilySpec};
use chromroot::poly::{falling_factorial, rat, RootIsolator};

pub fn run_example() -> chromroot::Result<()> {
    let spec = FamilySpec::x(3, 3);
    let g = build_family(&spec);
    let p = ChromaticEngine::new().chromatic_polynomial(&g)?;
    println!("{spec}: n = {}, m = {}", g.n(), g.edge_count());
    println!("P(x) = {p}");

    let q = p.divide_exact(&falling_factorial(3))?;
    println!("P(x) / x(x-1)(x-2) = {q}");

    let iso = RootIsolator::new(&q)?;
    for root in iso.isolate(&rat(0, 1), &rat(4, 1))? {
        let r = iso.refine(&root, 8);
        println!("root {} in [{}, {}]", r.decimal.unwrap(), r.lo, r.hi);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chromroot::Result<()> {
    run_example()
}
