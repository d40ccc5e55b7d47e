// Deletion-contraction against colouring-count interpolation on a seeded
// random corpus, and the closed form against both.

use std::time::Instant;

use chromroot::chromatic::{chromatic_polynomial_by_interpolation, ChromaticEngine};
use chromroot::families::{build_family, family_chromatic_polynomial, FamilySpec};
use chromroot::graph::random::seeded_corpus;
use chromroot::Budget;

pub fn run_example() -> chromroot::Result<()> {
    let engine = ChromaticEngine::new();
    let corpus = seeded_corpus(2024, 200, 8);
    let start = Instant::now();
    let mut agree = 0;
    for g in &corpus {
        let a = engine.chromatic_polynomial(g)?;
        let b = chromatic_polynomial_by_interpolation(g, &Budget::unlimited())?;
        agree += usize::from(a == b);
    }
    println!(
        "{agree}/{} corpus graphs agree ({:.2?}, {} cached subgraphs)",
        corpus.len(),
        start.elapsed(),
        engine.cache_len()
    );
    for spec in [
        FamilySpec::x(2, 3),
        FamilySpec::y(4, 4),
        FamilySpec::complete_bipartite(3, 5),
    ] {
        let closed = family_chromatic_polynomial(&spec)?;
        let dc = engine.chromatic_polynomial(&build_family(&spec))?;
        println!(
            "{spec}: closed form {} deletion-contraction",
            if closed == dc { "==" } else { "!=" }
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chromroot::Result<()> {
    run_example()
}
