// Sign of P(G,x) on (-inf,0), (0,1) and (1,32/27], and the multiplicities
// of the roots 0 and 1, for a few graphs.

use chromroot::analysis::verify_sign_theorem;
use chromroot::chromatic::ChromaticEngine;
use chromroot::families::{build_family, FamilySpec};
use chromroot::Graph;

pub fn run_example() -> chromroot::Result<()> {
    let engine = ChromaticEngine::new();
    let two_triangles = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])?;
    let graphs = [
        ("C5", Graph::cycle(5)),
        (
            "K3,3 + K1",
            Graph::complete_bipartite(3, 3).disjoint_union(&Graph::empty(1)),
        ),
        ("bowtie", two_triangles),
        ("X(3,5)", build_family(&FamilySpec::x(3, 5))),
    ];
    for (name, g) in &graphs {
        let r = verify_sign_theorem(g, &engine)?;
        println!(
            "{name}: n={} c={} b={} {}",
            r.n,
            r.components,
            r.blocks,
            if r.passed() { "ok" } else { "FAILED" }
        );
        for c in &r.intervals {
            println!(
                "  {:<10} sign {:>2} at {:<5} expected (-1)^{} roots {}",
                c.interval, c.observed_sign, c.sample_point, c.exponent, c.roots_in_interval
            );
        }
        for m in &r.multiplicities {
            println!(
                "  mult at {}: {} (expected {})",
                m.point, m.observed, m.expected
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chromroot::Result<()> {
    run_example()
}
