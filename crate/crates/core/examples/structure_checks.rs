// Connectivity, bipartiteness, hamiltonicity, independent toughness
// witnesses and back-neighbour orderings for a few graphs.

use chromroot::families::{build_family, FamilySpec};
use chromroot::graph::{
    components_after_removal, dong_koh_ordering, hamiltonian_cycle_exists,
    independent_toughness_witness, is_bipartite, vertex_connectivity, Bipartition,
};
use chromroot::{Budget, Graph};

pub fn run_example() -> chromroot::Result<()> {
    let graphs = [
        ("X(3,3)", build_family(&FamilySpec::x(3, 3))),
        ("Y(3,5)", build_family(&FamilySpec::y(3, 5))),
        ("K3,4", Graph::complete_bipartite(3, 4)),
        ("C7", Graph::cycle(7)),
    ];
    let budget = Budget::unlimited();
    for (name, g) in &graphs {
        println!("{name}: n={} m={}", g.n(), g.edge_count());
        println!("  vertex connectivity {}", vertex_connectivity(g));
        match is_bipartite(g) {
            Bipartition::Bipartite(_) => println!("  bipartite"),
            Bipartition::OddCycle(c) => println!("  odd cycle {c:?}"),
        }
        println!("  hamiltonian {}", hamiltonian_cycle_exists(g, &budget)?);
        match independent_toughness_witness(g, 4) {
            Some(s) => println!(
                "  independent S = {s:?} leaves {} components",
                components_after_removal(g, &s)
            ),
            None => println!("  no independent S with c(G-S) > |S|"),
        }
        match dong_koh_ordering(g, &budget)? {
            Some(order) => println!("  back-neighbour ordering {order:?}"),
            None => println!("  no back-neighbour ordering"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chromroot::Result<()> {
    run_example()
}
