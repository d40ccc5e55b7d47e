// Reading and writing graph6 and edge-list text.

use chromroot::families::{build_family, FamilySpec};
use chromroot::graph::{from_edge_list_text, from_graph6, to_edge_list_text, to_graph6};

pub fn run_example() -> chromroot::Result<()> {
    let g = build_family(&FamilySpec::y(3, 3));
    let g6 = to_graph6(&g);
    println!("Y(3,3) as graph6: {g6}");
    assert_eq!(from_graph6(&g6)?, g);

    let text = to_edge_list_text(&g);
    println!("as an edge list:\n{text}");
    assert_eq!(from_edge_list_text(&text)?, g);

    let petersen = from_graph6("IheA@GUAo")?;
    println!(
        "Petersen graph: n={} m={}",
        petersen.n(),
        petersen.edge_count()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> chromroot::Result<()> {
    run_example()
}
