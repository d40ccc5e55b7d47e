// Smallest chromatic root in (1,2) for X(s,t) and Y(s,t), odd 3 <= s <= t.
//
//     cargo run --example root_tables -- Y 13

use chromroot::analysis::{odd_sizes, reproduce_table};
use chromroot::families::FamilyKind;

pub fn run_example() -> chromroot::Result<()> {
    print_tables(&[FamilyKind::X, FamilyKind::Y], 11)
}

fn print_tables(kinds: &[FamilyKind], max: usize) -> chromroot::Result<()> {
    let sizes = odd_sizes(max);
    for &kind in kinds {
        let table = reproduce_table(kind, &sizes, &sizes, 4)?;
        println!("{kind:?}");
        print!("{}", table.to_csv());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chromroot::Result<()> {
    let mut args = std::env::args().skip(1);
    let kinds = match args.next().as_deref() {
        Some("X" | "x") => vec![FamilyKind::X],
        Some("Y" | "y") => vec![FamilyKind::Y],
        _ => vec![FamilyKind::X, FamilyKind::Y],
    };
    let max = args.next().and_then(|a| a.parse().ok()).unwrap_or(11);
    print_tables(&kinds, max)
}
