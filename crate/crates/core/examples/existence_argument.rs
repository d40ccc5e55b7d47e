// Replays the continuity argument giving a root in (1,2) for odd s,t >= 3,
// and shows where it stops applying.

use chromroot::analysis::verify_root_existence_argument;
use chromroot::families::FamilySpec;

pub fn run_example() -> chromroot::Result<()> {
    for spec in [
        FamilySpec::x(3, 3),
        FamilySpec::y(5, 9),
        FamilySpec::x(4, 5),
    ] {
        match verify_root_existence_argument(&spec) {
            Ok(t) => println!(
                "{spec}: simple root at 1, P(2) = {}, P'(2) = {}, sign {} just right of 1, {} root(s) in (1,2)",
                t.value_at_two, t.derivative_at_two, t.sign_right_of_one, t.roots_in_open_unit_interval
            ),
            Err(e) => println!("{spec}: {e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chromroot::Result<()> {
    run_example()
}
