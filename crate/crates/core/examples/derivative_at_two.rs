// P'(2) of the closed form for X(s,t), next to 2((-1)^s + (-1)^t + (-1)^(s+t)),
// and the hub types that contribute to it.

use chromroot::families::{
    derivative_at_two, derivative_contributing_types, FamilyKind, FamilySpec,
};

pub fn run_example() -> chromroot::Result<()> {
    print!("s\\t");
    for t in 2..=8 {
        print!("{t:>4}");
    }
    println!();
    for s in 2..=8 {
        print!("{s:>3}");
        for t in 2..=8 {
            let d = derivative_at_two(&FamilySpec::x(s, t))?;
            print!("{:>4}", d.symbolic);
        }
        println!();
    }
    println!("types contributing at x = 2:");
    for ty in derivative_contributing_types(FamilyKind::X) {
        println!("  {ty}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chromroot::Result<()> {
    run_example()
}
