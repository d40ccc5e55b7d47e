// Proper colouring types of the five hub vertices and the closed-form term
// each contributes.

use chromroot::families::{
    enumerate_hub_types, family_chromatic_polynomial, FamilyKind, FamilySpec,
};
use chromroot::IntPoly;

pub fn run_example() -> chromroot::Result<()> {
    for kind in [FamilyKind::X, FamilyKind::Y] {
        let types = enumerate_hub_types(kind);
        println!("{kind:?}: {} types", types.len());
        for ty in &types {
            println!("  {ty}");
        }
        let (s, t) = (3, 3);
        let sum: IntPoly = types.iter().map(|ty| ty.term(s, t)).sum();
        let spec = FamilySpec::new(kind, s, t)?;
        assert_eq!(sum, family_chromatic_polynomial(&spec)?);
        println!("  sum of terms for {spec}: {sum}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> chromroot::Result<()> {
    run_example()
}
