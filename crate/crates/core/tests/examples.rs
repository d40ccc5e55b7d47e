mod catalog_scan {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/catalog_scan.rs"
    ));
}

mod derivative_at_two {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/derivative_at_two.rs"
    ));
}

mod exact_roots {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/exact_roots.rs"
    ));
}

mod existence_argument {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/existence_argument.rs"
    ));
}

mod graph_formats {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/graph_formats.rs"
    ));
}

mod hub_types {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/hub_types.rs"
    ));
}

mod oracle_equivalence {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/oracle_equivalence.rs"
    ));
}

mod root_tables {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/root_tables.rs"
    ));
}

mod sign_structure {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/sign_structure.rs"
    ));
}

mod structure_checks {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/structure_checks.rs"
    ));
}

mod x33_factorization {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/x33_factorization.rs"
    ));
}

#[test]
fn catalog_scan_runs() {
    catalog_scan::run_example().expect("catalog_scan example should run");
}

#[test]
fn derivative_at_two_runs() {
    derivative_at_two::run_example().expect("derivative_at_two example should run");
}

#[test]
fn exact_roots_runs() {
    exact_roots::run_example().expect("exact_roots example should run");
}

#[test]
fn existence_argument_runs() {
    existence_argument::run_example().expect("existence_argument example should run");
}

#[test]
fn graph_formats_runs() {
    graph_formats::run_example().expect("graph_formats example should run");
}

#[test]
fn hub_types_runs() {
    hub_types::run_example().expect("hub_types example should run");
}

#[test]
fn oracle_equivalence_runs() {
    oracle_equivalence::run_example().expect("oracle_equivalence example should run");
}

#[test]
fn root_tables_runs() {
    root_tables::run_example().expect("root_tables example should run");
}

#[test]
fn sign_structure_runs() {
    sign_structure::run_example().expect("sign_structure example should run");
}

#[test]
fn structure_checks_runs() {
    structure_checks::run_example().expect("structure_checks example should run");
}

#[test]
fn x33_factorization_runs() {
    x33_factorization::run_example().expect("x33_factorization example should run");
}
