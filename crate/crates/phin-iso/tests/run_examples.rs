mod isomorphism {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/isomorphism.rs"));
}

mod commutant {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/commutant.rs"));
}

#[test]
fn isomorphism_example_runs() {
    isomorphism::run_example().expect("isomorphism example should run");
}

#[test]
fn commutant_example_runs() {
    commutant::run_example().expect("commutant example should run");
}
