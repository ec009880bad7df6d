mod intertwiners {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/intertwiners.rs"));
}

#[test]
fn intertwiners_example_runs() {
    intertwiners::run_example().expect("intertwiners example should run");
}
